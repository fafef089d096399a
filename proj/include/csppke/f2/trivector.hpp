#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "csppke/f2/bitvec.hpp"

namespace csppke {

enum class Tri : std::uint8_t { zero = 0, one = 1, erased = 2 };

/// Vector over {0, 1, ?}.
class TriVector {
 public:
  TriVector() = default;
  explicit TriVector(std::size_t length, Tri fill = Tri::erased) : symbols_(length, fill) {}
  /// Copies `v` with no erasures.
  static TriVector from_bits(const BitVec& v);
  /// Parses '0', '1', '?' characters.
  static TriVector from_string(std::string_view text);

  std::size_t size() const { return symbols_.size(); }
  Tri get(std::size_t i) const { return symbols_[i]; }
  void set(std::size_t i, Tri t) { symbols_[i] = t; }
  void set_bit(std::size_t i, bool b) { symbols_[i] = b ? Tri::one : Tri::zero; }
  bool is_erased(std::size_t i) const { return symbols_[i] == Tri::erased; }

  std::size_t erased_count() const;
  /// Disagreements with `v` over the non-erased coordinates.
  std::size_t disagreements(const BitVec& v) const;

  std::string to_string() const;

  bool operator==(const TriVector&) const = default;

 private:
  std::vector<Tri> symbols_;
};

}  // namespace csppke
