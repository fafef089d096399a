#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace csppke {

class Rng;

/// Bit-packed vector over F_2. Trailing pad bits of the last word are
/// always zero, so word-level equality and popcount are exact.
class BitVec {
 public:
  BitVec() = default;
  explicit BitVec(std::size_t length) : length_(length), words_((length + 63) / 64, 0) {}

  static BitVec random(std::size_t length, Rng& rng);
  /// Parses a string of '0'/'1' characters, index 0 first.
  static BitVec from_string(std::string_view bits);

  std::size_t size() const { return length_; }
  bool empty() const { return length_ == 0; }

  bool get(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1U; }
  void set(std::size_t i, bool value) {
    const std::uint64_t mask = std::uint64_t{1} << (i & 63);
    if (value) {
      words_[i >> 6] |= mask;
    } else {
      words_[i >> 6] &= ~mask;
    }
  }
  void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

  /// Hamming weight.
  std::size_t weight() const;
  /// Popcount of (this AND other); lengths must match.
  std::size_t and_weight(const BitVec& other) const;
  /// Hamming distance; lengths must match.
  std::size_t distance(const BitVec& other) const;

  BitVec& operator^=(const BitVec& other);
  BitVec& operator|=(const BitVec& other);
  friend BitVec operator^(BitVec a, const BitVec& b) { return a ^= b; }

  std::span<const std::uint64_t> words() const { return words_; }
  std::span<std::uint64_t> mutable_words() { return words_; }
  /// Zeroes bits at positions >= size() in the last word.
  void clear_padding();

  std::string to_string() const;

  bool operator==(const BitVec&) const = default;

 private:
  std::size_t length_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Text form used in every file format: "<length> <hex>". Hex digit j carries
/// bits 4j..4j+3 with bit 4j as its least significant bit, lowercase, no
/// separators; a zero-length vector writes an empty digit string.
std::string to_hex(const BitVec& v);
/// Inverse of to_hex; throws std::invalid_argument on malformed input or
/// nonzero bits beyond the stated length.
BitVec from_hex(std::string_view text);

}  // namespace csppke
