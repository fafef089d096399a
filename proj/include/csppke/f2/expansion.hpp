#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "csppke/f2/sparse_matrix.hpp"

namespace csppke {

class Rng;

/// Nonnegative rational num/den, used for the expansion factor so that the
/// inequality hw >= gamma * k * |S| is decided exactly.
struct Rational {
  std::uint64_t num = 0;
  std::uint64_t den = 1;

  /// Parses "3/4", "0.75" or "1".
  static Rational parse(std::string_view text);
  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  std::string to_string() const;
};

struct ExpansionVerdict {
  enum class Status {
    pass,          ///< exhaustive: the inequality holds for every |S| <= t
    fail,          ///< `counterexample` violates the inequality
    inconclusive,  ///< sampled mode found no violation; this certifies nothing
  };
  Status status = Status::pass;
  std::vector<std::size_t> counterexample;  ///< sorted row indices
  std::uint64_t subsets_checked = 0;
};

struct ExpansionMode {
  static ExpansionMode exhaustive(std::uint64_t budget = 50'000'000) { return {false, 0, budget}; }
  static ExpansionMode sampled(std::uint64_t trials_per_size) { return {true, trials_per_size, 0}; }

  bool sampled_mode = false;
  std::uint64_t trials_per_size = 0;
  std::uint64_t budget = 0;  ///< max subsets enumerated in exhaustive mode
};

/// Number of nonempty row subsets of size <= t, saturated at 2^64 - 1.
std::uint64_t subsets_up_to(std::uint64_t m, std::uint64_t t);

/// True iff hw(OR of rows in S) >= gamma * k * |S|.
bool expands(const SparseRowMatrix& M, Rational gamma, std::span<const std::size_t> rows);

/// Checks (gamma, t)-expansion: every S with 1 <= |S| <= t has
/// hw(OR_{i in S} M_i) >= gamma * k * |S|. Exhaustive mode throws
/// BudgetExceeded when subsets_up_to(m, t) exceeds the budget; sampled mode
/// needs an rng and can only report fail or inconclusive.
ExpansionVerdict check_expansion(const SparseRowMatrix& M, Rational gamma, std::size_t t,
                                 ExpansionMode mode, Rng* rng = nullptr);

}  // namespace csppke
