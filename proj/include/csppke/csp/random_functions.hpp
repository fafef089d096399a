#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace csppke {

using Symbol = std::uint32_t;

inline constexpr std::uint64_t kDefaultEnumerationBudget = std::uint64_t{1} << 28;

/// m random functions f_i : Σ^k → Γ. Nothing is materialized: f_i(x) is a
/// keyed hash of (seed, i, x), so the store is four integers.
///
/// Tuples are identified by their base-|Σ| code with the first coordinate
/// most significant, which makes code order the lexicographic tuple order.
class RandomFunctionStore {
 public:
  RandomFunctionStore() = default;
  /// Throws std::invalid_argument if k == 0, sigma_size < 1, gamma_size < 1
  /// or |Σ|^k does not fit in 63 bits.
  RandomFunctionStore(std::uint64_t m, std::uint32_t k, std::uint32_t sigma_size, std::uint64_t gamma_size,
                      std::uint64_t seed);

  std::uint64_t count() const { return m_; }
  std::uint32_t arity() const { return k_; }
  std::uint32_t sigma_size() const { return sigma_; }
  std::uint64_t gamma_size() const { return gamma_; }
  std::uint64_t seed() const { return seed_; }
  std::uint64_t domain_size() const { return domain_; }

  std::uint64_t eval(std::size_t i, std::span<const Symbol> tuple) const;
  std::uint64_t eval_code(std::size_t i, std::uint64_t code) const;

  std::uint64_t encode(std::span<const Symbol> tuple) const;
  std::vector<Symbol> decode(std::uint64_t code) const;
  /// True iff the tuple behind `code` has pairwise distinct symbols.
  bool distinct_symbols(std::uint64_t code) const;

  /// Per-function hash key; eval_code(i, x) == value(function_key(i), x).
  std::uint64_t function_key(std::size_t i) const;
  std::uint64_t value(std::uint64_t key, std::uint64_t code) const;

  bool operator==(const RandomFunctionStore&) const = default;

 private:
  std::uint64_t m_ = 0;
  std::uint32_t k_ = 0;
  std::uint32_t sigma_ = 0;
  std::uint64_t gamma_ = 0;
  std::uint64_t seed_ = 0;
  std::uint64_t domain_ = 0;
};

/// Codes of all x with f_i(x) = target, ascending. With `distinct_only`,
/// tuples that repeat a symbol are dropped. Throws BudgetExceeded if the
/// domain is larger than `budget`.
std::vector<std::uint64_t> enumerate_preimage_codes(const RandomFunctionStore& F, std::size_t i,
                                                    std::uint64_t target, bool distinct_only,
                                                    std::uint64_t budget = kDefaultEnumerationBudget);

std::vector<std::vector<Symbol>> enumerate_preimages(const RandomFunctionStore& F, std::size_t i,
                                                     std::uint64_t target, bool distinct_only,
                                                     std::uint64_t budget = kDefaultEnumerationBudget);

}  // namespace csppke
