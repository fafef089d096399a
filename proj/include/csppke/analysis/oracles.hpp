#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "csppke/csp/instances.hpp"
#include "csppke/f2/bitvec.hpp"
#include "csppke/f2/sparse_matrix.hpp"
#include "csppke/f2/trivector.hpp"

namespace csppke {

class Rng;

inline constexpr std::uint64_t kOracleBudget = std::uint64_t{1} << 24;

/// First s in lexicographic order (s_1 most significant) violating at most
/// `tolerance` constraints. Throws BudgetExceeded if |Σ|^n > budget.
std::optional<std::vector<Symbol>> brute_force_secret(const LarpInstance& inst, std::size_t tolerance,
                                                      std::uint64_t budget = kOracleBudget);
/// Same over F_2^n, with s read as an integer with bit j = s_j.
std::optional<BitVec> brute_force_secret(const KxorInstance& inst, std::size_t tolerance,
                                         std::uint64_t budget = kOracleBudget);

std::size_t count_violations(const LarpInstance& inst, const std::vector<Symbol>& s);
std::size_t count_violations(const KxorInstance& inst, const BitVec& s);

struct CodeDistance {
  std::size_t distance = 0;
  BitVec x;  ///< first minimizer in Gray-code order
};

/// min over x of the disagreements between Gx and w on non-erased
/// coordinates. Throws BudgetExceeded if 2^n > budget.
CodeDistance distance_to_code(const SparseRowMatrix& G, const TriVector& w, std::uint64_t budget = kOracleBudget);

/// Recoding of a Bernoulli(p) indicator to mean 0, variance 1.
struct NormalizationMap {
  double p = 0;
  double phi0 = 0;
  double phi1 = 0;

  static NormalizationMap for_gamma(std::uint64_t gamma_size);
  double operator()(bool y) const { return y ? phi1 : phi0; }
};

/// Planted-hypergraph family over the candidate edges of H: the null graph
/// keeps each candidate with probability 1/|Γ| and the planted graph adds
/// every edge consistent with a uniform s ∈ Σ^n.
struct HypergraphFamily {
  SparseRowMatrix H;
  std::uint32_t sigma_size = 0;
  std::uint64_t gamma_size = 0;

  bool is_candidate(const Edge& e) const;
  /// Every candidate edge, supports in sorted order, symbols lexicographic.
  std::vector<Edge> candidates() const;
};

/// E over planted draws of prod_{e in S} phi(Y_e). Enumerates Σ^n and
/// throws BudgetExceeded if |Σ|^n > budget. Throws std::invalid_argument if
/// S repeats an edge or contains a non-candidate.
double monomial_expectation_exact(const HypergraphFamily& family, const std::vector<Edge>& S,
                                  std::uint64_t budget = kOracleBudget);

struct Estimate {
  double mean = 0;
  double standard_error = 0;
};
Estimate monomial_expectation_monte_carlo(const HypergraphFamily& family, const std::vector<Edge>& S,
                                          std::size_t trials, Rng& rng);

/// Closed form of the exact expectation: phi1^|S| * |Σ|^{-c} when the edges
/// of S assign each of their c distinct coordinates a single symbol, else 0.
double monomial_expectation_closed_form(const HypergraphFamily& family, const std::vector<Edge>& S);

/// Sum of squared planted expectations over all monomials of degree 1..2 in
/// the candidate edges. Reported as a number; no threshold is applied.
double squared_expectation_sum(const HypergraphFamily& family, std::uint64_t budget = kOracleBudget);

}  // namespace csppke
