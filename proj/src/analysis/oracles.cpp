#include "csppke/analysis/oracles.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <stdexcept>
#include <string>

#include "csppke/rng.hpp"

namespace csppke {

namespace {

std::uint64_t checked_power(std::uint64_t base, std::uint64_t exponent, std::uint64_t budget, const char* who) {
  std::uint64_t total = 1;
  for (std::uint64_t j = 0; j < exponent; ++j) {
    if (total > budget / std::max<std::uint64_t>(base, 1)) {
      throw BudgetExceeded(std::string(who) + ": search space " + std::to_string(base) + "^" +
                           std::to_string(exponent) + " exceeds budget " + std::to_string(budget));
    }
    total *= base;
  }
  if (total > budget) throw BudgetExceeded(std::string(who) + ": search space exceeds budget");
  return total;
}

// Odometer over Σ^n with the first coordinate most significant.
bool advance(std::vector<Symbol>& s, std::uint32_t sigma_size) {
  for (std::size_t j = s.size(); j-- > 0;) {
    if (++s[j] < sigma_size) return true;
    s[j] = 0;
  }
  return false;
}

}  // namespace

std::size_t count_violations(const LarpInstance& inst, const std::vector<Symbol>& s) {
  std::size_t bad = 0;
  for (std::size_t i = 0; i < inst.H.rows(); ++i) {
    if (inst.F.eval(i, local_tuple(inst.H, i, s)) != inst.b[i]) ++bad;
  }
  return bad;
}

std::size_t count_violations(const KxorInstance& inst, const BitVec& s) {
  return matvec(inst.H, s).distance(inst.b);
}

std::optional<std::vector<Symbol>> brute_force_secret(const LarpInstance& inst, std::size_t tolerance,
                                                      std::uint64_t budget) {
  checked_power(inst.F.sigma_size(), inst.H.cols(), budget, "brute_force_secret");
  std::vector<Symbol> s(inst.H.cols(), 0);
  std::vector<Symbol> local(inst.H.row_weight());
  do {
    std::size_t bad = 0;
    for (std::size_t i = 0; i < inst.H.rows() && bad <= tolerance; ++i) {
      const auto row = inst.H.row(i);
      for (std::size_t j = 0; j < row.size(); ++j) local[j] = s[row[j]];
      if (inst.F.eval(i, local) != inst.b[i]) ++bad;
    }
    if (bad <= tolerance) return s;
  } while (advance(s, inst.F.sigma_size()));
  return std::nullopt;
}

std::optional<BitVec> brute_force_secret(const KxorInstance& inst, std::size_t tolerance, std::uint64_t budget) {
  const std::uint64_t total = checked_power(2, inst.H.cols(), budget, "brute_force_secret");
  BitVec s(inst.H.cols());
  for (std::uint64_t code = 0; code < total; ++code) {
    for (std::size_t j = 0; j < s.size(); ++j) s.set(j, (code >> j) & 1U);
    if (count_violations(inst, s) <= tolerance) return s;
  }
  return std::nullopt;
}

CodeDistance distance_to_code(const SparseRowMatrix& G, const TriVector& w, std::uint64_t budget) {
  if (w.size() != G.rows()) {
    throw std::invalid_argument("distance_to_code: word length " + std::to_string(w.size()) + ", expected " +
                                std::to_string(G.rows()));
  }
  const std::uint64_t total = checked_power(2, G.cols(), budget, "distance_to_code");
  BitVec care(w.size());
  BitVec value(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w.is_erased(i)) continue;
    care.set(i, true);
    value.set(i, w.get(i) == Tri::one);
  }
  const auto columns = G.columns();
  BitVec diff = value;  // Gx ^ value for the current Gray-code x
  BitVec x(G.cols());
  CodeDistance best{diff.and_weight(care), x};
  for (std::uint64_t step = 1; step < total; ++step) {
    const auto j = static_cast<std::size_t>(std::countr_zero(step));
    x.flip(j);
    diff ^= columns[j];
    const std::size_t d = diff.and_weight(care);
    if (d < best.distance) best = {d, x};
  }
  return best;
}

NormalizationMap NormalizationMap::for_gamma(std::uint64_t gamma_size) {
  if (gamma_size < 2) throw std::invalid_argument("NormalizationMap: |Γ| must be at least 2");
  NormalizationMap out;
  out.p = 1.0 / static_cast<double>(gamma_size);
  out.phi0 = -std::sqrt(out.p / (1 - out.p));
  out.phi1 = std::sqrt((1 - out.p) / out.p);
  return out;
}

bool HypergraphFamily::is_candidate(const Edge& e) const {
  if (e.coords.size() != H.row_weight() || e.symbols.size() != H.row_weight()) return false;
  for (const auto sym : e.symbols) {
    if (sym >= sigma_size) return false;
  }
  for (std::size_t i = 0; i < H.rows(); ++i) {
    const auto row = H.row(i);
    if (std::equal(row.begin(), row.end(), e.coords.begin(), e.coords.end())) return true;
  }
  return false;
}

std::vector<Edge> HypergraphFamily::candidates() const {
  std::vector<std::vector<std::uint32_t>> supports;
  for (std::size_t i = 0; i < H.rows(); ++i) supports.emplace_back(H.row(i).begin(), H.row(i).end());
  std::sort(supports.begin(), supports.end());
  supports.erase(std::unique(supports.begin(), supports.end()), supports.end());
  std::vector<Edge> out;
  for (const auto& coords : supports) {
    std::vector<Symbol> symbols(H.row_weight(), 0);
    do {
      out.push_back(Edge{coords, symbols});
    } while (advance(symbols, sigma_size));
  }
  return out;
}

namespace {

void check_monomial(const HypergraphFamily& family, const std::vector<Edge>& S) {
  for (std::size_t a = 0; a < S.size(); ++a) {
    if (!family.is_candidate(S[a])) throw std::invalid_argument("monomial contains a non-candidate edge");
    for (std::size_t b = a + 1; b < S.size(); ++b) {
      if (S[a] == S[b]) throw std::invalid_argument("monomial repeats an edge");
    }
  }
}

bool planted_by(const Edge& e, const std::vector<Symbol>& s) {
  for (std::size_t j = 0; j < e.coords.size(); ++j) {
    if (s[e.coords[j]] != e.symbols[j]) return false;
  }
  return true;
}

}  // namespace

double monomial_expectation_exact(const HypergraphFamily& family, const std::vector<Edge>& S, std::uint64_t budget) {
  check_monomial(family, S);
  if (S.empty()) return 1;
  const std::uint64_t total = checked_power(family.sigma_size, family.H.cols(), budget, "monomial_expectation");
  const auto phi = NormalizationMap::for_gamma(family.gamma_size);
  // Given s, planted edges contribute phi1 and the rest are independent
  // Bernoulli(p) noise with mean 0 after recoding.
  std::uint64_t all_planted = 0;
  std::vector<Symbol> s(family.H.cols(), 0);
  do {
    if (std::all_of(S.begin(), S.end(), [&](const Edge& e) { return planted_by(e, s); })) ++all_planted;
  } while (advance(s, family.sigma_size));
  return std::pow(phi.phi1, static_cast<double>(S.size())) * static_cast<double>(all_planted) /
         static_cast<double>(total);
}

Estimate monomial_expectation_monte_carlo(const HypergraphFamily& family, const std::vector<Edge>& S,
                                          std::size_t trials, Rng& rng) {
  check_monomial(family, S);
  if (trials < 2) throw std::invalid_argument("monomial_expectation_monte_carlo: need at least 2 trials");
  const auto phi = NormalizationMap::for_gamma(family.gamma_size);
  double sum = 0;
  double sum_sq = 0;
  for (std::size_t t = 0; t < trials; ++t) {
    Rng r = rng.derive(t);
    std::vector<Symbol> s(family.H.cols());
    for (auto& x : s) x = static_cast<Symbol>(r.below(family.sigma_size));
    double product = 1;
    for (const auto& e : S) product *= phi(planted_by(e, s) || r.bernoulli(phi.p));
    sum += product;
    sum_sq += product * product;
  }
  rng();
  const double n = static_cast<double>(trials);
  const double mean = sum / n;
  const double variance = std::max(0.0, (sum_sq - n * mean * mean) / (n - 1));
  return {mean, std::sqrt(variance / n)};
}

double monomial_expectation_closed_form(const HypergraphFamily& family, const std::vector<Edge>& S) {
  check_monomial(family, S);
  if (S.empty()) return 1;
  std::map<std::uint32_t, Symbol> forced;
  for (const auto& e : S) {
    for (std::size_t j = 0; j < e.coords.size(); ++j) {
      const auto [it, inserted] = forced.emplace(e.coords[j], e.symbols[j]);
      if (!inserted && it->second != e.symbols[j]) return 0;
    }
  }
  const auto phi = NormalizationMap::for_gamma(family.gamma_size);
  return std::pow(phi.phi1, static_cast<double>(S.size())) *
         std::pow(static_cast<double>(family.sigma_size), -static_cast<double>(forced.size()));
}

double squared_expectation_sum(const HypergraphFamily& family, std::uint64_t budget) {
  const auto edges = family.candidates();
  const std::uint64_t pairs = edges.size() * (edges.size() + 1) / 2;
  if (pairs > budget) throw BudgetExceeded("squared_expectation_sum: too many monomials");
  double total = 0;
  for (std::size_t a = 0; a < edges.size(); ++a) {
    const double single = monomial_expectation_closed_form(family, {edges[a]});
    total += single * single;
    for (std::size_t b = a + 1; b < edges.size(); ++b) {
      const double pair = monomial_expectation_closed_form(family, {edges[a], edges[b]});
      total += pair * pair;
    }
  }
  return total;
}

}  // namespace csppke
