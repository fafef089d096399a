#include "csppke/f2/expansion.hpp"

#include <limits>
#include <numeric>
#include <stdexcept>

#include "csppke/rng.hpp"
#include "csppke/textio.hpp"

namespace csppke {

Rational Rational::parse(std::string_view text) {
  Rational r;
  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    r.num = parse_u64(text.substr(0, slash));
    r.den = parse_u64(text.substr(slash + 1));
    if (r.den == 0) throw std::invalid_argument("rational: zero denominator");
  } else if (const auto dot = text.find('.'); dot != std::string_view::npos) {
    const auto whole = text.substr(0, dot);
    const auto frac = text.substr(dot + 1);
    if (frac.size() > 18) throw std::invalid_argument("rational: too many decimal digits");
    r.den = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) r.den *= 10;
    r.num = (whole.empty() ? 0 : parse_u64(whole)) * r.den + (frac.empty() ? 0 : parse_u64(frac));
  } else {
    r.num = parse_u64(text);
  }
  const auto g = std::gcd(r.num, r.den);
  if (g > 1) {
    r.num /= g;
    r.den /= g;
  }
  return r;
}

std::string Rational::to_string() const {
  return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
}

std::uint64_t subsets_up_to(std::uint64_t m, std::uint64_t t) {
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  unsigned __int128 binom = 1;
  unsigned __int128 total = 0;
  for (std::uint64_t s = 1; s <= t && s <= m; ++s) {
    binom = binom * (m - s + 1) / s;
    total += binom;
    if (total > kMax) return kMax;
  }
  return static_cast<std::uint64_t>(total);
}

namespace {

bool inequality_holds(std::size_t weight, Rational gamma, std::size_t k, std::size_t size) {
  const auto lhs = static_cast<unsigned __int128>(weight) * gamma.den;
  const auto rhs = static_cast<unsigned __int128>(gamma.num) * k * size;
  return lhs >= rhs;
}

// Depth-first enumeration of all subsets of size <= t in increasing row
// order; column multiplicities give the OR weight incrementally.
class ExhaustiveSearch {
 public:
  ExhaustiveSearch(const SparseRowMatrix& M, Rational gamma, std::size_t t)
      : M_(M), gamma_(gamma), t_(t), counts_(M.cols(), 0) {}

  bool run(ExpansionVerdict& verdict) {
    for (std::size_t first = 0; first < M_.rows(); ++first) {
      if (!descend(first, verdict)) return false;
    }
    return true;
  }

 private:
  bool descend(std::size_t row, ExpansionVerdict& verdict) {
    add(row);
    chosen_.push_back(row);
    ++verdict.subsets_checked;
    bool ok = inequality_holds(weight_, gamma_, M_.row_weight(), chosen_.size());
    if (!ok) {
      verdict.counterexample = chosen_;
    } else if (chosen_.size() < t_) {
      for (std::size_t next = row + 1; next < M_.rows() && ok; ++next) ok = descend(next, verdict);
    }
    if (ok) {
      chosen_.pop_back();
      remove(row);
    }
    return ok;
  }

  void add(std::size_t row) {
    for (const auto c : M_.row(row)) weight_ += (counts_[c]++ == 0);
  }
  void remove(std::size_t row) {
    for (const auto c : M_.row(row)) weight_ -= (--counts_[c] == 0);
  }

  const SparseRowMatrix& M_;
  Rational gamma_;
  std::size_t t_;
  std::vector<std::uint32_t> counts_;
  std::size_t weight_ = 0;
  std::vector<std::size_t> chosen_;
};

}  // namespace

bool expands(const SparseRowMatrix& M, Rational gamma, std::span<const std::size_t> rows) {
  return inequality_holds(row_or(M, rows).weight(), gamma, M.row_weight(), rows.size());
}

ExpansionVerdict check_expansion(const SparseRowMatrix& M, Rational gamma, std::size_t t,
                                 ExpansionMode mode, Rng* rng) {
  if (t < 1 || t > M.rows()) {
    throw std::invalid_argument("check_expansion: need 1 <= t <= m, got t = " + std::to_string(t));
  }
  ExpansionVerdict verdict;
  if (!mode.sampled_mode) {
    const auto work = subsets_up_to(M.rows(), t);
    if (work > mode.budget) {
      throw BudgetExceeded("check_expansion: " + std::to_string(work) + " subsets exceed budget " +
                           std::to_string(mode.budget));
    }
    ExhaustiveSearch search(M, gamma, t);
    verdict.status = search.run(verdict) ? ExpansionVerdict::Status::pass : ExpansionVerdict::Status::fail;
    return verdict;
  }
  if (rng == nullptr) throw std::invalid_argument("check_expansion: sampled mode needs an rng");
  for (std::size_t size = 1; size <= t; ++size) {
    for (std::uint64_t trial = 0; trial < mode.trials_per_size; ++trial) {
      const auto subset = random_k_subset(M.rows(), size, *rng);
      std::vector<std::size_t> rows(subset.begin(), subset.end());
      ++verdict.subsets_checked;
      if (!expands(M, gamma, rows)) {
        verdict.status = ExpansionVerdict::Status::fail;
        verdict.counterexample = std::move(rows);
        return verdict;
      }
    }
  }
  verdict.status = ExpansionVerdict::Status::inconclusive;
  return verdict;
}

}  // namespace csppke
