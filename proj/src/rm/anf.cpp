#include "csppke/rm/anf.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

namespace csppke {

bool monomial_less(Monomial a, Monomial b) {
  const int da = std::popcount(a);
  const int db = std::popcount(b);
  if (da != db) return da < db;
  // Same size: the lowest variable in which the two lists first differ
  // decides, and it belongs to whichever list reaches it earlier.
  while (a != 0 && b != 0) {
    const Monomial la = a & (~a + 1);
    const Monomial lb = b & (~b + 1);
    if (la != lb) return la < lb;
    a ^= la;
    b ^= lb;
  }
  return false;
}

std::vector<Monomial> monomials_up_to(std::uint32_t d, std::uint32_t r) {
  if (d > kMaxVariables) throw std::invalid_argument("monomials_up_to: d > " + std::to_string(kMaxVariables));
  std::vector<Monomial> out;
  const std::uint32_t limit = std::uint32_t{1} << d;
  for (std::uint32_t mask = 0; mask < limit; ++mask) {
    if (static_cast<std::uint32_t>(std::popcount(mask)) <= r) out.push_back(mask);
  }
  std::sort(out.begin(), out.end(), monomial_less);
  return out;
}

void moebius_transform(std::span<std::uint8_t> cells) {
  const std::size_t size = cells.size();
  for (std::size_t bit = 1; bit < size; bit <<= 1) {
    for (std::size_t x = 0; x < size; ++x) {
      if (x & bit) cells[x] ^= cells[x ^ bit];
    }
  }
}

std::uint32_t log2_length(std::size_t length) {
  if (length == 0 || (length & (length - 1)) != 0) {
    throw std::invalid_argument("length " + std::to_string(length) + " is not a power of two");
  }
  return static_cast<std::uint32_t>(std::countr_zero(length));
}

Anf::Anf(std::uint32_t d, std::vector<Monomial> monomials) : d_(d) {
  if (d > kMaxVariables) throw std::invalid_argument("Anf: too many variables");
  for (const auto m : monomials) {
    if (d < 32 && (m >> d) != 0) throw std::invalid_argument("Anf: monomial uses variable beyond d");
  }
  std::sort(monomials.begin(), monomials.end());
  for (std::size_t i = 0; i < monomials.size();) {
    if (i + 1 < monomials.size() && monomials[i] == monomials[i + 1]) {
      i += 2;
    } else {
      monomials_.push_back(monomials[i]);
      ++i;
    }
  }
  std::sort(monomials_.begin(), monomials_.end(), monomial_less);
}

Anf Anf::from_truth_table(const BitVec& table) {
  const auto d = log2_length(table.size());
  std::vector<std::uint8_t> cells(table.size());
  for (std::size_t p = 0; p < table.size(); ++p) cells[p] = table.get(p);
  moebius_transform(cells);
  std::vector<Monomial> monomials;
  for (std::size_t mask = 0; mask < cells.size(); ++mask) {
    if (cells[mask]) monomials.push_back(static_cast<Monomial>(mask));
  }
  return Anf(d, std::move(monomials));
}

std::uint32_t Anf::degree() const {
  std::uint32_t deg = 0;
  for (const auto m : monomials_) deg = std::max(deg, static_cast<std::uint32_t>(std::popcount(m)));
  return deg;
}

bool Anf::evaluate(std::uint32_t point) const {
  bool value = false;
  for (const auto m : monomials_) value ^= ((point & m) == m);
  return value;
}

BitVec Anf::truth_table() const {
  std::vector<std::uint8_t> cells(std::size_t{1} << d_, 0);
  for (const auto m : monomials_) cells[m] ^= 1;
  moebius_transform(cells);
  BitVec out(cells.size());
  for (std::size_t p = 0; p < cells.size(); ++p) {
    if (cells[p]) out.set(p, true);
  }
  return out;
}

AnfDegree anf_degree(const BitVec& truth_table) {
  log2_length(truth_table.size());
  std::vector<std::uint8_t> cells(truth_table.size());
  for (std::size_t p = 0; p < truth_table.size(); ++p) cells[p] = truth_table.get(p);
  moebius_transform(cells);
  AnfDegree result{0, true};
  for (std::size_t mask = 0; mask < cells.size(); ++mask) {
    if (cells[mask]) {
      result.is_zero = false;
      result.degree = std::max(result.degree, static_cast<std::uint32_t>(std::popcount(mask)));
    }
  }
  return result;
}

}  // namespace csppke
