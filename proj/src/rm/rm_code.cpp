#include "csppke/rm/rm_code.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

namespace csppke {

RmCode::RmCode(std::uint32_t d, std::uint32_t r) : d_(d), r_(r), monomials_(monomials_up_to(d, r)) {}

std::size_t RmCode::decoding_radius() const {
  if (r_ + 1 >= d_) return 0;
  return (std::size_t{1} << (d_ - r_ - 1)) - 1;
}

void RmCode::check_length(const BitVec& v, const char* op) const {
  if (v.size() != block_length()) {
    throw std::invalid_argument(std::string("RmCode::") + op + ": length " + std::to_string(v.size()) +
                                ", expected " + std::to_string(block_length()));
  }
}

BitVec RmCode::evaluation_column(std::size_t j) const {
  const Monomial m = monomials_.at(j);
  BitVec out(block_length());
  for (std::size_t p = 0; p < block_length(); ++p) {
    if ((p & m) == m) out.set(p, true);
  }
  return out;
}

BitVec RmCode::encode(const BitVec& coeffs) const {
  if (coeffs.size() != dimension()) {
    throw std::invalid_argument("RmCode::encode: " + std::to_string(coeffs.size()) +
                                " coefficients, expected " + std::to_string(dimension()));
  }
  std::vector<std::uint8_t> cells(block_length(), 0);
  for (std::size_t j = 0; j < dimension(); ++j) cells[monomials_[j]] = coeffs.get(j);
  moebius_transform(cells);
  BitVec out(block_length());
  for (std::size_t p = 0; p < cells.size(); ++p) {
    if (cells[p]) out.set(p, true);
  }
  return out;
}

bool RmCode::is_member_anf(const BitVec& v) const {
  check_length(v, "is_member_anf");
  const auto deg = anf_degree(v);
  return deg.is_zero || deg.degree <= r_;
}

bool RmCode::is_member_dual(const BitVec& v) const {
  check_length(v, "is_member_dual");
  if (r_ >= d_) return true;  // the dual is the zero code
  const std::uint32_t dual_degree = d_ - r_ - 1;
  const std::uint32_t limit = std::uint32_t{1} << d_;
  BitVec generator(block_length());
  for (std::uint32_t m = 0; m < limit; ++m) {
    if (static_cast<std::uint32_t>(std::popcount(m)) > dual_degree) continue;
    for (auto& w : generator.mutable_words()) w = 0;
    for (std::uint32_t p = 0; p < limit; ++p) {
      if ((p & m) == m) generator.set(p, true);
    }
    if (v.and_weight(generator) & 1U) return false;
  }
  return true;
}

bool RmCode::is_member(const BitVec& v) const {
  const bool anf = is_member_anf(v);
  const bool dual = is_member_dual(v);
  if (anf != dual) throw std::logic_error("RmCode::is_member: ANF and dual routes disagree");
  return anf;
}

BitVec RmCode::decode_majority(const BitVec& received) const {
  check_length(received, "decode_majority");
  const std::size_t length = block_length();
  const std::uint32_t full = static_cast<std::uint32_t>(length - 1);
  std::vector<std::uint8_t> y(length);
  for (std::size_t p = 0; p < length; ++p) y[p] = received.get(p);

  BitVec coeffs(dimension());
  std::vector<std::uint8_t> peel(length);
  // Monomials are sorted by degree, so each degree is a contiguous range.
  std::size_t end = dimension();
  for (int deg = static_cast<int>(std::min(r_, d_)); deg >= 0; --deg) {
    std::size_t begin = end;
    while (begin > 0 && std::popcount(monomials_[begin - 1]) == deg) --begin;
    std::fill(peel.begin(), peel.end(), 0);
    bool any = false;
    for (std::size_t j = begin; j < end; ++j) {
      const Monomial m = monomials_[j];
      const std::uint32_t rest = full ^ m;
      // Vote over the 2^{d-deg} cosets: the XOR of y over a coset of the
      // subcube spanned by m equals the coefficient of m when no error hits it.
      std::size_t ones = 0;
      std::size_t votes = 0;
      std::uint32_t b = 0;
      do {
        std::uint8_t sum = 0;
        std::uint32_t u = 0;
        do {
          sum ^= y[b | u];
          u = (u - m) & m;
        } while (u != 0);
        ones += sum;
        ++votes;
        b = (b - rest) & rest;
      } while (b != 0);
      if (2 * ones > votes) {
        coeffs.set(j, true);
        peel[m] = 1;
        any = true;
      }
    }
    if (any) {
      moebius_transform(peel);
      for (std::size_t p = 0; p < length; ++p) y[p] ^= peel[p];
    }
    end = begin;
  }
  return coeffs;
}

}  // namespace csppke
