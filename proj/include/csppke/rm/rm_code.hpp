#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "csppke/f2/bitvec.hpp"
#include "csppke/rm/anf.hpp"

namespace csppke {

/// Reed-Muller code RM(d, r): evaluations over all 2^d points of the
/// polynomials of degree <= r. Coefficient vectors are indexed by the
/// canonical monomial order; codeword position p is point p.
class RmCode {
 public:
  /// Throws std::invalid_argument if d > kMaxVariables.
  RmCode(std::uint32_t d, std::uint32_t r);

  std::uint32_t variables() const { return d_; }
  std::uint32_t degree() const { return r_; }
  std::size_t block_length() const { return std::size_t{1} << d_; }
  std::size_t dimension() const { return monomials_.size(); }
  std::size_t min_distance() const { return std::size_t{1} << (d_ - std::min(r_, d_)); }
  /// Errors always corrected by majority-logic decoding: 2^{d-r-1} - 1.
  std::size_t decoding_radius() const;
  const std::vector<Monomial>& monomials() const { return monomials_; }

  /// Column of the evaluation matrix for monomial index `j`.
  BitVec evaluation_column(std::size_t j) const;

  /// Throws std::invalid_argument if coeffs.size() != dimension().
  BitVec encode(const BitVec& coeffs) const;

  /// Membership via ANF degree <= r.
  bool is_member_anf(const BitVec& v) const;
  /// Membership via orthogonality to every generator of RM(d, d - r - 1).
  bool is_member_dual(const BitVec& v) const;
  /// Evaluates both routes; throws std::logic_error if they disagree.
  bool is_member(const BitVec& v) const;

  /// Reed's majority-logic decoder, peeling degree r down to 0. Exact when
  /// fewer than 2^{d-r-1} positions are in error; otherwise still returns
  /// some coefficient vector. Ties in a vote resolve to 0.
  BitVec decode_majority(const BitVec& received) const;

  bool operator==(const RmCode& o) const { return d_ == o.d_ && r_ == o.r_; }

 private:
  void check_length(const BitVec& v, const char* op) const;

  std::uint32_t d_;
  std::uint32_t r_;
  std::vector<Monomial> monomials_;
};

}  // namespace csppke
