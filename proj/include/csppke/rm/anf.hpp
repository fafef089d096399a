#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "csppke/f2/bitvec.hpp"

namespace csppke {

/// Points of F_2^d are indexed by integers p in [0, 2^d), variable x_{i+1}
/// being bit i of p. A monomial is the bitmask of the variables it contains;
/// mask 0 is the constant 1.
using Monomial = std::uint32_t;

inline constexpr std::uint32_t kMaxVariables = 24;

/// Canonical monomial order: by degree, then lexicographically by the
/// ascending list of variable indices.
bool monomial_less(Monomial a, Monomial b);

/// All monomials over d variables of degree <= r, in canonical order.
std::vector<Monomial> monomials_up_to(std::uint32_t d, std::uint32_t r);

/// In-place Möbius transform over the subset lattice on uint8 cells. It is
/// an involution: it maps ANF coefficients to the truth table and back.
void moebius_transform(std::span<std::uint8_t> cells);

/// Multilinear polynomial over F_2 in algebraic normal form.
class Anf {
 public:
  Anf() = default;
  /// Monomials are deduplicated pairwise (x + x = 0) and stored in canonical order.
  Anf(std::uint32_t d, std::vector<Monomial> monomials);

  static Anf from_truth_table(const BitVec& table);

  std::uint32_t variables() const { return d_; }
  const std::vector<Monomial>& monomials() const { return monomials_; }
  bool is_zero() const { return monomials_.empty(); }
  /// Largest monomial size; 0 for the zero and constant polynomials.
  std::uint32_t degree() const;

  bool evaluate(std::uint32_t point) const;
  BitVec truth_table() const;

  bool operator==(const Anf&) const = default;

 private:
  std::uint32_t d_ = 0;
  std::vector<Monomial> monomials_;
};

struct AnfDegree {
  std::uint32_t degree = 0;
  bool is_zero = false;
};

/// Degree of the unique multilinear polynomial with this truth table.
/// Throws std::invalid_argument unless the length is a power of two.
AnfDegree anf_degree(const BitVec& truth_table);

/// log2 of a power-of-two length; throws std::invalid_argument otherwise.
std::uint32_t log2_length(std::size_t length);

}  // namespace csppke
