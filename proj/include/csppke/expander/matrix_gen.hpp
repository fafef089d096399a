#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "csppke/f2/sparse_matrix.hpp"
#include "csppke/params.hpp"
#include "csppke/rm/anf.hpp"
#include "csppke/rm/rm_code.hpp"

namespace csppke {

class Rng;

/// Generator matrix G = [M^(1) | ... | M^(k) | 0] built from k*w random
/// low-degree selector polynomials. Row p of block i has its single nonzero
/// at column q = g^(i,1)(p) || ... || g^(i,w)(p), read with g^(i,1) as the
/// most significant bit, offset by i * 2^w.
struct GeneratedMatrix {
  SparseRowMatrix G;
  GenParams gen;
  std::vector<Anf> selectors;  ///< selector (i, j) at index i * w + j, both 0-based

  std::uint32_t column_degree_bound() const { return gen.column_degree_bound(); }
  const Anf& selector(std::uint32_t block, std::uint32_t bit) const {
    return selectors.at(static_cast<std::size_t>(block) * gen.window_bits + bit);
  }
};

/// Each coefficient of the C(d, <= degree) monomials independently uniform.
/// Throws std::invalid_argument if degree > d.
Anf sample_low_degree_poly(std::uint32_t d, std::uint32_t degree, Rng& rng);

/// Samples the selectors and assembles G. Throws std::invalid_argument when
/// `gen` fails validation.
GeneratedMatrix generate(const GenParams& gen, Rng& rng);

/// Rebuilds G from the selectors; used by generate and by file loading.
SparseRowMatrix assemble(const GenParams& gen, const std::vector<Anf>& selectors);

/// True iff every column of G lies in `code`. Throws std::invalid_argument
/// if code.variables() != gen.d or code.degree() < the column degree bound.
bool verify_rm_subcode(const GeneratedMatrix& gm, const RmCode& code);

/// SRM block, then "GEN d n k w poly_degree", then one line per selector:
/// "g i j <count> <mask>..." with monomials as decimal variable bitmasks.
void write_generated(std::ostream& out, const GeneratedMatrix& gm);
/// Reads the format above and checks that the stored matrix matches the
/// selectors.
GeneratedMatrix read_generated(LineReader& in);

}  // namespace csppke
