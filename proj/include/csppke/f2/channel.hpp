#pragma once

#include "csppke/f2/bitvec.hpp"
#include "csppke/f2/trivector.hpp"

namespace csppke {

class Rng;

/// Independently per coordinate: erased with probability alpha, otherwise
/// replaced by a uniform bit with probability beta, otherwise kept.
/// Throws std::invalid_argument for rates outside [0, 1].
TriVector apply_erasure_corruption(const BitVec& v, double alpha, double beta, Rng& rng);

/// Each coordinate replaced by a uniform bit with probability beta.
BitVec apply_corruption(const BitVec& v, double beta, Rng& rng);

/// The null side of the erasure channel: erased with probability alpha,
/// otherwise a uniform bit.
TriVector random_erased_vector(std::size_t length, double alpha, Rng& rng);

}  // namespace csppke
