#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "csppke/textio.hpp"

namespace csppke {

/// Parameters of the encryption scheme and of both CSP samplers.
///
/// Desk-scale runs set every field directly. Strict mode additionally
/// enforces the exact asymptotic relations wherever they are integer-valued
/// (see `validate`).
struct SchemeParams {
  std::uint32_t n = 0;           ///< secret length, also the width of G
  std::uint32_t m = 0;           ///< constraint count, also the height of G
  std::uint32_t k = 0;           ///< locality: nonzeros per row
  std::uint32_t sigma_size = 0;  ///< |Σ|; also the width of the public matrix
  std::uint64_t gamma_size = 0;  ///< |Γ|
  double alpha = 0;              ///< LARP corruption rate (erasure rate at decryption)
  double beta = 0;               ///< kXOR corruption rate
  std::uint64_t m_prime = 0;     ///< public-key height
  std::uint64_t seed = 0;

  bool operator==(const SchemeParams&) const = default;
};

/// Inputs of the generator-matrix sampler.
struct GenParams {
  std::uint32_t d = 0;            ///< log2 of the code length; G has 2^d rows
  std::uint32_t n = 0;            ///< width of G
  std::uint32_t k = 0;            ///< number of blocks, one nonzero per block per row
  std::uint32_t window_bits = 0;  ///< w: each block has 2^w columns
  std::uint32_t poly_degree = 0;  ///< degree bound of the selector polynomials
  std::optional<double> c_k;      ///< asymptotic exponent, documentation only
  std::optional<double> c_m;

  std::uint64_t m() const { return std::uint64_t{1} << d; }
  std::uint32_t column_degree_bound() const { return window_bits * poly_degree; }

  bool operator==(const GenParams&) const = default;
};

struct Violation {
  enum class Severity { error, warning };
  Severity severity = Severity::error;
  std::string relation;  ///< human-readable statement naming both sides

  bool operator==(const Violation&) const = default;
};

/// Report-only validation. Desk mode reports the exponent relation on |Γ|
/// as a warning; strict mode reports it, and the exact public-key height,
/// as errors.
std::vector<Violation> validate(const SchemeParams& p, bool strict);
bool has_errors(const std::vector<Violation>& violations);

std::vector<Violation> validate(const GenParams& g);

/// Window and degree from the sampler's step-1 formulas, with d given
/// explicitly. Throws std::invalid_argument if n < 2k or k == 0.
GenParams derive_gen_params(std::uint32_t n, std::uint32_t d, std::uint32_t k);

/// ceil(|Σ|^{k/3}), computed exactly in integers where the power fits.
std::uint64_t strict_m_prime(std::uint32_t sigma_size, std::uint32_t k);

/// |Σ|^k saturated at 2^64 - 1.
std::uint64_t domain_size(std::uint32_t sigma_size, std::uint32_t k);

/// Dominant work term of a parameter set: max of the preimage enumeration
/// size |Σ|^k and the code length m. Reported, never stored.
double lambda_estimate(const SchemeParams& p);

/// The exponents (c_k = 7, c_m = 6) used for the asymptotic instantiation.
/// Instantiating them is infeasible at any n; kept so the shape can be shown.
struct AsymptoticShape {
  double k;       ///< (ceil log n)^{c_k}
  double log2_m;  ///< (ceil log n)^{c_m}
};
inline constexpr double kPresetCk = 7;
inline constexpr double kPresetCm = 6;
AsymptoticShape asymptotic_shape(std::uint32_t n, double c_k = kPresetCk, double c_m = kPresetCm);

/// Flat key=value block, one field per line, fixed field order.
void write_params(std::ostream& out, const SchemeParams& p);
/// Reads key=value lines until the next line without '='. Every field is required.
SchemeParams read_params(LineReader& in);

}  // namespace csppke
