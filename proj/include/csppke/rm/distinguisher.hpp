#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "csppke/f2/trivector.hpp"
#include "csppke/rm/rm_code.hpp"

namespace csppke {

class Rng;

enum class ErasureFill {
  random,  ///< fresh uniform bits; the normal mode
  zeros,   ///< deterministic fill, for regression tests only
};

/// Fills erasures, decodes, re-encodes and counts disagreements with `w`
/// on the coordinates that were not erased.
std::size_t decode_disagreements(const RmCode& code, const TriVector& w, Rng& rng,
                                 ErasureFill fill = ErasureFill::random);

/// 0 ("noisy codeword") iff decode_disagreements < z_star, else 1 ("random").
int distinguish(const RmCode& code, const TriVector& w, double z_star, Rng& rng,
                ErasureFill fill = ErasureFill::random);

struct Calibration {
  double z_star = 0;
  double mean_noisy = 0;
  double mean_random = 0;
  std::vector<std::size_t> noisy_counts;   ///< one per trial, random codeword through the channel
  std::vector<std::size_t> random_counts;  ///< one per trial, erased uniform vector
};

/// The two empirical distributions are not separated: one range contains
/// the other, or the noisy mean is not below the random mean.
class CalibrationFailure : public std::runtime_error {
 public:
  CalibrationFailure(const std::string& what, Calibration result)
      : std::runtime_error(what), result_(std::move(result)) {}
  const Calibration& result() const { return result_; }

 private:
  Calibration result_;
};

/// Estimates both disagreement distributions over `trials` draws each and
/// returns the midpoint of their means as the cutoff. Throws
/// std::invalid_argument if trials < 2 and CalibrationFailure when the
/// distributions are not separated.
Calibration calibrate_threshold(const RmCode& code, double alpha, double beta, std::size_t trials,
                                Rng& rng);

}  // namespace csppke
