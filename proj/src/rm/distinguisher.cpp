#include "csppke/rm/distinguisher.hpp"

#include <algorithm>
#include <numeric>

#include "csppke/f2/channel.hpp"
#include "csppke/parallel.hpp"
#include "csppke/rng.hpp"

namespace csppke {

std::size_t decode_disagreements(const RmCode& code, const TriVector& w, Rng& rng, ErasureFill fill) {
  if (w.size() != code.block_length()) {
    throw std::invalid_argument("decode_disagreements: length " + std::to_string(w.size()) +
                                ", expected " + std::to_string(code.block_length()));
  }
  BitVec filled(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) {
    switch (w.get(i)) {
      case Tri::one: filled.set(i, true); break;
      case Tri::zero: break;
      case Tri::erased:
        if (fill == ErasureFill::random) filled.set(i, rng.bit());
        break;
    }
  }
  const BitVec decoded = code.encode(code.decode_majority(filled));
  return w.disagreements(decoded);
}

int distinguish(const RmCode& code, const TriVector& w, double z_star, Rng& rng, ErasureFill fill) {
  return static_cast<double>(decode_disagreements(code, w, rng, fill)) < z_star ? 0 : 1;
}

namespace {
double mean(const std::vector<std::size_t>& xs) {
  return static_cast<double>(std::accumulate(xs.begin(), xs.end(), std::size_t{0})) /
         static_cast<double>(xs.size());
}
}  // namespace

Calibration calibrate_threshold(const RmCode& code, double alpha, double beta, std::size_t trials,
                                Rng& rng) {
  if (trials < 2) throw std::invalid_argument("calibrate_threshold: need at least 2 trials");
  Calibration out;
  out.noisy_counts.resize(trials);
  out.random_counts.resize(trials);
  const Rng noisy_root = rng.derive(0);
  const Rng random_root = rng.derive(1);
  parallel_for(trials, [&](std::size_t t) {
    Rng noisy = noisy_root.derive(t);
    const BitVec codeword = code.encode(BitVec::random(code.dimension(), noisy));
    const TriVector received = apply_erasure_corruption(codeword, alpha, beta, noisy);
    out.noisy_counts[t] = decode_disagreements(code, received, noisy);

    Rng random = random_root.derive(t);
    const TriVector r = random_erased_vector(code.block_length(), alpha, random);
    out.random_counts[t] = decode_disagreements(code, r, random);
  });
  // Advance the caller's stream so consecutive calibrations differ.
  rng();
  out.mean_noisy = mean(out.noisy_counts);
  out.mean_random = mean(out.random_counts);
  out.z_star = (out.mean_noisy + out.mean_random) / 2;

  const auto [noisy_lo, noisy_hi] = std::minmax_element(out.noisy_counts.begin(), out.noisy_counts.end());
  const auto [random_lo, random_hi] = std::minmax_element(out.random_counts.begin(), out.random_counts.end());
  const bool random_inside = *random_lo >= *noisy_lo && *random_hi <= *noisy_hi;
  const bool noisy_inside = *noisy_lo >= *random_lo && *noisy_hi <= *random_hi;
  if (out.mean_noisy >= out.mean_random || random_inside || noisy_inside) {
    throw CalibrationFailure("calibrate_threshold: distributions overlap (noisy [" +
                                 std::to_string(*noisy_lo) + ", " + std::to_string(*noisy_hi) +
                                 "], random [" + std::to_string(*random_lo) + ", " +
                                 std::to_string(*random_hi) + "])",
                             out);
  }
  return out;
}

}  // namespace csppke
