#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "csppke/parallel.hpp"
#include "csppke/rng.hpp"

namespace csppke {

struct Interval {
  double low = 0;
  double high = 0;
  double half_width() const { return (high - low) / 2; }
};

/// Wilson score interval for successes out of n at normal quantile z.
Interval wilson_interval(std::size_t successes, std::size_t n, double z = 1.959963984540054);

struct AdvantageReport {
  std::size_t trials = 0;  ///< per arm
  double planted_rate = 0;
  double null_rate = 0;
  double signed_difference = 0;  ///< planted_rate - null_rate
  double advantage = 0;          ///< |signed_difference|
  double planted_half_width = 0;
  double null_half_width = 0;
};

/// One "key=value" pair per field, space-separated, on one line.
std::string format_report(const AdvantageReport& r);

/// Acceptance rate of `accept` (returning 1 for "planted") on both arms.
/// Trial t of both arms draws from the same stream rng.derive(t), so
/// swapping the samplers negates the signed difference exactly.
/// `sample_null` and `sample_planted` map Rng& to an instance; `accept`
/// maps (instance, Rng&) to 0 or 1. All three must be safe to call
/// concurrently.
template <typename NullSampler, typename PlantedSampler, typename Distinguisher>
AdvantageReport estimate_advantage(NullSampler&& sample_null, PlantedSampler&& sample_planted,
                                   Distinguisher&& accept, std::size_t trials, Rng& rng) {
  if (trials < 30) throw std::invalid_argument("estimate_advantage: need at least 30 trials per arm");
  std::vector<std::uint8_t> planted_hits(trials, 0);
  std::vector<std::uint8_t> null_hits(trials, 0);
  const Rng root = rng;
  parallel_for(trials, [&](std::size_t t) {
    {
      Rng r = root.derive(t);
      const auto inst = sample_planted(r);
      planted_hits[t] = accept(inst, r) == 1;
    }
    {
      Rng r = root.derive(t);
      const auto inst = sample_null(r);
      null_hits[t] = accept(inst, r) == 1;
    }
  });
  rng();
  std::size_t planted = 0;
  std::size_t null = 0;
  for (std::size_t t = 0; t < trials; ++t) {
    planted += planted_hits[t];
    null += null_hits[t];
  }
  AdvantageReport out;
  out.trials = trials;
  out.planted_rate = static_cast<double>(planted) / static_cast<double>(trials);
  out.null_rate = static_cast<double>(null) / static_cast<double>(trials);
  out.signed_difference = out.planted_rate - out.null_rate;
  out.advantage = out.signed_difference < 0 ? -out.signed_difference : out.signed_difference;
  out.planted_half_width = wilson_interval(planted, trials).half_width();
  out.null_half_width = wilson_interval(null, trials).half_width();
  return out;
}

}  // namespace csppke
