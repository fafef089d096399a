#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "csppke/analysis/stats.hpp"
#include "csppke/params.hpp"
#include "csppke/pke/scheme.hpp"

namespace csppke {

struct CorrectnessReport {
  std::size_t keys = 0;
  std::size_t trials = 0;
  std::size_t correct = 0;
  std::size_t bit0_correct = 0;
  std::size_t bit0_trials = 0;
  std::size_t bit1_correct = 0;
  std::size_t bit1_trials = 0;
  double rate = 0;
  Interval interval;
  std::vector<double> z_stars;  ///< one per key
  std::size_t keygen_attempts = 0;
};

/// Pr[Dec(Enc(b)) = b] with b uniform per trial. Trials are spread round
/// robin over `keys` independent (G, pk, sk) triples; an abort counts as
/// a failure.
CorrectnessReport measure_correctness(const SchemeParams& p, const GenParams& gen, std::size_t keys,
                                      std::size_t trials, Rng& rng, const KeygenOptions& options = {});

std::string format_report(const CorrectnessReport& r);

}  // namespace csppke
