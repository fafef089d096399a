#include "csppke/analysis/correctness.hpp"

#include <sstream>

#include "csppke/expander/matrix_gen.hpp"
#include "csppke/parallel.hpp"
#include "csppke/textio.hpp"

namespace csppke {

CorrectnessReport measure_correctness(const SchemeParams& p, const GenParams& gen, std::size_t keys,
                                      std::size_t trials, Rng& rng, const KeygenOptions& options) {
  if (keys == 0 || trials == 0) throw std::invalid_argument("measure_correctness: keys and trials must be positive");
  CorrectnessReport out;
  out.keys = keys;
  out.trials = trials;
  for (std::size_t key = 0; key < keys; ++key) {
    const Rng key_root = rng.derive(key);
    Rng matrix_stream = key_root.derive(0);
    Rng key_stream = key_root.derive(1);
    const GeneratedMatrix gm = generate(gen, matrix_stream);
    const KeyPair kp = keygen(p, gm, key_stream, options);
    out.z_stars.push_back(kp.sk.z_star);
    out.keygen_attempts += kp.witness.attempts;

    std::vector<std::size_t> mine;
    for (std::size_t t = key; t < trials; t += keys) mine.push_back(t);
    std::vector<std::uint8_t> bits(mine.size());
    std::vector<std::uint8_t> ok(mine.size());
    parallel_for(mine.size(), [&](std::size_t j) {
      Rng r = key_root.derive(2).derive(mine[j]);
      const int bit = r.bit() ? 1 : 0;
      Rng enc = r.derive(0);
      Rng dec = r.derive(1);
      const auto got = decrypt(kp.sk, encrypt(kp.pk, bit, enc), dec);
      bits[j] = static_cast<std::uint8_t>(bit);
      ok[j] = got.has_value() && *got == bit;
    });
    for (std::size_t j = 0; j < mine.size(); ++j) {
      out.correct += ok[j];
      if (bits[j]) {
        ++out.bit1_trials;
        out.bit1_correct += ok[j];
      } else {
        ++out.bit0_trials;
        out.bit0_correct += ok[j];
      }
    }
  }
  rng();
  out.rate = static_cast<double>(out.correct) / static_cast<double>(trials);
  out.interval = wilson_interval(out.correct, trials);
  return out;
}

std::string format_report(const CorrectnessReport& r) {
  std::ostringstream out;
  out << "keys=" << r.keys << " trials=" << r.trials << " correct=" << r.correct
      << " rate=" << format_double(r.rate) << " ci_low=" << format_double(r.interval.low)
      << " ci_high=" << format_double(r.interval.high) << " bit0=" << r.bit0_correct << '/' << r.bit0_trials
      << " bit1=" << r.bit1_correct << '/' << r.bit1_trials << " keygen_attempts=" << r.keygen_attempts;
  return out.str();
}

}  // namespace csppke
