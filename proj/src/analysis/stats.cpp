#include "csppke/analysis/stats.hpp"

#include <cmath>
#include <sstream>

#include "csppke/textio.hpp"

namespace csppke {

Interval wilson_interval(std::size_t successes, std::size_t n, double z) {
  if (n == 0) throw std::invalid_argument("wilson_interval: no trials");
  if (successes > n) throw std::invalid_argument("wilson_interval: more successes than trials");
  const double nn = static_cast<double>(n);
  const double p = static_cast<double>(successes) / nn;
  const double z2 = z * z;
  const double denom = 1 + z2 / nn;
  const double center = (p + z2 / (2 * nn)) / denom;
  const double half = z / denom * std::sqrt(p * (1 - p) / nn + z2 / (4 * nn * nn));
  return {std::max(0.0, center - half), std::min(1.0, center + half)};
}

std::string format_report(const AdvantageReport& r) {
  std::ostringstream out;
  out << "trials=" << r.trials << " planted_rate=" << format_double(r.planted_rate)
      << " null_rate=" << format_double(r.null_rate) << " advantage=" << format_double(r.advantage)
      << " signed_difference=" << format_double(r.signed_difference)
      << " planted_halfwidth=" << format_double(r.planted_half_width)
      << " null_halfwidth=" << format_double(r.null_half_width);
  return out.str();
}

}  // namespace csppke
