#include "csppke/f2/channel.hpp"

#include <stdexcept>
#include <string>

#include "csppke/rng.hpp"

namespace csppke {

namespace {
void check_rate(double rate, const char* name) {
  if (!(rate >= 0 && rate <= 1)) {
    throw std::invalid_argument(std::string(name) + " out of [0,1]: " + std::to_string(rate));
  }
}
}  // namespace

TriVector apply_erasure_corruption(const BitVec& v, double alpha, double beta, Rng& rng) {
  check_rate(alpha, "alpha");
  check_rate(beta, "beta");
  TriVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (rng.bernoulli(alpha)) continue;
    out.set_bit(i, rng.bernoulli(beta) ? rng.bit() : v.get(i));
  }
  return out;
}

BitVec apply_corruption(const BitVec& v, double beta, Rng& rng) {
  check_rate(beta, "beta");
  BitVec out = v;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (rng.bernoulli(beta)) out.set(i, rng.bit());
  }
  return out;
}

TriVector random_erased_vector(std::size_t length, double alpha, Rng& rng) {
  check_rate(alpha, "alpha");
  TriVector out(length);
  for (std::size_t i = 0; i < length; ++i) {
    if (!rng.bernoulli(alpha)) out.set_bit(i, rng.bit());
  }
  return out;
}

}  // namespace csppke
