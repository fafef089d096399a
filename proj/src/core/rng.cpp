#include "csppke/rng.hpp"

#include <stdexcept>

namespace csppke {

namespace {
constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;
}

Rng::Rng(std::uint64_t seed, std::uint64_t stream)
    : key_(mix64(mix64(seed ^ 0x6a09e667f3bcc909ULL) + stream * kGolden + 1)) {}

Rng Rng::derive(std::uint64_t stream_id) const {
  return Rng(mix64(key_ ^ mix64(stream_id + 0x3c6ef372fe94f82bULL)), 0, 0);
}

std::uint64_t Rng::operator()() {
  ++counter_;
  return mix64(key_ + counter_ * kGolden);
}

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("Rng::below: bound must be nonzero");
  // Lemire's nearly-divisionless rejection keeps the result exactly uniform.
  std::uint64_t x = (*this)();
  unsigned __int128 product = static_cast<unsigned __int128>(x) * bound;
  auto low = static_cast<std::uint64_t>(product);
  if (low < bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    while (low < threshold) {
      x = (*this)();
      product = static_cast<unsigned __int128>(x) * bound;
      low = static_cast<std::uint64_t>(product);
    }
  }
  return static_cast<std::uint64_t>(product >> 64);
}

double Rng::uniform01() { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

}  // namespace csppke
