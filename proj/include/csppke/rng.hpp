#pragma once

#include <cstdint>
#include <limits>

namespace csppke {

/// Counter-based, splittable random stream.
///
/// Every output is a keyed hash of (key, counter), so a stream is fully
/// described by two words and child streams can be derived from any
/// identifier without touching the parent. All randomness in the project is
/// drawn from one root seed through `derive`, which keeps experiments
/// reproducible independent of evaluation order.
class Rng {
 public:
  using result_type = std::uint64_t;

  explicit Rng(std::uint64_t seed, std::uint64_t stream = 0);

  /// Independent child stream; does not advance this stream.
  Rng derive(std::uint64_t stream_id) const;

  std::uint64_t operator()();

  /// Uniform integer in [0, bound). `bound` must be nonzero.
  std::uint64_t below(std::uint64_t bound);

  /// Uniform double in [0, 1) with 53 bits of precision.
  double uniform01();

  bool bernoulli(double p) { return uniform01() < p; }
  bool bit() { return ((*this)() >> 63) != 0; }

  std::uint64_t key() const { return key_; }
  std::uint64_t counter() const { return counter_; }

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

 private:
  Rng(std::uint64_t key, std::uint64_t counter, int) : key_(key), counter_(counter) {}

  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

/// SplitMix64 finalizer; a bijection on 64-bit words.
constexpr std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Maps a uniform 64-bit word to [0, bound) by multiply-high.
inline std::uint64_t reduce_to(std::uint64_t word, std::uint64_t bound) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(word) * bound) >> 64);
}

// Stream identifiers for the top-level consumers of a root seed.
namespace streams {
inline constexpr std::uint64_t kMatrixGen = 0x4d41545249584745ULL;
inline constexpr std::uint64_t kFunctions = 0x46554e4354494f4eULL;
inline constexpr std::uint64_t kKeygen = 0x4b455947454e0000ULL;
inline constexpr std::uint64_t kEncrypt = 0x454e435259505400ULL;
inline constexpr std::uint64_t kDecrypt = 0x4445435259505400ULL;
inline constexpr std::uint64_t kCalibrate = 0x43414c4942524154ULL;
inline constexpr std::uint64_t kTrials = 0x545249414c530000ULL;
inline constexpr std::uint64_t kInstance = 0x494e5354414e4345ULL;
}  // namespace streams

}  // namespace csppke
