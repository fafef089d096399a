#include <algorithm>
#include <bit>
#include <vector>

#include "csppke/f2/channel.hpp"
#include "csppke/rm/anf.hpp"
#include "csppke/rm/distinguisher.hpp"
#include "csppke/rm/rm_code.hpp"
#include "csppke/rng.hpp"
#include "doctest.h"

using namespace csppke;

namespace {

BitVec from_int(std::size_t length, std::uint64_t value) {
  BitVec v(length);
  for (std::size_t j = 0; j < length; ++j) v.set(j, (value >> j) & 1U);
  return v;
}

BitVec unit(std::size_t length, std::size_t at) {
  BitVec v(length);
  v.set(at, true);
  return v;
}

// Nearest codeword by exhaustive search over all coefficient vectors.
BitVec nearest_coeffs(const RmCode& code, const BitVec& received) {
  BitVec best;
  std::size_t best_distance = SIZE_MAX;
  for (std::uint64_t c = 0; c < (std::uint64_t{1} << code.dimension()); ++c) {
    const BitVec coeffs = from_int(code.dimension(), c);
    const std::size_t dist = code.encode(coeffs).distance(received);
    if (dist < best_distance) {
      best_distance = dist;
      best = coeffs;
    }
  }
  return best;
}

}  // namespace

TEST_CASE("monomial order") {
  CHECK(monomials_up_to(3, 3) == std::vector<Monomial>{0, 1, 2, 4, 3, 5, 6, 7});
  CHECK(monomials_up_to(4, 1).size() == 5);
  CHECK(monomials_up_to(10, 3).size() == 176);
}

TEST_CASE("moebius transform is an involution") {
  Rng rng(3);
  std::vector<std::uint8_t> cells(64);
  for (auto& c : cells) c = rng.bit();
  auto copy = cells;
  moebius_transform(copy);
  moebius_transform(copy);
  CHECK(copy == cells);
}

TEST_CASE("RM(2,1) encode examples") {
  const RmCode code(2, 1);
  CHECK(code.dimension() == 3);
  CHECK(code.encode(BitVec::from_string("100")).to_string() == "1111");
  CHECK(code.encode(BitVec::from_string("010")).to_string() == "0101");
  CHECK(code.encode(BitVec::from_string("001")).to_string() == "0011");
  CHECK_THROWS_AS(code.encode(BitVec(2)), std::invalid_argument);
}

TEST_CASE("RM(4,1) minimum distance is 8") {
  const RmCode code(4, 1);
  std::size_t min_weight = SIZE_MAX;
  for (std::uint64_t c = 1; c < 32; ++c) min_weight = std::min(min_weight, code.encode(from_int(5, c)).weight());
  CHECK(min_weight == 8);
  CHECK(code.min_distance() == 8);
  CHECK(code.decoding_radius() == 3);
}

TEST_CASE("encode is linear") {
  Rng rng(12);
  for (auto [d, r] : {std::pair{4u, 2u}, {6u, 3u}, {8u, 2u}, {10u, 3u}}) {
    const RmCode code(d, r);
    for (int rep = 0; rep < 100; ++rep) {
      const BitVec a = BitVec::random(code.dimension(), rng);
      const BitVec b = BitVec::random(code.dimension(), rng);
      REQUIRE(code.encode(a ^ b) == (code.encode(a) ^ code.encode(b)));
    }
  }
}

TEST_CASE("anf_degree examples") {
  const auto zero = anf_degree(BitVec(16));
  CHECK(zero.is_zero);
  CHECK(zero.degree == 0);
  BitVec ones(16);
  for (std::size_t i = 0; i < 16; ++i) ones.set(i, true);
  const auto one = anf_degree(ones);
  CHECK_FALSE(one.is_zero);
  CHECK(one.degree == 0);
  CHECK(anf_degree(unit(16, 15)).degree == 4);
  CHECK(anf_degree(unit(1024, 1023)).degree == 10);
  CHECK_THROWS_AS(anf_degree(BitVec(12)), std::invalid_argument);
}

TEST_CASE("anf degree of an encoding is its largest monomial") {
  for (std::uint32_t d = 1; d <= 4; ++d) {
    const RmCode code(d, d);
    const auto& monos = code.monomials();
    for (std::uint64_t c = 0; c < (std::uint64_t{1} << code.dimension()); ++c) {
      const BitVec coeffs = from_int(code.dimension(), c);
      std::uint32_t expect = 0;
      for (std::size_t j = 0; j < monos.size(); ++j)
        if (coeffs.get(j)) expect = std::max<std::uint32_t>(expect, std::popcount(monos[j]));
      const auto got = anf_degree(code.encode(coeffs));
      REQUIRE(got.is_zero == (c == 0));
      REQUIRE(got.degree == expect);
    }
  }
}

TEST_CASE("anf round trip") {
  Rng rng(31);
  const BitVec table = BitVec::random(256, rng);
  const Anf f = Anf::from_truth_table(table);
  CHECK(f.truth_table() == table);
  for (std::uint32_t p = 0; p < 256; ++p) CHECK(f.evaluate(p) == table.get(p));
  CHECK(Anf(3, {1, 1, 2}).monomials() == std::vector<Monomial>{2});
  CHECK_THROWS_AS(Anf(3, {8}), std::invalid_argument);
}

TEST_CASE("membership examples") {
  Rng rng(5);
  const RmCode code(10, 3);
  for (int rep = 0; rep < 20; ++rep) CHECK(code.is_member(code.encode(BitVec::random(code.dimension(), rng))));
  CHECK_FALSE(RmCode(4, 3).is_member(unit(16, 5)));
  CHECK(RmCode(4, 4).is_member(unit(16, 5)));
  int members = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    Rng r(seed);
    members += code.is_member(BitVec::random(1024, r));
  }
  CHECK(members == 0);
  CHECK_THROWS_AS(code.is_member(BitVec(512)), std::invalid_argument);
}

TEST_CASE("ANF and dual membership agree exhaustively for d <= 4") {
  for (std::uint32_t d = 1; d <= 4; ++d) {
    for (std::uint32_t r = 0; r <= d; ++r) {
      const RmCode code(d, r);
      const std::size_t len = code.block_length();
      for (std::uint64_t x = 0; x < (std::uint64_t{1} << len); ++x) {
        const BitVec v = from_int(len, x);
        REQUIRE(code.is_member_anf(v) == code.is_member_dual(v));
      }
    }
  }
}

TEST_CASE("ANF and dual membership agree on random and near-code vectors for d <= 8") {
  Rng rng(77);
  for (std::uint32_t d = 5; d <= 8; ++d) {
    for (std::uint32_t r = 0; r <= d; ++r) {
      const RmCode code(d, r);
      for (int rep = 0; rep < 100; ++rep) {
        BitVec v = rep % 2 ? BitVec::random(code.block_length(), rng)
                           : code.encode(BitVec::random(code.dimension(), rng));
        if (rep % 4 == 2) v.flip(rng.below(v.size()));
        REQUIRE(code.is_member_anf(v) == code.is_member_dual(v));
      }
    }
  }
}

TEST_CASE("majority decoding of clean codewords") {
  Rng rng(9);
  for (auto [d, r] : {std::pair{4u, 1u}, {6u, 2u}, {10u, 3u}, {5u, 5u}, {3u, 0u}}) {
    const RmCode code(d, r);
    for (int rep = 0; rep < 10; ++rep) {
      const BitVec c = BitVec::random(code.dimension(), rng);
      CHECK(code.decode_majority(code.encode(c)) == c);
    }
  }
}

TEST_CASE("RM(4,1) decodes every pattern of up to 3 flips") {
  const RmCode code(4, 1);
  Rng rng(44);
  std::vector<std::uint32_t> patterns;
  for (std::uint32_t mask = 0; mask < (1U << 16); ++mask)
    if (std::popcount(mask) <= 3) patterns.push_back(mask);
  CHECK(patterns.size() == 1 + 16 + 120 + 560);
  for (int rep = 0; rep < 5; ++rep) {
    const BitVec coeffs = BitVec::random(5, rng);
    const BitVec word = code.encode(coeffs);
    for (auto mask : patterns) {
      const BitVec received = word ^ from_int(16, mask);
      REQUIRE(code.decode_majority(received) == coeffs);
      REQUIRE(nearest_coeffs(code, received) == coeffs);
    }
  }
}

TEST_CASE("decoding below the radius at larger codes") {
  Rng rng(45);
  for (auto [d, r] : {std::pair{6u, 2u}, {8u, 3u}, {10u, 3u}}) {
    const RmCode code(d, r);
    for (int rep = 0; rep < 30; ++rep) {
      const BitVec coeffs = BitVec::random(code.dimension(), rng);
      BitVec received = code.encode(coeffs);
      BitVec flips(received.size());
      while (flips.weight() < code.decoding_radius()) flips.set(rng.below(received.size()), true);
      received ^= flips;
      REQUIRE(code.decode_majority(received) == coeffs);
    }
  }
}

TEST_CASE("distinguish accepts clean codewords") {
  Rng rng(2);
  const RmCode code(8, 2);
  for (int rep = 0; rep < 20; ++rep) {
    const TriVector w = TriVector::from_bits(code.encode(BitVec::random(code.dimension(), rng)));
    CHECK(distinguish(code, w, 1.0, rng) == 0);
    CHECK(decode_disagreements(code, w, rng, ErasureFill::zeros) == 0);
  }
}

TEST_CASE("calibration with no noise") {
  Rng rng(1);
  const Calibration c = calibrate_threshold(RmCode(6, 2), 0, 0, 20, rng);
  CHECK(c.mean_noisy == 0);
  CHECK(c.z_star > 0);
  CHECK(std::all_of(c.noisy_counts.begin(), c.noisy_counts.end(), [](std::size_t x) { return x == 0; }));
  CHECK_THROWS_AS(calibrate_threshold(RmCode(6, 2), 0, 0, 1, rng), std::invalid_argument);
}

TEST_CASE("RM(10,3) calibrates at alpha 0.1 and separates") {
  const RmCode code(10, 3);
  Rng rng(1);
  const Calibration c = calibrate_threshold(code, 0.1, 0.05, 200, rng);
  CHECK(c.mean_noisy < c.z_star);
  CHECK(c.z_star < c.mean_random);
  CHECK(*std::max_element(c.noisy_counts.begin(), c.noisy_counts.end()) <
        *std::min_element(c.random_counts.begin(), c.random_counts.end()));

  Rng trials(2);
  int random_ok = 0;
  int noisy_ok = 0;
  for (int t = 0; t < 100; ++t) {
    Rng r = trials.derive(t);
    Rng a = r.derive(0);
    const TriVector random = random_erased_vector(1024, 0.1, a);
    random_ok += distinguish(code, random, c.z_star, a) == 1;
    Rng b = r.derive(1);
    const BitVec word = code.encode(BitVec::random(code.dimension(), b));
    noisy_ok += distinguish(code, apply_erasure_corruption(word, 0.1, 0.05, b), c.z_star, b) == 0;
  }
  CHECK(random_ok >= 95);
  CHECK(noisy_ok >= 95);
}

TEST_CASE("RM(10,3) at alpha 0.3 is outside the majority-logic regime") {
  Rng rng(1);
  CHECK_THROWS_AS(calibrate_threshold(RmCode(10, 3), 0.3, 0.05, 200, rng), CalibrationFailure);
}

TEST_CASE("RM(3,2) at heavy noise fails calibration") {
  Rng rng(1);
  try {
    calibrate_threshold(RmCode(3, 2), 0.5, 0.4, 200, rng);
    FAIL("expected CalibrationFailure");
  } catch (const CalibrationFailure& e) {
    CHECK(e.result().noisy_counts.size() == 200);
    CHECK(e.result().random_counts.size() == 200);
  }
}
