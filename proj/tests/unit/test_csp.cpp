#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <sstream>

#include "csppke/csp/instances.hpp"
#include "csppke/csp/random_functions.hpp"
#include "csppke/f2/sparse_matrix.hpp"
#include "csppke/rng.hpp"
#include "doctest.h"

using namespace csppke;

namespace {

SchemeParams larp_params(std::uint32_t n, std::uint32_t m, std::uint32_t k, std::uint32_t sigma, std::uint64_t gamma,
                         double alpha, double beta = 0.1) {
  SchemeParams p;
  p.n = n;
  p.m = m;
  p.k = k;
  p.sigma_size = sigma;
  p.gamma_size = gamma;
  p.alpha = alpha;
  p.beta = beta;
  p.m_prime = 1;
  return p;
}

// Every k-subset of [n] once, in lexicographic order.
SparseRowMatrix all_pairs(std::uint32_t n) {
  std::vector<std::vector<std::uint32_t>> rows;
  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t b = a + 1; b < n; ++b) rows.push_back({a, b});
  return SparseRowMatrix::from_rows(n, 2, rows);
}

int parity(const SparseRowMatrix& H, std::size_t i, const BitVec& s) {
  int acc = 0;
  for (auto c : H.row(i)) acc ^= static_cast<int>(s.get(c));
  return acc;
}

std::string serialize(const SchemeParams& p, const LarpInstance& inst, bool witness) {
  std::ostringstream out;
  write_instance(out, p, inst, witness);
  return out.str();
}

std::string serialize(const SchemeParams& p, const KxorInstance& inst, bool witness) {
  std::ostringstream out;
  write_instance(out, p, inst, witness);
  return out.str();
}

InstanceFile parse(const std::string& text) {
  std::istringstream in(text);
  LineReader reader(in);
  return read_instance(reader);
}

}  // namespace

TEST_CASE("random function store basics") {
  const RandomFunctionStore F(10, 3, 5, 7, 42);
  CHECK(F.domain_size() == 125);
  const std::vector<Symbol> x = {4, 0, 2};
  CHECK(F.encode(x) == 4 * 25 + 0 * 5 + 2);
  CHECK(F.decode(F.encode(x)) == x);
  CHECK(F.eval(3, x) == F.eval_code(3, F.encode(x)));
  CHECK(F.eval_code(3, 17) == F.value(F.function_key(3), 17));
  CHECK(F.eval(3, x) < 7);
  CHECK(F.eval(3, x) == RandomFunctionStore(10, 3, 5, 7, 42).eval(3, x));
  CHECK(F.distinct_symbols(F.encode(x)));
  CHECK_FALSE(F.distinct_symbols(F.encode(std::vector<Symbol>{1, 0, 1})));
  CHECK_THROWS(F.eval_code(3, 125));
  CHECK_THROWS(F.eval(10, x));
  CHECK_THROWS_AS(RandomFunctionStore(1, 0, 5, 7, 1), std::invalid_argument);
  CHECK_THROWS_AS(RandomFunctionStore(1, 2, 0, 7, 1), std::invalid_argument);
  CHECK_THROWS_AS(RandomFunctionStore(1, 2, 5, 0, 1), std::invalid_argument);
  CHECK_THROWS_AS(RandomFunctionStore(1, 64, 2, 7, 1), std::invalid_argument);
}

TEST_CASE("random function values are uniform over Γ") {
  const RandomFunctionStore F(100, 4, 16, 16, 9);
  std::vector<int> counts(16, 0);
  Rng rng(3);
  const int samples = 10000;
  for (int t = 0; t < samples; ++t) ++counts[F.eval_code(rng.below(100), rng.below(F.domain_size()))];
  double chi2 = 0;
  for (int c : counts) chi2 += (c - samples / 16.0) * (c - samples / 16.0) / (samples / 16.0);
  CHECK(chi2 < 37.7);
}

TEST_CASE("preimage enumeration") {
  const RandomFunctionStore F(20, 3, 6, 8, 5);
  for (std::size_t i = 0; i < 20; ++i) {
    for (std::uint64_t target = 0; target < 8; ++target) {
      const auto codes = enumerate_preimage_codes(F, i, target, false);
      CHECK(std::is_sorted(codes.begin(), codes.end()));
      for (auto c : codes) REQUIRE(F.eval_code(i, c) == target);
      std::size_t brute = 0;
      for (std::uint64_t c = 0; c < F.domain_size(); ++c) brute += F.eval_code(i, c) == target;
      CHECK(codes.size() == brute);
      for (const auto& x : enumerate_preimages(F, i, target, true)) {
        CHECK(std::set<Symbol>(x.begin(), x.end()).size() == 3);
        CHECK(F.eval(i, x) == target);
      }
    }
  }
  CHECK_THROWS_AS(enumerate_preimage_codes(F, 0, 0, false, 100), BudgetExceeded);
}

TEST_CASE("preimage counts match the binomial expectation") {
  const RandomFunctionStore F(100, 4, 8, 64, 77);
  Rng rng(1);
  double total = 0;
  for (std::size_t i = 0; i < 100; ++i) total += enumerate_preimage_codes(F, i, rng.below(64), false).size();
  const double n = 4096;
  const double p = 1.0 / 64;
  const double mean = total / 100;
  const double se = std::sqrt(n * p * (1 - p) / 100);
  CHECK(std::abs(mean - n * p) <= 3 * se);
}

TEST_CASE("degenerate Γ and the distinct filter") {
  const RandomFunctionStore F(1, 2, 2, 1, 3);
  CHECK(enumerate_preimages(F, 0, 0, false).size() == 4);
  CHECK(enumerate_preimages(F, 0, 0, true) == std::vector<std::vector<Symbol>>{{0, 1}, {1, 0}});
}

TEST_CASE("planted LARP without corruption is honest everywhere") {
  Rng rng(1);
  const auto H = random_mnk_matrix(200, 10, 3, rng);
  const auto p = larp_params(10, 200, 3, 6, 50, 0);
  const auto inst = sample_larp(p, H, Label::planted, rng);
  REQUIRE(inst.secret);
  CHECK(inst.corrupted_mask->weight() == 0);
  for (std::size_t i = 0; i < 200; ++i) CHECK(inst.b[i] == inst.F.eval(i, local_tuple(H, i, *inst.secret)));
}

TEST_CASE("planted consistency under corruption") {
  Rng rng(2);
  const auto H = random_mnk_matrix(2000, 12, 3, rng);
  const auto p = larp_params(12, 2000, 3, 8, 100, 0.3);
  const auto inst = sample_larp(p, H, Label::planted, rng);
  const double rate = static_cast<double>(inst.corrupted_mask->weight()) / 2000;
  CHECK(std::abs(rate - 0.3) < 0.05);
  for (std::size_t i = 0; i < 2000; ++i)
    if (!inst.corrupted_mask->get(i)) REQUIRE(inst.b[i] == inst.F.eval(i, local_tuple(H, i, *inst.secret)));
}

TEST_CASE("alpha=1 couples planted and null exactly") {
  Rng rng(3);
  const auto H = random_mnk_matrix(50, 8, 2, rng);
  const auto p = larp_params(8, 50, 2, 5, 7, 1);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Rng a(seed);
    Rng b(seed);
    CHECK(sample_larp(p, H, Label::planted, a).b == sample_larp(p, H, Label::null, b).b);
  }
}

TEST_CASE("alpha=1 marginal matches null in total variation") {
  Rng rng(4);
  const auto H = random_mnk_matrix(4, 8, 2, rng);
  const auto p = larp_params(8, 4, 2, 5, 4, 1);
  std::vector<double> planted(4, 0);
  std::vector<double> null(4, 0);
  const int draws = 10000;
  Rng root(5);
  for (int t = 0; t < draws; ++t) {
    Rng a = root.derive(2 * t);
    Rng b = root.derive(2 * t + 1);
    planted[sample_larp(p, H, Label::planted, a).b[0]] += 1.0 / draws;
    null[sample_larp(p, H, Label::null, b).b[0]] += 1.0 / draws;
  }
  double tv = 0;
  for (int g = 0; g < 4; ++g) tv += std::abs(planted[g] - null[g]) / 2;
  CHECK(tv <= 0.02);
}

TEST_CASE("worked example targets") {
  // 1-based G rows {1,3}, ?, {3,4}, {1,2}, {1,4}; s = (4,2,5,7) over Σ = {1..8}.
  const auto G = SparseRowMatrix::from_rows(4, 2, {{0, 2}, {1, 2}, {2, 3}, {0, 1}, {0, 3}});
  const RandomFunctionStore F(5, 2, 8, 16, 123);
  const std::vector<Symbol> s = {3, 1, 4, 6};
  const auto targets = planted_targets(F, G, s, 0, Rng(9));
  CHECK(targets.b[0] == F.eval(0, std::vector<Symbol>{3, 4}));
  CHECK(targets.b[2] == F.eval(2, std::vector<Symbol>{4, 6}));
  CHECK(targets.b[3] == F.eval(3, std::vector<Symbol>{3, 1}));
  CHECK(targets.b[4] == F.eval(4, std::vector<Symbol>{3, 6}));
}

TEST_CASE("sample_larp rejects mismatched matrices") {
  Rng rng(6);
  const auto H = random_mnk_matrix(10, 8, 2, rng);
  CHECK_THROWS_AS(sample_larp(larp_params(8, 11, 2, 5, 7, 0), H, Label::null, rng), std::invalid_argument);
  CHECK_THROWS_AS(sample_kxor(larp_params(9, 10, 2, 5, 7, 0), H, Label::null, rng), std::invalid_argument);
}

TEST_CASE("kXOR at beta 0, 1 and 0.5") {
  Rng rng(7);
  const std::size_t m = 100000;
  const auto H = random_mnk_matrix(m, 20, 3, rng);

  const auto exact = sample_kxor(larp_params(20, m, 3, 5, 7, 0, 0), H, Label::planted, rng);
  CHECK(exact.b == matvec(H, *exact.secret));

  for (double beta : {1.0, 0.5}) {
    const auto inst = sample_kxor(larp_params(20, m, 3, 5, 7, 0, beta), H, Label::planted, rng);
    std::size_t agree = 0;
    for (std::size_t i = 0; i < m; ++i) agree += inst.b.get(i) == parity(H, i, *inst.secret);
    CHECK(std::abs(static_cast<double>(agree) / m - (1 - beta / 2)) <= 0.01);
  }
}

TEST_CASE("kXOR planted consistency and beta=1 coupling") {
  Rng rng(8);
  const auto H = random_mnk_matrix(300, 16, 4, rng);
  const auto inst = sample_kxor(larp_params(16, 300, 4, 5, 7, 0, 0.3), H, Label::planted, rng);
  for (std::size_t i = 0; i < 300; ++i)
    if (!inst.corrupted_mask->get(i)) REQUIRE(inst.b.get(i) == parity(H, i, *inst.secret));
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    Rng a(seed);
    Rng b(seed);
    const auto p = larp_params(16, 300, 4, 5, 7, 0, 1);
    CHECK(sample_kxor(p, H, Label::planted, a).b == sample_kxor(p, H, Label::null, b).b);
  }
}

TEST_CASE("null hypergraph edge density is 1/|Γ|") {
  const auto H = all_pairs(12);
  const auto p = larp_params(12, static_cast<std::uint32_t>(H.rows()), 2, 8, 16, 0);
  double edges = 0;
  double candidates = 0;
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    Rng rng(seed);
    const auto view = to_hypergraph(sample_larp(p, H, Label::null, rng));
    CHECK(view.supports.size() == H.rows());
    for (const auto& e : view.edges) CHECK(std::binary_search(view.supports.begin(), view.supports.end(), e.coords));
    edges += view.edges.size();
    candidates += view.candidate_count();
  }
  const double q = 1.0 / 16;
  const double density = edges / candidates;
  CHECK(std::abs(density - q) <= 3 * std::sqrt(q * (1 - q) / candidates));
}

TEST_CASE("planted hypergraph contains every planted edge") {
  Rng rng(9);
  const auto H = random_mnk_matrix(60, 10, 3, rng);
  const auto p = larp_params(10, 60, 3, 5, 30, 0);
  const auto inst = sample_larp(p, H, Label::planted, rng);
  const auto view = to_hypergraph(inst);
  for (std::size_t i = 0; i < 60; ++i) {
    const auto row = H.row(i);
    CHECK(view.contains(Edge{{row.begin(), row.end()}, local_tuple(H, i, *inst.secret)}));
  }
}

TEST_CASE("targets outside the image give no edges") {
  Rng rng(10);
  const auto H = random_mnk_matrix(5, 6, 2, rng);
  auto inst = sample_larp(larp_params(6, 5, 2, 2, 1000, 0), H, Label::null, rng);
  for (std::size_t i = 0; i < 5; ++i) {
    std::set<std::uint64_t> image;
    for (std::uint64_t c = 0; c < 4; ++c) image.insert(inst.F.eval_code(i, c));
    std::uint64_t target = 0;
    while (image.count(target)) ++target;
    inst.b[i] = target;
  }
  CHECK(to_hypergraph(inst).edges.empty());
}

TEST_CASE("instance files round trip and gate the witness") {
  Rng rng(11);
  const auto H = random_mnk_matrix(30, 8, 3, rng);
  const auto p = larp_params(8, 30, 3, 6, 20, 0.2, 0.1);
  const auto larp = sample_larp(p, H, Label::planted, rng);
  const auto kxor = sample_kxor(p, H, Label::planted, rng);

  for (bool witness : {false, true}) {
    const std::string text = serialize(p, larp, witness);
    CHECK((text.find("SECRET") != std::string::npos) == witness);
    CHECK((text.find("MASK") != std::string::npos) == witness);
    const auto back = parse(text);
    REQUIRE(back.larp);
    CHECK(back.params == p);
    CHECK(back.larp->b == larp.b);
    CHECK(back.larp->F == larp.F);
    CHECK(back.larp->H == H);
    CHECK(serialize(back.params, *back.larp, witness) == text);

    const std::string ktext = serialize(p, kxor, witness);
    CHECK((ktext.find("SECRET") != std::string::npos) == witness);
    const auto kback = parse(ktext);
    REQUIRE(kback.kxor);
    CHECK(kback.kxor->b == kxor.b);
    CHECK(serialize(kback.params, *kback.kxor, witness) == ktext);
  }
}

TEST_CASE("instance reader names the bad line") {
  Rng rng(12);
  const auto H = random_mnk_matrix(3, 4, 2, rng);
  const auto p = larp_params(4, 3, 2, 3, 5, 0);
  std::string text = serialize(p, sample_larp(p, H, Label::null, rng), false);
  const auto pos = text.find("b ");
  std::size_t line = 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + pos, '\n'));
  text.replace(pos, text.find('\n', pos) - pos, "b 0 1 99");
  try {
    parse(text);
    FAIL("expected FormatError");
  } catch (const FormatError& e) {
    CHECK(e.line() == line);
  }
}

TEST_CASE("sampling is deterministic per seed") {
  Rng rng(13);
  const auto H = random_mnk_matrix(20, 8, 2, rng);
  const auto p = larp_params(8, 20, 2, 4, 6, 0.3);
  Rng a(5);
  Rng b(5);
  CHECK(serialize(p, sample_larp(p, H, Label::planted, a), true) ==
        serialize(p, sample_larp(p, H, Label::planted, b), true));
  CHECK(random_mnk_matrix(10, 8, 3, a) == random_mnk_matrix(10, 8, 3, b));
}
