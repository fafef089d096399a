#include <sstream>

#include "csppke/params.hpp"
#include "doctest.h"

using namespace csppke;

namespace {

SchemeParams small_params() {
  SchemeParams p;
  p.n = 4;
  p.m = 16;
  p.k = 2;
  p.sigma_size = 8;
  p.gamma_size = 4;
  p.alpha = 0.1;
  p.beta = 0.05;
  p.m_prime = strict_m_prime(8, 2);
  p.seed = 3;
  return p;
}

bool mentions(const std::vector<Violation>& vs, const std::string& text, Violation::Severity sev) {
  for (const auto& v : vs)
    if (v.severity == sev && v.relation.find(text) != std::string::npos) return true;
  return false;
}

}  // namespace

TEST_CASE("small alphabet with |Γ|=4 has no errors") {
  const auto p = small_params();
  CHECK_FALSE(has_errors(validate(p, false)));
  CHECK_FALSE(has_errors(validate(p, true)));
}

TEST_CASE("|Γ| above the 3k/4 exponent") {
  auto p = small_params();
  p.gamma_size = 64;
  const auto strict = validate(p, true);
  CHECK(has_errors(strict));
  CHECK(mentions(strict, "|Γ| > |Σ|^{3k/4} = 8^{1.5}", Violation::Severity::error));
  const auto desk = validate(p, false);
  CHECK_FALSE(has_errors(desk));
  CHECK(mentions(desk, "|Γ| > |Σ|^{3k/4} = 8^{1.5}", Violation::Severity::warning));
}

TEST_CASE("rates out of range") {
  auto p = small_params();
  p.alpha = 1.2;
  CHECK(mentions(validate(p, false), "alpha out of [0,1]", Violation::Severity::error));
  p.alpha = 0.1;
  p.beta = -0.1;
  CHECK(mentions(validate(p, false), "beta out of [0,1]", Violation::Severity::error));
}

TEST_CASE("strict m' is the exact cube-root ceiling") {
  CHECK(strict_m_prime(8, 2) == 4);
  CHECK(strict_m_prime(8, 3) == 8);
  CHECK(strict_m_prime(27, 3) == 27);
  CHECK(strict_m_prime(16, 4) == 41);
  CHECK(strict_m_prime(64, 3) == 64);
  auto p = small_params();
  p.m_prime = 5;
  CHECK(has_errors(validate(p, true)));
  CHECK_FALSE(has_errors(validate(p, false)));
}

TEST_CASE("validate is pure and strict implies desk") {
  for (std::uint64_t gamma : {2, 4, 16, 64, 65}) {
    for (std::uint64_t mp : {1, 4, 9}) {
      auto p = small_params();
      p.gamma_size = gamma;
      p.m_prime = mp;
      CHECK(validate(p, true) == validate(p, true));
      if (!has_errors(validate(p, true))) CHECK_FALSE(has_errors(validate(p, false)));
    }
  }
}

TEST_CASE("structural errors") {
  auto p = small_params();
  p.n = 1;
  CHECK(has_errors(validate(p, false)));
  p = small_params();
  p.gamma_size = 1;
  CHECK(has_errors(validate(p, false)));
  p = small_params();
  p.gamma_size = 65;
  CHECK(mentions(validate(p, false), "|Γ| <= |Σ|^k", Violation::Severity::error));
}

TEST_CASE("derive_gen_params") {
  CHECK(derive_gen_params(8, 4, 4).window_bits == 1);
  const auto g16 = derive_gen_params(16, 4, 4);
  CHECK(g16.window_bits == 2);
  CHECK(g16.poly_degree == 4);
  CHECK(derive_gen_params(8, 10, 4).m() == 1024);
  CHECK(derive_gen_params(8, 4, 4).window_bits * derive_gen_params(8, 4, 4).poly_degree == 3);
  CHECK_THROWS_AS(derive_gen_params(7, 4, 4), std::invalid_argument);
  CHECK_THROWS_AS(derive_gen_params(8, 4, 0), std::invalid_argument);
}

TEST_CASE("gen params validation") {
  GenParams g = derive_gen_params(8, 4, 4);
  CHECK(validate(g).empty());
  g.window_bits = 2;
  CHECK(has_errors(validate(g)));
  g = derive_gen_params(8, 4, 4);
  g.poly_degree = 5;
  CHECK(has_errors(validate(g)));
}

TEST_CASE("params text round trip") {
  auto p = small_params();
  p.alpha = 0.3;
  p.beta = 0.04;
  std::ostringstream out;
  write_params(out, p);
  std::istringstream in(out.str());
  LineReader reader(in);
  const SchemeParams q = read_params(reader);
  CHECK(q == p);
  std::ostringstream again;
  write_params(again, q);
  CHECK(again.str() == out.str());
}

TEST_CASE("params reader reports the offending line") {
  std::istringstream in("n=4\nm=16\nk=x\n");
  LineReader reader(in);
  try {
    read_params(reader);
    FAIL("expected FormatError");
  } catch (const FormatError& e) {
    CHECK(e.line() == 3);
  }
}

TEST_CASE("asymptotic shape is documented, not instantiated") {
  const auto shape = asymptotic_shape(16);
  CHECK(shape.k == doctest::Approx(16384));
  CHECK(shape.log2_m == doctest::Approx(4096));
}
