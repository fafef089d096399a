#include "csppke/expander/matrix_gen.hpp"

#include <bit>
#include <ostream>
#include <stdexcept>
#include <string>

#include "csppke/rng.hpp"

namespace csppke {

Anf sample_low_degree_poly(std::uint32_t d, std::uint32_t degree, Rng& rng) {
  if (degree > d) {
    throw std::invalid_argument("sample_low_degree_poly: degree " + std::to_string(degree) + " > d = " +
                                std::to_string(d));
  }
  std::vector<Monomial> chosen;
  for (const auto m : monomials_up_to(d, degree)) {
    if (rng.bit()) chosen.push_back(m);
  }
  return Anf(d, std::move(chosen));
}

SparseRowMatrix assemble(const GenParams& gen, const std::vector<Anf>& selectors) {
  const std::uint32_t w = gen.window_bits;
  if (selectors.size() != static_cast<std::size_t>(gen.k) * w) {
    throw std::invalid_argument("assemble: expected " + std::to_string(gen.k * w) + " selectors");
  }
  std::vector<BitVec> tables;
  tables.reserve(selectors.size());
  for (const auto& g : selectors) {
    if (g.variables() != gen.d) throw std::invalid_argument("assemble: selector over wrong variable count");
    tables.push_back(g.truth_table());
  }
  const std::uint64_t m = gen.m();
  std::vector<std::uint32_t> flat;
  flat.reserve(m * gen.k);
  for (std::uint64_t p = 0; p < m; ++p) {
    for (std::uint32_t i = 0; i < gen.k; ++i) {
      std::uint32_t q = 0;
      for (std::uint32_t j = 0; j < w; ++j) {
        q = (q << 1) | static_cast<std::uint32_t>(tables[i * w + j].get(p));
      }
      flat.push_back((i << w) + q);
    }
  }
  return SparseRowMatrix(m, gen.n, gen.k, std::move(flat));
}

GeneratedMatrix generate(const GenParams& gen, Rng& rng) {
  const auto violations = validate(gen);
  if (!violations.empty()) throw std::invalid_argument("generate: " + violations.front().relation);
  GeneratedMatrix gm;
  gm.gen = gen;
  const std::size_t count = static_cast<std::size_t>(gen.k) * gen.window_bits;
  gm.selectors.reserve(count);
  for (std::size_t s = 0; s < count; ++s) {
    Rng stream = rng.derive(s);
    gm.selectors.push_back(sample_low_degree_poly(gen.d, gen.poly_degree, stream));
  }
  rng();
  gm.G = assemble(gen, gm.selectors);
  return gm;
}

bool verify_rm_subcode(const GeneratedMatrix& gm, const RmCode& code) {
  if (code.variables() != gm.gen.d) {
    throw std::invalid_argument("verify_rm_subcode: code has " + std::to_string(code.variables()) +
                                " variables, matrix has d = " + std::to_string(gm.gen.d));
  }
  if (code.degree() < gm.column_degree_bound()) {
    throw std::invalid_argument("verify_rm_subcode: code degree " + std::to_string(code.degree()) +
                                " below column degree bound " + std::to_string(gm.column_degree_bound()));
  }
  if (gm.G.rows() != code.block_length()) throw std::invalid_argument("verify_rm_subcode: row count mismatch");
  for (const auto& column : gm.G.columns()) {
    if (!code.is_member(column)) return false;
  }
  return true;
}

void write_generated(std::ostream& out, const GeneratedMatrix& gm) {
  write_srm(out, gm.G);
  const auto& g = gm.gen;
  out << "GEN " << g.d << ' ' << g.n << ' ' << g.k << ' ' << g.window_bits << ' ' << g.poly_degree << '\n';
  for (std::uint32_t i = 0; i < g.k; ++i) {
    for (std::uint32_t j = 0; j < g.window_bits; ++j) {
      const auto& monomials = gm.selector(i, j).monomials();
      out << "g " << i << ' ' << j << ' ' << monomials.size();
      for (const auto mono : monomials) out << ' ' << mono;
      out << '\n';
    }
  }
}

GeneratedMatrix read_generated(LineReader& in) {
  GeneratedMatrix gm;
  gm.G = read_srm(in);
  const std::string header = in.next("GEN line");
  const auto tokens = split_ws(header);
  if (tokens.size() != 6 || tokens[0] != "GEN") in.fail("expected 'GEN d n k w poly_degree'");
  try {
    gm.gen.d = static_cast<std::uint32_t>(parse_u64(tokens[1]));
    gm.gen.n = static_cast<std::uint32_t>(parse_u64(tokens[2]));
    gm.gen.k = static_cast<std::uint32_t>(parse_u64(tokens[3]));
    gm.gen.window_bits = static_cast<std::uint32_t>(parse_u64(tokens[4]));
    gm.gen.poly_degree = static_cast<std::uint32_t>(parse_u64(tokens[5]));
  } catch (const std::invalid_argument& e) {
    in.fail(e.what());
  }
  if (const auto v = validate(gm.gen); !v.empty()) in.fail("GEN: " + v.front().relation);
  for (std::uint32_t i = 0; i < gm.gen.k; ++i) {
    for (std::uint32_t j = 0; j < gm.gen.window_bits; ++j) {
      const std::string line = in.next("selector line");
      const auto parts = split_ws(line);
      if (parts.size() < 4 || parts[0] != "g") in.fail("expected 'g i j count masks...'");
      std::vector<Monomial> monomials;
      try {
        if (parse_u64(parts[1]) != i || parse_u64(parts[2]) != j) in.fail("selector out of order");
        const auto count = parse_u64(parts[3]);
        if (parts.size() != 4 + count) in.fail("selector monomial count mismatch");
        for (std::size_t t = 0; t < count; ++t) {
          const auto mask = parse_u64(parts[4 + t]);
          if (mask >> gm.gen.d) in.fail("selector monomial uses variable beyond d");
          if (static_cast<std::uint32_t>(std::popcount(mask)) > gm.gen.poly_degree) {
            in.fail("selector monomial exceeds poly_degree");
          }
          monomials.push_back(static_cast<Monomial>(mask));
        }
      } catch (const std::invalid_argument& e) {
        in.fail(e.what());
      }
      gm.selectors.emplace_back(gm.gen.d, std::move(monomials));
    }
  }
  if (!(assemble(gm.gen, gm.selectors) == gm.G)) in.fail("matrix does not match its selectors");
  return gm;
}

}  // namespace csppke
