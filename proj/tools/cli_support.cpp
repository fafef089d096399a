#include "cli_support.hpp"

#include <fstream>
#include <iostream>

namespace csppke::cli {

void ParamFlags::attach(CLI::App& cmd) {
  cmd.add_option("--params", file, "Parameter file (key=value lines)");
  cmd.add_option("--n", n, "Secret length / width of G");
  cmd.add_option("--m", m, "Number of constraints / height of G");
  cmd.add_option("--k", k, "Locality");
  cmd.add_option("--sigma", sigma, "|Sigma|");
  cmd.add_option("--gamma", gamma, "|Gamma|");
  cmd.add_option("--alpha", alpha, "LARP corruption rate");
  cmd.add_option("--beta", beta, "kXOR corruption rate");
  cmd.add_option("--mprime", mprime, "Public key height");
}

SchemeParams ParamFlags::resolve(std::uint64_t seed, bool strict) const {
  SchemeParams p;
  const bool have_all_inline = n && m && k && sigma && gamma && alpha && beta && mprime;
  if (!file.empty()) {
    p = load(file, [](LineReader& in) { return read_params(in); });
  } else if (!have_all_inline) {
    throw InvalidParams("parameters incomplete: pass --params FILE or all of --n --m --k --sigma --gamma --alpha "
                        "--beta --mprime");
  }
  if (n) p.n = *n;
  if (m) p.m = *m;
  if (k) p.k = *k;
  if (sigma) p.sigma_size = *sigma;
  if (gamma) p.gamma_size = *gamma;
  if (alpha) p.alpha = *alpha;
  if (beta) p.beta = *beta;
  if (mprime) p.m_prime = *mprime;
  p.seed = seed;
  bool bad = false;
  for (const auto& v : validate(p, strict)) {
    const bool error = v.severity == Violation::Severity::error;
    std::cerr << (error ? "error: " : "warning: ") << v.relation << '\n';
    bad = bad || error;
  }
  if (bad) throw InvalidParams("parameter validation failed");
  return p;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << text;
  if (!out) throw std::runtime_error("write to '" + path + "' failed");
}

}  // namespace csppke::cli
