#include "csppke/params.hpp"

#include <cmath>
#include <limits>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace csppke {

namespace {

using u128 = unsigned __int128;
constexpr u128 kSaturated = ~u128{0};

u128 sat_pow(std::uint64_t base, std::uint64_t exp) {
  u128 result = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    if (base != 0 && result > kSaturated / base) return kSaturated;
    result *= base;
  }
  return result;
}

std::string num(double x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

Violation error(std::string what) { return {Violation::Severity::error, std::move(what)}; }
Violation warning(std::string what) { return {Violation::Severity::warning, std::move(what)}; }

}  // namespace

std::uint64_t domain_size(std::uint32_t sigma_size, std::uint32_t k) {
  const u128 v = sat_pow(sigma_size, k);
  return v > std::numeric_limits<std::uint64_t>::max() ? std::numeric_limits<std::uint64_t>::max()
                                                       : static_cast<std::uint64_t>(v);
}

std::uint64_t strict_m_prime(std::uint32_t sigma_size, std::uint32_t k) {
  const u128 target = sat_pow(sigma_size, k);
  if (target == kSaturated) {
    return static_cast<std::uint64_t>(std::ceil(std::pow(static_cast<long double>(sigma_size), k / 3.0L)));
  }
  auto x = static_cast<std::uint64_t>(std::llround(std::cbrt(static_cast<long double>(target))));
  // Correct the floating-point guess to the exact integer ceiling.
  while (x > 0 && sat_pow(x - 1, 3) >= target) --x;
  while (sat_pow(x, 3) < target) ++x;
  return x;
}

double lambda_estimate(const SchemeParams& p) {
  return std::max(static_cast<double>(domain_size(p.sigma_size, p.k)), static_cast<double>(p.m));
}

std::vector<Violation> validate(const SchemeParams& p, bool strict) {
  std::vector<Violation> out;
  if (p.k < 1) out.push_back(error("k >= 1: k = " + std::to_string(p.k)));
  if (p.n < p.k) {
    out.push_back(error("n >= k: " + std::to_string(p.n) + " < " + std::to_string(p.k)));
  }
  if (p.m < 1) out.push_back(error("m >= 1: m = " + std::to_string(p.m)));
  if (p.gamma_size < 2) {
    out.push_back(error("|Γ| >= 2: |Γ| = " + std::to_string(p.gamma_size)));
  }
  const u128 sigma_k = sat_pow(p.sigma_size, p.k);
  if (p.gamma_size > sigma_k) {
    out.push_back(error("|Γ| <= |Σ|^k: " + std::to_string(p.gamma_size) + " > " +
                        std::to_string(p.sigma_size) + "^" + std::to_string(p.k)));
  }
  if (!(p.alpha >= 0 && p.alpha <= 1)) out.push_back(error("alpha out of [0,1]: " + num(p.alpha)));
  if (!(p.beta >= 0 && p.beta <= 1)) out.push_back(error("beta out of [0,1]: " + num(p.beta)));
  if (p.m_prime < 1) out.push_back(error("m' >= 1: m' = " + std::to_string(p.m_prime)));

  // |Γ| <= |Σ|^{3k/4}  <=>  |Γ|^4 <= |Σ|^{3k}
  if (p.k >= 1 && p.sigma_size >= 1 && p.gamma_size >= 1) {
    const u128 lhs = sat_pow(p.gamma_size, 4);
    const u128 rhs = sat_pow(p.sigma_size, 3ULL * p.k);
    if (lhs != kSaturated && lhs > rhs) {
      const double bound = std::pow(static_cast<double>(p.sigma_size), 0.75 * p.k);
      std::string what = "|Γ| > |Σ|^{3k/4} = " + std::to_string(p.sigma_size) + "^{" +
                         num(0.75 * p.k) + "}: " + std::to_string(p.gamma_size) + " > " + num(bound);
      out.push_back(strict ? error(std::move(what)) : warning(std::move(what)));
    }
  }
  if (strict && p.k >= 1 && p.sigma_size >= 1) {
    const std::uint64_t want = strict_m_prime(p.sigma_size, p.k);
    if (p.m_prime != want) {
      out.push_back(error("m' = ceil(|Σ|^{k/3}): " + std::to_string(p.m_prime) +
                          " != " + std::to_string(want)));
    }
  }
  return out;
}

bool has_errors(const std::vector<Violation>& violations) {
  for (const auto& v : violations) {
    if (v.severity == Violation::Severity::error) return true;
  }
  return false;
}

std::vector<Violation> validate(const GenParams& g) {
  std::vector<Violation> out;
  if (g.k < 1) out.push_back(error("k >= 1: k = " + std::to_string(g.k)));
  if (g.d > 30) out.push_back(error("d <= 30: d = " + std::to_string(g.d)));
  if (g.window_bits > 31) {
    out.push_back(error("window_bits <= 31: w = " + std::to_string(g.window_bits)));
  } else if (static_cast<std::uint64_t>(g.k) << g.window_bits > g.n) {
    out.push_back(error("k * 2^w <= n: " + std::to_string(g.k) + " * 2^" +
                        std::to_string(g.window_bits) + " > " + std::to_string(g.n)));
  }
  if (g.poly_degree < 1) out.push_back(error("poly_degree >= 1: poly_degree = 0"));
  if (g.d < g.poly_degree) {
    out.push_back(error("d >= poly_degree: " + std::to_string(g.d) + " < " +
                        std::to_string(g.poly_degree)));
  }
  return out;
}

GenParams derive_gen_params(std::uint32_t n, std::uint32_t d, std::uint32_t k) {
  if (k == 0) throw std::invalid_argument("derive_gen_params: k must be positive");
  if (n < 2 * k) {
    throw std::invalid_argument("derive_gen_params: need n >= 2k, got n = " + std::to_string(n) +
                                ", k = " + std::to_string(k));
  }
  GenParams g;
  g.d = d;
  g.n = n;
  g.k = k;
  std::uint32_t ratio = n / k;  // floor(log2(n/k)) == floor(log2(floor(n/k)))
  while (ratio > 1) {
    ratio >>= 1;
    ++g.window_bits;
  }
  std::uint32_t ceil_log = 0;
  while ((std::uint64_t{1} << ceil_log) < n) ++ceil_log;
  g.poly_degree = ceil_log;
  return g;
}

AsymptoticShape asymptotic_shape(std::uint32_t n, double c_k, double c_m) {
  std::uint32_t ceil_log = 0;
  while ((std::uint64_t{1} << ceil_log) < n) ++ceil_log;
  return {std::pow(static_cast<double>(ceil_log), c_k), std::pow(static_cast<double>(ceil_log), c_m)};
}

void write_params(std::ostream& out, const SchemeParams& p) {
  out << "n=" << p.n << '\n'
      << "m=" << p.m << '\n'
      << "k=" << p.k << '\n'
      << "sigma=" << p.sigma_size << '\n'
      << "gamma=" << p.gamma_size << '\n'
      << "alpha=" << format_double(p.alpha) << '\n'
      << "beta=" << format_double(p.beta) << '\n'
      << "mprime=" << p.m_prime << '\n'
      << "seed=" << p.seed << '\n';
}

SchemeParams read_params(LineReader& in) {
  std::map<std::string, std::pair<std::string, std::size_t>> fields;
  std::string line;
  while (in.peek(line) && line.find('=') != std::string::npos) {
    in.try_next(line);
    const auto eq = line.find('=');
    auto key = line.substr(0, eq);
    if (fields.count(key)) in.fail("duplicate parameter '" + key + "'");
    fields[key] = {line.substr(eq + 1), in.line_number()};
  }
  SchemeParams p;
  auto take = [&](const char* key, auto parse) {
    const auto it = fields.find(key);
    if (it == fields.end()) throw FormatError(in.line_number(), std::string("missing parameter '") + key + "'");
    try {
      parse(it->second.first);
    } catch (const std::invalid_argument& e) {
      throw FormatError(it->second.second, std::string(key) + ": " + e.what());
    }
    fields.erase(it);
  };
  auto u32 = [](const std::string& s) {
    const auto v = parse_u64(s);
    if (v > 0xffffffffULL) throw std::invalid_argument("value exceeds 32 bits: " + s);
    return static_cast<std::uint32_t>(v);
  };
  take("n", [&](const std::string& s) { p.n = u32(s); });
  take("m", [&](const std::string& s) { p.m = u32(s); });
  take("k", [&](const std::string& s) { p.k = u32(s); });
  take("sigma", [&](const std::string& s) { p.sigma_size = u32(s); });
  take("gamma", [&](const std::string& s) { p.gamma_size = parse_u64(s); });
  take("alpha", [&](const std::string& s) { p.alpha = parse_double(s); });
  take("beta", [&](const std::string& s) { p.beta = parse_double(s); });
  take("mprime", [&](const std::string& s) { p.m_prime = parse_u64(s); });
  take("seed", [&](const std::string& s) { p.seed = parse_u64(s); });
  if (!fields.empty()) {
    const auto& [key, value] = *fields.begin();
    throw FormatError(value.second, "unknown parameter '" + key + "'");
  }
  return p;
}

}  // namespace csppke
