#include "csppke/csp/random_functions.hpp"

#include <stdexcept>
#include <string>

#include "csppke/rng.hpp"
#include "csppke/textio.hpp"

namespace csppke {

namespace {
constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;
}

RandomFunctionStore::RandomFunctionStore(std::uint64_t m, std::uint32_t k, std::uint32_t sigma_size,
                                         std::uint64_t gamma_size, std::uint64_t seed)
    : m_(m), k_(k), sigma_(sigma_size), gamma_(gamma_size), seed_(seed) {
  if (k == 0) throw std::invalid_argument("RandomFunctionStore: k must be positive");
  if (sigma_size < 1) throw std::invalid_argument("RandomFunctionStore: |Σ| must be positive");
  if (gamma_size < 1) throw std::invalid_argument("RandomFunctionStore: |Γ| must be positive");
  domain_ = 1;
  for (std::uint32_t j = 0; j < k; ++j) {
    if (domain_ > (std::uint64_t{1} << 62) / sigma_size) {
      throw std::invalid_argument("RandomFunctionStore: |Σ|^k too large");
    }
    domain_ *= sigma_size;
  }
}

std::uint64_t RandomFunctionStore::function_key(std::size_t i) const {
  return mix64(mix64(seed_ ^ streams::kFunctions) + (static_cast<std::uint64_t>(i) + 1) * kGolden);
}

std::uint64_t RandomFunctionStore::eval_code(std::size_t i, std::uint64_t code) const {
  if (i >= m_) throw std::out_of_range("RandomFunctionStore: function index " + std::to_string(i));
  if (code >= domain_) throw std::out_of_range("RandomFunctionStore: tuple code out of range");
  return value(function_key(i), code);
}

std::uint64_t RandomFunctionStore::value(std::uint64_t key, std::uint64_t code) const {
  return reduce_to(mix64(key + code * kGolden), gamma_);
}

std::uint64_t RandomFunctionStore::eval(std::size_t i, std::span<const Symbol> tuple) const {
  return eval_code(i, encode(tuple));
}

std::uint64_t RandomFunctionStore::encode(std::span<const Symbol> tuple) const {
  if (tuple.size() != k_) throw std::invalid_argument("RandomFunctionStore: tuple has wrong arity");
  std::uint64_t code = 0;
  for (const auto s : tuple) {
    if (s >= sigma_) throw std::invalid_argument("RandomFunctionStore: symbol " + std::to_string(s) + " not in Σ");
    code = code * sigma_ + s;
  }
  return code;
}

std::vector<Symbol> RandomFunctionStore::decode(std::uint64_t code) const {
  std::vector<Symbol> out(k_);
  for (std::size_t j = k_; j-- > 0;) {
    out[j] = static_cast<Symbol>(code % sigma_);
    code /= sigma_;
  }
  return out;
}

bool RandomFunctionStore::distinct_symbols(std::uint64_t code) const {
  const auto t = decode(code);
  for (std::size_t a = 0; a < t.size(); ++a) {
    for (std::size_t b = a + 1; b < t.size(); ++b) {
      if (t[a] == t[b]) return false;
    }
  }
  return true;
}

std::vector<std::uint64_t> enumerate_preimage_codes(const RandomFunctionStore& F, std::size_t i,
                                                    std::uint64_t target, bool distinct_only,
                                                    std::uint64_t budget) {
  if (F.domain_size() > budget) {
    throw BudgetExceeded("enumerate_preimages: domain " + std::to_string(F.domain_size()) +
                         " exceeds budget " + std::to_string(budget));
  }
  if (i >= F.count()) throw std::out_of_range("enumerate_preimages: function index " + std::to_string(i));
  std::vector<std::uint64_t> out;
  const std::uint64_t n = F.domain_size();
  const std::uint64_t key = F.function_key(i);
  for (std::uint64_t code = 0; code < n; ++code) {
    if (F.value(key, code) != target) continue;
    if (distinct_only && !F.distinct_symbols(code)) continue;
    out.push_back(code);
  }
  return out;
}

std::vector<std::vector<Symbol>> enumerate_preimages(const RandomFunctionStore& F, std::size_t i,
                                                     std::uint64_t target, bool distinct_only,
                                                     std::uint64_t budget) {
  std::vector<std::vector<Symbol>> out;
  for (const auto code : enumerate_preimage_codes(F, i, target, distinct_only, budget)) {
    out.push_back(F.decode(code));
  }
  return out;
}

}  // namespace csppke
