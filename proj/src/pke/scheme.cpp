#include "csppke/pke/scheme.hpp"

#include <algorithm>
#include <ostream>
#include <string>
#include <unordered_map>

#include "csppke/csp/instances.hpp"
#include "csppke/f2/channel.hpp"
#include "csppke/rng.hpp"

namespace csppke {

namespace {
constexpr const char* kKeyMagic = "CSPPKE1";
constexpr const char* kCiphertextMagic = "CSPCT1";
}  // namespace

const char* abort_reason_name(AbortReason reason) {
  switch (reason) {
    case AbortReason::none: return "none";
    case AbortReason::repeated_symbol: return "repeated-symbol";
    case AbortReason::too_many_tuples: return "too-many-tuples";
  }
  return "unknown";
}

const char* hybrid_name(Hybrid h) {
  switch (h) {
    case Hybrid::h0: return "H0";
    case Hybrid::h0_random: return "H0$";
    case Hybrid::h1_random: return "H1$";
    case Hybrid::h1: return "H1";
  }
  return "unknown";
}

namespace {

bool has_repeat(const std::vector<Symbol>& s, std::uint32_t sigma_size) {
  std::vector<bool> seen(sigma_size, false);
  for (const auto x : s) {
    if (seen[x]) return true;
    seen[x] = true;
  }
  return false;
}

// Sorted indicator support of a distinct-symbol tuple.
std::vector<std::uint32_t> indicator(std::vector<Symbol> tuple) {
  std::sort(tuple.begin(), tuple.end());
  return {tuple.begin(), tuple.end()};
}

void shuffle_rows(std::vector<std::vector<std::uint32_t>>& rows, std::vector<std::uint64_t>& position, Rng& rng) {
  // position[r] follows row r through the permutation.
  std::vector<std::uint64_t> where(rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r) where[r] = r;
  for (std::size_t r = rows.size(); r > 1; --r) {
    const std::size_t j = rng.below(r);
    std::swap(rows[r - 1], rows[j]);
    std::swap(where[r - 1], where[j]);
  }
  position.assign(rows.size(), 0);
  for (std::size_t r = 0; r < rows.size(); ++r) position[where[r]] = r;
}

}  // namespace

KeyPair keygen(const SchemeParams& p, const GeneratedMatrix& gm, Rng& rng, const KeygenOptions& options) {
  if (const auto v = validate(p, options.strict); has_errors(v)) {
    for (const auto& violation : v) {
      if (violation.severity == Violation::Severity::error) throw std::invalid_argument("keygen: " + violation.relation);
    }
  }
  const auto& G = gm.G;
  if (G.rows() != p.m || G.cols() != p.n || G.row_weight() != p.k) {
    throw std::invalid_argument("keygen: generator matrix is not (" + std::to_string(p.m) + ", " +
                                std::to_string(p.n) + ", " + std::to_string(p.k) + ")");
  }
  if (!options.strict && p.n > p.sigma_size) {
    // Every s repeats a symbol, so no retry can succeed.
    throw std::invalid_argument("keygen: n = " + std::to_string(p.n) + " exceeds |Σ| = " +
                                std::to_string(p.sigma_size));
  }

  KeyPair out;
  auto& wit = out.witness;
  wit.F = RandomFunctionStore(p.m, p.k, p.sigma_size, p.gamma_size, rng.derive(0)());
  const Rng attempts_root = rng.derive(1);
  const std::size_t max_attempts = options.strict ? 1 : options.retry_budget;

  std::vector<std::uint64_t> tuple_codes;  // X in insertion order
  std::unordered_map<std::uint64_t, std::uint64_t> row_of_code;
  bool success = false;
  for (std::size_t attempt = 0; attempt < max_attempts && !success; ++attempt) {
    wit.attempts = attempt + 1;
    Rng a = attempts_root.derive(attempt);
    Rng secret_stream = a.derive(0);
    wit.s = random_secret(p.n, p.sigma_size, secret_stream);
    if (has_repeat(wit.s, p.sigma_size)) {
      wit.abort = AbortReason::repeated_symbol;
      continue;
    }
    const Rng coords = a.derive(1);
    if (options.random_b) {
      wit.b = null_targets(wit.F, coords);
      wit.corrupted_mask = BitVec(p.m);
      for (std::size_t i = 0; i < p.m; ++i) wit.corrupted_mask.set(i, true);
    } else {
      auto targets = planted_targets(wit.F, G, wit.s, p.alpha, coords);
      wit.b = std::move(targets.b);
      wit.corrupted_mask = std::move(targets.corrupted_mask);
    }

    tuple_codes.clear();
    row_of_code.clear();
    bool overflow = false;
    for (std::size_t i = 0; i < p.m && !overflow; ++i) {
      for (const auto code : enumerate_preimage_codes(wit.F, i, wit.b[i], true, options.enumeration_budget)) {
        if (row_of_code.emplace(code, tuple_codes.size()).second) {
          tuple_codes.push_back(code);
          if (tuple_codes.size() > p.m_prime) {
            overflow = true;
            break;
          }
        }
      }
    }
    wit.tuple_count = tuple_codes.size();
    if (overflow) {
      wit.abort = AbortReason::too_many_tuples;
      continue;
    }
    wit.abort = AbortReason::none;
    success = true;
  }

  out.pk.params = p;
  out.sk.params = p;
  if (!success) {
    if (!options.strict) {
      throw RetriesExhausted("keygen: no successful attempt in " + std::to_string(max_attempts) +
                             " tries (last abort: " + abort_reason_name(wit.abort) + ")");
    }
    out.pk.aborted = true;
    out.sk.aborted = true;
    return out;
  }

  Rng assemble_stream = rng.derive(2);
  std::vector<std::vector<std::uint32_t>> rows;
  rows.reserve(p.m_prime);
  for (const auto code : tuple_codes) rows.push_back(indicator(wit.F.decode(code)));
  while (rows.size() < p.m_prime) {
    const auto pad = random_k_subset(p.sigma_size, p.k, assemble_stream);
    rows.emplace_back(pad.begin(), pad.end());
  }
  std::vector<std::uint64_t> position;
  shuffle_rows(rows, position, assemble_stream);
  out.pk.H = SparseRowMatrix::from_rows(p.sigma_size, p.k, rows);

  out.sk.zeta.assign(p.m, kBot);
  for (std::size_t i = 0; i < p.m; ++i) {
    if (wit.corrupted_mask.get(i)) continue;
    const auto code = wit.F.encode(local_tuple(G, i, wit.s));
    out.sk.zeta[i] = position.at(row_of_code.at(code));
  }
  out.sk.G = G;
  out.sk.rm_d = gm.gen.d;
  out.sk.rm_r = gm.column_degree_bound();
  if (options.z_star) {
    out.sk.z_star = *options.z_star;
  } else {
    Rng calibration_stream = rng.derive(3);
    wit.calibration = calibrate_threshold(out.sk.code(), p.alpha, p.beta, options.calibration_trials,
                                          calibration_stream);
    out.sk.z_star = wit.calibration->z_star;
  }
  rng();
  return out;
}

Encryption encrypt_with_witness(const PublicKey& pk, int bit, Rng& rng) {
  if (bit != 0 && bit != 1) throw std::invalid_argument("encrypt: bit must be 0 or 1");
  Encryption out;
  if (pk.aborted) return out;
  if (bit == 0) {
    Rng t_stream = rng.derive(0);
    Rng noise = rng.derive(1);
    out.t = BitVec::random(pk.H.cols(), t_stream);
    out.ct.v = apply_corruption(matvec(pk.H, *out.t), pk.params.beta, noise);
  } else {
    Rng uniform = rng.derive(2);
    out.ct.v = BitVec::random(pk.H.rows(), uniform);
  }
  rng();
  return out;
}

Ciphertext encrypt(const PublicKey& pk, int bit, Rng& rng) { return encrypt_with_witness(pk, bit, rng).ct; }

TriVector extract_received_word(const SecretKey& sk, const BitVec& v) {
  TriVector w(sk.zeta.size());
  for (std::size_t i = 0; i < sk.zeta.size(); ++i) {
    if (sk.zeta[i] == kBot) continue;
    if (sk.zeta[i] >= v.size()) {
      throw std::invalid_argument("decrypt: ciphertext has " + std::to_string(v.size()) + " coordinates, key refers to row " +
                                  std::to_string(sk.zeta[i]));
    }
    w.set_bit(i, v.get(sk.zeta[i]));
  }
  return w;
}

std::optional<int> decrypt(const SecretKey& sk, const Ciphertext& ct, Rng& rng) {
  if (ct.aborted() || sk.aborted) return std::nullopt;
  if (ct.v->size() != sk.params.m_prime) {
    throw std::invalid_argument("decrypt: ciphertext length " + std::to_string(ct.v->size()) + ", expected " +
                                std::to_string(sk.params.m_prime));
  }
  const TriVector w = extract_received_word(sk, *ct.v);
  return distinguish(sk.code(), w, sk.z_star, rng);
}

HybridSample hybrid_sample(Hybrid which, const SchemeParams& p, const GeneratedMatrix& gm, Rng& rng,
                           KeygenOptions options) {
  options.random_b = which == Hybrid::h0_random || which == Hybrid::h1_random;
  const int bit = which == Hybrid::h0 || which == Hybrid::h0_random ? 0 : 1;
  Rng key_stream = rng.derive(0);
  Rng enc_stream = rng.derive(1);
  HybridSample out{keygen(p, gm, key_stream, options), {}};
  out.ct = encrypt(out.keys.pk, bit, enc_stream);
  rng();
  return out;
}

namespace {

void expect_magic(LineReader& in, const char* magic) {
  if (in.next(magic) != magic) in.fail(std::string("expected magic '") + magic + "'");
}

}  // namespace

void write_public_key(std::ostream& out, const PublicKey& pk) {
  if (pk.aborted) throw std::invalid_argument("write_public_key: key generation aborted");
  out << kKeyMagic << '\n';
  write_params(out, pk.params);
  write_srm(out, pk.H);
}

PublicKey read_public_key(LineReader& in) {
  expect_magic(in, kKeyMagic);
  PublicKey pk;
  pk.params = read_params(in);
  pk.H = read_srm(in);
  if (pk.H.rows() != pk.params.m_prime || pk.H.cols() != pk.params.sigma_size || pk.H.row_weight() != pk.params.k) {
    in.fail("public matrix shape disagrees with params (expected mprime x sigma with k per row)");
  }
  return pk;
}

void write_secret_key(std::ostream& out, const PublicKey& pk, const SecretKey& sk) {
  if (sk.aborted) throw std::invalid_argument("write_secret_key: key generation aborted");
  write_public_key(out, pk);
  out << "ZETA " << sk.zeta.size() << '\n';
  for (std::size_t i = 0; i < sk.zeta.size(); ++i) {
    out << i << ' ';
    if (sk.zeta[i] == kBot) {
      out << "BOT";
    } else {
      out << sk.zeta[i];
    }
    out << '\n';
  }
  write_srm(out, sk.G);
  out << "RM " << sk.rm_d << ' ' << sk.rm_r << '\n';
  out << "ZSTAR " << format_double(sk.z_star) << '\n';
}

StoredKeys read_secret_key(LineReader& in) {
  StoredKeys keys;
  keys.pk = read_public_key(in);
  auto& sk = keys.sk;
  sk.params = keys.pk.params;
  const auto& p = sk.params;
  try {
    const std::string header = in.next("ZETA header");
    const auto tokens = split_ws(header);
    if (tokens.size() != 2 || tokens[0] != "ZETA") in.fail("expected 'ZETA m'");
    if (parse_u64(tokens[1]) != p.m) in.fail("ZETA count disagrees with m");
    sk.zeta.assign(p.m, kBot);
    for (std::size_t i = 0; i < p.m; ++i) {
      const std::string line = in.next("zeta entry");
      const auto parts = split_ws(line);
      if (parts.size() != 2) in.fail("expected 'i row|BOT'");
      if (parse_u64(parts[0]) != i) in.fail("zeta entries out of order");
      if (parts[1] != "BOT") {
        const auto row = parse_u64(parts[1]);
        if (row >= p.m_prime) in.fail("zeta row " + std::to_string(row) + " out of range");
        sk.zeta[i] = row;
      }
    }
    sk.G = read_srm(in);
    if (sk.G.rows() != p.m || sk.G.cols() != p.n || sk.G.row_weight() != p.k) in.fail("G shape disagrees with params");
    const std::string rm = in.next("RM line");
    const auto rm_parts = split_ws(rm);
    if (rm_parts.size() != 3 || rm_parts[0] != "RM") in.fail("expected 'RM d r'");
    sk.rm_d = static_cast<std::uint32_t>(parse_u64(rm_parts[1]));
    sk.rm_r = static_cast<std::uint32_t>(parse_u64(rm_parts[2]));
    if ((std::uint64_t{1} << sk.rm_d) != p.m) in.fail("RM length 2^d disagrees with m");
    const std::string z = in.next("ZSTAR line");
    const auto z_parts = split_ws(z);
    if (z_parts.size() != 2 || z_parts[0] != "ZSTAR") in.fail("expected 'ZSTAR value'");
    sk.z_star = parse_double(z_parts[1]);
  } catch (const std::invalid_argument& e) {
    in.fail(e.what());
  }
  return keys;
}

void write_ciphertext(std::ostream& out, const Ciphertext& ct) {
  out << kCiphertextMagic << '\n';
  if (ct.aborted()) {
    out << "ABORT\n";
  } else {
    out << to_hex(*ct.v) << '\n';
  }
}

Ciphertext read_ciphertext(LineReader& in) {
  expect_magic(in, kCiphertextMagic);
  const std::string line = in.next("ciphertext body");
  Ciphertext ct;
  if (line == "ABORT") return ct;
  try {
    ct.v = from_hex(line);
  } catch (const std::invalid_argument& e) {
    in.fail(e.what());
  }
  return ct;
}

}  // namespace csppke
