#pragma once

#include <cstdint>
#include <iosfwd>
#include <limits>
#include <optional>
#include <stdexcept>
#include <vector>

#include "csppke/csp/random_functions.hpp"
#include "csppke/expander/matrix_gen.hpp"
#include "csppke/f2/bitvec.hpp"
#include "csppke/f2/sparse_matrix.hpp"
#include "csppke/params.hpp"
#include "csppke/rm/distinguisher.hpp"
#include "csppke/rm/rm_code.hpp"

namespace csppke {

class Rng;

inline constexpr std::uint64_t kBot = std::numeric_limits<std::uint64_t>::max();

struct PublicKey {
  SparseRowMatrix H;  ///< m' x |Σ|, k nonzeros per row
  SchemeParams params;
  bool aborted = false;
  bool operator==(const PublicKey&) const = default;
};

struct SecretKey {
  std::vector<std::uint64_t> zeta;  ///< row of H per constraint, or kBot
  SparseRowMatrix G;
  std::uint32_t rm_d = 0;
  std::uint32_t rm_r = 0;
  double z_star = 0;
  SchemeParams params;
  bool aborted = false;

  RmCode code() const { return RmCode(rm_d, rm_r); }
  bool operator==(const SecretKey&) const = default;
};

struct Ciphertext {
  std::optional<BitVec> v;  ///< empty for the abort marker
  bool aborted() const { return !v.has_value(); }
  bool operator==(const Ciphertext&) const = default;
};

enum class AbortReason { none, repeated_symbol, too_many_tuples };
const char* abort_reason_name(AbortReason reason);

struct KeygenOptions {
  bool strict = false;          ///< single attempt, abort instead of retrying
  std::size_t retry_budget = 1000;
  bool random_b = false;        ///< KeyGen': b uniform, so every ζ(i) is BOT
  std::size_t calibration_trials = 200;
  std::optional<double> z_star; ///< skip calibration and use this cutoff
  std::uint64_t enumeration_budget = kDefaultEnumerationBudget;
};

/// White-box view of one keygen run. Never serialized.
struct KeygenWitness {
  RandomFunctionStore F;
  std::vector<Symbol> s;  ///< column j of G corresponds to symbol s_j of H
  std::vector<std::uint64_t> b;
  BitVec corrupted_mask;
  std::uint64_t tuple_count = 0;  ///< |X| after deleting repeated-symbol tuples
  std::size_t attempts = 0;
  AbortReason abort = AbortReason::none;
  std::optional<Calibration> calibration;
};

struct KeyPair {
  PublicKey pk;
  SecretKey sk;
  KeygenWitness witness;
};

/// Desk-mode keygen ran out of retries.
class RetriesExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Strict mode returns aborted keys when an abort condition fires; desk mode
/// resamples s and b instead and throws RetriesExhausted after
/// `retry_budget` failed attempts. Throws std::invalid_argument when gm
/// does not match p and CalibrationFailure when no cutoff separates the
/// decryption channel from random.
KeyPair keygen(const SchemeParams& p, const GeneratedMatrix& gm, Rng& rng, const KeygenOptions& options = {});

struct Encryption {
  Ciphertext ct;
  std::optional<BitVec> t;  ///< the encryption randomness for bit 0
};

Encryption encrypt_with_witness(const PublicKey& pk, int bit, Rng& rng);
Ciphertext encrypt(const PublicKey& pk, int bit, Rng& rng);

/// w_i = v_{ζ(i)} or erased, then the distinguisher. Empty on the abort
/// marker. Throws std::invalid_argument on a length mismatch.
std::optional<int> decrypt(const SecretKey& sk, const Ciphertext& ct, Rng& rng);
/// The received word handed to the distinguisher.
TriVector extract_received_word(const SecretKey& sk, const BitVec& v);

enum class Hybrid { h0, h0_random, h1_random, h1 };
const char* hybrid_name(Hybrid h);

struct HybridSample {
  KeyPair keys;
  Ciphertext ct;
};

/// H0 = (KeyGen, Enc 0), H0$ = (KeyGen', Enc 0), H1$ = (KeyGen', Enc 1),
/// H1 = (KeyGen, Enc 1). Key and encryption streams are rng.derive(0) and
/// rng.derive(1), so H0 and H1 share keys under the same rng.
HybridSample hybrid_sample(Hybrid which, const SchemeParams& p, const GeneratedMatrix& gm, Rng& rng,
                           KeygenOptions options = {});

void write_public_key(std::ostream& out, const PublicKey& pk);
PublicKey read_public_key(LineReader& in);
/// The public key block followed by "ZETA m", m lines "i row|BOT", G as
/// SRM, "RM d r" and "ZSTAR value".
void write_secret_key(std::ostream& out, const PublicKey& pk, const SecretKey& sk);
struct StoredKeys {
  PublicKey pk;
  SecretKey sk;
};
StoredKeys read_secret_key(LineReader& in);

void write_ciphertext(std::ostream& out, const Ciphertext& ct);
Ciphertext read_ciphertext(LineReader& in);

}  // namespace csppke
