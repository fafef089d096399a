#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "csppke/csp/random_functions.hpp"
#include "csppke/f2/bitvec.hpp"
#include "csppke/f2/sparse_matrix.hpp"
#include "csppke/params.hpp"

namespace csppke {

class Rng;

enum class Label { null, planted };

const char* label_name(Label label);
Label parse_label(std::string_view name);

struct LarpInstance {
  SparseRowMatrix H;
  RandomFunctionStore F;
  std::vector<std::uint64_t> b;
  Label label = Label::null;
  std::optional<std::vector<Symbol>> secret;
  std::optional<BitVec> corrupted_mask;  ///< bit i set where b_i was redrawn
};

struct KxorInstance {
  SparseRowMatrix H;
  BitVec b;
  Label label = Label::null;
  std::optional<BitVec> secret;
  std::optional<BitVec> corrupted_mask;
};

/// (s_{N(i,1)}, ..., s_{N(i,k)}) in neighbor order.
std::vector<Symbol> local_tuple(const SparseRowMatrix& H, std::size_t i, const std::vector<Symbol>& s);

struct LarpTargets {
  std::vector<std::uint64_t> b;
  BitVec corrupted_mask;
};

/// Every coordinate draws from its own stream coords.derive(i): first a
/// uniform symbol, then the corruption coin. Null targets use the same first
/// draw, so at alpha = 1 the two agree coordinate for coordinate.
LarpTargets planted_targets(const RandomFunctionStore& F, const SparseRowMatrix& H,
                            const std::vector<Symbol>& s, double alpha, const Rng& coords);
std::vector<std::uint64_t> null_targets(const RandomFunctionStore& F, const Rng& coords);

/// Uniform s ∈ Σ^n.
std::vector<Symbol> random_secret(std::uint32_t n, std::uint32_t sigma_size, Rng& rng);

/// Throws std::invalid_argument if H is not (p.m, p.n, p.k).
LarpInstance sample_larp(const SchemeParams& p, const SparseRowMatrix& H, Label which, Rng& rng);
KxorInstance sample_kxor(const SchemeParams& p, const SparseRowMatrix& H, Label which, Rng& rng);

/// A hyperedge ((j_1, σ_1), ..., (j_k, σ_k)) of the label-extended graph.
struct Edge {
  std::vector<std::uint32_t> coords;
  std::vector<Symbol> symbols;
  auto operator<=>(const Edge&) const = default;
};

struct HypergraphView {
  std::uint32_t n = 0;
  std::uint32_t sigma_size = 0;
  std::uint32_t k = 0;
  std::vector<std::vector<std::uint32_t>> supports;  ///< distinct row supports of H, sorted
  std::vector<Edge> edges;                           ///< sorted, no duplicates

  /// supports.size() * |Σ|^k
  std::uint64_t candidate_count() const;
  bool contains(const Edge& e) const;
};

/// Edge present iff its symbol tuple is a preimage of b_i under f_i for some
/// row i with that support. Throws BudgetExceeded like enumerate_preimages.
HypergraphView to_hypergraph(const LarpInstance& inst, std::uint64_t budget = kDefaultEnumerationBudget);

/// "INSTANCE larp|kxor null|planted", parameter block, "FUNCTIONS seed"
/// (larp only), SRM matrix, "b ..." as decimal symbols. With
/// `include_witness`, "SECRET ..." and "MASK <hex>" lines follow when known.
void write_instance(std::ostream& out, const SchemeParams& p, const LarpInstance& inst, bool include_witness);
void write_instance(std::ostream& out, const SchemeParams& p, const KxorInstance& inst, bool include_witness);

struct InstanceFile {
  SchemeParams params;
  std::optional<LarpInstance> larp;
  std::optional<KxorInstance> kxor;
};
InstanceFile read_instance(LineReader& in);

}  // namespace csppke
