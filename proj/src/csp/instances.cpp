#include "csppke/csp/instances.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>
#include <string>

#include "csppke/rng.hpp"

namespace csppke {

const char* label_name(Label label) { return label == Label::null ? "null" : "planted"; }

Label parse_label(std::string_view name) {
  if (name == "null") return Label::null;
  if (name == "planted") return Label::planted;
  throw std::invalid_argument("unknown distribution '" + std::string(name) + "', expected null or planted");
}

std::vector<Symbol> local_tuple(const SparseRowMatrix& H, std::size_t i, const std::vector<Symbol>& s) {
  std::vector<Symbol> out;
  out.reserve(H.row_weight());
  for (const auto j : H.row(i)) out.push_back(s.at(j));
  return out;
}

LarpTargets planted_targets(const RandomFunctionStore& F, const SparseRowMatrix& H,
                            const std::vector<Symbol>& s, double alpha, const Rng& coords) {
  if (!(alpha >= 0 && alpha <= 1)) throw std::invalid_argument("planted_targets: alpha out of [0,1]");
  if (H.rows() != F.count() || H.row_weight() != F.arity() || s.size() != H.cols()) {
    throw std::invalid_argument("planted_targets: dimensions of H, F and s disagree");
  }
  LarpTargets out{std::vector<std::uint64_t>(H.rows()), BitVec(H.rows())};
  for (std::size_t i = 0; i < H.rows(); ++i) {
    Rng r = coords.derive(i);
    const std::uint64_t redraw = r.below(F.gamma_size());
    if (r.bernoulli(alpha)) {
      out.b[i] = redraw;
      out.corrupted_mask.set(i, true);
    } else {
      out.b[i] = F.eval(i, local_tuple(H, i, s));
    }
  }
  return out;
}

std::vector<std::uint64_t> null_targets(const RandomFunctionStore& F, const Rng& coords) {
  std::vector<std::uint64_t> b(F.count());
  for (std::size_t i = 0; i < b.size(); ++i) {
    Rng r = coords.derive(i);
    b[i] = r.below(F.gamma_size());
  }
  return b;
}

std::vector<Symbol> random_secret(std::uint32_t n, std::uint32_t sigma_size, Rng& rng) {
  std::vector<Symbol> s(n);
  for (auto& x : s) x = static_cast<Symbol>(rng.below(sigma_size));
  return s;
}

namespace {

void check_shape(const SchemeParams& p, const SparseRowMatrix& H, const char* who) {
  if (H.rows() != p.m || H.cols() != p.n || H.row_weight() != p.k) {
    throw std::invalid_argument(std::string(who) + ": H is (" + std::to_string(H.rows()) + ", " +
                                std::to_string(H.cols()) + ", " + std::to_string(H.row_weight()) +
                                "), params say (" + std::to_string(p.m) + ", " + std::to_string(p.n) + ", " +
                                std::to_string(p.k) + ")");
  }
}

void check_rate(double rate, const char* name) {
  if (!(rate >= 0 && rate <= 1)) throw std::invalid_argument(std::string(name) + " out of [0,1]");
}

}  // namespace

LarpInstance sample_larp(const SchemeParams& p, const SparseRowMatrix& H, Label which, Rng& rng) {
  check_shape(p, H, "sample_larp");
  check_rate(p.alpha, "alpha");
  LarpInstance inst;
  inst.H = H;
  inst.label = which;
  inst.F = RandomFunctionStore(p.m, p.k, p.sigma_size, p.gamma_size, rng.derive(0)());
  const Rng coords = rng.derive(2);
  if (which == Label::null) {
    inst.b = null_targets(inst.F, coords);
  } else {
    Rng secret_stream = rng.derive(1);
    auto s = random_secret(p.n, p.sigma_size, secret_stream);
    auto targets = planted_targets(inst.F, H, s, p.alpha, coords);
    inst.b = std::move(targets.b);
    inst.corrupted_mask = std::move(targets.corrupted_mask);
    inst.secret = std::move(s);
  }
  rng();
  return inst;
}

KxorInstance sample_kxor(const SchemeParams& p, const SparseRowMatrix& H, Label which, Rng& rng) {
  check_shape(p, H, "sample_kxor");
  check_rate(p.beta, "beta");
  KxorInstance inst;
  inst.H = H;
  inst.label = which;
  inst.b = BitVec(H.rows());
  const Rng coords = rng.derive(2);
  if (which == Label::null) {
    for (std::size_t i = 0; i < H.rows(); ++i) {
      Rng r = coords.derive(i);
      inst.b.set(i, r.bit());
    }
  } else {
    Rng secret_stream = rng.derive(1);
    const BitVec s = BitVec::random(p.n, secret_stream);
    const BitVec parity = matvec(H, s);
    BitVec mask(H.rows());
    for (std::size_t i = 0; i < H.rows(); ++i) {
      Rng r = coords.derive(i);
      const bool redraw = r.bit();
      if (r.bernoulli(p.beta)) {
        inst.b.set(i, redraw);
        mask.set(i, true);
      } else {
        inst.b.set(i, parity.get(i));
      }
    }
    inst.secret = s;
    inst.corrupted_mask = std::move(mask);
  }
  rng();
  return inst;
}

std::uint64_t HypergraphView::candidate_count() const { return supports.size() * domain_size(sigma_size, k); }

bool HypergraphView::contains(const Edge& e) const { return std::binary_search(edges.begin(), edges.end(), e); }

HypergraphView to_hypergraph(const LarpInstance& inst, std::uint64_t budget) {
  HypergraphView view;
  view.n = static_cast<std::uint32_t>(inst.H.cols());
  view.sigma_size = inst.F.sigma_size();
  view.k = inst.F.arity();
  for (std::size_t i = 0; i < inst.H.rows(); ++i) {
    const auto row = inst.H.row(i);
    std::vector<std::uint32_t> coords(row.begin(), row.end());
    for (const auto code : enumerate_preimage_codes(inst.F, i, inst.b.at(i), false, budget)) {
      view.edges.push_back(Edge{coords, inst.F.decode(code)});
    }
    view.supports.push_back(std::move(coords));
  }
  std::sort(view.supports.begin(), view.supports.end());
  view.supports.erase(std::unique(view.supports.begin(), view.supports.end()), view.supports.end());
  std::sort(view.edges.begin(), view.edges.end());
  view.edges.erase(std::unique(view.edges.begin(), view.edges.end()), view.edges.end());
  return view;
}

namespace {

template <typename Inst>
void write_common(std::ostream& out, const char* kind, const SchemeParams& p, const Inst& inst) {
  out << "INSTANCE " << kind << ' ' << label_name(inst.label) << '\n';
  write_params(out, p);
}

void write_mask(std::ostream& out, const std::optional<BitVec>& mask) {
  if (mask) out << "MASK " << to_hex(*mask) << '\n';
}

std::vector<std::uint64_t> parse_list(LineReader& in, std::string_view tag, std::size_t expected) {
  const std::string line = in.next(tag);
  const auto tokens = split_ws(line);
  if (tokens.empty() || tokens[0] != tag) in.fail("expected '" + std::string(tag) + " ...'");
  if (tokens.size() != expected + 1) {
    in.fail(std::string(tag) + ": expected " + std::to_string(expected) + " values, found " +
            std::to_string(tokens.size() - 1));
  }
  std::vector<std::uint64_t> out;
  out.reserve(expected);
  try {
    for (std::size_t j = 1; j < tokens.size(); ++j) out.push_back(parse_u64(tokens[j]));
  } catch (const std::invalid_argument& e) {
    in.fail(e.what());
  }
  return out;
}

}  // namespace

void write_instance(std::ostream& out, const SchemeParams& p, const LarpInstance& inst, bool include_witness) {
  write_common(out, "larp", p, inst);
  out << "FUNCTIONS " << inst.F.seed() << '\n';
  write_srm(out, inst.H);
  out << 'b';
  for (const auto v : inst.b) out << ' ' << v;
  out << '\n';
  if (!include_witness) return;
  if (inst.secret) {
    out << "SECRET";
    for (const auto v : *inst.secret) out << ' ' << v;
    out << '\n';
  }
  write_mask(out, inst.corrupted_mask);
}

void write_instance(std::ostream& out, const SchemeParams& p, const KxorInstance& inst, bool include_witness) {
  write_common(out, "kxor", p, inst);
  write_srm(out, inst.H);
  out << 'b';
  for (std::size_t i = 0; i < inst.b.size(); ++i) out << ' ' << inst.b.get(i);
  out << '\n';
  if (!include_witness) return;
  if (inst.secret) {
    out << "SECRET";
    for (std::size_t i = 0; i < inst.secret->size(); ++i) out << ' ' << inst.secret->get(i);
    out << '\n';
  }
  write_mask(out, inst.corrupted_mask);
}

InstanceFile read_instance(LineReader& in) {
  const std::string header = in.next("INSTANCE header");
  const auto tokens = split_ws(header);
  if (tokens.size() != 3 || tokens[0] != "INSTANCE" || (tokens[1] != "larp" && tokens[1] != "kxor")) {
    in.fail("expected 'INSTANCE larp|kxor null|planted'");
  }
  Label label{};
  try {
    label = parse_label(tokens[2]);
  } catch (const std::invalid_argument& e) {
    in.fail(e.what());
  }
  const bool larp = tokens[1] == "larp";
  InstanceFile file;
  file.params = read_params(in);
  const auto& p = file.params;

  std::uint64_t function_seed = 0;
  if (larp) {
    const std::string line = in.next("FUNCTIONS line");
    const auto parts = split_ws(line);
    if (parts.size() != 2 || parts[0] != "FUNCTIONS") in.fail("expected 'FUNCTIONS seed'");
    try {
      function_seed = parse_u64(parts[1]);
    } catch (const std::invalid_argument& e) {
      in.fail(e.what());
    }
  }
  SparseRowMatrix H = read_srm(in);
  if (H.rows() != p.m || H.cols() != p.n || H.row_weight() != p.k) in.fail("matrix shape disagrees with params");
  const auto b = parse_list(in, "b", H.rows());
  const std::uint64_t b_bound = larp ? p.gamma_size : 2;
  for (const auto v : b) {
    if (v >= b_bound) in.fail("b value " + std::to_string(v) + (larp ? " not in Γ" : " is not a bit"));
  }

  std::optional<std::vector<std::uint64_t>> secret;
  std::optional<BitVec> mask;
  std::string line;
  if (in.peek(line) && line.rfind("SECRET", 0) == 0) {
    secret = parse_list(in, "SECRET", p.n);
    const std::uint64_t s_bound = larp ? p.sigma_size : 2;
    for (const auto v : *secret) {
      if (v >= s_bound) in.fail("SECRET value " + std::to_string(v) + " out of range");
    }
  }
  if (in.peek(line) && line.rfind("MASK", 0) == 0) {
    in.next("MASK");
    try {
      mask = from_hex(std::string_view(line).substr(5));
    } catch (const std::invalid_argument& e) {
      in.fail(e.what());
    }
    if (mask->size() != H.rows()) in.fail("MASK length disagrees with m");
  }

  if (larp) {
    LarpInstance inst;
    inst.F = RandomFunctionStore(p.m, p.k, p.sigma_size, p.gamma_size, function_seed);
    inst.b = b;
    if (secret) inst.secret = std::vector<Symbol>(secret->begin(), secret->end());
    inst.H = std::move(H);
    inst.label = label;
    inst.corrupted_mask = std::move(mask);
    file.larp = std::move(inst);
  } else {
    KxorInstance inst;
    inst.b = BitVec(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) inst.b.set(i, b[i] == 1);
    if (secret) {
      BitVec s(secret->size());
      for (std::size_t j = 0; j < secret->size(); ++j) s.set(j, (*secret)[j] == 1);
      inst.secret = std::move(s);
    }
    inst.H = std::move(H);
    inst.label = label;
    inst.corrupted_mask = std::move(mask);
    file.kxor = std::move(inst);
  }
  return file;
}

}  // namespace csppke
