#include <functional>
#include <iostream>
#include <sstream>

#include "cli_support.hpp"
#include "csppke/analysis/correctness.hpp"
#include "csppke/analysis/oracles.hpp"
#include "csppke/analysis/stats.hpp"
#include "csppke/csp/instances.hpp"
#include "csppke/expander/matrix_gen.hpp"
#include "csppke/f2/expansion.hpp"
#include "csppke/pke/scheme.hpp"
#include "csppke/rm/distinguisher.hpp"
#include "csppke/rng.hpp"

using namespace csppke;
using namespace csppke::cli;

namespace {

using Action = std::function<int()>;

struct GenFlags {
  std::string matrix;
  std::optional<std::uint32_t> w;
  std::optional<std::uint32_t> poly_degree;

  void attach(CLI::App& cmd, bool with_matrix) {
    if (with_matrix) cmd.add_option("--matrix", matrix, "Generator matrix file from gen-matrix");
    cmd.add_option("--w", w, "Window bits (default floor(log2(n/k)))");
    cmd.add_option("--poly-degree", poly_degree, "Selector degree (default ceil(log2 n))");
  }

  GenParams params_for(const SchemeParams& p) const {
    std::uint32_t d = 0;
    while ((std::uint64_t{1} << d) < p.m) ++d;
    if ((std::uint64_t{1} << d) != p.m) throw InvalidParams("m = " + std::to_string(p.m) + " is not a power of two");
    GenParams gen;
    try {
      gen = derive_gen_params(p.n, d, p.k);
    } catch (const std::invalid_argument& e) {
      throw InvalidParams(e.what());
    }
    if (w) gen.window_bits = *w;
    if (poly_degree) gen.poly_degree = *poly_degree;
    if (const auto v = validate(gen); !v.empty()) throw InvalidParams(v.front().relation);
    return gen;
  }

  GeneratedMatrix matrix_for(const SchemeParams& p, std::uint64_t seed) const {
    if (!matrix.empty()) {
      auto gm = load(matrix, [](LineReader& in) { return read_generated(in); });
      if (gm.G.rows() != p.m || gm.G.cols() != p.n || gm.G.row_weight() != p.k) {
        throw InvalidParams("matrix in '" + matrix + "' does not match (m, n, k)");
      }
      return gm;
    }
    Rng rng = Rng(seed).derive(streams::kMatrixGen);
    return generate(params_for(p), rng);
  }
};

void add_gen_matrix(CLI::App& app, Action& action) {
  auto* cmd = app.add_subcommand("gen-matrix", "Sample an RM-subcode generator matrix");
  struct Opts {
    std::uint32_t d = 0, n = 0, k = 0;
    std::optional<std::uint32_t> w, poly_degree;
    std::uint64_t seed = 0;
    std::string out;
  };
  auto o = std::make_shared<Opts>();
  cmd->add_option("--d", o->d, "log2 of the number of rows")->required();
  cmd->add_option("--n", o->n, "Width")->required();
  cmd->add_option("--k", o->k, "Blocks per row")->required();
  cmd->add_option("--w", o->w, "Window bits");
  cmd->add_option("--poly-degree", o->poly_degree, "Selector degree");
  cmd->add_option("--seed", o->seed, "Random seed")->required();
  cmd->add_option("--out", o->out, "Output file (default stdout)");
  cmd->callback([o, &action] {
    action = [o] {
      GenParams gen;
      try {
        gen = derive_gen_params(o->n, o->d, o->k);
      } catch (const std::invalid_argument& e) {
        throw InvalidParams(e.what());
      }
      if (o->w) gen.window_bits = *o->w;
      if (o->poly_degree) gen.poly_degree = *o->poly_degree;
      if (const auto v = validate(gen); !v.empty()) throw InvalidParams(v.front().relation);
      Rng rng = Rng(o->seed).derive(streams::kMatrixGen);
      std::ostringstream text;
      write_generated(text, generate(gen, rng));
      write_output(o->out, text.str());
      return kExitOk;
    };
  });
}

void add_keygen(CLI::App& app, Action& action) {
  auto* cmd = app.add_subcommand("keygen", "Generate a key pair");
  struct Opts {
    ParamFlags params;
    GenFlags gen;
    std::uint64_t seed = 0;
    bool strict = false;
    std::size_t retries = 1000;
    std::size_t trials = 200;
    std::optional<double> z_star;
    std::string pk, sk;
  };
  auto o = std::make_shared<Opts>();
  o->params.attach(*cmd);
  o->gen.attach(*cmd, true);
  cmd->add_option("--seed", o->seed, "Random seed")->required();
  cmd->add_flag("--strict", o->strict, "Abort on step-6 conditions instead of retrying");
  cmd->add_option("--retries", o->retries, "Desk-mode retry budget");
  cmd->add_option("--trials", o->trials, "Calibration trials per arm");
  cmd->add_option("--z-star", o->z_star, "Use this cutoff instead of calibrating");
  cmd->add_option("--pk", o->pk, "Public key output file")->required();
  cmd->add_option("--sk", o->sk, "Secret key output file")->required();
  cmd->callback([o, &action] {
    action = [o] {
      const SchemeParams p = o->params.resolve(o->seed, o->strict);
      const GeneratedMatrix gm = o->gen.matrix_for(p, o->seed);
      KeygenOptions options;
      options.strict = o->strict;
      options.retry_budget = o->retries;
      options.calibration_trials = o->trials;
      options.z_star = o->z_star;
      Rng rng = Rng(o->seed).derive(streams::kKeygen);
      const KeyPair kp = keygen(p, gm, rng, options);
      if (kp.pk.aborted) {
        throw StrictAbort(std::string("keygen aborted: ") + abort_reason_name(kp.witness.abort) +
                          " (tuples=" + std::to_string(kp.witness.tuple_count) + ")");
      }
      std::ostringstream pk_text, sk_text;
      write_public_key(pk_text, kp.pk);
      write_secret_key(sk_text, kp.pk, kp.sk);
      write_output(o->pk, pk_text.str());
      write_output(o->sk, sk_text.str());
      std::cout << "keygen attempts=" << kp.witness.attempts << " tuples=" << kp.witness.tuple_count
                << " zstar=" << format_double(kp.sk.z_star) << '\n';
      return kExitOk;
    };
  });
}

void add_encrypt(CLI::App& app, Action& action) {
  auto* cmd = app.add_subcommand("encrypt", "Encrypt one bit");
  struct Opts {
    std::string pk, out;
    int bit = 0;
    std::uint64_t seed = 0;
  };
  auto o = std::make_shared<Opts>();
  cmd->add_option("--pk", o->pk, "Public key file")->required();
  cmd->add_option("--bit", o->bit, "Plaintext bit")->required()->check(CLI::Range(0, 1));
  cmd->add_option("--seed", o->seed, "Random seed")->required();
  cmd->add_option("--out", o->out, "Ciphertext output file (default stdout)");
  cmd->callback([o, &action] {
    action = [o] {
      const PublicKey pk = load(o->pk, [](LineReader& in) { return read_public_key(in); });
      Rng rng = Rng(o->seed).derive(streams::kEncrypt);
      std::ostringstream text;
      write_ciphertext(text, encrypt(pk, o->bit, rng));
      write_output(o->out, text.str());
      return kExitOk;
    };
  });
}

void add_decrypt(CLI::App& app, Action& action) {
  auto* cmd = app.add_subcommand("decrypt", "Decrypt a ciphertext and print the bit");
  struct Opts {
    std::string sk, ct;
    std::uint64_t seed = 0;
  };
  auto o = std::make_shared<Opts>();
  cmd->add_option("--sk", o->sk, "Secret key file")->required();
  cmd->add_option("--ct", o->ct, "Ciphertext file")->required();
  cmd->add_option("--seed", o->seed, "Random seed for erasure filling")->required();
  cmd->callback([o, &action] {
    action = [o] {
      const StoredKeys keys = load(o->sk, [](LineReader& in) { return read_secret_key(in); });
      const Ciphertext ct = load(o->ct, [](LineReader& in) { return read_ciphertext(in); });
      Rng rng = Rng(o->seed).derive(streams::kDecrypt);
      const auto bit = decrypt(keys.sk, ct, rng);
      if (bit) {
        std::cout << *bit << '\n';
      } else {
        std::cout << "ABORT\n";
      }
      return kExitOk;
    };
  });
}

void add_calibrate(CLI::App& app, Action& action) {
  auto* cmd = app.add_subcommand("calibrate", "Estimate the decoding cutoff for RM(d, r)");
  struct Opts {
    std::uint32_t d = 0, r = 0;
    double alpha = 0, beta = 0;
    std::size_t trials = 200;
    std::uint64_t seed = 0;
  };
  auto o = std::make_shared<Opts>();
  cmd->add_option("--d", o->d, "Variables")->required()->check(CLI::Range(1, 20));
  cmd->add_option("--r", o->r, "Degree")->required();
  cmd->add_option("--alpha", o->alpha, "Erasure rate")->required()->check(CLI::Range(0.0, 1.0));
  cmd->add_option("--beta", o->beta, "Corruption rate")->required()->check(CLI::Range(0.0, 1.0));
  cmd->add_option("--trials", o->trials, "Trials per arm");
  cmd->add_option("--seed", o->seed, "Random seed")->required();
  cmd->callback([o, &action] {
    action = [o] {
      if (o->trials < 2) throw InvalidParams("--trials must be at least 2");
      const RmCode code(o->d, o->r);
      Rng rng = Rng(o->seed).derive(streams::kCalibrate);
      Calibration c;
      bool separated = true;
      try {
        c = calibrate_threshold(code, o->alpha, o->beta, o->trials, rng);
      } catch (const CalibrationFailure& e) {
        std::cerr << e.what() << '\n';
        c = e.result();
        separated = false;
      }
      std::cout << "RESULT d=" << o->d << " r=" << o->r << " alpha=" << format_double(o->alpha)
                << " beta=" << format_double(o->beta) << " trials=" << o->trials
                << " z_star=" << format_double(c.z_star) << " mean_noisy=" << format_double(c.mean_noisy)
                << " mean_random=" << format_double(c.mean_random) << " separated=" << separated << '\n';
      return separated ? kExitOk : kExitError;
    };
  });
}

void add_check_expansion(CLI::App& app, Action& action) {
  auto* cmd = app.add_subcommand("check-expansion", "Check (gamma, t)-expansion of a matrix");
  struct Opts {
    std::string matrix, gamma;
    std::size_t t = 0;
    std::uint64_t sampled = 0;
    std::uint64_t budget = 50'000'000;
    std::optional<std::uint64_t> seed;
  };
  auto o = std::make_shared<Opts>();
  cmd->add_option("--matrix", o->matrix, "SRM matrix file")->required();
  cmd->add_option("--gamma", o->gamma, "Expansion factor, e.g. 0.75 or 3/4")->required();
  cmd->add_option("--t", o->t, "Largest subset size")->required();
  cmd->add_option("--sampled", o->sampled, "Random subsets per size instead of exhaustive search");
  cmd->add_option("--budget", o->budget, "Exhaustive subset budget");
  cmd->add_option("--seed", o->seed, "Random seed (sampled mode)");
  cmd->callback([o, &action] {
    action = [o] {
      Rational gamma;
      try {
        gamma = Rational::parse(o->gamma);
      } catch (const std::invalid_argument& e) {
        throw InvalidParams(e.what());
      }
      const auto M = load(o->matrix, [](LineReader& in) { return read_srm(in); });
      ExpansionVerdict verdict;
      try {
        if (o->sampled > 0) {
          if (!o->seed) throw InvalidParams("--seed is required with --sampled");
          Rng rng = Rng(*o->seed).derive(streams::kTrials);
          verdict = check_expansion(M, gamma, o->t, ExpansionMode::sampled(o->sampled), &rng);
        } else {
          verdict = check_expansion(M, gamma, o->t, ExpansionMode::exhaustive(o->budget));
        }
      } catch (const std::invalid_argument& e) {
        throw InvalidParams(e.what());
      }
      const char* status = verdict.status == ExpansionVerdict::Status::pass   ? "PASS"
                           : verdict.status == ExpansionVerdict::Status::fail ? "FAIL"
                                                                               : "INCONCLUSIVE";
      std::cout << status;
      if (verdict.status == ExpansionVerdict::Status::fail) {
        std::cout << " rows";
        for (const auto r : verdict.counterexample) std::cout << ' ' << r;
      }
      std::cout << "\nRESULT status=" << status << " gamma=" << gamma.to_string() << " t=" << o->t
                << " subsets=" << verdict.subsets_checked << '\n';
      return kExitOk;
    };
  });
}

void add_sample_instance(CLI::App& app, Action& action) {
  auto* cmd = app.add_subcommand("sample-instance", "Sample a LARP or kXOR instance");
  struct Opts {
    ParamFlags params;
    std::string kind = "larp", dist = "planted", matrix, out;
    bool include_witness = false;
    std::uint64_t seed = 0;
  };
  auto o = std::make_shared<Opts>();
  o->params.attach(*cmd);
  cmd->add_option("--kind", o->kind, "larp or kxor")->check(CLI::IsMember({"larp", "kxor"}));
  cmd->add_option("--dist", o->dist, "null or planted")->check(CLI::IsMember({"null", "planted"}));
  cmd->add_option("--matrix", o->matrix, "SRM matrix file (default: random (m, n, k)-matrix)");
  cmd->add_flag("--include-witness", o->include_witness, "Write the secret and corruption mask");
  cmd->add_option("--seed", o->seed, "Random seed")->required();
  cmd->add_option("--out", o->out, "Output file (default stdout)");
  cmd->callback([o, &action] {
    action = [o] {
      const SchemeParams p = o->params.resolve(o->seed, false);
      SparseRowMatrix H;
      if (o->matrix.empty()) {
        Rng rng = Rng(o->seed).derive(streams::kMatrixGen);
        H = random_mnk_matrix(p.m, p.n, p.k, rng);
      } else {
        H = load(o->matrix, [](LineReader& in) { return read_srm(in); });
        if (H.rows() != p.m || H.cols() != p.n || H.row_weight() != p.k) {
          throw InvalidParams("matrix in '" + o->matrix + "' does not match (m, n, k)");
        }
      }
      Rng rng = Rng(o->seed).derive(streams::kInstance);
      const Label label = parse_label(o->dist);
      std::ostringstream text;
      if (o->kind == "larp") {
        write_instance(text, p, sample_larp(p, H, label, rng), o->include_witness);
      } else {
        write_instance(text, p, sample_kxor(p, H, label, rng), o->include_witness);
      }
      write_output(o->out, text.str());
      return kExitOk;
    };
  });
}

void add_bench_correctness(CLI::App& app, Action& action) {
  auto* cmd = app.add_subcommand("bench-correctness", "Measure Pr[Dec(Enc(b)) = b]");
  struct Opts {
    ParamFlags params;
    GenFlags gen;
    std::size_t keys = 10, trials = 200, retries = 1000, calibration_trials = 200;
    std::uint64_t seed = 0;
  };
  auto o = std::make_shared<Opts>();
  o->params.attach(*cmd);
  o->gen.attach(*cmd, false);
  cmd->add_option("--keys", o->keys, "Independent key pairs");
  cmd->add_option("--trials", o->trials, "Encrypt/decrypt round trips");
  cmd->add_option("--retries", o->retries, "Desk-mode retry budget per key");
  cmd->add_option("--calibration-trials", o->calibration_trials, "Calibration trials per arm");
  cmd->add_option("--seed", o->seed, "Random seed")->required();
  cmd->callback([o, &action] {
    action = [o] {
      const SchemeParams p = o->params.resolve(o->seed, false);
      const GenParams gen = o->gen.params_for(p);
      KeygenOptions options;
      options.retry_budget = o->retries;
      options.calibration_trials = o->calibration_trials;
      Rng rng = Rng(o->seed).derive(streams::kTrials);
      const auto report = measure_correctness(p, gen, o->keys, o->trials, rng, options);
      std::cout << "RESULT " << format_report(report) << '\n';
      return kExitOk;
    };
  });
}

void add_bench_advantage(CLI::App& app, Action& action) {
  auto* cmd = app.add_subcommand("bench-advantage", "Estimate a distinguisher's advantage");
  struct Opts {
    ParamFlags params;
    GenFlags gen;
    std::string mode = "decrypt";
    std::size_t trials = 200, tolerance = 0;
    std::uint64_t seed = 0;
  };
  auto o = std::make_shared<Opts>();
  o->params.attach(*cmd);
  o->gen.attach(*cmd, false);
  cmd->add_option("--mode", o->mode, "decrypt | kxor-first-bit | kxor-brute-force")
      ->check(CLI::IsMember({"decrypt", "kxor-first-bit", "kxor-brute-force"}));
  cmd->add_option("--trials", o->trials, "Trials per arm (at least 30)");
  cmd->add_option("--tolerance", o->tolerance, "Violations allowed by kxor-brute-force");
  cmd->add_option("--seed", o->seed, "Random seed")->required();
  cmd->callback([o, &action] {
    action = [o] {
      if (o->trials < 30) throw InvalidParams("--trials must be at least 30");
      const SchemeParams p = o->params.resolve(o->seed, false);
      Rng rng = Rng(o->seed).derive(streams::kTrials);
      AdvantageReport report;
      if (o->mode == "decrypt") {
        // Planted arm: encryptions of 0. Null arm: encryptions of 1.
        Rng matrix_stream = Rng(o->seed).derive(streams::kMatrixGen);
        Rng key_stream = Rng(o->seed).derive(streams::kKeygen);
        const auto gm = generate(o->gen.params_for(p), matrix_stream);
        const KeyPair kp = keygen(p, gm, key_stream);
        report = estimate_advantage([&](Rng& r) { return encrypt(kp.pk, 1, r); },
                                    [&](Rng& r) { return encrypt(kp.pk, 0, r); },
                                    [&](const Ciphertext& ct, Rng& r) {
                                      const auto bit = decrypt(kp.sk, ct, r);
                                      return bit && *bit == 0 ? 1 : 0;
                                    },
                                    o->trials, rng);
      } else {
        Rng matrix_stream = Rng(o->seed).derive(streams::kMatrixGen);
        const SparseRowMatrix H = random_mnk_matrix(p.m, p.n, p.k, matrix_stream);
        auto null = [&](Rng& r) { return sample_kxor(p, H, Label::null, r); };
        auto planted = [&](Rng& r) { return sample_kxor(p, H, Label::planted, r); };
        if (o->mode == "kxor-first-bit") {
          report = estimate_advantage(null, planted, [](const KxorInstance& inst, Rng&) { return inst.b.get(0) ? 1 : 0; },
                                      o->trials, rng);
        } else {
          const std::size_t tolerance = o->tolerance;
          report = estimate_advantage(
              null, planted,
              [tolerance](const KxorInstance& inst, Rng&) { return brute_force_secret(inst, tolerance) ? 1 : 0; },
              o->trials, rng);
        }
      }
      std::cout << "RESULT mode=" << o->mode << ' ' << format_report(report) << '\n';
      return kExitOk;
    };
  });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Public-key encryption from high-corruption CSPs"};
  app.require_subcommand(1, 1);
  Action action;
  add_gen_matrix(app, action);
  add_keygen(app, action);
  add_encrypt(app, action);
  add_decrypt(app, action);
  add_calibrate(app, action);
  add_check_expansion(app, action);
  add_sample_instance(app, action);
  add_bench_correctness(app, action);
  add_bench_advantage(app, action);
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInvalid;
  }
  try {
    return action();
  } catch (const InvalidParams& e) {
    std::cerr << "invalid parameters: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const StrictAbort& e) {
    std::cerr << e.what() << '\n';
    return kExitAbort;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }
}
