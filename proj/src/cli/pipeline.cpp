#include "addcomb/cli/pipeline.hpp"

#include "addcomb/cli/io.hpp"
#include "addcomb/cli/report.hpp"
#include "addcomb/colorings/construct.hpp"
#include "addcomb/colorings/verify.hpp"
#include "addcomb/core/errors.hpp"
#include "addcomb/sets/behrend.hpp"
#include "addcomb/sets/solution_free.hpp"
#include "addcomb/torus/torus_set.hpp"

namespace addcomb::cli {

namespace {

namespace fs = std::filesystem;
using colorings::Coloring;
using core::PatternSpec;

class Run {
 public:
  explicit Run(const PipelineOptions& o) : opts(o) {
    report = report_header("pipeline", o.seed, o.budgets);
    report["pipeline"] = o.name;
    report["parameters"] = {{"ell", o.ell}, {"k", o.k}, {"N", o.N}, {"workers", o.workers}};
    report["stages"] = Json::array();
  }

  // Runs f under a stage name: library errors become non-violation StageErrors.
  template <class F>
  auto stage(const std::string& name, F&& f) {
    try {
      return f();
    } catch (const StageError&) {
      throw;
    } catch (const std::exception& e) {
      throw StageError(name, e.what(), false);
    }
  }

  void check(const std::string& name, const colorings::Verdict& v) {
    if (v) throw StageError(name, "verification failed: " + witness_summary(*v), true);
  }

  void record(Json entry) { report["stages"].push_back(std::move(entry)); }

  std::string write(const std::string& file, const std::string& text) {
    write_text(opts.out_dir / file, text);
    return file;
  }

  std::string write_coloring(const std::string& file, const Coloring& c) { return write(file, format_coloring(c)); }

  Coloring load_input(const std::string& name) {
    if (!opts.coloring) throw StageError(name, "an input coloring (--coloring) is required", false);
    return stage(name, [&] { return load_coloring(*opts.coloring); });
  }

  // Behrend covering coloring of Z/NZ without monochromatic k-patterns.
  Coloring behrend_coloring(const std::string& name, std::int64_t N, int k) {
    auto [c, size] = stage(name, [&] {
      const auto b = sets::behrend_set(N, k);
      return std::make_pair(sets::covering_coloring(b.set, opts.seed), b.set.size());
    });
    check(name, colorings::verify_mono_pattern_free(c, k));
    Json e;
    e["stage"] = name;
    e["artifact"] = write_coloring(name + ".coloring", c);
    e["N"] = N;
    e["behrend_size"] = size;
    e["r"] = c.r();
    e["verified"] = "no monochromatic " + std::to_string(k) + "-patterns";
    record(std::move(e));
    return c;
  }

  torus::TorusColoring interlace(const Coloring& phi, std::int64_t copies, bool square) {
    auto Phi = stage("interlace", [&] {
      return square ? torus::interlace_k(phi, static_cast<int>(copies), opts.budgets.cells)
                    : torus::interlace_m(phi, copies, phi.r(), opts.budgets.cells);
    });
    const std::int64_t expect_r = (square ? copies * copies : copies) * phi.r();
    if (Phi.r() != expect_r)
      throw StageError("interlace", "expected " + std::to_string(expect_r) + " colors, got " + std::to_string(Phi.r()),
                       true);
    Json e;
    e["stage"] = "interlace";
    e["artifact"] = write("interlaced.torus", format_torus_coloring(Phi));
    e["D"] = Phi.D();
    e["r"] = Phi.r();
    record(std::move(e));
    return Phi;
  }

  // base9 for the 4-binomial equation, otherwise greedy over doubling moduli.
  sets::ResidueSet solution_free_set(const core::BinomialSystem& sys, std::size_t r, bool base9) {
    const std::string name = "solution-free-set";
    sets::ResidueSet S(1, {});
    std::string method;
    stage(name, [&] {
      if (base9) {
        const auto rr = static_cast<std::int64_t>(r);
        S = sets::base9_set(r, 36 * rr * rr + 1);
        method = "base9";
      } else {
        for (std::int64_t m = std::max<std::int64_t>(2, static_cast<std::int64_t>(r));; m *= 2) {
          if (m > opts.budgets.modulus)
            throw ResourceError("greedy set of size " + std::to_string(r) + " needs m > modulus budget " +
                                std::to_string(opts.budgets.modulus));
          auto g = sets::greedy_solution_free_set(sys, m, r);
          if (g.success) {
            S = std::move(g.set);
            break;
          }
        }
        method = "greedy";
      }
      return 0;
    });
    const auto mode = base9 ? sets::SolutionMode::abba_only : sets::SolutionMode::all_nontrivial;
    const auto hit = stage(name, [&] { return sets::verify_solution_free(S, sys, mode, opts.budgets.verify); });
    if (hit) {
      std::string t;
      for (auto x : *hit) t += (t.empty() ? "" : ",") + std::to_string(x);
      throw StageError(name, "verification failed: nontrivial solution (" + t + ")", true);
    }
    Json e;
    e["stage"] = name;
    e["artifact"] = write("set.residues", format_residue_set(S));
    e["method"] = method;
    e["system"] = sys.coefficients();
    e["m"] = S.modulus();
    e["size"] = S.size();
    e["verified"] = "no nontrivial solutions";
    record(std::move(e));
    return S;
  }

  void finish(const torus::TorusColoring& Phi, const sets::ResidueSet& S, const PatternSpec& spec) {
    const auto sys = core::a_binomial_system(spec);
    const auto A = stage("torus-set", [&] { return torus::build_torus_set(Phi, S, sys); });
    if (!A.marginal_invariant()) throw StageError("torus-set", "marginal is not constant", true);
    {
      Json e;
      e["stage"] = "torus-set";
      e["artifact"] = write("A.tset", format_torus_set(A, "interlaced.torus"));
      put_rational(e, "w", A.w);
      e["verified"] = "constant first marginal";
      record(std::move(e));
    }

    const auto cert = stage("certificate", [&] {
      return torus::lambda_tilde_certificate(Phi, S, spec, opts.budgets.exact, opts.workers);
    });
    if (cert.width != A.w) throw StageError("certificate", "certificate width differs from the set's width", true);
    const auto est = stage("monte-carlo", [&] {
      return torus::lambda_tilde_mc(A, spec, opts.budgets.samples, opts.seed, opts.workers);
    });

    core::Rational random = 1;
    for (std::size_t i = 0; i < spec.k(); ++i) random *= A.w;
    Json c;
    c["pattern"] = spec.to_string();
    put_rational(c, "marginal", A.w);
    put_rational(c, "epsilon", cert.epsilon);
    put_rational(c, "bound", cert.bound);
    put_rational(c, "random_count", random);
    c["below_random"] = cert.bound < random;
    c["mc_mean"] = est.mean;
    c["mc_stderr"] = est.standard_error;
    c["mc_samples"] = est.sample_count;
    c["mc_seed"] = est.seed;
    c["mc_within_bound"] = est.mean <= core::to_double(cert.bound) + 4 * est.standard_error;
    write("certificate.json", c.dump(2) + "\n");
    report["certificate"] = std::move(c);
  }

  const PipelineOptions& opts;
  Json report;
};

void thm2_6(Run& run) {
  const auto& o = run.opts;
  const Coloring phi = run.load_input("input");
  run.check("input", colorings::verify_symmetric_ap_free(phi, 4));
  run.record({{"stage", "input"}, {"artifact", run.write_coloring("input.coloring", phi)}, {"N", phi.size()},
              {"r", phi.r()}, {"verified", "no symmetrically colored 4-APs"}});

  const Coloring psi = run.stage("tensor-power", [&] { return colorings::tensor_power(phi, o.ell); });
  run.check("tensor-power", colorings::verify_symmetric_ap_free(psi, 4));
  run.record({{"stage", "tensor-power"}, {"artifact", run.write_coloring("power.coloring", psi)}, {"ell", o.ell},
              {"N", psi.size()}, {"r", psi.r()}, {"verified", "no symmetrically colored 4-APs"}});

  const auto Phi = run.interlace(psi, 4, true);
  const auto S = run.solution_free_set(core::k_binomial_system(4), static_cast<std::size_t>(Phi.r()), true);
  run.finish(Phi, S, PatternSpec::arithmetic(4));
}

void thm2_7(Run& run) {
  const auto& o = run.opts;
  const int k = o.k;
  if (k < 4 || k % 2) throw StageError("input", "thm2_7 needs even k >= 4", false);
  const Coloring psi = run.load_input("input");
  run.check("input", colorings::verify_symmetric_ap_free(psi, k));
  run.record({{"stage", "input"}, {"artifact", run.write_coloring("input.coloring", psi)}, {"N", psi.size()},
              {"r", psi.r()}, {"verified", "no symmetrically colored " + std::to_string(k) + "-APs"}});

  const Coloring power = run.stage("tensor-power", [&] { return colorings::tensor_power(psi, o.ell); });
  run.check("tensor-power", colorings::verify_symmetric_ap_free(power, k));
  run.record({{"stage", "tensor-power"}, {"artifact", run.write_coloring("power.coloring", power)}, {"ell", o.ell},
              {"N", power.size()}, {"r", power.r()}});

  const Coloring chi = run.behrend_coloring("behrend", power.size(), k);
  const Coloring phi = run.stage("product", [&] { return colorings::product_coloring(power, chi); });
  run.check("product", colorings::verify_binomial_pattern_free(phi, PatternSpec::arithmetic(k)));
  run.record({{"stage", "product"}, {"artifact", run.write_coloring("product.coloring", phi)}, {"r", phi.r()},
              {"verified", "no " + std::to_string(k) + "-binomial patterns"}});

  const auto Phi = run.interlace(phi, k, true);
  const auto S = run.solution_free_set(core::k_binomial_system(k), static_cast<std::size_t>(Phi.r()), k == 4);
  run.finish(Phi, S, PatternSpec::arithmetic(k));
}

void thm2_5(Run& run) {
  const auto& o = run.opts;
  const int k = o.k;
  if (k < 5 || k % 2 == 0) throw StageError("input", "thm2_5 needs odd k >= 5", false);
  Coloring phi = Coloring::constant(colorings::Ambient::cyclic, 1);
  if (o.coloring) {
    phi = run.load_input("input");
    run.check("input", colorings::verify_mono_pattern_free(phi, k));
    run.record({{"stage", "input"}, {"artifact", run.write_coloring("input.coloring", phi)}, {"N", phi.size()},
                {"r", phi.r()}, {"verified", "no monochromatic " + std::to_string(k) + "-patterns"}});
  } else {
    phi = run.behrend_coloring("behrend", o.N > 0 ? o.N : 2 * k, k);
  }
  const auto Phi = run.interlace(phi, k, true);
  const auto S = run.solution_free_set(core::k_binomial_system(k), static_cast<std::size_t>(Phi.r()), false);
  run.finish(Phi, S, PatternSpec::arithmetic(k));
}

std::int64_t smallest_prime_above(std::int64_t a) {
  for (std::int64_t p = a + 1;; ++p) {
    bool prime = p >= 2;
    for (std::int64_t d = 2; d * d <= p && prime; ++d) prime = p % d != 0;
    if (prime) return p;
  }
}

void lemma7_10(Run& run) {
  const auto& o = run.opts;
  if (!o.pattern) throw StageError("input", "lemma7_10 needs a pattern (--a)", false);
  const PatternSpec spec = o.pattern->normalized();
  const int k = static_cast<int>(spec.k());
  const int ak = static_cast<int>(spec.width()) + 1;  // a_k once a_1 is shifted to 1
  const bool even = k % 2 == 0;
  const bool symmetric = core::is_symmetric(spec);
  run.report["pattern"] = spec.to_string();

  std::int64_t N = o.N > 0 ? o.N : 16;
  std::optional<Coloring> chi;
  if (even) {
    const std::int64_t M = o.M > 0 ? o.M : smallest_prime_above(ak);
    chi = run.stage("mod-behrend", [&] { return colorings::mod_behrend_coloring(M, o.digits, ak); });
    run.check("mod-behrend", colorings::verify_abab_abba_free(*chi, ak));
    N = chi->size();
    run.record({{"stage", "mod-behrend"}, {"artifact", run.write_coloring("mod_behrend.coloring", *chi)}, {"M", M},
                {"digits", o.digits}, {"N", N}, {"r", chi->r()}, {"verified", "no ABAB or asymmetric ABBA patterns"}});
  }
  Coloring phi = run.behrend_coloring("behrend", N, ak);
  if (chi) phi = run.stage("product", [&] { return colorings::product_coloring(phi, *chi); });
  if (even && symmetric) {
    const Coloring omega = run.load_input("input");
    run.check("input", colorings::verify_sym_a_ap_free(omega, spec));
    run.record({{"stage", "input"}, {"artifact", run.write_coloring("input.coloring", omega)}, {"N", omega.size()},
                {"r", omega.r()}, {"verified", "no symmetrically colored a-APs"}});
    phi = run.stage("product", [&] { return colorings::product_coloring(phi, omega); });
  }
  run.check("product", colorings::verify_binomial_pattern_free(phi, spec));
  run.record({{"stage", "product"}, {"artifact", run.write_coloring("product.coloring", phi)}, {"N", phi.size()},
              {"r", phi.r()}, {"verified", "no a-binomial patterns"}});

  const std::int64_t copies = run.stage("interlace", [&] { return torus::interlace_modulus(spec); });
  const auto Phi = run.interlace(phi, copies, false);
  const auto S = run.solution_free_set(core::a_binomial_system(spec), static_cast<std::size_t>(Phi.r()), false);
  run.finish(Phi, S, spec);
}

}  // namespace

Json run_pipeline(const PipelineOptions& opts) {
  Run run(opts);
  run.stage("output", [&] {
    fs::create_directories(opts.out_dir);
    return 0;
  });
  if (opts.name == "thm2_6") thm2_6(run);
  else if (opts.name == "thm2_7") thm2_7(run);
  else if (opts.name == "thm2_5") thm2_5(run);
  else if (opts.name == "lemma7_10") lemma7_10(run);
  else throw StageError("input", "unknown pipeline '" + opts.name + "'", false);
  return run.report;
}

}  // namespace addcomb::cli
