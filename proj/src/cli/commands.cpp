#include "addcomb/cli/commands.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <optional>

#include "addcomb/cli/config.hpp"
#include "addcomb/cli/io.hpp"
#include "addcomb/cli/pipeline.hpp"
#include "addcomb/cli/report.hpp"
#include "addcomb/colorings/search.hpp"
#include "addcomb/colorings/verify.hpp"
#include "addcomb/core/errors.hpp"
#include "addcomb/sets/behrend.hpp"
#include "addcomb/sets/solution_free.hpp"
#include "addcomb/torus/probability.hpp"
#include "addcomb/uniformity/convergence.hpp"
#include "addcomb/uniformity/extract.hpp"
#include "addcomb/uniformity/fourier.hpp"
#include "addcomb/uniformity/gowers.hpp"
#include "addcomb/uniformity/lambda.hpp"
#include "addcomb/uniformity/weyl.hpp"

namespace addcomb::cli {

namespace {

namespace fs = std::filesystem;
using colorings::Coloring;
using core::PatternSpec;

struct Global {
  std::uint64_t seed = 0;
  unsigned workers = 1;
  std::string format = "json";
  std::string report_path;
  std::string budget_flag;
  Budgets budgets;
};

struct Outcome {
  Json report;
  int code = kExitOk;
};

// --a overrides --k.
PatternSpec pattern_of(const std::string& a, int k) {
  return a.empty() ? PatternSpec::arithmetic(k) : PatternSpec::parse(a);
}

core::BinomialSystem system_of(const std::string& a, int k) {
  return a.empty() ? core::k_binomial_system(k) : core::a_binomial_system(PatternSpec::parse(a));
}

bool is_coloring_file(const std::string& text) {
  const auto p = text.find_first_not_of(" \t\r\n");
  return p != std::string::npos && text.compare(p, 7, "ambient") == 0;
}

std::string path_from(const fs::path& target, const fs::path& from_file) {
  const fs::path base = fs::absolute(from_file).parent_path();
  const fs::path rel = fs::absolute(target).lexically_relative(base);
  return rel.empty() ? fs::absolute(target).string() : rel.string();
}

torus::TorusFunction slab(double alpha) {
  return [alpha](double, double y) { return y < alpha ? 1.0 : 0.0; };
}

std::string render(const Json& j, const std::string& format) {
  if (format == "json") return j.dump(2) + "\n";
  std::string out;
  for (auto it = j.begin(); it != j.end(); ++it) {
    out += it.key() + ": ";
    out += it->is_string() ? it->get<std::string>() : it->dump();
    out += "\n";
  }
  return out;
}

// ---- subcommands ---------------------------------------------------------

struct VerifyArgs {
  std::string path, pattern = "symmetric", a, mode = "all";
  int k = 4, a_bound = 0;
};

Outcome cmd_verify(const Global& g, const VerifyArgs& v) {
  Outcome o{report_header("verify", g.seed, g.budgets)};
  const std::string text = read_text(v.path);
  std::optional<colorings::Witness> witness;
  if (is_coloring_file(text)) {
    const Coloring c = parse_coloring(text);
    o.report["object"] = "coloring";
    o.report["ambient"] = colorings::ambient_name(c.ambient());
    o.report["N"] = c.size();
    o.report["r"] = c.r();
    o.report["pattern"] = v.pattern;
    if (v.pattern == "symmetric") {
      witness = v.a.empty() ? colorings::verify_symmetric_ap_free(c, v.k)
                            : colorings::verify_sym_a_ap_free(c, PatternSpec::parse(v.a));
    } else if (v.pattern == "mono") {
      witness = colorings::verify_mono_pattern_free(c, v.k);
    } else if (v.pattern == "binomial") {
      witness = colorings::verify_binomial_pattern_free(c, pattern_of(v.a, v.k));
    } else {
      witness = colorings::verify_abab_abba_free(c, v.a_bound > 0 ? v.a_bound : v.k);
    }
    if (witness) o.report["witness"] = witness_json(*witness);
  } else {
    const auto s = parse_residue_set(text);
    const auto sys = system_of(v.a, v.k);
    o.report["object"] = "residue-set";
    o.report["m"] = s.modulus();
    o.report["size"] = s.size();
    o.report["system"] = sys.coefficients();
    o.report["mode"] = v.mode;
    const auto hit = sets::verify_solution_free(
        s, sys, v.mode == "abba" ? sets::SolutionMode::abba_only : sets::SolutionMode::all_nontrivial,
        g.budgets.verify);
    if (hit) {
      o.report["witness"] = {{"kind", "nontrivial-solution"}, {"points", *hit}};
      witness.emplace();
    }
  }
  o.report["ok"] = !witness;
  o.code = witness ? kExitViolation : kExitOk;
  return o;
}

struct SearchArgs {
  std::int64_t N = 0;
  int k = 4, r = 1;
  bool interval = false;
  std::string mode = "exhaustive", a, out;
};

Outcome cmd_search(const Global& g, SearchArgs s) {
  colorings::SearchRequest req;
  req.n = s.N;
  req.spec = pattern_of(s.a, s.k);
  req.r = s.r;
  req.ambient = s.interval ? colorings::Ambient::interval : colorings::Ambient::cyclic;
  req.mode = s.mode == "randomized" ? colorings::SearchMode::randomized : colorings::SearchMode::exhaustive;
  req.budget = g.budgets.nodes;
  if (req.mode == colorings::SearchMode::randomized && req.budget == 0)
    throw InvalidArgument("randomized search needs a finite nodes budget");
  req.seed = g.seed;
  req.workers = static_cast<int>(g.workers);
  const auto res = colorings::search_coloring(req);

  Outcome o{report_header("search", g.seed, g.budgets)};
  o.report["N"] = s.N;
  o.report["pattern"] = req.spec.to_string();
  o.report["r"] = s.r;
  o.report["ambient"] = colorings::ambient_name(req.ambient);
  o.report["mode"] = s.mode;
  o.report["status"] = colorings::search_status_name(res.status);
  o.report["work"] = res.work;
  if (res.coloring) {
    const auto& c = *res.coloring;
    o.report["coloring"] = c.r() <= 35 ? Json(c.to_digits()) : Json(c.colors());
    if (!s.out.empty()) {
      write_text(s.out, format_coloring(c));
      o.report["output"] = s.out;
    }
  }
  o.code = res.status == colorings::SearchStatus::found ? kExitOk : kExitViolation;
  return o;
}

struct BuildSetArgs {
  std::string kind = "greedy", a, out, covering_out;
  std::int64_t N = 0, m = 0, r = 0;
  int k = 4;
};

Outcome cmd_build_set(const Global& g, const BuildSetArgs& b) {
  Outcome o{report_header("build-set", g.seed, g.budgets)};
  o.report["kind"] = b.kind;
  std::optional<sets::ResidueSet> S;
  if (b.kind == "behrend") {
    const auto res = sets::behrend_set(b.N, b.k);
    S = res.set;
    o.report["params"] = {{"digits", res.params.digits},
                          {"dim", res.params.dim},
                          {"base", res.params.base},
                          {"radius2", res.params.radius2}};
    if (!b.covering_out.empty()) {
      const auto c = sets::covering_coloring(res.set, g.seed);
      write_text(b.covering_out, format_coloring(c));
      o.report["covering"] = {{"output", b.covering_out}, {"r", c.r()}};
    }
  } else {
    const auto sys = system_of(b.a, b.k);
    const auto r = static_cast<std::size_t>(b.r);
    if (b.r < 1) throw InvalidArgument("--r must be >= 1");
    sets::SolutionMode mode = sets::SolutionMode::all_nontrivial;
    if (b.kind == "base9") {
      S = sets::base9_set(r, b.m > 0 ? b.m : 36 * b.r * b.r + 1);
      mode = sets::SolutionMode::abba_only;
    } else if (b.m > 0) {
      auto gr = sets::greedy_solution_free_set(sys, b.m, r);
      if (!gr.success) {
        o.report["status"] = "short";
        o.report["size"] = gr.set.size();
        o.code = kExitViolation;
        return o;
      }
      S = std::move(gr.set);
    } else {
      for (std::int64_t m = std::max<std::int64_t>(2, b.r);; m *= 2) {
        if (m > g.budgets.modulus) throw ResourceError("greedy set needs m above the modulus budget");
        auto gr = sets::greedy_solution_free_set(sys, m, r);
        if (gr.success) {
          S = std::move(gr.set);
          break;
        }
      }
    }
    o.report["system"] = sys.coefficients();
    o.report["verified"] = !sets::verify_solution_free(*S, sys, mode, g.budgets.verify);
  }
  o.report["m"] = S->modulus();
  o.report["size"] = S->size();
  o.report["elements"] = S->elements();
  if (!b.out.empty()) {
    write_text(b.out, format_residue_set(*S));
    o.report["output"] = b.out;
  }
  return o;
}

struct InterlaceArgs {
  std::string path, out;
  int k = 0;
  std::int64_t m = 0;
  int r = 0;
};

Outcome cmd_interlace(const Global& g, const InterlaceArgs& a) {
  const Coloring c = load_coloring(a.path);
  if ((a.k > 0) == (a.m > 0)) throw InvalidArgument("give exactly one of --k and --m");
  const auto Phi = a.k > 0 ? torus::interlace_k(c, a.k, g.budgets.cells)
                           : torus::interlace_m(c, a.m, a.r > 0 ? a.r : c.r(), g.budgets.cells);
  Outcome o{report_header("interlace", g.seed, g.budgets)};
  o.report["D"] = Phi.D();
  o.report["r"] = Phi.r();
  if (!a.out.empty()) {
    write_text(a.out, format_torus_coloring(Phi));
    o.report["output"] = a.out;
  }
  return o;
}

struct TorusSetArgs {
  std::string torus, set, a, out;
  int k = 4;
};

Outcome cmd_torus_set(const Global& g, const TorusSetArgs& t) {
  const auto Phi = load_torus_coloring(t.torus);
  const auto S = load_residue_set(t.set);
  const auto A = t.a.empty() ? torus::build_torus_set(Phi, S, t.k) : torus::build_torus_set(Phi, S, system_of(t.a, t.k));
  Outcome o{report_header("torus-set", g.seed, g.budgets)};
  o.report["m"] = A.m;
  put_rational(o.report, "w", A.w);
  o.report["marginal_invariant"] = A.marginal_invariant();
  if (!t.out.empty()) {
    write_text(t.out, format_torus_set(A, path_from(t.torus, t.out)));
    o.report["output"] = t.out;
  }
  if (!A.marginal_invariant()) o.code = kExitViolation;
  return o;
}

struct DensityArgs {
  std::string method = "exact", grid, torus, torus_set, set, a, predicate = "binomial";
  bool lambda_exact = false;
  int k = 4;
};

Outcome cmd_density(const Global& g, DensityArgs d) {
  if (d.lambda_exact) d.method = "exact";
  const PatternSpec spec = pattern_of(d.a, d.k);
  Outcome o{report_header("density", g.seed, g.budgets)};
  o.report["method"] = d.method;
  o.report["pattern"] = spec.to_string();
  auto put_estimate = [&](const torus::Estimate& e) {
    o.report["mean"] = e.mean;
    o.report["stderr"] = e.standard_error;
    o.report["samples"] = e.sample_count;
    o.report["exact"] = false;
  };

  if (d.method == "certificate") {
    if (d.torus.empty() || d.set.empty()) throw InvalidArgument("certificate needs --torus and --set");
    const auto Phi = load_torus_coloring(d.torus);
    const auto S = load_residue_set(d.set);
    const auto c = torus::lambda_tilde_certificate(Phi, S, spec, g.budgets.exact, g.workers);
    put_rational(o.report, "epsilon", c.epsilon);
    put_rational(o.report, "width", c.width);
    put_rational(o.report, "bound", c.bound);
    o.report["value"] = core::to_double(c.bound);
    o.report["exact"] = true;
  } else if (!d.grid.empty()) {
    if (d.method != "exact") throw InvalidArgument("grid functions support --method exact only");
    const auto f = load_grid_function(d.grid);
    const auto v = uniformity::lambda_exact(f, spec);
    o.report["N"] = f.N();
    o.report["value"] = v.value;
    o.report["exact"] = v.exact.has_value();
    if (v.exact) o.report["rational"] = core::to_string(*v.exact);
  } else if (!d.torus_set.empty()) {
    if (d.method != "mc") throw InvalidArgument("torus sets support --method mc (or certificate with --torus/--set)");
    const auto A = load_torus_set(d.torus_set);
    put_estimate(torus::lambda_tilde_mc(A, spec, g.budgets.samples, g.seed, g.workers));
  } else if (!d.torus.empty()) {
    const auto Phi = load_torus_coloring(d.torus);
    const auto pred = torus::parse_predicate(d.predicate);
    const auto clauses = torus::predicate_clauses(spec, pred);
    o.report["predicate"] = torus::predicate_name(pred);
    if (d.method == "exact") {
      const auto p = torus::pattern_probability_exact(Phi, spec, clauses, g.budgets.exact, g.workers);
      o.report["value"] = core::to_double(p);
      o.report["rational"] = core::to_string(p);
      o.report["exact"] = true;
    } else {
      put_estimate(torus::pattern_probability_mc(Phi, spec, clauses, g.budgets.samples, g.seed, g.workers));
    }
  } else {
    throw InvalidArgument("density needs one of --grid, --torus, --torus-set");
  }
  return o;
}

struct GowersArgs {
  std::string path;
  int s = 2;
  bool center = false;
  std::int64_t cap = uniformity::kDefaultU3Cap;
};

Outcome cmd_gowers(const Global& g, const GowersArgs& a) {
  const auto f = load_grid_function(a.path);
  Outcome o{report_header("gowers", g.seed, g.budgets)};
  o.report["N"] = f.N();
  o.report["s"] = a.s;
  o.report["center"] = a.center;
  o.report["value"] = uniformity::gowers_norm(f, a.s, a.center, a.cap);
  return o;
}

Outcome cmd_spectrum(const Global& g, const std::string& path, bool table) {
  const auto f = load_grid_function(path);
  const auto s = uniformity::spectrum(f, table);
  Outcome o{report_header("spectrum", g.seed, g.budgets)};
  o.report["N"] = f.N();
  o.report["alpha"] = s.alpha;
  o.report["max_nonzero"] = s.max_nonzero;
  o.report["argmax"] = s.argmax;
  o.report["parseval_error"] = s.parseval_error;
  if (table) {
    Json rows = Json::array();
    for (const auto& c : s.coefficients) rows.push_back({c.real(), c.imag()});
    o.report["coefficients"] = std::move(rows);
  }
  return o;
}

struct ConvergeArgs {
  std::string torus_set, a, slab;
  std::vector<std::int64_t> Ns;
  std::optional<double> reference;
  int k = 4;
};

Outcome cmd_converge(const Global& g, const ConvergeArgs& c) {
  const PatternSpec spec = pattern_of(c.a, c.k);
  uniformity::ConvergenceOptions opts;
  opts.reference = c.reference;
  opts.mc_samples = g.budgets.samples;
  opts.seed = g.seed;
  opts.workers = g.workers;
  uniformity::ConvergenceReport rep;
  if (!c.torus_set.empty()) rep = uniformity::convergence_experiment(load_torus_set(c.torus_set), spec, c.Ns, opts);
  else if (!c.slab.empty())
    rep = uniformity::convergence_experiment(slab(core::to_double(core::parse_rational(c.slab))), spec, c.Ns, opts);
  else throw InvalidArgument("converge needs --torus-set or --slab");
  Outcome o{report_header("converge", g.seed, g.budgets)};
  o.report["pattern"] = spec.to_string();
  o.report["reference"] = rep.reference;
  o.report["reference_stderr"] = rep.reference_stderr;
  o.report["reference_method"] = rep.reference_method;
  Json rows = Json::array();
  for (const auto& r : rep.rows)
    rows.push_back({{"N", r.N}, {"lambda", r.lambda}, {"centered_norm", r.centered_norm}, {"gap", r.gap}});
  o.report["rows"] = std::move(rows);
  return o;
}

struct ExtractArgs {
  std::string torus_set, slab, out;
  int k = 4, r = 1;
  std::int64_t N = 1;
  std::uint64_t attempts = 1;
  bool all = false;
};

Outcome cmd_extract(const Global& g, const ExtractArgs& e) {
  uniformity::ExtractionRequest req;
  torus::TorusFunction F;
  std::optional<torus::TorusSet> A;
  if (!e.torus_set.empty()) {
    A = load_torus_set(e.torus_set);
    req.alpha = core::to_double(A->w);
    F = [&A](double x, double y) { return (*A)(x, y); };
  } else if (!e.slab.empty()) {
    req.alpha = core::to_double(core::parse_rational(e.slab));
    F = slab(req.alpha);
  } else {
    throw InvalidArgument("extract needs --torus-set or --slab");
  }
  req.k = e.k;
  req.r = e.r;
  req.N = e.N;
  req.seed = g.seed;
  req.attempts = e.attempts;
  req.stop_at_first = !e.all;
  req.workers = g.workers;
  const auto res = uniformity::extract_coloring(F, req);

  Outcome o{report_header("extract", g.seed, g.budgets)};
  o.report["alpha"] = req.alpha;
  o.report["k"] = e.k;
  o.report["r"] = e.r;
  o.report["N"] = e.N;
  o.report["attempts_run"] = res.attempts_run;
  o.report["successes"] = res.successes;
  o.report["undefined"] = res.undefined;
  o.report["rejected"] = res.rejected;
  o.report["undefined_bound"] = res.undefined_bound;
  if (res.coloring) {
    o.report["first_success"] = res.first_success;
    o.report["coloring"] = res.coloring->r() <= 35 ? Json(res.coloring->to_digits()) : Json(res.coloring->colors());
    if (!e.out.empty()) {
      write_text(e.out, format_coloring(*res.coloring));
      o.report["output"] = e.out;
    }
  }
  o.code = res.coloring ? kExitOk : kExitViolation;
  return o;
}

Outcome cmd_weyl(const Global& g, const std::string& poly, std::int64_t N) {
  const auto P = uniformity::Polynomial::parse(poly);
  const auto w = uniformity::weyl_sum(P, N);
  Outcome o{report_header("weyl", g.seed, g.budgets)};
  o.report["polynomial"] = P.to_string();
  o.report["N"] = N;
  o.report["re"] = w.real();
  o.report["im"] = w.imag();
  o.report["abs"] = std::abs(w);
  return o;
}

// -------------------------------------------------------------------------

struct Error {
  int code;
  std::string message;
};

Error classify(std::exception_ptr ep) {
  try {
    std::rethrow_exception(ep);
  } catch (const StageError& e) {
    return {e.violation() ? kExitViolation : kExitError, std::string("stage ") + e.what()};
  } catch (const FormatError& e) {
    return {kExitError, std::string("format error: ") + e.what()};
  } catch (const IoError& e) {
    return {kExitError, std::string("i/o error: ") + e.what()};
  } catch (const ResourceError& e) {
    return {kExitError, std::string("budget exceeded: ") + e.what()};
  } catch (const PreconditionError& e) {
    return {kExitError, std::string("precondition failed: ") + e.what()};
  } catch (const std::exception& e) {
    return {kExitError, std::string("error: ") + e.what()};
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Colorings, solution-free sets, torus constructions and uniformity statistics", "addcomb"};
  app.require_subcommand(1);
  app.fallthrough();
  Global g;
  app.add_option("--seed", g.seed, "RNG seed")->capture_default_str();
  app.add_option("--workers", g.workers, "worker threads")->check(CLI::PositiveNumber)->capture_default_str();
  app.add_option("--format", g.format, "report format")->check(CLI::IsMember({"json", "text"}))->capture_default_str();
  app.add_option("--report", g.report_path, "write the report to this file instead of stdout");
  app.add_option("--budget", g.budget_flag, "budget overrides, e.g. samples=1e7,cells=2e6");

  std::function<Outcome()> action;

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "check a coloring or residue set");
  verify->add_option("path", va.path)->required();
  verify->add_option("--k", va.k)->capture_default_str();
  verify->add_option("--pattern", va.pattern)
      ->check(CLI::IsMember({"symmetric", "mono", "binomial", "abab"}))
      ->capture_default_str();
  verify->add_option("--a", va.a, "pattern a as comma-separated integers");
  verify->add_option("--a-bound", va.a_bound);
  verify->add_option("--mode", va.mode, "residue sets: all | abba")->check(CLI::IsMember({"all", "abba"}));
  verify->callback([&] { action = [&] { return cmd_verify(g, va); }; });

  SearchArgs sa;
  auto* search = app.add_subcommand("search", "search for a coloring avoiding symmetrically colored APs");
  search->add_option("--N", sa.N)->required();
  search->add_option("--k", sa.k)->capture_default_str();
  search->add_option("--r", sa.r)->required();
  search->add_option("--a", sa.a);
  auto* cyc = search->add_flag("--cyclic", "cyclic ambient (default)");
  search->add_flag("--interval", sa.interval)->excludes(cyc);
  search->add_option("--mode", sa.mode)->check(CLI::IsMember({"exhaustive", "randomized"}))->capture_default_str();
  search->add_option("--out", sa.out, "write the coloring file here");
  search->callback([&] { action = [&] { return cmd_search(g, sa); }; });

  BuildSetArgs ba;
  auto* build = app.add_subcommand("build-set", "Behrend, base-9 or greedy solution-free sets");
  build->add_option("--kind", ba.kind)->check(CLI::IsMember({"behrend", "base9", "greedy"}))->capture_default_str();
  build->add_option("--N", ba.N, "behrend: ambient size");
  build->add_option("--k", ba.k)->capture_default_str();
  build->add_option("--a", ba.a);
  build->add_option("--r", ba.r, "base9/greedy: set size");
  build->add_option("--m", ba.m, "base9/greedy: modulus (greedy default doubles until it fits)");
  build->add_option("--out", ba.out);
  build->add_option("--covering-out", ba.covering_out, "behrend: also write the covering coloring");
  build->callback([&] { action = [&] { return cmd_build_set(g, ba); }; });

  InterlaceArgs ia;
  auto* inter = app.add_subcommand("interlace", "torus coloring from a coloring of Z/NZ");
  inter->add_option("path", ia.path)->required();
  inter->add_option("--k", ia.k, "k^2 interlaced copies");
  inter->add_option("--m", ia.m, "m interlaced copies");
  inter->add_option("--r", ia.r, "with --m: color offset per copy");
  inter->add_option("--out", ia.out);
  inter->callback([&] { action = [&] { return cmd_interlace(g, ia); }; });

  TorusSetArgs ta;
  auto* tset = app.add_subcommand("torus-set", "set A in the two-torus from a torus coloring and a residue set");
  tset->add_option("--torus", ta.torus)->required();
  tset->add_option("--set", ta.set)->required();
  tset->add_option("--k", ta.k)->capture_default_str();
  tset->add_option("--a", ta.a);
  tset->add_option("--out", ta.out);
  tset->callback([&] { action = [&] { return cmd_torus_set(g, ta); }; });

  DensityArgs da;
  auto* dens = app.add_subcommand("density", "Lambda, pattern probabilities and certificates");
  dens->add_option("--method", da.method)->check(CLI::IsMember({"exact", "mc", "certificate"}))->capture_default_str();
  dens->add_flag("--lambda-exact", da.lambda_exact, "same as --method exact");
  dens->add_option("--grid", da.grid);
  dens->add_option("--torus", da.torus);
  dens->add_option("--torus-set", da.torus_set);
  dens->add_option("--set", da.set);
  dens->add_option("--k", da.k)->capture_default_str();
  dens->add_option("--a", da.a);
  dens->add_option("--predicate", da.predicate)
      ->check(CLI::IsMember({"binomial", "symmetric", "mono"}))
      ->capture_default_str();
  dens->callback([&] { action = [&] { return cmd_density(g, da); }; });

  GowersArgs ga;
  auto* gow = app.add_subcommand("gowers", "Gowers U^s norm of a grid function");
  gow->add_option("path", ga.path)->required();
  gow->add_option("--s", ga.s)->check(CLI::Range(1, 3))->capture_default_str();
  gow->add_flag("--center", ga.center, "subtract the mean first");
  gow->add_option("--cap", ga.cap, "largest N for U^3")->capture_default_str();
  gow->callback([&] { action = [&] { return cmd_gowers(g, ga); }; });

  std::string spec_path;
  bool spec_table = false;
  auto* spec = app.add_subcommand("spectrum", "Fourier spectrum of a grid function");
  spec->add_option("path", spec_path)->required();
  spec->add_flag("--table", spec_table, "include every coefficient");
  spec->callback([&] { action = [&] { return cmd_spectrum(g, spec_path, spec_table); }; });

  ConvergeArgs ca;
  auto* conv = app.add_subcommand("converge", "Lambda of discretizations against Lambda-tilde");
  conv->add_option("--torus-set", ca.torus_set);
  conv->add_option("--slab", ca.slab, "F = indicator of y < alpha");
  conv->add_option("--N", ca.Ns)->required()->delimiter(',');
  conv->add_option("--reference", ca.reference, "skip Monte Carlo and use this value");
  conv->add_option("--k", ca.k)->capture_default_str();
  conv->add_option("--a", ca.a);
  conv->callback([&] { action = [&] { return cmd_converge(g, ca); }; });

  ExtractArgs ea;
  auto* ext = app.add_subcommand("extract", "extract a coloring from a torus function");
  ext->add_option("--torus-set", ea.torus_set);
  ext->add_option("--slab", ea.slab);
  ext->add_option("--k", ea.k)->capture_default_str();
  ext->add_option("--r", ea.r)->required();
  ext->add_option("--N", ea.N)->required();
  ext->add_option("--attempts", ea.attempts)->capture_default_str();
  ext->add_flag("--all", ea.all, "run every attempt and count successes");
  ext->add_option("--out", ea.out);
  ext->callback([&] { action = [&] { return cmd_extract(g, ea); }; });

  std::string poly;
  std::int64_t weyl_N = 0;
  auto* weyl = app.add_subcommand("weyl", "normalized complete Weyl sum");
  weyl->add_option("--poly", poly)->required();
  weyl->add_option("--N", weyl_N)->required();
  weyl->callback([&] { action = [&] { return cmd_weyl(g, poly, weyl_N); }; });

  PipelineOptions po;
  std::string pa, pcol, pout = ".";
  auto* pipe = app.add_subcommand("pipeline", "end-to-end torus constructions");
  pipe->add_option("name", po.name)->required()->check(CLI::IsMember({"thm2_6", "thm2_7", "thm2_5", "lemma7_10"}));
  pipe->add_option("--coloring", pcol);
  pipe->add_option("--ell", po.ell)->capture_default_str();
  pipe->add_option("--k", po.k)->capture_default_str();
  pipe->add_option("--a", pa);
  pipe->add_option("--N", po.N);
  pipe->add_option("--M", po.M);
  pipe->add_option("--digits", po.digits)->capture_default_str();
  pipe->add_option("--out-dir", pout)->capture_default_str();
  pipe->callback([&] {
    action = [&] {
      if (!pcol.empty()) po.coloring = pcol;
      if (!pa.empty()) po.pattern = PatternSpec::parse(pa);
      if (po.name == "thm2_5" && po.k == 4) po.k = 5;
      po.out_dir = pout;
      po.seed = g.seed;
      po.workers = g.workers;
      po.budgets = g.budgets;
      return Outcome{run_pipeline(po), kExitOk};
    };
  });

  std::vector<std::string> argv_store{"addcomb"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& s : argv_store) argv.push_back(s.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitError;
  }

  try {
    if (const char* env = std::getenv(kBudgetEnv)) apply_budget_overrides(g.budgets, env);
    apply_budget_overrides(g.budgets, g.budget_flag);
    const Outcome o = action();
    const std::string text = render(o.report, g.format);
    if (g.report_path.empty()) out << text;
    else write_text(g.report_path, text);
    return o.code;
  } catch (...) {
    const auto e = classify(std::current_exception());
    err << "addcomb: " << e.message << "\n";
    return e.code;
  }
}

}  // namespace addcomb::cli
