#include "addcomb/uniformity/convergence.hpp"

#include <cmath>

#include "addcomb/core/errors.hpp"
#include "addcomb/uniformity/gowers.hpp"
#include "addcomb/uniformity/grid_function.hpp"
#include "addcomb/uniformity/lambda.hpp"

namespace addcomb::uniformity {
namespace {

int degree_for(const core::PatternSpec& spec) {
  const int s = static_cast<int>(spec.k()) - 2;
  if (s > 3) throw InvalidArgument("convergence experiment needs k <= 5 for the U^{k-2} column");
  return s;
}

template <class Discretize>
ConvergenceReport run(const core::PatternSpec& spec, const std::vector<std::int64_t>& N_list, double reference,
                      double stderr_, std::string method, Discretize disc) {
  const int s = degree_for(spec);
  ConvergenceReport rep;
  rep.reference = reference;
  rep.reference_stderr = stderr_;
  rep.reference_method = std::move(method);
  for (std::int64_t N : N_list) {
    const GridFunction f = disc(N, s);
    ConvergenceRow row;
    row.N = N;
    row.lambda = lambda_exact(f, spec).value;
    row.centered_norm = s == 1 ? 0.0 : gowers_norm(f, s, true);
    row.gap = std::abs(row.lambda - reference);
    rep.rows.push_back(row);
  }
  return rep;
}

}  // namespace

ConvergenceReport convergence_experiment(const torus::TorusFunction& F, const core::PatternSpec& spec,
                                         const std::vector<std::int64_t>& N_list, const ConvergenceOptions& opts) {
  degree_for(spec);
  double ref = 0, se = 0;
  std::string method = "given";
  if (opts.reference) {
    ref = *opts.reference;
  } else {
    const auto est = torus::lambda_tilde_mc(F, spec, opts.mc_samples, opts.seed, opts.workers);
    ref = est.mean;
    se = est.standard_error;
    method = "monte-carlo";
  }
  return run(spec, N_list, ref, se, method, [&](std::int64_t N, int s) { return discretize(F, N, s); });
}

ConvergenceReport convergence_experiment(const torus::TorusSet& A, const core::PatternSpec& spec,
                                         const std::vector<std::int64_t>& N_list, const ConvergenceOptions& opts) {
  degree_for(spec);
  double ref = 0, se = 0;
  std::string method = "given";
  if (opts.reference) {
    ref = *opts.reference;
  } else {
    const auto est = torus::lambda_tilde_mc(A, spec, opts.mc_samples, opts.seed, opts.workers);
    ref = est.mean;
    se = est.standard_error;
    method = "monte-carlo";
  }
  return run(spec, N_list, ref, se, method, [&](std::int64_t N, int s) { return discretize(A, N, s); });
}

}  // namespace addcomb::uniformity
