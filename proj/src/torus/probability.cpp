#include "addcomb/torus/probability.hpp"

#include <thread>

#include "addcomb/core/errors.hpp"
#include "addcomb/torus/cells.hpp"

namespace addcomb::torus {

Predicate parse_predicate(std::string_view name) {
  if (name == "binomial_pattern" || name == "binomial-pattern" || name == "binomial") return Predicate::binomial_pattern;
  if (name == "symmetric") return Predicate::symmetric;
  if (name == "mono_subset" || name == "mono-subset") return Predicate::mono_subset;
  throw InvalidArgument("unknown predicate '" + std::string(name) + "'");
}

const char* predicate_name(Predicate p) noexcept {
  switch (p) {
    case Predicate::binomial_pattern: return "binomial_pattern";
    case Predicate::symmetric: return "symmetric";
    case Predicate::mono_subset: return "mono_subset";
  }
  return "?";
}

colorings::ClauseSet predicate_clauses(const core::PatternSpec& spec, Predicate p, const std::vector<int>& subset) {
  const int k = static_cast<int>(spec.k());
  switch (p) {
    case Predicate::binomial_pattern: return colorings::binomial_clauses(spec);
    case Predicate::symmetric: return colorings::symmetric_clauses(spec);
    case Predicate::mono_subset: {
      if (subset.size() < 2) throw InvalidArgument("mono_subset needs at least two positions");
      colorings::Clause c;
      std::string label = "mono {";
      for (std::size_t j = 0; j < subset.size(); ++j) {
        if (subset[j] < 0 || subset[j] >= k) throw InvalidArgument("mono_subset position out of range");
        if (j > 0) c.pairs.emplace_back(subset[0], subset[j]);
        label += (j ? "," : "") + std::to_string(subset[j] + 1);
      }
      c.label = label + "}";
      return colorings::ClauseSet(k, {c});
    }
  }
  throw InvalidArgument("bad predicate");
}

core::Rational pattern_probability_exact(const TorusColoring& phi, const core::PatternSpec& spec,
                                         const colorings::ClauseSet& predicate, std::uint64_t budget,
                                         unsigned workers) {
  if (predicate.k() != static_cast<int>(spec.k())) throw InvalidArgument("predicate arity differs from the pattern");
  const auto pieces = cell_decomposition(spec);
  const std::int64_t D = phi.D();
  const unsigned __int128 work = static_cast<unsigned __int128>(D) * D * pieces.size();
  if (work > budget)
    throw ResourceError("exact probability needs D^2 * pieces = " + std::to_string(static_cast<double>(work)) +
                        " evaluations, budget is " + std::to_string(budget));

  std::vector<std::int32_t> doubled(static_cast<std::size_t>(2 * D + 64), 0);
  for (std::int64_t j = 0; j < 2 * D; ++j) doubled[static_cast<std::size_t>(j)] = phi.cell(j % D);
  const auto a = spec.a();
  const std::size_t k = a.size();

  // counts[w][piece]: (p, q) pairs matching, for q in the worker's stripe.
  workers = std::max(1u, workers);
  std::vector<std::vector<std::uint64_t>> counts(workers, std::vector<std::uint64_t>(pieces.size(), 0));
  auto run = [&](unsigned w) {
    std::vector<const std::int32_t*> lanes(k);
    for (std::int64_t q = w; q < D; q += workers)
      for (std::size_t pi = 0; pi < pieces.size(); ++pi) {
        for (std::size_t i = 0; i < k; ++i)
          lanes[i] = doubled.data() + core::mod(core::mulmod(a[i], q, D) + pieces[pi].floors[i], D);
        counts[w][pi] += static_cast<std::uint64_t>(predicate.count_matches(lanes, D));
      }
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run, w);
    for (auto& t : pool) t.join();
  }

  core::Rational total = 0;
  for (std::size_t pi = 0; pi < pieces.size(); ++pi) {
    std::uint64_t c = 0;
    for (unsigned w = 0; w < workers; ++w) c += counts[w][pi];
    total += pieces[pi].area * core::BigInt(c);
  }
  return total / (core::BigInt(D) * D);
}

}  // namespace addcomb::torus
