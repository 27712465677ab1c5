#include "addcomb/colorings/search.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <set>
#include <thread>
#include <utility>
#include <vector>

#include "addcomb/core/errors.hpp"
#include "addcomb/core/random.hpp"
#include "addcomb/core/rational.hpp"

namespace addcomb::colorings {
namespace {

using Pair = std::pair<std::int32_t, std::int32_t>;

// A forbidden event: every pair shares a color.
struct Constraint {
  std::vector<Pair> pairs;
  std::int32_t last = 0;  // largest position involved
};

struct Problem {
  std::int64_t n = 0;
  std::vector<Constraint> constraints;
  std::vector<std::vector<std::int32_t>> at;  // constraint ids by last position
  bool trivially_violated = false;            // some tuple has all pairs coincident
};

Problem build_problem(const SearchRequest& req) {
  if (!core::is_symmetric(req.spec)) throw InvalidArgument("search needs a symmetric pattern");
  const auto spec = req.spec.normalized();
  const std::int64_t N = req.n;
  const std::size_t k = spec.k();
  const bool cyclic = req.ambient == Ambient::cyclic;
  std::set<std::vector<Pair>> seen;
  Problem pb;
  pb.n = N;
  pb.at.resize(static_cast<std::size_t>(N));
  std::vector<std::int64_t> pts(k);
  for (std::int64_t n = 0; n < N; ++n) {
    // Symmetric patterns reversed give the same constraint, so d > 0 suffices.
    for (std::int64_t d = 1; d < N; ++d) {
      bool inside = true;
      for (std::size_t i = 0; i < k; ++i) {
        std::int64_t p = n + spec[i] * d;
        if (cyclic) p = core::mod(p, N);
        else if (p >= N) inside = false;
        pts[i] = p;
      }
      if (!inside) break;  // larger d only moves further out
      std::vector<Pair> pairs;
      for (std::size_t i = 0; i < k / 2; ++i) {
        auto x = static_cast<std::int32_t>(pts[i]);
        auto y = static_cast<std::int32_t>(pts[k - 1 - i]);
        if (x == y) continue;
        pairs.emplace_back(std::min(x, y), std::max(x, y));
      }
      std::sort(pairs.begin(), pairs.end());
      pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
      if (pairs.empty()) {
        pb.trivially_violated = true;
        continue;
      }
      if (!seen.insert(pairs).second) continue;
      std::int32_t last = 0;
      for (auto [x, y] : pairs) last = std::max(last, y);
      pb.at[static_cast<std::size_t>(last)].push_back(static_cast<std::int32_t>(pb.constraints.size()));
      pb.constraints.push_back({std::move(pairs), last});
    }
  }
  return pb;
}

bool violated(const Constraint& c, const std::vector<std::int32_t>& col) {
  for (auto [x, y] : c.pairs)
    if (col[static_cast<std::size_t>(x)] != col[static_cast<std::size_t>(y)]) return false;
  return true;
}

bool consistent_at(const Problem& pb, std::int64_t pos, const std::vector<std::int32_t>& col) {
  for (auto id : pb.at[static_cast<std::size_t>(pos)])
    if (violated(pb.constraints[static_cast<std::size_t>(id)], col)) return false;
  return true;
}

class Budget {
 public:
  explicit Budget(std::uint64_t limit) : limit_(limit) {}
  // False once the limit is spent.
  bool take() {
    const auto used = used_.fetch_add(1, std::memory_order_relaxed) + 1;
    return limit_ == 0 || used <= limit_;
  }
  std::uint64_t used() const { return std::min<std::uint64_t>(used_.load(), limit_ == 0 ? ~0ULL : limit_); }

 private:
  std::uint64_t limit_;
  std::atomic<std::uint64_t> used_{0};
};

enum class Dfs { found, refuted, out_of_budget, cancelled };

// Extends col[0..start) to a full coloring; col holds the lex-least solution on success.
Dfs dfs(const Problem& pb, int r, std::vector<std::int32_t>& col, std::int64_t start, Budget& budget,
        const std::atomic<bool>* cancel) {
  const std::int64_t N = pb.n;
  if (start == N) return Dfs::found;
  std::vector<std::int32_t> max_used(static_cast<std::size_t>(N + 1), 0);
  for (std::int64_t p = 0; p < start; ++p)
    max_used[static_cast<std::size_t>(p + 1)] = std::max(max_used[static_cast<std::size_t>(p)], col[static_cast<std::size_t>(p)]);
  std::int64_t pos = start;
  col[static_cast<std::size_t>(pos)] = 0;
  while (true) {
    if (cancel && cancel->load(std::memory_order_relaxed)) return Dfs::cancelled;
    auto& cur = col[static_cast<std::size_t>(pos)];
    const std::int32_t limit = std::min<std::int32_t>(r, max_used[static_cast<std::size_t>(pos)] + 1);
    bool advanced = false;
    while (cur < limit) {
      ++cur;
      if (!budget.take()) return Dfs::out_of_budget;
      if (consistent_at(pb, pos, col)) {
        advanced = true;
        break;
      }
    }
    if (advanced) {
      max_used[static_cast<std::size_t>(pos + 1)] = std::max(max_used[static_cast<std::size_t>(pos)], cur);
      if (++pos == N) return Dfs::found;
      col[static_cast<std::size_t>(pos)] = 0;
    } else {
      if (pos == start) return Dfs::refuted;
      col[static_cast<std::size_t>(pos)] = 0;
      --pos;
    }
  }
}

// Valid canonical prefixes of the given depth, in lex order.
void prefixes(const Problem& pb, int r, std::vector<std::int32_t>& col, std::int64_t pos, std::int32_t max_used,
              std::int64_t depth, std::vector<std::vector<std::int32_t>>& out) {
  if (pos == depth) {
    out.emplace_back(col.begin(), col.begin() + depth);
    return;
  }
  for (std::int32_t c = 1; c <= std::min(r, max_used + 1); ++c) {
    col[static_cast<std::size_t>(pos)] = c;
    if (consistent_at(pb, pos, col)) prefixes(pb, r, col, pos + 1, std::max(max_used, c), depth, out);
  }
  col[static_cast<std::size_t>(pos)] = 0;
}

SearchResult exhaustive(const SearchRequest& req, const Problem& pb) {
  if (req.n > req.exhaustive_cap)
    throw PreconditionError("exhaustive search limited to N <= " + std::to_string(req.exhaustive_cap));
  SearchResult res;
  if (pb.trivially_violated) {
    res.status = SearchStatus::none_exists;
    return res;
  }
  Budget budget(req.budget);
  std::vector<std::int32_t> col(static_cast<std::size_t>(pb.n), 0);
  const int workers = std::max(1, req.workers);
  if (workers == 1 || pb.n < 4) {
    const Dfs out = dfs(pb, req.r, col, 0, budget, nullptr);
    res.work = budget.used();
    if (out == Dfs::found) {
      res.status = SearchStatus::found;
      res.coloring = Coloring(req.ambient, col);
    } else {
      res.status = out == Dfs::refuted ? SearchStatus::none_exists : SearchStatus::exhausted;
    }
    return res;
  }

  // Split at the shallowest depth giving a few tasks per worker.
  std::vector<std::vector<std::int32_t>> tasks;
  for (std::int64_t depth = 1; depth <= pb.n; ++depth) {
    tasks.clear();
    prefixes(pb, req.r, col, 0, 0, depth, tasks);
    if (tasks.size() >= static_cast<std::size_t>(4 * workers) || tasks.empty() || depth == pb.n) break;
  }
  std::vector<Dfs> outcome(tasks.size(), Dfs::cancelled);
  std::vector<std::vector<std::int32_t>> solution(tasks.size());
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> best_found{tasks.size()};  // lowest task index with a solution
  std::vector<std::atomic<bool>> cancel(tasks.size());
  auto worker = [&] {
    for (std::size_t t; (t = next.fetch_add(1)) < tasks.size();) {
      if (t > best_found.load()) continue;
      std::vector<std::int32_t> local(static_cast<std::size_t>(pb.n), 0);
      std::copy(tasks[t].begin(), tasks[t].end(), local.begin());
      const auto depth = static_cast<std::int64_t>(tasks[t].size());
      outcome[t] = depth == pb.n ? Dfs::found : dfs(pb, req.r, local, depth, budget, &cancel[t]);
      if (outcome[t] == Dfs::found) {
        solution[t] = std::move(local);
        std::size_t cur = best_found.load();
        while (t < cur && !best_found.compare_exchange_weak(cur, t)) {}
        for (std::size_t u = t + 1; u < tasks.size(); ++u) cancel[u].store(true);
      }
    }
  };
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  res.work = budget.used();
  // The answer is the first task that is not refuted.
  for (std::size_t t = 0; t < tasks.size(); ++t) {
    if (outcome[t] == Dfs::refuted) continue;
    if (outcome[t] == Dfs::found) {
      res.status = SearchStatus::found;
      res.coloring = Coloring(req.ambient, solution[t]);
    } else {
      res.status = SearchStatus::exhausted;
    }
    return res;
  }
  res.status = SearchStatus::none_exists;
  return res;
}

SearchResult randomized(const SearchRequest& req, const Problem& pb) {
  SearchResult res;
  if (pb.trivially_violated) {
    res.status = SearchStatus::none_exists;
    return res;
  }
  if (req.budget == 0) throw InvalidArgument("randomized search needs a positive budget");
  core::Rng rng(req.seed);
  std::vector<std::int32_t> col(static_cast<std::size_t>(pb.n));
  for (auto& c : col) c = static_cast<std::int32_t>(rng.below(static_cast<std::uint64_t>(req.r))) + 1;
  std::vector<std::size_t> bad;
  for (std::uint64_t step = 0;; ++step) {
    bad.clear();
    for (std::size_t i = 0; i < pb.constraints.size(); ++i)
      if (violated(pb.constraints[i], col)) bad.push_back(i);
    if (bad.empty()) {
      std::vector<std::int64_t> labels(col.begin(), col.end());
      res.status = SearchStatus::found;
      res.coloring = Coloring::from_labels(req.ambient, labels);
      res.work = step;
      return res;
    }
    if (step == req.budget) {
      res.status = SearchStatus::exhausted;
      res.work = step;
      return res;
    }
    const auto& c = pb.constraints[bad[rng.below(bad.size())]];
    for (auto [x, y] : c.pairs) {
      col[static_cast<std::size_t>(x)] = static_cast<std::int32_t>(rng.below(static_cast<std::uint64_t>(req.r))) + 1;
      col[static_cast<std::size_t>(y)] = static_cast<std::int32_t>(rng.below(static_cast<std::uint64_t>(req.r))) + 1;
    }
  }
}

}  // namespace

const char* search_status_name(SearchStatus s) noexcept {
  switch (s) {
    case SearchStatus::found: return "found";
    case SearchStatus::none_exists: return "none_exists";
    case SearchStatus::exhausted: return "exhausted";
  }
  return "?";
}

SearchResult search_coloring(const SearchRequest& req) {
  if (req.n < 1) throw InvalidArgument("N must be >= 1");
  if (req.r < 1) throw InvalidArgument("r must be >= 1");
  if (req.n > std::numeric_limits<std::int32_t>::max()) throw ResourceError("N too large");
  const Problem pb = build_problem(req);
  return req.mode == SearchMode::exhaustive ? exhaustive(req, pb) : randomized(req, pb);
}

}  // namespace addcomb::colorings
