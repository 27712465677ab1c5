#include <doctest.h>

#include <random>
#include <set>

#include "addcomb/colorings/construct.hpp"
#include "addcomb/colorings/naive.hpp"
#include "addcomb/colorings/search.hpp"
#include "addcomb/colorings/verify.hpp"
#include "addcomb/core/errors.hpp"

using namespace addcomb;
using namespace addcomb::colorings;
using core::PatternSpec;

namespace {

const char* kZ22 = "1333221232131211333233";

Coloring random_coloring(std::mt19937_64& rng, Ambient amb, std::int64_t n, int r) {
  std::vector<std::int64_t> labels(static_cast<std::size_t>(n));
  for (auto& x : labels) x = static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(r));
  return Coloring::from_labels(amb, labels);
}

bool same_nd(const Verdict& a, const Verdict& b) {
  if (a.has_value() != b.has_value()) return false;
  return !a || (a->n == b->n && a->d == b->d && a->points == b->points);
}

// Whether some r-coloring of Z/NZ avoids symmetric 4-APs, by enumerating all r^N.
bool brute_satisfiable(std::int64_t N, int r) {
  std::vector<std::int32_t> col(static_cast<std::size_t>(N), 0);
  while (true) {
    bool ok = true;
    for (std::int64_t n = 0; n < N && ok; ++n)
      for (std::int64_t d = 1; d < N && ok; ++d) {
        auto at = [&](std::int64_t i) { return col[static_cast<std::size_t>((n + i * d) % N)]; };
        if (at(0) == at(3) && at(1) == at(2)) ok = false;
      }
    if (ok) return true;
    std::size_t i = 0;
    while (i < col.size() && ++col[i] == r) col[i++] = 0;
    if (i == col.size()) return false;
  }
}

}  // namespace

TEST_SUITE("colorings") {
  TEST_CASE("coloring invariants") {
    const auto c = Coloring::from_digits(Ambient::cyclic, kZ22);
    CHECK(c.size() == 22);
    CHECK(c.r() == 3);
    CHECK(c.to_digits() == kZ22);
    CHECK(c.at_mod(-1) == 3);
    CHECK_THROWS_AS(Coloring(Ambient::cyclic, {1, 3}), InvalidArgument);
    CHECK_THROWS_AS(Coloring(Ambient::cyclic, {0, 1}), InvalidArgument);
    CHECK_THROWS_AS(Coloring(Ambient::cyclic, {}), InvalidArgument);
    const std::vector<std::int64_t> labels{9, 4, 9, 7};
    CHECK(Coloring::from_labels(Ambient::interval, labels).colors()[3] == 3);
  }

  TEST_CASE("symmetric 4-APs") {
    const auto z22 = Coloring::from_digits(Ambient::cyclic, kZ22);
    CHECK_FALSE(verify_symmetric_ap_free(z22, 4));
    CHECK_FALSE(naive::symmetric_ap(z22, PatternSpec::arithmetic(4)));
    CHECK_FALSE(verify_sym_a_ap_free(z22, PatternSpec({0, 1, 2, 3})));

    // The d = 11 constraint c(n) != c(n + 11) holds in the witness.
    for (int n = 0; n < 11; ++n) CHECK(z22[n] != z22[n + 11]);

    const auto w = verify_symmetric_ap_free(Coloring::constant(Ambient::cyclic, 6), 4);
    REQUIRE(w);
    CHECK(w->n == 0);
    CHECK(w->d == 1);
    CHECK(w->points == std::vector<std::int64_t>{0, 1, 2, 3});

    for (std::int64_t N : {5, 7, 9}) {
      const auto c = Coloring::all_distinct(Ambient::cyclic, N);
      CHECK_FALSE(verify_symmetric_ap_free(c, 4));
      CHECK_FALSE(naive::symmetric_ap(c, PatternSpec::arithmetic(4)));
    }
    // A symmetric 4-AP in distinct colors needs 3d = 0 and d = 0, so even N passes too.
    for (std::int64_t N : {4, 6, 8, 12})
      CHECK_FALSE(verify_symmetric_ap_free(Coloring::all_distinct(Ambient::cyclic, N), 4));
    CHECK_THROWS_AS(verify_symmetric_ap_free(z22, 5), InvalidArgument);
    CHECK_THROWS_AS(verify_sym_a_ap_free(z22, PatternSpec({0, 1, 3, 4, 9, 10})), InvalidArgument);
  }

  TEST_CASE("verifier soundness against the naive scanner") {
    std::mt19937_64 rng(7);
    const std::vector<PatternSpec> specs{PatternSpec::arithmetic(4), PatternSpec::arithmetic(6),
                                         PatternSpec({0, 1, 3, 4}), PatternSpec({1, 2, 3, 6, 7, 8})};
    for (int trial = 0; trial < 120; ++trial) {
      const auto amb = trial % 2 ? Ambient::cyclic : Ambient::interval;
      const std::int64_t N = 1 + static_cast<std::int64_t>(rng() % 200);
      const int r = 2 + static_cast<int>(rng() % 6);
      const auto c = random_coloring(rng, amb, N, r);
      const auto& spec = specs[static_cast<std::size_t>(trial) % specs.size()];
      const auto fast = verify_sym_a_ap_free(c, spec);
      CHECK(same_nd(fast, naive::symmetric_ap(c, spec)));
      if (fast) CHECK(witness_reproduces(c, *fast, symmetric_clauses(spec)));
    }
  }

  TEST_CASE("binomial patterns") {
    const auto z22 = Coloring::from_digits(Ambient::cyclic, kZ22);
    CHECK_FALSE(verify_binomial_pattern_free(z22, PatternSpec::arithmetic(4)));

    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 40; ++trial) {
      const auto c = random_coloring(rng, Ambient::cyclic, 10 + static_cast<std::int64_t>(rng() % 40), 3);
      CHECK(same_nd(verify_binomial_pattern_free(c, PatternSpec::arithmetic(4)), verify_symmetric_ap_free(c, 4)));
    }

    const auto w = verify_binomial_pattern_free(Coloring::constant(Ambient::cyclic, 9), PatternSpec::arithmetic(5));
    REQUIRE(w);
    CHECK(w->detail == "subset {1,2,3,4,5}");

    // Product of the Z/22Z witness with a mono-3-pattern-free coloring, k = 6.
    const auto mono_free = Coloring::all_distinct(Ambient::cyclic, 22);
    const auto prod = product_coloring(z22, mono_free);
    CHECK(same_nd(verify_binomial_pattern_free(prod, PatternSpec::arithmetic(6)),
                  naive::binomial_pattern(prod, PatternSpec::arithmetic(6))));

    for (int trial = 0; trial < 40; ++trial) {
      const auto amb = trial % 2 ? Ambient::cyclic : Ambient::interval;
      const auto c = random_coloring(rng, amb, 5 + static_cast<std::int64_t>(rng() % 60), 4 + static_cast<int>(rng() % 6));
      for (const auto& spec : {PatternSpec({1, 2, 10, 16, 17, 20}), PatternSpec::arithmetic(5), PatternSpec({0, 1, 3})}) {
        const auto fast = verify_binomial_pattern_free(c, spec);
        CHECK(same_nd(fast, naive::binomial_pattern(c, spec)));
        if (fast) CHECK(witness_reproduces(c, *fast, binomial_clauses(spec)));
      }
    }
  }

  TEST_CASE("monochromatic k-patterns") {
    for (auto amb : {Ambient::cyclic, Ambient::interval}) {
      CHECK_FALSE(verify_mono_pattern_free(Coloring::all_distinct(amb, 30), 5));
      CHECK(verify_mono_pattern_free(Coloring::constant(amb, 3), 3));
    }
    const auto c8 = Coloring::from_digits(Ambient::cyclic, "11221122");
    const auto fast = verify_mono_pattern_free(c8, 4);
    const auto slow = naive::mono_pattern(c8, 4);
    REQUIRE(fast.has_value() == slow.has_value());
    if (fast) CHECK(fast->points == slow->points);

    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 60; ++trial) {
      const auto amb = trial % 2 ? Ambient::cyclic : Ambient::interval;
      const auto c = random_coloring(rng, amb, 1 + static_cast<std::int64_t>(rng() % 40), 2 + static_cast<int>(rng() % 10));
      const int k = 3 + static_cast<int>(rng() % 4);
      const auto f = verify_mono_pattern_free(c, k);
      const auto s = naive::mono_pattern(c, k);
      REQUIRE(f.has_value() == s.has_value());
      if (f) {
        CHECK(f->points == s->points);
        CHECK(core::is_k_pattern(f->points[0], f->points[1], f->points[2], k,
                                 amb == Ambient::cyclic ? c.size() : 1'000'000'007));
      }
    }
  }

  TEST_CASE("ABAB and asymmetric ABBA") {
    CHECK(verify_abab_abba_free(Coloring::constant(Ambient::cyclic, 8), 6));
    CHECK_THROWS_AS(verify_abab_abba_free(Coloring::constant(Ambient::cyclic, 8), 3), InvalidArgument);

    std::mt19937_64 rng(10);
    for (int trial = 0; trial < 6; ++trial) {
      const auto c = random_coloring(rng, Ambient::cyclic, 50, 5);
      CHECK(same_nd(verify_abab_abba_free(c, 6), naive::abab_abba(c, 6)));
    }
    const auto ci = random_coloring(rng, Ambient::interval, 40, 6);
    CHECK(same_nd(verify_abab_abba_free(ci, 5), naive::abab_abba(ci, 5)));

    // The digit-square coloring on the grid {0..M-1}^2, scanned over all
    // n, d in Z^2 with d != 0.
    const int M = 6, a_bound = 5;
    auto psi = [](int x, int y) { return x * x + y * y + 1; };
    bool found = false;
    for (int a2 = 1; a2 < a_bound; ++a2)
      for (int a3 = a2 + 1; a3 < a_bound; ++a3)
        for (int a4 = a3 + 1; a4 < a_bound; ++a4) {
          const int a[4] = {0, a2, a3, a4};
          for (int nx = 0; nx < M; ++nx)
            for (int ny = 0; ny < M; ++ny)
              for (int dx = -M; dx <= M; ++dx)
                for (int dy = -M; dy <= M; ++dy) {
                  if (dx == 0 && dy == 0) continue;
                  int v[4];
                  bool inside = true;
                  for (int i = 0; i < 4; ++i) {
                    const int x = nx + a[i] * dx, y = ny + a[i] * dy;
                    inside = inside && x >= 0 && x < M && y >= 0 && y < M;
                    v[i] = inside ? psi(x, y) : 0;
                  }
                  if (!inside) continue;
                  if (v[0] == v[2] && v[1] == v[3]) found = true;
                  if (a4 != a2 + a3 && v[0] == v[3] && v[1] == v[2]) found = true;
                }
        }
    CHECK_FALSE(found);
  }

  TEST_CASE("mod-Behrend coloring") {
    // M coprime to 4! = 24.
    for (auto [M, m] : {std::pair{5, 2}, std::pair{7, 2}, std::pair{5, 3}}) {
      const auto c = mod_behrend_coloring(M, m, 4);
      CHECK(c.size() == static_cast<std::int64_t>(std::pow(M, m)));
      CHECK_FALSE(verify_abab_abba_free(c, 4));
      if (c.size() <= 50) CHECK_FALSE(naive::abab_abba(c, 4));
    }
    CHECK_FALSE(verify_abab_abba_free(mod_behrend_coloring(7, 2, 5), 5));
    CHECK_THROWS_AS(mod_behrend_coloring(6, 2, 4), PreconditionError);
  }

  TEST_CASE("tensor power") {
    const auto z22 = Coloring::from_digits(Ambient::cyclic, kZ22);
    CHECK(tensor_power(z22, 1) == z22);
    const auto t2 = tensor_power(z22, 2);
    CHECK(t2.size() == 484);
    CHECK(t2.r() == 9);
    CHECK_FALSE(verify_symmetric_ap_free(t2, 4));

    // Digit convention: least significant digit first.
    const auto small = Coloring::from_digits(Ambient::cyclic, "2112");
    const auto ts = tensor_power(small, 2);
    for (std::int64_t n = 0; n < 16; ++n) CHECK(ts[n] == 1 + (small[n % 4] - 1) + 2 * (small[n / 4] - 1));

    const auto bad = Coloring::from_digits(Ambient::cyclic, "1221");
    REQUIRE(verify_symmetric_ap_free(bad, 4));
    CHECK(verify_symmetric_ap_free(tensor_power(bad, 2), 4));
    CHECK_THROWS_AS(tensor_power(z22, 7), ResourceError);
    CHECK_THROWS_AS(tensor_power(Coloring::constant(Ambient::interval, 4), 2), InvalidArgument);
  }

  TEST_CASE("product coloring") {
    const auto z22 = Coloring::from_digits(Ambient::cyclic, kZ22);
    const auto relabeled = product_coloring(z22, Coloring::constant(Ambient::cyclic, 22));
    CHECK(relabeled.r() == z22.r());
    for (std::int64_t i = 0; i < 22; ++i)
      for (std::int64_t j = 0; j < 22; ++j) CHECK((relabeled[i] == relabeled[j]) == (z22[i] == z22[j]));

    const auto a = Coloring::from_digits(Ambient::cyclic, "112212");
    const auto b = Coloring::from_digits(Ambient::cyclic, "121122");
    const auto p = product_coloring(a, b);
    CHECK(p.r() <= 4);
    for (std::int64_t i = 0; i < 6; ++i)
      for (std::int64_t j = 0; j < 6; ++j) CHECK((p[i] == p[j]) == (a[i] == a[j] && b[i] == b[j]));
    CHECK_THROWS_AS(product_coloring(a, Coloring::constant(Ambient::cyclic, 5)), InvalidArgument);
    CHECK_THROWS_AS(product_coloring(a, Coloring::constant(Ambient::interval, 6)), InvalidArgument);

    // Refinement keeps every freeness property of either factor.
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 20; ++trial) {
      const auto other = random_coloring(rng, Ambient::cyclic, 22, 3);
      const auto q = product_coloring(z22, other);
      CHECK_FALSE(verify_symmetric_ap_free(q, 4));
      CHECK_FALSE(verify_binomial_pattern_free(q, PatternSpec::arithmetic(4)));
    }
  }

  TEST_CASE("all-distinct interval colorings pass every verifier") {
    for (std::int64_t N = 1; N <= 50; N += 7) {
      const auto c = Coloring::all_distinct(Ambient::interval, N);
      CHECK_FALSE(verify_symmetric_ap_free(c, 4));
      CHECK_FALSE(verify_symmetric_ap_free(c, 6));
      CHECK_FALSE(verify_mono_pattern_free(c, 5));
      CHECK_FALSE(verify_binomial_pattern_free(c, PatternSpec({1, 2, 10, 16, 17, 20})));
      CHECK_FALSE(verify_abab_abba_free(c, 6));
    }
  }

  TEST_CASE("exhaustive search") {
    SearchRequest req;
    req.n = 22;
    req.r = 3;
    auto res = search_coloring(req);
    REQUIRE(res.status == SearchStatus::found);
    CHECK_FALSE(verify_symmetric_ap_free(*res.coloring, 4));

    req.workers = 3;
    auto par = search_coloring(req);
    REQUIRE(par.status == SearchStatus::found);
    CHECK(*par.coloring == *res.coloring);

    SearchRequest trivial;
    trivial.n = 4;
    trivial.r = 1;
    CHECK(search_coloring(trivial).status == SearchStatus::none_exists);

    SearchRequest capped = req;
    capped.workers = 1;
    capped.budget = 10;
    CHECK(search_coloring(capped).status == SearchStatus::exhausted);

    SearchRequest too_big = req;
    too_big.n = 100;
    CHECK_THROWS_AS(search_coloring(too_big), PreconditionError);
  }

  TEST_CASE("exhaustive search agrees with full enumeration") {
    for (std::int64_t N = 1; N <= 10; ++N)
      for (int r = 1; r <= 3; ++r) {
        if (r == 3 && N > 9) continue;  // 3^10 is slow under the naive loop
        SearchRequest req;
        req.n = N;
        req.r = r;
        const auto res = search_coloring(req);
        CHECK_MESSAGE((res.status == SearchStatus::found) == brute_satisfiable(N, r), "N=" << N << " r=" << r);
        if (res.coloring) CHECK_FALSE(verify_symmetric_ap_free(*res.coloring, 4));
      }
  }

  TEST_CASE("randomized search") {
    SearchRequest req;
    req.n = 40;
    req.r = 8;
    req.mode = SearchMode::randomized;
    req.budget = 200000;
    req.seed = 17;
    const auto a = search_coloring(req);
    const auto b = search_coloring(req);
    REQUIRE(a.status == SearchStatus::found);
    CHECK(*a.coloring == *b.coloring);
    CHECK(a.work == b.work);
    CHECK_FALSE(verify_symmetric_ap_free(*a.coloring, 4));

    req.budget = 0;
    CHECK_THROWS_AS(search_coloring(req), InvalidArgument);
    req.budget = 1;
    req.r = 1;
    CHECK(search_coloring(req).status == SearchStatus::exhausted);
  }

  TEST_CASE("interval ambient copies") {
    const auto c = Coloring::from_digits(Ambient::interval, "1213");
    const auto cy = copies_to_cyclic(c, 3);
    CHECK(cy.size() == 12);
    CHECK(cy.r() == 9);
    CHECK(cy[4] == 4);
  }
}
