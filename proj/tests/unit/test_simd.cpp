#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "addcomb/simd/kernels.hpp"

using namespace addcomb::simd;

namespace {

// Kernels to compare against the scalar reference; empty without AVX2.
std::vector<const Kernels*> vector_variants() {
  std::vector<const Kernels*> out;
  if (isa_available(Isa::avx2)) out.push_back(&kernels_for(Isa::avx2));
  return out;
}

bool bit(const std::vector<std::uint64_t>& v, std::uint64_t i) { return v[i / 64] >> (i % 64) & 1; }

}  // namespace

TEST_SUITE("simd") {
  TEST_CASE("pattern scans agree across ISAs") {
    std::mt19937_64 rng(1);
    const auto& ref = kernels_for(Isa::scalar);
    for (int trial = 0; trial < 200; ++trial) {
      const int k = 3 + static_cast<int>(rng() % 6);
      const std::int64_t count = static_cast<std::int64_t>(rng() % 70);
      const int colors = 1 + static_cast<int>(rng() % 3);
      std::vector<std::vector<std::int32_t>> rows(static_cast<std::size_t>(k));
      for (auto& row : rows) {
        row.resize(static_cast<std::size_t>(count) + 8);
        for (auto& x : row) x = static_cast<std::int32_t>(rng() % static_cast<std::uint64_t>(colors));
      }
      PatternScan s;
      s.lane_count = static_cast<std::size_t>(k);
      for (int i = 0; i < k; ++i) s.lanes[static_cast<std::size_t>(i)] = rows[static_cast<std::size_t>(i)].data();
      const int nclauses = 1 + static_cast<int>(rng() % 3);
      std::size_t np = 0;
      for (int c = 0; c < nclauses; ++c) {
        s.clause_begin[static_cast<std::size_t>(c)] = static_cast<std::uint16_t>(np);
        const int len = 1 + static_cast<int>(rng() % 3);
        for (int p = 0; p < len; ++p, ++np) {
          s.lhs[np] = static_cast<std::uint8_t>(rng() % static_cast<std::uint64_t>(k));
          s.rhs[np] = static_cast<std::uint8_t>(rng() % static_cast<std::uint64_t>(k));
        }
      }
      s.clause_count = static_cast<std::size_t>(nclauses);
      s.clause_begin[s.clause_count] = static_cast<std::uint16_t>(np);

      // Oracle.
      std::int64_t expect_count = 0, expect_first = -1;
      for (std::int64_t n = 0; n < count; ++n) {
        bool any = false;
        for (std::size_t c = 0; c < s.clause_count; ++c) {
          bool all = true;
          for (std::size_t p = s.clause_begin[c]; p < s.clause_begin[c + 1]; ++p)
            all = all && rows[s.lhs[p]][static_cast<std::size_t>(n)] == rows[s.rhs[p]][static_cast<std::size_t>(n)];
          any = any || all;
        }
        if (any) {
          ++expect_count;
          if (expect_first < 0) expect_first = n;
        }
      }
      CHECK(ref.count_matches(s, count) == expect_count);
      CHECK(ref.first_match(s, count) == expect_first);
      for (const auto* v : vector_variants()) {
        CHECK(v->count_matches(s, count) == expect_count);
        CHECK(v->first_match(s, count) == expect_first);
      }
    }
  }

  TEST_CASE("shifted product sums agree") {
    std::mt19937_64 rng(2);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    const auto& ref = kernels_for(Isa::scalar);
    for (std::int64_t count : {0, 1, 7, 8, 9, 31, 64, 1000}) {
      for (int k = 1; k <= 5; ++k) {
        std::vector<std::vector<double>> data(static_cast<std::size_t>(k), std::vector<double>(static_cast<std::size_t>(count) + 1));
        std::vector<const double*> rows;
        for (auto& d : data) {
          for (auto& x : d) x = u(rng);
          rows.push_back(d.data());
        }
        const double expect = ref.shifted_product_sum(rows, count);
        for (const auto* v : vector_variants())
          CHECK(v->shifted_product_sum(rows, count) == doctest::Approx(expect).epsilon(1e-12));
      }
    }
  }

  TEST_CASE("shifted and-popcount agrees with bitwise oracle") {
    std::mt19937_64 rng(3);
    const auto& ref = kernels_for(Isa::scalar);
    for (int trial = 0; trial < 150; ++trial) {
      const std::uint64_t nbits = rng() % 1500;
      const int k = 1 + static_cast<int>(rng() % 4);
      std::vector<std::vector<std::uint64_t>> data;
      std::vector<const std::uint64_t*> rows;
      std::vector<std::uint64_t> offsets;
      for (int i = 0; i < k; ++i) {
        const std::uint64_t off = rng() % 700;
        std::vector<std::uint64_t> words(words_for(off + nbits) + 4);
        for (auto& w : words) w = rng() & rng();
        data.push_back(std::move(words));
        offsets.push_back(off);
      }
      for (auto& d : data) rows.push_back(d.data());
      std::uint64_t expect = 0;
      for (std::uint64_t j = 0; j < nbits; ++j) {
        bool all = true;
        for (int i = 0; i < k; ++i) all = all && bit(data[static_cast<std::size_t>(i)], offsets[static_cast<std::size_t>(i)] + j);
        expect += all;
      }
      CHECK(ref.shifted_and_popcount(rows, offsets, nbits) == expect);
      for (const auto* v : vector_variants()) CHECK(v->shifted_and_popcount(rows, offsets, nbits) == expect);
    }
  }

  TEST_CASE("sum of fourth powers agrees") {
    std::mt19937_64 rng(4);
    std::normal_distribution<double> g;
    const auto& ref = kernels_for(Isa::scalar);
    for (std::size_t n : {0u, 1u, 3u, 4u, 5u, 17u, 256u}) {
      std::vector<double> z(2 * n);
      for (auto& x : z) x = g(rng);
      double expect = 0;
      for (std::size_t j = 0; j < n; ++j) expect += std::pow(std::hypot(z[2 * j], z[2 * j + 1]), 4);
      CHECK(ref.sum_abs4(z.data(), n) == doctest::Approx(expect).epsilon(1e-12));
      for (const auto* v : vector_variants()) CHECK(v->sum_abs4(z.data(), n) == doctest::Approx(expect).epsilon(1e-12));
    }
  }

  TEST_CASE("rotate-or agrees with bitwise oracle") {
    std::mt19937_64 rng(5);
    std::vector<const Kernels*> all{&kernels_for(Isa::scalar)};
    for (const auto* v : vector_variants()) all.push_back(v);
    for (int trial = 0; trial < 300; ++trial) {
      const std::uint64_t nbits = 1 + rng() % 1200;
      const std::uint64_t shift = rng() % nbits;
      std::vector<std::uint64_t> src(words_for(nbits), 0), dst0(words_for(nbits), 0);
      for (std::uint64_t b = 0; b < nbits; ++b) {
        if (rng() % 3 == 0) src[b / 64] |= 1ULL << (b % 64);
        if (rng() % 5 == 0) dst0[b / 64] |= 1ULL << (b % 64);
      }
      std::vector<std::uint64_t> expect = dst0;
      for (std::uint64_t b = 0; b < nbits; ++b)
        if (bit(src, b)) {
          const std::uint64_t t = (b + shift) % nbits;
          expect[t / 64] |= 1ULL << (t % 64);
        }
      for (const auto* kern : all) {
        std::vector<std::uint64_t> dst = dst0;
        kern->or_rotated(dst.data(), src.data(), nbits, shift);
        bool same = true;
        for (std::uint64_t b = 0; b < nbits; ++b) same = same && bit(dst, b) == bit(expect, b);
        // No stray bits past nbits.
        for (std::uint64_t b = nbits; b < 64 * (nbits / 64 + 1); ++b) same = same && !bit(dst, b);
        CHECK(same);
      }
    }
  }

  TEST_CASE("dispatch") {
    CHECK(isa_available(Isa::scalar));
    const Isa before = active_isa();
    force_isa(Isa::scalar);
    CHECK(active_isa() == Isa::scalar);
    CHECK(kernels().isa == Isa::scalar);
    force_isa(before);
    CHECK(std::string(isa_name(Isa::avx2)) == "avx2");
  }
}
