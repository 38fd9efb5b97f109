#include "doctest.h"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "hashfam/bounds.hpp"
#include "hashfam/combinatorics.hpp"
#include "hashfam/mt_engine.hpp"
#include "hashfam/oracles.hpp"

using namespace hashfam;

namespace {

HashMatrix from_rows(std::vector<std::vector<int>> rows, int alphabet) {
  HashMatrix a(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()), alphabet);
  for (size_t r = 0; r < rows.size(); ++r)
    for (size_t c = 0; c < rows[r].size(); ++c)
      a.at(static_cast<int>(r), static_cast<int>(c)) = rows[r][c];
  return a;
}

}  // namespace

TEST_CASE("sample_matrix: range, determinism, rejects m < 2") {
  SplitMix64 rng(42);
  const HashMatrix a = sample_matrix(2, 3, 4, rng);
  for (int v : a.cells) {
    CHECK(v >= 1);
    CHECK(v <= 4);
  }
  SplitMix64 rng2(42);
  const HashMatrix b = sample_matrix(2, 3, 4, rng2);
  CHECK(a.cells == b.cells);
  SplitMix64 rng3(43);
  const HashMatrix c = sample_matrix(2, 3, 4, rng3);
  CHECK(a.cells != c.cells);
  SplitMix64 rng4(1);
  CHECK_THROWS_AS(sample_matrix(1, 1, 1, rng4), std::invalid_argument);
}

TEST_CASE("uniform symbols are unbiased enough and cover the range") {
  SplitMix64 rng(7);
  std::vector<int> counts(6, 0);
  for (int i = 0; i < 60000; ++i) ++counts[static_cast<size_t>(rng.uniform_symbol(6)) - 1];
  for (int c : counts) {
    CHECK(c > 9500);
    CHECK(c < 10500);
  }
}

TEST_CASE("row_is_injective") {
  const int row1[] = {1, 2, 3};
  const std::vector<int> w01 = {0, 1};
  CHECK(row_is_injective(row1, w01));
  const int row2[] = {1, 1, 2};
  CHECK_FALSE(row_is_injective(row2, w01));
  const std::vector<int> single = {1};
  CHECK(row_is_injective(row2, single));
  std::uint64_t comparisons = 0;
  const std::vector<int> all = {0, 1, 2};
  row_is_injective(row1, all, &comparisons);
  CHECK(comparisons == 3);  // C(3,2)
}

TEST_CASE("row_separates") {
  const int row1[] = {1, 1, 2};
  CHECK(row_separates(row1, {{0, 1}, {2}}));   // {1,1} vs {2}
  const int row2[] = {1, 2, 1};
  CHECK_FALSE(row_separates(row2, {{0, 1}, {2}}));  // value 1 on both sides
  CHECK(row_separates(row2, {{0, 2}, {1}}));        // {1,1} vs {2}
  CHECK(row_separates(row1, {{0, 1, 2}}));          // single part: nothing to separate
}

TEST_CASE("find_bad_event_phf returns the lex-first bad subset") {
  const HashMatrix bad = from_rows({{1, 1, 2}}, 4);
  const PhfScan scan = find_bad_event_phf(bad, 2, BadEventPolicy::LexFirst);
  REQUIRE(scan.event.has_value());
  CHECK(*scan.event == std::vector<int>{0, 1});

  const HashMatrix good = from_rows({{1, 2, 3}}, 4);
  CHECK_FALSE(find_bad_event_phf(good, 2, BadEventPolicy::LexFirst).event.has_value());

  const HashMatrix two = from_rows({{1, 1, 1}, {1, 2, 3}}, 4);
  CHECK_FALSE(find_bad_event_phf(two, 3, BadEventPolicy::LexFirst).event.has_value());
}

TEST_CASE("find_bad_event_shf") {
  const HashMatrix sep = from_rows({{1, 2}}, 4);
  CHECK_FALSE(find_bad_event_shf(sep, {1, 1}, BadEventPolicy::LexFirst).event.has_value());

  const HashMatrix collide = from_rows({{1, 1}}, 4);
  const ShfScan scan = find_bad_event_shf(collide, {1, 1}, BadEventPolicy::LexFirst);
  REQUIRE(scan.event.has_value());
  CHECK(*scan.event == std::vector<std::vector<int>>{{0}, {1}});

  const HashMatrix three = from_rows({{1, 1, 2}, {1, 2, 2}, {2, 1, 2}}, 4);
  CHECK_FALSE(find_bad_event_shf(three, {2, 1}, BadEventPolicy::LexFirst).event.has_value());
}

TEST_CASE("family enumeration covers each unordered family once") {
  const auto count_families = [](int n, std::vector<int> parts) {
    long count = 0;
    for_each_family(n, parts, [&](const std::vector<std::vector<int>>&) {
      ++count;
      return true;
    });
    return count;
  };
  const auto expected = [](int n, std::vector<int> parts) {
    int w = 0;
    for (int p : parts) w += p;
    return (binomial(static_cast<unsigned long>(n), w) * family_multiplicity(parts)).get_si();
  };
  CHECK(count_families(6, {1, 2}) == expected(6, {1, 2}));      // 20 * 3
  CHECK(count_families(6, {2, 2}) == expected(6, {2, 2}));      // 15 * 3
  CHECK(count_families(5, {1, 1, 1}) == expected(5, {1, 1, 1}));
  CHECK(count_families(7, {1, 2, 2}) == expected(7, {1, 2, 2}));

  // distinctness: no family visited twice
  std::set<std::vector<std::vector<int>>> seen;
  for_each_family(6, {2, 2}, [&](const std::vector<std::vector<int>>& fam) {
    CHECK(seen.insert(fam).second);
    return true;
  });
}

TEST_CASE("construct PHF at the theorem bound succeeds and verifies") {
  const PhfSpec spec(4, 4, 2);
  const MtResult result = construct(spec, 2, 1);
  CHECK(result.stats.succeeded);
  CHECK_FALSE(verify_phf(result.matrix, 2).has_value());
}

TEST_CASE("construct with a single event (n = w) succeeds from one row") {
  const PhfSpec spec(3, 4, 3);
  const MtResult result = construct(spec, 1, 5);
  CHECK(result.stats.succeeded);
  CHECK_FALSE(verify_phf(result.matrix, 3).has_value());
}

TEST_CASE("construct is deterministic in (spec, N, seed, policy)") {
  const PhfSpec spec(8, 3, 3);
  const MtResult a = construct(spec, 10, 99);
  const MtResult b = construct(spec, 10, 99);
  CHECK(a.matrix.cells == b.matrix.cells);
  CHECK(a.stats.resamples == b.stats.resamples);
  CHECK(a.stats.scans == b.stats.scans);
  const MtResult c = construct(spec, 10, 100);
  CHECK(a.matrix.cells != c.matrix.cells);
}

TEST_CASE("resampling changes only the selected columns") {
  // drive one step by hand: sample, find the bad event, resample its block
  const PhfSpec spec(6, 2, 2);
  SplitMix64 rng(3);
  HashMatrix a = sample_matrix(3, spec.n, spec.m, rng);
  const PhfScan scan = find_bad_event_phf(a, spec.w, BadEventPolicy::LexFirst);
  REQUIRE(scan.event.has_value());  // m=2 with 3 rows: collisions are everywhere
  HashMatrix before = a;
  for (int r = 0; r < a.rows; ++r)
    for (int c : *scan.event) a.at(r, c) = rng.uniform_symbol(spec.m);
  for (int r = 0; r < a.rows; ++r)
    for (int c = 0; c < a.cols; ++c) {
      const bool touched = std::find(scan.event->begin(), scan.event->end(), c) != scan.event->end();
      if (!touched) CHECK(a.at(r, c) == before.at(r, c));
    }
}

TEST_CASE("construct reports the resample limit") {
  // N = 1 row over a tiny alphabet cannot satisfy w = 2 on 6 columns:
  // some pair always collides, so the cap must trigger
  const PhfSpec spec(6, 2, 2);
  const MtResult result = construct(spec, 1, 7, BadEventPolicy::LexFirst, 25);
  CHECK_FALSE(result.stats.succeeded);
  CHECK(result.stats.resamples == 25);
}

TEST_CASE("random policy also converges and stays deterministic per seed") {
  const PhfSpec spec(8, 3, 3);
  const MtResult a = construct(spec, 10, 4, BadEventPolicy::Random);
  CHECK(a.stats.succeeded);
  CHECK_FALSE(verify_phf(a.matrix, 3).has_value());
  const MtResult b = construct(spec, 10, 4, BadEventPolicy::Random);
  CHECK(a.matrix.cells == b.matrix.cells);
}

TEST_CASE("construct SHF at the theorem bound") {
  const ShfSpec spec(8, 4, {1, 2});
  const int rows = static_cast<int>(shf_min_rows(spec).n_clll);
  CHECK(rows == 7);
  const MtResult result = construct(spec, rows, 1);
  CHECK(result.stats.succeeded);
  CHECK_FALSE(verify_shf(result.matrix, spec.parts).has_value());
}

TEST_CASE("scan cost stays within the per-iteration budget") {
  // one full scan costs at most N C(w,2) C(n,w) pair comparisons
  const HashMatrix a = from_rows({{1, 2, 3, 4, 1}, {2, 2, 3, 1, 4}, {1, 3, 2, 4, 2}}, 4);
  CHECK_THROWS_AS(find_bad_event_phf(a, 2, BadEventPolicy::Random, nullptr), std::invalid_argument);
  for (int w : {2, 3, 4}) {
    SplitMix64 rng(1);
    const PhfScan scan = find_bad_event_phf(a, w, BadEventPolicy::Random, &rng);
    const BigInt budget = BigInt(a.rows) * binomial(static_cast<unsigned long>(w), 2) *
                          binomial(static_cast<unsigned long>(a.cols), w);
    CHECK(BigInt(static_cast<unsigned long>(scan.pair_comparisons)) <= budget);
  }
}

TEST_CASE("default resample cap") {
  CHECK(default_resample_cap(4, 2) == 600);  // 100 C(4,2)
  CHECK(default_resample_cap(1000, 50) == (1ULL << 63));
}
