#include <doctest.h>

#include <algorithm>
#include <thread>

#include "oracles.hpp"
#include "permkit/errors.hpp"
#include "permkit/metric.hpp"

using namespace permkit;

namespace {

Permutation P(std::vector<int> v) { return Permutation(std::move(v)); }

std::vector<Permutation> all(int n) {
  std::vector<Permutation> out;
  for (auto& v : oracle::all_perms(n)) out.emplace_back(v);
  return out;
}

}  // namespace

TEST_CASE("kendall distance examples") {
  const auto e = Permutation::identity(5);
  CHECK(kendall_distance(e, P({3, 1, 2, 4, 5})) == 2);
  CHECK(kendall_distance(e, P({2, 1, 4, 3, 5})) == 2);
  CHECK(kendall_distance(P({3, 1, 2}), P({3, 1, 2})) == 0);
  CHECK(kendall_distance(Permutation::identity(4), reverse(Permutation::identity(4))) == 6);
  CHECK_THROWS_AS(kendall_distance(e, Permutation::identity(4)), InvalidInput);
}

TEST_CASE("fast kendall distance equals the discordant-pair count") {
  for (int n = 1; n <= 5; ++n) {
    const auto perms = oracle::all_perms(n);
    for (const auto& a : perms)
      for (const auto& b : perms) {
        const int expected = oracle::discordant_pairs(a, b);
        CHECK(kendall_distance(P(a), P(b)) == expected);
        CHECK(kendall_distance_pairs(P(a), P(b)) == expected);
      }
  }
}

TEST_CASE("cyclic distance examples") {
  CHECK(cyclic_kendall_distance(P({1, 2, 3, 4}), P({4, 3, 2, 1})) == 2);
  CHECK(cyclic_kendall_distance(P({2, 4, 1, 3}), P({2, 4, 1, 3})) == 0);
  // Frozen from a per-pair breadth-first search.
  CHECK(cyclic_kendall_distance(P({1, 2, 3, 4}), P({2, 3, 4, 1})) == 3);
  CHECK(oracle::bfs_distance({1, 2, 3, 4}, {2, 3, 4, 1}, true) == 3);
}

TEST_CASE("table distances match per-pair BFS over S4 for both metrics") {
  for (bool cyclic : {false, true}) {
    const Metric m = cyclic ? Metric::CyclicKendall : Metric::Kendall;
    const auto perms = oracle::all_perms(4);
    for (const auto& a : perms) {
      const auto bfs = oracle::bfs_all(a, cyclic);
      for (const auto& b : perms) {
        const int d = distance(P(a), P(b), m);
        CHECK(d == bfs.at(b));
        if (cyclic) CHECK(d <= kendall_distance(P(a), P(b)));
      }
    }
  }
}

TEST_CASE("right-invariance and metric axioms hold on S4") {
  const auto perms = all(4);
  for (Metric m : {Metric::Kendall, Metric::CyclicKendall}) {
    for (const auto& a : perms)
      for (const auto& b : perms) {
        const int dab = distance(a, b, m);
        CHECK(dab == distance(b, a, m));
        CHECK((dab == 0) == (a == b));
        for (const auto& c : perms) {
          CHECK(distance(compose(a, c), compose(b, c), m) == dab);
          CHECK(distance(a, c, m) <= dab + distance(b, c, m));
        }
      }
  }
}

TEST_CASE("distance tables") {
  const auto k4 = build_distance_table(4, Metric::Kendall);
  CHECK(k4.histogram() == std::vector<std::uint64_t>{1, 3, 5, 6, 5, 3, 1});
  CHECK(k4.at(0) == 0);

  const auto c3 = build_distance_table(3, Metric::CyclicKendall);
  CHECK(std::count(c3.raw().begin(), c3.raw().end(), 0) == 1);

  CHECK(build_distance_table(5, Metric::Kendall).max_distance() == 10);

  // Cyclic histograms frozen from an independent breadth-first search.
  CHECK(build_distance_table(4, Metric::CyclicKendall).histogram() ==
        std::vector<std::uint64_t>{1, 4, 10, 8, 1});
  CHECK(build_distance_table(5, Metric::CyclicKendall).histogram() ==
        std::vector<std::uint64_t>{1, 5, 15, 35, 42, 20, 2});
  CHECK(build_distance_table(6, Metric::CyclicKendall).histogram() ==
        std::vector<std::uint64_t>{1, 6, 21, 56, 126, 197, 195, 100, 17, 1});

  for (int n = 2; n <= 7; ++n) {
    const auto t = build_distance_table(n, Metric::Kendall);
    CHECK(t.max_distance() == n * (n - 1) / 2);
    std::vector<int> buf(n);
    for (std::uint64_t r = 0; r < t.size(); r += 7) {
      unrank_into(n, r, buf);
      CHECK(t.at(r) == oracle::inversions(buf));
    }
  }

  CHECK_THROWS_AS(build_distance_table(1, Metric::Kendall), InvalidInput);
  CHECK_THROWS_AS(build_distance_table(table_capacity() + 1, Metric::CyclicKendall), CapacityError);
  CHECK_THROWS_AS(cyclic_kendall_distance(Permutation::identity(11), Permutation::identity(11)),
                  CapacityError);
}

TEST_CASE("cached table is built once under concurrent requests") {
  std::vector<const DistanceTable*> seen(8, nullptr);
  {
    std::vector<std::jthread> pool;
    for (int i = 0; i < 8; ++i)
      pool.emplace_back([&, i] { seen[i] = &cached_table(7, Metric::CyclicKendall); });
  }
  for (auto* p : seen) CHECK(p == seen.front());
}

TEST_CASE("balls") {
  CHECK(ball(Permutation::identity(5), 1, Metric::Kendall).size() == 5);
  CHECK(ball(Permutation::identity(5), 1, Metric::CyclicKendall).size() == 6);
  const auto s = P({2, 4, 1, 3});
  CHECK(ball(s, 0, Metric::Kendall) == std::vector<Permutation>{s});
  CHECK(ball(s, 0, Metric::CyclicKendall) == std::vector<Permutation>{s});
  CHECK_THROWS_AS(ball(s, -1, Metric::Kendall), InvalidInput);

  // Both enumeration routes agree with a brute-force filter, for every
  // radius and several centers.
  for (Metric m : {Metric::Kendall, Metric::CyclicKendall}) {
    const auto perms = all(5);
    for (int radius = 0; radius <= 10; ++radius) {
      std::size_t expected_size = 0;
      for (std::size_t c = 0; c < perms.size(); c += 29) {
        const auto dist = oracle::bfs_all(
            std::vector<int>(perms[c].image().begin(), perms[c].image().end()),
            m == Metric::CyclicKendall);
        std::vector<Permutation> expected;
        for (const auto& p : perms)
          if (dist.at(std::vector<int>(p.image().begin(), p.image().end())) <= radius)
            expected.push_back(p);
        CHECK(ball(perms[c], radius, m) == expected);
        if (c == 0) expected_size = expected.size();
        CHECK(expected.size() == expected_size);
      }
      CHECK(ball_size(5, radius, m) == expected_size);
    }
  }
}

TEST_CASE("mahonian numbers") {
  const auto row4 = mahonian_row(4);
  REQUIRE(row4.size() == 7);
  const std::vector<int> expected{1, 3, 5, 6, 5, 3, 1};
  BigInt total = 0;
  for (int k = 0; k < 7; ++k) {
    CHECK(row4[k] == expected[k]);
    CHECK(mahonian(4, k) == expected[k]);
    total += row4[k];
  }
  CHECK(total == 24);
  CHECK(mahonian(4, 7) == 0);
  CHECK(mahonian(4, -1) == 0);
  for (int n = 1; n <= 12; ++n) CHECK(mahonian(n, 0) == 1);
  CHECK(kendall_ball_size(5, 1) == 5);

  for (int n = 1; n <= 6; ++n) {
    const auto brute = oracle::mahonian_row(n);
    const auto dp = mahonian_row(n);
    REQUIRE(dp.size() == brute.size());
    for (std::size_t k = 0; k < dp.size(); ++k) CHECK(dp[k] == static_cast<unsigned long>(brute[k]));
  }
  // Beyond 64-bit: the row still sums to n!.
  BigInt sum = 0, f = 1;
  for (const auto& v : mahonian_row(25)) sum += v;
  for (int k = 2; k <= 25; ++k) f *= k;
  CHECK(sum == f);
}
