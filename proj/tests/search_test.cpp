#include <doctest.h>

#include "oracles.hpp"
#include "permkit/errors.hpp"
#include "permkit/search.hpp"

using namespace permkit;

namespace {

int brute_max_code(int n, int d, bool cyclic) {
  const auto perms = oracle::all_perms(n);
  std::vector<std::map<oracle::Perm, int>> dist;
  for (const auto& p : perms) dist.push_back(oracle::bfs_all(p, cyclic));
  return oracle::max_compatible_set(static_cast<int>(perms.size()),
                                    [&](int a, int b) { return dist[a].at(perms[b]) >= d; });
}

}  // namespace

TEST_CASE("perfect-code search verdicts") {
  SUBCASE("S3 Kendall has a perfect single-error-correcting code") {
    const auto cert = exact_cover_perfect_search(3, 1, Metric::Kendall);
    CHECK(cert.verdict == Verdict::ExistenceWitness);
    REQUIRE(cert.witness);
    CHECK(cert.witness->size() == 2);
    CHECK(verify_perfect(*cert.witness, 1).perfect);
  }
  SUBCASE("S4, S5, S6 Kendall have none") {
    for (int n : {4, 5, 6}) {
      const auto cert = exact_cover_perfect_search(n, 1, Metric::Kendall);
      CHECK(cert.verdict == Verdict::Nonexistence);
      CHECK(cert.method == Method::ExactCover);
    }
  }
  SUBCASE("S5 cyclic has one") {
    const auto cert = exact_cover_perfect_search(5, 1, Metric::CyclicKendall);
    CHECK(cert.verdict == Verdict::ExistenceWitness);
    REQUIRE(cert.witness);
    CHECK(cert.witness->size() == 20);
    CHECK(cert.witness->contains(Permutation::identity(5)));
    CHECK(min_distance(*cert.witness) == 3);
  }
  SUBCASE("divisibility short-circuit") {
    // Cyclic radius-1 ball in S4 has 5 members; 24 is not a multiple.
    const auto cert = exact_cover_perfect_search(4, 1, Metric::CyclicKendall);
    CHECK(cert.method == Method::Divisibility);
    CHECK(cert.verdict == Verdict::Nonexistence);
    CHECK(cert.ball_size == 5);
  }
  SUBCASE("radius 0 is trivially perfect") {
    const auto cert = exact_cover_perfect_search(4, 0, Metric::Kendall);
    CHECK(cert.verdict == Verdict::ExistenceWitness);
    CHECK(cert.witness->size() == 24);
  }
  SUBCASE("budget exhaustion is inconclusive") {
    const auto cert = exact_cover_perfect_search(8, 1, Metric::Kendall, {0.0, 1});
    CHECK(cert.verdict == Verdict::Inconclusive);
    CHECK(cert.stats.budget_exhausted);
  }
  CHECK_THROWS_AS(exact_cover_perfect_search(1, 1, Metric::Kendall), InvalidInput);
  CHECK_THROWS_AS(exact_cover_perfect_search(4, -1, Metric::Kendall), InvalidInput);
}

TEST_CASE("maximum code search matches brute force") {
  for (bool cyclic : {false, true}) {
    const Metric m = cyclic ? Metric::CyclicKendall : Metric::Kendall;
    for (int n = 3; n <= 4; ++n)
      for (int d = 1; d <= n * (n - 1) / 2 + 1; ++d) {
        const auto res = max_code_search(n, d, m, CodeSearchMethod::ExactClique);
        CAPTURE(n);
        CAPTURE(d);
        CHECK(res.optimal);
        CHECK(static_cast<int>(res.code.size()) == brute_max_code(n, d, cyclic));
      }
  }
  CHECK(max_code_search(3, 3, Metric::Kendall, CodeSearchMethod::ExactClique).code.size() == 2);
  CHECK(max_code_search(4, 7, Metric::Kendall, CodeSearchMethod::ExactClique).code.size() == 1);
  CHECK(max_code_search(4, 3, Metric::Kendall, CodeSearchMethod::ExactClique).code.size() == 5);
}

TEST_CASE("greedy search respects the distance and the sphere-packing bound") {
  const auto res = max_code_search(5, 4, Metric::Kendall, CodeSearchMethod::GreedyLex);
  CHECK_FALSE(res.optimal);
  CHECK(min_distance(res.code) >= 4);
  // Radius-1 balls around the words are disjoint: |C| * 5 <= 120.
  CHECK(res.code.size() * ball_size(5, 1, Metric::Kendall) <= 120);

  const auto cyc = max_code_search(6, 3, Metric::CyclicKendall, CodeSearchMethod::GreedyLex);
  CHECK(min_distance(cyc.code) >= 3);
  CHECK(cyc.code.size() * ball_size(6, 1, Metric::CyclicKendall) <= 720);
}

TEST_CASE("code search arguments") {
  CHECK(parse_code_search_method("exact") == CodeSearchMethod::ExactClique);
  CHECK(parse_code_search_method("greedy_lex") == CodeSearchMethod::GreedyLex);
  CHECK_THROWS_AS(parse_code_search_method("annealing"), InvalidInput);
  CHECK_THROWS_AS(max_code_search(6, 3, Metric::Kendall, CodeSearchMethod::ExactClique), CapacityError);
  CHECK_THROWS_AS(max_code_search(4, 0, Metric::Kendall, CodeSearchMethod::GreedyLex), InvalidInput);
}
