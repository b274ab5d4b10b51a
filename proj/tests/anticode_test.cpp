#include <doctest.h>

#include "oracles.hpp"
#include "permkit/anticode.hpp"
#include "permkit/errors.hpp"
#include "permkit/search.hpp"

using namespace permkit;

namespace {

oracle::Perm V(const Permutation& p) { return {p.image().begin(), p.image().end()}; }

int brute_diameter(const std::vector<Permutation>& set) {
  int best = 0;
  for (const auto& a : set)
    for (const auto& b : set) best = std::max(best, oracle::discordant_pairs(V(a), V(b)));
  return best;
}

int brute_max_anticode(int n, int diam) {
  const auto perms = oracle::all_perms(n);
  return oracle::max_compatible_set(static_cast<int>(perms.size()), [&](int a, int b) {
    return oracle::discordant_pairs(perms[a], perms[b]) <= diam;
  });
}

}  // namespace

TEST_CASE("diameter") {
  const auto e = Permutation::identity(5);
  CHECK(diameter({e}, Metric::Kendall) == 0);
  CHECK(diameter({e, reverse(e)}, Metric::Kendall) == 10);
  CHECK(diameter({e, reverse(e)}, Metric::CyclicKendall) ==
        oracle::bfs_distance(V(e), V(reverse(e)), true));
  CHECK_THROWS_AS(diameter({}, Metric::Kendall), InvalidInput);
}

TEST_CASE("diameter-3 anticode sizes") {
  for (int n = 4; n <= 8; ++n) {
    const auto a = construct_diameter3_anticode(n);
    CAPTURE(n);
    CHECK(a.size() == static_cast<std::size_t>(2 * (n - 1)));
    CHECK(a.diameter == 3);
    if (n <= 7) CHECK(brute_diameter(a.members) == 3);
  }
  for (int n = 4; n <= 5; ++n) CHECK(brute_max_anticode(n, 3) >= 2 * (n - 1));
}

TEST_CASE("half-space anticode") {
  for (int n = 3; n <= 6; ++n) {
    const auto a = half_space_anticode(n);
    std::uint64_t f = 1;
    for (int k = 2; k <= n; ++k) f *= k;
    CHECK(a.size() == f / 2);
    CHECK(a.diameter == n * (n - 1) / 2 - 1);
    for (const auto& m : a.members) CHECK(std::find(a.members.begin(), a.members.end(), reverse(m)) == a.members.end());
  }
  const auto rp = reverse_pair_code(Permutation::parse("2 4 1 3"));
  CHECK(rp.size() == 2);
  CHECK(min_distance(rp) == 6);
}

TEST_CASE("optimal anticode search matches brute force") {
  for (int d = 1; d <= 6; ++d) {
    const auto res = optimal_anticode_search(4, d, Metric::Kendall, false);
    CAPTURE(d);
    CHECK(res.complete);
    CHECK(res.max_size == brute_max_anticode(4, d));
  }
  const auto s4d2 = optimal_anticode_search(4, 2, Metric::Kendall, true);
  CHECK(s4d2.max_size == 4);
  REQUIRE(s4d2.all_optima_are_balls);
  CHECK_FALSE(*s4d2.all_optima_are_balls);
  for (const auto& w : s4d2.witnesses) {
    CHECK(w.diameter <= 2);
    CHECK(std::binary_search(w.members.begin(), w.members.end(), Permutation::identity(4)));
  }

  const auto s5d2 = optimal_anticode_search(5, 2, Metric::Kendall, true);
  CHECK(s5d2.max_size == 5);
  REQUIRE(s5d2.all_optima_are_balls);
  CHECK(*s5d2.all_optima_are_balls);

  CHECK_THROWS_AS(optimal_anticode_search(7, 2, Metric::Kendall, false), CapacityError);
  CHECK_THROWS_AS(optimal_anticode_search(6, 2, Metric::Kendall, true), CapacityError);
}

TEST_CASE("balls are feasible anticodes") {
  for (auto [n, r] : {std::pair{4, 1}, {4, 2}, {5, 1}}) {
    const auto res = optimal_anticode_search(n, 2 * r, Metric::Kendall, false);
    CHECK(BigInt(res.max_size) >= kendall_ball_size(n, r));
  }
}

TEST_CASE("is_ball") {
  const auto b = ball(Permutation::parse("2 1 3 4"), 1, Metric::Kendall);
  CHECK(is_ball(b, 1, Metric::Kendall));
  CHECK_FALSE(is_ball(construct_diameter3_anticode(4).members, 1, Metric::Kendall));
}

TEST_CASE("code-anticode bound") {
  const auto b43 = code_anticode_bound(4, 3, true);
  CHECK(b43.bound_value == "6");
  CHECK(b43.anticode_size == 4);
  CHECK_FALSE(b43.achieving_code);
  CHECK(max_code_search(4, 3, Metric::Kendall, CodeSearchMethod::ExactClique).code.size() <= 6);

  const auto b53 = code_anticode_bound(5, 3);
  CHECK(b53.bound_value == "24");

  // Even d uses the ball pair of size 2(n-1) when larger than the ball.
  const auto b64 = code_anticode_bound(6, 4);
  CHECK(b64.anticode_size >= 10);
  CHECK(b64.bound_value == std::to_string(720 / b64.anticode_size));

  const auto whole = code_anticode_bound(4, 7);
  CHECK(whole.bound_value == "1");
}

TEST_CASE("diameter-perfect codes") {
  const auto e3 = Permutation::identity(3);
  const auto code = make_codebook(3, Metric::Kendall, {e3, reverse(e3)});
  const auto ac = make_anticode(3, Metric::Kendall, ball(e3, 1, Metric::Kendall));
  const auto r = verify_diameter_perfect(code, ac);
  CHECK(r.diameter_perfect);
  CHECK(r.product == "6");

  const auto cyc = make_anticode(5, Metric::CyclicKendall, ball(Permutation::identity(5), 1, Metric::CyclicKendall));
  CHECK(cyc.diameter == 2);
  CHECK(verify_diameter_perfect(paper_s5_cyclic_code(), cyc).diameter_perfect);

  // Minimum distance 3 does not match a diameter-4 anticode.
  const auto wide = make_anticode(5, Metric::CyclicKendall, ball(Permutation::identity(5), 2, Metric::CyclicKendall));
  CHECK(wide.diameter == 4);
  CHECK_THROWS_AS(verify_diameter_perfect(paper_s5_cyclic_code(), wide), PreconditionError);
  // One word against a half-space anticode: 1 * 12 != 24.
  CHECK_FALSE(verify_diameter_perfect(make_codebook(4, Metric::Kendall, {Permutation::identity(4)}),
                                      half_space_anticode(4))
                  .diameter_perfect);
  const auto rp4 = reverse_pair_code(Permutation::identity(4));
  const auto hs4 = half_space_anticode(4);
  CHECK(verify_diameter_perfect(rp4, hs4).diameter_perfect);
  // A single word is vacuously far enough apart.
  const auto full = make_anticode(3, Metric::Kendall, all_permutations(3));
  CHECK(verify_diameter_perfect(make_codebook(3, Metric::Kendall, {e3}), full).diameter_perfect);
}

TEST_CASE("distance-regularity probe counts midpoints exhaustively") {
  for (int n = 5; n <= 6; ++n) {
    const auto rep = distance_regularity_probe(n);
    for (const auto* probe : {&rep.three_cycle, &rep.double_swap}) {
      CHECK(probe->distance == 2);
      std::size_t brute = 0;
      for (const auto& p : oracle::all_perms(n))
        brute += oracle::discordant_pairs(p, V(probe->from)) == 1 && oracle::discordant_pairs(p, V(probe->to)) == 1;
      CHECK(probe->midpoints.size() == brute);
    }
    CHECK(rep.three_cycle.midpoints.size() == 1);
    CHECK(rep.double_swap.midpoints.size() == 2);
    CHECK(rep.distance_regular_refuted);
  }
}
