#include <doctest.h>

#include <sstream>

#include "oracles.hpp"
#include "permkit/code.hpp"
#include "permkit/errors.hpp"

using namespace permkit;

namespace {

Permutation P(std::vector<int> v) { return Permutation(std::move(v)); }

std::vector<int> V(const Permutation& p) { return {p.image().begin(), p.image().end()}; }

// Times each permutation is within `radius` of some codeword, by brute force.
std::map<std::vector<int>, int> coverage(const CodeBook& code, int radius) {
  std::map<std::vector<int>, int> covered;
  for (const auto& p : oracle::all_perms(code.n)) covered[p] = 0;
  for (const auto& w : code.words) {
    const auto dist = oracle::bfs_all(V(w), code.metric == Metric::CyclicKendall);
    for (const auto& [p, d] : dist)
      if (d <= radius) ++covered[p];
  }
  return covered;
}

}  // namespace

TEST_CASE("codebook validation") {
  CHECK_THROWS_AS(make_codebook(3, Metric::Kendall, {P({1, 2, 3}), P({1, 2, 3})}), InvalidInput);
  CHECK_THROWS_AS(make_codebook(3, Metric::Kendall, {P({1, 2, 3, 4})}), InvalidInput);
  const auto c = make_codebook(3, Metric::Kendall, {P({3, 2, 1}), P({1, 2, 3})});
  CHECK(c.words.front() == P({1, 2, 3}));
  CHECK(c.contains(P({3, 2, 1})));
}

TEST_CASE("minimum distance") {
  const auto e = Permutation::identity(4);
  CHECK(min_distance(make_codebook(4, Metric::Kendall, {e, reverse(e)})) == 6);
  CHECK_THROWS_AS(min_distance(make_codebook(4, Metric::Kendall, {e})), PreconditionError);

  const auto s5 = paper_s5_cyclic_code();
  CHECK(min_distance(s5) == 3);
  CHECK(min_distance(s5, 1) == 3);

  // Prime construction for n = 7: measured value confirmed by a per-word BFS.
  const auto p7 = cyclic_prime_code(7);
  int brute = 1000;
  for (std::size_t i = 0; i < p7.size(); ++i) {
    const auto dist = oracle::bfs_all(V(p7.words[i]), true);
    for (std::size_t j = i + 1; j < p7.size(); ++j) brute = std::min(brute, dist.at(V(p7.words[j])));
  }
  CHECK(min_distance(p7) == brute);
  CHECK(brute == 6);
}

TEST_CASE("claimed minimum distance is confirmed before marking verified") {
  auto s5 = paper_s5_cyclic_code();
  CHECK_FALSE(s5.verified);
  CHECK(confirm_claim(s5));
  CHECK(s5.verified);
  s5.claimed_min_distance = 4;
  CHECK_FALSE(confirm_claim(s5));
  CHECK_FALSE(s5.verified);
}

TEST_CASE("verify_perfect") {
  SUBCASE("listed S5 code under the cyclic metric") {
    const auto report = verify_perfect(paper_s5_cyclic_code(), 1);
    CHECK(report.perfect);
    CHECK(report.ball_size == 6);
    CHECK(report.code_size * report.ball_size == 120);
    CHECK(report.defects.empty());
  }
  SUBCASE("full space with radius 0") {
    for (int n = 2; n <= 5; ++n) {
      std::vector<Permutation> words;
      for (auto& v : oracle::all_perms(n)) words.emplace_back(v);
      CHECK(verify_perfect(make_codebook(n, Metric::Kendall, words), 0).perfect);
    }
  }
  SUBCASE("S3 reverse pair under Kendall") {
    const auto code = make_codebook(3, Metric::Kendall, {P({1, 2, 3}), P({3, 2, 1})});
    const auto report = verify_perfect(code, 1);
    CHECK(report.perfect);
    for (const auto& [p, times] : coverage(code, 1)) CHECK(times == 1);
  }
  SUBCASE("defects are reported with counts") {
    const auto e = Permutation::identity(4);
    const auto code = make_codebook(4, Metric::Kendall, {e, adjacent_transpose(e, 1)});
    const auto report = verify_perfect(code, 1);
    CHECK_FALSE(report.perfect);
    const auto brute = coverage(code, 1);
    std::uint64_t defects = 0, over = 0;
    for (const auto& [p, times] : brute) {
      defects += times != 1;
      over += times > 1;
    }
    CHECK(report.total_defects == defects);
    CHECK(report.overcovered == over);
    for (const auto& d : report.defects) CHECK(brute.at(V(d.word)) == d.times_covered);
  }
  SUBCASE("perfect verdicts imply minimum distance 2R+1") {
    for (int r = 0; r <= 1; ++r) {
      const auto s5 = paper_s5_cyclic_code();
      if (verify_perfect(s5, r).perfect) CHECK(min_distance(s5) >= 2 * r + 1);
    }
  }
  CHECK_THROWS_AS(verify_perfect(CodeBook{4, Metric::Kendall, {}, {}, false}, 1), PreconditionError);
}

TEST_CASE("S5 listing layout") {
  const auto code = paper_s5_cyclic_code();
  CHECK(code.size() == 20);
  CHECK(code.metric == Metric::CyclicKendall);
  CHECK(code.claimed_min_distance == 3);
  CHECK(code.contains(Permutation::identity(5)));

  const auto& rows = paper_s5_listing();
  REQUIRE(rows.size() == 5);
  for (std::size_t col = 0; col < 4; ++col) {
    std::vector<int> first(rows[0][col]);
    for (int& v : first) ++v;
    for (std::size_t row = 0; row < 5; ++row) {
      std::vector<int> w(rows[row][col]);
      for (int& v : w) ++v;
      CHECK(P(w) == rotate(P(first), static_cast<int>(row)));
    }
    // First row is [0, a, 2a, 3a, 4a] mod 5 with a = col + 1.
    for (int i = 0; i < 5; ++i) CHECK(rows[0][col][i] == (i * static_cast<int>(col + 1)) % 5);
  }
}

TEST_CASE("cyclic prime construction") {
  CHECK(cyclic_prime_code(5).words == paper_s5_cyclic_code().words);
  const auto p7 = cyclic_prime_code(7);
  CHECK(p7.size() == 42);
  std::set<std::vector<int>> distinct;
  for (const auto& w : p7.words) distinct.insert(V(w));
  CHECK(distinct.size() == 42);
  CHECK(cyclic_prime_code(11).size() == 110);
  CHECK_THROWS_AS(cyclic_prime_code(6), PreconditionError);
  CHECK_THROWS_AS(cyclic_prime_code(3), PreconditionError);
  CHECK(is_prime(13));
  CHECK_FALSE(is_prime(9));
}

TEST_CASE("code file format") {
  std::istringstream in(
      "# comment\n"
      "n=5 metric=cyclic\n"
      "0 1 2 3 4\n"
      "\n"
      "0,2,4,1,3\n");
  const auto code = read_code(in, true);
  CHECK(code.n == 5);
  CHECK(code.metric == Metric::CyclicKendall);
  CHECK(code.size() == 2);
  CHECK(code.contains(Permutation::identity(5)));

  std::ostringstream out;
  write_code(out, paper_s5_cyclic_code());
  std::istringstream back(out.str());
  CHECK(read_code(back).words == paper_s5_cyclic_code().words);

  std::istringstream bad_header("n=5\n1 2 3 4 5\n");
  CHECK_THROWS_AS(read_code(bad_header), InvalidInput);
  std::istringstream bad_word("n=3 metric=kendall\n1 2 2\n");
  CHECK_THROWS_AS(read_code(bad_word), InvalidInput);
  std::istringstream wrong_length("n=3 metric=kendall\n1 2 3 4\n");
  CHECK_THROWS_AS(read_code(wrong_length), InvalidInput);
  CHECK_THROWS_AS(read_code_file("/nonexistent/code.txt"), InvalidInput);
}
