#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "permkit/errors.hpp"
#include "permkit/perm.hpp"

using namespace permkit;

namespace {

Permutation P(std::vector<int> v) { return Permutation(std::move(v)); }

}  // namespace

TEST_CASE("parse accepts commas, spaces and zero-based input") {
  CHECK(Permutation::parse("2 4 1 3") == P({2, 4, 1, 3}));
  CHECK(Permutation::parse("2,4, 1,3") == P({2, 4, 1, 3}));
  CHECK(Permutation::parse("[0,1,2,3,4]", true) == Permutation::identity(5));
  CHECK_THROWS_AS(Permutation::parse("1 2 2"), InvalidInput);
  CHECK_THROWS_AS(Permutation::parse("1 x 3"), InvalidInput);
  CHECK_THROWS_AS(Permutation::parse("0 1 2"), InvalidInput);
  CHECK_THROWS_AS(Permutation::parse(""), InvalidInput);
}

TEST_CASE("compose follows (a o b)(i) = b(a(i))") {
  const auto s = P({3, 1, 2});
  CHECK(compose(Permutation::identity(3), s) == s);
  CHECK(compose(s, Permutation::identity(3)) == s);
  // (2,3) applied to the identity of S_4.
  CHECK(compose(P({1, 3, 2, 4}), Permutation::identity(4)) == P({1, 3, 2, 4}));
  CHECK_THROWS_AS(compose(s, Permutation::identity(4)), InvalidInput);

  std::mt19937 rng(7);
  auto perms = oracle::all_perms(6);
  for (int trial = 0; trial < 100; ++trial) {
    const auto& a = perms[rng() % perms.size()];
    const auto& b = perms[rng() % perms.size()];
    const auto c = compose(P(a), P(b));
    for (int i = 1; i <= 6; ++i) CHECK(c.at(i) == b[a[i - 1] - 1]);
  }
}

TEST_CASE("inverse") {
  CHECK(inverse(P({1, 2, 3})) == P({1, 2, 3}));
  CHECK(inverse(P({2, 3, 1})) == P({3, 1, 2}));
  for (int n = 1; n <= 5; ++n)
    for (const auto& v : oracle::all_perms(n)) {
      const auto s = P(v);
      CHECK(compose(s, inverse(s)) == Permutation::identity(n));
      CHECK(compose(inverse(s), s) == Permutation::identity(n));
      CHECK(inverse(inverse(s)) == s);
    }
}

TEST_CASE("adjacent and wrap transpositions") {
  CHECK(adjacent_transpose(P({1, 2, 3, 4}), 1) == P({2, 1, 3, 4}));
  CHECK(adjacent_transpose(Permutation::parse("0 1 2 3 4", true), 4) == P({1, 2, 3, 5, 4}));
  CHECK_THROWS_AS(adjacent_transpose(P({1, 2, 3}), 0), InvalidInput);
  CHECK_THROWS_AS(adjacent_transpose(P({1, 2, 3}), 3), InvalidInput);

  CHECK(wrap_transpose(P({1, 2, 3, 4})) == P({4, 2, 3, 1}));
  CHECK(wrap_transpose(P({1, 2})) == P({2, 1}));
  CHECK_THROWS_AS(wrap_transpose(P({1})), InvalidInput);

  for (const auto& v : oracle::all_perms(5)) {
    const auto s = P(v);
    CHECK(wrap_transpose(wrap_transpose(s)) == s);
    for (int i = 1; i <= 4; ++i) {
      const auto t = adjacent_transpose(s, i);
      CHECK(adjacent_transpose(t, i) == s);
      // Left composition with (i,i+1) is the same position swap.
      std::vector<int> swap(5);
      std::iota(swap.begin(), swap.end(), 1);
      std::swap(swap[i - 1], swap[i]);
      CHECK(compose(P(swap), s) == t);
      for (int pos = 1; pos <= 5; ++pos) {
        if (pos == i || pos == i + 1)
          CHECK(t.at(pos) != s.at(pos));
        else
          CHECK(t.at(pos) == s.at(pos));
      }
    }
  }
}

TEST_CASE("reverse and rotate") {
  CHECK(reverse(P({1, 2, 3, 4})) == P({4, 3, 2, 1}));
  CHECK(rotate(P({1, 2, 3, 4, 5}), 1) == P({2, 3, 4, 5, 1}));
  CHECK(rotate(P({1, 2, 3, 4, 5}), -1) == P({5, 1, 2, 3, 4}));
  CHECK(rotate(P({1, 2, 3}), 3) == P({1, 2, 3}));
}

TEST_CASE("rank and unrank are inverse bijections in lexicographic order") {
  CHECK(rank(Permutation::identity(7)).index == 0);
  CHECK(unrank({4, 0}) == Permutation::identity(4));
  CHECK(unrank({4, 23}) == P({4, 3, 2, 1}));
  CHECK_THROWS_AS(unrank({4, 24}), InvalidInput);

  for (int n = 1; n <= 6; ++n) {
    const auto perms = oracle::all_perms(n);  // lexicographic
    for (std::size_t i = 0; i < perms.size(); ++i) {
      const auto p = P(perms[i]);
      CHECK(rank(p).index == i);
      CHECK(unrank({n, i}) == p);
    }
  }
  CHECK(factorial(20) == 2432902008176640000ULL);
  CHECK_THROWS_AS(factorial(21), CapacityError);
}
