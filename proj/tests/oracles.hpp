// Brute-force reference implementations used only by tests. Nothing here
// calls the library's distance tables, ranking, or fast paths.
#ifndef PERMKIT_TESTS_ORACLES_HPP
#define PERMKIT_TESTS_ORACLES_HPP

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <vector>

namespace oracle {

using Perm = std::vector<int>;

inline std::vector<Perm> all_perms(int n) {
  Perm p(n);
  std::iota(p.begin(), p.end(), 1);
  std::vector<Perm> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

inline Perm inverse(const Perm& p) {
  Perm q(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) q[p[i] - 1] = static_cast<int>(i) + 1;
  return q;
}

// Pairs (i, j) of values with i before j in a and j before i in b.
inline int discordant_pairs(const Perm& a, const Perm& b) {
  const Perm ai = inverse(a), bi = inverse(b);
  int count = 0;
  const int n = static_cast<int>(a.size());
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if ((ai[i - 1] < ai[j - 1]) != (bi[i - 1] < bi[j - 1])) ++count;
  return count;
}

inline int inversions(const Perm& p) {
  int count = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j) count += p[i] > p[j];
  return count;
}

// Per-pair breadth-first search with explicit position swaps.
inline int bfs_distance(const Perm& from, const Perm& to, bool cyclic) {
  const int n = static_cast<int>(from.size());
  std::map<Perm, int> dist{{from, 0}};
  std::queue<Perm> q;
  q.push(from);
  while (!q.empty()) {
    Perm p = q.front();
    q.pop();
    if (p == to) return dist[p];
    std::vector<std::pair<int, int>> moves;
    for (int i = 0; i + 1 < n; ++i) moves.emplace_back(i, i + 1);
    if (cyclic && n >= 3) moves.emplace_back(0, n - 1);
    for (auto [i, j] : moves) {
      Perm r = p;
      std::swap(r[i], r[j]);
      if (dist.emplace(r, dist[p] + 1).second) q.push(r);
    }
  }
  return -1;
}

// All distances from `from` at once (single BFS over S_n).
inline std::map<Perm, int> bfs_all(const Perm& from, bool cyclic) {
  const int n = static_cast<int>(from.size());
  std::map<Perm, int> dist{{from, 0}};
  std::queue<Perm> q;
  q.push(from);
  while (!q.empty()) {
    Perm p = q.front();
    q.pop();
    for (int i = 0; i < n; ++i) {
      const int j = i + 1 < n ? i + 1 : 0;
      if (j == 0 && (!cyclic || n < 3)) continue;
      Perm r = p;
      std::swap(r[i], r[j]);
      if (dist.emplace(r, dist[p] + 1).second) q.push(r);
    }
  }
  return dist;
}

inline std::vector<unsigned long long> mahonian_row(int n) {
  std::vector<unsigned long long> row(n * (n - 1) / 2 + 1, 0);
  for (const auto& p : all_perms(n)) ++row[inversions(p)];
  return row;
}

// Largest subset of `n` vertices that is pairwise `ok`, by plain
// branch-and-bound. Returns the size only.
template <class Ok>
int max_compatible_set(int n, Ok ok) {
  int best = 0;
  std::vector<int> chosen;
  auto rec = [&](auto& self, int next) -> void {
    best = std::max(best, static_cast<int>(chosen.size()));
    for (int v = next; v < n; ++v) {
      if (static_cast<int>(chosen.size()) + (n - v) <= best) return;
      bool fits = true;
      for (int c : chosen)
        if (!ok(c, v)) {
          fits = false;
          break;
        }
      if (!fits) continue;
      chosen.push_back(v);
      self(self, v + 1);
      chosen.pop_back();
    }
  };
  rec(rec, 0);
  return best;
}

}  // namespace oracle

#endif  // PERMKIT_TESTS_ORACLES_HPP
