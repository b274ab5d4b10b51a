#ifndef PERMKIT_METRIC_HPP
#define PERMKIT_METRIC_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "permkit/perm.hpp"

namespace permkit {

using BigInt = mpz_class;

enum class Metric { Kendall, CyclicKendall };

std::string_view to_string(Metric m);
/// Accepts "kendall" or "cyclic" (also "cyclic-kendall").
Metric parse_metric(std::string_view text);

/// Zero-based position pairs swapped by the unit moves of the metric:
/// (i, i+1) for every i, plus (0, n-1) for the cyclic metric when n >= 3.
/// For n = 2 the wrap swap coincides with the only adjacent swap.
std::vector<std::pair<int, int>> generators(int n, Metric m);

/// Number of value pairs ordered differently in `a` and `b`, by merge-sort
/// inversion counting in O(n log n).
int kendall_distance(const Permutation& a, const Permutation& b);

/// Direct O(n^2) evaluation of the discordant-pair count. Kept as a
/// reference for testing the fast path.
int kendall_distance_pairs(const Permutation& a, const Permutation& b);

/// Inversion count of a 1-based image (distance from the identity).
int inversions(std::span<const int> image);

/// Distances from the identity to every element of S_n, indexed by rank.
class DistanceTable {
 public:
  DistanceTable(int n, Metric metric, std::vector<std::uint8_t> dist)
      : n_(n), metric_(metric), dist_(std::move(dist)) {}

  int n() const { return n_; }
  Metric metric() const { return metric_; }
  std::size_t size() const { return dist_.size(); }

  int at(std::uint64_t index) const { return dist_[index]; }
  int at(const Permutation& p) const { return dist_[rank_of(p.image())]; }

  int max_distance() const;
  /// histogram()[k] = number of permutations at distance exactly k.
  std::vector<std::uint64_t> histogram() const;

  std::span<const std::uint8_t> raw() const { return dist_; }

 private:
  int n_;
  Metric metric_;
  std::vector<std::uint8_t> dist_;
};

/// Largest n for which tables are built. Default 10; raising it above 10
/// prints a memory warning on stderr.
int table_capacity();
void set_table_capacity(int max_n);

/// Breadth-first search over the Cayley graph of S_n from the identity.
/// Throws CapacityError when n exceeds table_capacity().
DistanceTable build_distance_table(int n, Metric metric);

/// Shared, lazily built table; concurrent callers for the same (n, metric)
/// wait for a single build.
const DistanceTable& cached_table(int n, Metric metric);

/// Minimum number of c-adjacent transpositions turning `a` into `b`, looked
/// up as d(e, b o a^-1) in the cached cyclic table.
int cyclic_kendall_distance(const Permutation& a, const Permutation& b);

int distance(const Permutation& a, const Permutation& b, Metric metric);

/// Distance from the identity. Kendall needs no table.
int distance_from_identity(const Permutation& p, Metric metric);

/// Every permutation within distance `radius` of `center`, sorted
/// lexicographically.
std::vector<Permutation> ball(const Permutation& center, int radius, Metric metric);

/// |ball(e, radius)|.
std::uint64_t ball_size(int n, int radius, Metric metric);

/// Number of permutations of S_n with exactly k inversions.
BigInt mahonian(int n, int k);
/// mahonian(n, k) for k = 0..n(n-1)/2.
std::vector<BigInt> mahonian_row(int n);
/// Sum of mahonian(n, k) for k <= radius.
BigInt kendall_ball_size(int n, int radius);

}  // namespace permkit

#endif  // PERMKIT_METRIC_HPP
