#ifndef PERMKIT_ANTICODE_HPP
#define PERMKIT_ANTICODE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "permkit/certificate.hpp"
#include "permkit/code.hpp"

namespace permkit {

/// A set of permutations whose pairwise distances are all <= diameter.
struct Anticode {
  int n = 0;
  Metric metric = Metric::Kendall;
  std::vector<Permutation> members;  // sorted, distinct
  int diameter = 0;                  // exact maximum pairwise distance
  std::string description;

  std::size_t size() const { return members.size(); }
};

/// Exact maximum pairwise distance of a nonempty set.
int diameter(const std::vector<Permutation>& members, Metric metric, unsigned threads = 0);

/// Sorts, deduplicates, and computes the diameter.
Anticode make_anticode(int n, Metric metric, std::vector<Permutation> members,
                       std::string description = {});

/// S(e, radius) united with its right translate by (1,2), i.e. the radius-
/// ball around [2,1,3,...,n]. For radius 1 (n >= 4) this has 2(n-1)
/// members and diameter 3.
Anticode ball_pair_anticode(int n, int radius);

/// ball_pair_anticode(n, 1) with its size and diameter checked.
Anticode construct_diameter3_anticode(int n);

/// {sigma : symbol 1 precedes symbol 2}. Exactly one of each reverse pair
/// belongs to it, so it has n!/2 members and diameter C(n,2) - 1.
Anticode half_space_anticode(int n);

/// {sigma, reverse(sigma)} under the Kendall metric.
CodeBook reverse_pair_code(const Permutation& sigma);

struct AnticodeSearchResult {
  int n = 0;
  int max_diameter = 0;
  Metric metric = Metric::Kendall;
  int max_size = 0;
  bool complete = false;  // false: max_size is a lower bound
  /// Optimal anticodes containing the identity. Every optimum is a right
  /// translate of one of these.
  std::vector<Anticode> witnesses;
  bool witnesses_truncated = false;
  /// Set when optima were enumerated: whether every one is a ball of
  /// radius floor(D/2).
  std::optional<bool> all_optima_are_balls;
  SearchStats stats;
};

/// Default size limits: full optimum enumeration for n <= 5, single-optimum
/// search for n = 6.
inline constexpr int kAnticodeEnumerateMaxN = 5;
inline constexpr int kAnticodeSearchMaxN = 6;

/// Maximum anticode of diameter D by max-clique search on the
/// "distance <= D" graph. Right translation is an isometry, so the search
/// is restricted to anticodes containing e without loss.
AnticodeSearchResult optimal_anticode_search(int n, int max_diameter, Metric metric,
                                             bool enumerate_optima, const SearchBudget& budget = {},
                                             bool allow_large = false);

/// True iff the set equals ball(c, radius) for one of its members c.
bool is_ball(const std::vector<Permutation>& members, int radius, Metric metric);

struct BoundReport {
  int n = 0;
  int d = 0;
  std::string space_size;
  std::uint64_t anticode_size = 0;
  int anticode_diameter = 0;
  std::string anticode_used;
  std::string bound_value;  // floor(n! / |A|)
  bool trivial = false;     // no anticode of diameter d-1 was available
  std::optional<CodeBook> achieving_code;
};

/// Code-anticode bound |C| <= floor(n!/|A|) for Kendall codes with minimum
/// distance d, using the largest verified anticode of diameter <= d-1 among:
/// the radius-(d-1)/2 ball (odd d), the ball pair S(e,R) u S(e,R)o(1,2) for
/// d-1 = 2R+1, the half-space anticode (d-1 >= C(n,2)-1), the whole space
/// (d-1 >= C(n,2)), and an exact search when n <= 4. With `search_code`
/// and n <= 4 an exact maximum code is attached when it meets the bound.
BoundReport code_anticode_bound(int n, int d, bool search_code = false);

struct DiameterPerfectResult {
  bool diameter_perfect = false;
  std::string product;  // |C| * |A|
  std::string space_size;
};

/// |C| * |A| == n!. Throws PreconditionError when n or metric differ or the
/// code's minimum distance is not diameter(A) + 1 (a single-word code
/// satisfies any minimum distance).
DiameterPerfectResult verify_diameter_perfect(const CodeBook& code, const Anticode& anticode);

struct MidpointProbe {
  Permutation from;
  Permutation to;
  int distance = 0;
  std::vector<Permutation> midpoints;  // at distance 1 from both ends
};

struct DistanceRegularityReport {
  int n = 0;
  MidpointProbe three_cycle;      // e vs [3,1,2,4,...,n]
  MidpointProbe double_swap;      // e vs [2,1,4,3,5,...,n]
  bool distance_regular_refuted = false;
};

/// Kendall graph midpoint counts for two pairs at distance 2. Different
/// counts show the graph is not distance-regular. Needs n >= 4.
DistanceRegularityReport distance_regularity_probe(int n);

}  // namespace permkit

#endif  // PERMKIT_ANTICODE_HPP
