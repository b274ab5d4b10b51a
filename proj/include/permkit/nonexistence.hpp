#ifndef PERMKIT_NONEXISTENCE_HPP
#define PERMKIT_NONEXISTENCE_HPP

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "permkit/certificate.hpp"
#include "permkit/code.hpp"
#include "permkit/rational.hpp"

namespace permkit {

/// Linear constraints on the class-wise codeword counts of a putative perfect
/// single-error-correcting code in S_n under the Kendall metric.
///
/// Classes partition S_n by the positions of the values 1..r: class label
/// (p_1, ..., p_r) holds every sigma with sigma(p_k) = k. `matrix(B, A)` is
/// the number of radius-1 ball members of a class-A codeword that land in
/// class B; `rhs[B]` is |B|. A perfect code must satisfy matrix * x = rhs
/// with x_A the number of codewords in class A.
struct CoveringSystem {
  int n = 0;
  int pattern_r = 1;
  std::vector<std::vector<int>> classes;  // 1-based position tuples, lex order
  RationalMatrix matrix;
  std::vector<Rational> rhs;
  BigInt class_size;  // (n - r)!

  /// FNV-1a over the canonical matrix and rhs text.
  std::string hash() const;
  std::size_t class_count() const { return classes.size(); }
};

/// The r = 1 system: classes S_{n,i} = {sigma : sigma(i) = 1}. Tridiagonal
/// with corner diagonal n-1, interior diagonal n-2, off-diagonal 1, and
/// rhs (n-1)! * 1. Needs n >= 3.
CoveringSystem build_basic_system(int n);

struct PatternOptions {
  /// Refuse systems with more classes than this.
  std::uint64_t max_classes = 720;
  /// Check coefficients against explicit permutations after building.
  bool verify_invariance = true;
  /// Exhaustive check up to this n; seeded sampling above.
  int exhaustive_up_to_n = 7;
  int samples_per_class = 20;
  std::uint64_t seed = 1;
  unsigned threads = 0;
  /// Integral-point enumeration over the solution set runs only for kernels
  /// of at most this dimension and at most this many candidate points.
  int max_kernel_dim = 2;
  std::uint64_t max_enumeration = 1'000'000;
};

/// Pattern family "positions of values 1..r", 1 <= r <= n-1. Coefficients
/// come from how the identity and the n-1 adjacent swaps move the position
/// tuple; r = 1 reproduces build_basic_system exactly.
CoveringSystem build_pattern_system(int n, int r, const PatternOptions& opts = {});

struct InvarianceReport {
  bool exhaustive = false;
  std::uint64_t representatives_checked = 0;
};

/// Recounts every coefficient from explicit class representatives (all of
/// S_n, or `samples_per_class` seeded samples per class) and throws
/// InvariantViolation with a counterexample on the first mismatch.
InvarianceReport verify_pattern_coefficients(const CoveringSystem& sys, const PatternOptions& opts = {});

/// Nonexistence from the basic system: nonsingular (Gerschgorin, else exact
/// rank) with the unique solution (n-1)!/n * 1 non-integral. Inconclusive
/// when (n-1)!/n is an integer. Needs n >= 4.
Certificate basic_nonexistence_check(int n);

/// Solves the pattern system exactly. Nonexistence when it is inconsistent,
/// when its unique solution is non-integral or negative, or when a small
/// kernel admits no integral point with 0 <= x_A <= |class|. Otherwise
/// inconclusive with the solution-space description.
Certificate pattern_nonexistence_check(int n, int r, const PatternOptions& opts = {});

struct RegularityReport {
  int n = 0;
  int r = 0;
  std::uint64_t code_size = 0;
  /// |C| (n-r)! / n!: the count every assignment must have for uniformity.
  Rational expected;
  /// (n-r)!/n: the value a perfect single-error-correcting code would need.
  Rational perfect_code_value;
  bool uniform = false;
  std::uint64_t assignments = 0;  // P(n, r) * C(n, r)
  std::uint64_t min_count = 0;
  std::uint64_t max_count = 0;
  /// (values, increasing positions) -> number of codewords with
  /// sigma(positions[l]) = values[l]. Only nonzero counts are stored.
  std::map<std::pair<std::vector<int>, std::vector<int>>, std::uint64_t> counts;
};

RegularityReport verify_regularity(const CodeBook& code, int r);

}  // namespace permkit

#endif  // PERMKIT_NONEXISTENCE_HPP
