#ifndef PERMKIT_PERM_HPP
#define PERMKIT_PERM_HPP

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace permkit {

/// A permutation of the symbols 1..n in one-line notation.
///
/// `image()[i]` holds sigma(i + 1). Symbols are always 1-based internally;
/// 0-based input is normalized at parse time.
///
/// Composition follows the convention (a o b)(i) = b(a(i)): `a` acts first
/// as a position map. Under this convention left-composing with an adjacent
/// transposition swaps two *positions* of the right operand, and
/// right-composing relabels *values*. See `compose`.
class Permutation {
 public:
  Permutation() = default;

  /// Validates that `image` is a bijection on {1..n}, n >= 1.
  explicit Permutation(std::vector<int> image);

  static Permutation identity(int n);

  /// Parses comma- and/or whitespace-separated integers. With `zero_based`
  /// the symbols 0..n-1 are shifted to 1..n.
  static Permutation parse(std::string_view text, bool zero_based = false);

  int size() const { return static_cast<int>(image_.size()); }

  /// sigma(pos) for 1 <= pos <= n.
  int at(int pos) const;

  std::span<const int> image() const { return image_; }

  /// Space-separated one-line notation, e.g. "2 4 1 3".
  std::string to_string() const;

  friend auto operator<=>(const Permutation&, const Permutation&) = default;
  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  struct Unchecked {};
  Permutation(std::vector<int> image, Unchecked) : image_(std::move(image)) {}

  friend Permutation make_unchecked(std::vector<int> image);

  std::vector<int> image_;
};

/// Builds a permutation without validating; callers guarantee bijectivity.
Permutation make_unchecked(std::vector<int> image);

/// Lexicographic rank of a permutation of S_n (Lehmer code read in the
/// factorial number system).
struct PermRank {
  int n = 0;
  std::uint64_t index = 0;

  friend auto operator<=>(const PermRank&, const PermRank&) = default;
};

/// Largest n for which n! fits the 64-bit rank index.
inline constexpr int kMaxRankN = 20;

std::uint64_t factorial(int n);

/// (a o b)(i) = b(a(i)).
Permutation compose(const Permutation& a, const Permutation& b);

Permutation inverse(const Permutation& p);

/// Swaps the entries at positions i and i+1 (1 <= i <= n-1). Equal to
/// compose((i,i+1), p).
Permutation adjacent_transpose(const Permutation& p, int i);

/// Swaps the entries at positions 1 and n (n >= 2).
Permutation wrap_transpose(const Permutation& p);

/// [p(n), ..., p(1)].
Permutation reverse(const Permutation& p);

/// Left rotation by k positions: [p(k+1), ..., p(n), p(1), ..., p(k)].
Permutation rotate(const Permutation& p, int k);

PermRank rank(const Permutation& p);
Permutation unrank(PermRank r);

/// Rank of a 1-based one-line image, no validation.
std::uint64_t rank_of(std::span<const int> image);

/// Writes the permutation of the given rank into `out` (size n, 1-based).
void unrank_into(int n, std::uint64_t index, std::span<int> out);

/// Every permutation of S_n in lexicographic (= rank) order.
std::vector<Permutation> all_permutations(int n);

}  // namespace permkit

#endif  // PERMKIT_PERM_HPP
