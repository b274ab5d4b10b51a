#ifndef PERMKIT_RATIONAL_HPP
#define PERMKIT_RATIONAL_HPP

#include <cstddef>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace permkit {

using Rational = mpq_class;

/// "p/q" in lowest terms, or "p" for integers.
std::string to_fraction_string(const Rational& q);
Rational parse_fraction(const std::string& text);

bool is_integral(const Rational& q);

/// Dense row-major matrix of exact rationals.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static RationalMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<Rational> multiply(const std::vector<Rational>& x) const;

  /// Canonical text ("rows cols" then entries) used for hashing.
  std::string canonical_text() const;

  friend bool operator==(const RationalMatrix& a, const RationalMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Strict diagonal dominance: |b_ii| > sum_{j != i} |b_ij| for every row.
/// True proves nonsingularity; false proves nothing.
bool gerschgorin_nonsingular(const RationalMatrix& m);

struct LinearSolution {
  enum class Kind { Unique, Affine, Inconsistent };
  Kind kind = Kind::Inconsistent;
  std::size_t rank = 0;
  /// A particular solution (free variables set to zero); empty when inconsistent.
  std::vector<Rational> particular;
  /// Basis of the null space, one vector per free column.
  std::vector<std::vector<Rational>> kernel;
  std::vector<std::size_t> free_columns;
};

/// Gauss-Jordan elimination over the rationals on [A | b].
LinearSolution solve_exact(const RationalMatrix& a, const std::vector<Rational>& b);

/// Rank over the rationals.
std::size_t exact_rank(const RationalMatrix& a);

}  // namespace permkit

#endif  // PERMKIT_RATIONAL_HPP
