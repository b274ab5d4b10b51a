#include "permkit/rational.hpp"

#include <sstream>

#include "permkit/errors.hpp"

namespace permkit {

std::string to_fraction_string(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  return c.get_str();
}

Rational parse_fraction(const std::string& text) {
  Rational q;
  if (q.set_str(text, 10) != 0) throw InvalidInput("bad fraction '" + text + "'");
  if (q.get_den() == 0) throw InvalidInput("zero denominator in '" + text + "'");
  q.canonicalize();
  return q;
}

// Does not assume q is canonical.
bool is_integral(const Rational& q) {
  return mpz_divisible_p(q.get_num_mpz_t(), q.get_den_mpz_t()) != 0;
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

std::vector<Rational> RationalMatrix::multiply(const std::vector<Rational>& x) const {
  if (x.size() != cols_) throw InvalidInput("matrix-vector dimension mismatch");
  std::vector<Rational> y(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    Rational acc = 0;
    for (std::size_t c = 0; c < cols_; ++c) {
      const auto& v = (*this)(r, c);
      if (sgn(v) != 0) acc += v * x[c];
    }
    y[r] = acc;
  }
  return y;
}

std::string RationalMatrix::canonical_text() const {
  std::ostringstream out;
  out << rows_ << ' ' << cols_;
  for (const auto& v : data_) out << ' ' << to_fraction_string(v);
  return out.str();
}

bool gerschgorin_nonsingular(const RationalMatrix& m) {
  if (!m.square()) throw InvalidInput("Gerschgorin test needs a square matrix");
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Rational off = 0;
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (j != i) off += abs(m(i, j));
    if (!(abs(m(i, i)) > off)) return false;
  }
  return true;
}

namespace {

// Reduced row echelon form in place; returns pivot columns (< limit_cols).
std::vector<std::size_t> rref(RationalMatrix& m, std::size_t limit_cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < limit_cols && row < m.rows(); ++col) {
    std::size_t pivot = m.rows();
    for (std::size_t r = row; r < m.rows(); ++r)
      if (sgn(m(r, col)) != 0) {
        pivot = r;
        break;
      }
    if (pivot == m.rows()) continue;
    if (pivot != row)
      for (std::size_t c = 0; c < m.cols(); ++c) swap(m(pivot, c), m(row, c));

    const Rational inv = 1 / m(row, col);
    std::vector<std::size_t> nonzero;
    for (std::size_t c = col; c < m.cols(); ++c)
      if (sgn(m(row, c)) != 0) {
        m(row, c) *= inv;
        nonzero.push_back(c);
      }
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || sgn(m(r, col)) == 0) continue;
      const Rational factor = m(r, col);
      for (std::size_t c : nonzero) m(r, c) -= factor * m(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

LinearSolution solve_exact(const RationalMatrix& a, const std::vector<Rational>& b) {
  if (b.size() != a.rows()) throw InvalidInput("right-hand side has the wrong length");
  const std::size_t n = a.cols();
  RationalMatrix aug(a.rows(), n + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = a(r, c);
    aug(r, n) = b[r];
  }
  const auto pivots = rref(aug, n);

  LinearSolution sol;
  sol.rank = pivots.size();
  for (std::size_t r = sol.rank; r < aug.rows(); ++r)
    if (sgn(aug(r, n)) != 0) {
      sol.kind = LinearSolution::Kind::Inconsistent;
      return sol;
    }

  std::vector<bool> is_pivot(n, false);
  for (auto c : pivots) is_pivot[c] = true;
  for (std::size_t c = 0; c < n; ++c)
    if (!is_pivot[c]) sol.free_columns.push_back(c);

  sol.particular.assign(n, Rational(0));
  for (std::size_t k = 0; k < pivots.size(); ++k) sol.particular[pivots[k]] = aug(k, n);

  for (auto f : sol.free_columns) {
    std::vector<Rational> v(n, Rational(0));
    v[f] = 1;
    for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -aug(k, f);
    sol.kernel.push_back(std::move(v));
  }
  sol.kind = sol.kernel.empty() ? LinearSolution::Kind::Unique : LinearSolution::Kind::Affine;
  return sol;
}

std::size_t exact_rank(const RationalMatrix& a) {
  RationalMatrix copy = a;
  return rref(copy, copy.cols()).size();
}

}  // namespace permkit
