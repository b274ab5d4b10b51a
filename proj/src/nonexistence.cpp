#include "permkit/nonexistence.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <limits>
#include <mutex>
#include <numeric>
#include <random>
#include <sstream>
#include <unordered_map>

#include "clock.hpp"
#include "permkit/errors.hpp"
#include "permkit/parallel.hpp"

namespace permkit {

namespace {

BigInt big_factorial(int n) {
  BigInt f = 1;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

std::uint64_t falling_factorial(int n, int r) {
  std::uint64_t p = 1;
  for (int k = 0; k < r; ++k) {
    if (p > std::numeric_limits<std::uint64_t>::max() / static_cast<std::uint64_t>(n - k))
      return std::numeric_limits<std::uint64_t>::max();
    p *= static_cast<std::uint64_t>(n - k);
  }
  return p;
}

std::string join(const std::vector<int>& v) {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i];
  out << ')';
  return out.str();
}

// Injective r-tuples over 1..n in lexicographic order.
std::vector<std::vector<int>> position_tuples(int n, int r) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::vector<bool> used(n + 1, false);
  auto rec = [&](auto&& self) -> void {
    if (static_cast<int>(cur.size()) == r) {
      out.push_back(cur);
      return;
    }
    for (int p = 1; p <= n; ++p) {
      if (used[p]) continue;
      used[p] = true;
      cur.push_back(p);
      self(self);
      cur.pop_back();
      used[p] = false;
    }
  };
  rec(rec);
  return out;
}

class ClassIndex {
 public:
  ClassIndex(int n, const std::vector<std::vector<int>>& classes) : base_(n + 1) {
    for (std::size_t i = 0; i < classes.size(); ++i) index_[key(classes[i])] = static_cast<int>(i);
  }

  int of_tuple(const std::vector<int>& t) const { return index_.at(key(t)); }

  // Class of a permutation: positions of the values 1..r.
  int of_image(std::span<const int> image, int r) const {
    std::uint64_t k = 0;
    for (int v = r; v >= 1; --v) {
      const auto it = std::find(image.begin(), image.end(), v);
      k = k * base_ + static_cast<std::uint64_t>(it - image.begin() + 1);
    }
    return index_.at(k);
  }

 private:
  std::uint64_t key(const std::vector<int>& t) const {
    std::uint64_t k = 0;
    for (auto it = t.rbegin(); it != t.rend(); ++it) k = k * base_ + static_cast<std::uint64_t>(*it);
    return k;
  }

  std::uint64_t base_;
  std::unordered_map<std::uint64_t, int> index_;
};

}  // namespace

std::string CoveringSystem::hash() const {
  std::string text = matrix.canonical_text();
  text += " |";
  for (const auto& v : rhs) text += ' ' + to_fraction_string(v);
  return fnv1a_hex(text);
}

CoveringSystem build_basic_system(int n) {
  if (n < 3) throw InvalidInput("the basic covering system needs n >= 3");
  CoveringSystem sys;
  sys.n = n;
  sys.pattern_r = 1;
  sys.class_size = big_factorial(n - 1);
  sys.matrix = RationalMatrix(n, n);
  for (int i = 0; i < n; ++i) {
    sys.classes.push_back({i + 1});
    const bool corner = i == 0 || i == n - 1;
    sys.matrix(i, i) = corner ? n - 1 : n - 2;
    if (i > 0) sys.matrix(i, i - 1) = 1;
    if (i + 1 < n) sys.matrix(i, i + 1) = 1;
  }
  sys.rhs.assign(n, Rational(sys.class_size));
  return sys;
}

CoveringSystem build_pattern_system(int n, int r, const PatternOptions& opts) {
  if (n < 3) throw InvalidInput("pattern systems need n >= 3");
  if (r < 1 || r > n - 1)
    throw InvalidInput("pattern size r must satisfy 1 <= r <= n-1, got " + std::to_string(r));
  const std::uint64_t count = falling_factorial(n, r);
  if (count > opts.max_classes)
    throw CapacityError("pattern system n=" + std::to_string(n) + " r=" + std::to_string(r) +
                        " has " + std::to_string(count) + " classes, above the budget " +
                        std::to_string(opts.max_classes));

  CoveringSystem sys;
  sys.n = n;
  sys.pattern_r = r;
  sys.classes = position_tuples(n, r);
  sys.class_size = big_factorial(n - r);
  const std::size_t m = sys.classes.size();
  sys.matrix = RationalMatrix(m, m);
  sys.rhs.assign(m, Rational(sys.class_size));

  const ClassIndex index(n, sys.classes);
  for (std::size_t a = 0; a < m; ++a) {
    const auto& tuple = sys.classes[a];
    sys.matrix(a, a) += 1;  // the codeword itself
    for (int i = 1; i < n; ++i) {
      std::vector<int> moved = tuple;
      for (int& p : moved) {
        if (p == i)
          p = i + 1;
        else if (p == i + 1)
          p = i;
      }
      sys.matrix(index.of_tuple(moved), a) += 1;
    }
  }
  if (opts.verify_invariance) verify_pattern_coefficients(sys, opts);
  return sys;
}

InvarianceReport verify_pattern_coefficients(const CoveringSystem& sys, const PatternOptions& opts) {
  const int n = sys.n;
  const int r = sys.pattern_r;
  const std::size_t m = sys.classes.size();
  const ClassIndex index(n, sys.classes);

  // Compares column `a` against the ball of one representative.
  auto check = [&](std::span<const int> image) {
    const int a = index.of_image(image, r);
    std::vector<int> hits(m, 0);
    std::vector<int> buf(image.begin(), image.end());
    ++hits[index.of_image(buf, r)];
    for (int i = 0; i + 1 < n; ++i) {
      std::swap(buf[i], buf[i + 1]);
      ++hits[index.of_image(buf, r)];
      std::swap(buf[i], buf[i + 1]);
    }
    for (std::size_t b = 0; b < m; ++b)
      if (sys.matrix(b, a) != hits[b]) {
        std::vector<int> rep(image.begin(), image.end());
        throw InvariantViolation("coefficient (" + join(sys.classes[b]) + ", " +
                                 join(sys.classes[a]) + ") is " +
                                 to_fraction_string(sys.matrix(b, a)) + " but representative " +
                                 join(rep) + " gives " + std::to_string(hits[b]));
      }
  };

  InvarianceReport report;
  if (n <= opts.exhaustive_up_to_n) {
    const std::uint64_t total = factorial(n);
    parallel_chunks(total, opts.threads, [&](unsigned, std::uint64_t begin, std::uint64_t end) {
      std::vector<int> image(n);
      for (auto idx = begin; idx < end; ++idx) {
        unrank_into(n, idx, image);
        check(image);
      }
    });
    report.exhaustive = true;
    report.representatives_checked = total;
    return report;
  }

  std::mt19937_64 rng(opts.seed);
  std::vector<int> image(n);
  for (const auto& tuple : sys.classes) {
    for (int s = 0; s < opts.samples_per_class; ++s) {
      std::vector<int> rest;
      for (int v = r + 1; v <= n; ++v) rest.push_back(v);
      std::shuffle(rest.begin(), rest.end(), rng);
      std::fill(image.begin(), image.end(), 0);
      for (int k = 0; k < r; ++k) image[tuple[k] - 1] = k + 1;
      std::size_t next = 0;
      for (int& v : image)
        if (v == 0) v = rest[next++];
      check(image);
      ++report.representatives_checked;
    }
  }
  return report;
}

namespace {

struct SolutionAssessment {
  bool feasible = false;  // integral and within 0..|class|
  std::string reason;
};

SolutionAssessment assess(const std::vector<Rational>& x, const BigInt& class_size) {
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!is_integral(x[i]))
      return {false, "x[" + std::to_string(i) + "] = " + to_fraction_string(x[i]) +
                         " is not an integer"};
    if (sgn(x[i]) < 0) return {false, "x[" + std::to_string(i) + "] is negative"};
    if (x[i] > class_size) return {false, "x[" + std::to_string(i) + "] exceeds its class size"};
  }
  return {true, "solution is integral and within class bounds"};
}

std::vector<std::string> fraction_strings(const std::vector<Rational>& v) {
  std::vector<std::string> out;
  out.reserve(v.size());
  for (const auto& q : v) out.push_back(to_fraction_string(q));
  return out;
}

}  // namespace

Certificate basic_nonexistence_check(int n) {
  if (n < 4) throw InvalidInput("basic nonexistence check needs n >= 4");
  const double start = detail::now_seconds();
  const auto sys = build_basic_system(n);

  Certificate cert;
  cert.n = n;
  cert.radius = 1;
  cert.metric = Metric::Kendall;
  cert.pattern_r = 1;
  cert.method = Method::UniqueRationalSolutionNonIntegral;
  cert.space_size = big_factorial(n).get_str();
  cert.ball_size = static_cast<std::uint64_t>(n);
  cert.classes = sys.class_count();
  cert.matrix_hash = sys.hash();

  const bool dominant = gerschgorin_nonsingular(sys.matrix);
  const auto sol = solve_exact(sys.matrix, sys.rhs);
  cert.kernel_dim = static_cast<int>(sol.kernel.size());
  std::string why = dominant ? "strictly diagonally dominant" : "not diagonally dominant";

  if (sol.kind == LinearSolution::Kind::Unique) {
    if (sys.matrix.multiply(sol.particular) != sys.rhs)
      throw InvariantViolation("exact solution does not reproduce the right-hand side");
    cert.solution = fraction_strings(sol.particular);
    const auto verdict = assess(sol.particular, sys.class_size);
    why += ", rank " + std::to_string(sol.rank) + " of " + std::to_string(n) + "; " + verdict.reason;
    cert.verdict = verdict.feasible ? Verdict::Inconclusive : Verdict::Nonexistence;
  } else {
    why += ", rank " + std::to_string(sol.rank) + " (singular)";
    cert.verdict = Verdict::Inconclusive;
  }
  cert.detail = why;
  cert.stats.elapsed_seconds = detail::now_seconds() - start;
  return cert;
}

Certificate pattern_nonexistence_check(int n, int r, const PatternOptions& opts) {
  const double start = detail::now_seconds();
  const auto sys = build_pattern_system(n, r, opts);

  Certificate cert;
  cert.n = n;
  cert.radius = 1;
  cert.metric = Metric::Kendall;
  cert.pattern_r = r;
  cert.method = Method::PatternSystem;
  cert.space_size = big_factorial(n).get_str();
  cert.ball_size = static_cast<std::uint64_t>(n);
  cert.classes = sys.class_count();
  cert.matrix_hash = sys.hash();

  // The uniform vector always solves the system (every row sums to n).
  Rational share(sys.class_size, BigInt(n));
  share.canonicalize();
  const std::vector<Rational> uniform(sys.class_count(), share);
  if (sys.matrix.multiply(uniform) != sys.rhs)
    throw InvariantViolation("uniform vector does not satisfy the pattern system");

  const auto sol = solve_exact(sys.matrix, sys.rhs);
  cert.kernel_dim = static_cast<int>(sol.kernel.size());
  if (sol.kind == LinearSolution::Kind::Inconsistent) {
    cert.verdict = Verdict::Nonexistence;
    cert.detail = "system is inconsistent";
  } else {
    if (sys.matrix.multiply(sol.particular) != sys.rhs)
      throw InvariantViolation("exact solution does not reproduce the right-hand side");
    cert.solution = fraction_strings(sol.particular);
    if (sol.kind == LinearSolution::Kind::Unique) {
      const auto a = assess(sol.particular, sys.class_size);
      cert.verdict = a.feasible ? Verdict::Inconclusive : Verdict::Nonexistence;
      cert.detail = "unique solution; " + a.reason;
    } else {
      const int dim = cert.kernel_dim;
      const BigInt span = sys.class_size + 1;
      BigInt points = 1;
      for (int k = 0; k < dim; ++k) points *= span;
      if (dim > opts.max_kernel_dim || points > opts.max_enumeration) {
        cert.verdict = Verdict::Inconclusive;
        cert.detail = "kernel dimension " + std::to_string(dim) +
                      " exceeds the integral-point enumeration budget";
      } else {
        // Free coordinates are themselves codeword counts, so they range over
        // 0..|class|.
        const std::uint64_t total = points.get_ui();
        const std::uint64_t radix = span.get_ui();
        std::uint64_t feasible = 0;
        std::vector<Rational> x;
        for (std::uint64_t code = 0; code < total && feasible == 0; ++code) {
          x = sol.particular;
          std::uint64_t rest = code;
          for (int k = 0; k < dim; ++k) {
            const Rational t(static_cast<unsigned long>(rest % radix));
            rest /= radix;
            for (std::size_t i = 0; i < x.size(); ++i)
              if (sgn(sol.kernel[k][i]) != 0) x[i] += t * sol.kernel[k][i];
          }
          if (assess(x, sys.class_size).feasible) ++feasible;
        }
        cert.stats.nodes = total;
        if (feasible) {
          cert.verdict = Verdict::Inconclusive;
          cert.detail = "kernel dimension " + std::to_string(dim) +
                        "; an integral point within class bounds exists";
        } else {
          cert.verdict = Verdict::Nonexistence;
          cert.detail = "kernel dimension " + std::to_string(dim) + "; none of " +
                        std::to_string(total) + " candidate points is integral and in bounds";
        }
      }
    }
  }
  cert.stats.elapsed_seconds = detail::now_seconds() - start;
  return cert;
}

RegularityReport verify_regularity(const CodeBook& code, int r) {
  const int n = code.n;
  if (code.words.empty()) throw PreconditionError("regularity check needs a nonempty code");
  if (r < 1 || r > n) throw InvalidInput("r must satisfy 1 <= r <= n");

  RegularityReport report;
  report.n = n;
  report.r = r;
  report.code_size = code.size();
  const BigInt nf = big_factorial(n);
  const BigInt rest = big_factorial(n - r);
  report.expected = Rational(BigInt(static_cast<unsigned long>(code.size())) * rest, nf);
  report.expected.canonicalize();
  report.perfect_code_value = Rational(rest, BigInt(n));
  report.perfect_code_value.canonicalize();

  // Increasing position sets via a bitmask walk.
  std::vector<int> positions;
  std::uint64_t position_sets = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    if (std::popcount(mask) != r) continue;
    ++position_sets;
    positions.clear();
    for (int p = 0; p < n; ++p)
      if (mask >> p & 1) positions.push_back(p + 1);
    for (const auto& w : code.words) {
      std::vector<int> values;
      for (int p : positions) values.push_back(w.at(p));
      ++report.counts[{values, positions}];
    }
  }
  report.assignments = position_sets * falling_factorial(n, r);

  report.max_count = 0;
  for (const auto& [key, c] : report.counts) report.max_count = std::max(report.max_count, c);
  report.min_count = report.counts.size() < report.assignments ? 0 : report.max_count;
  for (const auto& [key, c] : report.counts) report.min_count = std::min(report.min_count, c);

  report.uniform = is_integral(report.expected) && report.min_count == report.max_count &&
                   Rational(report.min_count) == report.expected;
  return report;
}

}  // namespace permkit
