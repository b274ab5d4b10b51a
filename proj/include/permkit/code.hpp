#ifndef PERMKIT_CODE_HPP
#define PERMKIT_CODE_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "permkit/metric.hpp"
#include "permkit/perm.hpp"

namespace permkit {

/// A set of permutations of S_n together with the metric it is measured in.
struct CodeBook {
  int n = 0;
  Metric metric = Metric::Kendall;
  std::vector<Permutation> words;  // sorted, distinct
  std::optional<int> claimed_min_distance;
  bool verified = false;

  std::size_t size() const { return words.size(); }
  bool contains(const Permutation& p) const;
};

/// Validates lengths and sorts the words. Duplicates are rejected.
CodeBook make_codebook(int n, Metric metric, std::vector<Permutation> words,
                       std::optional<int> claimed_min_distance = std::nullopt);

/// Minimum pairwise distance under the code's metric. Needs >= 2 words.
int min_distance(const CodeBook& code, unsigned threads = 0);

/// Checks `claimed_min_distance` (when present) and sets `verified`.
/// Returns false when the claim does not hold.
bool confirm_claim(CodeBook& code, unsigned threads = 0);

struct CoverageDefect {
  Permutation word;
  int times_covered = 0;
};

struct PerfectionReport {
  bool perfect = false;
  std::uint64_t ball_size = 0;
  std::uint64_t space_size = 0;
  std::uint64_t code_size = 0;
  std::uint64_t total_defects = 0;
  std::uint64_t uncovered = 0;
  std::uint64_t overcovered = 0;
  std::vector<CoverageDefect> defects;  // first `kMaxListedDefects`
};

inline constexpr std::size_t kMaxListedDefects = 32;

/// Counts, for each permutation, the codewords within distance `radius`.
/// Perfect iff every count is exactly one.
PerfectionReport verify_perfect(const CodeBook& code, int radius, unsigned threads = 0);

/// The 20-word single-error-correcting code of S_5 under the cyclic metric,
/// listed row by row with symbols shifted from 0..4 to 1..5.
CodeBook paper_s5_cyclic_code();

/// The same 20 words in their original 5x4 layout (row-major, 0-based
/// symbols). Column c holds the left rotations of the row-0 entry.
const std::vector<std::vector<std::vector<int>>>& paper_s5_listing();

/// All cyclic rotations of [0, a, 2a, ..., (n-1)a] mod n for a = 1..n-1,
/// shifted to 1-based symbols. Requires a prime n >= 5.
CodeBook cyclic_prime_code(int n);

bool is_prime(int n);

/// Code file: a header line `n=<n> metric=<kendall|cyclic>` followed by one
/// permutation per line. Blank lines and lines starting with '#' are skipped.
CodeBook read_code(std::istream& in, bool zero_based = false);
CodeBook read_code_file(const std::string& path, bool zero_based = false);
void write_code(std::ostream& out, const CodeBook& code);

}  // namespace permkit

#endif  // PERMKIT_CODE_HPP
