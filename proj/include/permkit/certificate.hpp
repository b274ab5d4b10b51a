#ifndef PERMKIT_CERTIFICATE_HPP
#define PERMKIT_CERTIFICATE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "permkit/code.hpp"

namespace permkit {

/// Resource limits for a search. Zero means unlimited.
struct SearchBudget {
  double seconds = 0.0;
  std::uint64_t max_nodes = 0;
};

struct SearchStats {
  std::uint64_t nodes = 0;
  double elapsed_seconds = 0.0;
  bool budget_exhausted = false;
};

enum class Verdict { Nonexistence, ExistenceWitness, Inconclusive };

enum class Method {
  Divisibility,
  UniqueRationalSolutionNonIntegral,
  ExactCover,
  PatternSystem,
};

std::string_view to_string(Verdict v);
std::string_view to_string(Method m);
Verdict parse_verdict(std::string_view text);
Method parse_method(std::string_view text);

/// Verdict on the existence of a perfect code, with replayable evidence.
///
/// A nonexistence verdict always carries enough to recheck it: the
/// divisibility numbers, the covering system parameters plus its hash and
/// exact solution, or the exact-cover parameters.
struct Certificate {
  int n = 0;
  int radius = 1;
  Metric metric = Metric::Kendall;
  int pattern_r = 0;  // 0 when no covering system was used
  Verdict verdict = Verdict::Inconclusive;
  Method method = Method::Divisibility;

  std::string space_size;  // n!, decimal
  std::uint64_t ball_size = 0;

  std::uint64_t classes = 0;
  std::string matrix_hash;
  std::vector<std::string> solution;  // exact fractions "p/q"
  int kernel_dim = -1;                // -1 when not computed

  std::optional<CodeBook> witness;
  std::string detail;
  SearchStats stats;
};

nlohmann::json to_json(const Certificate& cert);
Certificate certificate_from_json(const nlohmann::json& j);

nlohmann::json to_json(const CodeBook& code);
CodeBook codebook_from_json(const nlohmann::json& j);

struct RecheckResult {
  bool reproduced = false;
  Verdict verdict = Verdict::Inconclusive;
  std::string detail;
};

/// Independently re-derives the verdict from the certificate's evidence.
RecheckResult recheck(const Certificate& cert, const SearchBudget& budget = {});

/// FNV-1a 64-bit hash, rendered as 16 hex digits.
std::string fnv1a_hex(std::string_view bytes);

}  // namespace permkit

#endif  // PERMKIT_CERTIFICATE_HPP
