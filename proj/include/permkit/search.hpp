#ifndef PERMKIT_SEARCH_HPP
#define PERMKIT_SEARCH_HPP

#include <string_view>

#include "permkit/certificate.hpp"
#include "permkit/code.hpp"

namespace permkit {

/// Decides whether a perfect code of the given radius exists in S_n.
///
/// If n! is not a multiple of the ball size the answer is an immediate
/// divisibility certificate. Otherwise an exact-cover search runs over
/// all radius-`radius` balls, with the identity forced in as a codeword
/// (right translation maps any perfect code to one containing e). A
/// witness is rechecked with verify_perfect before it is returned. Budget
/// exhaustion yields `Inconclusive`, never `Nonexistence`.
Certificate exact_cover_perfect_search(int n, int radius, Metric metric,
                                       const SearchBudget& budget = {});

enum class CodeSearchMethod { ExactClique, GreedyLex };

std::string_view to_string(CodeSearchMethod m);
CodeSearchMethod parse_code_search_method(std::string_view text);

struct CodeSearchResult {
  CodeBook code;
  /// ExactClique: true iff the search proved `code` maximum.
  /// GreedyLex: always false (the result is maximal, not maximum).
  bool optimal = false;
  bool complete = true;
  SearchStats stats;
};

/// Largest n allowed for exact code search unless `allow_large` is set.
inline constexpr int kExactCodeSearchMaxN = 5;

/// Code with minimum distance >= d. The exact method is a max-clique search
/// on the "distance >= d" graph restricted to codes containing the identity;
/// greedy scans S_n in rank order and keeps every permutation far enough from
/// all kept ones. The result's minimum distance is rechecked before return.
CodeSearchResult max_code_search(int n, int d, Metric metric, CodeSearchMethod method,
                                 const SearchBudget& budget = {}, bool allow_large = false);

}  // namespace permkit

#endif  // PERMKIT_SEARCH_HPP
