#ifndef PERMKIT_CLIQUE_HPP
#define PERMKIT_CLIQUE_HPP

#include <cstdint>
#include <vector>

#include "permkit/certificate.hpp"

namespace permkit {

/// Undirected graph stored as adjacency bitsets.
class BitGraph {
 public:
  explicit BitGraph(int vertices);

  int size() const { return n_; }
  void add_edge(int u, int v);
  bool adjacent(int u, int v) const {
    return (rows_[u][v >> 6] >> (v & 63)) & 1u;
  }
  int degree(int v) const;

 private:
  int n_;
  std::vector<std::vector<std::uint64_t>> rows_;
};

struct CliqueResult {
  int best_size = 0;
  /// Maximum cliques (vertex lists, ascending). One when not enumerating.
  std::vector<std::vector<int>> optima;
  bool optima_truncated = false;
  /// True when the search finished; otherwise best_size is a lower bound.
  bool complete = false;
  SearchStats stats;
};

/// Branch and bound maximum clique with greedy-coloring upper bounds.
/// With `enumerate_all`, collects every maximum clique (up to `max_optima`).
CliqueResult max_clique(const BitGraph& g, bool enumerate_all = false,
                        const SearchBudget& budget = {}, std::size_t max_optima = 100000);

}  // namespace permkit

#endif  // PERMKIT_CLIQUE_HPP
