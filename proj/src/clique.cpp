#include "permkit/clique.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "clock.hpp"
#include "permkit/errors.hpp"

namespace permkit {

BitGraph::BitGraph(int vertices)
    : n_(vertices), rows_(vertices, std::vector<std::uint64_t>((vertices + 63) / 64, 0)) {
  if (vertices < 0) throw InvalidInput("negative vertex count");
}

void BitGraph::add_edge(int u, int v) {
  if (u == v) return;
  rows_[u][v >> 6] |= std::uint64_t{1} << (v & 63);
  rows_[v][u >> 6] |= std::uint64_t{1} << (u & 63);
}

int BitGraph::degree(int v) const {
  int d = 0;
  for (auto w : rows_[v]) d += std::popcount(w);
  return d;
}

namespace {

class Solver {
 public:
  Solver(const BitGraph& g, bool all, const SearchBudget& budget, std::size_t max_optima)
      : g_(g), all_(all), budget_(budget), max_optima_(max_optima) {}

  CliqueResult run() {
    const double start = detail::now_seconds();
    deadline_ = start + budget_.seconds;
    // Highest degree first; the coloring pass then reorders per level.
    std::vector<int> order(g_.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return g_.degree(a) > g_.degree(b); });
    if (!order.empty()) expand(order);
    result_.complete = !stopped_;
    result_.stats.nodes = nodes_;
    result_.stats.elapsed_seconds = detail::now_seconds() - start;
    result_.stats.budget_exhausted = stopped_;
    for (auto& c : result_.optima) std::sort(c.begin(), c.end());
    std::sort(result_.optima.begin(), result_.optima.end());
    return std::move(result_);
  }

 private:
  // Greedy sequential coloring; returns vertices sorted by color with the
  // color bound of each.
  void color_sort(const std::vector<int>& cand, std::vector<int>& out, std::vector<int>& bound) {
    out.clear();
    bound.clear();
    std::vector<std::vector<int>> classes;
    for (int v : cand) {
      std::size_t k = 0;
      for (; k < classes.size(); ++k) {
        bool clash = false;
        for (int u : classes[k])
          if (g_.adjacent(u, v)) {
            clash = true;
            break;
          }
        if (!clash) break;
      }
      if (k == classes.size()) classes.emplace_back();
      classes[k].push_back(v);
    }
    for (std::size_t k = 0; k < classes.size(); ++k)
      for (int v : classes[k]) {
        out.push_back(v);
        bound.push_back(static_cast<int>(k) + 1);
      }
  }

  void record() {
    const int size = static_cast<int>(current_.size());
    if (size > result_.best_size) {
      result_.best_size = size;
      result_.optima.clear();
      result_.optima_truncated = false;
    }
    if (size == result_.best_size) {
      if (!all_ && !result_.optima.empty()) return;
      if (result_.optima.size() < max_optima_)
        result_.optima.push_back(current_);
      else
        result_.optima_truncated = true;
    }
  }

  bool prune(int bound) const {
    const int reach = static_cast<int>(current_.size()) + bound;
    return all_ ? reach < result_.best_size : reach <= result_.best_size;
  }

  void expand(std::vector<int> cand) {
    ++nodes_;
    if ((nodes_ & 0xFF) == 0 &&
        ((budget_.max_nodes && nodes_ >= budget_.max_nodes) ||
         (budget_.seconds > 0 && detail::now_seconds() > deadline_)))
      stopped_ = true;
    if (stopped_) return;

    std::vector<int> ordered, bound;
    color_sort(cand, ordered, bound);
    for (int i = static_cast<int>(ordered.size()) - 1; i >= 0; --i) {
      if (prune(bound[i])) return;
      const int v = ordered[i];
      current_.push_back(v);
      std::vector<int> next;
      for (int j = 0; j < i; ++j)
        if (g_.adjacent(v, ordered[j])) next.push_back(ordered[j]);
      if (next.empty())
        record();
      else
        expand(std::move(next));
      current_.pop_back();
      if (stopped_) return;
    }
  }

  const BitGraph& g_;
  bool all_;
  SearchBudget budget_;
  std::size_t max_optima_;
  double deadline_ = 0.0;
  std::uint64_t nodes_ = 0;
  bool stopped_ = false;
  std::vector<int> current_;
  CliqueResult result_;
};

}  // namespace

CliqueResult max_clique(const BitGraph& g, bool enumerate_all, const SearchBudget& budget,
                        std::size_t max_optima) {
  return Solver(g, enumerate_all, budget, max_optima).run();
}

}  // namespace permkit
