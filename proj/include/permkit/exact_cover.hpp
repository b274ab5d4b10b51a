#ifndef PERMKIT_EXACT_COVER_HPP
#define PERMKIT_EXACT_COVER_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "permkit/certificate.hpp"

namespace permkit {

/// Dancing-links exact cover (Algorithm X), choosing the item with the fewest
/// remaining options at every level.
class ExactCover {
 public:
  explicit ExactCover(int item_count);

  /// Returns the option's index. Items must be distinct and in range.
  int add_option(std::span<const int> items);

  enum class Status { Found, Exhausted, BudgetExceeded };

  struct Result {
    Status status = Status::Exhausted;
    std::vector<int> chosen;  // option indices, valid when Found
    SearchStats stats;
  };

  /// Finds one exact cover that includes every option in `forced`.
  /// `forced` options must be pairwise disjoint.
  Result solve(std::span<const int> forced = {}, const SearchBudget& budget = {});

 private:
  struct Node {
    int left, right, up, down, column;
  };

  void cover(int column);
  void uncover(int column);
  bool search();

  int items_;
  std::vector<Node> nodes_;
  std::vector<int> column_size_;
  std::vector<int> option_of_node_;
  std::vector<int> option_first_node_;

  std::vector<int> stack_;
  std::uint64_t node_count_ = 0;
  bool out_of_budget_ = false;
  SearchBudget budget_;
  double deadline_ = 0.0;
};

}  // namespace permkit

#endif  // PERMKIT_EXACT_COVER_HPP
