#include "permkit/exact_cover.hpp"

#include <limits>

#include "clock.hpp"
#include "permkit/errors.hpp"

namespace permkit {

// Node 0 is the root; nodes 1..items are column headers.
ExactCover::ExactCover(int item_count) : items_(item_count) {
  if (item_count < 1) throw InvalidInput("exact cover needs at least one item");
  nodes_.resize(static_cast<std::size_t>(item_count) + 1);
  column_size_.assign(nodes_.size(), 0);
  option_of_node_.assign(nodes_.size(), -1);
  for (int c = 0; c <= item_count; ++c) {
    nodes_[c].left = c == 0 ? item_count : c - 1;
    nodes_[c].right = c == item_count ? 0 : c + 1;
    nodes_[c].up = nodes_[c].down = c;
    nodes_[c].column = c;
  }
}

int ExactCover::add_option(std::span<const int> items) {
  if (items.empty()) throw InvalidInput("exact cover option must be nonempty");
  const int option = static_cast<int>(option_first_node_.size());
  const int first = static_cast<int>(nodes_.size());
  option_first_node_.push_back(first);
  for (std::size_t k = 0; k < items.size(); ++k) {
    const int item = items[k];
    if (item < 0 || item >= items_) throw InvalidInput("exact cover item out of range");
    const int column = item + 1;
    const int id = static_cast<int>(nodes_.size());
    Node node{};
    node.column = column;
    node.up = nodes_[column].up;
    node.down = column;
    node.left = k == 0 ? id : id - 1;
    node.right = first;
    nodes_.push_back(node);
    nodes_[nodes_[column].up].down = id;
    nodes_[column].up = id;
    if (k > 0) nodes_[id - 1].right = id;
    nodes_[first].left = id;
    ++column_size_[column];
    option_of_node_.push_back(option);
  }
  return option;
}

void ExactCover::cover(int c) {
  nodes_[nodes_[c].right].left = nodes_[c].left;
  nodes_[nodes_[c].left].right = nodes_[c].right;
  for (int i = nodes_[c].down; i != c; i = nodes_[i].down) {
    for (int j = nodes_[i].right; j != i; j = nodes_[j].right) {
      nodes_[nodes_[j].down].up = nodes_[j].up;
      nodes_[nodes_[j].up].down = nodes_[j].down;
      --column_size_[nodes_[j].column];
    }
  }
}

void ExactCover::uncover(int c) {
  for (int i = nodes_[c].up; i != c; i = nodes_[i].up) {
    for (int j = nodes_[i].left; j != i; j = nodes_[j].left) {
      ++column_size_[nodes_[j].column];
      nodes_[nodes_[j].down].up = j;
      nodes_[nodes_[j].up].down = j;
    }
  }
  nodes_[nodes_[c].right].left = c;
  nodes_[nodes_[c].left].right = c;
}

bool ExactCover::search() {
  if (nodes_[0].right == 0) return true;
  ++node_count_;
  if ((node_count_ & 0x3FF) == 0) {
    if ((budget_.max_nodes && node_count_ >= budget_.max_nodes) ||
        (budget_.seconds > 0 && detail::now_seconds() > deadline_))
      out_of_budget_ = true;
  }
  if (out_of_budget_) return false;

  int best = -1;
  int best_size = std::numeric_limits<int>::max();
  for (int c = nodes_[0].right; c != 0; c = nodes_[c].right) {
    if (column_size_[c] < best_size) {
      best = c;
      best_size = column_size_[c];
      if (best_size <= 1) break;
    }
  }
  if (best_size == 0) return false;

  cover(best);
  for (int r = nodes_[best].down; r != best; r = nodes_[r].down) {
    stack_.push_back(option_of_node_[r]);
    for (int j = nodes_[r].right; j != r; j = nodes_[j].right) cover(nodes_[j].column);
    const bool found = search();
    for (int j = nodes_[r].left; j != r; j = nodes_[j].left) uncover(nodes_[j].column);
    if (found) {
      uncover(best);
      return true;
    }
    stack_.pop_back();
    if (out_of_budget_) break;
  }
  uncover(best);
  return false;
}

ExactCover::Result ExactCover::solve(std::span<const int> forced, const SearchBudget& budget) {
  const double start = detail::now_seconds();
  budget_ = budget;
  deadline_ = start + budget.seconds;
  node_count_ = 0;
  out_of_budget_ = false;
  stack_.clear();

  Result result;
  // Forced options: cover their columns up front.
  std::vector<int> forced_columns;
  bool conflict = false;
  for (int option : forced) {
    const int first = option_first_node_.at(option);
    int j = first;
    do {
      const int c = nodes_[j].column;
      // A column already removed from the header list means overlap.
      bool present = false;
      for (int h = nodes_[0].right; h != 0; h = nodes_[h].right)
        if (h == c) present = true;
      if (!present) {
        conflict = true;
        break;
      }
      cover(c);
      forced_columns.push_back(c);
      j = nodes_[j].right;
    } while (j != first);
    if (conflict) break;
    stack_.push_back(option);
  }

  const bool found = !conflict && search();
  for (auto it = forced_columns.rbegin(); it != forced_columns.rend(); ++it) uncover(*it);

  result.stats.nodes = node_count_;
  result.stats.elapsed_seconds = detail::now_seconds() - start;
  result.stats.budget_exhausted = out_of_budget_;
  if (found) {
    result.status = Status::Found;
    result.chosen = stack_;
  } else {
    result.status = out_of_budget_ ? Status::BudgetExceeded : Status::Exhausted;
  }
  return result;
}

}  // namespace permkit
