#ifndef PERMKIT_CYCLIC_CLASSES_HPP
#define PERMKIT_CYCLIC_CLASSES_HPP

#include <cstdint>
#include <map>
#include <vector>

#include "permkit/code.hpp"

namespace permkit {

/// Equivalence class of a permutation under cyclic rotation of its one-line
/// notation. The representative is the lexicographically smallest rotation,
/// which is the one starting with symbol 1. Every class has exactly n
/// members.
struct RotationClass {
  int n = 0;
  Permutation representative;
  int size = 0;

  std::vector<Permutation> members() const;

  friend auto operator<=>(const RotationClass& a, const RotationClass& b) {
    return a.representative <=> b.representative;
  }
  friend bool operator==(const RotationClass& a, const RotationClass& b) {
    return a.representative == b.representative;
  }
};

RotationClass class_of(const Permutation& p);

/// Every rotation class of S_n, ordered by representative.
std::vector<RotationClass> all_classes(int n);

/// The graph on rotation classes where two classes are adjacent when some of
/// their members are at Kendall distance one. Distances are shortest paths.
class ClassGraph {
 public:
  explicit ClassGraph(int n);

  int n() const { return n_; }
  std::size_t size() const { return classes_.size(); }
  const std::vector<RotationClass>& classes() const { return classes_; }
  const std::vector<int>& neighbors(std::size_t index) const { return adjacency_[index]; }

  std::size_t index_of(const RotationClass& c) const;

  /// Breadth-first distances from one class to all classes.
  std::vector<int> distances_from(std::size_t index) const;
  int distance(const RotationClass& a, const RotationClass& b) const;

  struct Stats {
    std::size_t classes = 0;
    std::size_t edges = 0;
    int min_degree = 0;
    int max_degree = 0;
    int diameter = 0;
  };
  Stats stats() const;

 private:
  int n_;
  std::vector<RotationClass> classes_;
  std::map<Permutation, std::size_t> index_;
  std::vector<std::vector<int>> adjacency_;
};

/// Shared graph per n.
const ClassGraph& class_graph(int n);

/// Graph distance between two rotation classes of the same S_n.
int class_distance(const RotationClass& a, const RotationClass& b);

struct LiftResult {
  CodeBook code;  // every rotation of every representative, cyclic metric
  int class_min_distance = 0;
  /// Measured minimum cyclic Kendall distance of the lifted code (0 when it
  /// has a single word).
  int measured_min_distance = 0;
};

/// Lifts a class code with pairwise class distance >= d to a code of size
/// n * |classes| in S_n. Throws PreconditionError when the class distance
/// requirement fails.
LiftResult lift_class_code(const std::vector<RotationClass>& class_code, int d);

struct ProjectionResult {
  CodeBook code;  // in S_{n-1}, cyclic metric
  int measured_min_distance = 0;
  bool reaches_class_distance = false;
};

/// Experimental map to S_{n-1}: rotate each representative so that symbol n
/// is last, then drop it. The resulting distance is measured, not assumed.
ProjectionResult project_class_code(const std::vector<RotationClass>& class_code, int d);

}  // namespace permkit

#endif  // PERMKIT_CYCLIC_CLASSES_HPP
