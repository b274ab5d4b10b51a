#include "permkit/cyclic_classes.hpp"

#include <algorithm>
#include <limits>
#include <memory>
#include <mutex>
#include <queue>

#include "permkit/errors.hpp"

namespace permkit {

std::vector<Permutation> RotationClass::members() const {
  std::vector<Permutation> out;
  for (int k = 0; k < n; ++k) out.push_back(rotate(representative, k));
  std::sort(out.begin(), out.end());
  return out;
}

RotationClass class_of(const Permutation& p) {
  const auto img = p.image();
  const int k = static_cast<int>(std::find(img.begin(), img.end(), 1) - img.begin());
  return RotationClass{p.size(), rotate(p, k), p.size()};
}

std::vector<RotationClass> all_classes(int n) {
  if (n < 1) throw InvalidInput("n must be positive");
  std::vector<RotationClass> out;
  for (auto& p : all_permutations(n))
    if (p.image()[0] == 1) out.push_back(RotationClass{n, std::move(p), n});
  return out;
}

ClassGraph::ClassGraph(int n) : n_(n), classes_(all_classes(n)) {
  if (n < 2) throw InvalidInput("class graph needs n >= 2");
  for (std::size_t i = 0; i < classes_.size(); ++i) index_[classes_[i].representative] = i;
  adjacency_.resize(classes_.size());
  for (std::size_t i = 0; i < classes_.size(); ++i) {
    std::vector<int> nbrs;
    for (int k = 0; k < n; ++k) {
      const auto rotated = rotate(classes_[i].representative, k);
      for (int pos = 1; pos < n; ++pos) {
        const auto j = index_.at(class_of(adjacent_transpose(rotated, pos)).representative);
        if (j != i) nbrs.push_back(static_cast<int>(j));
      }
    }
    std::sort(nbrs.begin(), nbrs.end());
    nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
    adjacency_[i] = std::move(nbrs);
  }
}

std::size_t ClassGraph::index_of(const RotationClass& c) const {
  if (c.n != n_) throw InvalidInput("rotation class from a different S_n");
  return index_.at(c.representative);
}

std::vector<int> ClassGraph::distances_from(std::size_t index) const {
  std::vector<int> dist(classes_.size(), -1);
  std::queue<std::size_t> q;
  dist[index] = 0;
  q.push(index);
  while (!q.empty()) {
    const auto u = q.front();
    q.pop();
    for (int v : adjacency_[u])
      if (dist[v] < 0) {
        dist[v] = dist[u] + 1;
        q.push(v);
      }
  }
  return dist;
}

int ClassGraph::distance(const RotationClass& a, const RotationClass& b) const {
  return distances_from(index_of(a))[index_of(b)];
}

ClassGraph::Stats ClassGraph::stats() const {
  Stats s;
  s.classes = classes_.size();
  s.min_degree = std::numeric_limits<int>::max();
  for (const auto& nbrs : adjacency_) {
    s.edges += nbrs.size();
    s.min_degree = std::min(s.min_degree, static_cast<int>(nbrs.size()));
    s.max_degree = std::max(s.max_degree, static_cast<int>(nbrs.size()));
  }
  s.edges /= 2;
  for (std::size_t i = 0; i < classes_.size(); ++i) {
    const auto d = distances_from(i);
    s.diameter = std::max(s.diameter, *std::max_element(d.begin(), d.end()));
  }
  return s;
}

const ClassGraph& class_graph(int n) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<ClassGraph>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[n];
  if (!slot) slot = std::make_unique<ClassGraph>(n);
  return *slot;
}

int class_distance(const RotationClass& a, const RotationClass& b) {
  if (a.n != b.n) throw InvalidInput("size mismatch between rotation classes");
  if (a == b) return 0;
  return class_graph(a.n).distance(a, b);
}

namespace {

int min_class_distance(const std::vector<RotationClass>& classes) {
  int best = std::numeric_limits<int>::max();
  if (classes.size() < 2) return best;
  const auto& g = class_graph(classes.front().n);
  for (std::size_t i = 0; i < classes.size(); ++i) {
    const auto dist = g.distances_from(g.index_of(classes[i]));
    for (std::size_t j = i + 1; j < classes.size(); ++j)
      best = std::min(best, dist[g.index_of(classes[j])]);
  }
  return best;
}

void require_same_n(const std::vector<RotationClass>& classes) {
  if (classes.empty()) throw PreconditionError("class code must be nonempty");
  for (const auto& c : classes)
    if (c.n != classes.front().n) throw InvalidInput("class code mixes different n");
}

}  // namespace

LiftResult lift_class_code(const std::vector<RotationClass>& class_code, int d) {
  require_same_n(class_code);
  const int n = class_code.front().n;
  LiftResult out;
  out.class_min_distance = min_class_distance(class_code);
  if (out.class_min_distance < d)
    throw PreconditionError("class code has minimum class distance " +
                            std::to_string(out.class_min_distance) + " < " + std::to_string(d));
  std::vector<Permutation> words;
  for (const auto& c : class_code)
    for (auto& m : c.members()) words.push_back(std::move(m));
  out.code = make_codebook(n, Metric::CyclicKendall, std::move(words));
  out.measured_min_distance = out.code.size() >= 2 ? min_distance(out.code) : 0;
  return out;
}

ProjectionResult project_class_code(const std::vector<RotationClass>& class_code, int d) {
  require_same_n(class_code);
  const int n = class_code.front().n;
  if (n < 3) throw PreconditionError("projection needs n >= 3");
  std::vector<Permutation> words;
  for (const auto& c : class_code) {
    const auto img = c.representative.image();
    const int at = static_cast<int>(std::find(img.begin(), img.end(), n) - img.begin());
    const auto rotated = rotate(c.representative, at + 1);
    std::vector<int> shorter(rotated.image().begin(), rotated.image().end() - 1);
    words.emplace_back(std::move(shorter));
  }
  std::sort(words.begin(), words.end());
  words.erase(std::unique(words.begin(), words.end()), words.end());
  ProjectionResult out;
  out.code = make_codebook(n - 1, Metric::CyclicKendall, std::move(words));
  out.measured_min_distance = out.code.size() >= 2 ? min_distance(out.code) : 0;
  out.reaches_class_distance = out.code.size() < 2 || out.measured_min_distance >= d;
  return out;
}

}  // namespace permkit
