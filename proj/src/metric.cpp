#include "permkit/metric.hpp"

#include <algorithm>
#include <atomic>
#include <iostream>
#include <map>
#include <memory>
#include <mutex>
#include <set>

#include "permkit/errors.hpp"

namespace permkit {

std::string_view to_string(Metric m) {
  return m == Metric::Kendall ? "kendall" : "cyclic";
}

Metric parse_metric(std::string_view text) {
  if (text == "kendall") return Metric::Kendall;
  if (text == "cyclic" || text == "cyclic-kendall") return Metric::CyclicKendall;
  throw InvalidInput("unknown metric '" + std::string(text) + "' (expected kendall|cyclic)");
}

std::vector<std::pair<int, int>> generators(int n, Metric m) {
  std::vector<std::pair<int, int>> gens;
  for (int i = 0; i + 1 < n; ++i) gens.emplace_back(i, i + 1);
  if (m == Metric::CyclicKendall && n >= 3) gens.emplace_back(0, n - 1);
  return gens;
}

namespace {

std::uint64_t merge_count(std::vector<int>& v, std::vector<int>& scratch, std::size_t lo,
                          std::size_t hi) {
  if (hi - lo < 2) return 0;
  const std::size_t mid = lo + (hi - lo) / 2;
  std::uint64_t count = merge_count(v, scratch, lo, mid) + merge_count(v, scratch, mid, hi);
  std::size_t i = lo, j = mid, k = lo;
  while (i < mid && j < hi) {
    if (v[j] < v[i]) {
      count += mid - i;
      scratch[k++] = v[j++];
    } else {
      scratch[k++] = v[i++];
    }
  }
  while (i < mid) scratch[k++] = v[i++];
  while (j < hi) scratch[k++] = v[j++];
  std::copy(scratch.begin() + lo, scratch.begin() + hi, v.begin() + lo);
  return count;
}

void require_same_size(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size())
    throw InvalidInput("size mismatch: " + std::to_string(a.size()) + " vs " +
                       std::to_string(b.size()));
}

}  // namespace

int inversions(std::span<const int> image) {
  std::vector<int> v(image.begin(), image.end());
  std::vector<int> scratch(v.size());
  return static_cast<int>(merge_count(v, scratch, 0, v.size()));
}

int kendall_distance(const Permutation& a, const Permutation& b) {
  require_same_size(a, b);
  const int n = a.size();
  // Position in b of each entry of a; its inversions are the discordant pairs.
  std::vector<int> pos_in_b(n + 1);
  for (int i = 0; i < n; ++i) pos_in_b[b.image()[i]] = i;
  std::vector<int> seq(n);
  for (int i = 0; i < n; ++i) seq[i] = pos_in_b[a.image()[i]];
  std::vector<int> scratch(n);
  return static_cast<int>(merge_count(seq, scratch, 0, seq.size()));
}

int kendall_distance_pairs(const Permutation& a, const Permutation& b) {
  require_same_size(a, b);
  const Permutation ai = inverse(a);
  const Permutation bi = inverse(b);
  const int n = a.size();
  int count = 0;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (ai.at(i) < ai.at(j) && bi.at(i) > bi.at(j)) ++count;
  return count;
}

int DistanceTable::max_distance() const {
  return dist_.empty() ? 0 : *std::max_element(dist_.begin(), dist_.end());
}

std::vector<std::uint64_t> DistanceTable::histogram() const {
  std::vector<std::uint64_t> h(max_distance() + 1, 0);
  for (auto d : dist_) ++h[d];
  return h;
}

namespace {

std::atomic<int> g_table_capacity{10};

}  // namespace

int table_capacity() { return g_table_capacity.load(); }

void set_table_capacity(int max_n) {
  if (max_n < 2 || max_n > 12) throw InvalidInput("table capacity must be in 2..12");
  if (max_n > 10)
    std::cerr << "permkit: warning: table capacity " << max_n << " allows tables of "
              << factorial(max_n) / (1024 * 1024) << " MiB\n";
  g_table_capacity.store(max_n);
}

DistanceTable build_distance_table(int n, Metric metric) {
  if (n < 2) throw InvalidInput("distance tables need n >= 2");
  if (n > table_capacity())
    throw CapacityError("n = " + std::to_string(n) + " exceeds table capacity " +
                        std::to_string(table_capacity()));
  constexpr std::uint8_t kUnseen = 0xFF;
  const std::uint64_t total = factorial(n);
  std::vector<std::uint8_t> dist(total, kUnseen);
  const auto gens = generators(n, metric);

  std::vector<std::uint32_t> frontier{0};
  dist[0] = 0;
  std::vector<int> buf(n);
  std::uint8_t level = 0;
  while (!frontier.empty()) {
    std::vector<std::uint32_t> next;
    ++level;
    for (std::uint32_t idx : frontier) {
      unrank_into(n, idx, buf);
      for (auto [i, j] : gens) {
        std::swap(buf[i], buf[j]);
        const auto r = rank_of(buf);
        if (dist[r] == kUnseen) {
          dist[r] = level;
          next.push_back(static_cast<std::uint32_t>(r));
        }
        std::swap(buf[i], buf[j]);
      }
    }
    frontier = std::move(next);
  }
  return DistanceTable(n, metric, std::move(dist));
}

const DistanceTable& cached_table(int n, Metric metric) {
  struct Slot {
    std::once_flag once;
    std::unique_ptr<DistanceTable> table;
  };
  static std::mutex mu;
  static std::map<std::pair<int, Metric>, std::shared_ptr<Slot>> cache;

  std::shared_ptr<Slot> slot;
  {
    std::lock_guard lock(mu);
    auto& entry = cache[{n, metric}];
    if (!entry) entry = std::make_shared<Slot>();
    slot = entry;
  }
  std::call_once(slot->once, [&] {
    slot->table = std::make_unique<DistanceTable>(build_distance_table(n, metric));
  });
  return *slot->table;
}

int distance_from_identity(const Permutation& p, Metric metric) {
  if (metric == Metric::Kendall) return inversions(p.image());
  if (p.size() == 1) return 0;
  return cached_table(p.size(), metric).at(p);
}

int cyclic_kendall_distance(const Permutation& a, const Permutation& b) {
  require_same_size(a, b);
  return distance_from_identity(compose(b, inverse(a)), Metric::CyclicKendall);
}

int distance(const Permutation& a, const Permutation& b, Metric metric) {
  return metric == Metric::Kendall ? kendall_distance(a, b) : cyclic_kendall_distance(a, b);
}

std::vector<Permutation> ball(const Permutation& center, int radius, Metric metric) {
  if (radius < 0) throw InvalidInput("radius must be nonnegative");
  const int n = center.size();
  if (radius <= 2 || n < 2) {
    std::set<Permutation> seen{center};
    std::vector<Permutation> layer{center};
    const auto gens = generators(n, metric);
    for (int step = 0; step < radius; ++step) {
      std::vector<Permutation> next;
      for (const auto& p : layer) {
        for (auto [i, j] : gens) {
          std::vector<int> img(p.image().begin(), p.image().end());
          std::swap(img[i], img[j]);
          auto q = make_unchecked(std::move(img));
          if (seen.insert(q).second) next.push_back(std::move(q));
        }
      }
      layer = std::move(next);
    }
    return {seen.begin(), seen.end()};
  }
  const auto& table = cached_table(n, metric);
  std::vector<Permutation> out;
  std::vector<int> buf(n);
  for (std::uint64_t idx = 0; idx < table.size(); ++idx) {
    if (table.at(idx) > radius) continue;
    unrank_into(n, idx, buf);
    out.push_back(compose(make_unchecked(buf), center));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t ball_size(int n, int radius, Metric metric) {
  if (radius < 0) throw InvalidInput("radius must be nonnegative");
  if (metric == Metric::Kendall) return kendall_ball_size(n, radius).get_ui();
  if (radius <= 2) return ball(Permutation::identity(n), radius, metric).size();
  const auto h = cached_table(n, metric).histogram();
  std::uint64_t total = 0;
  for (int k = 0; k <= radius && k < static_cast<int>(h.size()); ++k) total += h[k];
  return total;
}

std::vector<BigInt> mahonian_row(int n) {
  if (n < 1) throw InvalidInput("n must be positive");
  // Product of (1 + q + ... + q^(k-1)) for k = 1..n.
  std::vector<BigInt> row{1};
  for (int k = 2; k <= n; ++k) {
    std::vector<BigInt> next(row.size() + k - 1, 0);
    for (std::size_t i = 0; i < row.size(); ++i)
      for (int j = 0; j < k; ++j) next[i + j] += row[i];
    row = std::move(next);
  }
  return row;
}

BigInt mahonian(int n, int k) {
  if (k < 0) return 0;
  const auto row = mahonian_row(n);
  return k < static_cast<int>(row.size()) ? row[k] : BigInt(0);
}

BigInt kendall_ball_size(int n, int radius) {
  if (radius < 0) throw InvalidInput("radius must be nonnegative");
  const auto row = mahonian_row(n);
  BigInt total = 0;
  for (int k = 0; k <= radius && k < static_cast<int>(row.size()); ++k) total += row[k];
  return total;
}

}  // namespace permkit
