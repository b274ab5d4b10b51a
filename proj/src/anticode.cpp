#include "permkit/anticode.hpp"

#include <algorithm>
#include <atomic>

#include "clock.hpp"
#include "permkit/clique.hpp"
#include "permkit/errors.hpp"
#include "permkit/parallel.hpp"
#include "permkit/search.hpp"

namespace permkit {

namespace {

BigInt big_factorial(int n) {
  BigInt f = 1;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

int choose2(int n) { return n * (n - 1) / 2; }

// Largest n for which bound candidates are materialized and their diameters
// recomputed; above it sizes and diameters come from closed forms.
constexpr int kMaterializeMaxN = 7;

}  // namespace

int diameter(const std::vector<Permutation>& members, Metric metric, unsigned threads) {
  if (members.empty()) throw InvalidInput("diameter of an empty set is undefined");
  if (metric == Metric::CyclicKendall) cached_table(members.front().size(), metric);
  std::atomic<int> best{0};
  parallel_chunks(members.size(), threads, [&](unsigned, std::uint64_t begin, std::uint64_t end) {
    int local = 0;
    for (auto i = begin; i < end; ++i)
      for (auto j = i + 1; j < members.size(); ++j)
        local = std::max(local, distance(members[i], members[j], metric));
    int cur = best.load();
    while (local > cur && !best.compare_exchange_weak(cur, local)) {
    }
  });
  return best.load();
}

Anticode make_anticode(int n, Metric metric, std::vector<Permutation> members,
                       std::string description) {
  for (const auto& m : members)
    if (m.size() != n) throw InvalidInput("anticode member has the wrong length");
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  Anticode a;
  a.n = n;
  a.metric = metric;
  a.diameter = diameter(members, metric);
  a.members = std::move(members);
  a.description = std::move(description);
  return a;
}

Anticode ball_pair_anticode(int n, int radius) {
  if (n < 2) throw InvalidInput("ball pair anticode needs n >= 2");
  const auto e = Permutation::identity(n);
  const auto swap12 = adjacent_transpose(e, 1);
  auto members = ball(e, radius, Metric::Kendall);
  for (const auto& p : ball(e, radius, Metric::Kendall)) members.push_back(compose(p, swap12));
  return make_anticode(n, Metric::Kendall, std::move(members),
                       "S(e," + std::to_string(radius) + ") u S(e," + std::to_string(radius) +
                           ")o(1,2)");
}

Anticode construct_diameter3_anticode(int n) {
  if (n < 4) throw PreconditionError("the diameter-3 anticode construction needs n >= 4");
  auto a = ball_pair_anticode(n, 1);
  if (a.size() != static_cast<std::size_t>(2 * (n - 1)) || a.diameter != 3)
    throw InvariantViolation("diameter-3 anticode has size " + std::to_string(a.size()) +
                             " and diameter " + std::to_string(a.diameter));
  return a;
}

Anticode half_space_anticode(int n) {
  if (n < 2) throw PreconditionError("half-space anticode needs n >= 2");
  std::vector<Permutation> members;
  for (auto& p : all_permutations(n)) {
    const auto img = p.image();
    const auto one = std::find(img.begin(), img.end(), 1);
    const auto two = std::find(img.begin(), img.end(), 2);
    if (one < two) members.push_back(std::move(p));
  }
  return make_anticode(n, Metric::Kendall, std::move(members), "symbol 1 precedes symbol 2");
}

CodeBook reverse_pair_code(const Permutation& sigma) {
  if (sigma.size() < 2) throw PreconditionError("reverse pair code needs n >= 2");
  const int n = sigma.size();
  return make_codebook(n, Metric::Kendall, {sigma, reverse(sigma)}, choose2(n));
}

bool is_ball(const std::vector<Permutation>& members, int radius, Metric metric) {
  if (members.empty()) return false;
  const int n = members.front().size();
  if (static_cast<std::uint64_t>(members.size()) != ball_size(n, radius, metric)) return false;
  std::vector<Permutation> sorted = members;
  std::sort(sorted.begin(), sorted.end());
  for (const auto& c : sorted)
    if (ball(c, radius, metric) == sorted) return true;
  return false;
}

AnticodeSearchResult optimal_anticode_search(int n, int max_diameter, Metric metric,
                                             bool enumerate_optima, const SearchBudget& budget,
                                             bool allow_large) {
  if (n < 2) throw InvalidInput("anticode search needs n >= 2");
  if (max_diameter < 0) throw InvalidInput("diameter must be nonnegative");
  if (!allow_large && (n > kAnticodeSearchMaxN || (enumerate_optima && n > kAnticodeEnumerateMaxN)))
    throw CapacityError("anticode search is limited to n <= " +
                        std::to_string(kAnticodeSearchMaxN) + " (optimum enumeration to n <= " +
                        std::to_string(kAnticodeEnumerateMaxN) + ")");

  const auto e = Permutation::identity(n);
  std::vector<Permutation> candidates;
  for (auto& p : all_permutations(n))
    if (p != e && distance_from_identity(p, metric) <= max_diameter) candidates.push_back(std::move(p));
  BitGraph g(static_cast<int>(candidates.size()));
  for (std::size_t i = 0; i < candidates.size(); ++i)
    for (std::size_t j = i + 1; j < candidates.size(); ++j)
      if (distance(candidates[i], candidates[j], metric) <= max_diameter)
        g.add_edge(static_cast<int>(i), static_cast<int>(j));

  const auto clique = max_clique(g, enumerate_optima, budget);
  AnticodeSearchResult out;
  out.n = n;
  out.max_diameter = max_diameter;
  out.metric = metric;
  out.complete = clique.complete;
  out.stats = clique.stats;
  out.max_size = clique.best_size + 1;
  out.witnesses_truncated = clique.optima_truncated;

  auto to_anticode = [&](const std::vector<int>& vertices) {
    std::vector<Permutation> members{e};
    for (int v : vertices) members.push_back(candidates[v]);
    return make_anticode(n, metric, std::move(members), "search optimum");
  };
  if (clique.optima.empty()) {
    out.witnesses.push_back(make_anticode(n, metric, {e}, "search optimum"));
  } else {
    for (const auto& c : clique.optima) out.witnesses.push_back(to_anticode(c));
  }
  if (enumerate_optima && clique.complete && !clique.optima_truncated) {
    bool all = true;
    for (const auto& w : out.witnesses) all = all && is_ball(w.members, max_diameter / 2, metric);
    out.all_optima_are_balls = all;
  }
  return out;
}

BoundReport code_anticode_bound(int n, int d, bool search_code) {
  if (n < 2) throw InvalidInput("bound needs n >= 2");
  if (d < 1) throw InvalidInput("minimum distance must be at least 1");
  const int max_d = d - 1;
  const int full = choose2(n);
  const BigInt space = big_factorial(n);

  struct Candidate {
    BigInt size;
    int diameter;
    std::string description;
  };
  std::vector<Candidate> candidates;

  if (max_d >= full) candidates.push_back({space, full, "the whole space S_n"});
  if (max_d >= full - 1 && n <= kMaterializeMaxN) {
    const auto h = half_space_anticode(n);
    candidates.push_back({BigInt(static_cast<unsigned long>(h.size())), h.diameter,
                          "half-space anticode (" + h.description + ")"});
  } else if (max_d >= full - 1) {
    candidates.push_back({space / 2, full - 1, "half-space anticode (symbol 1 precedes symbol 2)"});
  }

  const int radius = max_d / 2;
  if (max_d % 2 == 0) {
    candidates.push_back({kendall_ball_size(n, radius), std::min(2 * radius, full),
                          "Kendall ball S(e," + std::to_string(radius) + ")"});
  } else if (n <= kMaterializeMaxN) {
    const auto a = ball_pair_anticode(n, radius);
    candidates.push_back({BigInt(static_cast<unsigned long>(a.size())), a.diameter, a.description});
  } else if (radius <= 1) {
    // |S(e,R) u S((1,2),R)| for R = 0, 1.
    const BigInt size = radius == 0 ? BigInt(2) : BigInt(2 * (n - 1));
    candidates.push_back({size, 2 * radius + 1,
                          "S(e," + std::to_string(radius) + ") u S(e," + std::to_string(radius) +
                              ")o(1,2)"});
  } else {
    candidates.push_back({kendall_ball_size(n, radius), 2 * radius,
                          "Kendall ball S(e," + std::to_string(radius) + ")"});
  }

  if (n <= 4) {
    const auto found = optimal_anticode_search(n, std::min(max_d, full), Metric::Kendall, false);
    if (found.complete)
      candidates.push_back({BigInt(found.max_size), found.witnesses.front().diameter,
                            "exhaustive search optimum"});
  }

  BoundReport report;
  report.n = n;
  report.d = d;
  report.space_size = space.get_str();
  const Candidate* best = nullptr;
  for (const auto& c : candidates) {
    if (c.diameter > max_d) continue;
    if (!best || c.size > best->size) best = &c;
  }
  if (!best) {
    report.trivial = true;
    report.anticode_size = 1;
    report.anticode_diameter = 0;
    report.anticode_used = "single point (no anticode of diameter d-1 available)";
    report.bound_value = space.get_str();
  } else {
    report.anticode_size = best->size.get_ui();
    report.anticode_diameter = best->diameter;
    report.anticode_used = best->description;
    BigInt q = space / best->size;
    report.bound_value = q.get_str();
  }

  if (search_code && n <= 4) {
    auto code = max_code_search(n, d, Metric::Kendall, CodeSearchMethod::ExactClique);
    if (code.optimal && BigInt(static_cast<unsigned long>(code.code.size())) == BigInt(report.bound_value))
      report.achieving_code = std::move(code.code);
  }
  return report;
}

DiameterPerfectResult verify_diameter_perfect(const CodeBook& code, const Anticode& anticode) {
  if (code.n != anticode.n) throw PreconditionError("code and anticode live in different S_n");
  if (code.metric != anticode.metric) throw PreconditionError("code and anticode use different metrics");
  if (code.words.empty() || anticode.members.empty())
    throw PreconditionError("code and anticode must be nonempty");
  if (code.size() >= 2) {
    const int md = min_distance(code);
    if (md != anticode.diameter + 1)
      throw PreconditionError("code minimum distance " + std::to_string(md) +
                              " is not anticode diameter + 1 = " +
                              std::to_string(anticode.diameter + 1));
  }
  const BigInt product = BigInt(static_cast<unsigned long>(code.size())) *
                         BigInt(static_cast<unsigned long>(anticode.size()));
  const BigInt space = big_factorial(code.n);
  return {product == space, product.get_str(), space.get_str()};
}

DistanceRegularityReport distance_regularity_probe(int n) {
  if (n < 4) throw PreconditionError("distance-regularity probe needs n >= 4");
  const auto e = Permutation::identity(n);
  std::vector<int> cyc(n), dbl(n);
  for (int i = 0; i < n; ++i) cyc[i] = dbl[i] = i + 1;
  cyc[0] = 3, cyc[1] = 1, cyc[2] = 2;
  dbl[0] = 2, dbl[1] = 1, dbl[2] = 4, dbl[3] = 3;

  auto probe = [&](Permutation target) {
    MidpointProbe p{e, std::move(target), 0, {}};
    p.distance = kendall_distance(p.from, p.to);
    for (const auto& a : ball(e, 1, Metric::Kendall))
      if (kendall_distance(e, a) == 1 && kendall_distance(a, p.to) == 1) p.midpoints.push_back(a);
    return p;
  };

  DistanceRegularityReport report{n, probe(Permutation(cyc)), probe(Permutation(dbl)), false};
  report.distance_regular_refuted =
      report.three_cycle.distance == report.double_swap.distance &&
      report.three_cycle.midpoints.size() != report.double_swap.midpoints.size();
  return report;
}

}  // namespace permkit
