#include "permkit/search.hpp"

#include "clock.hpp"
#include "permkit/clique.hpp"
#include "permkit/errors.hpp"
#include "permkit/exact_cover.hpp"

namespace permkit {

Certificate exact_cover_perfect_search(int n, int radius, Metric metric,
                                       const SearchBudget& budget) {
  if (n < 2) throw InvalidInput("perfect-code search needs n >= 2");
  if (radius < 0) throw InvalidInput("radius must be nonnegative");
  if (n > table_capacity())
    throw CapacityError("n = " + std::to_string(n) + " exceeds the search budget " +
                        std::to_string(table_capacity()));

  Certificate cert;
  cert.n = n;
  cert.radius = radius;
  cert.metric = metric;
  const std::uint64_t space = factorial(n);
  cert.space_size = std::to_string(space);
  const auto offsets = ball(Permutation::identity(n), radius, metric);
  cert.ball_size = offsets.size();

  if (space % cert.ball_size != 0) {
    cert.method = Method::Divisibility;
    cert.verdict = Verdict::Nonexistence;
    cert.detail = std::to_string(space) + " is not a multiple of the ball size " +
                  std::to_string(cert.ball_size);
    return cert;
  }

  cert.method = Method::ExactCover;
  ExactCover problem(static_cast<int>(space));
  std::vector<int> members(offsets.size());
  std::vector<int> x(n), buf(n);
  for (std::uint64_t r = 0; r < space; ++r) {
    unrank_into(n, r, x);
    for (std::size_t k = 0; k < offsets.size(); ++k) {
      const auto y = offsets[k].image();
      for (int i = 0; i < n; ++i) buf[i] = x[y[i] - 1];
      members[k] = static_cast<int>(rank_of(buf));
    }
    problem.add_option(members);
  }

  const int identity_option = 0;
  auto result = problem.solve(std::span(&identity_option, 1), budget);
  cert.stats = result.stats;

  switch (result.status) {
    case ExactCover::Status::Found: {
      std::vector<Permutation> words;
      for (int option : result.chosen) words.push_back(unrank({n, static_cast<std::uint64_t>(option)}));
      auto code = make_codebook(n, metric, std::move(words), 2 * radius + 1);
      const auto report = verify_perfect(code, radius, 1);
      if (!report.perfect)
        throw InvariantViolation("exact cover returned a non-perfect code");
      code.verified = true;
      cert.verdict = Verdict::ExistenceWitness;
      cert.detail = "perfect code with " + std::to_string(code.size()) + " codewords";
      cert.witness = std::move(code);
      break;
    }
    case ExactCover::Status::Exhausted:
      cert.verdict = Verdict::Nonexistence;
      cert.detail = "exact-cover search exhausted with the identity fixed as a codeword";
      break;
    case ExactCover::Status::BudgetExceeded:
      cert.verdict = Verdict::Inconclusive;
      cert.detail = "search budget exhausted after " + std::to_string(result.stats.nodes) +
                    " nodes";
      break;
  }
  return cert;
}

std::string_view to_string(CodeSearchMethod m) {
  return m == CodeSearchMethod::ExactClique ? "exact_clique" : "greedy_lex";
}

CodeSearchMethod parse_code_search_method(std::string_view text) {
  if (text == "exact_clique" || text == "exact") return CodeSearchMethod::ExactClique;
  if (text == "greedy_lex" || text == "greedy") return CodeSearchMethod::GreedyLex;
  throw InvalidInput("unknown search method '" + std::string(text) +
                     "' (expected exact_clique|greedy_lex)");
}

CodeSearchResult max_code_search(int n, int d, Metric metric, CodeSearchMethod method,
                                 const SearchBudget& budget, bool allow_large) {
  if (n < 2) throw InvalidInput("code search needs n >= 2");
  if (d < 1) throw InvalidInput("minimum distance must be at least 1");
  if (n > table_capacity())
    throw CapacityError("n = " + std::to_string(n) + " exceeds the enumeration budget");

  CodeSearchResult out;
  const double start = detail::now_seconds();
  const auto everything = all_permutations(n);
  std::vector<Permutation> words;

  if (method == CodeSearchMethod::GreedyLex) {
    for (const auto& p : everything) {
      bool ok = true;
      for (const auto& w : words)
        if (distance(w, p, metric) < d) {
          ok = false;
          break;
        }
      if (ok) words.push_back(p);
    }
    out.stats.nodes = everything.size();
  } else {
    if (n > kExactCodeSearchMaxN && !allow_large)
      throw CapacityError("exact code search is limited to n <= " +
                          std::to_string(kExactCodeSearchMaxN));
    // Right translation is an isometry, so some maximum code contains e.
    const auto e = Permutation::identity(n);
    std::vector<Permutation> candidates;
    for (const auto& p : everything)
      if (p != e && distance_from_identity(p, metric) >= d) candidates.push_back(p);
    BitGraph g(static_cast<int>(candidates.size()));
    for (std::size_t i = 0; i < candidates.size(); ++i)
      for (std::size_t j = i + 1; j < candidates.size(); ++j)
        if (distance(candidates[i], candidates[j], metric) >= d)
          g.add_edge(static_cast<int>(i), static_cast<int>(j));
    const auto clique = max_clique(g, false, budget);
    words.push_back(e);
    if (!clique.optima.empty())
      for (int v : clique.optima.front()) words.push_back(candidates[v]);
    out.complete = clique.complete;
    out.optimal = clique.complete;
    out.stats = clique.stats;
  }
  out.stats.elapsed_seconds = detail::now_seconds() - start;

  out.code = make_codebook(n, metric, std::move(words), d);
  if (out.code.size() >= 2 && min_distance(out.code) < d)
    throw InvariantViolation("code search produced a code below the requested distance");
  out.code.verified = true;
  return out;
}

}  // namespace permkit
