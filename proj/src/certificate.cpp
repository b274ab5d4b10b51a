#include "permkit/certificate.hpp"

#include <cstdio>

#include "permkit/errors.hpp"
#include "permkit/nonexistence.hpp"
#include "permkit/rational.hpp"
#include "permkit/search.hpp"

namespace permkit {

using nlohmann::json;

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Nonexistence: return "nonexistence";
    case Verdict::ExistenceWitness: return "existence_witness";
    case Verdict::Inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

std::string_view to_string(Method m) {
  switch (m) {
    case Method::Divisibility: return "divisibility";
    case Method::UniqueRationalSolutionNonIntegral: return "unique_rational_solution_non_integral";
    case Method::ExactCover: return "exact_cover";
    case Method::PatternSystem: return "pattern_system";
  }
  return "divisibility";
}

Verdict parse_verdict(std::string_view text) {
  for (auto v : {Verdict::Nonexistence, Verdict::ExistenceWitness, Verdict::Inconclusive})
    if (to_string(v) == text) return v;
  throw InvalidInput("unknown verdict '" + std::string(text) + "'");
}

Method parse_method(std::string_view text) {
  for (auto m : {Method::Divisibility, Method::UniqueRationalSolutionNonIntegral, Method::ExactCover,
                 Method::PatternSystem})
    if (to_string(m) == text) return m;
  throw InvalidInput("unknown certificate method '" + std::string(text) + "'");
}

std::string fnv1a_hex(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

json to_json(const CodeBook& code) {
  json words = json::array();
  for (const auto& w : code.words) words.push_back(std::vector<int>(w.image().begin(), w.image().end()));
  json j{{"n", code.n}, {"metric", to_string(code.metric)}, {"size", code.size()}, {"words", words}};
  j["claimed_min_distance"] = code.claimed_min_distance ? json(*code.claimed_min_distance) : json(nullptr);
  j["verified"] = code.verified;
  return j;
}

CodeBook codebook_from_json(const json& j) {
  std::vector<Permutation> words;
  for (const auto& w : j.at("words")) words.emplace_back(w.get<std::vector<int>>());
  std::optional<int> claim;
  if (j.contains("claimed_min_distance") && !j["claimed_min_distance"].is_null())
    claim = j["claimed_min_distance"].get<int>();
  return make_codebook(j.at("n").get<int>(), parse_metric(j.at("metric").get<std::string>()),
                       std::move(words), claim);
}

json to_json(const Certificate& c) {
  json j{
      {"n", c.n},
      {"radius", c.radius},
      {"metric", to_string(c.metric)},
      {"method", to_string(c.method)},
      {"verdict", to_string(c.verdict)},
      {"space_size", c.space_size},
      {"ball_size", c.ball_size},
      {"matrix_hash", c.matrix_hash},
      {"solution", c.solution},
      {"kernel_dim", c.kernel_dim},
      {"detail", c.detail},
  };
  j["pattern_r"] = c.pattern_r ? json(c.pattern_r) : json(nullptr);
  j["classes"] = c.classes;
  j["witness"] = c.witness ? to_json(*c.witness) : json(nullptr);
  j["stats"] = {{"nodes", c.stats.nodes}, {"budget_exhausted", c.stats.budget_exhausted}};
  return j;
}

Certificate certificate_from_json(const json& j) {
  Certificate c;
  try {
    c.n = j.at("n").get<int>();
    c.radius = j.value("radius", 1);
    c.metric = parse_metric(j.value("metric", std::string("kendall")));
    c.method = parse_method(j.at("method").get<std::string>());
    c.verdict = parse_verdict(j.at("verdict").get<std::string>());
    c.space_size = j.value("space_size", std::string());
    c.ball_size = j.value("ball_size", std::uint64_t{0});
    c.matrix_hash = j.value("matrix_hash", std::string());
    if (j.contains("solution")) c.solution = j["solution"].get<std::vector<std::string>>();
    c.kernel_dim = j.value("kernel_dim", -1);
    c.detail = j.value("detail", std::string());
    if (j.contains("pattern_r") && !j["pattern_r"].is_null()) c.pattern_r = j["pattern_r"].get<int>();
    c.classes = j.value("classes", std::uint64_t{0});
    if (j.contains("witness") && !j["witness"].is_null()) c.witness = codebook_from_json(j["witness"]);
    if (j.contains("stats")) {
      c.stats.nodes = j["stats"].value("nodes", std::uint64_t{0});
      c.stats.budget_exhausted = j["stats"].value("budget_exhausted", false);
    }
  } catch (const json::exception& e) {
    throw InvalidInput(std::string("malformed certificate: ") + e.what());
  }
  return c;
}

namespace {

// Replays a unique-solution certificate without trusting the stored vector:
// the system is rebuilt, its hash compared, the vector checked to solve it,
// full rank re-established, and non-integrality re-observed.
RecheckResult replay_unique_solution(const Certificate& cert, const CoveringSystem& sys) {
  RecheckResult out;
  if (sys.hash() != cert.matrix_hash) {
    out.detail = "rebuilt system hash " + sys.hash() + " differs from " + cert.matrix_hash;
    return out;
  }
  if (cert.solution.size() != sys.class_count()) {
    out.detail = "solution length does not match the class count";
    return out;
  }
  std::vector<Rational> x;
  for (const auto& s : cert.solution) x.push_back(parse_fraction(s));
  if (sys.matrix.multiply(x) != sys.rhs) {
    out.detail = "stored solution does not satisfy the rebuilt system";
    return out;
  }
  const auto rank = exact_rank(sys.matrix);
  if (rank != sys.class_count()) {
    out.verdict = Verdict::Inconclusive;
    out.detail = "system is singular (rank " + std::to_string(rank) + "); solution not unique";
    out.reproduced = cert.verdict == Verdict::Inconclusive;
    return out;
  }
  bool feasible = true;
  for (const auto& q : x)
    if (!is_integral(q) || sgn(q) < 0 || q > sys.class_size) feasible = false;
  out.verdict = feasible ? Verdict::Inconclusive : Verdict::Nonexistence;
  out.reproduced = out.verdict == cert.verdict;
  out.detail = feasible ? "unique solution is integral and in bounds"
                        : "unique solution is not a vector of admissible codeword counts";
  return out;
}

}  // namespace

RecheckResult recheck(const Certificate& cert, const SearchBudget& budget) {
  RecheckResult out;
  switch (cert.method) {
    case Method::Divisibility: {
      const std::uint64_t space = factorial(cert.n);
      const std::uint64_t size = ball_size(cert.n, cert.radius, cert.metric);
      const bool divides = space % size == 0;
      out.verdict = divides ? Verdict::Inconclusive : Verdict::Nonexistence;
      out.reproduced = !divides && cert.verdict == Verdict::Nonexistence && size == cert.ball_size;
      out.detail = std::to_string(space) + (divides ? " is" : " is not") +
                   " a multiple of the ball size " + std::to_string(size);
      return out;
    }
    case Method::UniqueRationalSolutionNonIntegral:
      return replay_unique_solution(cert, build_basic_system(cert.n));
    case Method::PatternSystem: {
      PatternOptions opts;
      opts.max_classes = std::max<std::uint64_t>(opts.max_classes, cert.classes);
      if (cert.kernel_dim == 0 && !cert.solution.empty())
        return replay_unique_solution(cert, build_pattern_system(cert.n, cert.pattern_r, opts));
      const auto again = pattern_nonexistence_check(cert.n, cert.pattern_r, opts);
      out.verdict = again.verdict;
      out.reproduced = again.verdict == cert.verdict && again.matrix_hash == cert.matrix_hash;
      out.detail = "re-solved: " + again.detail;
      return out;
    }
    case Method::ExactCover: {
      if (cert.verdict == Verdict::ExistenceWitness) {
        if (!cert.witness) {
          out.detail = "existence certificate has no witness";
          return out;
        }
        const auto report = verify_perfect(*cert.witness, cert.radius);
        out.verdict = report.perfect ? Verdict::ExistenceWitness : Verdict::Inconclusive;
        out.reproduced = report.perfect && cert.witness->n == cert.n &&
                         cert.witness->metric == cert.metric;
        out.detail = report.perfect ? "witness verified perfect"
                                    : std::to_string(report.total_defects) + " coverage defects";
        return out;
      }
      const auto again = exact_cover_perfect_search(cert.n, cert.radius, cert.metric, budget);
      out.verdict = again.verdict;
      out.reproduced = again.verdict == cert.verdict;
      out.detail = "re-searched: " + again.detail;
      return out;
    }
  }
  return out;
}

}  // namespace permkit
