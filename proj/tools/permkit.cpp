// permkit: command-line front end for the permutation-code toolkit.
#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "permkit/anticode.hpp"
#include "permkit/certificate.hpp"
#include "permkit/code.hpp"
#include "permkit/cyclic_classes.hpp"
#include "permkit/errors.hpp"
#include "permkit/nonexistence.hpp"
#include "permkit/search.hpp"

using nlohmann::json;
using namespace permkit;

namespace {

constexpr const char* kVersion = "0.1.0";

enum Exit : int {
  kOk = 0,
  kFailure = 1,
  kUsage = 2,
  kCapacity = 3,
  kPrecondition = 4,
  kInvariant = 5,
  kIo = 6,
};

struct IoError : Error {
  using Error::Error;
};

struct Globals {
  bool json_out = false;
  bool zero_based = false;
  unsigned threads = 0;
  double time_budget = 0.0;
  std::uint64_t max_nodes = 0;
  std::uint64_t seed = 1;
  int table_capacity = 0;
};

Globals g;
std::string command_name;
json params = json::object();
double started = 0.0;

double now() {
  using namespace std::chrono;
  return duration<double>(steady_clock::now().time_since_epoch()).count();
}

SearchBudget budget() { return {g.time_budget, g.max_nodes}; }

std::string show(const Permutation& p) {
  if (!g.zero_based) return p.to_string();
  std::string out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(p.image()[i] - 1);
  }
  return out;
}

json perm_json(const Permutation& p) {
  json a = json::array();
  for (int v : p.image()) a.push_back(g.zero_based ? v - 1 : v);
  return a;
}

json perms_json(const std::vector<Permutation>& ps) {
  json a = json::array();
  for (const auto& p : ps) a.push_back(perm_json(p));
  return a;
}

Permutation parse_perm(const std::string& text) { return Permutation::parse(text, g.zero_based); }

// Prints either the JSON envelope or the text rendering. The timing block
// is the only part of the JSON report that varies between identical runs.
void emit(const json& result, const std::function<void(std::ostream&)>& text) {
  if (g.json_out) {
    json report{{"tool", "permkit"},
                {"version", kVersion},
                {"command", command_name},
                {"params", params},
                {"result", result},
                {"timing", {{"elapsed_seconds", now() - started}}}};
    std::cout << report.dump(2) << '\n';
  } else {
    text(std::cout);
  }
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write '" + path + "'");
  out << content;
  if (!out) throw IoError("write to '" + path + "' failed");
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw InvalidInput("'" + path + "' is not valid JSON: " + e.what());
  }
}

std::string verdict_line(const Certificate& c) {
  std::ostringstream out;
  out << "n=" << c.n << " radius=" << c.radius << " metric=" << to_string(c.metric) << '\n'
      << "verdict: " << to_string(c.verdict) << '\n'
      << "method: " << to_string(c.method) << '\n';
  if (c.pattern_r) out << "pattern_r: " << c.pattern_r << '\n';
  if (c.classes) out << "classes: " << c.classes << '\n';
  if (!c.matrix_hash.empty()) out << "matrix_hash: " << c.matrix_hash << '\n';
  if (c.kernel_dim >= 0) out << "kernel_dim: " << c.kernel_dim << '\n';
  if (!c.solution.empty()) {
    bool constant = std::all_of(c.solution.begin(), c.solution.end(),
                                [&](const std::string& s) { return s == c.solution.front(); });
    if (constant)
      out << "solution: " << c.solution.front() << " in every coordinate\n";
    else
      out << "solution: " << c.solution.size() << " coordinates\n";
  }
  if (c.witness) out << "witness: " << c.witness->size() << " codewords\n";
  out << "detail: " << c.detail << '\n';
  if (c.stats.nodes) out << "nodes: " << c.stats.nodes << '\n';
  return out.str();
}

void print_code(std::ostream& out, const CodeBook& code) {
  out << "n=" << code.n << " metric=" << to_string(code.metric) << '\n';
  for (const auto& w : code.words) out << show(w) << '\n';
}

json code_json(const CodeBook& code) {
  json j = to_json(code);
  j["words"] = perms_json(code.words);
  j["zero_based"] = g.zero_based;
  return j;
}

// ---- commands ----

void cmd_dist(Metric metric, const std::string& a, const std::string& b) {
  const auto p = parse_perm(a), q = parse_perm(b);
  const int d = distance(p, q, metric);
  params = {{"metric", to_string(metric)}, {"a", perm_json(p)}, {"b", perm_json(q)}};
  emit({{"distance", d}}, [&](std::ostream& o) { o << d << '\n'; });
}

void cmd_ball(Metric metric, int radius, const std::string& center, bool count_only) {
  const auto c = parse_perm(center);
  params = {{"metric", to_string(metric)}, {"radius", radius}, {"center", perm_json(c)}};
  const auto members = ball(c, radius, metric);
  json r{{"size", members.size()}};
  if (!count_only) r["members"] = perms_json(members);
  emit(r, [&](std::ostream& o) {
    o << "size " << members.size() << '\n';
    if (!count_only)
      for (const auto& m : members) o << show(m) << '\n';
  });
}

void cmd_mahonian(int n) {
  if (n < 1) throw InvalidInput("n must be at least 1");
  params = {{"n", n}};
  const auto row = mahonian_row(n);
  json values = json::array();
  BigInt total = 0;
  for (const auto& v : row) {
    values.push_back(v.get_str());
    total += v;
  }
  emit({{"row", values}, {"total", total.get_str()}}, [&](std::ostream& o) {
    for (std::size_t k = 0; k < row.size(); ++k) o << (k ? " " : "") << row[k].get_str();
    o << '\n';
  });
}

void cmd_verify_code(const std::string& path, std::optional<int> min_dist,
                     std::optional<int> perfect_radius, std::optional<int> regularity_r) {
  if (!std::ifstream(path)) throw IoError("cannot read code file '" + path + "'");
  auto code = read_code_file(path, g.zero_based);
  params = {{"file", path}};
  if (min_dist) params["min_dist"] = *min_dist;
  if (perfect_radius) params["perfect"] = *perfect_radius;
  if (regularity_r) params["regularity"] = *regularity_r;

  json r{{"n", code.n}, {"metric", to_string(code.metric)}, {"size", code.size()}};
  std::ostringstream text;
  text << "n=" << code.n << " metric=" << to_string(code.metric) << " size=" << code.size() << '\n';

  std::optional<int> measured;
  if (code.size() >= 2) {
    measured = min_distance(code, g.threads);
    r["min_distance"] = *measured;
    text << "min_distance: " << *measured << '\n';
  } else {
    r["min_distance"] = nullptr;
    text << "min_distance: undefined (fewer than two codewords)\n";
  }
  if (min_dist) {
    const bool ok = !measured || *measured >= *min_dist;
    r["meets_min_dist"] = ok;
    text << "meets min distance " << *min_dist << ": " << (ok ? "yes" : "no") << '\n';
  }
  if (perfect_radius) {
    const auto rep = verify_perfect(code, *perfect_radius, g.threads);
    json defects = json::array();
    for (const auto& d : rep.defects)
      defects.push_back({{"word", perm_json(d.word)}, {"times_covered", d.times_covered}});
    r["perfect"] = {{"radius", *perfect_radius},     {"perfect", rep.perfect},
                    {"ball_size", rep.ball_size},    {"space_size", rep.space_size},
                    {"total_defects", rep.total_defects}, {"uncovered", rep.uncovered},
                    {"overcovered", rep.overcovered}, {"defects", defects}};
    text << (rep.perfect ? "perfect" : "not perfect") << " (radius " << *perfect_radius
         << ", ball size " << rep.ball_size << ", " << rep.code_size << " * " << rep.ball_size
         << " vs " << rep.space_size << ", defects " << rep.total_defects << ")\n";
  }
  if (regularity_r) {
    const auto rep = verify_regularity(code, *regularity_r);
    r["regularity"] = {{"r", rep.r},
                       {"uniform", rep.uniform},
                       {"expected", to_fraction_string(rep.expected)},
                       {"perfect_code_value", to_fraction_string(rep.perfect_code_value)},
                       {"assignments", rep.assignments},
                       {"min_count", rep.min_count},
                       {"max_count", rep.max_count}};
    text << "regularity r=" << rep.r << ": " << (rep.uniform ? "uniform" : "not uniform")
         << ", counts " << rep.min_count << ".." << rep.max_count << ", expected "
         << to_fraction_string(rep.expected) << '\n';
  }
  emit(r, [&](std::ostream& o) { o << text.str(); });
}

void cmd_construct(const std::string& which, std::optional<int> n, const std::string& out_path) {
  CodeBook code;
  if (which == "cyclic-prime") {
    if (!n) throw InvalidInput("construct cyclic-prime needs <n>");
    code = cyclic_prime_code(*n);
    params = {{"construction", which}, {"n", *n}};
  } else if (which == "paper-s5") {
    code = paper_s5_cyclic_code();
    params = {{"construction", which}};
  } else {
    throw InvalidInput("unknown construction '" + which + "' (expected cyclic-prime|paper-s5)");
  }
  const int md = min_distance(code, g.threads);
  if (code.claimed_min_distance && md < *code.claimed_min_distance)
    throw InvariantViolation("construction below its claimed minimum distance");
  if (!out_path.empty()) {
    std::ostringstream file;
    print_code(file, code);
    write_file(out_path, file.str());
  }
  json r = code_json(code);
  r["measured_min_distance"] = md;
  emit(r, [&](std::ostream& o) {
    if (out_path.empty())
      print_code(o, code);
    else
      o << "wrote " << code.size() << " codewords to " << out_path << '\n';
    o << "# measured min distance " << md << '\n';
  });
}

void emit_certificate(const Certificate& cert, const std::string& out_path) {
  const json j = to_json(cert);
  if (!out_path.empty()) write_file(out_path, j.dump(2) + "\n");
  emit(j, [&](std::ostream& o) {
    o << verdict_line(cert);
    if (!out_path.empty()) o << "certificate written to " << out_path << '\n';
  });
}

void cmd_search_perfect(int n, int radius, Metric metric, const std::string& out_path) {
  params = {{"n", n}, {"radius", radius}, {"metric", to_string(metric)},
            {"time_budget", g.time_budget}, {"max_nodes", g.max_nodes}};
  emit_certificate(exact_cover_perfect_search(n, radius, metric, budget()), out_path);
}

void cmd_search_maxcode(int n, int d, Metric metric, const std::string& method_text, bool allow_large,
                        const std::string& out_path) {
  const auto method = parse_code_search_method(method_text);
  params = {{"n", n}, {"d", d}, {"metric", to_string(metric)}, {"method", to_string(method)},
            {"time_budget", g.time_budget}, {"max_nodes", g.max_nodes}};
  const auto res = max_code_search(n, d, metric, method, budget(), allow_large);
  if (!out_path.empty()) {
    std::ostringstream file;
    print_code(file, res.code);
    write_file(out_path, file.str());
  }
  json r{{"size", res.code.size()},
         {"optimal", res.optimal},
         {"complete", res.complete},
         {"nodes", res.stats.nodes},
         {"code", code_json(res.code)}};
  emit(r, [&](std::ostream& o) {
    o << "size " << res.code.size() << " ("
      << (res.optimal ? "maximum" : res.complete ? "maximal, not proven maximum" : "budget exhausted, lower bound")
      << ")\n";
    if (out_path.empty())
      print_code(o, res.code);
    else
      o << "code written to " << out_path << '\n';
  });
}

void cmd_nonexist(int n, std::optional<int> pattern_r, bool escalate, std::uint64_t max_classes,
                  const std::string& out_path) {
  params = {{"n", n}, {"pattern_r", pattern_r ? json(*pattern_r) : json(nullptr)},
            {"escalate_exact_cover", escalate}, {"seed", g.seed},
            {"time_budget", g.time_budget}, {"max_nodes", g.max_nodes}};
  PatternOptions opts;
  opts.seed = g.seed;
  opts.threads = g.threads;
  if (max_classes) opts.max_classes = max_classes;

  Certificate cert;
  if (pattern_r)
    cert = pattern_nonexistence_check(n, *pattern_r, opts);
  else if (n >= 4)
    cert = basic_nonexistence_check(n);
  else
    cert = exact_cover_perfect_search(n, 1, Metric::Kendall, budget());

  if (cert.verdict == Verdict::Inconclusive && escalate) {
    auto search = exact_cover_perfect_search(n, 1, Metric::Kendall, budget());
    search.detail = "escalated after: " + cert.detail + "; " + search.detail;
    cert = std::move(search);
  }
  emit_certificate(cert, out_path);
}

void cmd_anticode_construct(int n, bool diameter3) {
  if (!diameter3) throw InvalidInput("anticode construct needs --diameter3");
  params = {{"n", n}, {"construction", "diameter3"}};
  const auto a = construct_diameter3_anticode(n);
  emit({{"size", a.size()}, {"diameter", a.diameter}, {"description", a.description},
        {"members", perms_json(a.members)}},
       [&](std::ostream& o) {
         o << "size " << a.size() << " diameter " << a.diameter << '\n';
         for (const auto& m : a.members) o << show(m) << '\n';
       });
}

void cmd_anticode_search(int n, int diam, Metric metric, bool enumerate, bool allow_large) {
  params = {{"n", n}, {"D", diam}, {"metric", to_string(metric)}, {"enumerate_optima", enumerate},
            {"time_budget", g.time_budget}, {"max_nodes", g.max_nodes}};
  const auto res = optimal_anticode_search(n, diam, metric, enumerate, budget(), allow_large);
  json witnesses = json::array();
  for (const auto& w : res.witnesses)
    witnesses.push_back({{"diameter", w.diameter}, {"members", perms_json(w.members)}});
  json balls = res.all_optima_are_balls ? json(*res.all_optima_are_balls) : json("not checked");
  emit({{"max_size", res.max_size},
        {"complete", res.complete},
        {"lower_bound_only", !res.complete},
        {"witness_count", res.witnesses.size()},
        {"witnesses_truncated", res.witnesses_truncated},
        {"all_optima_are_balls", balls},
        {"nodes", res.stats.nodes},
        {"witnesses", witnesses}},
       [&](std::ostream& o) {
         o << "max size " << res.max_size << (res.complete ? "" : " (lower bound, budget exhausted)")
           << '\n';
         o << "optima containing the identity: " << res.witnesses.size()
           << (res.witnesses_truncated ? " (truncated)" : "") << '\n';
         o << "all optima are balls: " << (res.all_optima_are_balls ? (*res.all_optima_are_balls ? "yes" : "no") : "not checked")
           << '\n';
         if (!res.witnesses.empty()) {
           o << "first witness:\n";
           for (const auto& m : res.witnesses.front().members) o << "  " << show(m) << '\n';
         }
       });
}

void cmd_bound(int n, int d, bool search_code) {
  params = {{"n", n}, {"d", d}, {"search_code", search_code}};
  const auto b = code_anticode_bound(n, d, search_code);
  json r{{"space_size", b.space_size},
         {"anticode_size", b.anticode_size},
         {"anticode_diameter", b.anticode_diameter},
         {"anticode_used", b.anticode_used},
         {"bound", b.bound_value},
         {"trivial", b.trivial},
         {"achieving_code", b.achieving_code ? code_json(*b.achieving_code) : json(nullptr)}};
  emit(r, [&](std::ostream& o) {
    o << "|C| <= " << b.bound_value << " (" << b.space_size << " / " << b.anticode_size << ", "
      << b.anticode_used << ", diameter " << b.anticode_diameter << ")\n";
    if (b.achieving_code) o << "achieved by a code of size " << b.achieving_code->size() << '\n';
  });
}

json probe_json(const MidpointProbe& p) {
  return {{"from", perm_json(p.from)}, {"to", perm_json(p.to)}, {"distance", p.distance},
          {"midpoint_count", p.midpoints.size()}, {"midpoints", perms_json(p.midpoints)}};
}

void cmd_probe(const std::string& what, int n) {
  if (what != "distance-regularity")
    throw InvalidInput("unknown probe '" + what + "' (expected distance-regularity)");
  params = {{"probe", what}, {"n", n}};
  const auto rep = distance_regularity_probe(n);
  emit({{"three_cycle", probe_json(rep.three_cycle)},
        {"double_swap", probe_json(rep.double_swap)},
        {"distance_regular_refuted", rep.distance_regular_refuted}},
       [&](std::ostream& o) {
         for (const auto* p : {&rep.three_cycle, &rep.double_swap})
           o << show(p->from) << " -> " << show(p->to) << ": distance " << p->distance << ", "
             << p->midpoints.size() << " midpoint(s)\n";
         o << (rep.distance_regular_refuted ? "not distance-regular" : "no contradiction found") << '\n';
       });
}

void cmd_classes(int n, bool graph_stats) {
  if (n < 2) throw InvalidInput("classes need n >= 2");
  params = {{"n", n}, {"graph_stats", graph_stats}};
  const auto classes = all_classes(n);
  json reps = json::array();
  for (const auto& c : classes) reps.push_back(perm_json(c.representative));
  json r{{"count", classes.size()}, {"class_size", n}, {"representatives", reps}};
  ClassGraph::Stats s;
  if (graph_stats) {
    s = class_graph(n).stats();
    r["graph"] = {{"classes", s.classes}, {"edges", s.edges}, {"min_degree", s.min_degree},
                  {"max_degree", s.max_degree}, {"diameter", s.diameter}};
  }
  emit(r, [&](std::ostream& o) {
    o << classes.size() << " classes of size " << n << '\n';
    if (graph_stats)
      o << "graph: " << s.edges << " edges, degree " << s.min_degree << ".." << s.max_degree
        << ", diameter " << s.diameter << '\n';
    for (const auto& c : classes) o << show(c.representative) << '\n';
  });
}

void cmd_recheck(const std::string& path) {
  params = {{"file", path}};
  auto j = read_json_file(path);
  // Accept a bare certificate or a full report wrapping one.
  if (j.contains("result") && j["result"].is_object()) j = j["result"];
  const auto cert = certificate_from_json(j);
  const auto r = recheck(cert, budget());
  emit({{"reproduced", r.reproduced},
        {"claimed_verdict", to_string(cert.verdict)},
        {"verdict", to_string(r.verdict)},
        {"detail", r.detail}},
       [&](std::ostream& o) {
         o << (r.reproduced ? "reproduced" : "NOT reproduced") << ": " << to_string(r.verdict)
           << " (claimed " << to_string(cert.verdict) << ")\n"
           << r.detail << '\n';
       });
}

Metric metric_of(const std::string& text) { return parse_metric(text); }

}  // namespace

int main(int argc, char** argv) {
  started = now();
  CLI::App app{"Exact toolkit for permutation codes under the Kendall and cyclic Kendall metrics"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  app.add_flag("--json", g.json_out, "JSON report output");
  app.add_flag("--zero-based", g.zero_based, "read and print permutations with symbols 0..n-1");
  app.add_option("--threads", g.threads, "worker thread cap (0 = hardware)");
  app.add_option("--time-budget", g.time_budget, "seconds allowed for searches (0 = unlimited)");
  app.add_option("--max-nodes", g.max_nodes, "search node limit (0 = unlimited)");
  app.add_option("--seed", g.seed, "seed for sampled invariance checks");
  app.add_option("--table-capacity", g.table_capacity, "largest n for distance tables (default 10)")
      ->check(CLI::Range(2, 12));

  std::function<void()> run;
  std::string metric_text = "kendall";
  auto add_metric = [&](CLI::App* sub) {
    sub->add_option("--metric", metric_text, "kendall|cyclic")->check(CLI::IsMember({"kendall", "cyclic"}));
  };

  std::string a, b, path, out_path, which, method_text = "exact_clique";
  int n = 0, radius = 0, d = 0;
  std::optional<int> opt_n, min_dist, perfect_radius, regularity_r, pattern_r;
  bool count_only = false, escalate = false, enumerate = false, diameter3 = false,
       allow_large = false, graph_stats = false, search_code = false;
  std::uint64_t max_classes = 0;

  auto* dist = app.add_subcommand("dist", "distance between two permutations");
  add_metric(dist);
  dist->add_option("a", a)->required();
  dist->add_option("b", b)->required();
  dist->callback([&] { run = [&] { cmd_dist(metric_of(metric_text), a, b); }; });

  auto* ballc = app.add_subcommand("ball", "enumerate a ball");
  add_metric(ballc);
  ballc->add_option("--radius", radius)->required();
  ballc->add_option("center", a)->required();
  ballc->add_flag("--count-only", count_only);
  ballc->callback([&] { run = [&] { cmd_ball(metric_of(metric_text), radius, a, count_only); }; });

  auto* mah = app.add_subcommand("mahonian", "inversion-count row of S_n");
  mah->add_option("n", n)->required();
  mah->callback([&] { run = [&] { cmd_mahonian(n); }; });

  auto* verify = app.add_subcommand("verify-code", "check a code file");
  verify->add_option("file", path)->required();
  verify->add_option("--min-dist", min_dist);
  verify->add_option("--perfect", perfect_radius, "check perfection at this radius");
  verify->add_option("--regularity", regularity_r, "count value/position patterns of this length");
  verify->callback([&] { run = [&] { cmd_verify_code(path, min_dist, perfect_radius, regularity_r); }; });

  auto* construct = app.add_subcommand("construct", "build a known code");
  construct->add_option("construction", which, "cyclic-prime|paper-s5")->required();
  construct->add_option("n", opt_n);
  construct->add_option("--out", out_path, "write the code file here");
  construct->callback([&] { run = [&] { cmd_construct(which, opt_n, out_path); }; });

  auto* search = app.add_subcommand("search", "perfect-code or maximum-code search");
  search->require_subcommand(1);
  auto* perfect = search->add_subcommand("perfect", "exact-cover search for a perfect code");
  add_metric(perfect);
  perfect->add_option("n", n)->required();
  perfect->add_option("R", radius)->required();
  perfect->add_option("--out", out_path, "write the certificate here");
  perfect->callback([&] { run = [&] { cmd_search_perfect(n, radius, metric_of(metric_text), out_path); }; });
  auto* maxcode = search->add_subcommand("maxcode", "largest code with minimum distance d");
  add_metric(maxcode);
  maxcode->add_option("n", n)->required();
  maxcode->add_option("d", d)->required();
  maxcode->add_option("--method", method_text, "exact_clique|greedy_lex");
  maxcode->add_flag("--allow-large", allow_large, "lift the exact-search size limit");
  maxcode->add_option("--out", out_path, "write the code file here");
  maxcode->callback([&] {
    run = [&] { cmd_search_maxcode(n, d, metric_of(metric_text), method_text, allow_large, out_path); };
  });

  auto* nonexist = app.add_subcommand("nonexist", "perfect single-error-correcting Kendall code certificate");
  nonexist->add_option("n", n)->required();
  nonexist->add_option("--pattern-r", pattern_r, "use the positions of values 1..r as classes");
  nonexist->add_flag("--escalate-exact-cover", escalate, "run exact cover when inconclusive");
  nonexist->add_option("--max-classes", max_classes, "pattern-system class limit");
  nonexist->add_option("--out", out_path, "write the certificate here");
  nonexist->callback([&] { run = [&] { cmd_nonexist(n, pattern_r, escalate, max_classes, out_path); }; });

  auto* anticode = app.add_subcommand("anticode", "anticode constructions and searches");
  anticode->require_subcommand(1);
  auto* ac_construct = anticode->add_subcommand("construct", "explicit anticode");
  ac_construct->add_flag("--diameter3", diameter3, "size 2(n-1), diameter 3");
  ac_construct->add_option("n", n)->required();
  ac_construct->callback([&] { run = [&] { cmd_anticode_construct(n, diameter3); }; });
  auto* ac_search = anticode->add_subcommand("search", "maximum anticode of diameter D");
  add_metric(ac_search);
  ac_search->add_option("n", n)->required();
  ac_search->add_option("D", d)->required();
  ac_search->add_flag("--enumerate-optima", enumerate);
  ac_search->add_flag("--allow-large", allow_large);
  ac_search->callback([&] {
    run = [&] { cmd_anticode_search(n, d, metric_of(metric_text), enumerate, allow_large); };
  });

  auto* bound = app.add_subcommand("bound", "code-anticode bound for Kendall codes");
  bound->add_option("n", n)->required();
  bound->add_option("d", d)->required();
  bound->add_flag("--search-code", search_code, "attach an exact maximum code when n <= 4");
  bound->callback([&] { run = [&] { cmd_bound(n, d, search_code); }; });

  auto* probe = app.add_subcommand("probe", "structural probes");
  probe->add_option("what", which, "distance-regularity")->required();
  probe->add_option("n", n)->required();
  probe->callback([&] { run = [&] { cmd_probe(which, n); }; });

  auto* classes = app.add_subcommand("classes", "rotation classes of S_n");
  classes->add_option("n", n)->required();
  classes->add_flag("--graph-stats", graph_stats);
  classes->callback([&] { run = [&] { cmd_classes(n, graph_stats); }; });

  auto* rc = app.add_subcommand("recheck", "replay a certificate");
  rc->add_option("file", path)->required();
  rc->callback([&] { run = [&] { cmd_recheck(path); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const auto extra = app.remaining();
    if (!extra.empty() && app.get_subcommands().empty()) {
      std::cerr << "permkit: unknown subcommand '" << extra.front() << "' (see --help)\n";
      return kUsage;
    }
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (g.time_budget < 0) throw InvalidInput("budget misconfiguration: --time-budget must be >= 0");
    if (g.table_capacity) set_table_capacity(g.table_capacity);
    std::vector<std::string> path_parts;
    for (const auto* sub = app.get_subcommands().front(); sub;) {
      path_parts.push_back(sub->get_name());
      const auto subs = sub->get_subcommands();
      sub = subs.empty() ? nullptr : subs.front();
    }
    for (const auto& part : path_parts) command_name += (command_name.empty() ? "" : " ") + part;
    run();
    return kOk;
  } catch (const CapacityError& e) {
    std::cerr << "permkit: resource limit: " << e.what() << '\n';
    return kCapacity;
  } catch (const PreconditionError& e) {
    std::cerr << "permkit: precondition failed: " << e.what() << '\n';
    return kPrecondition;
  } catch (const InvariantViolation& e) {
    std::cerr << "permkit: internal check failed: " << e.what() << '\n';
    return kInvariant;
  } catch (const IoError& e) {
    std::cerr << "permkit: i/o error: " << e.what() << '\n';
    return kIo;
  } catch (const InvalidInput& e) {
    std::cerr << "permkit: invalid input: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "permkit: error: " << e.what() << '\n';
    return kFailure;
  }
}
