#include "permkit/code.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

#include "permkit/errors.hpp"
#include "permkit/parallel.hpp"

namespace permkit {

bool CodeBook::contains(const Permutation& p) const {
  return std::binary_search(words.begin(), words.end(), p);
}

CodeBook make_codebook(int n, Metric metric, std::vector<Permutation> words,
                       std::optional<int> claimed_min_distance) {
  if (n < 1) throw InvalidInput("code length must be positive");
  for (const auto& w : words)
    if (w.size() != n)
      throw InvalidInput("word '" + w.to_string() + "' has length " + std::to_string(w.size()) +
                         ", expected " + std::to_string(n));
  std::sort(words.begin(), words.end());
  if (auto dup = std::adjacent_find(words.begin(), words.end()); dup != words.end())
    throw InvalidInput("duplicate codeword '" + dup->to_string() + "'");
  return CodeBook{n, metric, std::move(words), claimed_min_distance, false};
}

int min_distance(const CodeBook& code, unsigned threads) {
  if (code.size() < 2) throw PreconditionError("minimum distance needs at least two codewords");
  if (code.metric == Metric::CyclicKendall) cached_table(code.n, code.metric);
  std::atomic<int> best{std::numeric_limits<int>::max()};
  parallel_chunks(code.size(), threads, [&](unsigned, std::uint64_t begin, std::uint64_t end) {
    int local = std::numeric_limits<int>::max();
    for (auto i = begin; i < end; ++i)
      for (auto j = i + 1; j < code.size(); ++j)
        local = std::min(local, distance(code.words[i], code.words[j], code.metric));
    int cur = best.load();
    while (local < cur && !best.compare_exchange_weak(cur, local)) {
    }
  });
  return best.load();
}

bool confirm_claim(CodeBook& code, unsigned threads) {
  if (!code.claimed_min_distance) {
    code.verified = false;
    return false;
  }
  const bool ok = code.size() < 2 || min_distance(code, threads) >= *code.claimed_min_distance;
  code.verified = ok;
  return ok;
}

PerfectionReport verify_perfect(const CodeBook& code, int radius, unsigned threads) {
  if (code.words.empty()) throw PreconditionError("perfection check needs a nonempty code");
  if (radius < 0) throw InvalidInput("radius must be nonnegative");
  const int n = code.n;
  if (n > table_capacity())
    throw CapacityError("n = " + std::to_string(n) + " exceeds the enumeration budget " +
                        std::to_string(table_capacity()));

  // Ball members of c are y o c with d(e, y) <= radius.
  const auto offsets = ball(Permutation::identity(n), radius, code.metric);
  const std::uint64_t space = factorial(n);
  const unsigned workers = static_cast<unsigned>(
      std::min<std::uint64_t>(resolve_threads(threads), code.size()));
  std::vector<std::vector<std::uint16_t>> partial(workers, std::vector<std::uint16_t>(space, 0));

  parallel_chunks(code.size(), workers, [&](unsigned w, std::uint64_t begin, std::uint64_t end) {
    auto& counts = partial[w];
    std::vector<int> buf(n);
    for (auto i = begin; i < end; ++i) {
      const auto c = code.words[i].image();
      for (const auto& y : offsets) {
        for (int k = 0; k < n; ++k) buf[k] = c[y.image()[k] - 1];
        auto& slot = counts[rank_of(buf)];
        if (slot < std::numeric_limits<std::uint16_t>::max()) ++slot;
      }
    }
  });
  for (unsigned w = 1; w < workers; ++w)
    for (std::uint64_t r = 0; r < space; ++r) partial[0][r] += partial[w][r];

  PerfectionReport report;
  report.ball_size = offsets.size();
  report.space_size = space;
  report.code_size = code.size();
  const auto& counts = partial[0];
  for (std::uint64_t r = 0; r < space; ++r) {
    if (counts[r] == 1) continue;
    ++report.total_defects;
    (counts[r] == 0 ? report.uncovered : report.overcovered)++;
    if (report.defects.size() < kMaxListedDefects)
      report.defects.push_back({unrank({n, r}), counts[r]});
  }
  report.perfect = report.total_defects == 0 && report.code_size * report.ball_size == space;
  return report;
}

const std::vector<std::vector<std::vector<int>>>& paper_s5_listing() {
  static const std::vector<std::vector<std::vector<int>>> rows = {
      {{0, 1, 2, 3, 4}, {0, 2, 4, 1, 3}, {0, 3, 1, 4, 2}, {0, 4, 3, 2, 1}},
      {{1, 2, 3, 4, 0}, {2, 4, 1, 3, 0}, {3, 1, 4, 2, 0}, {4, 3, 2, 1, 0}},
      {{2, 3, 4, 0, 1}, {4, 1, 3, 0, 2}, {1, 4, 2, 0, 3}, {3, 2, 1, 0, 4}},
      {{3, 4, 0, 1, 2}, {1, 3, 0, 2, 4}, {4, 2, 0, 3, 1}, {2, 1, 0, 4, 3}},
      {{4, 0, 1, 2, 3}, {3, 0, 2, 4, 1}, {2, 0, 3, 1, 4}, {1, 0, 4, 3, 2}},
  };
  return rows;
}

CodeBook paper_s5_cyclic_code() {
  std::vector<Permutation> words;
  for (const auto& row : paper_s5_listing())
    for (const auto& w : row) {
      std::vector<int> image(w);
      for (int& v : image) ++v;
      words.emplace_back(std::move(image));
    }
  return make_codebook(5, Metric::CyclicKendall, std::move(words), 3);
}

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

CodeBook cyclic_prime_code(int n) {
  if (n < 5 || !is_prime(n))
    throw PreconditionError("cyclic prime construction needs a prime n >= 5, got " +
                            std::to_string(n) +
                            (n >= 2 && !is_prime(n) ? " (composite: multiples of a shared "
                                                      "factor collide mod n)"
                                                    : ""));
  std::vector<Permutation> words;
  words.reserve(static_cast<std::size_t>(n) * (n - 1));
  for (int alpha = 1; alpha < n; ++alpha) {
    std::vector<int> base(n);
    for (int i = 0; i < n; ++i) base[i] = (i * alpha) % n + 1;
    const Permutation p(std::move(base));
    for (int k = 0; k < n; ++k) words.push_back(rotate(p, k));
  }
  return make_codebook(n, Metric::CyclicKendall, std::move(words));
}

CodeBook read_code(std::istream& in, bool zero_based) {
  std::string line;
  std::optional<int> n;
  std::optional<Metric> metric;
  std::vector<Permutation> words;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    if (!n) {
      std::istringstream header(line);
      std::string field;
      while (header >> field) {
        if (field.rfind("n=", 0) == 0) {
          n = std::stoi(field.substr(2));
        } else if (field.rfind("metric=", 0) == 0) {
          metric = parse_metric(field.substr(7));
        } else {
          throw InvalidInput("code header: unknown field '" + field + "'");
        }
      }
      if (!n || !metric) throw InvalidInput("code header must be 'n=<n> metric=<kendall|cyclic>'");
      continue;
    }
    if (!line.empty() && line.back() == '\r') line.pop_back();
    try {
      words.push_back(Permutation::parse(line, zero_based));
    } catch (const InvalidInput& e) {
      throw InvalidInput("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  if (!n) throw InvalidInput("code file has no header line");
  return make_codebook(*n, *metric, std::move(words));
}

CodeBook read_code_file(const std::string& path, bool zero_based) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot read code file '" + path + "'");
  return read_code(in, zero_based);
}

void write_code(std::ostream& out, const CodeBook& code) {
  out << "n=" << code.n << " metric=" << to_string(code.metric) << '\n';
  for (const auto& w : code.words) out << w.to_string() << '\n';
}

}  // namespace permkit
