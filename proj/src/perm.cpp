#include "permkit/perm.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

#include "permkit/errors.hpp"

namespace permkit {

Permutation::Permutation(std::vector<int> image) : image_(std::move(image)) {
  const int n = size();
  if (n < 1) throw InvalidInput("permutation must have at least one symbol");
  std::vector<bool> seen(n + 1, false);
  for (int v : image_) {
    if (v < 1 || v > n)
      throw InvalidInput("symbol " + std::to_string(v) + " outside 1.." +
                         std::to_string(n));
    if (seen[v]) throw InvalidInput("symbol " + std::to_string(v) + " repeated");
    seen[v] = true;
  }
}

Permutation make_unchecked(std::vector<int> image) {
  return Permutation(std::move(image), Permutation::Unchecked{});
}

Permutation Permutation::identity(int n) {
  if (n < 1) throw InvalidInput("n must be positive");
  std::vector<int> image(n);
  std::iota(image.begin(), image.end(), 1);
  return make_unchecked(std::move(image));
}

Permutation Permutation::parse(std::string_view text, bool zero_based) {
  std::vector<int> image;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (c == ',' || c == ' ' || c == '\t' || c == '[' || c == ']') {
      ++i;
      continue;
    }
    int value = 0;
    auto [end, ec] = std::from_chars(text.data() + i, text.data() + text.size(), value);
    if (ec != std::errc{} || end == text.data() + i)
      throw InvalidInput("cannot parse permutation '" + std::string(text) + "'");
    image.push_back(zero_based ? value + 1 : value);
    i = static_cast<std::size_t>(end - text.data());
  }
  return Permutation(std::move(image));
}

int Permutation::at(int pos) const {
  if (pos < 1 || pos > size()) throw InvalidInput("position out of range");
  return image_[pos - 1];
}

std::string Permutation::to_string() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < image_.size(); ++i) {
    if (i) out << ' ';
    out << image_[i];
  }
  return out.str();
}

std::uint64_t factorial(int n) {
  if (n < 0 || n > kMaxRankN) throw CapacityError("factorial out of 64-bit range");
  std::uint64_t f = 1;
  for (int k = 2; k <= n; ++k) f *= static_cast<std::uint64_t>(k);
  return f;
}

namespace {

void require_same_size(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size())
    throw InvalidInput("size mismatch: " + std::to_string(a.size()) + " vs " +
                       std::to_string(b.size()));
}

}  // namespace

Permutation compose(const Permutation& a, const Permutation& b) {
  require_same_size(a, b);
  std::vector<int> out(a.size());
  for (int i = 0; i < a.size(); ++i) out[i] = b.image()[a.image()[i] - 1];
  return make_unchecked(std::move(out));
}

Permutation inverse(const Permutation& p) {
  std::vector<int> out(p.size());
  for (int i = 0; i < p.size(); ++i) out[p.image()[i] - 1] = i + 1;
  return make_unchecked(std::move(out));
}

Permutation adjacent_transpose(const Permutation& p, int i) {
  if (i < 1 || i > p.size() - 1)
    throw InvalidInput("adjacent transposition index " + std::to_string(i) +
                       " outside 1.." + std::to_string(p.size() - 1));
  std::vector<int> out(p.image().begin(), p.image().end());
  std::swap(out[i - 1], out[i]);
  return make_unchecked(std::move(out));
}

Permutation wrap_transpose(const Permutation& p) {
  if (p.size() < 2) throw InvalidInput("wrap transposition needs n >= 2");
  std::vector<int> out(p.image().begin(), p.image().end());
  std::swap(out.front(), out.back());
  return make_unchecked(std::move(out));
}

Permutation reverse(const Permutation& p) {
  std::vector<int> out(p.image().rbegin(), p.image().rend());
  return make_unchecked(std::move(out));
}

Permutation rotate(const Permutation& p, int k) {
  const int n = p.size();
  k = ((k % n) + n) % n;
  std::vector<int> out(p.image().begin(), p.image().end());
  std::rotate(out.begin(), out.begin() + k, out.end());
  return make_unchecked(std::move(out));
}

std::uint64_t rank_of(std::span<const int> image) {
  const int n = static_cast<int>(image.size());
  std::uint64_t index = 0;
  for (int i = 0; i < n; ++i) {
    int smaller_later = 0;
    for (int j = i + 1; j < n; ++j) smaller_later += image[j] < image[i];
    index = index * static_cast<std::uint64_t>(n - i) + static_cast<std::uint64_t>(smaller_later);
  }
  return index;
}

PermRank rank(const Permutation& p) {
  if (p.size() > kMaxRankN) throw CapacityError("rank needs n <= 20");
  return {p.size(), rank_of(p.image())};
}

void unrank_into(int n, std::uint64_t index, std::span<int> out) {
  // Lehmer digits, most significant first.
  int digits[kMaxRankN];
  for (int i = n - 1; i >= 0; --i) {
    const auto base = static_cast<std::uint64_t>(n - i);
    digits[i] = static_cast<int>(index % base);
    index /= base;
  }
  int pool[kMaxRankN];
  for (int i = 0; i < n; ++i) pool[i] = i + 1;
  int remaining = n;
  for (int i = 0; i < n; ++i) {
    const int d = digits[i];
    out[i] = pool[d];
    for (int j = d; j < remaining - 1; ++j) pool[j] = pool[j + 1];
    --remaining;
  }
}

Permutation unrank(PermRank r) {
  if (r.n < 1 || r.n > kMaxRankN) throw CapacityError("unrank needs 1 <= n <= 20");
  if (r.index >= factorial(r.n))
    throw InvalidInput("rank " + std::to_string(r.index) + " >= " + std::to_string(r.n) + "!");
  std::vector<int> out(r.n);
  unrank_into(r.n, r.index, out);
  return make_unchecked(std::move(out));
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<Permutation> out;
  out.reserve(factorial(n));
  std::vector<int> image(n);
  std::iota(image.begin(), image.end(), 1);
  do {
    out.push_back(make_unchecked(image));
  } while (std::next_permutation(image.begin(), image.end()));
  return out;
}

}  // namespace permkit
