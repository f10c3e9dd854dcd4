#include "mds/code.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <numeric>
#include <string>
#include <unordered_set>

#include "mds/error.hpp"
#include "subsets.hpp"

namespace mds {

namespace {

bool word_less(const Symbol* a, const Symbol* b, int n) { return std::memcmp(a, b, static_cast<std::size_t>(n)) < 0; }

void check_params(int q, int n) {
  if (q < 2 || q > kMaxAlphabet) throw ParameterError("alphabet size q=" + std::to_string(q) + " out of range [2,64]");
  if (n < 1 || n > kMaxLength) throw ParameterError("length n=" + std::to_string(n) + " out of range [1,64]");
}

std::uint64_t ipow(std::uint64_t b, int e) {
  std::uint64_t r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

// True when the projection of `c` onto `coords` is injective.
bool projection_injective(const Code& c, std::span<const int> coords, std::vector<std::uint64_t>& bits) {
  const auto q = static_cast<std::uint64_t>(c.q());
  const std::size_t m = c.size();
  const double log_space = static_cast<double>(coords.size()) * std::log2(static_cast<double>(q));
  if (log_space <= 30.0) {
    const std::uint64_t space = ipow(q, static_cast<int>(coords.size()));
    if (static_cast<double>(m) > static_cast<double>(space)) return false;
    bits.assign((space + 63) / 64, 0);
    for (std::size_t i = 0; i < m; ++i) {
      auto w = c.word(i);
      std::uint64_t key = 0;
      for (int p : coords) key = key * q + w[static_cast<std::size_t>(p)];
      auto& slot = bits[key >> 6];
      const std::uint64_t mask = std::uint64_t{1} << (key & 63);
      if (slot & mask) return false;
      slot |= mask;
    }
    return true;
  }
  std::unordered_set<std::string> seen;
  seen.reserve(m * 2);
  std::string key(coords.size(), '\0');
  for (std::size_t i = 0; i < m; ++i) {
    auto w = c.word(i);
    for (std::size_t j = 0; j < coords.size(); ++j) key[j] = static_cast<char>(w[static_cast<std::size_t>(coords[j])]);
    if (!seen.insert(key).second) return false;
  }
  return true;
}

bool all_projections_injective(const Code& c, int t) {
  std::vector<std::uint64_t> scratch;
  bool ok = true;
  for_each_subset(c.n(), t, [&](std::span<const int> coords) {
    if (!projection_injective(c, coords, scratch)) {
      ok = false;
      return false;
    }
    return true;
  });
  return ok;
}

}  // namespace

Code Code::from_flat(int q, int n, std::vector<Symbol> flat) {
  check_params(q, n);
  if (flat.empty() || flat.size() % static_cast<std::size_t>(n) != 0)
    throw ValidationError("code must contain at least one word of length " + std::to_string(n));
  for (Symbol s : flat)
    if (s >= q) throw ValidationError("symbol " + std::to_string(s) + " outside alphabet of size " + std::to_string(q));
  const std::size_t m = flat.size() / static_cast<std::size_t>(n);
  bool sorted = true;
  for (std::size_t i = 1; i < m && sorted; ++i)
    sorted = word_less(flat.data() + (i - 1) * n, flat.data() + i * n, n);
  if (!sorted) {
    std::vector<std::uint32_t> order(m);
    std::iota(order.begin(), order.end(), 0u);
    std::sort(order.begin(), order.end(),
              [&](std::uint32_t a, std::uint32_t b) { return word_less(flat.data() + a * n, flat.data() + b * n, n); });
    std::vector<Symbol> out(flat.size());
    for (std::size_t i = 0; i < m; ++i)
      std::memcpy(out.data() + i * n, flat.data() + static_cast<std::size_t>(order[i]) * n, static_cast<std::size_t>(n));
    flat = std::move(out);
    for (std::size_t i = 1; i < m; ++i)
      if (!word_less(flat.data() + (i - 1) * n, flat.data() + i * n, n))
        throw ValidationError("duplicate word in code");
  }
  return Code(q, n, std::move(flat));
}

Code Code::from_words(int q, int n, const std::vector<std::vector<int>>& words) {
  check_params(q, n);
  std::vector<Symbol> flat;
  flat.reserve(words.size() * static_cast<std::size_t>(n));
  for (const auto& w : words) {
    if (static_cast<int>(w.size()) != n) throw ValidationError("word length differs from n=" + std::to_string(n));
    for (int s : w) {
      if (s < 0 || s >= q) throw ValidationError("symbol " + std::to_string(s) + " outside alphabet");
      flat.push_back(static_cast<Symbol>(s));
    }
  }
  return from_flat(q, n, std::move(flat));
}

std::optional<std::size_t> Code::index_of(std::span<const Symbol> w) const {
  if (static_cast<int>(w.size()) != n_) return std::nullopt;
  std::size_t lo = 0, hi = size();
  while (lo < hi) {
    const std::size_t mid = (lo + hi) / 2;
    const int cmp = std::memcmp(data_.data() + mid * n_, w.data(), static_cast<std::size_t>(n_));
    if (cmp == 0) return mid;
    if (cmp < 0)
      lo = mid + 1;
    else
      hi = mid;
  }
  return std::nullopt;
}

Code Code::subset(std::span<const std::uint32_t> indices) const {
  std::vector<Symbol> flat;
  flat.reserve(indices.size() * static_cast<std::size_t>(n_));
  for (std::size_t i = 0; i < indices.size(); ++i) {
    if (indices[i] >= size()) throw ParameterError("word index out of range");
    if (i > 0 && indices[i] <= indices[i - 1]) throw ParameterError("subset indices must be strictly increasing");
    auto w = word(indices[i]);
    flat.insert(flat.end(), w.begin(), w.end());
  }
  if (flat.empty()) throw ValidationError("empty subset");
  return Code(q_, n_, std::move(flat));
}

std::strong_ordering operator<=>(const Code& a, const Code& b) {
  if (auto c = a.q_ <=> b.q_; c != 0) return c;
  if (auto c = a.n_ <=> b.n_; c != 0) return c;
  return std::lexicographical_compare_three_way(a.data_.begin(), a.data_.end(), b.data_.begin(), b.data_.end());
}

int hamming(std::span<const Symbol> a, std::span<const Symbol> b) {
  int d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) d += a[i] != b[i];
  return d;
}

int min_distance_pairwise(const Code& c) {
  const std::size_t m = c.size();
  int best = c.n();
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) {
      best = std::min(best, hamming(c.word(i), c.word(j)));
      if (best == 1) return 1;
    }
  return best;
}

int min_distance_projective(const Code& c) {
  const std::size_t m = c.size();
  if (m <= 1) return c.n();
  int t = 0;
  while (t < c.n() && ipow(static_cast<std::uint64_t>(c.q()), t) < m) ++t;
  for (; t < c.n(); ++t)
    if (all_projections_injective(c, t)) return c.n() - t + 1;
  return 1;
}

int min_distance(const Code& c) {
  return c.size() <= 2048 ? min_distance_pairwise(c) : min_distance_projective(c);
}

int cross_distance(const Code& a, const Code& b) {
  if (a.n() != b.n() || a.q() != b.q()) throw ParameterError("cross_distance: codes differ in length or alphabet");
  int best = a.n();
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) {
      best = std::min(best, hamming(a.word(i), b.word(j)));
      if (best == 0) return 0;
    }
  return best;
}

std::vector<std::uint64_t> distance_distribution(const Code& c) {
  std::vector<std::uint64_t> h(static_cast<std::size_t>(c.n()) + 1, 0);
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t j = i + 1; j < c.size(); ++j) ++h[static_cast<std::size_t>(hamming(c.word(i), c.word(j)))];
  return h;
}

std::optional<int> log_q_size(const Code& c) {
  std::uint64_t p = 1;
  for (int k = 0; k <= c.n(); ++k) {
    if (p == c.size()) return k;
    if (p > c.size()) break;
    p *= static_cast<std::uint64_t>(c.q());
  }
  return std::nullopt;
}

MdsProfile is_mds(const Code& c) {
  if (c.size() == 1) return {0, c.n() + 1, true};
  const int d = min_distance(c);
  const int k = c.n() - d + 1;
  const auto lk = log_q_size(c);
  return {k, d, lk.has_value() && *lk == k};
}

bool verify_mds_direct(const Code& c) {
  const auto k = log_q_size(c);
  if (!k) return false;
  if (*k == 0) return true;
  return all_projections_injective(c, *k);
}

Code puncture(const Code& c, int pos) {
  if (pos < 0 || pos >= c.n()) throw ParameterError("puncture position out of range");
  if (c.n() < 2) throw ParameterError("cannot puncture a length-1 code");
  const int n = c.n();
  std::vector<Symbol> flat;
  flat.reserve(c.size() * static_cast<std::size_t>(n - 1));
  for (std::size_t i = 0; i < c.size(); ++i) {
    auto w = c.word(i);
    for (int j = 0; j < n; ++j)
      if (j != pos) flat.push_back(w[static_cast<std::size_t>(j)]);
  }
  try {
    return Code::from_flat(c.q(), n - 1, std::move(flat));
  } catch (const ValidationError&) {
    throw ParameterError("puncturing at position " + std::to_string(pos) + " collides codewords");
  }
}

Shortened shorten_with_source(const Code& c, int pos, int s) {
  if (pos < 0 || pos >= c.n()) throw ParameterError("shorten position out of range");
  if (s < 0 || s >= c.q()) throw ParameterError("shorten symbol out of range");
  if (c.size() <= 1) throw ParameterError("cannot shorten a 0-dimensional code");
  if (c.n() < 2) throw ParameterError("cannot shorten a length-1 code");
  const int n = c.n();
  Shortened out;
  std::vector<Symbol> flat;
  for (std::size_t i = 0; i < c.size(); ++i) {
    auto w = c.word(i);
    if (w[static_cast<std::size_t>(pos)] != s) continue;
    out.source.push_back(static_cast<std::uint32_t>(i));
    for (int j = 0; j < n; ++j)
      if (j != pos) flat.push_back(w[static_cast<std::size_t>(j)]);
  }
  if (flat.empty())
    throw ParameterError("no codeword carries symbol " + std::to_string(s) + " at position " + std::to_string(pos));
  // Deleting a coordinate from words that agree on it preserves their order.
  out.code = Code::from_flat(c.q(), n - 1, std::move(flat));
  return out;
}

Code shorten(const Code& c, int pos, int s) { return shorten_with_source(c, pos, s).code; }

void validate_partition(const Code& c, const LabeledPartition& p) {
  const int q = c.q();
  if (static_cast<int>(p.parts.size()) != q)
    throw ValidationError("partition has " + std::to_string(p.parts.size()) + " parts, expected q=" + std::to_string(q));
  const auto k = log_q_size(c);
  if (!k || *k < 1) throw ValidationError("parent code size is not q^k with k >= 1");
  std::vector<char> seen(c.size(), 0);
  std::size_t covered = 0;
  std::size_t expected = 1;
  for (int i = 0; i < *k - 1; ++i) expected *= static_cast<std::size_t>(q);
  for (std::size_t i = 0; i < p.parts.size(); ++i) {
    const auto& part = p.parts[i];
    const std::string name = "part " + std::to_string(i);
    if (part.empty()) throw ValidationError(name + " is empty");
    for (auto idx : part) {
      if (idx >= c.size()) throw ValidationError(name + " references word " + std::to_string(idx) + " out of range");
      if (seen[idx]) throw ValidationError(name + " shares word " + std::to_string(idx) + " with another part");
      seen[idx] = 1;
      ++covered;
    }
    if (part.size() != expected)
      throw ValidationError(name + " has " + std::to_string(part.size()) + " words, expected q^(k-1)=" +
                            std::to_string(expected));
    std::vector<std::uint32_t> sorted(part.begin(), part.end());
    std::sort(sorted.begin(), sorted.end());
    if (!verify_mds_direct(c.subset(sorted)))
      throw ValidationError(name + " is not an MDS code of dimension " + std::to_string(*k - 1));
  }
  if (covered != c.size()) throw ValidationError("partition does not cover every codeword");
}

Code extend_with_partition(const Code& c, const LabeledPartition& p) {
  validate_partition(c, p);
  const int n = c.n();
  std::vector<Symbol> flat;
  flat.reserve(c.size() * static_cast<std::size_t>(n + 1));
  for (std::size_t label = 0; label < p.parts.size(); ++label)
    for (auto idx : p.parts[label]) {
      auto w = c.word(idx);
      flat.insert(flat.end(), w.begin(), w.end());
      flat.push_back(static_cast<Symbol>(label));
    }
  return Code::from_flat(c.q(), n + 1, std::move(flat));
}

Code direct_sum(const Code& a, const Code& b) {
  if (a.q() != b.q()) throw ParameterError("direct_sum: alphabet sizes differ");
  if (a.n() + b.n() > kMaxLength) throw ParameterError("direct_sum: result too long");
  std::vector<Symbol> flat;
  flat.reserve(a.size() * b.size() * static_cast<std::size_t>(a.n() + b.n()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) {
      auto x = a.word(i);
      auto y = b.word(j);
      flat.insert(flat.end(), x.begin(), x.end());
      flat.insert(flat.end(), y.begin(), y.end());
    }
  return Code::from_flat(a.q(), a.n() + b.n(), std::move(flat));
}

Code theorem1_construct(const Code& c, const Code& d) {
  if (c.q() != d.q()) throw ParameterError("theorem1_construct: alphabet sizes differ");
  for (const Code* x : {&c, &d}) {
    const auto prof = is_mds(*x);
    if (!prof.is_mds || prof.d != 2 || x->n() < 2)
      throw ParameterError("theorem1_construct: inputs must be (n,n-1) MDS codes with d=2");
  }
  std::vector<Symbol> flat;
  for (int i = 0; i < c.q(); ++i) {
    const Code part = direct_sum(shorten(c, c.n() - 1, i), shorten(d, d.n() - 1, i));
    auto f = part.flat();
    flat.insert(flat.end(), f.begin(), f.end());
  }
  return Code::from_flat(c.q(), c.n() + d.n() - 2, std::move(flat));
}

Code full_space(int q, int n) {
  check_params(q, n);
  const std::uint64_t m = ipow(static_cast<std::uint64_t>(q), n);
  if (m > (std::uint64_t{1} << 26)) throw ParameterError("full space too large");
  std::vector<Symbol> flat(m * static_cast<std::uint64_t>(n));
  for (std::uint64_t i = 0; i < m; ++i) {
    std::uint64_t x = i;
    for (int j = n - 1; j >= 0; --j) {
      flat[i * n + static_cast<std::uint64_t>(j)] = static_cast<Symbol>(x % q);
      x /= q;
    }
  }
  return Code::from_flat(q, n, std::move(flat));
}

Code repetition_code(int q, int n) {
  check_params(q, n);
  std::vector<Symbol> flat;
  for (int s = 0; s < q; ++s)
    for (int j = 0; j < n; ++j) flat.push_back(static_cast<Symbol>(s));
  return Code::from_flat(q, n, std::move(flat));
}

Code latin_square_code(const std::vector<std::vector<int>>& table) {
  const int q = static_cast<int>(table.size());
  std::vector<std::vector<int>> words;
  for (int x = 0; x < q; ++x) {
    if (static_cast<int>(table[static_cast<std::size_t>(x)].size()) != q) throw ValidationError("table is not square");
    for (int y = 0; y < q; ++y) words.push_back({x, y, table[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)]});
  }
  Code c = Code::from_words(q, 3, words);
  if (!verify_mds_direct(c)) throw ValidationError("table is not a Latin square");
  return c;
}

Code cyclic_group_code(int q) {
  std::vector<std::vector<int>> t(static_cast<std::size_t>(q), std::vector<int>(static_cast<std::size_t>(q)));
  for (int x = 0; x < q; ++x)
    for (int y = 0; y < q; ++y) t[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] = (x + y) % q;
  return latin_square_code(t);
}

}  // namespace mds
