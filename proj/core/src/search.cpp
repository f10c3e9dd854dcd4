#include "mds/search.hpp"

#include <algorithm>
#include <bit>
#include <istream>
#include <numeric>
#include <set>
#include <sstream>
#include <string>

#include "mds/error.hpp"

namespace mds {

ExactCoverInstance parse_exact_cover(std::istream& in) {
  ExactCoverInstance inst;
  std::string line;
  bool have_u = false;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    if (!have_u) {
      if (line.rfind("u=", 0) != 0) throw FormatError("exact cover instance must start with 'u=<n>'");
      try {
        inst.universe_size = std::stoul(line.substr(2));
      } catch (const std::exception&) {
        throw FormatError("bad universe size '" + line + "'");
      }
      have_u = true;
      continue;
    }
    std::istringstream ls(line);
    std::vector<std::uint32_t> s;
    long long x;
    while (ls >> x) {
      if (x < 0) throw FormatError("negative element in '" + line + "'");
      s.push_back(static_cast<std::uint32_t>(x));
    }
    if (!ls.eof()) throw FormatError("bad element in '" + line + "'");
    std::sort(s.begin(), s.end());
    inst.sets.push_back(std::move(s));
  }
  if (!have_u) throw FormatError("missing 'u=<n>' line");
  return inst;
}

namespace {

class CoverSearch {
 public:
  CoverSearch(const ExactCoverInstance& inst, const std::function<bool(std::span<const std::uint32_t>)>& visit)
      : inst_(inst), visit_(visit), words_((inst.universe_size + 63) / 64) {
    const std::size_t m = inst.sets.size();
    bits_.assign(m * words_, 0);
    for (std::size_t s = 0; s < m; ++s)
      for (auto e : inst.sets[s]) bits_[s * words_ + e / 64] |= std::uint64_t{1} << (e % 64);
    covered_.assign(words_, 0);
  }

  std::uint64_t run() {
    if (inst_.universe_size == 0) {
      visit_({});
      return 1;
    }
    std::vector<std::uint32_t> cand;
    for (std::uint32_t s = 0; s < inst_.sets.size(); ++s)
      if (!inst_.sets[s].empty()) cand.push_back(s);
    dfs(cand);
    return count_;
  }

 private:
  const std::uint64_t* set_bits(std::uint32_t s) const { return bits_.data() + static_cast<std::size_t>(s) * words_; }

  bool has(std::uint32_t s, std::size_t e) const { return (set_bits(s)[e / 64] >> (e % 64)) & 1; }

  bool disjoint(std::uint32_t a, std::uint32_t b) const {
    const std::uint64_t* x = set_bits(a);
    const std::uint64_t* y = set_bits(b);
    for (std::size_t w = 0; w < words_; ++w)
      if (x[w] & y[w]) return false;
    return true;
  }

  std::size_t lowest_uncovered() const {
    for (std::size_t w = 0; w < words_; ++w) {
      const std::uint64_t free = ~covered_[w];
      if (free) {
        const std::size_t e = w * 64 + static_cast<std::size_t>(std::countr_zero(free));
        return e < inst_.universe_size ? e : inst_.universe_size;
      }
    }
    return inst_.universe_size;
  }

  void toggle(std::uint32_t s) {
    const std::uint64_t* x = set_bits(s);
    for (std::size_t w = 0; w < words_; ++w) covered_[w] ^= x[w];
  }

  // Returns false once the visitor asked to stop.
  bool dfs(const std::vector<std::uint32_t>& cand) {
    const std::size_t e = lowest_uncovered();
    if (e == inst_.universe_size) {
      ++count_;
      return visit_(chosen_);
    }
    std::vector<std::uint32_t> next;
    for (std::uint32_t s : cand) {
      if (!has(s, e)) continue;
      next.clear();
      for (std::uint32_t t : cand)
        if (t != s && disjoint(s, t)) next.push_back(t);
      chosen_.push_back(s);
      toggle(s);
      const bool go_on = dfs(next);
      toggle(s);
      chosen_.pop_back();
      if (!go_on) return false;
    }
    return true;
  }

  const ExactCoverInstance& inst_;
  const std::function<bool(std::span<const std::uint32_t>)>& visit_;
  std::size_t words_;
  std::vector<std::uint64_t> bits_;
  std::vector<std::uint64_t> covered_;
  std::vector<std::uint32_t> chosen_;
  std::uint64_t count_ = 0;
};

}  // namespace

std::uint64_t enumerate_exact_covers(const ExactCoverInstance& inst,
                                     const std::function<bool(std::span<const std::uint32_t>)>& visit,
                                     std::uint64_t max_sets) {
  if (inst.sets.size() > max_sets)
    throw GuardrailError("exact cover instance has " + std::to_string(inst.sets.size()) + " sets, cap is " + std::to_string(max_sets));
  std::set<std::vector<std::uint32_t>> seen;
  for (std::size_t s = 0; s < inst.sets.size(); ++s) {
    const auto& set = inst.sets[s];
    for (std::size_t i = 0; i < set.size(); ++i) {
      if (set[i] >= inst.universe_size) throw ValidationError("set " + std::to_string(s) + " has element outside the universe");
      if (i && set[i] <= set[i - 1]) throw ValidationError("set " + std::to_string(s) + " is not strictly sorted");
    }
    if (!seen.insert(set).second) throw ValidationError("set " + std::to_string(s) + " is a duplicate");
  }
  CoverSearch search(inst, visit);
  return search.run();
}

std::uint64_t count_exact_covers(const ExactCoverInstance& inst, std::uint64_t max_sets) {
  return enumerate_exact_covers(inst, [](std::span<const std::uint32_t>) { return true; }, max_sets);
}

MultipartiteGraph::MultipartiteGraph(std::vector<std::uint32_t> part_sizes) : sizes_(std::move(part_sizes)) {
  offset_.resize(sizes_.size());
  for (std::size_t p = 0; p < sizes_.size(); ++p) {
    offset_[p] = total_;
    total_ += sizes_[p];
  }
  words_ = (total_ + 63) / 64;
  rows_.assign(total_ * words_, 0);
}

void MultipartiteGraph::add_edge(std::size_t p1, std::uint32_t i1, std::size_t p2, std::uint32_t i2) {
  if (p1 == p2) throw ParameterError("edges inside a part are not allowed");
  if (p1 >= sizes_.size() || p2 >= sizes_.size() || i1 >= sizes_[p1] || i2 >= sizes_[p2]) throw ParameterError("vertex out of range");
  const std::size_t a = id(p1, i1), b = id(p2, i2);
  rows_[a * words_ + b / 64] |= std::uint64_t{1} << (b % 64);
  rows_[b * words_ + a / 64] |= std::uint64_t{1} << (a % 64);
}

bool MultipartiteGraph::adjacent(std::size_t p1, std::uint32_t i1, std::size_t p2, std::uint32_t i2) const {
  const std::size_t a = id(p1, i1), b = id(p2, i2);
  return (rows_[a * words_ + b / 64] >> (b % 64)) & 1;
}

void MultipartiteGraph::make_complete() {
  for (std::size_t p1 = 0; p1 < sizes_.size(); ++p1)
    for (std::size_t p2 = p1 + 1; p2 < sizes_.size(); ++p2)
      for (std::uint32_t i = 0; i < sizes_[p1]; ++i)
        for (std::uint32_t j = 0; j < sizes_[p2]; ++j) add_edge(p1, i, p2, j);
}

namespace {

class CliqueSearch {
 public:
  CliqueSearch(const MultipartiteGraph& g, const std::function<bool(std::span<const std::uint32_t>)>& visit) : g_(g), visit_(visit) {
    order_.resize(g.parts());
    std::iota(order_.begin(), order_.end(), 0u);
    std::stable_sort(order_.begin(), order_.end(), [&](std::size_t a, std::size_t b) { return g.part_size(a) < g.part_size(b); });
    tuple_.assign(g.parts(), 0);
    levels_.assign(g.parts() + 1, std::vector<std::uint64_t>(g.words(), 0));
  }

  std::uint64_t run() {
    if (g_.parts() == 0) return 0;
    for (std::size_t p = 0; p < g_.parts(); ++p)
      if (g_.part_size(p) == 0) return 0;
    auto& all = levels_[0];
    for (std::size_t v = 0; v < g_.vertices(); ++v) all[v / 64] |= std::uint64_t{1} << (v % 64);
    dfs(0);
    return count_;
  }

 private:
  bool any_in_part(const std::vector<std::uint64_t>& cand, std::size_t p) const {
    const std::size_t lo = g_.offset(p), hi = lo + g_.part_size(p);
    for (std::size_t v = lo; v < hi;) {
      if (v % 64 == 0 && v + 64 <= hi) {
        if (cand[v / 64]) return true;
        v += 64;
        continue;
      }
      if ((cand[v / 64] >> (v % 64)) & 1) return true;
      ++v;
    }
    return false;
  }

  bool dfs(std::size_t level) {
    if (level == order_.size()) {
      ++count_;
      return visit_(tuple_);
    }
    const std::size_t p = order_[level];
    const auto& cand = levels_[level];
    auto& next = levels_[level + 1];
    const std::size_t lo = g_.offset(p);
    for (std::uint32_t i = 0; i < g_.part_size(p); ++i) {
      const std::size_t v = lo + i;
      if (!((cand[v / 64] >> (v % 64)) & 1)) continue;
      const std::uint64_t* row = g_.row(v);
      for (std::size_t w = 0; w < g_.words(); ++w) next[w] = cand[w] & row[w];
      bool viable = true;
      for (std::size_t l = level + 1; l < order_.size() && viable; ++l) viable = any_in_part(next, order_[l]);
      if (!viable) continue;
      tuple_[p] = i;
      if (!dfs(level + 1)) return false;
    }
    return true;
  }

  const MultipartiteGraph& g_;
  const std::function<bool(std::span<const std::uint32_t>)>& visit_;
  std::vector<std::size_t> order_;
  std::vector<std::uint32_t> tuple_;
  std::vector<std::vector<std::uint64_t>> levels_;
  std::uint64_t count_ = 0;
};

}  // namespace

std::uint64_t enumerate_partite_cliques(const MultipartiteGraph& g, const std::function<bool(std::span<const std::uint32_t>)>& visit) {
  CliqueSearch s(g, visit);
  return s.run();
}

}  // namespace mds
