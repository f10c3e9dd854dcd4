// Independent reference implementations used by the unit and acceptance
// tests. Everything here is deliberately naive.
#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "mds/code.hpp"
#include "mds/extension.hpp"
#include "mds/registry.hpp"
#include "mds/search.hpp"

namespace oracle {

using mds::Code;

// Exact covers by trying every subfamily. Covers are sorted index lists.
inline std::set<std::vector<std::uint32_t>> brute_exact_covers(const mds::ExactCoverInstance& inst) {
  std::set<std::vector<std::uint32_t>> out;
  const std::size_t m = inst.sets.size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    std::vector<int> hit(inst.universe_size, 0);
    std::vector<std::uint32_t> chosen;
    for (std::size_t i = 0; i < m; ++i)
      if (mask >> i & 1) {
        chosen.push_back(static_cast<std::uint32_t>(i));
        for (auto e : inst.sets[i]) ++hit[e];
      }
    if (std::all_of(hit.begin(), hit.end(), [](int h) { return h == 1; })) out.insert(chosen);
  }
  return out;
}

// Cliques with one vertex per part, by trying every tuple.
inline std::set<std::vector<std::uint32_t>> brute_cliques(const mds::MultipartiteGraph& g) {
  std::set<std::vector<std::uint32_t>> out;
  const std::size_t p = g.parts();
  if (p == 0) return out;
  for (std::size_t i = 0; i < p; ++i)
    if (g.part_size(i) == 0) return out;
  std::vector<std::uint32_t> t(p, 0);
  while (true) {
    bool ok = true;
    for (std::size_t a = 0; a < p && ok; ++a)
      for (std::size_t b = a + 1; b < p && ok; ++b) ok = g.adjacent(a, t[a], b, t[b]);
    if (ok) out.insert(t);
    std::size_t j = 0;
    while (j < p && ++t[j] == g.part_size(j)) t[j++] = 0;
    if (j == p) break;
  }
  return out;
}

// Small random exact-cover instance with mostly small sets, so that covers
// actually occur.
inline mds::ExactCoverInstance random_exact_cover(std::mt19937_64& rng) {
  mds::ExactCoverInstance inst;
  inst.universe_size = 1 + rng() % 12;
  const std::size_t m = rng() % 15;
  std::set<std::vector<std::uint32_t>> sets;
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<std::uint32_t> s;
    const std::size_t size = 1 + rng() % 3;
    for (std::size_t j = 0; j < size; ++j) s.push_back(static_cast<std::uint32_t>(rng() % inst.universe_size));
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    sets.insert(s);
  }
  inst.sets.assign(sets.begin(), sets.end());
  std::shuffle(inst.sets.begin(), inst.sets.end(), rng);
  return inst;
}

// Random multipartite graph; every tenth trial may contain an empty part.
inline mds::MultipartiteGraph random_partite_graph(std::mt19937_64& rng, int trial) {
  const std::size_t parts = 1 + rng() % 5;
  std::vector<std::uint32_t> sizes(parts);
  for (auto& s : sizes) s = static_cast<std::uint32_t>(rng() % 7);
  if (trial % 10 != 0)
    for (auto& s : sizes) s = std::max<std::uint32_t>(s, 1);
  mds::MultipartiteGraph g(sizes);
  const double density = 0.4 + 0.5 * static_cast<double>(rng() % 100) / 100.0;
  for (std::size_t a = 0; a < parts; ++a)
    for (std::size_t b = a + 1; b < parts; ++b)
      for (std::uint32_t i = 0; i < sizes[a]; ++i)
        for (std::uint32_t j = 0; j < sizes[b]; ++j)
          if (static_cast<double>(rng() % 1000) / 1000.0 < density) g.add_edge(a, i, b, j);
  return g;
}

// Every (n,k-1) MDS subcode of the (n,k) MDS code c: such a subcode holds
// exactly one word per prefix on the first k-1 coordinates, and pairwise
// distances are at least n-k+2.
inline std::vector<std::vector<std::uint32_t>> mds_subcodes(const Code& c, int k) {
  const int n = c.n(), q = c.q(), d = n - k + 2;
  std::map<std::vector<mds::Symbol>, std::vector<std::uint32_t>> by_prefix;
  for (std::uint32_t i = 0; i < c.size(); ++i) {
    auto w = c.word(i);
    by_prefix[std::vector<mds::Symbol>(w.begin(), w.begin() + (k - 1))].push_back(i);
  }
  std::vector<std::vector<std::uint32_t>> groups;
  for (auto& [p, g] : by_prefix) groups.push_back(g);
  (void)q;
  std::vector<std::vector<std::uint32_t>> out;
  std::vector<std::uint32_t> chosen;
  std::function<void(std::size_t)> rec = [&](std::size_t gi) {
    if (gi == groups.size()) {
      auto s = chosen;
      std::sort(s.begin(), s.end());
      out.push_back(s);
      return;
    }
    for (auto w : groups[gi]) {
      bool ok = true;
      for (auto u : chosen)
        if (mds::hamming(c.word(u), c.word(w)) < d) {
          ok = false;
          break;
        }
      if (!ok) continue;
      chosen.push_back(w);
      rec(gi + 1);
      chosen.pop_back();
    }
  };
  rec(0);
  std::sort(out.begin(), out.end());
  return out;
}

// Exact covers of {0..m-1} by `sets`, each cover as a sorted list of set ids.
inline std::vector<std::vector<std::uint32_t>> simple_exact_covers(std::size_t m, const std::vector<std::vector<std::uint32_t>>& sets) {
  std::vector<std::vector<std::uint32_t>> containing(m);
  for (std::uint32_t s = 0; s < sets.size(); ++s) containing[sets[s].front()].push_back(s);
  std::vector<char> used(m, 0);
  std::vector<std::uint32_t> chosen;
  std::vector<std::vector<std::uint32_t>> out;
  std::function<void()> rec = [&]() {
    std::size_t e = 0;
    while (e < m && used[e]) ++e;
    if (e == m) {
      auto s = chosen;
      std::sort(s.begin(), s.end());
      out.push_back(s);
      return;
    }
    // The set covering e must have e as its smallest uncovered element, and
    // everything below e is covered, so e is its smallest element.
    for (auto s : containing[e]) {
      bool ok = true;
      for (auto x : sets[s])
        if (used[x]) {
          ok = false;
          break;
        }
      if (!ok) continue;
      for (auto x : sets[s]) used[x] = 1;
      chosen.push_back(s);
      rec();
      chosen.pop_back();
      for (auto x : sets[s]) used[x] = 0;
    }
  };
  rec();
  std::sort(out.begin(), out.end());
  return out;
}

// Partitions of c (an (n,k) MDS code) into (n,k-1) MDS codes, each as the
// sorted list of its blocks.
struct DirectPartitions {
  std::vector<std::vector<std::uint32_t>> subcodes;
  std::vector<std::vector<std::uint32_t>> covers;  // ids into subcodes
};

inline DirectPartitions direct_partitions(const Code& c, int k) {
  DirectPartitions out;
  out.subcodes = mds_subcodes(c, k);
  out.covers = simple_exact_covers(c.size(), out.subcodes);
  return out;
}

// True when `ps` is exactly the partition family of `direct`.
inline bool same_partitions(const mds::PartitionSet& ps, const DirectPartitions& direct) {
  if (ps.size() != direct.covers.size()) return false;
  std::map<std::vector<std::uint32_t>, std::uint32_t> id;
  for (std::uint32_t i = 0; i < direct.subcodes.size(); ++i) id[direct.subcodes[i]] = i;
  std::vector<std::uint32_t> translate(ps.blocks.size());
  for (std::size_t b = 0; b < ps.blocks.size(); ++b) {
    auto it = id.find(ps.blocks[b]);
    if (it == id.end()) return false;
    translate[b] = it->second;
  }
  std::vector<std::vector<std::uint32_t>> mine;
  mine.reserve(ps.size());
  for (std::size_t p = 0; p < ps.size(); ++p) {
    std::vector<std::uint32_t> v;
    for (auto b : ps.partition(p)) v.push_back(translate[b]);
    std::sort(v.begin(), v.end());
    mine.push_back(std::move(v));
  }
  std::sort(mine.begin(), mine.end());
  return mine == direct.covers;
}

// All order-q Latin squares as row lists, by backtracking cell by cell.
inline std::uint64_t count_latin_squares(int q) {
  std::vector<int> cell(static_cast<std::size_t>(q * q), -1);
  std::uint64_t count = 0;
  std::function<void(int)> rec = [&](int pos) {
    if (pos == q * q) {
      ++count;
      return;
    }
    const int r = pos / q, c = pos % q;
    for (int s = 0; s < q; ++s) {
      bool ok = true;
      for (int j = 0; j < c && ok; ++j) ok = cell[static_cast<std::size_t>(r * q + j)] != s;
      for (int i = 0; i < r && ok; ++i) ok = cell[static_cast<std::size_t>(i * q + c)] != s;
      if (!ok) continue;
      cell[static_cast<std::size_t>(pos)] = s;
      rec(pos + 1);
      cell[static_cast<std::size_t>(pos)] = -1;
    }
  };
  rec(0);
  return count;
}

// Ordered pairs of orthogonal Latin squares of order q.
inline std::uint64_t count_orthogonal_pairs(int q) {
  std::vector<std::vector<int>> squares;
  std::vector<int> cell(static_cast<std::size_t>(q * q), -1);
  std::function<void(int)> rec = [&](int pos) {
    if (pos == q * q) {
      squares.push_back(cell);
      return;
    }
    const int r = pos / q, c = pos % q;
    for (int s = 0; s < q; ++s) {
      bool ok = true;
      for (int j = 0; j < c && ok; ++j) ok = cell[static_cast<std::size_t>(r * q + j)] != s;
      for (int i = 0; i < r && ok; ++i) ok = cell[static_cast<std::size_t>(i * q + c)] != s;
      if (!ok) continue;
      cell[static_cast<std::size_t>(pos)] = s;
      rec(pos + 1);
      cell[static_cast<std::size_t>(pos)] = -1;
    }
  };
  rec(0);
  std::uint64_t pairs = 0;
  for (const auto& a : squares)
    for (const auto& b : squares) {
      std::set<int> seen;
      for (int i = 0; i < q * q; ++i) seen.insert(a[static_cast<std::size_t>(i)] * q + b[static_cast<std::size_t>(i)]);
      if (static_cast<int>(seen.size()) == q * q) ++pairs;
    }
  return pairs;
}

// Registries (n,k) for k = 2..kmax from the full spaces, built in memory
// until a step comes back empty or n reaches nmax.
using Chains = std::map<std::pair<int, int>, mds::Registry>;

inline Chains trivial_chains(int q, int kmax, int nmax) {
  Chains regs;
  for (int k = 2; k <= kmax; ++k) {
    regs[{k, k}] = mds::full_space_registry(q, k);
    for (int n = k; n < nmax; ++n) {
      auto& reg = regs.at({n, k});
      if (reg.size() == 0) break;
      const mds::Registry* lower = k >= 3 ? &regs.at({n - 1, k - 1}) : nullptr;
      auto next = mds::extension_step(reg, lower);
      regs[{n + 1, k}] = std::move(next);
    }
  }
  return regs;
}

}  // namespace oracle
