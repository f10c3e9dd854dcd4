#include "mds/partitions.hpp"

#include <algorithm>
#include <map>

#include "mds/canonical.hpp"
#include "mds/error.hpp"
#include "subsets.hpp"

namespace mds {

namespace {

constexpr std::uint32_t kAbsent = 0xffffffffu;

std::size_t projection_index(std::span<const Symbol> w, const std::vector<int>& coords, int q) {
  std::size_t x = 0;
  for (int c : coords) x = x * static_cast<std::size_t>(q) + w[static_cast<std::size_t>(c)];
  return x;
}

int dimension_of(const Code& c) {
  const auto k = log_q_size(c);
  if (!k) throw ParameterError("code size is not a power of q");
  return *k;
}

}  // namespace

ConflictIndex::ConflictIndex(const Code& part, int kk, int t) : part_(&part), kk_(kk), t_(t) {
  const int window = std::min(kk + t - 1, part.n());
  std::size_t cells = 1;
  for (int i = 0; i < kk; ++i) cells *= static_cast<std::size_t>(part.q());
  for_each_subset(window, kk, [&](std::span<const int> s) {
    subsets_.emplace_back(s.begin(), s.end());
    return true;
  });
  tables_.assign(subsets_.size(), std::vector<std::uint32_t>(cells, kAbsent));
  for (std::size_t s = 0; s < subsets_.size(); ++s)
    for (std::size_t w = 0; w < part.size(); ++w) tables_[s][projection_index(part.word(w), subsets_[s], part.q())] = static_cast<std::uint32_t>(w);
}

bool ConflictIndex::far_from(const Code& a) const {
  // Words at distance < t agree on at least n - t + 1 coordinates, hence on
  // at least kk coordinates of the window, hence on one of the subsets.
  for (std::size_t w = 0; w < a.size(); ++w) {
    const auto x = a.word(w);
    for (std::size_t s = 0; s < subsets_.size(); ++s) {
      const std::uint32_t hit = tables_[s][projection_index(x, subsets_[s], a.q())];
      if (hit != kAbsent && hamming(x, part_->word(hit)) < t_) return false;
    }
  }
  return true;
}

PartitionSet find_partitions(const Code& c, const Registry* lower, const FindOptions& opt, FindStats* stats) {
  const int q = c.q(), n = c.n();
  const int k = dimension_of(c);
  if (n < 2 || k < 2) throw ParameterError("find_partitions needs n >= 2 and k >= 2");
  if (k >= 3) {
    if (!lower) throw DependencyError("find_partitions: the (n-1,k-1) registry is required for k >= 3");
    if (lower->q() != q || lower->n() != n - 1 || lower->k() != k - 1) throw DependencyError("find_partitions: lower registry has the wrong parameters");
  }
  const int t = n - k + 1;  // required cross distance between parts of different shortenings
  const int kk = k - 2;     // dimension of the parts

  // Phase 1: the parts S_j of partitions of each shortened code C_j.
  std::vector<Shortened> shortened;
  std::vector<std::vector<Code>> parts(static_cast<std::size_t>(q));
  std::vector<std::vector<std::vector<std::uint32_t>>> part_words(static_cast<std::size_t>(q));  // indices into C
  for (int j = 0; j < q; ++j) {
    shortened.push_back(shorten_with_source(c, n - 1, j));
    const Shortened& sh = shortened.back();
    std::vector<std::vector<std::uint32_t>> blocks;
    if (k == 2) {
      for (std::uint32_t w = 0; w < sh.code.size(); ++w) blocks.push_back({w});
    } else {
      const CanonicalForm cf = canonical_form(sh.code);
      const auto rec = lower->find(cf.cert);
      if (!rec) throw DependencyError("shortened code matches no class of the (" + std::to_string(n - 1) + "," + std::to_string(k - 1) + ") registry");
      const ClassRecord& r = lower->records()[*rec];
      if (!r.partitions) throw DependencyError("partitions of class " + std::to_string(*rec) + " of (" + std::to_string(n - 1) + "," + std::to_string(k - 1) + ") are not available");
      // One isometry suffices: the partition set of the representative is invariant under its automorphisms.
      const auto map = word_map(cf.to_canon.inverse(), r.rep, sh.code);
      for (const auto& b : r.partitions->blocks) {
        std::vector<std::uint32_t> img;
        img.reserve(b.size());
        for (auto w : b) img.push_back(map[w]);
        std::sort(img.begin(), img.end());
        blocks.push_back(std::move(img));
      }
      std::sort(blocks.begin(), blocks.end());
    }
    for (auto& b : blocks) {
      parts[static_cast<std::size_t>(j)].push_back(sh.code.subset(b));
      std::vector<std::uint32_t> src;
      src.reserve(b.size());
      for (auto w : b) src.push_back(sh.source[w]);
      part_words[static_cast<std::size_t>(j)].push_back(std::move(src));
    }
  }
  if (stats) {
    stats->part_counts.clear();
    for (const auto& s : parts) stats->part_counts.push_back(s.size());
  }

  // Phase 2: transversal cliques of the q-partite compatibility graph.
  std::vector<std::uint32_t> sizes;
  for (const auto& s : parts) sizes.push_back(static_cast<std::uint32_t>(s.size()));
  MultipartiteGraph g(sizes);
  std::uint64_t edges = 0;
  for (int j1 = 0; j1 < q; ++j1) {
    std::vector<ConflictIndex> index;
    for (const auto& p : parts[static_cast<std::size_t>(j1)]) index.emplace_back(p, kk, t);
    for (int j2 = j1 + 1; j2 < q; ++j2)
      for (std::uint32_t a = 0; a < sizes[static_cast<std::size_t>(j1)]; ++a)
        for (std::uint32_t b = 0; b < sizes[static_cast<std::size_t>(j2)]; ++b)
          if (index[a].far_from(parts[static_cast<std::size_t>(j2)][b])) {
            g.add_edge(static_cast<std::size_t>(j1), a, static_cast<std::size_t>(j2), b);
            ++edges;
          }
  }
  if (stats) stats->edges = edges;

  ExactCoverInstance inst;
  inst.universe_size = c.size();
  enumerate_partite_cliques(g, [&](std::span<const std::uint32_t> tuple) {
    if (inst.sets.size() >= opt.max_sets)
      throw GuardrailError("more than " + std::to_string(opt.max_sets) + " candidate subcodes; raise the cap to continue");
    std::vector<std::uint32_t> d;
    for (int j = 0; j < q; ++j) {
      const auto& w = part_words[static_cast<std::size_t>(j)][tuple[static_cast<std::size_t>(j)]];
      d.insert(d.end(), w.begin(), w.end());
    }
    std::sort(d.begin(), d.end());
    if (opt.validate_candidates && !verify_mds_direct(c.subset(d)))
      throw ConsistencyError("candidate subcode from a clique is not an MDS code");
    inst.sets.push_back(std::move(d));
    return true;
  });
  if (stats) stats->candidates = inst.sets.size();

  // Phase 3: exact covers of C by q candidates.
  std::vector<std::uint32_t> flat;
  const std::uint64_t covers = enumerate_exact_covers(
      inst,
      [&](std::span<const std::uint32_t> chosen) {
        if (chosen.size() != static_cast<std::size_t>(q)) throw ConsistencyError("exact cover with a wrong number of parts");
        flat.insert(flat.end(), chosen.begin(), chosen.end());
        return true;
      },
      opt.max_sets);
  if (stats) stats->covers = covers;
  return PartitionSet::normalize(q, std::move(inst.sets), std::move(flat));
}

std::vector<PartitionSet> initial_k2_partitions(const Registry& upper, const Registry& lower) {
  if (upper.q() != lower.q() || upper.n() != lower.n() + 1 || upper.k() != 2 || lower.k() != 2)
    throw ParameterError("initial_k2_partitions needs registries (n+1,2) and (n,2)");
  const int q = lower.q(), n = lower.n();
  std::vector<std::vector<std::vector<std::uint32_t>>> blocks(lower.size());
  std::vector<std::vector<std::uint32_t>> flat(lower.size());
  std::vector<std::optional<CanonicalForm>> lower_forms(lower.size());

  for (const auto& rec : upper.records()) {
    for (int p = 0; p <= n; ++p) {
      const Code punct = puncture(rec.rep, p);
      // Label of each punctured word: its symbol at p in the extension.
      std::vector<std::vector<std::uint32_t>> induced(static_cast<std::size_t>(q));
      std::vector<Symbol> buf(static_cast<std::size_t>(n));
      for (std::size_t w = 0; w < rec.rep.size(); ++w) {
        const auto word = rec.rep.word(w);
        std::size_t o = 0;
        for (int i = 0; i <= n; ++i)
          if (i != p) buf[o++] = word[static_cast<std::size_t>(i)];
        induced[word[static_cast<std::size_t>(p)]].push_back(static_cast<std::uint32_t>(*punct.index_of(buf)));
      }
      const CanonicalForm cf = canonical_form(punct);
      const auto idx = lower.find(cf.cert);
      if (!idx) throw DependencyError("punctured code matches no class of the (" + std::to_string(n) + ",2) registry; that registry is incomplete");
      auto& lf = lower_forms[*idx];
      if (!lf) lf = canonical_form(lower.records()[*idx].rep);
      const IsometryCoset coset(cf.to_canon, lf->aut_gens, lf->aut_order);
      auto& bl = blocks[*idx];
      auto& fl = flat[*idx];
      coset.enumerate([&](const Isometry& g) {
        const auto map = word_map(g, punct, lower.records()[*idx].rep);
        for (const auto& part : induced) {
          std::vector<std::uint32_t> img;
          for (auto w : part) img.push_back(map[w]);
          std::sort(img.begin(), img.end());
          fl.push_back(static_cast<std::uint32_t>(bl.size()));
          bl.push_back(std::move(img));
        }
      });
    }
  }
  std::vector<PartitionSet> out;
  for (std::size_t i = 0; i < lower.size(); ++i) out.push_back(PartitionSet::normalize(q, std::move(blocks[i]), std::move(flat[i])));
  return out;
}

}  // namespace mds
