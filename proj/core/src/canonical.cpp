#include "mds/canonical.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <cstring>
#include <deque>
#include <numeric>
#include <unordered_set>

#include "mds/error.hpp"
#include "mds/graph.hpp"

namespace mds {

namespace {

inline std::uint64_t mix(std::uint64_t h, std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  x ^= x >> 31;
  return (h ^ x) * 0x100000001b3ULL + (h >> 17);
}

// Ordered partition of the vertex set. Cells are contiguous ranges of lab[],
// identified by their first position.
struct Partition {
  std::vector<std::uint32_t> lab;
  std::vector<std::uint32_t> pos;
  std::vector<std::uint32_t> cell_of;   // vertex -> start of its cell
  std::vector<std::uint32_t> cell_len;  // indexed by cell start
  std::uint32_t cells = 0;

  void swap_positions(std::uint32_t a, std::uint32_t b) {
    const std::uint32_t va = lab[a], vb = lab[b];
    lab[a] = vb;
    lab[b] = va;
    pos[vb] = a;
    pos[va] = b;
  }
};

// Refinement trace of one node, compared on the fly against the traces of
// the first path and of the best path at the same level. A node whose trace
// already differs from the first path and falls below the best path cannot
// lead anywhere useful, so refinement stops early.
struct TraceCursor {
  const std::vector<std::uint64_t>* first = nullptr;  // null: prefix already differs
  const std::vector<std::uint64_t>* best = nullptr;   // consulted while best_cmp == 0
  bool eq_first = false;
  int best_cmp = 1;
  std::vector<std::uint64_t>* record = nullptr;

  bool push(std::uint64_t e) {
    const std::size_t i = record->size();
    record->push_back(e);
    if (eq_first && (i >= first->size() || (*first)[i] != e)) eq_first = false;
    if (best_cmp == 0) {
      if (i >= best->size())
        best_cmp = 1;
      else if ((*best)[i] != e)
        best_cmp = e < (*best)[i] ? -1 : 1;
    }
    return eq_first || best_cmp >= 0;
  }

  bool finish() {
    const std::size_t i = record->size();
    if (eq_first && i != first->size()) eq_first = false;
    if (best_cmp == 0 && i < best->size()) best_cmp = -1;
    return eq_first || best_cmp >= 0;
  }
};

class Refiner {
 public:
  explicit Refiner(const ColoredGraph& g)
      : g_(g), nv_(static_cast<std::uint32_t>(g.num_vertices())), cnt_(nv_, 0), inq_(nv_, 0), ctouch_(nv_, 0), gfill_(nv_, 0) {
    queue_.reserve(nv_);
  }

  Partition initial() const {
    Partition p;
    p.lab.resize(nv_);
    std::iota(p.lab.begin(), p.lab.end(), 0u);
    p.pos = p.lab;
    p.cell_of.assign(nv_, 0);
    p.cell_len.assign(nv_, 0);
    const auto ns = static_cast<std::uint32_t>(g_.symbol_vertices());
    p.cell_len[0] = ns;
    p.cells = 1;
    if (nv_ > ns) {
      for (std::uint32_t v = ns; v < nv_; ++v) p.cell_of[v] = ns;
      p.cell_len[ns] = nv_ - ns;
      p.cells = 2;
    }
    return p;
  }

  void refine_initial(Partition& p, TraceCursor& tc) {
    reset_queue();
    push(0);
    const auto ns = static_cast<std::uint32_t>(g_.symbol_vertices());
    if (nv_ > ns) push(ns);
    refine(p, tc);
  }

  /// False if the trace cursor asked for an early stop.
  bool individualize(Partition& p, std::uint32_t v, TraceCursor& tc) {
    const std::uint32_t c = p.cell_of[v];
    const std::uint32_t len = p.cell_len[c];
    p.swap_positions(p.pos[v], c);
    p.cell_len[c] = 1;
    p.cell_len[c + 1] = len - 1;
    for (std::uint32_t k = c + 1; k < c + len; ++k) p.cell_of[p.lab[k]] = c + 1;
    ++p.cells;
    reset_queue();
    push(c);
    if (!tc.push(mix(0x51ed27, c))) return false;
    return refine(p, tc);
  }

  std::uint64_t refinements = 0;

 private:
  void reset_queue() {
    for (std::size_t i = qhead_; i < queue_.size(); ++i) inq_[queue_[i]] = 0;
    queue_.clear();
    qhead_ = 0;
  }

  void push(std::uint32_t c) {
    inq_[c] = 1;
    queue_.push_back(c);
  }

  // Orders gb[0..n) by cnt_ ascending; counts are small, so bucket them.
  void sort_by_count(std::uint32_t* gb, std::uint32_t n, std::uint32_t lo, std::uint32_t hi) {
    if (hi - lo < 64) {
      std::uint32_t buckets[65] = {};
      for (std::uint32_t k = 0; k < n; ++k) ++buckets[cnt_[gb[k]] - lo + 1];
      for (std::uint32_t b = 1; b <= hi - lo + 1; ++b) buckets[b] += buckets[b - 1];
      scratch_.resize(n);
      for (std::uint32_t k = 0; k < n; ++k) scratch_[buckets[cnt_[gb[k]] - lo]++] = gb[k];
      std::copy(scratch_.begin(), scratch_.begin() + n, gb);
    } else {
      std::sort(gb, gb + n, [&](std::uint32_t a, std::uint32_t b) { return cnt_[a] < cnt_[b]; });
    }
  }

  bool refine(Partition& p, TraceCursor& tc) {
    ++refinements;
    bool alive = true;
    while (qhead_ < queue_.size() && p.cells < nv_ && alive) {
      const std::uint32_t w = queue_[qhead_++];
      inq_[w] = 0;
      const std::uint32_t wlen = p.cell_len[w];

      touched_.clear();
      for (std::uint32_t i = w; i < w + wlen; ++i) {
        const std::uint32_t v = p.lab[i];
        for (const std::uint32_t* it = g_.neighbors_begin(v); it != g_.neighbors_end(v); ++it)
          if (cnt_[*it]++ == 0) touched_.push_back(*it);
      }

      tcells_.clear();
      for (std::uint32_t u : touched_) {
        const std::uint32_t c = p.cell_of[u];
        if (p.cell_len[c] == 1) continue;
        if (ctouch_[c]++ == 0) tcells_.push_back(c);
      }
      std::sort(tcells_.begin(), tcells_.end());
      std::uint32_t total = 0;
      for (std::uint32_t c : tcells_) {
        gfill_[c] = total;
        total += ctouch_[c];
      }
      grouped_.resize(total);
      for (std::uint32_t u : touched_) {
        const std::uint32_t c = p.cell_of[u];
        if (p.cell_len[c] == 1) continue;
        grouped_[gfill_[c]++] = u;
      }

      std::uint32_t off = 0;
      for (std::uint32_t c : tcells_) {
        const std::uint32_t gsz = ctouch_[c];
        std::uint32_t* gb = grouped_.data() + off;
        off += gsz;
        if (!alive) continue;
        const std::uint32_t len = p.cell_len[c];
        std::uint32_t lo = cnt_[gb[0]], hi = lo;
        for (std::uint32_t k = 1; k < gsz; ++k) {
          lo = std::min(lo, cnt_[gb[k]]);
          hi = std::max(hi, cnt_[gb[k]]);
        }
        if (gsz == len && lo == hi) continue;
        if (lo != hi) sort_by_count(gb, gsz, lo, hi);
        std::uint32_t back = c + len;
        for (std::uint32_t k = 0; k < gsz; ++k) p.swap_positions(p.pos[gb[k]], --back);
        for (std::uint32_t k = 0; k < gsz; ++k) {
          p.lab[back + k] = gb[k];
          p.pos[gb[k]] = back + k;
        }

        pieces_.clear();
        if (gsz < len) pieces_.push_back({c, len - gsz, 0});
        for (std::uint32_t k = 0; k < gsz;) {
          std::uint32_t e = k;
          while (e < gsz && cnt_[gb[e]] == cnt_[gb[k]]) ++e;
          pieces_.push_back({back + k, e - k, cnt_[gb[k]]});
          k = e;
        }
        p.cell_len[c] = pieces_[0].len;
        for (std::size_t pi = 1; pi < pieces_.size(); ++pi) {
          const auto& pc = pieces_[pi];
          p.cell_len[pc.start] = pc.len;
          for (std::uint32_t k = pc.start; k < pc.start + pc.len; ++k) p.cell_of[p.lab[k]] = pc.start;
        }
        p.cells += static_cast<std::uint32_t>(pieces_.size() - 1);

        if (inq_[c]) {
          for (std::size_t pi = 1; pi < pieces_.size(); ++pi) push(pieces_[pi].start);
        } else {
          std::size_t largest = 0;
          for (std::size_t pi = 1; pi < pieces_.size(); ++pi)
            if (pieces_[pi].len > pieces_[largest].len) largest = pi;
          for (std::size_t pi = 0; pi < pieces_.size(); ++pi)
            if (pi != largest) push(pieces_[pi].start);
        }

        std::uint64_t h = mix(c, pieces_.size());
        for (const auto& pc : pieces_) h = mix(h, (static_cast<std::uint64_t>(pc.len) << 32) ^ (static_cast<std::uint64_t>(pc.count) << 8));
        alive = tc.push(h);
      }

      for (std::uint32_t u : touched_) cnt_[u] = 0;
      for (std::uint32_t c : tcells_) ctouch_[c] = 0;
    }
    reset_queue();
    if (!alive) return false;
    if (!tc.push(mix(0xce11, p.cells))) return false;
    return tc.finish();
  }

  struct Piece {
    std::uint32_t start, len, count;
  };

  const ColoredGraph& g_;
  std::uint32_t nv_;
  std::vector<std::uint32_t> cnt_;
  std::vector<std::uint8_t> inq_;
  std::vector<std::uint32_t> ctouch_;
  std::vector<std::uint32_t> gfill_;
  std::vector<std::uint32_t> touched_;
  std::vector<std::uint32_t> tcells_;
  std::vector<std::uint32_t> grouped_;
  std::vector<std::uint32_t> scratch_;
  std::vector<Piece> pieces_;
  std::vector<std::uint32_t> queue_;
  std::size_t qhead_ = 0;
};

class UnionFind {
 public:
  explicit UnionFind(std::size_t n = 0) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0u); }
  std::uint32_t find(std::uint32_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::uint32_t> parent_;
};

using Trace = std::vector<std::vector<std::uint64_t>>;  // one event list per level

// Individualization-refinement search over the code graph. Targets are
// always symbol cells; once every symbol vertex is a singleton the word
// cells are discrete too because the words are distinct. Leaves are ranked
// by (trace, certificate); the largest is canonical.
class Search {
 public:
  explicit Search(const ColoredGraph& g)
      : g_(g), ref_(g), ns_(static_cast<std::uint32_t>(g.symbol_vertices())), nv_(static_cast<std::uint32_t>(g.num_vertices())) {}

  void run() {
    Partition root = ref_.initial();
    cur_trace_.assign(1, {});
    TraceCursor tc;
    tc.record = &cur_trace_[0];
    ref_.refine_initial(root, tc);
    cur_path_.clear();
    dfs(0, root, true, true, 0);
  }

  const ColoredGraph& g_;
  Refiner ref_;
  std::uint32_t ns_, nv_;

  bool have_first_ = false;
  Trace first_trace_, best_trace_, cur_trace_;
  std::vector<std::uint32_t> first_path_, best_path_, cur_path_;
  std::vector<std::uint32_t> first_lab_, best_lab_;
  std::vector<std::uint32_t> first_cert_, best_cert_;
  std::vector<std::vector<std::uint32_t>> gens_;  // permutations of the symbol vertices
  std::vector<UnionFind> orbits_;                 // one per first-path level
  std::uint64_t nodes_ = 0, leaves_ = 0;

 private:
  std::uint32_t target_cell(const Partition& p) const {
    std::uint32_t best = ns_, best_len = 1;
    for (std::uint32_t i = 0; i < ns_; i += p.cell_len[i])
      if (p.cell_len[i] > best_len) {
        best = i;
        best_len = p.cell_len[i];
      }
    return best;
  }

  std::vector<std::uint32_t> leaf_cert(const Partition& p) const {
    const auto q = static_cast<std::uint32_t>(g_.q);
    const auto n = static_cast<std::size_t>(g_.n);
    std::vector<std::uint32_t> cert;
    cert.reserve(ns_ + (nv_ - ns_) * n);
    std::vector<std::uint32_t> coord_id(static_cast<std::size_t>(g_.n), UINT32_MAX);
    std::uint32_t next = 0;
    for (std::uint32_t i = 0; i < ns_; ++i) {
      auto& id = coord_id[p.lab[i] / q];
      if (id == UINT32_MAX) id = next++;
      cert.push_back(id);
    }
    std::uint32_t nb[kMaxLength];
    for (std::uint32_t i = ns_; i < nv_; ++i) {
      const std::uint32_t v = p.lab[i];
      std::size_t k = 0;
      for (const std::uint32_t* it = g_.neighbors_begin(v); it != g_.neighbors_end(v); ++it) nb[k++] = p.pos[*it];
      std::sort(nb, nb + k);
      cert.insert(cert.end(), nb, nb + k);
    }
    return cert;
  }

  static int divergence(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
    std::size_t i = 0;
    while (i < a.size() && i < b.size() && a[i] == b[i]) ++i;
    return static_cast<int>(i);
  }

  void add_generator(const std::vector<std::uint32_t>& from, const std::vector<std::uint32_t>& to) {
    std::vector<std::uint32_t> gamma(ns_);
    for (std::uint32_t i = 0; i < ns_; ++i) gamma[from[i]] = to[i];
    for (std::size_t l = 0; l < orbits_.size(); ++l) {
      for (std::uint32_t x = 0; x < ns_; ++x) orbits_[l].unite(x, gamma[x]);
      if (gamma[first_path_[l]] != first_path_[l]) break;
    }
    gens_.push_back(std::move(gamma));
  }

  int leaf(const Partition& p, bool eq_first, int best_cmp) {
    ++leaves_;
    auto cert = leaf_cert(p);
    if (!have_first_) {
      have_first_ = true;
      first_trace_ = best_trace_ = cur_trace_;
      first_path_ = best_path_ = cur_path_;
      first_lab_ = best_lab_ = p.lab;
      first_cert_ = cert;
      best_cert_ = std::move(cert);
      orbits_.assign(first_path_.size(), UnionFind(ns_));
      return -1;
    }
    if (eq_first && cert == first_cert_) {
      add_generator(first_lab_, p.lab);
      return divergence(cur_path_, first_path_);
    }
    int c = best_cmp;
    if (c == 0) c = cert < best_cert_ ? -1 : (cert == best_cert_ ? 0 : 1);
    if (c == 0) {
      add_generator(best_lab_, p.lab);
      return divergence(cur_path_, best_path_);
    }
    if (c > 0) {
      best_trace_ = cur_trace_;
      best_path_ = cur_path_;
      best_lab_ = p.lab;
      best_cert_ = std::move(cert);
    }
    return -1;
  }

  // Orbits of the found automorphisms that fix cur_path_[0..level) pointwise.
  void node_orbits(std::size_t level, UnionFind& uf) const {
    uf = UnionFind(ns_);
    for (const auto& gamma : gens_) {
      bool fixes = true;
      for (std::size_t i = 0; i < level && fixes; ++i) fixes = gamma[cur_path_[i]] == cur_path_[i];
      if (!fixes) continue;
      for (std::uint32_t x = 0; x < ns_; ++x) uf.unite(x, gamma[x]);
    }
  }

  // eq_first / best_cmp describe this node's trace prefix relative to the
  // first and best paths (best_cmp: -1 below, 0 equal, 1 above).
  int dfs(int level, const Partition& p, bool on_first, bool eq_first, int best_cmp) {
    ++nodes_;
    if (p.cells == nv_) return leaf(p, eq_first, best_cmp);
    const std::uint32_t t = target_cell(p);
    std::vector<std::uint32_t> children(p.lab.begin() + t, p.lab.begin() + t + p.cell_len[t]);
    std::sort(children.begin(), children.end());
    const auto lv = static_cast<std::size_t>(level);
    std::vector<std::uint32_t> explored;
    UnionFind local;
    std::size_t local_gens = SIZE_MAX;
    Partition child;
    for (std::uint32_t w : children) {
      if (have_first_) {
        // A child in the same orbit as an explored sibling (under automorphisms
        // fixing this node) roots an isomorphic subtree.
        UnionFind* uf = nullptr;
        if (on_first) {
          uf = &orbits_[lv];
        } else {
          if (local_gens != gens_.size()) {
            cur_path_.resize(lv);
            node_orbits(lv, local);
            local_gens = gens_.size();
          }
          uf = &local;
        }
        const std::uint32_t r = uf->find(w);
        bool seen = false;
        for (std::uint32_t u : explored)
          if (uf->find(u) == r) {
            seen = true;
            break;
          }
        if (seen) continue;
      }
      explored.push_back(w);
      child = p;
      cur_path_.resize(lv + 1);
      cur_path_[lv] = w;
      cur_trace_.resize(lv + 2);
      cur_trace_[lv + 1].clear();

      // Recomputed per child: a better leaf may have been found below this node.
      int cmp = 0;
      if (have_first_) {
        for (std::size_t i = 0; i <= lv; ++i) {
          if (i >= best_trace_.size()) {
            cmp = 1;
            break;
          }
          if (cur_trace_[i] != best_trace_[i]) {
            cmp = cur_trace_[i] < best_trace_[i] ? -1 : 1;
            break;
          }
        }
      }
      TraceCursor tc;
      tc.record = &cur_trace_[lv + 1];
      if (have_first_) {
        tc.eq_first = eq_first && first_trace_.size() > lv + 1;
        if (tc.eq_first) tc.first = &first_trace_[lv + 1];
        tc.best_cmp = cmp;
        if (cmp == 0) {
          if (best_trace_.size() > lv + 1)
            tc.best = &best_trace_[lv + 1];
          else
            tc.best_cmp = 1;
        }
      } else {
        tc.eq_first = false;
        tc.best_cmp = 1;
      }
      if (!ref_.individualize(child, w, tc)) continue;
      const bool child_first = on_first && (!have_first_ || w == first_path_[lv]);
      const int r = dfs(level + 1, child, child_first, have_first_ ? tc.eq_first : true, have_first_ ? tc.best_cmp : 0);
      if (r >= 0 && r < level) return r;
    }
    return -1;
  }
};

std::string hex_digest(const unsigned char* md, unsigned len) {
  static const char* digits = "0123456789abcdef";
  std::string s;
  s.reserve(len * 2);
  for (unsigned i = 0; i < len; ++i) {
    s += digits[md[i] >> 4];
    s += digits[md[i] & 15];
  }
  return s;
}

std::string isometry_key(const Isometry& g) {
  std::string k(g.coord_perm().begin(), g.coord_perm().end());
  k.append(g.symbol_perms().begin(), g.symbol_perms().end());
  return k;
}

}  // namespace

std::string certificate(const Code& c) {
  std::vector<unsigned char> buf;
  const std::uint64_t m = c.size();
  buf.push_back(static_cast<unsigned char>(c.q()));
  buf.push_back(static_cast<unsigned char>(c.n()));
  for (int i = 0; i < 8; ++i) buf.push_back(static_cast<unsigned char>(m >> (8 * i)));
  buf.insert(buf.end(), c.flat().begin(), c.flat().end());
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned len = 0;
  if (EVP_Digest(buf.data(), buf.size(), md, &len, EVP_sha256(), nullptr) != 1) throw Error("SHA-256 digest failed");
  return hex_digest(md, len);
}

CanonicalForm canonical_form(const Code& c, CanonStats* stats) {
  const ColoredGraph g = encode_graph(c);
  Search s(g);
  s.run();
  const int q = c.q(), n = c.n();
  const auto ns = static_cast<std::uint32_t>(g.symbol_vertices());

  // Coordinates ranked by first appearance in the canonical leaf, symbols by position.
  std::vector<std::uint8_t> pi(static_cast<std::size_t>(n), 0xff);
  std::vector<std::uint8_t> sym(static_cast<std::size_t>(n * q));
  std::vector<int> seen(static_cast<std::size_t>(n), 0);
  int next = 0;
  for (std::uint32_t i = 0; i < ns; ++i) {
    const std::uint32_t v = s.best_lab_[i];
    const int coord = static_cast<int>(v) / q;
    if (pi[static_cast<std::size_t>(coord)] == 0xff) pi[static_cast<std::size_t>(coord)] = static_cast<std::uint8_t>(next++);
    const int target = pi[static_cast<std::size_t>(coord)];
    sym[static_cast<std::size_t>(target * q + static_cast<int>(v) % q)] = static_cast<std::uint8_t>(seen[static_cast<std::size_t>(coord)]++);
  }
  CanonicalForm out;
  out.to_canon = Isometry(q, n, std::move(pi), std::move(sym));
  out.canon = apply_isometry(out.to_canon, c);
  out.cert = certificate(out.canon);

  for (const auto& gamma : s.gens_) {
    std::vector<std::uint8_t> gp(static_cast<std::size_t>(n));
    std::vector<std::uint8_t> gs(static_cast<std::size_t>(n * q));
    for (int i = 0; i < n; ++i) {
      const int j = static_cast<int>(gamma[static_cast<std::size_t>(i * q)]) / q;
      gp[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(j);
      for (int a = 0; a < q; ++a)
        gs[static_cast<std::size_t>(j * q + a)] = static_cast<std::uint8_t>(gamma[static_cast<std::size_t>(i * q + a)] % static_cast<std::uint32_t>(q));
    }
    out.aut_gens.emplace_back(q, n, std::move(gp), std::move(gs));
  }

  out.aut_order = 1;
  for (std::size_t l = 0; l < s.orbits_.size(); ++l) {
    const std::uint32_t r = s.orbits_[l].find(s.first_path_[l]);
    std::uint64_t sz = 0;
    for (std::uint32_t x = 0; x < ns; ++x)
      if (s.orbits_[l].find(x) == r) ++sz;
    out.aut_order *= sz;
  }
  if (stats) {
    stats->nodes += s.nodes_;
    stats->leaves += s.leaves_;
    stats->refinements += s.ref_.refinements;
  }
  return out;
}

std::optional<Isometry> find_isomorphism(const Code& c, const Code& d) {
  if (c.q() != d.q() || c.n() != d.n() || c.size() != d.size())
    throw ParameterError("find_isomorphism: codes differ in (q, n, M)");
  const auto fc = canonical_form(c);
  const auto fd = canonical_form(d);
  if (fc.cert != fd.cert || fc.canon != fd.canon) return std::nullopt;
  Isometry g = fd.to_canon.inverse().compose(fc.to_canon);
  if (apply_isometry(g, c) != d) throw ConsistencyError("find_isomorphism: composed isometry does not map C to D");
  return g;
}

std::vector<Isometry> group_elements(int q, int n, const std::vector<Isometry>& gens, std::uint64_t cap) {
  std::vector<Isometry> elems{Isometry::identity(q, n)};
  std::unordered_set<std::string> seen{isometry_key(elems[0])};
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (const auto& g : gens) {
      Isometry h = g.compose(elems[i]);
      if (seen.insert(isometry_key(h)).second) {
        if (elems.size() >= cap) throw GuardrailError("group has more than " + std::to_string(cap) + " elements");
        elems.push_back(std::move(h));
      }
    }
  }
  return elems;
}

void IsometryCoset::enumerate(const std::function<void(const Isometry&)>& visit, std::uint64_t cap) const {
  if (order_ > BigInt(cap)) throw GuardrailError("coset of size " + to_string(order_) + " exceeds cap " + std::to_string(cap));
  const auto elems = group_elements(g0_.q(), g0_.n(), gens_, cap);
  if (BigInt(elems.size()) != order_)
    throw ConsistencyError("automorphism generators produce " + std::to_string(elems.size()) + " elements, expected " + to_string(order_));
  for (const auto& h : elems) visit(h.compose(g0_));
}

IsometryCoset isometry_coset(const Code& c, const Code& d) {
  auto g0 = find_isomorphism(c, d);
  if (!g0) throw ValidationError("isometry_coset: codes are inequivalent");
  auto fd = canonical_form(d);
  return IsometryCoset(std::move(*g0), std::move(fd.aut_gens), std::move(fd.aut_order));
}

}  // namespace mds
