#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <span>
#include <vector>

namespace mds {

inline constexpr std::uint64_t kDefaultMaxSets = std::uint64_t{1} << 26;

struct ExactCoverInstance {
  std::size_t universe_size = 0;
  std::vector<std::vector<std::uint32_t>> sets;  // each sorted
};

/// Reads `u=<n>` followed by one set per line (space-separated elements).
ExactCoverInstance parse_exact_cover(std::istream& in);

/// Visits every exact cover once as the list of chosen set indices, ordered
/// by the smallest element each set covers. Branching is always on the
/// lowest uncovered element with candidate sets in index order, so the visit
/// order is a function of the instance alone. Returning false from `visit`
/// stops the search. Throws GuardrailError above `max_sets` sets and
/// ValidationError on out-of-range elements or duplicate sets.
std::uint64_t enumerate_exact_covers(const ExactCoverInstance& inst,
                                     const std::function<bool(std::span<const std::uint32_t>)>& visit,
                                     std::uint64_t max_sets = kDefaultMaxSets);

std::uint64_t count_exact_covers(const ExactCoverInstance& inst, std::uint64_t max_sets = kDefaultMaxSets);

/// Graph whose vertex set is split into parts; vertex (p, i) is the i-th
/// vertex of part p. Only edges between different parts exist.
class MultipartiteGraph {
 public:
  explicit MultipartiteGraph(std::vector<std::uint32_t> part_sizes);

  std::size_t parts() const { return sizes_.size(); }
  std::uint32_t part_size(std::size_t p) const { return sizes_[p]; }
  std::size_t vertices() const { return total_; }

  void add_edge(std::size_t p1, std::uint32_t i1, std::size_t p2, std::uint32_t i2);
  bool adjacent(std::size_t p1, std::uint32_t i1, std::size_t p2, std::uint32_t i2) const;
  /// Adds every cross-part edge.
  void make_complete();

  std::size_t id(std::size_t p, std::uint32_t i) const { return offset_[p] + i; }
  const std::uint64_t* row(std::size_t v) const { return rows_.data() + v * words_; }
  std::size_t words() const { return words_; }
  std::size_t offset(std::size_t p) const { return offset_[p]; }

 private:
  std::vector<std::uint32_t> sizes_;
  std::vector<std::size_t> offset_;
  std::size_t total_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> rows_;
};

/// Visits every clique with one vertex per part exactly once; the tuple is
/// indexed by part and holds the vertex index within that part. Parts are
/// searched in ascending size order (ties by part index).
std::uint64_t enumerate_partite_cliques(const MultipartiteGraph& g,
                                        const std::function<bool(std::span<const std::uint32_t>)>& visit);

}  // namespace mds
