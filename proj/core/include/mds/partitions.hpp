#pragma once

#include <cstdint>
#include <vector>

#include "mds/code.hpp"
#include "mds/registry.hpp"
#include "mds/search.hpp"

namespace mds {

struct FindStats {
  std::vector<std::size_t> part_counts;  // |S_j|
  std::uint64_t edges = 0;
  std::uint64_t candidates = 0;
  std::uint64_t covers = 0;
};

struct FindOptions {
  std::uint64_t max_sets = kDefaultMaxSets;
  /// Re-check every candidate subcode with the direct MDS test.
  bool validate_candidates = true;
};

/// All unordered partitions of the (n,k)_q MDS code `c` into (n,k-1)_q MDS
/// codes. For k >= 3, `lower` must be the complete (n-1,k-1) registry with
/// partition sets loaded; for k = 2 it is ignored (parts of the shortened
/// codes are single words).
PartitionSet find_partitions(const Code& c, const Registry* lower, const FindOptions& opt = {}, FindStats* stats = nullptr);

/// Partitions of every (n,2) representative, read off the punctured codes of
/// the (n+1,2) representatives through the full isometry cosets. Result i
/// belongs to lower.records()[i].
std::vector<PartitionSet> initial_k2_partitions(const Registry& upper, const Registry& lower);

/// Cross distance test with threshold t between two codes of equal length
/// and dimension kk, using projections onto kk-subsets of a fixed window so
/// that each test costs O(|a| * C(kk+t-1, kk) * n).
class ConflictIndex {
 public:
  ConflictIndex(const Code& part, int kk, int t);
  /// True when every word of `a` is at distance >= t from every word of the indexed code.
  bool far_from(const Code& a) const;

 private:
  const Code* part_;
  int kk_, t_;
  std::vector<std::vector<int>> subsets_;
  std::vector<std::vector<std::uint32_t>> tables_;  // per subset, q^kk entries
};

}  // namespace mds
