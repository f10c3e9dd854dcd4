#pragma once

#include <cstdint>
#include <string>

#include "mds/bigint.hpp"
#include "mds/isometry.hpp"
#include "mds/partitions.hpp"
#include "mds/registry.hpp"

namespace mds {

struct ConsistencyReport {
  bool pass = false;
  BigInt lhs;  // sum over new classes of |G_{n+1}| / |Aut|
  BigInt rhs;  // q! * sum over old classes of |G_n| N / |Aut|
  std::string detail;
};

/// Double count of the labeled (n+1,k) codes, exact. Missing partition
/// counts raise DependencyError; a non-dividing aut order is reported as a
/// failure, not thrown.
ConsistencyReport consistency_check(const Registry& old_reg, const Registry& new_reg);

struct StepOptions {
  unsigned workers = 1;
  FindOptions find;
};

struct StepStats {
  std::uint64_t partitions = 0;
  std::uint64_t orbits = 0;  // extensions actually built and canonized
  double seconds = 0;
};

/// Runs find_partitions on every representative of `reg` (storing the
/// partition sets and counts in it), builds one extension per Aut-orbit of
/// partitions, rejects isomorphs and returns the (n+1,k) registry. The
/// consistency check is a gate: on failure ConsistencyError is thrown and
/// `reg` is left untouched.
Registry extension_step(Registry& reg, const Registry* lower, const StepOptions& opt = {}, StepStats* stats = nullptr,
                        ConsistencyReport* report = nullptr);

/// Registry of the single full space A^n (k = n).
Registry full_space_registry(int q, int n);

/// Generators of Aut(rep): the full group for a full space, otherwise from
/// the canonical engine.
std::vector<Isometry> automorphism_generators(const Code& rep);

/// Representatives of the orbits of Aut(rep) on a partition set, as
/// partition indices in increasing order. Throws ConsistencyError if the set
/// is not closed under the generators or an orbit length does not divide
/// `aut_order`.
std::vector<std::size_t> partition_orbit_representatives(const Code& rep, const PartitionSet& ps, const std::vector<Isometry>& gens,
                                                         const BigInt& aut_order);

}  // namespace mds
