#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <vector>

#include "mds/code.hpp"
#include "mds/registry.hpp"

namespace mds {

/// One externally supplied class representative and where it came from.
struct SeedCode {
  Code code;
  std::string source;  // file name or "rs q n k"
};

/// Registry of the given seeds. Every code must be an (n,k)_q MDS code and
/// no two may be equivalent (ValidationError naming both sources). With
/// `require_linear` every seed must also test linear-equivalent.
/// Completeness of the list is trusted and recorded in the meta.
Registry seed_registry(int q, int n, int k, const std::vector<SeedCode>& seeds, bool require_linear);

/// Reads every `.mds` file of `dir` in name order.
std::vector<SeedCode> read_seed_dir(const std::filesystem::path& dir);

/// Registry holding the extended Reed-Solomon code alone.
Registry rs_seed_registry(int q, int n, int k);

/// Comment line written on generated seed files.
std::string rs_provenance(int q, int n, int k);

/// Number of classes among the codes obtained by puncturing the
/// representatives at one coordinate, i.e. the number of (n-1,k) classes
/// that extend into this registry. Coordinates in one Aut-orbit are
/// punctured once.
std::size_t punctured_class_count(const Registry& reg);

}  // namespace mds
