#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "mds/search.hpp"

namespace mds {

enum class Bootstrap { trivial, latin };
std::string to_string(Bootstrap b);
Bootstrap parse_bootstrap(const std::string& s);

struct ChainConfig {
  int q = 0;
  std::filesystem::path root;
  Bootstrap bootstrap = Bootstrap::trivial;
  /// Directory with one `<n>_<k>/` subdirectory of `.mds` files per seed
  /// registry. Without it, q = 5 and q = 7 use Reed-Solomon seeds.
  std::optional<std::filesystem::path> seeds;
  /// Dimensions to run; empty means 2..q.
  std::vector<int> ks;
  unsigned workers = 1;
  std::uint64_t max_sets = kDefaultMaxSets;
  std::uint64_t max_partition_entries = std::uint64_t{1} << 26;
  int max_n = 0;  // 0: q + 3
  /// Trivial bootstrap is refused above q = 5 unless this is set.
  bool allow_large_trivial = false;
  bool force = false;
};

/// Start of one fixed-k chain.
struct ChainStart {
  enum class Kind { full, latin, seed };
  int k = 0;
  int n = 0;
  Kind kind = Kind::full;
};

/// Dimension by dimension: full spaces for small q under trivial
/// bootstrap, reduced-square classification for k = 2 otherwise, and d = 3
/// seeds at n = k+2 for the remaining k.
std::vector<ChainStart> chain_plan(const ChainConfig& cfg);

struct StepRecord {
  int n = 0, k = 0;
  std::size_t classes_in = 0, classes_out = 0;
  std::uint64_t partitions = 0;
  double seconds = 0;
  bool reused = false;  // loaded from a completed step on disk
};

struct ChainResult {
  std::vector<StepRecord> steps;
  std::string report;  // tables_report for the root after the run
};

/// Runs every chain of the plan in order of k, each step (n,k) -> (n+1,k)
/// after step (n-1,k-1). A chain ends at the first empty registry or at
/// max_n. Completed steps found under the root are reused unless `force`.
/// Registries are saved after every step and the report is written to
/// `<root>/<q>/report.txt`.
ChainResult run_chain(const ChainConfig& cfg, const std::function<void(const std::string&)>& log = {});

/// Tables of class counts and extendable class counts for every registry
/// stored under `<root>/<q>`, rows n and columns k, with a `new` column
/// listing the k whose entry came from an extension step of this engine.
std::string tables_report(const std::filesystem::path& root, int q);

}  // namespace mds
