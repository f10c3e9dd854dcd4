#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "mds/bigint.hpp"
#include "mds/code.hpp"

namespace mds {

/// Unordered partitions of one representative into lower-dimensional MDS
/// subcodes. Blocks are stored once; a partition is q block ids.
struct PartitionSet {
  int q = 0;
  std::vector<std::vector<std::uint32_t>> blocks;  // sorted word indices, lexicographic order
  std::vector<std::uint32_t> flat;                 // q ascending block ids per partition, partitions sorted

  std::size_t size() const { return q == 0 ? 0 : flat.size() / static_cast<std::size_t>(q); }
  std::span<const std::uint32_t> partition(std::size_t i) const {
    return {flat.data() + i * static_cast<std::size_t>(q), static_cast<std::size_t>(q)};
  }
  /// Position of a partition given as q ascending block ids, or nullopt.
  std::optional<std::size_t> find(std::span<const std::uint32_t> ids) const;
  std::optional<std::uint32_t> block_id(const std::vector<std::uint32_t>& block) const;

  /// Sorts ids within partitions, sorts and dedups partitions, drops unused
  /// blocks and renumbers the rest in lexicographic order.
  static PartitionSet normalize(int q, std::vector<std::vector<std::uint32_t>> blocks, std::vector<std::uint32_t> flat);

  /// Part i of partition p as a LabeledPartition (labels in block order).
  LabeledPartition labeled(std::size_t p) const;
};

enum class Provenance { generated, seed };
std::string to_string(Provenance p);
Provenance parse_provenance(const std::string& s);

struct ClassRecord {
  Code rep;
  std::string cert;
  BigInt aut_order;
  std::optional<std::uint64_t> num_partitions;
  std::optional<PartitionSet> partitions;
  Provenance provenance = Provenance::generated;

  bool extendable() const { return num_partitions.value_or(0) > 0; }
};

class Registry {
 public:
  Registry() = default;
  Registry(int q, int n, int k) : q_(q), n_(n), k_(k) {}

  int q() const { return q_; }
  int n() const { return n_; }
  int k() const { return k_; }

  const std::vector<ClassRecord>& records() const { return records_; }
  std::vector<ClassRecord>& records() { return records_; }
  std::size_t size() const { return records_.size(); }

  /// Insert-if-absent keyed by certificate.
  bool insert(ClassRecord r);
  std::optional<std::size_t> find(const std::string& cert) const;
  /// Orders records by certificate; ids are positions after this call.
  void sort_by_cert();

  /// Sum over records of |G_n| / aut_order (exact; corruption raises).
  BigInt labeled_total() const;
  /// True once every record has a partition count.
  bool step_done() const;

  std::map<std::string, std::string>& meta() { return meta_; }
  const std::map<std::string, std::string>& meta() const { return meta_; }

 private:
  void reindex();

  int q_ = 0, n_ = 0, k_ = 0;
  std::vector<ClassRecord> records_;
  std::unordered_map<std::string, std::size_t> by_cert_;
  std::map<std::string, std::string> meta_;
};

/// `<root>/<q>/<n>_<k>`.
std::filesystem::path registry_dir(const std::filesystem::path& root, int q, int n, int k);
bool registry_exists(const std::filesystem::path& root, int q, int n, int k);

struct SaveOptions {
  /// Partition files are written only if (partitions x code size) is at most this.
  std::uint64_t max_partition_entries = std::uint64_t{1} << 26;
};

/// Writes index.tsv, one .mds per class, partitions/<id>.txt and ledger.txt.
/// The directory is replaced atomically (written beside it, then renamed).
void save_registry(const std::filesystem::path& root, const Registry& reg, const SaveOptions& opt = {});

struct LoadOptions {
  bool partitions = true;
  /// Recompute canonical forms, MDS checks and partition validity.
  bool deep_verify = false;
};

/// Throws FormatError on malformed files and ConsistencyError when the
/// stored totals, certificates or (with deep_verify) canonical forms disagree.
Registry load_registry(const std::filesystem::path& root, int q, int n, int k, const LoadOptions& opt = {});

/// Ledger and index counts of a stored registry, read without validation.
struct RegistrySummary {
  std::map<std::string, std::string> ledger;
  std::size_t classes = 0;
  std::size_t extendable = 0;
  bool step_done = false;
};
RegistrySummary summarize_registry(const std::filesystem::path& root, int q, int n, int k);

/// One line per partition: q blocks of word indices separated by `|`.
std::string format_partitions(const PartitionSet& ps);
PartitionSet parse_partitions(int q, const std::string& text);

}  // namespace mds
