#include "mds/registry.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>

#include "mds/canonical.hpp"
#include "mds/code_io.hpp"
#include "mds/error.hpp"

namespace mds {

namespace fs = std::filesystem;

std::optional<std::size_t> PartitionSet::find(std::span<const std::uint32_t> ids) const {
  std::size_t lo = 0, hi = size();
  while (lo < hi) {
    const std::size_t mid = (lo + hi) / 2;
    auto p = partition(mid);
    if (std::lexicographical_compare(p.begin(), p.end(), ids.begin(), ids.end()))
      lo = mid + 1;
    else
      hi = mid;
  }
  if (lo < size() && std::ranges::equal(partition(lo), ids)) return lo;
  return std::nullopt;
}

std::optional<std::uint32_t> PartitionSet::block_id(const std::vector<std::uint32_t>& block) const {
  auto it = std::lower_bound(blocks.begin(), blocks.end(), block);
  if (it == blocks.end() || *it != block) return std::nullopt;
  return static_cast<std::uint32_t>(it - blocks.begin());
}

PartitionSet PartitionSet::normalize(int q, std::vector<std::vector<std::uint32_t>> blocks, std::vector<std::uint32_t> flat) {
  if (q <= 0 || flat.size() % static_cast<std::size_t>(q) != 0) throw ParameterError("partition set: bad flat size");
  const std::size_t uq = static_cast<std::size_t>(q);
  for (auto id : flat)
    if (id >= blocks.size()) throw ValidationError("partition set: block id out of range");

  // Renumber blocks in lexicographic order, dropping unused ones.
  std::vector<char> used(blocks.size(), 0);
  for (auto id : flat) used[id] = 1;
  std::vector<std::uint32_t> order;
  for (std::uint32_t b = 0; b < blocks.size(); ++b)
    if (used[b]) order.push_back(b);
  std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) { return blocks[a] < blocks[b]; });
  std::vector<std::uint32_t> new_id(blocks.size(), 0);
  PartitionSet ps;
  ps.q = q;
  ps.blocks.reserve(order.size());
  for (std::uint32_t i = 0; i < order.size(); ++i) {
    if (i && blocks[order[i]] == ps.blocks.back()) {
      new_id[order[i]] = static_cast<std::uint32_t>(ps.blocks.size() - 1);
      continue;
    }
    new_id[order[i]] = static_cast<std::uint32_t>(ps.blocks.size());
    ps.blocks.push_back(std::move(blocks[order[i]]));
  }
  for (auto& id : flat) id = new_id[id];

  const std::size_t count = flat.size() / uq;
  for (std::size_t p = 0; p < count; ++p) std::sort(flat.begin() + static_cast<std::ptrdiff_t>(p * uq), flat.begin() + static_cast<std::ptrdiff_t>((p + 1) * uq));
  std::vector<std::uint32_t> idx(count);
  std::iota(idx.begin(), idx.end(), 0u);
  auto row = [&](std::uint32_t p) { return flat.data() + static_cast<std::size_t>(p) * uq; };
  std::sort(idx.begin(), idx.end(), [&](std::uint32_t a, std::uint32_t b) { return std::lexicographical_compare(row(a), row(a) + uq, row(b), row(b) + uq); });
  ps.flat.reserve(flat.size());
  for (std::size_t i = 0; i < count; ++i) {
    if (i && std::equal(row(idx[i]), row(idx[i]) + uq, row(idx[i - 1]))) continue;
    ps.flat.insert(ps.flat.end(), row(idx[i]), row(idx[i]) + uq);
  }
  return ps;
}

LabeledPartition PartitionSet::labeled(std::size_t p) const {
  LabeledPartition lp;
  for (auto id : partition(p)) lp.parts.push_back(blocks[id]);
  return lp;
}

std::string to_string(Provenance p) { return p == Provenance::seed ? "seed" : "generated"; }

Provenance parse_provenance(const std::string& s) {
  if (s == "seed") return Provenance::seed;
  if (s == "generated") return Provenance::generated;
  throw FormatError("unknown provenance '" + s + "'");
}

bool Registry::insert(ClassRecord r) {
  if (by_cert_.count(r.cert)) return false;
  by_cert_.emplace(r.cert, records_.size());
  records_.push_back(std::move(r));
  return true;
}

std::optional<std::size_t> Registry::find(const std::string& cert) const {
  auto it = by_cert_.find(cert);
  if (it == by_cert_.end()) return std::nullopt;
  return it->second;
}

void Registry::sort_by_cert() {
  std::sort(records_.begin(), records_.end(), [](const ClassRecord& a, const ClassRecord& b) { return a.cert < b.cert; });
  reindex();
}

void Registry::reindex() {
  by_cert_.clear();
  for (std::size_t i = 0; i < records_.size(); ++i) by_cert_.emplace(records_[i].cert, i);
}

BigInt Registry::labeled_total() const {
  const BigInt g = isometry_group_order(q_, n_);
  BigInt total = 0;
  for (const auto& r : records_) total += exact_div(g, r.aut_order, "labeled total");
  return total;
}

bool Registry::step_done() const {
  return std::all_of(records_.begin(), records_.end(), [](const ClassRecord& r) { return r.num_partitions.has_value(); });
}

fs::path registry_dir(const fs::path& root, int q, int n, int k) {
  return root / std::to_string(q) / (std::to_string(n) + "_" + std::to_string(k));
}

bool registry_exists(const fs::path& root, int q, int n, int k) { return fs::exists(registry_dir(root, q, n, k) / "ledger.txt"); }

std::string format_partitions(const PartitionSet& ps) {
  std::string out;
  for (std::size_t p = 0; p < ps.size(); ++p) {
    bool first_block = true;
    for (auto id : ps.partition(p)) {
      if (!first_block) out += " | ";
      first_block = false;
      bool first = true;
      for (auto w : ps.blocks[id]) {
        if (!first) out += ' ';
        first = false;
        out += std::to_string(w);
      }
    }
    out += '\n';
  }
  return out;
}

PartitionSet parse_partitions(int q, const std::string& text) {
  std::vector<std::vector<std::uint32_t>> blocks;
  std::map<std::vector<std::uint32_t>, std::uint32_t> ids;
  std::vector<std::uint32_t> flat;
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::vector<std::uint32_t> block;
    int parts = 0;
    auto finish = [&]() {
      std::sort(block.begin(), block.end());
      auto [it, fresh] = ids.emplace(block, static_cast<std::uint32_t>(blocks.size()));
      if (fresh) blocks.push_back(block);
      flat.push_back(it->second);
      block.clear();
      ++parts;
    };
    std::string tok;
    while (ls >> tok) {
      if (tok == "|") {
        finish();
        continue;
      }
      try {
        std::size_t used = 0;
        const unsigned long v = std::stoul(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        block.push_back(static_cast<std::uint32_t>(v));
      } catch (const std::exception&) {
        throw FormatError("partitions line " + std::to_string(lineno) + ": bad token '" + tok + "'");
      }
    }
    finish();
    if (parts != q) throw FormatError("partitions line " + std::to_string(lineno) + ": expected " + std::to_string(q) + " blocks, got " + std::to_string(parts));
  }
  return PartitionSet::normalize(q, std::move(blocks), std::move(flat));
}

namespace {

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path.string());
  out << text;
  if (!out) throw Error("write failed for " + path.string());
}

std::string read_text(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::string> split_tabs(const std::string& line) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    auto pos = line.find('\t', start);
    out.push_back(line.substr(start, pos == std::string::npos ? std::string::npos : pos - start));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return out;
}

void check_partitions(const Registry& reg, const ClassRecord& r, std::size_t id) {
  const auto& ps = *r.partitions;
  const std::string where = "class " + std::to_string(id) + " of (" + std::to_string(reg.n()) + "," + std::to_string(reg.k()) + ")_" + std::to_string(reg.q());
  if (ps.size() != r.num_partitions.value_or(0)) throw ConsistencyError(where + ": stored partition count differs from index");
  std::vector<char> ok(ps.blocks.size(), 0);
  for (std::size_t b = 0; b < ps.blocks.size(); ++b) {
    const auto& blk = ps.blocks[b];
    if (!blk.empty() && blk.back() >= r.rep.size()) throw ConsistencyError(where + ": block word index out of range");
    auto prof = is_mds(r.rep.subset(blk));
    ok[b] = prof.is_mds && prof.k == reg.k() - 1;
    if (!ok[b]) throw ConsistencyError(where + ": block " + std::to_string(b) + " is not an MDS code of dimension " + std::to_string(reg.k() - 1));
  }
  std::vector<std::uint32_t> seen(r.rep.size(), 0);
  for (std::size_t p = 0; p < ps.size(); ++p) {
    std::size_t covered = 0;
    for (auto b : ps.partition(p))
      for (auto w : ps.blocks[b]) {
        if (seen[w] == p + 1) throw ConsistencyError(where + ": partition " + std::to_string(p) + " has overlapping blocks");
        seen[w] = static_cast<std::uint32_t>(p + 1);
        ++covered;
      }
    if (covered != r.rep.size()) throw ConsistencyError(where + ": partition " + std::to_string(p) + " does not cover the code");
  }
}

}  // namespace

void save_registry(const fs::path& root, const Registry& reg, const SaveOptions& opt) {
  const fs::path dir = registry_dir(root, reg.q(), reg.n(), reg.k());
  fs::create_directories(dir.parent_path());
  const fs::path tmp = dir.parent_path() / (dir.filename().string() + ".tmp");
  fs::remove_all(tmp);
  fs::create_directories(tmp / "partitions");

  std::string index = "id\tfile\taut_order\tnum_partitions\textendable\n";
  bool all_stored = true;
  for (std::size_t id = 0; id < reg.records().size(); ++id) {
    const auto& r = reg.records()[id];
    const std::string file = std::to_string(id) + ".mds";
    write_code_file(tmp / file, r.rep, {"cert " + r.cert, "aut_order " + to_string(r.aut_order), "provenance " + to_string(r.provenance)});
    index += std::to_string(id) + "\t" + file + "\t" + to_string(r.aut_order) + "\t";
    if (r.num_partitions) {
      index += std::to_string(*r.num_partitions) + "\t" + (r.extendable() ? "yes" : "no");
      const std::uint64_t entries = *r.num_partitions * r.rep.size();
      if (r.partitions && entries <= opt.max_partition_entries)
        write_text(tmp / "partitions" / (std::to_string(id) + ".txt"), format_partitions(*r.partitions));
      else
        all_stored = false;
    } else {
      index += "-\t-";
    }
    index += "\n";
  }
  write_text(tmp / "index.tsv", index);

  std::map<std::string, std::string> ledger = reg.meta();
  ledger["q"] = std::to_string(reg.q());
  ledger["n"] = std::to_string(reg.n());
  ledger["k"] = std::to_string(reg.k());
  ledger["classes"] = std::to_string(reg.size());
  ledger["labeled_total"] = to_string(reg.labeled_total());
  ledger["step"] = reg.step_done() ? "done" : "pending";
  if (reg.step_done()) ledger["partitions_stored"] = all_stored ? "yes" : "no";
  std::string text;
  for (const auto& [key, value] : ledger) text += key + "=" + value + "\n";
  write_text(tmp / "ledger.txt", text);

  fs::remove_all(dir);
  fs::rename(tmp, dir);
}

RegistrySummary summarize_registry(const fs::path& root, int q, int n, int k) {
  const fs::path dir = registry_dir(root, q, n, k);
  RegistrySummary out;
  std::istringstream ledger(read_text(dir / "ledger.txt"));
  std::string line;
  while (std::getline(ledger, line)) {
    auto eq = line.find('=');
    if (eq != std::string::npos) out.ledger[line.substr(0, eq)] = line.substr(eq + 1);
  }
  out.step_done = out.ledger.count("step") && out.ledger.at("step") == "done";
  std::istringstream index(read_text(dir / "index.tsv"));
  std::getline(index, line);
  while (std::getline(index, line)) {
    if (line.empty()) continue;
    ++out.classes;
    const auto cols = split_tabs(line);
    if (cols.size() == 5 && cols[4] == "yes") ++out.extendable;
  }
  return out;
}

Registry load_registry(const fs::path& root, int q, int n, int k, const LoadOptions& opt) {
  const fs::path dir = registry_dir(root, q, n, k);
  if (!fs::exists(dir / "ledger.txt")) throw DependencyError("no registry for (" + std::to_string(n) + "," + std::to_string(k) + ")_" + std::to_string(q) + " under " + root.string());
  Registry reg(q, n, k);

  {
    std::istringstream in(read_text(dir / "ledger.txt"));
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      auto eq = line.find('=');
      if (eq == std::string::npos) throw FormatError((dir / "ledger.txt").string() + ": bad line '" + line + "'");
      reg.meta()[line.substr(0, eq)] = line.substr(eq + 1);
    }
  }
  const bool partitions_stored = reg.meta().count("partitions_stored") && reg.meta().at("partitions_stored") == "yes";

  std::istringstream index(read_text(dir / "index.tsv"));
  std::string line;
  std::getline(index, line);
  if (line != "id\tfile\taut_order\tnum_partitions\textendable") throw FormatError((dir / "index.tsv").string() + ": bad header");
  std::size_t lineno = 1;
  while (std::getline(index, line)) {
    ++lineno;
    if (line.empty()) continue;
    const auto cols = split_tabs(line);
    const std::string where = (dir / "index.tsv").string() + ":" + std::to_string(lineno);
    if (cols.size() != 5) throw FormatError(where + ": expected 5 columns");
    if (cols[0] != std::to_string(reg.size())) throw FormatError(where + ": ids must be consecutive from 0");

    ClassRecord r;
    CodeFile cf;
    try {
      cf = read_code_file(dir / cols[1]);
    } catch (const FormatError& e) {
      throw FormatError(where + ": " + e.what());
    }
    r.rep = std::move(cf.code);
    if (r.rep.q() != q || r.rep.n() != n) throw ConsistencyError((dir / cols[1]).string() + ": wrong parameters");
    r.aut_order = parse_bigint(cols[2]);
    if (cols[3] != "-") {
      r.num_partitions = std::stoull(cols[3]);
      const std::string expect = *r.num_partitions > 0 ? "yes" : "no";
      if (cols[4] != expect) throw ConsistencyError(where + ": extendable flag disagrees with partition count");
    }
    std::string stored_cert;
    for (const auto& c : cf.comments) {
      if (c.rfind("cert ", 0) == 0) stored_cert = c.substr(5);
      if (c.rfind("provenance ", 0) == 0) r.provenance = parse_provenance(c.substr(11));
      if (c.rfind("aut_order ", 0) == 0 && parse_bigint(c.substr(10)) != r.aut_order)
        throw ConsistencyError((dir / cols[1]).string() + ": aut_order comment disagrees with index");
    }
    r.cert = certificate(r.rep);
    if (stored_cert != r.cert) throw ConsistencyError((dir / cols[1]).string() + ": certificate mismatch (file modified?)");
    const auto prof = is_mds(r.rep);
    if (!prof.is_mds || prof.k != k) throw ConsistencyError((dir / cols[1]).string() + ": not an (" + std::to_string(n) + "," + std::to_string(k) + ") MDS code");

    if (opt.partitions && partitions_stored && r.num_partitions) {
      const fs::path pf = dir / "partitions" / (cols[0] + ".txt");
      try {
        r.partitions = parse_partitions(q, read_text(pf));
      } catch (const FormatError& e) {
        throw FormatError(pf.string() + ": " + e.what());
      }
      if (r.partitions->size() != *r.num_partitions) throw ConsistencyError(pf.string() + ": holds " + std::to_string(r.partitions->size()) + " partitions, index says " + cols[3]);
    }
    if (!reg.insert(std::move(r))) throw ConsistencyError(where + ": duplicate class");
  }

  for (std::size_t i = 1; i < reg.size(); ++i)
    if (!(reg.records()[i - 1].cert < reg.records()[i].cert)) throw ConsistencyError((dir / "index.tsv").string() + ": records not ordered by certificate");
  if (reg.meta().count("classes") && reg.meta().at("classes") != std::to_string(reg.size()))
    throw ConsistencyError((dir / "ledger.txt").string() + ": class count disagrees with index");
  const BigInt total = reg.labeled_total();
  if (!reg.meta().count("labeled_total") || parse_bigint(reg.meta().at("labeled_total")) != total)
    throw ConsistencyError((dir / "ledger.txt").string() + ": labeled_total disagrees with recomputed value " + to_string(total));

  if (opt.deep_verify) {
    for (std::size_t id = 0; id < reg.size(); ++id) {
      const auto& r = reg.records()[id];
      const auto cf = canonical_form(r.rep);
      const std::string where = (dir / (std::to_string(id) + ".mds")).string();
      if (cf.canon != r.rep) throw ConsistencyError(where + ": representative is not in canonical form");
      if (cf.aut_order != r.aut_order) throw ConsistencyError(where + ": aut_order " + to_string(r.aut_order) + " but recomputed " + to_string(cf.aut_order));
      if (r.partitions) check_partitions(reg, r, id);
    }
  }
  return reg;
}

}  // namespace mds
