#include "mds/chain.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <map>
#include <regex>
#include <set>
#include <sstream>

#include "mds/error.hpp"
#include "mds/extension.hpp"
#include "mds/latin.hpp"
#include "mds/linear.hpp"
#include "mds/registry.hpp"
#include "mds/seeds.hpp"

namespace mds {

namespace fs = std::filesystem;

std::string to_string(Bootstrap b) { return b == Bootstrap::latin ? "latin" : "trivial"; }

Bootstrap parse_bootstrap(const std::string& s) {
  if (s == "latin") return Bootstrap::latin;
  if (s == "trivial") return Bootstrap::trivial;
  throw ParameterError("unknown bootstrap mode '" + s + "' (expected latin or trivial)");
}

namespace {

std::string key(int n, int k, int q) { return "(" + std::to_string(n) + "," + std::to_string(k) + ")_" + std::to_string(q); }

// q = 5 and q = 7: every code with d >= 3 is equivalent to a linear one and
// the d = 3 classes are unique, so the extended RS code is the whole seed,
// and past n = q+1 there is none (linear MDS conjecture, proved for prime q).
bool rs_seeds_complete(int q) { return q == 5 || q == 7; }

}  // namespace

std::vector<ChainStart> chain_plan(const ChainConfig& cfg) {
  const int q = cfg.q;
  if (q < 2 || q > 64) throw ParameterError("q must be in 2..64");
  std::vector<int> ks = cfg.ks;
  if (ks.empty())
    for (int k = 2; k <= q; ++k) ks.push_back(k);
  std::sort(ks.begin(), ks.end());
  ks.erase(std::unique(ks.begin(), ks.end()), ks.end());
  const bool trivial_ok = q <= 5 || cfg.allow_large_trivial;
  std::vector<ChainStart> plan;
  for (int k : ks) {
    if (k < 2 || k > q) throw ParameterError("chain dimension " + std::to_string(k) + " outside 2.." + std::to_string(q));
    if (k == 2) {
      if (cfg.seeds && fs::is_directory(*cfg.seeds / "3_2"))
        plan.push_back({2, 3, ChainStart::Kind::seed});
      else if (cfg.bootstrap == Bootstrap::trivial) {
        if (!trivial_ok) throw ParameterError("trivial bootstrap enumerates every Latin square of order " + std::to_string(q) + "; use latin");
        plan.push_back({2, 2, ChainStart::Kind::full});
      } else {
        plan.push_back({2, 3, ChainStart::Kind::latin});
      }
    } else if (q <= 4 || (q == 5 && k == 3 && cfg.bootstrap == Bootstrap::trivial)) {
      plan.push_back({k, k, ChainStart::Kind::full});
    } else {
      plan.push_back({k, k + 2, ChainStart::Kind::seed});
    }
  }
  return plan;
}

namespace {

class ChainRunner {
 public:
  ChainRunner(const ChainConfig& cfg, const std::function<void(const std::string&)>& log) : cfg_(cfg), log_(log) {
    max_n_ = cfg.max_n > 0 ? cfg.max_n : cfg.q + 3;
    save_.max_partition_entries = cfg.max_partition_entries;
    step_.workers = std::max(1u, cfg.workers);
    step_.find.max_sets = cfg.max_sets;
  }

  ChainResult run() {
    const auto plan = chain_plan(cfg_);
    for (const auto& s : plan) {
      run_one(s);
      // Chain k+1 only reads the partitions of chain k.
      for (auto& [nk, reg] : regs_)
        if (nk.second < s.k)
          for (auto& r : reg.records()) r.partitions.reset();
    }
    result_.report = tables_report(cfg_.root, cfg_.q);
    const fs::path out = cfg_.root / std::to_string(cfg_.q) / "report.txt";
    std::ofstream(out) << result_.report;
    return std::move(result_);
  }

 private:
  void note(const std::string& s) const {
    if (log_) log_(s);
  }

  bool on_disk(int n, int k) const { return !cfg_.force && registry_exists(cfg_.root, cfg_.q, n, k); }

  Registry& load(int n, int k) {
    auto reg = load_registry(cfg_.root, cfg_.q, n, k);
    loaded_.insert({n, k});
    return regs_[{n, k}] = std::move(reg);
  }

  void store(Registry reg) {
    const std::pair<int, int> nk{reg.n(), reg.k()};
    save_registry(cfg_.root, reg, save_);
    loaded_.erase(nk);
    regs_[nk] = std::move(reg);
  }

  std::size_t classes_42() {
    if (auto it = regs_.find({4, 2}); it != regs_.end()) return it->second.size();
    if (registry_exists(cfg_.root, cfg_.q, 4, 2)) return summarize_registry(cfg_.root, cfg_.q, 4, 2).classes;
    return 1;  // unknown
  }

  Registry seed(int n, int k) {
    const int q = cfg_.q;
    const bool need_linear = q == 7 && n - k + 1 == 3;
    if (cfg_.seeds) {
      const fs::path dir = *cfg_.seeds / (std::to_string(n) + "_" + std::to_string(k));
      if (fs::is_directory(dir)) {
        auto reg = seed_registry(q, n, k, read_seed_dir(dir), need_linear);
        reg.meta()["seed_dir"] = dir.string();
        return reg;
      }
    }
    Registry reg(q, n, k);
    if (rs_seeds_complete(q)) {
      if (n <= q + 1) reg = seed_registry(q, n, k, {{rs_code(q, n, k), "rs " + std::to_string(q) + " " + std::to_string(n) + " " + std::to_string(k)}}, need_linear);
      reg.meta()["seed_dir"] = "generated";
    } else if (k >= 3 && classes_42() == 0) {
      // A code with d >= 3 shortens and punctures to a (4,2) code.
      reg.meta()["seed_dir"] = "none: no (4,2) code";
    } else {
      throw DependencyError("seed required for " + key(n, k, q) + ": pass a seed directory with " + std::to_string(n) + "_" + std::to_string(k) + "/");
    }
    reg.meta()["source"] = "seed";
    return reg;
  }

  void start(const ChainStart& s) {
    const int q = cfg_.q;
    if (on_disk(s.n, s.k)) {
      load(s.n, s.k);
      note(key(s.n, s.k, q) + ": loaded " + std::to_string(regs_.at({s.n, s.k}).size()) + " classes");
      return;
    }
    const auto t0 = std::chrono::steady_clock::now();
    Registry reg;
    switch (s.kind) {
      case ChainStart::Kind::full: reg = full_space_registry(q, s.n); break;
      case ChainStart::Kind::latin: reg = classify_latin_squares(q); break;
      case ChainStart::Kind::seed:
        reg = seed(s.n, s.k);
        if (s.k >= 3) reg.meta()["punctured_classes"] = std::to_string(punctured_class_count(reg));
        break;
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    reg.meta()["build_seconds"] = std::to_string(secs);
    note(key(s.n, s.k, q) + ": " + std::to_string(reg.size()) + " classes (" + reg.meta()["source"] + ")");
    store(std::move(reg));
  }

  const Registry* lower_for(int n, int k) {
    if (k < 3) return nullptr;
    auto it = regs_.find({n - 1, k - 1});
    if (it == regs_.end()) {
      if (!registry_exists(cfg_.root, cfg_.q, n - 1, k - 1))
        throw DependencyError("step " + key(n, k, cfg_.q) + " needs the partitions of " + key(n - 1, k - 1, cfg_.q) + ", which no chain produced");
      load(n - 1, k - 1);
      it = regs_.find({n - 1, k - 1});
    }
    const Registry& lower = it->second;
    if (!lower.step_done())
      throw DependencyError("step " + key(n, k, cfg_.q) + " needs the partitions of " + key(n - 1, k - 1, cfg_.q) + ", whose step has not run");
    for (const auto& r : lower.records())
      if (r.extendable() && !r.partitions)
        throw DependencyError("partitions of " + key(n - 1, k - 1, cfg_.q) +
                              " were not stored (over the storage cap); rerun that chain in the same invocation or raise the cap");
    return &lower;
  }

  void run_one(const ChainStart& s) {
    const int q = cfg_.q, k = s.k;
    start(s);
    for (int n = s.n;; ++n) {
      Registry& reg = regs_.at({n, k});
      if (reg.size() == 0) break;
      if (n + 1 > max_n_) {
        note(key(n, k, q) + ": stopping at the length cap " + std::to_string(max_n_));
        break;
      }
      StepRecord rec;
      rec.n = n;
      rec.k = k;
      rec.classes_in = reg.size();
      if (loaded_.count({n, k}) && reg.step_done() && on_disk(n + 1, k)) {
        const Registry& next = load(n + 1, k);
        rec.reused = true;
        rec.classes_out = next.size();
        for (const auto& r : reg.records()) rec.partitions += r.num_partitions.value_or(0);
        note(key(n, k, q) + " -> n+1: reused, " + std::to_string(rec.classes_out) + " classes");
      } else {
        const Registry* lower = lower_for(n, k);
        StepStats st;
        Registry next = extension_step(regs_.at({n, k}), lower, step_, &st);
        rec.classes_out = next.size();
        rec.partitions = st.partitions;
        rec.seconds = st.seconds;
        save_registry(cfg_.root, regs_.at({n, k}), save_);
        note(key(n, k, q) + " -> " + key(n + 1, k, q) + ": " + std::to_string(st.partitions) + " partitions, " + std::to_string(st.orbits) +
             " orbits, " + std::to_string(rec.classes_out) + " classes, " + std::to_string(st.seconds) + " s");
        store(std::move(next));
      }
      result_.steps.push_back(rec);
    }
  }

  const ChainConfig& cfg_;
  const std::function<void(const std::string&)>& log_;
  int max_n_ = 0;
  SaveOptions save_;
  StepOptions step_;
  std::map<std::pair<int, int>, Registry> regs_;
  std::set<std::pair<int, int>> loaded_;
  ChainResult result_;
};

}  // namespace

ChainResult run_chain(const ChainConfig& cfg, const std::function<void(const std::string&)>& log) {
  if (cfg.root.empty()) throw ParameterError("registry root not set");
  fs::create_directories(cfg.root / std::to_string(cfg.q));
  return ChainRunner(cfg, log).run();
}

std::string tables_report(const fs::path& root, int q) {
  const fs::path base = root / std::to_string(q);
  std::map<std::pair<int, int>, RegistrySummary> regs;
  if (fs::is_directory(base)) {
    static const std::regex name(R"((\d+)_(\d+))");
    for (const auto& e : fs::directory_iterator(base)) {
      std::smatch m;
      const std::string s = e.path().filename().string();
      if (!e.is_directory() || !std::regex_match(s, m, name)) continue;
      const int n = std::stoi(m[1]), k = std::stoi(m[2]);
      if (registry_exists(root, q, n, k)) regs[{n, k}] = summarize_registry(root, q, n, k);
    }
  }

  struct Cell {
    std::size_t value = 0;
    bool is_new = false;
  };
  std::map<std::pair<int, int>, Cell> classes, extendable;
  for (const auto& [nk, s] : regs) {
    const auto [n, k] = nk;
    if (k < 2 || k >= n) continue;
    const auto src = s.ledger.count("source") ? s.ledger.at("source") : "";
    classes[nk] = {s.classes, src == "extension" && k >= 3 && s.classes > 0};
    if (s.classes > 0 && s.step_done) extendable[nk] = {s.extendable, k >= 3 && n >= k + 2 && s.extendable > 0};
  }
  // A (k+1,k) class is extendable iff it is a puncture of a (k+2,k) class.
  for (const auto& [nk, s] : regs) {
    const auto [n, k] = nk;
    const std::pair<int, int> below{n - 1, k};
    if (k < 2 || k >= n - 1 || extendable.count(below) || !s.ledger.count("punctured_classes")) continue;
    extendable[below] = {static_cast<std::size_t>(std::stoull(s.ledger.at("punctured_classes"))), false};
  }

  auto render = [&](const std::string& title, const std::map<std::pair<int, int>, Cell>& cells) {
    std::ostringstream out;
    out << title << "\n";
    if (cells.empty()) {
      out << "(no registries)\n";
      return out.str();
    }
    int nmin = 1 << 30, nmax = 0, kmax = 2;
    for (const auto& [nk, c] : cells) {
      nmin = std::min(nmin, nk.first);
      nmax = std::max(nmax, nk.first);
      kmax = std::max(kmax, nk.second);
    }
    std::size_t w = 3;
    for (const auto& [nk, c] : cells) w = std::max(w, std::to_string(c.value).size());
    w += 2;
    auto pad = [&](const std::string& s) { return std::string(w > s.size() ? w - s.size() : 0, ' ') + s; };
    out << "n\\k";
    for (int k = 2; k <= kmax; ++k) out << pad(std::to_string(k));
    out << "  new\n";
    for (int n = nmin; n <= nmax; ++n) {
      std::string row = std::to_string(n);
      row += std::string(row.size() < 3 ? 3 - row.size() : 0, ' ');
      std::string marks;
      for (int k = 2; k <= kmax; ++k) {
        auto it = cells.find({n, k});
        row += it == cells.end() ? std::string(w, ' ') : pad(std::to_string(it->second.value));
        if (it != cells.end() && it->second.is_new) marks += (marks.empty() ? "" : ",") + std::to_string(k);
      }
      if (!marks.empty()) row += "  " + marks;
      while (!row.empty() && row.back() == ' ') row.pop_back();
      out << row << "\n";
    }
    return out.str();
  };
  return render("Equivalence classes of nontrivial (n,k)_" + std::to_string(q) + " MDS codes", classes) + "\n" +
         render("Extendable nontrivial (n,k)_" + std::to_string(q) + " MDS codes", extendable);
}

}  // namespace mds
