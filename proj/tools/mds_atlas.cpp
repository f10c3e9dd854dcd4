// mds-atlas: classification registries, reports and bounds from the command line.
//
// Exit status: 0 success, 1 verification or consistency failure, 2 usage or
// input error. Data goes to stdout (or files), diagnostics to stderr.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <regex>
#include <set>

#include "CLI11.hpp"
#include "mds/bounds.hpp"
#include "mds/canonical.hpp"
#include "mds/chain.hpp"
#include "mds/code_io.hpp"
#include "mds/error.hpp"
#include "mds/extension.hpp"
#include "mds/latin.hpp"
#include "mds/linear.hpp"
#include "mds/registry.hpp"
#include "mds/seeds.hpp"

namespace fs = std::filesystem;
using namespace mds;

namespace {

struct Options {
  std::string root = "atlas";
  unsigned workers = 1;
  std::uint64_t max_sets = kDefaultMaxSets;
  bool force = false;
  bool quiet = false;
};

void log(const Options& o, const std::string& s) {
  if (!o.quiet) std::cerr << s << "\n";
}

// Failures detected by `verify` are reported, then turned into exit 1.
struct VerifyFailed {};

int cmd_bootstrap(const Options& o, int q, bool latin) {
  const int n = latin ? 3 : 2;
  if (!o.force && registry_exists(o.root, q, n, 2)) {
    log(o, "(" + std::to_string(n) + ",2)_" + std::to_string(q) + " already present");
    return 0;
  }
  if (!latin && q > 5) throw ParameterError("trivial bootstrap is limited to q <= 5; use --latin");
  Registry reg = latin ? classify_latin_squares(q) : full_space_registry(q, 2);
  save_registry(o.root, reg);
  std::cout << "(" << n << ",2)_" << q << "\t" << reg.size() << " classes\n";
  return 0;
}

int cmd_extend(const Options& o, int q, int n, int k) {
  if (!o.force && registry_exists(o.root, q, n + 1, k)) {
    const auto s = summarize_registry(o.root, q, n, k);
    if (s.step_done) {
      log(o, "step (" + std::to_string(n) + "," + std::to_string(k) + ") already done");
      std::cout << "(" << n + 1 << "," << k << ")_" << q << "\t" << summarize_registry(o.root, q, n + 1, k).classes << " classes\n";
      return 0;
    }
  }
  Registry reg = load_registry(o.root, q, n, k, {.partitions = false});
  std::optional<Registry> lower;
  if (k >= 3) lower = load_registry(o.root, q, n - 1, k - 1);
  StepOptions opt;
  opt.workers = o.workers;
  opt.find.max_sets = o.max_sets;
  StepStats st;
  Registry next = extension_step(reg, lower ? &*lower : nullptr, opt, &st);
  save_registry(o.root, reg);
  save_registry(o.root, next);
  log(o, std::to_string(st.partitions) + " partitions, " + std::to_string(st.orbits) + " orbits, " + std::to_string(st.seconds) + " s");
  std::cout << "(" << n + 1 << "," << k << ")_" << q << "\t" << next.size() << " classes\n";
  return 0;
}

int cmd_canon(const std::string& file) {
  const auto cf = canonical_form(read_code_file(file).code);
  write_code(std::cout, cf.canon, {"cert " + cf.cert, "aut_order " + to_string(cf.aut_order)});
  return 0;
}

int cmd_iso(const std::string& a, const std::string& b) {
  const Code c = read_code_file(a).code, d = read_code_file(b).code;
  if (c.q() != d.q() || c.n() != d.n() || c.size() != d.size()) throw ParameterError("codes differ in q, n or size");
  if (auto g = find_isomorphism(c, d))
    std::cout << "equivalent\t" << g->to_string() << "\n";
  else
    std::cout << "inequivalent\n";
  return 0;
}

int cmd_verify(const Options& o, const std::string& root_arg) {
  const fs::path root = root_arg;
  if (!fs::is_directory(root)) throw ParameterError("no registry root at " + root.string());
  static const std::regex qname(R"(\d+)"), nkname(R"((\d+)_(\d+))");
  std::set<std::tuple<int, int, int>> keys;
  for (const auto& qd : fs::directory_iterator(root)) {
    if (!qd.is_directory() || !std::regex_match(qd.path().filename().string(), qname)) continue;
    const int q = std::stoi(qd.path().filename().string());
    for (const auto& e : fs::directory_iterator(qd.path())) {
      std::smatch m;
      const std::string s = e.path().filename().string();
      if (e.is_directory() && std::regex_match(s, m, nkname)) keys.insert({q, std::stoi(m[1]), std::stoi(m[2])});
    }
  }
  bool ok = true;
  std::size_t checked = 0;
  for (const auto& [q, n, k] : keys) {
    const std::string name = "(" + std::to_string(n) + "," + std::to_string(k) + ")_" + std::to_string(q);
    try {
      const Registry reg = load_registry(root, q, n, k, {.partitions = true, .deep_verify = true});
      std::string extra;
      if (reg.step_done() && keys.count({q, n + 1, k})) {
        const Registry next = load_registry(root, q, n + 1, k, {.partitions = false});
        const auto check = consistency_check(reg, next);
        if (!check.pass) throw ConsistencyError("double count against (" + std::to_string(n + 1) + "," + std::to_string(k) + "): " + check.detail);
        extra = ", double count ok";
      }
      ++checked;
      std::cout << "ok\t" << name << "\t" << reg.size() << " classes" << extra << "\n";
    } catch (const Error& e) {
      ok = false;
      std::cerr << "FAIL " << name << ": " << e.what() << "\n";
    }
  }
  log(o, std::to_string(checked) + " of " + std::to_string(keys.size()) + " registries verified");
  if (!ok) throw VerifyFailed{};
  return 0;
}

int cmd_bounds(const Options& o, const std::vector<int>& qs, int max_n, const std::string& tsv) {
  std::optional<fs::path> root;
  if (fs::is_directory(o.root)) root = o.root;
  const auto ledger = compute_bounds(root, qs, max_n);
  std::cout << table5_report(ledger);
  if (!tsv.empty()) std::ofstream(tsv) << table5_tsv(ledger);
  return 0;
}

int cmd_rs_seed(int q, int n, int k, const std::string& out) {
  const Code c = rs_code(q, n, k);
  const std::vector<std::string> comments{rs_provenance(q, n, k)};
  if (out.empty()) {
    write_code(std::cout, c, comments);
  } else {
    const fs::path dir = fs::path(out) / (std::to_string(n) + "_" + std::to_string(k));
    fs::create_directories(dir);
    write_code_file(dir / "rs.mds", c, comments);
    std::cout << (dir / "rs.mds").string() << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Classification of q-ary MDS codes up to equivalence", "mds-atlas"};
  app.set_config("--config", "", "INI/TOML file with option values; unknown keys are rejected");
  app.allow_config_extras(CLI::config_extras_mode::error);
  app.require_subcommand(1);

  Options o;
  app.add_option("--root", o.root, "Registry root")->envname("MDS_ATLAS_ROOT")->capture_default_str();
  app.add_option("--workers", o.workers, "Worker threads for extension steps")->check(CLI::Range(1u, 1024u));
  app.add_option("--max-sets", o.max_sets, "Cap on exact-cover candidate sets per representative");
  app.add_flag("--force", o.force, "Recompute completed steps");
  app.add_flag("--quiet", o.quiet, "No progress output");

  int q = 0, n = 0, k = 0, max_n = 0;
  std::vector<int> qs;
  std::vector<int> ks;
  std::string file1, file2, seeds, out, tsv, verify_root;
  bool latin = false, trivial = false, allow_large = false;

  auto* bootstrap = app.add_subcommand("bootstrap", "Build the k=2 starting registry");
  bootstrap->add_option("--q", q, "Alphabet size")->required()->check(CLI::Range(2, 64));
  auto* fl = bootstrap->add_flag("--latin", latin, "Classify Latin squares, (3,2)_q");
  bootstrap->add_flag("--trivial", trivial, "Full space A^2, q <= 5")->excludes(fl);

  auto* extend = app.add_subcommand("extend", "Run one extension step (n,k) -> (n+1,k)");
  extend->add_option("--q", q)->required()->check(CLI::Range(2, 64));
  extend->add_option("--n", n)->required()->check(CLI::Range(2, 63));
  extend->add_option("--k", k)->required()->check(CLI::Range(1, 63));

  auto* chain = app.add_subcommand("chain", "Run every chain for one q and write the report");
  chain->add_option("--q", q)->required()->check(CLI::Range(2, 64));
  chain->add_option("--seeds", seeds, "Seed directory with <n>_<k>/ subdirectories")->check(CLI::ExistingDirectory);
  auto* cl = chain->add_flag("--latin", latin, "Bootstrap k=2 from Latin squares (default for q > 5)");
  chain->add_flag("--trivial", trivial, "Bootstrap from full spaces (default for q <= 5)")->excludes(cl);
  chain->add_option("--k", ks, "Dimensions to run (default 2..q)");
  chain->add_option("--max-n", max_n, "Longest length to build (default q+3)");
  chain->add_flag("--allow-large-trivial", allow_large, "Permit trivial bootstrap above q = 5");

  auto* canon = app.add_subcommand("canon", "Print the canonical form of a code");
  canon->add_option("file", file1)->required()->check(CLI::ExistingFile);

  auto* iso = app.add_subcommand("iso", "Test two codes for equivalence");
  iso->add_option("file1", file1)->required()->check(CLI::ExistingFile);
  iso->add_option("file2", file2)->required()->check(CLI::ExistingFile);

  auto* verify = app.add_subcommand("verify", "Re-check every registry under a root");
  verify->add_option("root", verify_root)->required();

  auto* bounds = app.add_subcommand("bounds", "Class-count bounds for (n,n-1)_q codes");
  bounds->add_option("--q", qs, "Alphabet sizes")->required()->check(CLI::Range(2, 64));
  bounds->add_option("--max-n", max_n, "Largest length (default 7)");
  bounds->add_option("--tsv", tsv, "Also write the values as TSV");

  auto* rs = app.add_subcommand("rs-seed", "Write the extended Reed-Solomon code");
  rs->add_option("--q", q)->required()->check(CLI::Range(2, 64));
  rs->add_option("--n", n)->required()->check(CLI::Range(1, 64));
  rs->add_option("--k", k)->required()->check(CLI::Range(1, 64));
  rs->add_option("--out", out, "Seed directory (file goes to <out>/<n>_<k>/rs.mds); default stdout");

  auto* report = app.add_subcommand("report", "Class and extendable counts from stored registries");
  report->add_option("--q", q)->required()->check(CLI::Range(2, 64));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*bootstrap) return cmd_bootstrap(o, q, latin || (!trivial && q > 5));
    if (*extend) return cmd_extend(o, q, n, k);
    if (*chain) {
      ChainConfig cfg;
      cfg.q = q;
      cfg.root = o.root;
      cfg.bootstrap = latin || (!trivial && q > 5) ? Bootstrap::latin : Bootstrap::trivial;
      if (!seeds.empty()) cfg.seeds = fs::path(seeds);
      cfg.ks = ks;
      cfg.workers = o.workers;
      cfg.max_sets = o.max_sets;
      cfg.max_n = max_n;
      cfg.allow_large_trivial = allow_large;
      cfg.force = o.force;
      const auto res = run_chain(cfg, [&](const std::string& s) { log(o, s); });
      std::cout << res.report;
      return 0;
    }
    if (*canon) return cmd_canon(file1);
    if (*iso) return cmd_iso(file1, file2);
    if (*verify) return cmd_verify(o, verify_root);
    if (*bounds) return cmd_bounds(o, qs, max_n > 0 ? max_n : 7, tsv);
    if (*rs) return cmd_rs_seed(q, n, k, out);
    if (*report) {
      std::cout << tables_report(o.root, q);
      return 0;
    }
  } catch (const VerifyFailed&) {
    return 1;
  } catch (const ConsistencyError& e) {
    std::cerr << "consistency failure: " << e.what() << "\n";
    return 1;
  } catch (const GuardrailError& e) {
    std::cerr << "refused: " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
