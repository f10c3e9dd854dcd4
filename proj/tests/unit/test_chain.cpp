#include <filesystem>
#include <fstream>
#include <random>

#include "doctest.h"
#include "mds/canonical.hpp"
#include "mds/chain.hpp"
#include "mds/code_io.hpp"
#include "mds/error.hpp"
#include "mds/linear.hpp"
#include "mds/registry.hpp"
#include "mds/seeds.hpp"

using namespace mds;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() : path(fs::temp_directory_path() / ("mds_chain_" + std::to_string(std::random_device{}()))) { fs::create_directories(path); }
  ~TempDir() { fs::remove_all(path); }
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  return {std::istreambuf_iterator<char>(in), {}};
}

using Kind = ChainStart::Kind;

}  // namespace

TEST_CASE("chain plans") {
  ChainConfig cfg;
  cfg.q = 4;
  auto plan = chain_plan(cfg);
  REQUIRE(plan.size() == 3);
  CHECK((plan[0].k == 2 && plan[0].n == 2 && plan[0].kind == Kind::full));
  CHECK((plan[2].k == 4 && plan[2].n == 4 && plan[2].kind == Kind::full));

  cfg.q = 5;
  plan = chain_plan(cfg);
  REQUIRE(plan.size() == 4);
  CHECK(plan[1].kind == Kind::full);
  CHECK((plan[2].k == 4 && plan[2].n == 6 && plan[2].kind == Kind::seed));

  cfg.bootstrap = Bootstrap::latin;
  plan = chain_plan(cfg);
  CHECK((plan[0].n == 3 && plan[0].kind == Kind::latin));
  CHECK((plan[1].n == 5 && plan[1].kind == Kind::seed));

  cfg.q = 7;
  cfg.ks = {5, 2, 5};
  plan = chain_plan(cfg);
  REQUIRE(plan.size() == 2);
  CHECK(plan[0].k == 2);
  CHECK((plan[1].k == 5 && plan[1].n == 7));

  cfg.bootstrap = Bootstrap::trivial;
  cfg.ks = {2};
  CHECK_THROWS_AS(chain_plan(cfg), ParameterError);
  cfg.allow_large_trivial = true;
  CHECK(chain_plan(cfg)[0].kind == Kind::full);

  cfg.ks = {8};
  CHECK_THROWS_AS(chain_plan(cfg), ParameterError);
  CHECK(parse_bootstrap(to_string(Bootstrap::latin)) == Bootstrap::latin);
  CHECK_THROWS_AS(parse_bootstrap("other"), ParameterError);
}

TEST_CASE("q = 3 chain and resumption") {
  TempDir tmp;
  ChainConfig cfg;
  cfg.q = 3;
  cfg.root = tmp.path;
  std::vector<std::string> lines;
  const auto first = run_chain(cfg, [&](const std::string& s) { lines.push_back(s); });
  CHECK_FALSE(lines.empty());
  for (const auto& s : first.steps) CHECK_FALSE(s.reused);
  auto classes = [&](int n, int k) { return summarize_registry(tmp.path, 3, n, k).classes; };
  CHECK(classes(3, 2) == 1);
  CHECK(classes(4, 2) == 1);
  CHECK(classes(5, 2) == 0);
  CHECK(classes(4, 3) == 1);
  CHECK(classes(5, 3) == 0);
  CHECK(summarize_registry(tmp.path, 3, 4, 3).ledger.at("source") == "extension");
  CHECK(summarize_registry(tmp.path, 3, 4, 3).ledger.at("consistency") == "pass");

  const std::string report = slurp(tmp.path / "3" / "report.txt");
  CHECK(report == first.report);
  CHECK(report == tables_report(tmp.path, 3));
  CHECK(report.find("Equivalence classes of nontrivial (n,k)_3 MDS codes") != std::string::npos);
  CHECK(report.find("Extendable nontrivial (n,k)_3 MDS codes") != std::string::npos);
  CHECK(report.find("4      1    1  3\n") != std::string::npos);

  const auto second = run_chain(cfg);
  REQUIRE(second.steps.size() == first.steps.size());
  for (std::size_t i = 0; i < second.steps.size(); ++i) {
    CHECK(second.steps[i].reused);
    CHECK(second.steps[i].classes_out == first.steps[i].classes_out);
    CHECK(second.steps[i].partitions == first.steps[i].partitions);
  }
  CHECK(second.report == first.report);

  cfg.force = true;
  for (const auto& s : run_chain(cfg).steps) CHECK_FALSE(s.reused);
}

TEST_CASE("length cap") {
  TempDir tmp;
  ChainConfig cfg;
  cfg.q = 3;
  cfg.root = tmp.path;
  cfg.ks = {2};
  cfg.max_n = 3;
  const auto res = run_chain(cfg);
  CHECK(res.steps.size() == 1);
  CHECK(registry_exists(tmp.path, 3, 3, 2));
  CHECK_FALSE(registry_exists(tmp.path, 3, 4, 2));
}

TEST_CASE("seed ingestion") {
  std::mt19937_64 rng(5);
  const Code rs = rs_code(5, 5, 3);
  const Code moved = apply_isometry(Isometry::random(5, 5, rng), rs);
  const Registry one = seed_registry(5, 5, 3, {{moved, "a.mds"}}, true);
  REQUIRE(one.size() == 1);
  CHECK(one.records()[0].rep == canonical_form(rs).canon);
  CHECK(one.records()[0].provenance == Provenance::seed);
  CHECK(one.meta().at("source") == "seed");

  try {
    seed_registry(5, 5, 3, {{rs, "a.mds"}, {moved, "b.mds"}}, false);
    FAIL("equivalent seeds accepted");
  } catch (const ValidationError& e) {
    const std::string msg = e.what();
    CHECK(msg.find("a.mds") != std::string::npos);
    CHECK(msg.find("b.mds") != std::string::npos);
  }
  CHECK_THROWS_AS(seed_registry(5, 5, 2, {{rs, "a.mds"}}, false), ValidationError);
  CHECK_THROWS_AS(seed_registry(5, 6, 3, {{rs, "a.mds"}}, false), ValidationError);
  CHECK_THROWS_AS(seed_registry(4, 3, 2, {{cyclic_group_code(4), "z4.mds"}}, true), ValidationError);
  CHECK(seed_registry(4, 3, 2, {{cyclic_group_code(4), "z4.mds"}}, false).size() == 1);
  CHECK(seed_registry(5, 5, 3, {}, false).size() == 0);

  CHECK(punctured_class_count(rs_seed_registry(5, 6, 4)) == 1);
  CHECK(punctured_class_count(rs_seed_registry(7, 8, 6)) == 1);
  CHECK(rs_provenance(5, 6, 4) == "provenance: rs 5 6 4");
  CHECK_THROWS_AS(read_seed_dir("/nonexistent/seed/dir"), DependencyError);
}

TEST_CASE("seed directories feed chains") {
  TempDir tmp;
  const fs::path seeds = tmp.path / "seeds";
  fs::create_directories(seeds / "5_3");
  write_code_file(seeds / "5_3" / "rs.mds", rs_code(5, 5, 3), {rs_provenance(5, 5, 3)});

  ChainConfig cfg;
  cfg.q = 5;
  cfg.root = tmp.path / "atlas";
  cfg.bootstrap = Bootstrap::latin;
  cfg.ks = {2, 3};
  cfg.seeds = seeds;
  run_chain(cfg);
  const auto s53 = summarize_registry(cfg.root, 5, 5, 3);
  CHECK(s53.classes == 1);
  CHECK(s53.ledger.at("source") == "seed");
  CHECK(s53.ledger.at("seed_files") == "rs.mds");
  CHECK(s53.ledger.at("punctured_classes") == "1");
  CHECK(summarize_registry(cfg.root, 5, 6, 3).classes == 1);
  CHECK(summarize_registry(cfg.root, 5, 7, 3).classes == 0);
  CHECK(summarize_registry(cfg.root, 5, 3, 2).classes == 2);
}

TEST_CASE("missing seeds and the empty (4,2) rule") {
  TempDir tmp;
  ChainConfig cfg;
  cfg.q = 8;
  cfg.root = tmp.path;
  cfg.bootstrap = Bootstrap::latin;
  cfg.ks = {2};
  CHECK_THROWS_AS(run_chain(cfg), DependencyError);
  cfg.ks = {3};
  try {
    run_chain(cfg);
    FAIL("q = 8 chain ran without seeds");
  } catch (const DependencyError& e) {
    CHECK(std::string(e.what()).find("seed required") != std::string::npos);
  }

  // No (4,2)_6 code exists, so no code with d >= 3 does either.
  cfg.q = 6;
  cfg.ks = {2, 3, 4};
  run_chain(cfg);
  CHECK(summarize_registry(tmp.path, 6, 3, 2).classes == 12);
  CHECK(summarize_registry(tmp.path, 6, 4, 2).classes == 0);
  CHECK(summarize_registry(tmp.path, 6, 5, 3).classes == 0);
  CHECK(summarize_registry(tmp.path, 6, 6, 4).classes == 0);
}
