#include "mds/seeds.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "mds/canonical.hpp"
#include "mds/code_io.hpp"
#include "mds/error.hpp"
#include "mds/linear.hpp"

namespace mds {

namespace fs = std::filesystem;

Registry seed_registry(int q, int n, int k, const std::vector<SeedCode>& seeds, bool require_linear) {
  Registry reg(q, n, k);
  std::vector<std::string> owner;
  for (const auto& s : seeds) {
    const Code& c = s.code;
    if (c.q() != q || c.n() != n) throw ValidationError("seed " + s.source + ": wrong q or n for (" + std::to_string(n) + "," + std::to_string(k) + ")_" + std::to_string(q));
    const auto prof = is_mds(c);
    if (!prof.is_mds || prof.k != k) throw ValidationError("seed " + s.source + ": not an (" + std::to_string(n) + "," + std::to_string(k) + ")_" + std::to_string(q) + " MDS code");
    if (require_linear && is_linear_equivalent(c) != Linearity::linear) throw ValidationError("seed " + s.source + ": not equivalent to a linear code");
    auto cf = canonical_form(c);
    if (auto at = reg.find(cf.cert)) throw ValidationError("seeds " + owner[*at] + " and " + s.source + " are equivalent");
    ClassRecord r;
    r.rep = std::move(cf.canon);
    r.cert = std::move(cf.cert);
    r.aut_order = std::move(cf.aut_order);
    r.provenance = Provenance::seed;
    reg.insert(std::move(r));
    owner.push_back(s.source);
  }
  reg.sort_by_cert();
  reg.meta()["source"] = "seed";
  std::vector<std::string> sorted(owner);
  std::sort(sorted.begin(), sorted.end());
  std::string files;
  for (const auto& o : sorted) files += (files.empty() ? "" : ",") + o;
  reg.meta()["seed_files"] = files.empty() ? "none" : files;
  return reg;
}

std::vector<SeedCode> read_seed_dir(const fs::path& dir) {
  if (!fs::is_directory(dir)) throw DependencyError("seed directory " + dir.string() + " does not exist");
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(dir))
    if (e.is_regular_file() && e.path().extension() == ".mds") files.push_back(e.path());
  std::sort(files.begin(), files.end());
  std::vector<SeedCode> out;
  for (const auto& f : files) out.push_back({read_code_file(f).code, f.filename().string()});
  return out;
}

std::string rs_provenance(int q, int n, int k) {
  return "provenance: rs " + std::to_string(q) + " " + std::to_string(n) + " " + std::to_string(k);
}

Registry rs_seed_registry(int q, int n, int k) {
  return seed_registry(q, n, k, {{rs_code(q, n, k), "rs " + std::to_string(q) + " " + std::to_string(n) + " " + std::to_string(k)}}, false);
}

std::size_t punctured_class_count(const Registry& reg) {
  std::set<std::string> certs;
  for (const auto& r : reg.records()) {
    const int n = r.rep.n();
    const auto cf = canonical_form(r.rep);
    std::vector<int> parent(static_cast<std::size_t>(n));
    std::iota(parent.begin(), parent.end(), 0);
    auto root = [&](int x) {
      while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)];
      return x;
    };
    for (const auto& g : cf.aut_gens)
      for (int j = 0; j < n; ++j) {
        const int a = root(j), b = root(g.coord_image(j));
        if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
      }
    for (int j = 0; j < n; ++j)
      if (root(j) == j) certs.insert(canonical_form(puncture(r.rep, j)).cert);
  }
  return certs.size();
}

}  // namespace mds
