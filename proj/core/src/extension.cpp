#include "mds/extension.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <mutex>
#include <thread>

#include "mds/canonical.hpp"
#include "mds/error.hpp"

namespace mds {

ConsistencyReport consistency_check(const Registry& old_reg, const Registry& new_reg) {
  if (old_reg.q() != new_reg.q() || old_reg.k() != new_reg.k() || old_reg.n() + 1 != new_reg.n())
    throw ParameterError("consistency_check: registries are not (n,k) and (n+1,k)");
  ConsistencyReport r;
  const int q = old_reg.q();
  try {
    r.lhs = new_reg.labeled_total();
    const BigInt g_old = isometry_group_order(q, old_reg.n());
    BigInt sum = 0;
    for (std::size_t i = 0; i < old_reg.size(); ++i) {
      const auto& rec = old_reg.records()[i];
      if (!rec.num_partitions) throw DependencyError("consistency_check: class " + std::to_string(i) + " has no partition count");
      sum += exact_div(g_old, rec.aut_order, "class " + std::to_string(i)) * *rec.num_partitions;
    }
    r.rhs = factorial(static_cast<unsigned>(q)) * sum;
  } catch (const ConsistencyError& e) {
    r.pass = false;
    r.detail = e.what();
    return r;
  }
  r.pass = r.lhs == r.rhs;
  r.detail = "lhs=" + to_string(r.lhs) + " rhs=" + to_string(r.rhs);
  return r;
}

Registry full_space_registry(int q, int n) {
  Registry reg(q, n, n);
  ClassRecord r;
  r.rep = full_space(q, n);
  r.cert = certificate(r.rep);
  r.aut_order = isometry_group_order(q, n);
  reg.insert(std::move(r));
  reg.meta()["source"] = "full space";
  return reg;
}

std::vector<Isometry> automorphism_generators(const Code& rep) {
  std::uint64_t all = 1;
  for (int i = 0; i < rep.n(); ++i) all *= static_cast<std::uint64_t>(rep.q());
  if (rep.size() == all) return full_group_generators(rep.q(), rep.n());
  return canonical_form(rep).aut_gens;
}

std::vector<std::size_t> partition_orbit_representatives(const Code& rep, const PartitionSet& ps, const std::vector<Isometry>& gens,
                                                         const BigInt& aut_order) {
  const std::size_t q = static_cast<std::size_t>(ps.q);
  // Action of each generator on block ids.
  std::vector<std::vector<std::uint32_t>> block_maps;
  for (const auto& g : gens) {
    const auto wp = word_permutation(g, rep);
    std::vector<std::uint32_t> bm(ps.blocks.size());
    std::vector<std::uint32_t> img;
    for (std::size_t b = 0; b < ps.blocks.size(); ++b) {
      img.clear();
      for (auto w : ps.blocks[b]) img.push_back(wp[w]);
      std::sort(img.begin(), img.end());
      const auto id = ps.block_id(img);
      if (!id) throw ConsistencyError("partition set is not closed under the automorphism group (block image missing)");
      bm[b] = *id;
    }
    block_maps.push_back(std::move(bm));
  }

  std::vector<std::size_t> reps;
  std::vector<char> seen(ps.size(), 0);
  std::vector<std::size_t> queue;
  std::vector<std::uint32_t> img(q);
  for (std::size_t p = 0; p < ps.size(); ++p) {
    if (seen[p]) continue;
    reps.push_back(p);
    seen[p] = 1;
    queue.assign(1, p);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const auto part = ps.partition(queue[head]);
      for (const auto& bm : block_maps) {
        for (std::size_t i = 0; i < q; ++i) img[i] = bm[part[i]];
        std::sort(img.begin(), img.end());
        const auto idx = ps.find(img);
        if (!idx) throw ConsistencyError("partition set is not closed under the automorphism group");
        if (!seen[*idx]) {
          seen[*idx] = 1;
          queue.push_back(*idx);
        }
      }
    }
    if (aut_order % queue.size() != 0) throw ConsistencyError("orbit of length " + std::to_string(queue.size()) + " does not divide |Aut| = " + to_string(aut_order));
  }
  return reps;
}

namespace {

struct PerRecord {
  PartitionSet ps;
  std::vector<ClassRecord> built;
  std::uint64_t orbits = 0;
};

PerRecord process_record(const ClassRecord& rec, const Registry* lower, const StepOptions& opt) {
  PerRecord out;
  out.ps = find_partitions(rec.rep, lower, opt.find);
  if (out.ps.size() == 0) return out;
  const auto gens = automorphism_generators(rec.rep);
  const auto reps = partition_orbit_representatives(rec.rep, out.ps, gens, rec.aut_order);
  out.orbits = reps.size();
  std::vector<std::string> certs;
  for (auto p : reps) {
    const Code ext = extend_with_partition(rec.rep, out.ps.labeled(p));
    CanonicalForm cf = canonical_form(ext);
    if (std::find(certs.begin(), certs.end(), cf.cert) != certs.end()) continue;
    certs.push_back(cf.cert);
    ClassRecord r;
    r.rep = std::move(cf.canon);
    r.cert = std::move(cf.cert);
    r.aut_order = std::move(cf.aut_order);
    out.built.push_back(std::move(r));
  }
  return out;
}

}  // namespace

Registry extension_step(Registry& reg, const Registry* lower, const StepOptions& opt, StepStats* stats, ConsistencyReport* report) {
  const auto t0 = std::chrono::steady_clock::now();
  std::vector<PerRecord> results(reg.size());
  const unsigned workers = std::max(1u, std::min<unsigned>(opt.workers, static_cast<unsigned>(std::max<std::size_t>(1, reg.size()))));
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mu;
  auto work = [&]() {
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= reg.size()) return;
      try {
        results[i] = process_record(reg.records()[i], lower, opt);
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mu);
        if (!failure) failure = std::current_exception();
        next = reg.size();
      }
    }
  };
  if (workers == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& th : pool) th.join();
  }
  if (failure) std::rethrow_exception(failure);

  // Merge in record order so the result does not depend on the worker count.
  Registry next_reg(reg.q(), reg.n() + 1, reg.k());
  Registry staged = reg;
  std::uint64_t partitions = 0, orbits = 0;
  for (std::size_t i = 0; i < results.size(); ++i) {
    auto& rec = staged.records()[i];
    rec.num_partitions = results[i].ps.size();
    partitions += results[i].ps.size();
    orbits += results[i].orbits;
    rec.partitions = std::move(results[i].ps);
    for (auto& b : results[i].built) next_reg.insert(std::move(b));
  }
  next_reg.sort_by_cert();

  const ConsistencyReport check = consistency_check(staged, next_reg);
  if (report) *report = check;
  if (!check.pass)
    throw ConsistencyError("double count failed for (" + std::to_string(reg.n()) + "," + std::to_string(reg.k()) + ")_" + std::to_string(reg.q()) +
                           " -> n+1: " + check.detail);
  next_reg.meta()["source"] = "extension";
  next_reg.meta()["consistency"] = "pass";
  next_reg.meta()["consistency_lhs"] = to_string(check.lhs);
  next_reg.meta()["consistency_rhs"] = to_string(check.rhs);
  reg = std::move(staged);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  reg.meta()["step_seconds"] = std::to_string(secs);
  reg.meta()["step_partitions"] = std::to_string(partitions);
  reg.meta()["step_orbits"] = std::to_string(orbits);
  if (stats) {
    stats->partitions = partitions;
    stats->orbits = orbits;
    stats->seconds = secs;
  }
  return next_reg;
}

}  // namespace mds
