#include "mds/bounds.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "mds/error.hpp"

namespace mds {

namespace fs = std::filesystem;

BigInt labeled_count(const Registry& reg) { return reg.labeled_total(); }

Eq2Result eq2_lower_bound(int q, int n, const std::map<int, CountValue>& known) {
  Eq2Result best;
  bool any = false;
  const BigInt qf = factorial(static_cast<unsigned>(q));
  for (int a = 3; a <= n - 1; ++a) {
    const int b = n - a + 2;
    if (b < 3) continue;
    auto ia = known.find(a), ib = known.find(b);
    if (ia == known.end() || ib == known.end()) continue;
    const BigInt v = ia->second.value * ib->second.value / qf;
    if (!any || v > best.bound) {
      best.bound = v;
      best.split = a;
      any = true;
    }
  }
  if (!any) throw DependencyError("eq2 bound for n=" + std::to_string(n) + ", q=" + std::to_string(q) + ": no split with both counts known");
  return best;
}

BigInt eq1_class_bound(int q, int n, const BigInt& labeled) { return ceil_div(labeled, isometry_group_order(q, n)); }

BigInt pk11_lower_bound(int q, int n) {
  if (q < 4) throw ParameterError("pk11 bound needs q >= 4");
  if (n < 1) throw ParameterError("pk11 bound needs n >= 1");
  BigInt x;
  if (q % 2 == 0) {
    x = pow_big(q / 2, static_cast<unsigned>(n - 1));
  } else {
    // r is an integer: (q-3)(q-1) is a product of two even numbers.
    const BigInt r = BigInt((q - 3) * (q - 1) / 4);
    x = boost::multiprecision::sqrt(pow_big(r, static_cast<unsigned>(n - 1)));
  }
  if (x > BigInt(1) << 26) throw GuardrailError("pk11 bound 2^" + to_string(x) + " is too large to print");
  return BigInt(1) << static_cast<unsigned>(x);
}

std::string to_string(BoundSource s) {
  switch (s) {
    case BoundSource::classified: return "classified";
    case BoundSource::eq2: return "eq2";
    case BoundSource::pk11: return "pk11";
  }
  return "?";
}

const BoundsEntry* BoundsLedger::find(int q, int n) const {
  for (const auto& e : entries)
    if (e.q == q && e.n == n) return &e;
  return nullptr;
}

BoundsLedger compute_bounds(const std::optional<fs::path>& root, const std::vector<int>& qs, int max_n) {
  BoundsLedger out;
  std::vector<BoundsEntry> all;
  for (int q : qs) {
    if (q < 2) throw ParameterError("q must be at least 2");
    std::map<int, CountValue> known;
    for (int n = 3; n <= max_n; ++n) {
      BoundsEntry e;
      e.q = q;
      e.n = n;
      if (root && registry_exists(*root, q, n, n - 1)) {
        const auto s = summarize_registry(*root, q, n, n - 1);
        e.labeled = {parse_bigint(s.ledger.at("labeled_total")), true};
        e.classes = {BigInt(s.classes), true};
        e.source = BoundSource::classified;
      } else {
        bool have = false;
        if (auto r = [&]() -> std::optional<Eq2Result> {
              try {
                return eq2_lower_bound(q, n, known);
              } catch (const DependencyError&) {
                return std::nullopt;
              }
            }()) {
          e.labeled = {r->bound, false};
          e.source = BoundSource::eq2;
          e.split = r->split;
          have = true;
        }
        if (q >= 4) {
          const BigInt pk = pk11_lower_bound(q, n);
          if (!have || pk > e.labeled.value) {
            e.labeled = {pk, false};
            e.source = BoundSource::pk11;
            e.split = 0;
            have = true;
          }
        }
        if (!have) continue;
        e.classes = {eq1_class_bound(q, n, e.labeled.value), false};
      }
      known[n] = e.labeled;
      all.push_back(e);
    }
  }
  std::stable_sort(all.begin(), all.end(), [](const BoundsEntry& a, const BoundsEntry& b) { return std::tie(a.n, a.q) < std::tie(b.n, b.q); });
  out.entries = std::move(all);
  return out;
}

namespace {

std::string show(const CountValue& v) { return v.exact ? to_string(v.value) : ">= " + sci2_floor(v.value); }

}  // namespace

std::string table5_report(const BoundsLedger& ledger) {
  std::set<int> qs, ns;
  for (const auto& e : ledger.entries) {
    qs.insert(e.q);
    ns.insert(e.n);
  }
  std::size_t w = 4;
  for (const auto& e : ledger.entries) w = std::max(w, show(e.classes).size());
  w += 2;
  auto pad = [&](const std::string& s) { return std::string(w > s.size() ? w - s.size() : 0, ' ') + s; };
  std::ostringstream out;
  out << "Equivalence classes of (n,n-1)_q MDS codes\n";
  out << "n\\q";
  for (int q : qs) out << pad(std::to_string(q));
  out << "\n";
  for (int n : ns) {
    std::string row = std::to_string(n);
    row += std::string(row.size() < 3 ? 3 - row.size() : 0, ' ');
    for (int q : qs) {
      const auto* e = ledger.find(q, n);
      row += e ? pad(show(e->classes)) : std::string(w, ' ');
    }
    while (!row.empty() && row.back() == ' ') row.pop_back();
    out << row << "\n";
  }
  return out.str();
}

std::string table5_tsv(const BoundsLedger& ledger) {
  std::ostringstream out;
  out << "q\tn\tlabeled\tlabeled_exact\tclasses\tclasses_exact\tsource\tsplit\n";
  for (const auto& e : ledger.entries)
    out << e.q << "\t" << e.n << "\t" << to_string(e.labeled.value) << "\t" << (e.labeled.exact ? "yes" : "no") << "\t" << to_string(e.classes.value) << "\t"
        << (e.classes.exact ? "yes" : "no") << "\t" << to_string(e.source) << "\t" << (e.split ? std::to_string(e.split) : "-") << "\n";
  return out.str();
}

}  // namespace mds
