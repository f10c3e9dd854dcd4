#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mds/bigint.hpp"
#include "mds/registry.hpp"

namespace mds {

/// An exact count or a lower bound.
struct CountValue {
  BigInt value;
  bool exact = false;
};

/// Sum over records of n!(q!)^n / aut_order.
BigInt labeled_count(const Registry& reg);

struct Eq2Result {
  BigInt bound;
  int split = 0;  // maximizing n'
};

/// N_n >= N_{n'} N_{n-n'+2} / q!, maximized over 3 <= n' <= n-1 with
/// n-n'+2 >= 3 and both counts in `known`. The division rounds down.
/// DependencyError if no split is available.
Eq2Result eq2_lower_bound(int q, int n, const std::map<int, CountValue>& known);

/// ceil(N / (n! (q!)^n)).
BigInt eq1_class_bound(int q, int n, const BigInt& labeled);

/// 2^floor(x) with x = (q/2)^(n-1) for even q and ((q-3)(q-1)/4)^((n-1)/2)
/// for odd q. ParameterError for q < 4.
BigInt pk11_lower_bound(int q, int n);

enum class BoundSource { classified, eq2, pk11 };
std::string to_string(BoundSource s);

/// N_n and M_n for (n,n-1)_q codes.
struct BoundsEntry {
  int q = 0, n = 0;
  CountValue labeled;
  CountValue classes;
  BoundSource source = BoundSource::classified;
  int split = 0;  // eq2 only
};

struct BoundsLedger {
  std::vector<BoundsEntry> entries;  // ordered by (n, q)
  const BoundsEntry* find(int q, int n) const;
};

/// Exact values from the (n,n-1) registries under `root` (missing root or
/// registries are fine); every other cell from the larger of the eq2 chain
/// and pk11, then eq1.
BoundsLedger compute_bounds(const std::optional<std::filesystem::path>& root, const std::vector<int>& qs, int max_n);

/// Class counts, rows n and columns q; bounds shown as ">= d.de<exp>"
/// rounded down to two significant figures.
std::string table5_report(const BoundsLedger& ledger);
/// One row per cell: q, n, N, N exact, M, M exact, source, split.
std::string table5_tsv(const BoundsLedger& ledger);

}  // namespace mds
