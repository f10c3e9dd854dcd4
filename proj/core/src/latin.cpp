#include "mds/latin.hpp"

#include <algorithm>

#include "mds/canonical.hpp"
#include "mds/error.hpp"

namespace mds {

namespace {

class SquareFiller {
 public:
  SquareFiller(int q, std::vector<std::vector<int>> fixed_rows) : q_(q), sq_(static_cast<std::size_t>(q), std::vector<int>(static_cast<std::size_t>(q), -1)) {
    row_used_.assign(static_cast<std::size_t>(q), 0);
    col_used_.assign(static_cast<std::size_t>(q), 0);
    first_free_row_ = static_cast<int>(fixed_rows.size());
    for (int r = 0; r < first_free_row_; ++r)
      for (int c = 0; c < q; ++c) place(r, c, fixed_rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]);
    for (int r = first_free_row_; r < q; ++r) place(r, 0, r);
  }

  template <typename Visit>
  void run(Visit&& visit) {
    if (first_free_row_ >= q_) {
      visit(sq_);
      return;
    }
    fill(first_free_row_, 1, visit);
  }

 private:
  void place(int r, int c, int s) {
    sq_[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = s;
    row_used_[static_cast<std::size_t>(r)] |= 1u << s;
    col_used_[static_cast<std::size_t>(c)] |= 1u << s;
  }
  void unplace(int r, int c, int s) {
    sq_[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = -1;
    row_used_[static_cast<std::size_t>(r)] &= ~(1u << s);
    col_used_[static_cast<std::size_t>(c)] &= ~(1u << s);
  }

  template <typename Visit>
  void fill(int r, int c, Visit& visit) {
    if (c == q_) {
      if (r + 1 == q_)
        visit(sq_);
      else
        fill(r + 1, 1, visit);
      return;
    }
    std::uint32_t free = ~(row_used_[static_cast<std::size_t>(r)] | col_used_[static_cast<std::size_t>(c)]) & ((1u << q_) - 1);
    while (free) {
      const int s = __builtin_ctz(free);
      free &= free - 1;
      place(r, c, s);
      fill(r, c + 1, visit);
      unplace(r, c, s);
    }
  }

  int q_;
  std::vector<std::vector<int>> sq_;
  std::vector<std::uint32_t> row_used_, col_used_;
  int first_free_row_ = 0;
};

std::vector<int> identity_row(int q) {
  std::vector<int> r(static_cast<std::size_t>(q));
  for (int i = 0; i < q; ++i) r[static_cast<std::size_t>(i)] = i;
  return r;
}

// Partitions of q into parts >= 2, parts in non-increasing order.
void derangement_types(int rest, int max_part, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (rest == 0) {
    out.push_back(cur);
    return;
  }
  for (int p = std::min(rest, max_part); p >= 2; --p) {
    cur.push_back(p);
    derangement_types(rest - p, p, cur, out);
    cur.pop_back();
  }
}

// Cycle type (non-increasing) of b o a^-1 for permutations of {0..q-1}.
std::vector<int> relation_type(const std::vector<int>& a, const std::vector<int>& b, int q) {
  std::vector<int> inv(static_cast<std::size_t>(q)), sigma(static_cast<std::size_t>(q));
  for (int i = 0; i < q; ++i) inv[static_cast<std::size_t>(a[static_cast<std::size_t>(i)])] = i;
  for (int s = 0; s < q; ++s) sigma[static_cast<std::size_t>(s)] = b[static_cast<std::size_t>(inv[static_cast<std::size_t>(s)])];
  std::vector<int> type;
  std::uint32_t seen = 0;
  for (int s = 0; s < q; ++s) {
    if (seen >> s & 1) continue;
    int len = 0;
    for (int x = s; !(seen >> x & 1); x = sigma[static_cast<std::size_t>(x)]) {
      seen |= 1u << x;
      ++len;
    }
    type.push_back(len);
  }
  std::sort(type.rbegin(), type.rend());
  return type;
}

// True when some pair of parallel lines, in any of the three directions,
// is related by a permutation whose cycle type sorts before `type`.
bool has_smaller_pair(const std::vector<std::vector<int>>& sq, int q, const std::vector<int>& type) {
  std::vector<std::vector<std::vector<int>>> lines(3, std::vector<std::vector<int>>(static_cast<std::size_t>(q), std::vector<int>(static_cast<std::size_t>(q))));
  for (int r = 0; r < q; ++r)
    for (int c = 0; c < q; ++c) {
      const int s = sq[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
      lines[0][static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = s;
      lines[1][static_cast<std::size_t>(c)][static_cast<std::size_t>(r)] = s;
      lines[2][static_cast<std::size_t>(s)][static_cast<std::size_t>(r)] = c;
    }
  for (const auto& dir : lines)
    for (int a = 0; a < q; ++a)
      for (int b = a + 1; b < q; ++b)
        if (relation_type(dir[static_cast<std::size_t>(a)], dir[static_cast<std::size_t>(b)], q) < type) return true;
  return false;
}

}  // namespace

std::uint64_t count_reduced_latin_squares(int q) {
  if (q < 1 || q > 12) throw ParameterError("count_reduced_latin_squares supports 1 <= q <= 12");
  std::uint64_t count = 0;
  SquareFiller f(q, {identity_row(q)});
  f.run([&](const std::vector<std::vector<int>>&) { ++count; });
  return count;
}

Registry classify_latin_squares(int q, LatinStats* stats) {
  if (q < 2) throw ParameterError("Latin squares need q >= 2");
  if (q > 7) throw DependencyError("classification of order-" + std::to_string(q) + " Latin squares is out of reach; ingest a (3,2) seed registry");
  Registry reg(q, 3, 2);
  std::uint64_t canonized = 0;
  std::vector<std::vector<int>> types;
  std::vector<int> cur;
  derangement_types(q, q, cur, types);
  std::vector<std::vector<int>> second_rows;
  for (const auto& type : types) {
    // Cycles of consecutive symbols: (0 1 .. a-1)(a .. a+b-1)...
    std::vector<int> row(static_cast<std::size_t>(q));
    int start = 0;
    for (int len : type) {
      for (int i = 0; i < len; ++i) row[static_cast<std::size_t>(start + i)] = start + (i + 1) % len;
      start += len;
    }
    second_rows.push_back(row);
    SquareFiller f(q, {identity_row(q), row});
    f.run([&](const std::vector<std::vector<int>>& sq) {
      // The class is also reached from its smallest pair type; canonize only there.
      if (has_smaller_pair(sq, q, type)) return;
      ++canonized;
      CanonicalForm cf = canonical_form(latin_square_code(sq));
      if (reg.find(cf.cert)) return;
      ClassRecord r;
      r.rep = std::move(cf.canon);
      r.cert = std::move(cf.cert);
      r.aut_order = std::move(cf.aut_order);
      reg.insert(std::move(r));
    });
  }
  reg.sort_by_cert();

  const std::uint64_t reduced = count_reduced_latin_squares(q);
  const BigInt expected = BigInt(reduced) * factorial(static_cast<unsigned>(q)) * factorial(static_cast<unsigned>(q - 1));
  const BigInt got = reg.labeled_total();
  if (got != expected)
    throw ConsistencyError("Latin square classification of order " + std::to_string(q) + " covers " + to_string(got) + " labeled squares, expected " + to_string(expected));
  reg.meta()["source"] = "latin squares";
  reg.meta()["reduced_squares"] = std::to_string(reduced);
  reg.meta()["squares_canonized"] = std::to_string(canonized);
  if (stats) {
    stats->squares_canonized = canonized;
    stats->reduced_total = reduced;
    stats->second_rows = std::move(second_rows);
  }
  return reg;
}

}  // namespace mds
