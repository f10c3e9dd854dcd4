#include "mds/linear.hpp"

#include <functional>
#include <map>
#include <mutex>
#include <set>
#include <tuple>

#include "mds/canonical.hpp"
#include "mds/error.hpp"
#include "subsets.hpp"

namespace mds {

Code rs_code(int q, int n, int k) {
  if (n > q + 1) throw ParameterError("rs_code: n = " + std::to_string(n) + " exceeds q+1 = " + std::to_string(q + 1));
  if (k < 1 || k > n) throw ParameterError("rs_code: need 1 <= k <= n");
  const Field f = Field::build(q);
  const int pts = std::min(n, q);
  std::vector<int> g(static_cast<std::size_t>(k * n), 0);
  // Row i of the generator is the evaluation of x^i.
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < pts; ++j) g[static_cast<std::size_t>(i * n + j)] = (i == 0) ? 1 : f.pow(j, i);
    if (n == q + 1) g[static_cast<std::size_t>(i * n + q)] = (i == k - 1) ? 1 : 0;
  }
  return code_from_generator(f, k, n, g);
}

Code code_from_generator(const Field& f, int k, int n, const std::vector<int>& g) {
  const int q = f.q();
  std::size_t m = 1;
  for (int i = 0; i < k; ++i) m *= static_cast<std::size_t>(q);
  std::vector<Symbol> flat(m * static_cast<std::size_t>(n));
  std::vector<int> msg(static_cast<std::size_t>(k), 0);
  std::vector<int> word(static_cast<std::size_t>(n));
  for (std::size_t w = 0; w < m; ++w) {
    std::fill(word.begin(), word.end(), 0);
    for (int i = 0; i < k; ++i) {
      const int c = msg[static_cast<std::size_t>(i)];
      if (c == 0) continue;
      for (int j = 0; j < n; ++j)
        word[static_cast<std::size_t>(j)] = f.add(word[static_cast<std::size_t>(j)], f.mul(c, g[static_cast<std::size_t>(i * n + j)]));
    }
    for (int j = 0; j < n; ++j) flat[w * static_cast<std::size_t>(n) + static_cast<std::size_t>(j)] = static_cast<Symbol>(word[static_cast<std::size_t>(j)]);
    for (int i = k - 1; i >= 0; --i) {
      if (++msg[static_cast<std::size_t>(i)] < q) break;
      msg[static_cast<std::size_t>(i)] = 0;
    }
  }
  return Code::from_flat(q, n, std::move(flat));
}

int matrix_rank(const Field& f, int rows, int cols, std::vector<int> m) {
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int piv = -1;
    for (int r = rank; r < rows; ++r)
      if (m[static_cast<std::size_t>(r * cols + c)] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    for (int j = 0; j < cols; ++j) std::swap(m[static_cast<std::size_t>(piv * cols + j)], m[static_cast<std::size_t>(rank * cols + j)]);
    const int inv = f.inv(m[static_cast<std::size_t>(rank * cols + c)]);
    for (int r = 0; r < rows; ++r) {
      if (r == rank) continue;
      const int factor = f.mul(m[static_cast<std::size_t>(r * cols + c)], inv);
      if (factor == 0) continue;
      for (int j = 0; j < cols; ++j)
        m[static_cast<std::size_t>(r * cols + j)] = f.sub(m[static_cast<std::size_t>(r * cols + j)], f.mul(factor, m[static_cast<std::size_t>(rank * cols + j)]));
    }
    ++rank;
  }
  return rank;
}

namespace {

bool minor_nonsingular(const Field& f, const std::vector<int>& a, int cols, const std::vector<int>& rs, const std::vector<int>& cs) {
  const int s = static_cast<int>(rs.size());
  std::vector<int> sub(static_cast<std::size_t>(s * s));
  for (int i = 0; i < s; ++i)
    for (int j = 0; j < s; ++j) sub[static_cast<std::size_t>(i * s + j)] = a[static_cast<std::size_t>(rs[static_cast<std::size_t>(i)] * cols + cs[static_cast<std::size_t>(j)])];
  return matrix_rank(f, s, s, std::move(sub)) == s;
}

// Every square minor of a whose row set contains `row` and otherwise uses rows < row.
bool minors_with_row_ok(const Field& f, const std::vector<int>& a, int row, int cols) {
  bool ok = true;
  for (int s = 1; s <= std::min(row + 1, cols) && ok; ++s) {
    for_each_subset(row, s - 1, [&](std::span<const int> prev) {
      std::vector<int> rs(prev.begin(), prev.end());
      rs.push_back(row);
      for_each_subset(cols, s, [&](std::span<const int> cs) {
        ok = minor_nonsingular(f, a, cols, rs, std::vector<int>(cs.begin(), cs.end()));
        return ok;
      });
      return ok;
    });
  }
  return ok;
}

}  // namespace

bool all_minors_nonsingular(const Field& f, int rows, int cols, const std::vector<int>& a) {
  for (int r = 0; r < rows; ++r)
    if (!minors_with_row_ok(f, a, r, cols)) return false;
  return true;
}

BigInt linear_search_space(int q, int n, int k) {
  const int free_rows = std::max(k - 1, 0), free_cols = std::max(n - k - 1, 0);
  return pow_big(BigInt(q - 1), static_cast<unsigned>(free_rows * free_cols));
}

std::vector<Code> enumerate_linear_mds(int q, int n, int k, std::uint64_t cap) {
  if (k < 1 || k > n) throw ParameterError("enumerate_linear_mds: need 1 <= k <= n");
  const BigInt space = linear_search_space(q, n, k);
  if (space > BigInt(cap))
    throw GuardrailError("linear enumeration of (" + std::to_string(n) + "," + std::to_string(k) + ")_" + std::to_string(q) + " needs " +
                         to_string(space) + " matrices, cap is " + std::to_string(cap));
  const Field f = Field::build(q);
  const int r = n - k;
  std::map<std::string, Code> classes;
  auto emit = [&](const std::vector<int>& a) {
    std::vector<int> g(static_cast<std::size_t>(k * n), 0);
    for (int i = 0; i < k; ++i) {
      g[static_cast<std::size_t>(i * n + i)] = 1;
      for (int j = 0; j < r; ++j) g[static_cast<std::size_t>(i * n + k + j)] = a[static_cast<std::size_t>(i * r + j)];
    }
    Code c = code_from_generator(f, k, n, g);
    auto cf = canonical_form(c);
    classes.emplace(cf.cert, std::move(cf.canon));
  };
  if (r == 0) {
    emit({});
  } else {
    std::vector<int> a(static_cast<std::size_t>(k * r), 1);
    // Rows 1..k-1 are filled over columns 1..r-1 with nonzero entries, each
    // row lexicographically above the previous one.
    std::function<void(int)> fill_row = [&](int row) {
      if (row == k) {
        emit(a);
        return;
      }
      std::vector<int> cur(static_cast<std::size_t>(r - 1), 1);
      while (true) {
        for (int j = 1; j < r; ++j) a[static_cast<std::size_t>(row * r + j)] = cur[static_cast<std::size_t>(j - 1)];
        bool above = row <= 1;
        if (!above) {
          for (int j = 1; j < r; ++j) {
            const int x = a[static_cast<std::size_t>(row * r + j)], y = a[static_cast<std::size_t>((row - 1) * r + j)];
            if (x != y) {
              above = x > y;
              break;
            }
          }
        }
        if (above && minors_with_row_ok(f, a, row, r)) fill_row(row + 1);
        int j = r - 2;
        while (j >= 0 && ++cur[static_cast<std::size_t>(j)] == q) cur[static_cast<std::size_t>(j--)] = 1;
        if (j < 0) break;
      }
    };
    if (minors_with_row_ok(f, a, 0, r)) fill_row(1);
  }
  std::vector<Code> out;
  for (auto& [cert, c] : classes) out.push_back(std::move(c));
  return out;
}

std::string to_string(Linearity l) {
  switch (l) {
    case Linearity::linear: return "linear";
    case Linearity::nonlinear: return "nonlinear";
    case Linearity::inconclusive: return "inconclusive";
  }
  return "?";
}

Linearity is_linear_equivalent(const Code& c, std::uint64_t cap) {
  if (!Field::supported(c.q())) return Linearity::inconclusive;
  const auto prof = is_mds(c);
  if (!prof.is_mds || prof.k < 1) return Linearity::inconclusive;
  static std::mutex mu;
  static std::map<std::tuple<int, int, int>, std::set<std::string>> cache;
  const auto key = std::make_tuple(c.q(), c.n(), prof.k);
  std::set<std::string> certs;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) certs = it->second;
  }
  if (certs.empty()) {
    std::vector<Code> classes;
    try {
      classes = enumerate_linear_mds(c.q(), c.n(), prof.k, cap);
    } catch (const GuardrailError&) {
      return Linearity::inconclusive;
    }
    for (const auto& x : classes) certs.insert(certificate(x));
    std::lock_guard<std::mutex> lock(mu);
    cache[key] = certs;
  }
  return certs.count(canonical_form(c).cert) ? Linearity::linear : Linearity::nonlinear;
}

}  // namespace mds
