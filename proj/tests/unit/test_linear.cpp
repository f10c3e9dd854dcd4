#include <cmath>
#include <random>
#include <set>

#include "doctest.h"
#include "mds/canonical.hpp"
#include "mds/error.hpp"
#include "mds/field.hpp"
#include "mds/isometry.hpp"
#include "mds/linear.hpp"

using namespace mds;

namespace {

// Certificates of every systematic [I | A] MDS code, A unrestricted.
std::set<std::string> systematic_oracle(int q, int n, int k) {
  const Field f = Field::build(q);
  const int r = n - k;
  std::vector<int> a(static_cast<std::size_t>(k * r), 0);
  std::set<Code> seen;
  std::set<std::string> certs;
  while (true) {
    std::vector<int> g(static_cast<std::size_t>(k * n), 0);
    for (int i = 0; i < k; ++i) {
      g[static_cast<std::size_t>(i * n + i)] = 1;
      for (int j = 0; j < r; ++j) g[static_cast<std::size_t>(i * n + k + j)] = a[static_cast<std::size_t>(i * r + j)];
    }
    // Row space by brute force over all message vectors.
    std::vector<std::vector<int>> words;
    std::vector<int> m(static_cast<std::size_t>(k), 0);
    while (true) {
      std::vector<int> w(static_cast<std::size_t>(n), 0);
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < n; ++j)
          w[static_cast<std::size_t>(j)] = f.add(w[static_cast<std::size_t>(j)], f.mul(m[static_cast<std::size_t>(i)], g[static_cast<std::size_t>(i * n + j)]));
      words.push_back(w);
      int t = 0;
      while (t < k && ++m[static_cast<std::size_t>(t)] == q) m[static_cast<std::size_t>(t++)] = 0;
      if (t == k) break;
    }
    const Code c = Code::from_words(q, n, words);
    if (min_distance_pairwise(c) == n - k + 1 && seen.insert(c).second) certs.insert(canonical_form(c).cert);
    std::size_t t = 0;
    while (t < a.size() && ++a[t] == q) a[t++] = 0;
    if (t == a.size()) break;
  }
  return certs;
}

std::set<std::string> certs_of(const std::vector<Code>& cs) {
  std::set<std::string> out;
  for (const auto& c : cs) out.insert(certificate(c));
  return out;
}

}  // namespace

TEST_CASE("finite fields satisfy the axioms") {
  for (int q : {2, 3, 4, 5, 7, 8, 9}) {
    CAPTURE(q);
    REQUIRE(Field::supported(q));
    const Field f = Field::build(q);
    for (int a = 0; a < q; ++a) {
      CHECK(f.add(a, 0) == a);
      CHECK(f.mul(a, 1) == a);
      CHECK(f.add(a, f.neg(a)) == 0);
      if (a) CHECK(f.mul(a, f.inv(a)) == 1);
      for (int b = 0; b < q; ++b) {
        CHECK(f.add(a, b) == f.add(b, a));
        CHECK(f.mul(a, b) == f.mul(b, a));
        if (a && b) CHECK(f.mul(a, b) != 0);
        for (int c = 0; c < q; ++c) {
          CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
          CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
          CHECK(f.add(f.add(a, b), c) == f.add(a, f.add(b, c)));
        }
      }
    }
    // Some element generates the multiplicative group.
    bool cyclic = false;
    for (int g = 1; g < q && !cyclic; ++g) {
      std::set<int> powers;
      for (int e = 0; e < q - 1; ++e) powers.insert(f.pow(g, e));
      cyclic = static_cast<int>(powers.size()) == q - 1;
    }
    CHECK(cyclic);
  }
  CHECK_FALSE(Field::supported(6));
  CHECK_THROWS_AS(Field::build(6), ParameterError);
}

TEST_CASE("Reed-Solomon codes are MDS") {
  for (int q : {3, 4, 5, 7, 8, 9})
    for (int n = 2; n <= q + 1; ++n)
      for (int k = 1; k < n && k <= 3; ++k) {
        CAPTURE(q);
        CAPTURE(n);
        CAPTURE(k);
        const Code c = rs_code(q, n, k);
        CHECK(c.size() == static_cast<std::size_t>(std::pow(q, k)));
        const auto prof = is_mds(c);
        CHECK(prof.is_mds);
        CHECK(prof.k == k);
        if (q <= 5) CHECK(verify_mds_direct(c));
      }
  CHECK_THROWS(rs_code(5, 7, 3));
}

TEST_CASE("the extension coordinate of a doubly extended RS code is removable") {
  for (int q : {4, 5, 7})
    for (int k = 2; k <= 3; ++k) {
      CAPTURE(q);
      CAPTURE(k);
      const Code full = rs_code(q, q + 1, k);
      CHECK(certificate(puncture(full, q)) == certificate(rs_code(q, q, k)));
    }
}

TEST_CASE("linear enumeration agrees with the unnormalized systematic search") {
  struct Case {
    int q, n, k;
  };
  for (const auto [q, n, k] : {Case{3, 4, 2}, Case{4, 5, 3}, Case{5, 4, 2}, Case{7, 4, 2}, Case{8, 4, 2}}) {
    CAPTURE(q);
    CAPTURE(n);
    CAPTURE(k);
    CHECK(certs_of(enumerate_linear_mds(q, n, k)) == systematic_oracle(q, n, k));
  }
}

TEST_CASE("linear (6,3)_7 MDS codes fall into three classes") {
  const auto cs = enumerate_linear_mds(7, 6, 3);
  CHECK(cs.size() == 3);
  for (const auto& c : cs) CHECK(is_mds(c).is_mds);
  CHECK(certs_of(cs).size() == 3);
}

TEST_CASE("linear search guardrail") {
  CHECK(linear_search_space(7, 6, 3) == 1296);
  CHECK_THROWS_AS(enumerate_linear_mds(7, 6, 3, 100), GuardrailError);
}

TEST_CASE("linearity test") {
  std::mt19937_64 rng(11);
  const Code rs = rs_code(5, 6, 3);
  CHECK(is_linear_equivalent(rs) == Linearity::linear);
  CHECK(is_linear_equivalent(apply_isometry(Isometry::random(5, 6, rng), rs)) == Linearity::linear);
  // The cyclic group of order 4 is not the additive group of GF(4).
  CHECK(is_linear_equivalent(cyclic_group_code(4)) == Linearity::nonlinear);
  CHECK(is_linear_equivalent(cyclic_group_code(5)) == Linearity::linear);
  CHECK(is_linear_equivalent(cyclic_group_code(6)) == Linearity::inconclusive);
  CHECK(is_linear_equivalent(full_space(3, 2).subset(std::vector<std::uint32_t>{0, 1})) == Linearity::inconclusive);
  CHECK(to_string(Linearity::nonlinear) == "nonlinear");
}
