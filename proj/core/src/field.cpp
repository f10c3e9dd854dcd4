#include "mds/field.hpp"

#include <string>

#include "mds/error.hpp"

namespace mds {

namespace {

struct FieldSpec {
  int q, p, m;
  std::vector<int> modulus;  // low to high, monic, degree m
};

const FieldSpec* find_spec(int q) {
  static const FieldSpec specs[] = {
      {2, 2, 1, {0, 1}}, {3, 3, 1, {0, 1}}, {4, 2, 2, {1, 1, 1}}, {5, 5, 1, {0, 1}},
      {7, 7, 1, {0, 1}}, {8, 2, 3, {1, 1, 0, 1}}, {9, 3, 2, {2, 1, 1}},
  };
  for (const auto& s : specs)
    if (s.q == q) return &s;
  return nullptr;
}

std::vector<int> digits(int a, int p, int m) {
  std::vector<int> d(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    d[static_cast<std::size_t>(i)] = a % p;
    a /= p;
  }
  return d;
}

int from_digits(const std::vector<int>& d, int p) {
  int a = 0;
  for (auto it = d.rbegin(); it != d.rend(); ++it) a = a * p + *it;
  return a;
}

}  // namespace

bool Field::supported(int q) { return find_spec(q) != nullptr; }

Field Field::build(int q) {
  const FieldSpec* spec = find_spec(q);
  if (!spec) throw ParameterError("GF(" + std::to_string(q) + ") is not supported; use q in {2,3,4,5,7,8,9}");
  const int p = spec->p, m = spec->m;
  Field f;
  f.q_ = q;
  f.p_ = p;
  const auto qq = static_cast<std::size_t>(q * q);
  f.add_.resize(qq);
  f.mul_.resize(qq);
  for (int a = 0; a < q; ++a) {
    const auto da = digits(a, p, m);
    for (int b = 0; b < q; ++b) {
      const auto db = digits(b, p, m);
      std::vector<int> s(static_cast<std::size_t>(m));
      for (int i = 0; i < m; ++i) s[static_cast<std::size_t>(i)] = (da[static_cast<std::size_t>(i)] + db[static_cast<std::size_t>(i)]) % p;
      f.add_[f.idx(a, b)] = static_cast<std::uint8_t>(from_digits(s, p));

      std::vector<int> prod(static_cast<std::size_t>(2 * m), 0);
      for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
          prod[static_cast<std::size_t>(i + j)] = (prod[static_cast<std::size_t>(i + j)] + da[static_cast<std::size_t>(i)] * db[static_cast<std::size_t>(j)]) % p;
      for (int deg = 2 * m - 1; deg >= m; --deg) {
        const int c = prod[static_cast<std::size_t>(deg)];
        if (c == 0) continue;
        for (int i = 0; i <= m; ++i) {
          auto& t = prod[static_cast<std::size_t>(deg - m + i)];
          t = ((t - c * spec->modulus[static_cast<std::size_t>(i)]) % p + p) % p;
        }
      }
      prod.resize(static_cast<std::size_t>(m));
      f.mul_[f.idx(a, b)] = static_cast<std::uint8_t>(from_digits(prod, p));
    }
  }
  f.neg_.resize(static_cast<std::size_t>(q));
  f.inv_.assign(static_cast<std::size_t>(q), 0);
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b) {
      if (f.add(a, b) == 0) f.neg_[static_cast<std::size_t>(a)] = static_cast<std::uint8_t>(b);
      if (f.mul(a, b) == 1) f.inv_[static_cast<std::size_t>(a)] = static_cast<std::uint8_t>(b);
    }
  f.verify_axioms();
  return f;
}

int Field::pow(int a, int e) const {
  int r = 1;
  for (int i = 0; i < e; ++i) r = mul(r, a);
  return r;
}

void Field::verify_axioms() const {
  auto fail = [&](const std::string& what) { throw ConsistencyError("GF(" + std::to_string(q_) + ") tables violate " + what); };
  for (int a = 0; a < q_; ++a) {
    if (add(a, 0) != a || mul(a, 1) != a || mul(a, 0) != 0) fail("identities");
    if (add(a, neg(a)) != 0) fail("additive inverses");
    if (a != 0 && mul(a, inv(a)) != 1) fail("multiplicative inverses");
    for (int b = 0; b < q_; ++b) {
      if (add(a, b) != add(b, a) || mul(a, b) != mul(b, a)) fail("commutativity");
      if (a != 0 && b != 0 && mul(a, b) == 0) fail("absence of zero divisors");
      for (int c = 0; c < q_; ++c) {
        if (add(add(a, b), c) != add(a, add(b, c))) fail("additive associativity");
        if (mul(mul(a, b), c) != mul(a, mul(b, c))) fail("multiplicative associativity");
        if (mul(a, add(b, c)) != add(mul(a, b), mul(a, c))) fail("distributivity");
      }
    }
  }
}

}  // namespace mds
