#pragma once

#include <cstdint>
#include <vector>

namespace mds {

/// GF(q) for q in {2,3,4,5,7,8,9}. Elements are 0..q-1; for q = p^m the
/// integer a0 + a1 p + ... encodes the polynomial a0 + a1 x + ... modulo
/// a fixed irreducible (x^2+x+1, x^3+x+1, x^2+x+2 for q = 4, 8, 9).
class Field {
 public:
  static Field build(int q);
  static bool supported(int q);

  int q() const { return q_; }
  int characteristic() const { return p_; }

  int add(int a, int b) const { return add_[idx(a, b)]; }
  int sub(int a, int b) const { return add(a, neg_[static_cast<std::size_t>(b)]); }
  int mul(int a, int b) const { return mul_[idx(a, b)]; }
  int neg(int a) const { return neg_[static_cast<std::size_t>(a)]; }
  /// Multiplicative inverse; a must be nonzero.
  int inv(int a) const { return inv_[static_cast<std::size_t>(a)]; }
  int pow(int a, int e) const;

 private:
  std::size_t idx(int a, int b) const { return static_cast<std::size_t>(a * q_ + b); }
  void verify_axioms() const;

  int q_ = 0;
  int p_ = 0;
  std::vector<std::uint8_t> add_, mul_, neg_, inv_;
};

}  // namespace mds
