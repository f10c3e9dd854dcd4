#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "mds/code.hpp"

namespace mds {

/// An element of G_n: a coordinate permutation followed by one symbol
/// permutation per (target) coordinate.
///
/// Action on a word c: (g.c)_i = symbol_perm(i)[c_{pi^-1(i)}], where pi is
/// `coord_perm` (coordinate j moves to position pi(j)).
class Isometry {
 public:
  Isometry() = default;
  Isometry(int q, int n, std::vector<std::uint8_t> coord_perm, std::vector<std::uint8_t> symbol_perms);

  static Isometry identity(int q, int n);
  static Isometry random(int q, int n, std::mt19937_64& rng);

  int q() const { return q_; }
  int n() const { return n_; }

  int coord_image(int j) const { return coord_perm_[static_cast<std::size_t>(j)]; }
  /// Image of symbol a under the permutation attached to target coordinate i.
  int symbol_image(int i, int a) const { return symbol_perms_[static_cast<std::size_t>(i * q_ + a)]; }

  const std::vector<std::uint8_t>& coord_perm() const { return coord_perm_; }
  const std::vector<std::uint8_t>& symbol_perms() const { return symbol_perms_; }

  void apply(std::span<const Symbol> in, std::span<Symbol> out) const;

  /// (this o h): apply h first, then this.
  Isometry compose(const Isometry& h) const;
  Isometry inverse() const;
  bool is_identity() const;

  /// Log format: "pi=<perm>; s0=<perm>; ...; s{n-1}=<perm>".
  std::string to_string() const;
  static Isometry parse(const std::string& text);

  friend bool operator==(const Isometry&, const Isometry&) = default;

 private:
  int q_ = 0;
  int n_ = 0;
  std::vector<std::uint8_t> coord_perm_;
  std::vector<std::uint8_t> symbol_perms_;  // n*q
};

Code apply_isometry(const Isometry& g, const Code& c);

/// Generators of the whole of G_n: a coordinate transposition and n-cycle,
/// plus a symbol transposition and q-cycle on coordinate 0.
std::vector<Isometry> full_group_generators(int q, int n);

/// Word permutation induced by an automorphism g of c: result[i] = index of g.word(i).
std::vector<std::uint32_t> word_permutation(const Isometry& g, const Code& c);

/// result[i] = index in `to` of g applied to from.word(i); requires g.from = to.
std::vector<std::uint32_t> word_map(const Isometry& g, const Code& from, const Code& to);

}  // namespace mds
