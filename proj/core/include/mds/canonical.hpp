#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "mds/bigint.hpp"
#include "mds/code.hpp"
#include "mds/isometry.hpp"

namespace mds {

struct CanonicalForm {
  Code canon;                     // class representative
  std::string cert;               // SHA-256 hex of the canonical serialization
  std::vector<Isometry> aut_gens;  // generate Aut(C) of the input code
  BigInt aut_order;
  Isometry to_canon;              // apply_isometry(to_canon, C) == canon
};

struct CanonStats {
  std::uint64_t nodes = 0;
  std::uint64_t leaves = 0;
  std::uint64_t refinements = 0;
};

CanonicalForm canonical_form(const Code& c, CanonStats* stats = nullptr);

/// Digest used as the class key; a pure function of the word list.
std::string certificate(const Code& c);

/// Some g with g.C = D, or nullopt when the codes are inequivalent.
/// Throws ParameterError if (q, n, M) differ.
std::optional<Isometry> find_isomorphism(const Code& c, const Code& d);

/// The coset {g : g.C = D} = Aut(D) o g0.
class IsometryCoset {
 public:
  IsometryCoset(Isometry g0, std::vector<Isometry> aut_gens, BigInt aut_order)
      : g0_(std::move(g0)), gens_(std::move(aut_gens)), order_(std::move(aut_order)) {}

  const Isometry& representative() const { return g0_; }
  const std::vector<Isometry>& aut_generators() const { return gens_; }
  const BigInt& size() const { return order_; }

  /// Visits every element exactly once. Refuses (GuardrailError) if the
  /// coset is larger than `cap`.
  void enumerate(const std::function<void(const Isometry&)>& visit, std::uint64_t cap = 1u << 22) const;

 private:
  Isometry g0_;
  std::vector<Isometry> gens_;
  BigInt order_;
};

/// Throws ValidationError if C and D are inequivalent.
IsometryCoset isometry_coset(const Code& c, const Code& d);

/// All elements of the group generated by `gens` (acting on q, n).
std::vector<Isometry> group_elements(int q, int n, const std::vector<Isometry>& gens, std::uint64_t cap = 1u << 22);

}  // namespace mds
