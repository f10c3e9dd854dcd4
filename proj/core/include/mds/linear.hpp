#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mds/bigint.hpp"
#include "mds/code.hpp"
#include "mds/field.hpp"

namespace mds {

/// Extended Reed-Solomon code: evaluations of all polynomials of degree < k
/// at the field elements 0, 1, ..., min(n,q)-1, plus the coefficient of
/// x^{k-1} as an extra coordinate when n = q+1.
Code rs_code(int q, int n, int k);

/// Row space of a k x n matrix (row-major) over GF(q).
Code code_from_generator(const Field& f, int k, int n, const std::vector<int>& g);

/// Rank of a rows x cols matrix (row-major).
int matrix_rank(const Field& f, int rows, int cols, std::vector<int> m);

/// True if every square submatrix of the rows x cols matrix is nonsingular.
bool all_minors_nonsingular(const Field& f, int rows, int cols, const std::vector<int>& a);

/// Size of the normalized systematic search space, (q-1)^((k-1)(n-k-1)).
BigInt linear_search_space(int q, int n, int k);

inline constexpr std::uint64_t kDefaultLinearCap = std::uint64_t{1} << 26;

/// Canonical representatives of all linear (n,k)_q MDS codes. Generator
/// matrices [I | A] are enumerated with the first row and column of A
/// scaled to ones and the remaining rows of A in increasing order, which
/// loses no class. Throws GuardrailError naming the search size if it
/// exceeds `cap`.
std::vector<Code> enumerate_linear_mds(int q, int n, int k, std::uint64_t cap = kDefaultLinearCap);

enum class Linearity { linear, nonlinear, inconclusive };
std::string to_string(Linearity l);

/// Certificate membership among the linear classes with the same
/// parameters. Inconclusive when q is not a supported field size, the code
/// is not MDS, or the enumeration exceeds `cap`.
Linearity is_linear_equivalent(const Code& c, std::uint64_t cap = kDefaultLinearCap);

}  // namespace mds
