#pragma once

#include <cstdint>
#include <vector>

#include "mds/registry.hpp"

namespace mds {

struct LatinStats {
  std::uint64_t squares_canonized = 0;
  std::uint64_t reduced_total = 0;  // counted independently
  std::vector<std::vector<int>> second_rows;
};

/// Number of reduced Latin squares of order q (first row and column in
/// natural order), by plain backtracking.
std::uint64_t count_reduced_latin_squares(int q);

/// All classes of (3,2)_q MDS codes. Every Latin square is isotopic to a
/// reduced square whose second row is the fixed permutation with a given
/// derangement cycle type (cycles of consecutive symbols starting at 0).
/// Taking that type to be the smallest relation between two parallel lines
/// in any direction, a square is canonized only when no pair of its lines
/// has a smaller type. The orbit sum is checked against
/// count_reduced_latin_squares(q) * q! * (q-1)!. Orders above 7 need an
/// ingested seed (DependencyError).
Registry classify_latin_squares(int q, LatinStats* stats = nullptr);

}  // namespace mds
