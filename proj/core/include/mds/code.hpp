#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace mds {

using Symbol = std::uint8_t;

inline constexpr int kMaxAlphabet = 64;
inline constexpr int kMaxLength = 64;

/// A q-ary block code of length n: a nonempty set of words over {0..q-1}.
///
/// Words are kept packed (one byte per symbol) and in strictly increasing
/// lexicographic order, so two codes are equal exactly when they hold the
/// same word set.
class Code {
 public:
  Code() = default;

  /// Builds a code from M*n symbols laid out word by word. The words are
  /// sorted; duplicates and out-of-range symbols raise ValidationError.
  static Code from_flat(int q, int n, std::vector<Symbol> flat);

  static Code from_words(int q, int n, const std::vector<std::vector<int>>& words);

  int q() const { return q_; }
  int n() const { return n_; }
  std::size_t size() const { return n_ == 0 ? 0 : data_.size() / static_cast<std::size_t>(n_); }

  std::span<const Symbol> word(std::size_t i) const {
    return {data_.data() + i * static_cast<std::size_t>(n_), static_cast<std::size_t>(n_)};
  }
  std::span<const Symbol> flat() const { return data_; }

  /// Position of `w` in the sorted word list.
  std::optional<std::size_t> index_of(std::span<const Symbol> w) const;
  bool contains(std::span<const Symbol> w) const { return index_of(w).has_value(); }

  /// The code formed by the given word indices (strictly increasing).
  Code subset(std::span<const std::uint32_t> indices) const;

  friend bool operator==(const Code&, const Code&) = default;
  friend std::strong_ordering operator<=>(const Code& a, const Code& b);

 private:
  Code(int q, int n, std::vector<Symbol> sorted_flat) : q_(q), n_(n), data_(std::move(sorted_flat)) {}

  int q_ = 2;
  int n_ = 0;
  std::vector<Symbol> data_;
};

struct MdsProfile {
  int k = 0;  // n - d + 1
  int d = 0;
  bool is_mds = false;
};

/// parts[i] holds the word indices (into the parent code) labelled with symbol i.
struct LabeledPartition {
  std::vector<std::vector<std::uint32_t>> parts;
};

int hamming(std::span<const Symbol> a, std::span<const Symbol> b);

/// Minimum distance. A single-word code has distance n by convention.
int min_distance(const Code& c);

/// Reference O(M^2 n) scan; kept public for cross-checking.
int min_distance_pairwise(const Code& c);

/// Smallest t such that every t-subset of coordinates projects the code
/// injectively gives d = n - t + 1. Cost is sum over t of C(n,t) * M.
int min_distance_projective(const Code& c);

int cross_distance(const Code& a, const Code& b);

/// Histogram h[i] = number of unordered word pairs at distance i.
std::vector<std::uint64_t> distance_distribution(const Code& c);

MdsProfile is_mds(const Code& c);

/// Checks the defining property directly: M = q^k and every k-subset of
/// coordinates maps the code bijectively onto A^k.
bool verify_mds_direct(const Code& c);

/// Dimension k with M = q^k, or nullopt if M is not a power of q.
std::optional<int> log_q_size(const Code& c);

Code puncture(const Code& c, int pos);

struct Shortened {
  Code code;
  std::vector<std::uint32_t> source;  // index in the parent of each word
};

/// Words with symbol s at `pos`, with `pos` removed.
Code shorten(const Code& c, int pos, int s);
Shortened shorten_with_source(const Code& c, int pos, int s);

/// Appends symbol i to the words of part i. The partition is validated first.
Code extend_with_partition(const Code& c, const LabeledPartition& p);

/// Throws ValidationError naming the offending part.
void validate_partition(const Code& c, const LabeledPartition& p);

Code direct_sum(const Code& a, const Code& b);

/// Union over symbols i of C_i (+) D_i, where C_i and D_i shorten the last
/// coordinate. For (n1,n1-1) and (n2,n2-1) MDS inputs the result is an
/// (n1+n2-2, n1+n2-3) MDS code.
Code theorem1_construct(const Code& c, const Code& d);

Code full_space(int q, int n);
Code repetition_code(int q, int n);

/// {(x, y, table[x][y])}. Rows of `table` must form a Latin square.
Code latin_square_code(const std::vector<std::vector<int>>& table);

/// Cayley table code of Z_q: {(x, y, x+y mod q)}.
Code cyclic_group_code(int q);

}  // namespace mds
