#pragma once

#include <cstdint>
#include <vector>

#include "mds/code.hpp"

namespace mds {

/// Two-colored graph of a code: n cliques of q "symbol" vertices (color 0)
/// and one "word" vertex (color 1) per codeword joined to the symbol vertex
/// of each of its coordinates. Symbol vertex (i, a) is i*q + a; word w is
/// n*q + w.
struct ColoredGraph {
  int q = 0;
  int n = 0;
  std::size_t words = 0;
  std::vector<std::uint32_t> offsets;  // CSR, size num_vertices()+1
  std::vector<std::uint32_t> adj;
  std::vector<std::uint8_t> color;

  std::size_t num_vertices() const { return color.size(); }
  std::size_t num_edges() const { return adj.size() / 2; }
  std::size_t symbol_vertices() const { return static_cast<std::size_t>(n) * static_cast<std::size_t>(q); }
  std::size_t degree(std::size_t v) const { return offsets[v + 1] - offsets[v]; }
  const std::uint32_t* neighbors_begin(std::size_t v) const { return adj.data() + offsets[v]; }
  const std::uint32_t* neighbors_end(std::size_t v) const { return adj.data() + offsets[v + 1]; }

  int coordinate_of(std::size_t v) const { return static_cast<int>(v) / q; }
  int symbol_of(std::size_t v) const { return static_cast<int>(v) % q; }
  bool is_word(std::size_t v) const { return v >= symbol_vertices(); }
};

ColoredGraph encode_graph(const Code& c);

}  // namespace mds
