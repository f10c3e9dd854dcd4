#include "mds/graph.hpp"

namespace mds {

ColoredGraph encode_graph(const Code& c) {
  ColoredGraph g;
  g.q = c.q();
  g.n = c.n();
  g.words = c.size();
  const std::size_t q = static_cast<std::size_t>(c.q());
  const std::size_t n = static_cast<std::size_t>(c.n());
  const std::size_t ns = n * q;
  const std::size_t nv = ns + c.size();
  g.color.assign(nv, 0);
  for (std::size_t v = ns; v < nv; ++v) g.color[v] = 1;

  std::vector<std::uint32_t> deg(nv, 0);
  for (std::size_t v = 0; v < ns; ++v) deg[v] = static_cast<std::uint32_t>(q - 1);
  for (std::size_t w = 0; w < c.size(); ++w) {
    auto word = c.word(w);
    deg[ns + w] = static_cast<std::uint32_t>(n);
    for (std::size_t i = 0; i < n; ++i) ++deg[i * q + word[i]];
  }
  g.offsets.assign(nv + 1, 0);
  for (std::size_t v = 0; v < nv; ++v) g.offsets[v + 1] = g.offsets[v] + deg[v];
  g.adj.resize(g.offsets[nv]);
  std::vector<std::uint32_t> fill(g.offsets.begin(), g.offsets.end() - 1);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t a = 0; a < q; ++a)
      for (std::size_t b = 0; b < q; ++b)
        if (a != b) g.adj[fill[i * q + a]++] = static_cast<std::uint32_t>(i * q + b);
  for (std::size_t w = 0; w < c.size(); ++w) {
    auto word = c.word(w);
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t s = i * q + word[i];
      g.adj[fill[s]++] = static_cast<std::uint32_t>(ns + w);
      g.adj[fill[ns + w]++] = static_cast<std::uint32_t>(s);
    }
  }
  return g;
}

}  // namespace mds
