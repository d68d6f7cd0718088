// Instance builders shared by the unit and acceptance tests.
#ifndef ROOTGRID_TESTS_SUPPORT_HPP
#define ROOTGRID_TESTS_SUPPORT_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "rootgrid/extraction.hpp"
#include "rootgrid/instances.hpp"

namespace rootgrid::testing {

inline int pick(std::mt19937_64& rng, int m) { return static_cast<int>(rng() % static_cast<std::uint64_t>(m)); }

inline Graph path_graph(const std::vector<VertexId>& vs) {
  Graph g;
  for (VertexId v : vs) g.add_vertex(v);
  for (std::size_t i = 0; i + 1 < vs.size(); ++i) g.add_edge(vs[i], vs[i + 1]);
  return g;
}

inline ExtractionProblem grid_problem(int n, int g, int k, const VertexSet& roots) {
  return {grid_graph(GridSpec{n}), roots, identity_model(n), ExtractionParams{n, g, k}};
}

struct BrokenInstance {
  Instance instance;
  std::string how;
};

// Instances where the roots reach the grid through fewer than k vertices:
// detached roots, roots hung on one hub vertex, or roots hung on one grid vertex.
inline BrokenInstance broken_instance(std::uint64_t seed) {
  std::mt19937_64 rng(seed * 7919 + 17);
  const int variant = static_cast<int>(seed % 3);
  const bool small = (seed / 3) % 2 == 0;
  InstanceRecipe r;
  r.kind = InstanceKind::grid_plus_roots;
  r.g = 2;
  r.k = variant == 0 && small ? 1 : 2;
  // Small grids only clear the size bound for a single root.
  r.n = r.k == 1 ? 8 : 13;
  r.seed = seed;
  r.degree = r.k;
  const int n = r.n;
  Graph g = grid_graph(GridSpec{n});
  VertexSet roots;
  std::string how;
  for (int t = 1; t <= r.k; ++t) {
    g.add_vertex(n * n + t);
    roots.insert(n * n + t);
  }
  if (variant == 0) {
    how = "detached";
    // The first root may still touch the grid; the last never does.
    if (r.k == 2) g.add_edge(n * n + 1, 1 + pick(rng, n));
    if (pick(rng, 2) == 0) {
      const VertexId spare = n * n + r.k + 1;
      g.add_vertex(spare);
      g.add_edge(n * n + r.k, spare);
    }
  } else if (variant == 1) {
    how = "hub";
    const VertexId hub = n * n + r.k + 1;
    g.add_vertex(hub);
    for (VertexId z : roots) g.add_edge(z, hub);
    const int fan = 1 + pick(rng, n);
    for (int t = 0; t < fan; ++t) g.add_edge(hub, 1 + pick(rng, n));
  } else {
    how = "grid-cut-vertex";
    const VertexId anchor = 1 + pick(rng, n * n);
    for (VertexId z : roots) g.add_edge(z, anchor);
    if (r.k == 2) g.add_edge(n * n + 1, n * n + 2);
  }
  return {Instance{std::move(g), std::move(roots), identity_model(n), r}, how};
}

// G_n with every vertex (i,j) split into a (id) and b (id + n^2) joined by an
// edge; grid edges run from b of one position to a of the next. The model
// uses the two-vertex branches, so extraction has edges to contract.
inline ExtractionProblem subdivided_grid_problem(int n, int g, int k, bool external_roots) {
  const GridSpec spec{n};
  const int shift = n * n;
  Graph host;
  Model m;
  m.pattern = full_grid_pattern(n);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      const VertexId a = grid_vertex_id(spec, {i, j});
      host.add_vertex(a);
      host.add_vertex(a + shift);
    }
  }
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      const VertexId a = grid_vertex_id(spec, {i, j});
      const EdgeId inner = host.add_edge(a + shift, a);
      m.branches[{i, j}] = Subgraph{{a, a + shift}, {inner}};
    }
  }
  for (const GridEdge& e : m.pattern.edges) {
    const VertexId from = grid_vertex_id(spec, e.a) + shift;
    const VertexId to = grid_vertex_id(spec, e.b);
    m.edge_images[e] = host.add_edge(from, to);
  }
  VertexSet roots;
  if (external_roots) {
    for (int t = 1; t <= k; ++t) {
      const VertexId z = 2 * shift + t;
      host.add_vertex(z);
      roots.insert(z);
      host.add_edge(z, grid_vertex_id(spec, {1, 2 * t - 1}));
      host.add_edge(z, grid_vertex_id(spec, {1, 2 * t}) + shift);
    }
  } else {
    for (int j = 1; j <= k; ++j) roots.insert(grid_vertex_id(spec, {1, j}) + shift);
  }
  return {std::move(host), std::move(roots), std::move(m), ExtractionParams{n, g, k}};
}

// Tiny hosts (at most 8 vertices) with a pseudomodel of G_2, or of the top two
// rows of G_3, plus random extra edges and roots.
inline std::vector<ExtractionProblem> hypothesis_corpus(int count) {
  std::vector<ExtractionProblem> out;
  for (int s = 0; s < count; ++s) {
    std::mt19937_64 rng(1000 + s);
    const bool wide = s % 4 == 3;
    const int n = wide ? 3 : 2;
    GridPattern pattern;
    pattern.n = n;
    const int rows = 2;
    for (int i = 1; i <= rows; ++i) {
      for (int j = 1; j <= n; ++j) pattern.vertices.insert({i, j});
    }
    for (GridCoord c : pattern.vertices) {
      if (pattern.vertices.contains({c.i, c.j + 1})) pattern.edges.insert(GridEdge(c, {c.i, c.j + 1}));
      if (pattern.vertices.contains({c.i + 1, c.j})) pattern.edges.insert(GridEdge(c, {c.i + 1, c.j}));
    }
    const int cells = static_cast<int>(pattern.vertices.size());
    const int total = std::min(8, cells + 1 + pick(rng, 8 - cells + 1));
    Graph host;
    for (VertexId v = 1; v <= total; ++v) host.add_vertex(v);
    Model m;
    m.pattern = pattern;
    VertexId next = 1;
    for (GridCoord c : pattern.vertices) m.branches[c] = Subgraph{{next++}, {}};
    // Sometimes a spare vertex joins a branch, with or without a connecting edge.
    if (next <= total && pick(rng, 2) == 0) {
      const GridCoord c = *std::next(pattern.vertices.begin(), pick(rng, cells));
      Subgraph& b = m.branches[c];
      if (pick(rng, 3) != 0) b.edges.insert(host.add_edge(*b.vertices.begin(), next));
      b.vertices.insert(next++);
    }
    for (const GridEdge& e : pattern.edges) {
      if (pick(rng, 7) == 0) continue;  // leave a few pattern edges to be fixed below
      m.edge_images[e] = host.add_edge(*m.branches[e.a].vertices.begin(), *m.branches[e.b].vertices.begin());
    }
    for (const GridEdge& e : pattern.edges) {
      if (!m.edge_images.contains(e)) {
        m.edge_images[e] = host.add_edge(*m.branches[e.a].vertices.rbegin(), *m.branches[e.b].vertices.rbegin());
      }
    }
    const int extra = pick(rng, 6);
    for (int t = 0; t < extra; ++t) {
      const VertexId u = 1 + pick(rng, total);
      const VertexId v = 1 + pick(rng, total);
      if (u != v) host.add_edge(u, v);
    }
    const int k = 1 + pick(rng, 2);
    VertexSet roots;
    while (static_cast<int>(roots.size()) < k) roots.insert(1 + pick(rng, total));
    out.push_back({std::move(host), std::move(roots), std::move(m), ExtractionParams{n, 2, k}});
  }
  return out;
}

}  // namespace rootgrid::testing

#endif  // ROOTGRID_TESTS_SUPPORT_HPP
