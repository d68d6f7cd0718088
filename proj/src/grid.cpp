#include "rootgrid/grid.hpp"

#include <cstdlib>

namespace rootgrid {
namespace {

bool in_range(int n, GridCoord c) { return c.i >= 1 && c.i <= n && c.j >= 1 && c.j <= n; }

void require_in_range(int n, GridCoord c) {
  if (!in_range(n, c)) throw GridError("grid position " + to_string(c) + " outside 1.." + std::to_string(n));
}

CoordSet square(int top, int left, int side) {
  CoordSet out;
  for (int i = top; i < top + side; ++i) {
    for (int j = left; j < left + side; ++j) out.insert({i, j});
  }
  return out;
}

}  // namespace

std::string to_string(GridCoord c) {
  return "[" + std::to_string(c.i) + "," + std::to_string(c.j) + "]";
}

GridEdge::GridEdge(GridCoord x, GridCoord y) : a(std::min(x, y)), b(std::max(x, y)) {
  if (std::abs(a.i - b.i) + std::abs(a.j - b.j) != 1) {
    throw GridError("positions " + to_string(a) + " and " + to_string(b) + " are not grid neighbours");
  }
}

std::string to_string(const GridEdge& e) { return to_string(e.a) + "-" + to_string(e.b); }

GridPattern full_grid_pattern(int n) {
  if (n < 1) throw GridError("grid side must be positive");
  GridPattern p;
  p.n = n;
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      p.vertices.insert({i, j});
      if (j < n) p.edges.insert(GridEdge({i, j}, {i, j + 1}));
      if (i < n) p.edges.insert(GridEdge({i, j}, {i + 1, j}));
    }
  }
  return p;
}

void check_pattern(const GridPattern& p) {
  if (p.n < 1) throw GridError("grid side must be positive");
  for (GridCoord c : p.vertices) require_in_range(p.n, c);
  for (const GridEdge& e : p.edges) {
    if (!p.vertices.contains(e.a) || !p.vertices.contains(e.b)) {
      throw GridError("pattern edge " + to_string(e) + " has an end outside the pattern");
    }
  }
}

CoordSet pattern_boundary(const GridPattern& p) {
  CoordSet out;
  for (GridCoord c : p.vertices) {
    const GridCoord around[] = {{c.i - 1, c.j}, {c.i + 1, c.j}, {c.i, c.j - 1}, {c.i, c.j + 1}};
    for (GridCoord d : around) {
      if (in_range(p.n, d) && !p.edges.contains(GridEdge(c, d))) {
        out.insert(c);
        break;
      }
    }
  }
  return out;
}

std::vector<int> full_rows(const GridPattern& p) {
  std::vector<int> out;
  for (int i = 1; i <= p.n; ++i) {
    bool full = true;
    for (int j = 1; j <= p.n && full; ++j) full = p.vertices.contains({i, j});
    if (full) out.push_back(i);
  }
  return out;
}

VertexId grid_vertex_id(GridSpec spec, GridCoord c) {
  require_in_range(spec.n, c);
  return (c.i - 1) * spec.n + c.j;
}

GridCoord grid_coord_of(GridSpec spec, VertexId v) {
  if (v < 1 || v > spec.n * spec.n) throw GridError("vertex " + std::to_string(v) + " is not a grid vertex");
  return {(v - 1) / spec.n + 1, (v - 1) % spec.n + 1};
}

Graph grid_graph(GridSpec spec) {
  if (spec.n < 1) throw GridError("grid side must be positive");
  const int n = spec.n;
  Graph g;
  for (int v = 1; v <= n * n; ++v) g.add_vertex(v);
  EdgeId next = 1;
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      VertexId here = grid_vertex_id(spec, {i, j});
      if (j < n) g.add_edge(next++, here, grid_vertex_id(spec, {i, j + 1}));
      if (i < n) g.add_edge(next++, here, grid_vertex_id(spec, {i + 1, j}));
    }
  }
  return g;
}

CoordSet row(GridSpec spec, int i) {
  if (i < 1 || i > spec.n) throw GridError("row " + std::to_string(i) + " out of range");
  CoordSet out;
  for (int j = 1; j <= spec.n; ++j) out.insert({i, j});
  return out;
}

CoordSet column(GridSpec spec, int j) {
  if (j < 1 || j > spec.n) throw GridError("column " + std::to_string(j) + " out of range");
  CoordSet out;
  for (int i = 1; i <= spec.n; ++i) out.insert({i, j});
  return out;
}

GridAtlas::GridAtlas(GridSpec spec_, GridCoord anchor_, int g_, int k_)
    : spec(spec_), anchor(anchor_), g(g_), k(k_) {
  if (k < 1 || k > g) throw GridError("atlas needs 1 <= k <= g");
  const int n = spec.n;
  if (anchor.i - k < 1 || anchor.j - k < 1 || anchor.i + k + g - 1 > n || anchor.j + k + g - 1 > n) {
    throw GridError("band subgrid anchored at " + to_string(anchor) + " does not fit in the grid");
  }
}

CoordSet inner_subgrid(const GridAtlas& atlas, int s) {
  if (s < 0 || s > atlas.k) throw GridError("inner subgrid index " + std::to_string(s) + " out of range");
  const int offset = s - atlas.k;
  return square(atlas.anchor.i + offset, atlas.anchor.j + offset, atlas.g + 2 * (atlas.k - s));
}

CoordSet peel_cycle(const GridAtlas& atlas, int s) {
  if (s < 0 || s > atlas.k - 1) throw GridError("cycle index " + std::to_string(s) + " out of range");
  CoordSet outer = inner_subgrid(atlas, s);
  for (GridCoord c : inner_subgrid(atlas, s + 1)) outer.erase(c);
  return outer;
}

CoordSet ring(const GridAtlas& atlas, int s) {
  if (s < 1 || s > atlas.k) throw GridError("ring index " + std::to_string(s) + " out of range");
  const auto [i0, j0] = atlas.anchor;
  const int k = atlas.k;
  const int g = atlas.g;
  const int lo_i = i0 - k + s - 1, hi_i = i0 + k + g - s;
  const int lo_j = j0 - k + s - 1, hi_j = j0 + k + g - s;
  CoordSet out;
  for (int i = lo_i; i <= hi_i; ++i) {
    out.insert({i, lo_j});
    out.insert({i, hi_j});
  }
  for (int j = lo_j; j <= hi_j; ++j) {
    out.insert({lo_i, j});
    out.insert({hi_i, j});
  }
  return out;
}

std::vector<GridCoord> root_segment(const GridAtlas& atlas) {
  std::vector<GridCoord> out;
  for (int i = atlas.anchor.i; i < atlas.anchor.i + atlas.k; ++i) out.push_back({i, atlas.anchor.j});
  return out;
}

std::optional<GridAtlas> choose_band(GridSpec spec, int g, int k, const CoordSet& forbidden) {
  if (k < 1 || k > g) throw GridError("band selection needs 1 <= k <= g");
  const int height = g + 2 * k;
  if (height > spec.n) return std::nullopt;
  std::vector<bool> dirty(spec.n + 1, false);
  for (GridCoord c : forbidden) {
    require_in_range(spec.n, c);
    dirty[c.i] = true;
  }
  auto clean = [&](int top) {
    for (int i = top; i < top + height; ++i) {
      if (dirty[i]) return false;
    }
    return true;
  };
  auto make = [&](int top) { return GridAtlas(spec, {top + k, k + 1}, g, k); };

  for (int top = 1; top + height - 1 <= spec.n; top += height) {
    if (clean(top)) return make(top);
  }
  for (int top = 1; top + height - 1 <= spec.n; ++top) {
    if (clean(top)) return make(top);
  }
  return std::nullopt;
}

}  // namespace rootgrid
