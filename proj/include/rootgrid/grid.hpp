#ifndef ROOTGRID_GRID_HPP
#define ROOTGRID_GRID_HPP

#include <compare>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "rootgrid/graph.hpp"

namespace rootgrid {

class GridError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

struct GridSpec {
  int n = 1;
};

/// 1-based (row, column) position in an n x n grid.
struct GridCoord {
  int i = 1;
  int j = 1;

  auto operator<=>(const GridCoord&) const = default;
};

[[nodiscard]] std::string to_string(GridCoord c);

/// Unit-distance pair of grid positions, stored with a < b.
struct GridEdge {
  GridCoord a;
  GridCoord b;

  GridEdge() = default;
  GridEdge(GridCoord x, GridCoord y);

  auto operator<=>(const GridEdge&) const = default;
};

[[nodiscard]] std::string to_string(const GridEdge& e);

using CoordSet = std::set<GridCoord>;

/// A subgraph of the n x n grid: the pattern graphs models are taken of.
struct GridPattern {
  int n = 1;
  CoordSet vertices;
  std::set<GridEdge> edges;

  bool operator==(const GridPattern&) const = default;
};

[[nodiscard]] GridPattern full_grid_pattern(int n);

/// Throws GridError unless the pattern is a subgraph of its n x n grid.
void check_pattern(const GridPattern& p);

/// Pattern vertices incident with a grid edge the pattern does not contain.
[[nodiscard]] CoordSet pattern_boundary(const GridPattern& p);

/// Indices of rows lying entirely inside the pattern's vertex set.
[[nodiscard]] std::vector<int> full_rows(const GridPattern& p);

/// Vertex id (i - 1) * n + j, so ascending ids are row-major order.
[[nodiscard]] VertexId grid_vertex_id(GridSpec spec, GridCoord c);
[[nodiscard]] GridCoord grid_coord_of(GridSpec spec, VertexId v);

/// The n x n grid. Edge ids are assigned row-major: at each position the
/// rightward edge (if any) comes before the downward one, starting at 1.
[[nodiscard]] Graph grid_graph(GridSpec spec);

[[nodiscard]] CoordSet row(GridSpec spec, int i);
[[nodiscard]] CoordSet column(GridSpec spec, int j);

/// Placement of the nested structure used by the extraction: the band
/// subgrid H_0 of side g + 2k anchored so that the target subgrid H_k has
/// its top-left corner at `anchor`.
struct GridAtlas {
  GridSpec spec;
  GridCoord anchor;
  int g = 1;
  int k = 1;

  GridAtlas() = default;
  GridAtlas(GridSpec spec, GridCoord anchor, int g, int k);

  [[nodiscard]] int band_height() const { return g + 2 * k; }
  [[nodiscard]] int first_band_row() const { return anchor.i - k; }
  [[nodiscard]] int last_band_row() const { return anchor.i + k + g - 1; }

  bool operator==(const GridAtlas& o) const {
    return spec.n == o.spec.n && anchor == o.anchor && g == o.g && k == o.k;
  }
};

/// H_s, 0 <= s <= k: the square of side g + 2(k - s) centred on H_k.
[[nodiscard]] CoordSet inner_subgrid(const GridAtlas& atlas, int s);

/// C_s = H_s \ H_{s+1}, 0 <= s <= k - 1.
[[nodiscard]] CoordSet peel_cycle(const GridAtlas& atlas, int s);

/// S_s, 1 <= s <= k: the s-th cycle surrounding H_k, counted from outside.
[[nodiscard]] CoordSet ring(const GridAtlas& atlas, int s);

/// L: the k positions (i0, j0) .. (i0 + k - 1, j0), top to bottom.
[[nodiscard]] std::vector<GridCoord> root_segment(const GridAtlas& atlas);

/// Picks g + 2k consecutive rows none of which contains a forbidden
/// position. The k + 1 aligned bands (rows 1.., g+2k+1.., ...) are tried
/// first, then every other window top to bottom. Columns start at 1.
[[nodiscard]] std::optional<GridAtlas> choose_band(GridSpec spec, int g, int k,
                                                   const CoordSet& forbidden);

}  // namespace rootgrid

#endif  // ROOTGRID_GRID_HPP
