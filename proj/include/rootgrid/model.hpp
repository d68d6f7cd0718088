#ifndef ROOTGRID_MODEL_HPP
#define ROOTGRID_MODEL_HPP

#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "rootgrid/graph.hpp"
#include "rootgrid/grid.hpp"
#include "rootgrid/report.hpp"

namespace rootgrid {

/// Map from a grid pattern into a host graph: each pattern vertex to a
/// branch subgraph, each pattern edge to a host edge. Whether it is a
/// pseudomodel or a model is decided by the validators below, not by type.
struct Pseudomodel {
  GridPattern pattern;
  std::map<GridCoord, Subgraph> branches;
  std::map<GridEdge, EdgeId> edge_images;

  [[nodiscard]] const Subgraph& branch(GridCoord c) const;
  bool operator==(const Pseudomodel&) const = default;
};

using Model = Pseudomodel;

/// Each v_ij to the single host vertex grid_vertex_id(n, (i,j)) and each
/// pattern edge to the matching edge of grid_graph(n).
[[nodiscard]] Model identity_model(int n);

/// Rules: pattern, branch-missing, branch-extra, non-null-branch,
/// branch-not-subgraph, pairwise-vertex-disjoint, edge-image-missing,
/// edge-image-extra, edge-image-unknown, distinct-edge-images,
/// edge-image-outside-branches, edge-image-ends.
[[nodiscard]] ValidationReport validate_pseudomodel(const Graph& host, const Pseudomodel& p);

/// validate_pseudomodel plus branch-connected for every branch.
[[nodiscard]] ValidationReport validate_model(const Graph& host, const Pseudomodel& p);

/// Union of the branch vertex sets over `coords`; throws on unknown positions.
[[nodiscard]] VertexSet image_of_vertices(const Pseudomodel& p, const CoordSet& coords);

/// Branches of f's vertices plus images of f's edges.
[[nodiscard]] Subgraph image_of_subgraph(const Pseudomodel& p, const GridPattern& f);

class ModelError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// p with pattern h; h must be a subgraph of p's pattern.
[[nodiscard]] Pseudomodel restrict(const Pseudomodel& p, const GridPattern& h);

/// The g x g square with top-left corner `corner`, renumbered to (1,1)..(g,g).
/// Returns the relabelled model and the (new, old) coordinate pairs.
[[nodiscard]] std::pair<Model, std::vector<std::pair<GridCoord, GridCoord>>> relabel_square(
    const Pseudomodel& p, GridCoord corner, int g);

/// Witness that `augmented` is a root augmentation of `base`, both models
/// of the g x g grid. `labeling` pairs each (a,b) of the small grid with the
/// position it came from in the larger pattern.
struct AugmentationWitness {
  Model base;
  Model augmented;
  VertexSet roots;
  std::vector<std::pair<GridCoord, GridCoord>> labeling;

  bool operator==(const AugmentationWitness&) const = default;
};

class AugmentationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Adds path i (0-based) to the branch of (i+1, 1). Path i must start at a
/// root, end inside that branch, avoid every other branch and every other
/// path, and touch its own branch only at its last vertex. Throws
/// AugmentationError listing each failed condition with its path index.
[[nodiscard]] Model apply_augmentation(const Graph& host, const Model& base,
                                       const std::vector<Path>& paths, const VertexSet& roots);

/// Rules: witness-shape, unchanged-branch, first-column-superset,
/// first-column-root, edge-image-unchanged, plus validate_model of the
/// augmented model (prefixed "augmented:").
[[nodiscard]] ValidationReport check_augmentation(const Graph& host, const AugmentationWitness& w);

}  // namespace rootgrid

#endif  // ROOTGRID_MODEL_HPP
