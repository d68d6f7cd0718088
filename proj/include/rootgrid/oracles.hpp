#ifndef ROOTGRID_ORACLES_HPP
#define ROOTGRID_ORACLES_HPP

#include <cstddef>
#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

#include "rootgrid/extraction.hpp"
#include "rootgrid/graph.hpp"
#include "rootgrid/model.hpp"
#include "rootgrid/report.hpp"
#include "rootgrid/separation.hpp"

// Brute-force counterparts of the fast routines, for tiny graphs only.
namespace rootgrid::oracles {

struct EnumerationBudget {
  int maxVertices = 10;
  int maxOrder = 3;
  int maxPatternSide = 3;
  std::size_t maxSearchNodes = 20'000'000;
};

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Streams every separation of order <= max_order: each cut set X, each split
/// of the components of g - X, each assignment of the edges with both ends in
/// X. No separation is produced twice. Stop early by returning false.
void for_each_separation(const Graph& g, int max_order, const EnumerationBudget& budget,
                         const std::function<bool(const Separation&)>& visit);

/// Same set, sorted.
[[nodiscard]] std::vector<Separation> enumerate_separations(const Graph& g, int max_order,
                                                            const EnumerationBudget& budget = {});

/// All tangles of order theta, as sorted member lists.
[[nodiscard]] std::vector<Tangle> enumerate_tangles(const Graph& g, int theta, const EnumerationBudget& budget = {});

/// A model of the side x side grid in g, or nullopt. Branches are induced.
[[nodiscard]] std::optional<Model> brute_force_grid_model(const Graph& g, int side,
                                                          const EnumerationBudget& budget = {});

/// Least X (ties broken by enumeration order) such that g - X has no path
/// from a source to a target. X may contain sources and targets.
[[nodiscard]] VertexSet minimum_vertex_cut(const Graph& g, const VertexSet& sources, const VertexSet& targets,
                                           const EnumerationBudget& budget = {});

/// A separation of order <= max_order with the roots in V(A) and the image of
/// some full pattern row in V(B), found by enumeration.
[[nodiscard]] std::optional<Separation> exhaustive_blocking_separation(const Graph& g, const VertexSet& roots,
                                                                       const Pseudomodel& p, int max_order,
                                                                       const EnumerationBudget& budget = {});

/// For each separation oriented as a member of the tangle of `grid_model`
/// (separations of order >= its side are skipped), every output row whose base
/// image lies in V(A) needs order >= g, and the column-counting bound must be
/// both >= g and <= the order. Rules: row-order, row-bound.
[[nodiscard]] ValidationReport verify_output_row_property(const ExtractionResult& result, const Model& grid_model,
                                                          const std::vector<Separation>& seps, int g);

}  // namespace rootgrid::oracles

#endif  // ROOTGRID_ORACLES_HPP
