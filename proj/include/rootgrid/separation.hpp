#ifndef ROOTGRID_SEPARATION_HPP
#define ROOTGRID_SEPARATION_HPP

#include <optional>
#include <tuple>
#include <stdexcept>
#include <vector>

#include "rootgrid/graph.hpp"
#include "rootgrid/model.hpp"
#include "rootgrid/report.hpp"

namespace rootgrid {

class SeparationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// (A, B) with A ∪ B = G and no shared edge. The order |V(A ∩ B)| is
/// always recomputed from the sides.
class Separation {
 public:
  /// Throws SeparationError unless (a, b) is a separation of g.
  static Separation make(const Graph& g, Subgraph a, Subgraph b);
  /// Skips the checks; for callers that construct sides by rule.
  static Separation trusted(Subgraph a, Subgraph b);

  [[nodiscard]] const Subgraph& a() const { return a_; }
  [[nodiscard]] const Subgraph& b() const { return b_; }
  [[nodiscard]] VertexSet cut() const;
  [[nodiscard]] int order() const { return static_cast<int>(cut().size()); }
  [[nodiscard]] Separation flipped() const { return trusted(b_, a_); }

  bool operator==(const Separation&) const = default;
  auto operator<=>(const Separation& o) const {
    return std::tie(a_.vertices, a_.edges, b_.vertices, b_.edges) <=>
           std::tie(o.a_.vertices, o.a_.edges, o.b_.vertices, o.b_.edges);
  }

 private:
  Separation(Subgraph a, Subgraph b) : a_(std::move(a)), b_(std::move(b)) {}
  Subgraph a_;
  Subgraph b_;
};

/// Rules: separation-cover, separation-shared-edge, separation-side.
[[nodiscard]] ValidationReport check_separation(const Graph& g, const Separation& s);

[[nodiscard]] inline int separation_order(const Separation& s) { return s.order(); }

/// Separation of g with the given cut: A = cut plus everything reachable
/// from `sources` in g - cut, B = the rest plus the cut. Edges with both ends
/// in the cut go to A.
[[nodiscard]] Separation separation_from_cut(const Graph& g, const VertexSet& sources, const VertexSet& cut);

struct Tangle {
  int order = 1;
  std::vector<Separation> members;
};

/// Rules: completeness, triple-cover, proper-small-side, member-order.
/// `all_separations` must list every separation of order below t.order.
[[nodiscard]] ValidationReport check_tangle_axioms(const Graph& g, const Tangle& t,
                                                   const std::vector<Separation>& all_separations);

/// Either `paths` (k disjoint paths) or `cut` with |cut| < k and its separation.
struct CutResult {
  std::vector<Path> paths;
  std::optional<VertexSet> cut;
  std::optional<Separation> separation;

  [[nodiscard]] bool found_paths() const { return !cut.has_value(); }
};

/// Vertex-disjoint source-target paths in g - forbidden. Sources and targets
/// may themselves be cut. Each returned path touches the sources only at its
/// first vertex and the targets only at its last. When fewer than k paths
/// exist the result holds a minimum cut and the separation of g - forbidden
/// it induces. The cut avoids sources and targets whenever some minimum cut
/// does, and among the eligible cuts it is the one closest to the sources.
[[nodiscard]] CutResult menger(const Graph& g, const VertexSet& sources, const VertexSet& targets, int k,
                               const VertexSet& forbidden = {});

/// Size of a maximum set of disjoint source-target paths (uncapped).
[[nodiscard]] int max_disjoint_paths(const Graph& g, const VertexSet& sources, const VertexSet& targets);

struct BlockingSeparation {
  enum class Kind { strict, reducible };
  Kind kind = Kind::strict;
  Separation separation = Separation::trusted({}, {});
  int row = 0;
};

/// Looks for a separation (A, B) of g with roots ⊆ V(A), the image of one of
/// `rows` inside V(B), and order below k (strict) or exactly k with B ≠ g
/// (reducible). Strict ones take precedence over reducible ones; within a
/// kind the smallest row wins. `rows` must lie inside the pattern of p.
[[nodiscard]] std::optional<BlockingSeparation> find_row_blocking_separation(
    const Graph& g, const VertexSet& roots, const Pseudomodel& p, const std::vector<int>& rows, int k);

/// Orients s as a member of the tangle induced by a model of the full n x n
/// grid: the returned (A, B) has no row image inside V(A). Throws
/// SeparationError when neither or both orientations qualify, which happens
/// only for order >= n or an invalid model.
[[nodiscard]] Separation grid_tangle_member(const Model& p, const Separation& s);

}  // namespace rootgrid

#endif  // ROOTGRID_SEPARATION_HPP
