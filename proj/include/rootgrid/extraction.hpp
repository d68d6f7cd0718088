#ifndef ROOTGRID_EXTRACTION_HPP
#define ROOTGRID_EXTRACTION_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "rootgrid/graph.hpp"
#include "rootgrid/grid.hpp"
#include "rootgrid/model.hpp"
#include "rootgrid/report.hpp"
#include "rootgrid/separation.hpp"

namespace rootgrid {

struct ExtractionParams {
  int n = 1;  // side of the grid the pattern lives in
  int g = 1;  // side of the grid to extract
  int k = 1;  // number of roots
};

/// Pseudomodel of a pattern J ⊆ G_n in `host`, together with the root set Z.
struct ExtractionProblem {
  Graph host;
  VertexSet roots;
  Pseudomodel model;
  ExtractionParams params;
};

/// Smallest n the extraction accepts for the given g and k: k(g + 2k) + 1.
[[nodiscard]] int minimum_grid_side(int g, int k);

// Trace records, one per step of the reduction and construction.

/// Recurse into side B of a separation (A, B) of order k with the roots in A.
struct SeparationRecursion {
  Separation separation = Separation::trusted({}, {});
  int row = 0;
};
/// Delete an edge that is neither an edge image nor inside a branch.
struct EdgeDeletion {
  EdgeId edge = 0;
};
/// Delete a loop, or an edge joining two roots, from a branch and the host.
struct BranchEdgeDeletion {
  EdgeId edge = 0;
  GridCoord owner;
};
/// Contract an edge of a branch that has an end outside the roots.
struct BranchEdgeContraction {
  EdgeId edge = 0;
  GridCoord owner;
  VertexRename rename;
};
/// The band subgrid chosen clear of the root-carrying pattern vertices.
struct BandSelection {
  GridAtlas atlas;
  CoordSet forbidden;
};
/// The disjoint paths from the roots to the root segment.
struct MengerAugmentation {
  std::vector<Path> paths;
};

using ReductionStep = std::variant<SeparationRecursion, EdgeDeletion, BranchEdgeDeletion, BranchEdgeContraction,
                                   BandSelection, MengerAugmentation>;

struct ReductionRecord {
  std::size_t measure_before = 0;  // |V| + |E| of the working host
  std::size_t measure_after = 0;
  ReductionStep step;
};

/// "separation-recursion", "edge-delete", "branch-edge-delete",
/// "branch-edge-contract", "band-selected" or "menger-augment".
[[nodiscard]] std::string kind_name(const ReductionStep& step);
/// True for the kinds that shrink the working host.
[[nodiscard]] bool is_reduction(const ReductionStep& step);

struct ExtractionResult {
  GridAtlas atlas;          // locates the extracted subgrid H inside the pattern
  CoordSet subgrid;         // V(H) in pattern coordinates
  AugmentationWitness witness;
  std::vector<ReductionRecord> trace;
};

enum class ExtractionErrorKind { hypothesis_violated, malformed_input, internal_invariant_broken };

[[nodiscard]] std::string kind_name(ExtractionErrorKind kind);

class ExtractionError : public std::runtime_error {
 public:
  ExtractionError(ExtractionErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

  [[nodiscard]] ExtractionErrorKind kind() const { return kind_; }

  /// The blocking separation, for hypothesis_violated; a failed final cut
  /// may also be attached to internal_invariant_broken.
  std::optional<BlockingSeparation> certificate;
  std::optional<VertexSet> cut;
  std::vector<ReductionRecord> trace;

 private:
  ExtractionErrorKind kind_;
};

/// Checks the problem's invariants other than the row-blocking hypothesis:
/// parameter ranges, a valid pseudomodel of a pattern containing a full row,
/// and "each branch is connected and off the pattern boundary, or each of
/// its components meets a root".
[[nodiscard]] ValidationReport check_problem(const ExtractionProblem& problem);

struct HypothesisCertificate {
  bool holds = true;
  std::optional<BlockingSeparation> violation;  // always of kind strict
};

/// Exact test for a separation of order < k with the roots on side A and
/// the image of a full pattern row on side B.
[[nodiscard]] HypothesisCertificate check_hypothesis(const ExtractionProblem& problem);

/// Finds a g x g subgrid H of the pattern whose branches avoid the roots and
/// a root augmentation of the model restricted to H, in the original host.
/// Throws ExtractionError.
[[nodiscard]] ExtractionResult extract(const ExtractionProblem& problem);

/// Re-executes a recorded trace on the problem and returns the result it
/// leads to. Throws ExtractionError(internal_invariant_broken) when a record
/// does not apply.
[[nodiscard]] ExtractionResult replay(const ExtractionProblem& problem, const std::vector<ReductionRecord>& trace);

/// Soundness of a result against its problem, checked without trusting the
/// algorithm. Rules: subgrid-shape, base-restriction, root-free-branch, plus
/// check_augmentation and validate_model of the base.
[[nodiscard]] ValidationReport verify_result(const ExtractionProblem& problem, const ExtractionResult& result);

/// Runs extract with the full grid as pattern, given a model of G_n.
[[nodiscard]] ExtractionResult extract_via_tangle_statement(const Graph& host, const Model& grid_model,
                                                            const VertexSet& roots, int g, int k);

/// Lower bound on the order of s implied by the column-counting argument,
/// when some row of the extracted grid has its base image inside V(A);
/// nullopt otherwise. s is assumed to be oriented as a member of the tangle
/// of `grid_model` (so no row of G_n has its image inside V(A) unless the
/// order is at least n).
[[nodiscard]] std::optional<int> row_order_bound(const Model& grid_model, const ExtractionResult& result,
                                                 const Separation& s);

}  // namespace rootgrid

#endif  // ROOTGRID_EXTRACTION_HPP
