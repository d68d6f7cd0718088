#ifndef ROOTGRID_SRC_VERTEX_FLOW_HPP
#define ROOTGRID_SRC_VERTEX_FLOW_HPP

#include <vector>

#include "rootgrid/graph.hpp"

namespace rootgrid::detail {

// Unit vertex capacities via vertex splitting: every vertex v becomes
// in(v) -> out(v) with capacity 1, every non-loop edge uv becomes
// out(u) -> in(v) and out(v) -> in(u) with unbounded capacity. A super
// source feeds in(s) for each source, out(t) drains to a super sink for each
// target. Augmenting paths are shortest paths found by BFS with arcs scanned
// by ascending neighbour id, so results are deterministic. With
// `terminals_cuttable` false the split arcs of sources and targets are
// unbounded, so every finite cut avoids them.
class VertexFlow {
 public:
  VertexFlow(const Graph& g, const VertexSet& sources, const VertexSet& targets, bool terminals_cuttable = true);

  // Augments until the flow reaches `limit` or no augmenting path remains.
  int augment(int limit);
  [[nodiscard]] int value() const { return value_; }

  // Minimum cut closest to the sources / targets. Valid after a maximum flow.
  [[nodiscard]] VertexSet source_side_cut() const;
  [[nodiscard]] VertexSet sink_side_cut() const;

  // Decomposes the current flow into paths, trimmed so each meets the
  // sources only first and the targets only last.
  [[nodiscard]] std::vector<Path> paths() const;

 private:
  struct Arc {
    int to;
    int cap;
    int rev;
    EdgeId edge;  // -1 for split and terminal arcs
    bool forward;
  };

  int add_arc(int from, int to, int cap, EdgeId edge);
  [[nodiscard]] int in_node(int idx) const { return 2 * idx; }
  [[nodiscard]] int out_node(int idx) const { return 2 * idx + 1; }
  [[nodiscard]] std::vector<bool> residual_reach_from_source() const;

  std::vector<VertexId> ids_;
  std::vector<std::vector<Arc>> adj_;
  VertexSet sources_;
  VertexSet targets_;
  int source_ = 0;
  int sink_ = 0;
  int value_ = 0;
};

}  // namespace rootgrid::detail

#endif  // ROOTGRID_SRC_VERTEX_FLOW_HPP
