#ifndef ROOTGRID_GRAPH_HPP
#define ROOTGRID_GRAPH_HPP

#include <cstddef>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

namespace rootgrid {

using VertexId = int;
using EdgeId = int;
using VertexSet = std::set<VertexId>;
using EdgeSet = std::set<EdgeId>;

class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct EdgeEnds {
  VertexId u{};
  VertexId v{};

  [[nodiscard]] bool is_loop() const { return u == v; }
  [[nodiscard]] VertexId other(VertexId w) const { return w == u ? v : u; }
  bool operator==(const EdgeEnds&) const = default;
};

/// Finite multigraph. Loops and parallel edges are allowed; vertex and edge
/// identifiers are arbitrary integers, unique within their kind.
class Graph {
 public:
  Graph() = default;

  void add_vertex(VertexId v);
  void add_edge(EdgeId e, VertexId u, VertexId v);
  /// Adds an edge with identifier one past the largest in use.
  EdgeId add_edge(VertexId u, VertexId v);

  [[nodiscard]] bool has_vertex(VertexId v) const { return vertices_.contains(v); }
  [[nodiscard]] bool has_edge(EdgeId e) const { return edges_.contains(e); }
  [[nodiscard]] const EdgeEnds& ends(EdgeId e) const;

  [[nodiscard]] const VertexSet& vertices() const { return vertices_; }
  [[nodiscard]] const std::map<EdgeId, EdgeEnds>& edges() const { return edges_; }
  /// Edges incident with v, ascending by id; a loop is listed once.
  [[nodiscard]] const std::vector<EdgeId>& incident(VertexId v) const;

  [[nodiscard]] std::size_t num_vertices() const { return vertices_.size(); }
  [[nodiscard]] std::size_t num_edges() const { return edges_.size(); }
  /// |V| + |E|, the quantity every reduction of the extraction shrinks.
  [[nodiscard]] std::size_t measure() const { return num_vertices() + num_edges(); }

  bool operator==(const Graph& other) const {
    return vertices_ == other.vertices_ && edges_ == other.edges_;
  }

 private:
  friend Graph delete_edge(const Graph&, EdgeId);

  VertexSet vertices_;
  std::map<EdgeId, EdgeEnds> edges_;
  std::map<VertexId, std::vector<EdgeId>> incidence_;
};

/// A vertex set and an edge set of some host graph. Snapshots only: nothing
/// ties a Subgraph to a particular Graph object.
struct Subgraph {
  VertexSet vertices;
  EdgeSet edges;

  [[nodiscard]] bool is_null() const { return vertices.empty() && edges.empty(); }
  bool operator==(const Subgraph&) const = default;
};

struct Path {
  std::vector<VertexId> vertices;
  std::vector<EdgeId> edges;

  [[nodiscard]] VertexId front() const { return vertices.front(); }
  [[nodiscard]] VertexId back() const { return vertices.back(); }
  bool operator==(const Path&) const = default;
};

struct VertexRename {
  VertexId absorbed{};
  VertexId survivor{};

  VertexId operator()(VertexId v) const { return v == absorbed ? survivor : v; }
};

struct Contraction {
  Graph graph;
  VertexRename rename;
};

[[nodiscard]] Subgraph whole(const Graph& g);
[[nodiscard]] Subgraph unite(const Subgraph& a, const Subgraph& b);
[[nodiscard]] Subgraph intersect(const Subgraph& a, const Subgraph& b);
[[nodiscard]] bool contains(const Subgraph& outer, const Subgraph& inner);

/// True when every vertex and edge of h exists in g and each edge of h has
/// both ends in V(h).
[[nodiscard]] bool is_subgraph_of(const Graph& g, const Subgraph& h);

/// Connected components of h, ordered by least vertex id.
[[nodiscard]] std::vector<Subgraph> components(const Graph& g, const Subgraph& h);
[[nodiscard]] bool is_connected(const Graph& g, const Subgraph& h);

/// Vertices of h incident with an edge of g that is not an edge of h.
[[nodiscard]] VertexSet boundary(const Graph& g, const Subgraph& h);

[[nodiscard]] Graph delete_edge(const Graph& g, EdgeId f);

/// Merges the ends of f into the smaller id. Other edges between the two
/// ends become loops; parallel edges are kept.
[[nodiscard]] Contraction contract_edge(const Graph& g, EdgeId f);

/// g minus the given vertices and every edge touching them.
[[nodiscard]] Graph delete_vertices(const Graph& g, const VertexSet& gone);

/// h as a standalone graph with the host's identifiers.
[[nodiscard]] Graph as_graph(const Graph& g, const Subgraph& h);

/// Subgraph formed by a path's vertices and edges.
[[nodiscard]] Subgraph as_subgraph(const Path& p);

/// Vertices reachable from `from` in g without entering `blocked`.
[[nodiscard]] VertexSet reachable(const Graph& g, const VertexSet& from, const VertexSet& blocked);

}  // namespace rootgrid

#endif  // ROOTGRID_GRAPH_HPP
