#include "rootgrid/graph.hpp"

#include <algorithm>
#include <deque>
#include <string>

namespace rootgrid {

void Graph::add_vertex(VertexId v) {
  if (!vertices_.insert(v).second) {
    throw GraphError("duplicate vertex id " + std::to_string(v));
  }
  incidence_[v];
}

void Graph::add_edge(EdgeId e, VertexId u, VertexId v) {
  if (edges_.contains(e)) throw GraphError("duplicate edge id " + std::to_string(e));
  if (!has_vertex(u) || !has_vertex(v)) {
    throw GraphError("edge " + std::to_string(e) + " has an endpoint outside the vertex set");
  }
  edges_.emplace(e, EdgeEnds{u, v});
  // Ids are usually appended in increasing order; keep the lists sorted anyway.
  auto insert_sorted = [e](std::vector<EdgeId>& list) {
    list.insert(std::upper_bound(list.begin(), list.end(), e), e);
  };
  insert_sorted(incidence_[u]);
  if (u != v) insert_sorted(incidence_[v]);
}

EdgeId Graph::add_edge(VertexId u, VertexId v) {
  EdgeId e = edges_.empty() ? 1 : edges_.rbegin()->first + 1;
  add_edge(e, u, v);
  return e;
}

const EdgeEnds& Graph::ends(EdgeId e) const {
  auto it = edges_.find(e);
  if (it == edges_.end()) throw GraphError("unknown edge id " + std::to_string(e));
  return it->second;
}

const std::vector<EdgeId>& Graph::incident(VertexId v) const {
  auto it = incidence_.find(v);
  if (it == incidence_.end()) throw GraphError("unknown vertex id " + std::to_string(v));
  return it->second;
}

Subgraph whole(const Graph& g) {
  Subgraph h;
  h.vertices = g.vertices();
  for (const auto& [e, ends] : g.edges()) h.edges.insert(h.edges.end(), e);
  return h;
}

Subgraph unite(const Subgraph& a, const Subgraph& b) {
  Subgraph out = a;
  out.vertices.insert(b.vertices.begin(), b.vertices.end());
  out.edges.insert(b.edges.begin(), b.edges.end());
  return out;
}

Subgraph intersect(const Subgraph& a, const Subgraph& b) {
  Subgraph out;
  std::set_intersection(a.vertices.begin(), a.vertices.end(), b.vertices.begin(), b.vertices.end(),
                        std::inserter(out.vertices, out.vertices.end()));
  std::set_intersection(a.edges.begin(), a.edges.end(), b.edges.begin(), b.edges.end(),
                        std::inserter(out.edges, out.edges.end()));
  return out;
}

bool contains(const Subgraph& outer, const Subgraph& inner) {
  return std::includes(outer.vertices.begin(), outer.vertices.end(), inner.vertices.begin(),
                       inner.vertices.end()) &&
         std::includes(outer.edges.begin(), outer.edges.end(), inner.edges.begin(),
                       inner.edges.end());
}

bool is_subgraph_of(const Graph& g, const Subgraph& h) {
  for (VertexId v : h.vertices) {
    if (!g.has_vertex(v)) return false;
  }
  for (EdgeId e : h.edges) {
    if (!g.has_edge(e)) return false;
    const EdgeEnds& ends = g.ends(e);
    if (!h.vertices.contains(ends.u) || !h.vertices.contains(ends.v)) return false;
  }
  return true;
}

std::vector<Subgraph> components(const Graph& g, const Subgraph& h) {
  std::vector<Subgraph> out;
  VertexSet seen;
  for (VertexId start : h.vertices) {
    if (seen.contains(start)) continue;
    Subgraph comp;
    std::deque<VertexId> queue{start};
    seen.insert(start);
    while (!queue.empty()) {
      VertexId v = queue.front();
      queue.pop_front();
      comp.vertices.insert(v);
      for (EdgeId e : g.incident(v)) {
        if (!h.edges.contains(e)) continue;
        comp.edges.insert(e);
        VertexId w = g.ends(e).other(v);
        if (seen.insert(w).second) queue.push_back(w);
      }
    }
    out.push_back(std::move(comp));
  }
  return out;
}

bool is_connected(const Graph& g, const Subgraph& h) {
  return !h.vertices.empty() && components(g, h).size() == 1;
}

VertexSet boundary(const Graph& g, const Subgraph& h) {
  VertexSet out;
  for (VertexId v : h.vertices) {
    for (EdgeId e : g.incident(v)) {
      if (!h.edges.contains(e)) {
        out.insert(v);
        break;
      }
    }
  }
  return out;
}

Graph delete_edge(const Graph& g, EdgeId f) {
  const EdgeEnds ends = g.ends(f);
  Graph out = g;
  out.edges_.erase(f);
  auto drop = [f](std::vector<EdgeId>& list) { std::erase(list, f); };
  drop(out.incidence_[ends.u]);
  if (!ends.is_loop()) drop(out.incidence_[ends.v]);
  return out;
}

Contraction contract_edge(const Graph& g, EdgeId f) {
  const EdgeEnds ends = g.ends(f);
  if (ends.is_loop()) throw GraphError("cannot contract loop " + std::to_string(f));
  VertexRename rename{std::max(ends.u, ends.v), std::min(ends.u, ends.v)};
  Graph out;
  for (VertexId v : g.vertices()) {
    if (v != rename.absorbed) out.add_vertex(v);
  }
  for (const auto& [e, ee] : g.edges()) {
    if (e == f) continue;
    out.add_edge(e, rename(ee.u), rename(ee.v));
  }
  return {std::move(out), rename};
}

Graph delete_vertices(const Graph& g, const VertexSet& gone) {
  Graph out;
  for (VertexId v : g.vertices()) {
    if (!gone.contains(v)) out.add_vertex(v);
  }
  for (const auto& [e, ee] : g.edges()) {
    if (!gone.contains(ee.u) && !gone.contains(ee.v)) out.add_edge(e, ee.u, ee.v);
  }
  return out;
}

Graph as_graph(const Graph& g, const Subgraph& h) {
  Graph out;
  for (VertexId v : h.vertices) out.add_vertex(v);
  for (EdgeId e : h.edges) {
    const EdgeEnds& ee = g.ends(e);
    out.add_edge(e, ee.u, ee.v);
  }
  return out;
}

Subgraph as_subgraph(const Path& p) {
  return {VertexSet(p.vertices.begin(), p.vertices.end()), EdgeSet(p.edges.begin(), p.edges.end())};
}

VertexSet reachable(const Graph& g, const VertexSet& from, const VertexSet& blocked) {
  VertexSet seen;
  std::deque<VertexId> queue;
  for (VertexId v : from) {
    if (!blocked.contains(v) && seen.insert(v).second) queue.push_back(v);
  }
  while (!queue.empty()) {
    VertexId v = queue.front();
    queue.pop_front();
    for (EdgeId e : g.incident(v)) {
      VertexId w = g.ends(e).other(v);
      if (!blocked.contains(w) && seen.insert(w).second) queue.push_back(w);
    }
  }
  return seen;
}

}  // namespace rootgrid
