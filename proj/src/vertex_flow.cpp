#include "vertex_flow.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <utility>

namespace rootgrid::detail {
namespace {

constexpr int kUnbounded = std::numeric_limits<int>::max() / 4;

}  // namespace

VertexFlow::VertexFlow(const Graph& g, const VertexSet& sources, const VertexSet& targets, bool terminals_cuttable)
    : ids_(g.vertices().begin(), g.vertices().end()), sources_(sources), targets_(targets) {
  const int n = static_cast<int>(ids_.size());
  adj_.resize(2 * n + 2);
  source_ = 2 * n;
  sink_ = 2 * n + 1;
  auto index_of = [this](VertexId v) {
    auto it = std::lower_bound(ids_.begin(), ids_.end(), v);
    if (it == ids_.end() || *it != v) throw GraphError("flow terminal " + std::to_string(v) + " is not a vertex");
    return static_cast<int>(it - ids_.begin());
  };

  for (int idx = 0; idx < n; ++idx) {
    const bool terminal = sources_.contains(ids_[idx]) || targets_.contains(ids_[idx]);
    add_arc(in_node(idx), out_node(idx), terminal && !terminals_cuttable ? kUnbounded : 1, -1);
  }
  for (int idx = 0; idx < n; ++idx) {
    std::vector<std::pair<int, EdgeId>> around;
    for (EdgeId e : g.incident(ids_[idx])) {
      const EdgeEnds& ends = g.ends(e);
      if (ends.is_loop()) continue;
      around.emplace_back(index_of(ends.other(ids_[idx])), e);
    }
    std::sort(around.begin(), around.end());
    for (const auto& [nbr, e] : around) add_arc(out_node(idx), in_node(nbr), kUnbounded, e);
  }
  for (VertexId s : sources_) add_arc(source_, in_node(index_of(s)), kUnbounded, -1);
  for (VertexId t : targets_) add_arc(out_node(index_of(t)), sink_, kUnbounded, -1);
}

int VertexFlow::add_arc(int from, int to, int cap, EdgeId edge) {
  const int pos = static_cast<int>(adj_[from].size());
  const int rev_pos = static_cast<int>(adj_[to].size()) + (from == to ? 1 : 0);
  adj_[from].push_back({to, cap, rev_pos, edge, true});
  adj_[to].push_back({from, 0, pos, edge, false});
  return pos;
}

int VertexFlow::augment(int limit) {
  const int nodes = static_cast<int>(adj_.size());
  while (value_ < limit) {
    std::vector<std::pair<int, int>> parent(nodes, {-1, -1});
    std::vector<bool> seen(nodes, false);
    std::deque<int> queue{source_};
    seen[source_] = true;
    while (!queue.empty() && !seen[sink_]) {
      const int x = queue.front();
      queue.pop_front();
      for (int a = 0; a < static_cast<int>(adj_[x].size()); ++a) {
        const Arc& arc = adj_[x][a];
        if (arc.cap <= 0 || seen[arc.to]) continue;
        seen[arc.to] = true;
        parent[arc.to] = {x, a};
        queue.push_back(arc.to);
      }
    }
    if (!seen[sink_]) break;
    int push = limit - value_;
    for (int y = sink_; y != source_; y = parent[y].first) {
      push = std::min(push, adj_[parent[y].first][parent[y].second].cap);
    }
    for (int y = sink_; y != source_; y = parent[y].first) {
      Arc& arc = adj_[parent[y].first][parent[y].second];
      arc.cap -= push;
      adj_[arc.to][arc.rev].cap += push;
    }
    value_ += push;
  }
  return value_;
}

std::vector<bool> VertexFlow::residual_reach_from_source() const {
  std::vector<bool> seen(adj_.size(), false);
  std::deque<int> queue{source_};
  seen[source_] = true;
  while (!queue.empty()) {
    const int x = queue.front();
    queue.pop_front();
    for (const Arc& arc : adj_[x]) {
      if (arc.cap > 0 && !seen[arc.to]) {
        seen[arc.to] = true;
        queue.push_back(arc.to);
      }
    }
  }
  return seen;
}

VertexSet VertexFlow::source_side_cut() const {
  const std::vector<bool> reach = residual_reach_from_source();
  VertexSet cut;
  for (int idx = 0; idx < static_cast<int>(ids_.size()); ++idx) {
    if (reach[in_node(idx)] && !reach[out_node(idx)]) cut.insert(ids_[idx]);
  }
  return cut;
}

VertexSet VertexFlow::sink_side_cut() const {
  // Nodes that can still reach the sink in the residual network.
  std::vector<bool> reach(adj_.size(), false);
  std::deque<int> queue{sink_};
  reach[sink_] = true;
  while (!queue.empty()) {
    const int y = queue.front();
    queue.pop_front();
    for (const Arc& arc : adj_[y]) {
      const Arc& into_y = adj_[arc.to][arc.rev];
      if (into_y.cap > 0 && !reach[arc.to]) {
        reach[arc.to] = true;
        queue.push_back(arc.to);
      }
    }
  }
  VertexSet cut;
  for (int idx = 0; idx < static_cast<int>(ids_.size()); ++idx) {
    if (reach[out_node(idx)] && !reach[in_node(idx)]) cut.insert(ids_[idx]);
  }
  return cut;
}

std::vector<Path> VertexFlow::paths() const {
  // Remaining flow per forward arc; the reverse arc's capacity is the flow.
  std::vector<std::vector<int>> left(adj_.size());
  for (std::size_t x = 0; x < adj_.size(); ++x) {
    left[x].resize(adj_[x].size(), 0);
    for (std::size_t a = 0; a < adj_[x].size(); ++a) {
      const Arc& arc = adj_[x][a];
      if (arc.forward) left[x][a] = adj_[arc.to][arc.rev].cap;
    }
  }
  auto take = [&](int x) -> int {
    for (std::size_t a = 0; a < adj_[x].size(); ++a) {
      if (adj_[x][a].forward && left[x][a] > 0) {
        --left[x][a];
        return static_cast<int>(a);
      }
    }
    return -1;
  };

  std::vector<Path> out;
  const int n = static_cast<int>(ids_.size());
  for (int a0 = take(source_); a0 >= 0; a0 = take(source_)) {
    Path walk;
    int node = adj_[source_][a0].to;
    // node is always an in-node here
    for (int steps = 0; steps <= 2 * n + 2; ++steps) {
      const int idx = node / 2;
      walk.vertices.push_back(ids_[idx]);
      const int split = take(node);
      if (split < 0) break;
      const int out = adj_[node][split].to;
      const int next = take(out);
      if (next < 0) break;
      const Arc& arc = adj_[out][next];
      if (arc.to == sink_) break;
      walk.edges.push_back(arc.edge);
      node = arc.to;
    }
    // Trim to the last source and the first target after it.
    std::size_t first = 0;
    for (std::size_t s = 0; s < walk.vertices.size(); ++s) {
      if (sources_.contains(walk.vertices[s])) first = s;
    }
    std::size_t last = first;
    while (last < walk.vertices.size() && !targets_.contains(walk.vertices[last])) ++last;
    if (last == walk.vertices.size()) continue;  // unreachable for a valid flow
    Path trimmed;
    trimmed.vertices.assign(walk.vertices.begin() + first, walk.vertices.begin() + last + 1);
    trimmed.edges.assign(walk.edges.begin() + first, walk.edges.begin() + last);
    out.push_back(std::move(trimmed));
  }
  return out;
}

}  // namespace rootgrid::detail
