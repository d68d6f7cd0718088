#include "rootgrid/model.hpp"

#include <optional>
#include <string>

namespace rootgrid {
namespace {

std::string join_path_issue(std::size_t index, const std::string& what) {
  return "path " + std::to_string(index) + ": " + what;
}

}  // namespace

const Subgraph& Pseudomodel::branch(GridCoord c) const {
  auto it = branches.find(c);
  if (it == branches.end()) throw ModelError("no branch for pattern vertex " + to_string(c));
  return it->second;
}

Model identity_model(int n) {
  const GridSpec spec{n};
  Model m;
  m.pattern = full_grid_pattern(n);
  for (GridCoord c : m.pattern.vertices) m.branches[c] = Subgraph{{grid_vertex_id(spec, c)}, {}};
  const Graph g = grid_graph(spec);
  for (const auto& [e, ends] : g.edges()) {
    m.edge_images[GridEdge(grid_coord_of(spec, ends.u), grid_coord_of(spec, ends.v))] = e;
  }
  return m;
}

ValidationReport validate_pseudomodel(const Graph& host, const Pseudomodel& p) {
  ValidationReport report;
  try {
    check_pattern(p.pattern);
  } catch (const GridError& err) {
    report.add("pattern", "pattern", err.what());
  }

  for (GridCoord c : p.pattern.vertices) {
    if (!p.branches.contains(c)) report.add("branch-missing", to_string(c));
  }
  std::map<VertexId, GridCoord> owner;
  std::map<EdgeId, GridCoord> edge_owner;
  for (const auto& [c, b] : p.branches) {
    if (!p.pattern.vertices.contains(c)) report.add("branch-extra", to_string(c));
    if (b.vertices.empty()) report.add("non-null-branch", to_string(c), "branch has no vertices");
    if (!is_subgraph_of(host, b)) {
      report.add("branch-not-subgraph", to_string(c), "branch is not a subgraph of the host");
    }
    for (VertexId v : b.vertices) {
      auto [it, fresh] = owner.emplace(v, c);
      if (!fresh) {
        report.add("pairwise-vertex-disjoint", to_string(it->second) + "&" + to_string(c),
                   "both branches contain vertex " + std::to_string(v));
      }
    }
    for (EdgeId e : b.edges) edge_owner.emplace(e, c);
  }

  for (const GridEdge& pe : p.pattern.edges) {
    if (!p.edge_images.contains(pe)) report.add("edge-image-missing", to_string(pe));
  }
  std::map<EdgeId, GridEdge> image_owner;
  for (const auto& [pe, e] : p.edge_images) {
    const std::string subject = to_string(pe);
    if (!p.pattern.edges.contains(pe)) report.add("edge-image-extra", subject);
    auto [it, fresh] = image_owner.emplace(e, pe);
    if (!fresh) {
      report.add("distinct-edge-images", to_string(it->second) + "&" + subject,
                 "both map to host edge " + std::to_string(e));
    }
    if (!host.has_edge(e)) {
      report.add("edge-image-unknown", subject, "host has no edge " + std::to_string(e));
      continue;
    }
    if (auto bo = edge_owner.find(e); bo != edge_owner.end()) {
      report.add("edge-image-outside-branches", subject,
                 "host edge " + std::to_string(e) + " lies in branch " + to_string(bo->second));
    }
    const EdgeEnds ends = host.ends(e);
    auto owner_of = [&](VertexId v) -> std::optional<GridCoord> {
      auto it2 = owner.find(v);
      if (it2 == owner.end()) return std::nullopt;
      return it2->second;
    };
    const auto ou = owner_of(ends.u);
    const auto ov = owner_of(ends.v);
    const bool fits = (ou == pe.a && ov == pe.b) || (ou == pe.b && ov == pe.a);
    if (!fits) {
      report.add("edge-image-ends", subject,
                 "host edge " + std::to_string(e) + " does not join the two end branches");
    }
  }
  return report;
}

ValidationReport validate_model(const Graph& host, const Pseudomodel& p) {
  ValidationReport report = validate_pseudomodel(host, p);
  for (const auto& [c, b] : p.branches) {
    if (b.vertices.empty() || !is_subgraph_of(host, b)) continue;
    if (!is_connected(host, b)) report.add("branch-connected", to_string(c), "branch is disconnected");
  }
  return report;
}

VertexSet image_of_vertices(const Pseudomodel& p, const CoordSet& coords) {
  VertexSet out;
  for (GridCoord c : coords) {
    const Subgraph& b = p.branch(c);
    out.insert(b.vertices.begin(), b.vertices.end());
  }
  return out;
}

Subgraph image_of_subgraph(const Pseudomodel& p, const GridPattern& f) {
  Subgraph out;
  for (GridCoord c : f.vertices) out = unite(out, p.branch(c));
  for (const GridEdge& pe : f.edges) {
    auto it = p.edge_images.find(pe);
    if (it == p.edge_images.end()) throw ModelError("no image for pattern edge " + to_string(pe));
    out.edges.insert(it->second);
  }
  return out;
}

Pseudomodel restrict(const Pseudomodel& p, const GridPattern& h) {
  if (h.n != p.pattern.n) throw ModelError("restriction pattern lives in a different grid");
  Pseudomodel out;
  out.pattern = h;
  for (GridCoord c : h.vertices) {
    if (!p.pattern.vertices.contains(c)) throw ModelError(to_string(c) + " is not a pattern vertex");
    out.branches[c] = p.branch(c);
  }
  for (const GridEdge& pe : h.edges) {
    if (!p.pattern.edges.contains(pe)) throw ModelError(to_string(pe) + " is not a pattern edge");
    if (!h.vertices.contains(pe.a) || !h.vertices.contains(pe.b)) {
      throw ModelError("restriction pattern edge " + to_string(pe) + " has an end outside it");
    }
    out.edge_images[pe] = p.edge_images.at(pe);
  }
  return out;
}

std::pair<Model, std::vector<std::pair<GridCoord, GridCoord>>> relabel_square(
    const Pseudomodel& p, GridCoord corner, int g) {
  auto old_of = [&](GridCoord c) { return GridCoord{corner.i + c.i - 1, corner.j + c.j - 1}; };
  Model out;
  out.pattern = full_grid_pattern(g);
  std::vector<std::pair<GridCoord, GridCoord>> labeling;
  for (GridCoord c : out.pattern.vertices) {
    const GridCoord old = old_of(c);
    out.branches[c] = p.branch(old);
    labeling.emplace_back(c, old);
  }
  for (const GridEdge& pe : out.pattern.edges) {
    const GridEdge old(old_of(pe.a), old_of(pe.b));
    auto it = p.edge_images.find(old);
    if (it == p.edge_images.end()) throw ModelError("no image for pattern edge " + to_string(old));
    out.edge_images[pe] = it->second;
  }
  return {std::move(out), std::move(labeling)};
}

Model apply_augmentation(const Graph& host, const Model& base, const std::vector<Path>& paths,
                         const VertexSet& roots) {
  const int g = base.pattern.n;
  if (paths.size() != roots.size()) {
    throw AugmentationError("expected one path per root, got " + std::to_string(paths.size()) +
                            " paths for " + std::to_string(roots.size()) + " roots");
  }
  if (static_cast<int>(paths.size()) > g) throw AugmentationError("more paths than grid rows");

  std::map<VertexId, GridCoord> owner;
  for (const auto& [c, b] : base.branches) {
    for (VertexId v : b.vertices) owner.emplace(v, c);
  }

  std::vector<std::string> issues;
  std::map<VertexId, std::size_t> used_by;
  for (std::size_t idx = 0; idx < paths.size(); ++idx) {
    const Path& path = paths[idx];
    const GridCoord target{static_cast<int>(idx) + 1, 1};
    if (path.vertices.empty() || path.edges.size() + 1 != path.vertices.size()) {
      issues.push_back(join_path_issue(idx, "malformed vertex/edge sequence"));
      continue;
    }
    for (std::size_t s = 0; s < path.edges.size(); ++s) {
      const EdgeId e = path.edges[s];
      if (!host.has_edge(e)) {
        issues.push_back(join_path_issue(idx, "unknown edge " + std::to_string(e)));
        continue;
      }
      const EdgeEnds ends = host.ends(e);
      const EdgeEnds want{path.vertices[s], path.vertices[s + 1]};
      if (!(ends == want || ends == EdgeEnds{want.v, want.u})) {
        issues.push_back(join_path_issue(idx, "edge " + std::to_string(e) + " does not join consecutive vertices"));
      }
    }
    if (!roots.contains(path.front())) issues.push_back(join_path_issue(idx, "does not start at a root"));
    if (!base.branch(target).vertices.contains(path.back())) {
      issues.push_back(join_path_issue(idx, "does not end in branch " + to_string(target)));
    }
    for (std::size_t s = 0; s < path.vertices.size(); ++s) {
      const VertexId v = path.vertices[s];
      auto [it, fresh] = used_by.emplace(v, idx);
      if (!fresh && it->second != idx) {
        issues.push_back(join_path_issue(idx, "shares vertex " + std::to_string(v) + " with path " +
                                                  std::to_string(it->second)));
      } else if (!fresh) {
        issues.push_back(join_path_issue(idx, "repeats vertex " + std::to_string(v)));
      }
      if (s + 1 < path.vertices.size() && owner.contains(v)) {
        issues.push_back(join_path_issue(idx, "passes through branch " + to_string(owner.at(v)) +
                                                  " at vertex " + std::to_string(v)));
      }
    }
  }
  if (!issues.empty()) {
    std::string msg = "augmentation preconditions violated";
    for (const auto& s : issues) msg += "; " + s;
    throw AugmentationError(msg);
  }

  Model out = base;
  for (std::size_t idx = 0; idx < paths.size(); ++idx) {
    Subgraph& b = out.branches.at({static_cast<int>(idx) + 1, 1});
    b = unite(b, as_subgraph(paths[idx]));
  }
  return out;
}

ValidationReport check_augmentation(const Graph& host, const AugmentationWitness& w) {
  ValidationReport report;
  const int g = w.base.pattern.n;
  const int k = static_cast<int>(w.roots.size());
  if (w.base.pattern != full_grid_pattern(g) || w.augmented.pattern != w.base.pattern) {
    report.add("witness-shape", "pattern", "base and augmented must both model the full grid");
    return report;
  }
  if (k < 1 || k > g) report.add("witness-shape", "roots", "need 1 <= |roots| <= g");

  for (GridCoord c : w.base.pattern.vertices) {
    auto bi = w.base.branches.find(c);
    auto ai = w.augmented.branches.find(c);
    if (bi == w.base.branches.end() || ai == w.augmented.branches.end()) {
      report.add("witness-shape", to_string(c), "branch missing");
      continue;
    }
    if (c.j == 1 && c.i <= k) {
      if (!contains(ai->second, bi->second)) {
        report.add("first-column-superset", to_string(c), "augmented branch drops part of the base branch");
      }
      bool hit = false;
      for (VertexId v : ai->second.vertices) hit = hit || w.roots.contains(v);
      if (!hit) report.add("first-column-root", to_string(c), "augmented branch contains no root");
    } else if (ai->second != bi->second) {
      report.add("unchanged-branch", to_string(c), "branch differs from the base");
    }
  }
  if (w.augmented.edge_images != w.base.edge_images) {
    for (const auto& [pe, e] : w.base.edge_images) {
      auto it = w.augmented.edge_images.find(pe);
      if (it == w.augmented.edge_images.end() || it->second != e) {
        report.add("edge-image-unchanged", to_string(pe), "edge image differs from the base");
      }
    }
    if (w.augmented.edge_images.size() != w.base.edge_images.size()) {
      report.add("edge-image-unchanged", "edge-images", "edge image domains differ");
    }
  }
  for (Violation v : validate_model(host, w.augmented).violations) {
    v.rule = "augmented:" + v.rule;
    report.violations.push_back(std::move(v));
  }
  return report;
}

}  // namespace rootgrid
