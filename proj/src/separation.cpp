#include "rootgrid/separation.hpp"

#include <algorithm>
#include <climits>
#include <map>
#include <set>
#include <string>

#include <boost/dynamic_bitset.hpp>

#include "vertex_flow.hpp"

namespace rootgrid {
namespace {

std::string describe(const VertexSet& s) {
  std::string out = "{";
  for (VertexId v : s) out += (out.size() > 1 ? "," : "") + std::to_string(v);
  return out + "}";
}

constexpr std::size_t kMaxTripleReports = 1000;

}  // namespace

Separation Separation::make(const Graph& g, Subgraph a, Subgraph b) {
  Separation s(std::move(a), std::move(b));
  const ValidationReport report = check_separation(g, s);
  if (!report.ok()) {
    throw SeparationError("not a separation: " + report.violations.front().rule + " " +
                          report.violations.front().detail);
  }
  return s;
}

Separation Separation::trusted(Subgraph a, Subgraph b) { return Separation(std::move(a), std::move(b)); }

VertexSet Separation::cut() const { return intersect(a_, b_).vertices; }

ValidationReport check_separation(const Graph& g, const Separation& s) {
  ValidationReport report;
  if (!is_subgraph_of(g, s.a())) report.add("separation-side", "A", "A is not a subgraph of G");
  if (!is_subgraph_of(g, s.b())) report.add("separation-side", "B", "B is not a subgraph of G");
  if (unite(s.a(), s.b()) != whole(g)) report.add("separation-cover", "A∪B", "A ∪ B differs from G");
  const EdgeSet shared = intersect(s.a(), s.b()).edges;
  if (!shared.empty()) {
    report.add("separation-shared-edge", std::to_string(*shared.begin()), "A and B share an edge");
  }
  return report;
}

Separation separation_from_cut(const Graph& g, const VertexSet& sources, const VertexSet& cut) {
  VertexSet a_side = reachable(g, sources, cut);
  a_side.insert(cut.begin(), cut.end());
  Subgraph a{a_side, {}};
  Subgraph b;
  for (VertexId v : g.vertices()) {
    if (!a_side.contains(v) || cut.contains(v)) b.vertices.insert(v);
  }
  for (const auto& [e, ends] : g.edges()) {
    const bool a_only = (a_side.contains(ends.u) && !cut.contains(ends.u)) ||
                        (a_side.contains(ends.v) && !cut.contains(ends.v));
    const bool both_cut = cut.contains(ends.u) && cut.contains(ends.v);
    if (a_only || both_cut) {
      a.edges.insert(e);
    } else {
      b.edges.insert(e);
    }
  }
  return Separation::trusted(std::move(a), std::move(b));
}

ValidationReport check_tangle_axioms(const Graph& g, const Tangle& t,
                                     const std::vector<Separation>& all_separations) {
  ValidationReport report;
  const std::set<Separation> members(t.members.begin(), t.members.end());
  for (std::size_t idx = 0; idx < t.members.size(); ++idx) {
    const Separation& s = t.members[idx];
    const std::string subject = "member " + std::to_string(idx);
    if (!check_separation(g, s).ok()) report.add("member-order", subject, "member is not a separation");
    if (s.order() >= t.order) report.add("member-order", subject, "member order is not below the tangle order");
    if (s.a().vertices == g.vertices()) report.add("proper-small-side", subject, "V(A) = V(G)");
  }
  for (std::size_t idx = 0; idx < all_separations.size(); ++idx) {
    const Separation& s = all_separations[idx];
    if (s.order() >= t.order) continue;
    if (!members.contains(s) && !members.contains(s.flipped())) {
      report.add("completeness", "separation " + std::to_string(idx), "neither orientation is a member");
    }
  }

  // Small sides as bitsets over vertices followed by edges.
  std::map<VertexId, std::size_t> vpos;
  std::map<EdgeId, std::size_t> epos;
  for (VertexId v : g.vertices()) vpos.emplace(v, vpos.size());
  for (const auto& [e, ends] : g.edges()) epos.emplace(e, vpos.size() + epos.size());
  const std::size_t width = vpos.size() + epos.size();
  std::vector<boost::dynamic_bitset<>> sides;
  sides.reserve(t.members.size());
  for (const Separation& s : t.members) {
    boost::dynamic_bitset<> bits(width);
    for (VertexId v : s.a().vertices) {
      if (auto it = vpos.find(v); it != vpos.end()) bits.set(it->second);
    }
    for (EdgeId e : s.a().edges) {
      if (auto it = epos.find(e); it != epos.end()) bits.set(it->second);
    }
    sides.push_back(std::move(bits));
  }
  std::size_t triples = 0;
  const std::size_t m = sides.size();
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i; j < m; ++j) {
      const boost::dynamic_bitset<> missing = ~(sides[i] | sides[j]);
      for (std::size_t l = j; l < m; ++l) {
        if (!missing.is_subset_of(sides[l])) continue;
        if (++triples <= kMaxTripleReports) {
          report.add("triple-cover",
                     "members " + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(l),
                     "A1 ∪ A2 ∪ A3 = G");
        }
      }
    }
  }
  if (triples > kMaxTripleReports) {
    report.add("triple-cover", "summary", std::to_string(triples) + " covering triples in total");
  }
  return report;
}

namespace {

// Minimum cut of the given size, avoiding sources and targets when some
// minimum cut does, closest to the sources either way.
VertexSet preferred_cut(const Graph& g, const VertexSet& sources, const VertexSet& targets,
                        const detail::VertexFlow& flow) {
  detail::VertexFlow interior(g, sources, targets, false);
  if (interior.augment(flow.value() + 1) == flow.value()) return interior.source_side_cut();
  return flow.source_side_cut();
}

}  // namespace

CutResult menger(const Graph& g, const VertexSet& sources, const VertexSet& targets, int k,
                 const VertexSet& forbidden) {
  if (k < 1) throw SeparationError("menger needs k >= 1");
  if (sources.empty() || targets.empty()) throw SeparationError("menger needs non-empty sources and targets");
  for (const VertexSet* side : {&sources, &targets}) {
    for (VertexId v : *side) {
      if (!g.has_vertex(v)) throw SeparationError("terminal " + std::to_string(v) + " is not a vertex");
      if (forbidden.contains(v)) throw SeparationError("terminal " + std::to_string(v) + " is forbidden");
    }
  }
  const Graph work = forbidden.empty() ? g : delete_vertices(g, forbidden);
  detail::VertexFlow flow(work, sources, targets);
  CutResult result;
  if (flow.augment(k) >= k) {
    result.paths = flow.paths();
    result.paths.resize(k);
    return result;
  }
  result.cut = preferred_cut(work, sources, targets, flow);
  result.separation = separation_from_cut(work, sources, *result.cut);
  return result;
}

int max_disjoint_paths(const Graph& g, const VertexSet& sources, const VertexSet& targets) {
  if (sources.empty() || targets.empty()) return 0;
  detail::VertexFlow flow(g, sources, targets);
  return flow.augment(INT_MAX);
}

std::optional<BlockingSeparation> find_row_blocking_separation(const Graph& g, const VertexSet& roots,
                                                               const Pseudomodel& p,
                                                               const std::vector<int>& rows, int k) {
  if (roots.empty()) throw SeparationError("blocking search needs a non-empty root set");
  const GridSpec spec{p.pattern.n};
  std::vector<VertexSet> images;
  for (int r : rows) images.push_back(image_of_vertices(p, row(spec, r)));

  for (std::size_t idx = 0; idx < rows.size(); ++idx) {
    detail::VertexFlow flow(g, roots, images[idx]);
    if (flow.augment(k) < k) {
      return BlockingSeparation{BlockingSeparation::Kind::strict,
                                separation_from_cut(g, roots, preferred_cut(g, roots, images[idx], flow)), rows[idx]};
    }
  }

  for (std::size_t idx = 0; idx < rows.size(); ++idx) {
    const VertexSet& target = images[idx];
    detail::VertexFlow flow(g, roots, target);
    if (flow.augment(k + 1) != k) continue;
    const VertexSet far_cut = flow.sink_side_cut();
    if (far_cut != roots) {
      // Some root lies strictly on the A side, so B misses it.
      return BlockingSeparation{BlockingSeparation::Kind::reducible, separation_from_cut(g, roots, far_cut),
                                rows[idx]};
    }
    // The roots form the only minimum cut. B can still avoid an edge inside
    // the roots or a component of g - roots that misses the row image.
    Subgraph a{roots, {}};
    for (const auto& [e, ends] : g.edges()) {
      if (roots.contains(ends.u) && roots.contains(ends.v)) a.edges.insert(e);
    }
    Subgraph rest;
    for (VertexId v : g.vertices()) {
      if (!roots.contains(v)) rest.vertices.insert(v);
    }
    for (const auto& [e, ends] : g.edges()) {
      if (!roots.contains(ends.u) && !roots.contains(ends.v)) rest.edges.insert(e);
    }
    for (const Subgraph& comp : components(g, rest)) {
      const bool touches_row = std::any_of(comp.vertices.begin(), comp.vertices.end(),
                                           [&](VertexId v) { return target.contains(v); });
      if (!touches_row) a.vertices.insert(comp.vertices.begin(), comp.vertices.end());
    }
    if (a.vertices.size() == roots.size() && a.edges.empty()) continue;
    Subgraph b;
    for (VertexId v : g.vertices()) {
      if (!a.vertices.contains(v) || roots.contains(v)) b.vertices.insert(v);
    }
    for (const auto& [e, ends] : g.edges()) {
      const bool in_a = a.edges.contains(e) || (a.vertices.contains(ends.u) && !roots.contains(ends.u)) ||
                        (a.vertices.contains(ends.v) && !roots.contains(ends.v));
      if (in_a) {
        a.edges.insert(e);
      } else {
        b.edges.insert(e);
      }
    }
    return BlockingSeparation{BlockingSeparation::Kind::reducible, Separation::trusted(std::move(a), std::move(b)),
                              rows[idx]};
  }
  return std::nullopt;
}

Separation grid_tangle_member(const Model& p, const Separation& s) {
  const GridSpec spec{p.pattern.n};
  std::vector<VertexSet> images;
  for (int i = 1; i <= spec.n; ++i) images.push_back(image_of_vertices(p, row(spec, i)));
  auto no_row_inside = [&](const Subgraph& side) {
    return std::none_of(images.begin(), images.end(), [&](const VertexSet& img) {
      return std::includes(side.vertices.begin(), side.vertices.end(), img.begin(), img.end());
    });
  };
  const bool forward = no_row_inside(s.a());
  const bool backward = no_row_inside(s.b());
  if (forward == backward) {
    throw SeparationError("separation of order " + std::to_string(s.order()) + " with cut " + describe(s.cut()) +
                          (forward ? " has no row image on either side" : " has row images on both sides"));
  }
  return forward ? s : s.flipped();
}

}  // namespace rootgrid
