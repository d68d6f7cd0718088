#include "rootgrid/oracles.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <string>

namespace rootgrid::oracles {
namespace {

using Mask = std::uint64_t;

// Vertex and edge positions of a small graph, for bitmask work.
struct Indexed {
  std::vector<VertexId> vertex;
  std::vector<EdgeId> edge;
  std::vector<int> eu;
  std::vector<int> ev;
  std::vector<Mask> adj;  // non-loop neighbours
  Mask all_v = 0;
  Mask all_e = 0;

  explicit Indexed(const Graph& g) : vertex(g.vertices().begin(), g.vertices().end()) {
    std::map<VertexId, int> pos;
    for (int i = 0; i < static_cast<int>(vertex.size()); ++i) pos.emplace(vertex[i], i);
    adj.assign(vertex.size(), 0);
    for (const auto& [e, ends] : g.edges()) {
      edge.push_back(e);
      eu.push_back(pos.at(ends.u));
      ev.push_back(pos.at(ends.v));
      if (!ends.is_loop()) {
        adj[eu.back()] |= Mask{1} << ev.back();
        adj[ev.back()] |= Mask{1} << eu.back();
      }
    }
    all_v = vertex.size() == 64 ? ~Mask{0} : (Mask{1} << vertex.size()) - 1;
    all_e = edge.size() == 64 ? ~Mask{0} : (Mask{1} << edge.size()) - 1;
  }

  [[nodiscard]] int nv() const { return static_cast<int>(vertex.size()); }
  [[nodiscard]] int ne() const { return static_cast<int>(edge.size()); }

  [[nodiscard]] Mask neighbours(Mask m) const {
    Mask out = 0;
    for (Mask r = m; r != 0; r &= r - 1) out |= adj[std::countr_zero(r)];
    return out;
  }

  // Vertices reachable from `from` inside `within`.
  [[nodiscard]] Mask closure(Mask from, Mask within) const {
    Mask seen = from & within;
    Mask frontier = seen;
    while (frontier != 0) {
      const Mask next = neighbours(frontier) & within & ~seen;
      seen |= next;
      frontier = next;
    }
    return seen;
  }

  [[nodiscard]] Mask vertex_mask(const VertexSet& s) const {
    Mask m = 0;
    for (int i = 0; i < nv(); ++i) {
      if (s.contains(vertex[i])) m |= Mask{1} << i;
    }
    return m;
  }

  [[nodiscard]] Subgraph subgraph(Mask vm, Mask em) const {
    Subgraph s;
    for (Mask r = vm; r != 0; r &= r - 1) s.vertices.insert(vertex[std::countr_zero(r)]);
    for (Mask r = em; r != 0; r &= r - 1) s.edges.insert(edge[std::countr_zero(r)]);
    return s;
  }
};

void require_small(const Graph& g, const EnumerationBudget& budget) {
  if (static_cast<int>(g.num_vertices()) > budget.maxVertices || g.num_vertices() > 62) {
    throw BudgetExceeded("graph has " + std::to_string(g.num_vertices()) + " vertices, budget allows " +
                         std::to_string(budget.maxVertices));
  }
  if (g.num_edges() > 64) throw BudgetExceeded("graph has more than 64 edges");
}

// Calls f on every subset of {0..n-1} with exactly s elements, in increasing
// numeric order. Stops when f returns false.
template <class F>
bool for_each_subset(int n, int s, F&& f) {
  if (s > n) return true;
  if (s == 0) return f(Mask{0});
  Mask m = (Mask{1} << s) - 1;
  const Mask limit = Mask{1} << n;
  while (m < limit) {
    if (!f(m)) return false;
    const Mask c = m & (~m + 1);
    const Mask r = m + c;
    m = (((r ^ m) >> 2) / c) | r;
  }
  return true;
}

}  // namespace

void for_each_separation(const Graph& g, int max_order, const EnumerationBudget& budget,
                         const std::function<bool(const Separation&)>& visit) {
  require_small(g, budget);
  if (max_order > budget.maxOrder) {
    throw BudgetExceeded("order " + std::to_string(max_order) + " exceeds budget " + std::to_string(budget.maxOrder));
  }
  const Indexed ix(g);
  std::size_t produced = 0;
  for (int s = 0; s <= std::min(max_order, ix.nv()); ++s) {
    const bool go_on = for_each_subset(ix.nv(), s, [&](Mask x) {
      const Mask rest = ix.all_v & ~x;
      std::vector<Mask> comp_v;
      for (Mask left = rest; left != 0;) {
        const Mask c = ix.closure(left & (~left + 1), rest);
        comp_v.push_back(c);
        left &= ~c;
      }
      std::vector<Mask> comp_e(comp_v.size(), 0);
      std::vector<int> inner;
      for (int e = 0; e < ix.ne(); ++e) {
        const Mask ends = (Mask{1} << ix.eu[e]) | (Mask{1} << ix.ev[e]);
        if ((ends & x) == ends) {
          inner.push_back(e);
          continue;
        }
        for (std::size_t c = 0; c < comp_v.size(); ++c) {
          if ((comp_v[c] & ends) != 0) {
            comp_e[c] |= Mask{1} << e;
            break;
          }
        }
      }
      const std::size_t free_bits = comp_v.size() + inner.size();
      if (free_bits > 40) throw BudgetExceeded("too many components and cut edges to split");
      const Mask splits = Mask{1} << comp_v.size();
      const Mask inner_splits = Mask{1} << inner.size();
      for (Mask cm = 0; cm < splits; ++cm) {
        Mask av = x;
        Mask ae = 0;
        for (std::size_t c = 0; c < comp_v.size(); ++c) {
          if ((cm >> c) & 1) {
            av |= comp_v[c];
            ae |= comp_e[c];
          }
        }
        const Mask bv = (ix.all_v & ~av) | x;
        for (Mask im = 0; im < inner_splits; ++im) {
          Mask a_edges = ae;
          for (std::size_t t = 0; t < inner.size(); ++t) {
            if ((im >> t) & 1) a_edges |= Mask{1} << inner[t];
          }
          if (++produced > budget.maxSearchNodes) throw BudgetExceeded("separation enumeration exceeded its budget");
          const Mask b_edges = ix.all_e & ~a_edges;
          if (!visit(Separation::trusted(ix.subgraph(av, a_edges), ix.subgraph(bv, b_edges)))) return false;
        }
      }
      return true;
    });
    if (!go_on) return;
  }
}

std::vector<Separation> enumerate_separations(const Graph& g, int max_order, const EnumerationBudget& budget) {
  std::vector<Separation> out;
  for_each_separation(g, max_order, budget, [&](const Separation& s) {
    out.push_back(s);
    return true;
  });
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Tangle> enumerate_tangles(const Graph& g, int theta, const EnumerationBudget& budget) {
  if (theta < 1) throw BudgetExceeded("tangle order must be positive");
  const std::vector<Separation> seps = enumerate_separations(g, theta - 1, budget);
  const Indexed ix(g);

  struct Side {
    Mask v;
    Mask e;
  };
  std::vector<Side> side(seps.size());
  for (std::size_t i = 0; i < seps.size(); ++i) {
    side[i] = {ix.vertex_mask(seps[i].a().vertices), 0};
    for (int e = 0; e < ix.ne(); ++e) {
      if (seps[i].a().edges.contains(ix.edge[e])) side[i].e |= Mask{1} << e;
    }
  }
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < seps.size(); ++i) {
    const auto it = std::lower_bound(seps.begin(), seps.end(), seps[i].flipped());
    const auto j = static_cast<std::size_t>(it - seps.begin());
    if (i <= j) pairs.emplace_back(i, j);
  }

  auto covers = [&](const Side& a, const Side& b) { return (a.v | b.v) == ix.all_v && (a.e | b.e) == ix.all_e; };
  std::vector<std::size_t> chosen;
  std::vector<Side> unions;  // pairwise unions of chosen sides, including each with itself
  std::vector<bool> decided(pairs.size(), false);
  std::vector<Tangle> out;
  std::size_t nodes = 0;

  auto fits = [&](std::size_t s) {
    const Side& a = side[s];
    if (a.v == ix.all_v) return false;
    if (std::any_of(unions.begin(), unions.end(), [&](const Side& u) { return covers(u, a); })) return false;
    return std::none_of(chosen.begin(), chosen.end(), [&](std::size_t c) { return covers(side[c], a); });
  };
  auto push = [&](std::size_t s) {
    for (std::size_t c : chosen) unions.push_back({side[c].v | side[s].v, side[c].e | side[s].e});
    unions.push_back(side[s]);
    chosen.push_back(s);
  };
  auto pop = [&]() {
    unions.resize(unions.size() - chosen.size());
    chosen.pop_back();
  };

  std::function<void()> search = [&]() {
    if (++nodes > budget.maxSearchNodes) throw BudgetExceeded("tangle search exceeded its budget");
    std::size_t best = pairs.size();
    std::vector<std::size_t> best_options;
    for (std::size_t p = 0; p < pairs.size(); ++p) {
      if (decided[p]) continue;
      std::vector<std::size_t> options;
      if (fits(pairs[p].first)) options.push_back(pairs[p].first);
      if (pairs[p].second != pairs[p].first && fits(pairs[p].second)) options.push_back(pairs[p].second);
      if (options.empty()) return;
      if (best == pairs.size() || options.size() < best_options.size()) {
        best = p;
        best_options = std::move(options);
        if (best_options.size() == 1) break;
      }
    }
    if (best == pairs.size()) {
      Tangle t{theta, {}};
      for (std::size_t c : chosen) t.members.push_back(seps[c]);
      std::sort(t.members.begin(), t.members.end());
      out.push_back(std::move(t));
      return;
    }
    decided[best] = true;
    for (std::size_t s : best_options) {
      push(s);
      search();
      pop();
    }
    decided[best] = false;
  };
  search();
  std::sort(out.begin(), out.end(), [](const Tangle& a, const Tangle& b) { return a.members < b.members; });
  return out;
}

std::optional<Model> brute_force_grid_model(const Graph& g, int side, const EnumerationBudget& budget) {
  require_small(g, budget);
  if (side < 1 || side > budget.maxPatternSide) {
    throw BudgetExceeded("pattern side " + std::to_string(side) + " outside the budget");
  }
  const Indexed ix(g);
  std::vector<Mask> connected;
  for (Mask m = 1; m <= ix.all_v && m != 0; ++m) {
    if (ix.closure(m & (~m + 1), m) == m) connected.push_back(m);
  }
  std::stable_sort(connected.begin(), connected.end(),
                   [](Mask a, Mask b) { return std::popcount(a) < std::popcount(b); });

  const int cells = side * side;
  std::vector<Mask> branch(cells, 0);
  std::size_t nodes = 0;
  std::function<bool(int, Mask)> place = [&](int pos, Mask used) {
    if (pos == cells) return true;
    if (++nodes > budget.maxSearchNodes) throw BudgetExceeded("grid model search exceeded its budget");
    const int i = pos / side;
    const int j = pos % side;
    const int free_after = std::popcount(ix.all_v & ~used);
    for (Mask cm : connected) {
      if ((cm & used) != 0) continue;
      if (free_after - std::popcount(cm) < cells - pos - 1) break;
      const Mask nb = ix.neighbours(cm);
      if (j > 0 && (nb & branch[pos - 1]) == 0) continue;
      if (i > 0 && (nb & branch[pos - side]) == 0) continue;
      branch[pos] = cm;
      if (place(pos + 1, used | cm)) return true;
    }
    return false;
  };
  if (!place(0, 0)) return std::nullopt;

  Model m;
  m.pattern = full_grid_pattern(side);
  auto coord = [&](int pos) { return GridCoord{pos / side + 1, pos % side + 1}; };
  for (int pos = 0; pos < cells; ++pos) {
    Mask em = 0;
    for (int e = 0; e < ix.ne(); ++e) {
      if (((branch[pos] >> ix.eu[e]) & 1) && ((branch[pos] >> ix.ev[e]) & 1)) em |= Mask{1} << e;
    }
    m.branches.emplace(coord(pos), ix.subgraph(branch[pos], em));
  }
  for (const GridEdge& pe : m.pattern.edges) {
    const Mask a = branch[(pe.a.i - 1) * side + pe.a.j - 1];
    const Mask b = branch[(pe.b.i - 1) * side + pe.b.j - 1];
    for (int e = 0; e < ix.ne(); ++e) {
      const bool across = (((a >> ix.eu[e]) & 1) && ((b >> ix.ev[e]) & 1)) ||
                          (((b >> ix.eu[e]) & 1) && ((a >> ix.ev[e]) & 1));
      if (across) {
        m.edge_images.emplace(pe, ix.edge[e]);
        break;
      }
    }
  }
  return m;
}

VertexSet minimum_vertex_cut(const Graph& g, const VertexSet& sources, const VertexSet& targets,
                             const EnumerationBudget& budget) {
  require_small(g, budget);
  const Indexed ix(g);
  const Mask s = ix.vertex_mask(sources);
  const Mask t = ix.vertex_mask(targets);
  Mask found = 0;
  for (int size = 0; size <= ix.nv(); ++size) {
    const bool none = for_each_subset(ix.nv(), size, [&](Mask x) {
      const Mask open = ix.all_v & ~x;
      if ((ix.closure(s & open, open) & t) != 0) return true;
      found = x;
      return false;
    });
    if (!none) break;
  }
  return ix.subgraph(found, 0).vertices;
}

std::optional<Separation> exhaustive_blocking_separation(const Graph& g, const VertexSet& roots,
                                                         const Pseudomodel& p, int max_order,
                                                         const EnumerationBudget& budget) {
  std::vector<VertexSet> images;
  for (int r : full_rows(p.pattern)) images.push_back(image_of_vertices(p, row(GridSpec{p.pattern.n}, r)));
  auto within = [](const VertexSet& inner, const VertexSet& outer) {
    return std::includes(outer.begin(), outer.end(), inner.begin(), inner.end());
  };
  std::optional<Separation> hit;
  for_each_separation(g, max_order, budget, [&](const Separation& s) {
    if (!within(roots, s.a().vertices)) return true;
    for (const VertexSet& img : images) {
      if (within(img, s.b().vertices)) {
        hit = s;
        return false;
      }
    }
    return true;
  });
  return hit;
}

ValidationReport verify_output_row_property(const ExtractionResult& result, const Model& grid_model,
                                            const std::vector<Separation>& seps, int g) {
  ValidationReport report;
  const Model& base = result.witness.base;
  const int side = base.pattern.n;
  std::vector<VertexSet> images;
  for (int a = 1; a <= side; ++a) images.push_back(image_of_vertices(base, row(GridSpec{side}, a)));

  for (std::size_t idx = 0; idx < seps.size(); ++idx) {
    if (seps[idx].order() >= grid_model.pattern.n) continue;
    const std::string subject = "separation " + std::to_string(idx);
    std::optional<Separation> member;
    try {
      member = grid_tangle_member(grid_model, seps[idx]);
    } catch (const SeparationError& err) {
      report.add("row-order", subject, err.what());
      continue;
    }
    const VertexSet& a_side = member->a().vertices;
    for (int a = 1; a <= side; ++a) {
      const VertexSet& img = images[a - 1];
      if (!std::includes(a_side.begin(), a_side.end(), img.begin(), img.end())) continue;
      if (member->order() < g) {
        report.add("row-order", subject,
                   "output row " + std::to_string(a) + " lies in V(A) but the order is " +
                       std::to_string(member->order()));
      }
      const std::optional<int> bound = row_order_bound(grid_model, result, *member);
      if (!bound || *bound < g || *bound > member->order()) {
        report.add("row-bound", subject,
                   "column-counting bound " + (bound ? std::to_string(*bound) : std::string("none")) +
                       " does not sit between g and the order " + std::to_string(member->order()));
      }
      break;
    }
  }
  return report;
}

}  // namespace rootgrid::oracles
