#include "rootgrid/extraction.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <utility>

namespace rootgrid {
namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

bool meets(const VertexSet& a, const VertexSet& b) {
  return std::any_of(a.begin(), a.end(), [&](VertexId v) { return b.contains(v); });
}

struct WorkState {
  Graph host;
  VertexSet roots;
  Pseudomodel model;
  std::vector<int> rows;  // full pattern rows the blocking hypothesis is known for
};

// How to undo one reduction on a finished outcome.
struct SeparationLift {
  Graph a_side;
  VertexSet parent_roots;
  VertexSet cut;
};
struct BranchEdgeLift {
  GridCoord owner;
  EdgeId edge;
};
struct ContractionLift {
  EdgeId edge;
  VertexRename rename;
};
using Lift = std::variant<std::monostate, SeparationLift, BranchEdgeLift, ContractionLift>;

struct Outcome {
  GridAtlas atlas;
  std::vector<std::pair<GridCoord, GridCoord>> labeling;
  Model base;
  Model augmented;
};

class Failure {
 public:
  explicit Failure(const std::vector<ReductionRecord>& trace) : trace_(trace) {}

  [[noreturn]] void raise(ExtractionErrorKind kind, const std::string& what,
                          std::optional<BlockingSeparation> certificate = std::nullopt,
                          std::optional<VertexSet> cut = std::nullopt) const {
    ExtractionError err(kind, what);
    err.certificate = std::move(certificate);
    err.cut = std::move(cut);
    err.trace = trace_;
    throw err;
  }
  [[noreturn]] void internal(const std::string& what) const {
    raise(ExtractionErrorKind::internal_invariant_broken, what);
  }

 private:
  const std::vector<ReductionRecord>& trace_;
};

// Supplies the decisions the engine applies: computed by the solver, or
// read back from a recorded trace.
class StepSource {
 public:
  virtual ~StepSource() = default;
  virtual std::optional<ReductionStep> next_reduction(const WorkState& st, bool reduced, const Failure& fail) = 0;
  virtual BandSelection band(const WorkState& st, const CoordSet& forbidden, const Failure& fail) = 0;
  virtual MengerAugmentation paths(const Graph& g_star, const VertexSet& roots, const VertexSet& targets,
                                   const Failure& fail) = 0;
};

class Solver final : public StepSource {
 public:
  explicit Solver(ExtractionParams params) : params_(params) {}

  std::optional<ReductionStep> next_reduction(const WorkState& st, bool reduced, const Failure& fail) override {
    const auto blocking = find_row_blocking_separation(st.host, st.roots, st.model, st.rows, params_.k);
    if (blocking && blocking->kind == BlockingSeparation::Kind::strict) {
      if (!reduced) {
        fail.raise(ExtractionErrorKind::hypothesis_violated,
                   "separation of order " + std::to_string(blocking->separation.order()) +
                       " separates the roots from the image of row " + std::to_string(blocking->row),
                   blocking);
      }
      fail.raise(ExtractionErrorKind::internal_invariant_broken,
                 "a reduced instance lost the row-blocking hypothesis", blocking);
    }
    if (blocking) return SeparationRecursion{blocking->separation, blocking->row};

    std::set<EdgeId> images;
    for (const auto& [pe, e] : st.model.edge_images) images.insert(e);
    std::map<EdgeId, GridCoord> owner;
    for (const auto& [c, b] : st.model.branches) {
      for (EdgeId e : b.edges) owner.emplace(e, c);
    }
    for (const auto& [e, ends] : st.host.edges()) {
      if (!images.contains(e) && !owner.contains(e)) return EdgeDeletion{e};
    }
    for (const auto& [e, c] : owner) {
      const EdgeEnds& ends = st.host.ends(e);
      if (ends.is_loop() || (st.roots.contains(ends.u) && st.roots.contains(ends.v))) {
        return BranchEdgeDeletion{e, c};
      }
    }
    if (!owner.empty()) {
      const auto& [e, c] = *owner.begin();
      const EdgeEnds& ends = st.host.ends(e);
      return BranchEdgeContraction{e, c, VertexRename{std::max(ends.u, ends.v), std::min(ends.u, ends.v)}};
    }
    return std::nullopt;
  }

  BandSelection band(const WorkState& st, const CoordSet& forbidden, const Failure& fail) override {
    auto atlas = choose_band(GridSpec{st.model.pattern.n}, params_.g, params_.k, forbidden);
    if (!atlas) {
      fail.internal("no " + std::to_string(params_.g + 2 * params_.k) +
                    " consecutive grid rows avoid the root-carrying pattern vertices");
    }
    return {*atlas, forbidden};
  }

  MengerAugmentation paths(const Graph& g_star, const VertexSet& roots, const VertexSet& targets,
                           const Failure& fail) override {
    CutResult r = menger(g_star, roots, targets, params_.k);
    if (!r.found_paths()) {
      fail.raise(ExtractionErrorKind::internal_invariant_broken,
                 "fewer than k disjoint paths from the roots to the root segment", std::nullopt, r.cut);
    }
    return {std::move(r.paths)};
  }

 private:
  ExtractionParams params_;
};

class Replayer final : public StepSource {
 public:
  explicit Replayer(const std::vector<ReductionRecord>& trace) : trace_(trace) {}

  std::optional<ReductionStep> next_reduction(const WorkState&, bool, const Failure&) override {
    if (cursor_ < trace_.size() && is_reduction(trace_[cursor_].step)) return trace_[cursor_++].step;
    return std::nullopt;
  }

  BandSelection band(const WorkState&, const CoordSet& forbidden, const Failure& fail) override {
    const auto* rec = cursor_ < trace_.size() ? std::get_if<BandSelection>(&trace_[cursor_].step) : nullptr;
    if (rec == nullptr) fail.internal("trace record " + std::to_string(cursor_) + " should be band-selected");
    if (rec->forbidden != forbidden) fail.internal("recorded forbidden set differs from the replayed one");
    ++cursor_;
    return *rec;
  }

  MengerAugmentation paths(const Graph&, const VertexSet&, const VertexSet&, const Failure& fail) override {
    const auto* rec = cursor_ < trace_.size() ? std::get_if<MengerAugmentation>(&trace_[cursor_].step) : nullptr;
    if (rec == nullptr) fail.internal("trace record " + std::to_string(cursor_) + " should be menger-augment");
    ++cursor_;
    return *rec;
  }

  [[nodiscard]] bool exhausted() const { return cursor_ == trace_.size(); }

 private:
  const std::vector<ReductionRecord>& trace_;
  std::size_t cursor_ = 0;
};

Lift apply_step(WorkState& st, const ReductionStep& step, int k, const Failure& fail) {
  auto branch_owning = [&](EdgeId e, GridCoord owner) {
    auto it = st.model.branches.find(owner);
    if (it == st.model.branches.end() || !it->second.edges.contains(e)) {
      fail.internal("edge " + std::to_string(e) + " is not in branch " + to_string(owner));
    }
    return it;
  };
  if (std::holds_alternative<EdgeDeletion>(step) || std::holds_alternative<BranchEdgeDeletion>(step) ||
      std::holds_alternative<BranchEdgeContraction>(step)) {
    const EdgeId e = std::visit(overloaded{[](const EdgeDeletion& s) { return s.edge; },
                                           [](const BranchEdgeDeletion& s) { return s.edge; },
                                           [](const BranchEdgeContraction& s) { return s.edge; },
                                           [](const auto&) { return EdgeId{0}; }},
                                step);
    if (!st.host.has_edge(e)) fail.internal("edge " + std::to_string(e) + " is not in the working host");
  }

  return std::visit(
      overloaded{
          [&](const SeparationRecursion& s) -> Lift {
            const Separation& sep = s.separation;
            if (!check_separation(st.host, sep).ok()) fail.internal("recorded separation is not a separation");
            if (sep.order() != k || !std::includes(sep.a().vertices.begin(), sep.a().vertices.end(),
                                                   st.roots.begin(), st.roots.end())) {
              fail.internal("recorded separation does not have order k with the roots on side A");
            }
            if (sep.b() == whole(st.host)) fail.internal("recorded separation has B = G");
            const VertexSet cut = sep.cut();
            Pseudomodel next;
            next.pattern.n = st.model.pattern.n;
            for (const auto& [c, b] : st.model.branches) {
              Subgraph inside = intersect(b, sep.b());
              if (inside.vertices.empty()) continue;
              next.pattern.vertices.insert(c);
              next.branches.emplace(c, std::move(inside));
            }
            for (const auto& [pe, e] : st.model.edge_images) {
              const bool free_end = !meets(st.model.branch(pe.a).vertices, sep.a().vertices) ||
                                    !meets(st.model.branch(pe.b).vertices, sep.a().vertices);
              if (!free_end) continue;
              next.pattern.edges.insert(pe);
              next.edge_images.emplace(pe, e);
            }
            // A row keeps the hypothesis only if its whole image survives into B.
            std::vector<int> rows;
            for (int r : st.rows) {
              const CoordSet line = row(GridSpec{st.model.pattern.n}, r);
              const VertexSet img = image_of_vertices(st.model, line);
              const bool kept = std::includes(next.pattern.vertices.begin(), next.pattern.vertices.end(),
                                              line.begin(), line.end()) &&
                                std::includes(sep.b().vertices.begin(), sep.b().vertices.end(), img.begin(),
                                              img.end());
              if (kept) rows.push_back(r);
            }
            if (std::find(rows.begin(), rows.end(), s.row) == rows.end()) {
              fail.internal("row " + std::to_string(s.row) + " of the recorded separation is not blocked by it");
            }
            SeparationLift lift{as_graph(st.host, sep.a()), st.roots, cut};
            st.rows = std::move(rows);
            st.host = as_graph(st.host, sep.b());
            st.roots = cut;
            st.model = std::move(next);
            return lift;
          },
          [&](const EdgeDeletion& s) -> Lift {
            for (const auto& [pe, e] : st.model.edge_images) {
              if (e == s.edge) fail.internal("edge " + std::to_string(e) + " is an edge image");
            }
            for (const auto& [c, b] : st.model.branches) {
              if (b.edges.contains(s.edge)) fail.internal("edge " + std::to_string(s.edge) + " lies in a branch");
            }
            st.host = delete_edge(st.host, s.edge);
            return std::monostate{};
          },
          [&](const BranchEdgeDeletion& s) -> Lift {
            auto it = branch_owning(s.edge, s.owner);
            const EdgeEnds ends = st.host.ends(s.edge);
            if (!ends.is_loop() && !(st.roots.contains(ends.u) && st.roots.contains(ends.v))) {
              fail.internal("branch edge " + std::to_string(s.edge) + " is neither a loop nor inside the roots");
            }
            it->second.edges.erase(s.edge);
            st.host = delete_edge(st.host, s.edge);
            return BranchEdgeLift{s.owner, s.edge};
          },
          [&](const BranchEdgeContraction& s) -> Lift {
            auto it = branch_owning(s.edge, s.owner);
            const EdgeEnds ends = st.host.ends(s.edge);
            if (ends.is_loop() || (st.roots.contains(ends.u) && st.roots.contains(ends.v))) {
              fail.internal("branch edge " + std::to_string(s.edge) + " may not be contracted");
            }
            Contraction c = contract_edge(st.host, s.edge);
            if (c.rename.absorbed != s.rename.absorbed || c.rename.survivor != s.rename.survivor) {
              fail.internal("recorded contraction rename differs from the computed one");
            }
            it->second.vertices.erase(c.rename.absorbed);
            it->second.edges.erase(s.edge);
            VertexSet roots;
            for (VertexId z : st.roots) roots.insert(c.rename(z));
            st.roots = std::move(roots);
            st.host = std::move(c.graph);
            return ContractionLift{s.edge, c.rename};
          },
          [&](const auto&) -> Lift {
            fail.internal("band or path record inside the reduction phase");
          },
      },
      step);
}

void apply_lift(Outcome& out, const Lift& lift, int k, const Failure& fail) {
  std::visit(
      overloaded{
          [](const std::monostate&) {},
          [&](const BranchEdgeLift& l) {
            for (const auto& [small, big] : out.labeling) {
              if (big != l.owner) continue;
              out.base.branches.at(small).edges.insert(l.edge);
              out.augmented.branches.at(small).edges.insert(l.edge);
            }
          },
          [&](const ContractionLift& l) {
            for (Model* m : {&out.base, &out.augmented}) {
              for (auto& [c, b] : m->branches) {
                if (!b.vertices.contains(l.rename.survivor)) continue;
                b.vertices.insert(l.rename.absorbed);
                b.edges.insert(l.edge);
              }
            }
          },
          [&](const SeparationLift& l) {
            CutResult r = menger(l.a_side, l.parent_roots, l.cut, k);
            if (!r.found_paths()) fail.internal("side A has fewer than k disjoint paths from the roots to the cut");
            std::vector<Path> ordered;
            for (int i = 1; i <= k; ++i) {
              const Subgraph& b = out.augmented.branch({i, 1});
              VertexSet hit;
              for (VertexId v : b.vertices) {
                if (l.cut.contains(v)) hit.insert(v);
              }
              if (hit.size() != 1) {
                fail.internal("first-column branch " + std::to_string(i) + " meets the cut in " +
                              std::to_string(hit.size()) + " vertices");
              }
              auto it = std::find_if(r.paths.begin(), r.paths.end(),
                                     [&](const Path& p) { return p.back() == *hit.begin(); });
              if (it == r.paths.end()) fail.internal("no side-A path ends at the cut vertex of branch " + std::to_string(i));
              ordered.push_back(*it);
            }
            try {
              out.augmented = apply_augmentation(l.a_side, out.augmented, ordered, l.parent_roots);
            } catch (const AugmentationError& err) {
              fail.internal(std::string("lifting through a separation failed: ") + err.what());
            }
          },
      },
      lift);
}

ExtractionResult run(const ExtractionProblem& problem, StepSource& source) {
  std::vector<ReductionRecord> trace;
  const Failure fail(trace);
  if (const ValidationReport report = check_problem(problem); !report.ok()) {
    std::string msg = "malformed extraction problem";
    for (const auto& v : report.violations) msg += "; " + v.rule + " " + v.subject + " " + v.detail;
    fail.raise(ExtractionErrorKind::malformed_input, msg);
  }
  const ExtractionParams params = problem.params;
  const int k = params.k;
  WorkState st{problem.host, problem.roots, problem.model, full_rows(problem.model.pattern)};
  std::vector<Lift> lifts;

  bool reduced = false;
  while (auto step = source.next_reduction(st, reduced, fail)) {
    const std::size_t before = st.host.measure();
    lifts.push_back(apply_step(st, *step, k, fail));
    trace.push_back({before, st.host.measure(), std::move(*step)});
    reduced = true;
  }

  CoordSet carriers;
  for (const auto& [c, b] : st.model.branches) {
    const bool in_roots = std::all_of(b.vertices.begin(), b.vertices.end(),
                                      [&](VertexId v) { return st.roots.contains(v); });
    if (b.vertices.size() != 1 && !in_roots) {
      fail.internal("after reduction branch " + to_string(c) + " is neither a single vertex nor inside the roots");
    }
    if (meets(b.vertices, st.roots)) carriers.insert(c);
  }
  if (static_cast<int>(carriers.size()) > k) fail.internal("more than k pattern vertices carry roots");
  for (GridCoord c : pattern_boundary(st.model.pattern)) {
    if (!carriers.contains(c)) fail.internal("pattern boundary vertex " + to_string(c) + " carries no root");
  }

  const std::size_t measure = st.host.measure();
  BandSelection band = source.band(st, carriers, fail);
  const GridAtlas& atlas = band.atlas;
  if (atlas.g != params.g || atlas.k != k || atlas.spec.n != params.n) fail.internal("band has the wrong shape");
  for (int i = atlas.first_band_row(); i <= atlas.last_band_row(); ++i) {
    for (int j = 1; j <= params.n; ++j) {
      if (carriers.contains({i, j})) fail.internal("band row " + std::to_string(i) + " carries a root");
      if (!st.model.pattern.vertices.contains({i, j})) {
        fail.internal("band row " + std::to_string(i) + " leaves the pattern");
      }
    }
  }
  trace.push_back({measure, measure, band});

  const std::vector<GridCoord> segment = root_segment(atlas);
  CoordSet others = inner_subgrid(atlas, k);
  for (GridCoord c : segment) others.erase(c);
  const Graph g_star = delete_vertices(st.host, image_of_vertices(st.model, others));
  std::map<VertexId, int> segment_index;
  for (int i = 0; i < k; ++i) {
    for (VertexId v : st.model.branch(segment[i]).vertices) segment_index.emplace(v, i);
  }
  VertexSet targets;
  for (const auto& [v, i] : segment_index) targets.insert(v);
  MengerAugmentation found = source.paths(g_star, st.roots, targets, fail);
  trace.push_back({measure, measure, found});

  std::vector<Path> ordered(k);
  std::vector<bool> taken(k, false);
  for (const Path& p : found.paths) {
    if (p.vertices.empty() || !segment_index.contains(p.back())) fail.internal("path does not end on the root segment");
    const int i = segment_index.at(p.back());
    if (taken[i]) fail.internal("two paths end in the same root segment branch");
    taken[i] = true;
    ordered[i] = p;
  }
  if (static_cast<int>(found.paths.size()) != k) fail.internal("expected exactly k paths");

  Outcome out;
  out.atlas = atlas;
  std::tie(out.base, out.labeling) = relabel_square(st.model, atlas.anchor, params.g);
  try {
    out.augmented = apply_augmentation(st.host, out.base, ordered, st.roots);
  } catch (const AugmentationError& err) {
    fail.internal(std::string("final augmentation failed: ") + err.what());
  }

  for (auto it = lifts.rbegin(); it != lifts.rend(); ++it) apply_lift(out, *it, k, fail);

  ExtractionResult result;
  result.atlas = out.atlas;
  result.subgrid = inner_subgrid(out.atlas, k);
  result.witness = AugmentationWitness{std::move(out.base), std::move(out.augmented), problem.roots,
                                       std::move(out.labeling)};
  result.trace = trace;
  if (const ValidationReport report = verify_result(problem, result); !report.ok()) {
    fail.internal("result failed verification: " + report.violations.front().rule + " " +
                  report.violations.front().subject + " " + report.violations.front().detail);
  }
  return result;
}

}  // namespace

int minimum_grid_side(int g, int k) { return k * (g + 2 * k) + 1; }

std::string kind_name(const ReductionStep& step) {
  return std::visit(overloaded{[](const SeparationRecursion&) { return "separation-recursion"; },
                               [](const EdgeDeletion&) { return "edge-delete"; },
                               [](const BranchEdgeDeletion&) { return "branch-edge-delete"; },
                               [](const BranchEdgeContraction&) { return "branch-edge-contract"; },
                               [](const BandSelection&) { return "band-selected"; },
                               [](const MengerAugmentation&) { return "menger-augment"; }},
                    step);
}

bool is_reduction(const ReductionStep& step) {
  return !std::holds_alternative<BandSelection>(step) && !std::holds_alternative<MengerAugmentation>(step);
}

std::string kind_name(ExtractionErrorKind kind) {
  switch (kind) {
    case ExtractionErrorKind::hypothesis_violated:
      return "HypothesisViolated";
    case ExtractionErrorKind::malformed_input:
      return "MalformedInput";
    case ExtractionErrorKind::internal_invariant_broken:
      return "InternalInvariantBroken";
  }
  return "unknown";
}

ValidationReport check_problem(const ExtractionProblem& problem) {
  ValidationReport report;
  const auto [n, g, k] = problem.params;
  if (k < 1 || k > g) report.add("params", "k", "need 1 <= k <= g");
  if (n < minimum_grid_side(g, k)) {
    report.add("params", "n", "need n > k(g + 2k) = " + std::to_string(minimum_grid_side(g, k) - 1));
  }
  if (problem.model.pattern.n != n) report.add("params", "n", "pattern grid side differs from n");
  if (static_cast<int>(problem.roots.size()) != k) report.add("roots", "Z", "need exactly k roots");
  for (VertexId z : problem.roots) {
    if (!problem.host.has_vertex(z)) report.add("roots", std::to_string(z), "root is not a host vertex");
  }
  const ValidationReport pm = validate_pseudomodel(problem.host, problem.model);
  for (Violation v : pm.violations) {
    v.rule = "pseudomodel:" + v.rule;
    report.violations.push_back(std::move(v));
  }
  if (!pm.ok()) return report;
  if (full_rows(problem.model.pattern).empty()) report.add("pattern-row", "J", "pattern contains no full row");

  const CoordSet border = pattern_boundary(problem.model.pattern);
  for (const auto& [c, b] : problem.model.branches) {
    if (is_connected(problem.host, b) && !border.contains(c)) continue;
    for (const Subgraph& comp : components(problem.host, b)) {
      if (!meets(comp.vertices, problem.roots)) {
        report.add("branch-hypothesis", to_string(c),
                   "branch is disconnected or on the pattern boundary and has a root-free component");
        break;
      }
    }
  }
  return report;
}

HypothesisCertificate check_hypothesis(const ExtractionProblem& problem) {
  HypothesisCertificate out;
  const int k = problem.params.k;
  const GridSpec spec{problem.model.pattern.n};
  for (int r : full_rows(problem.model.pattern)) {
    const VertexSet target = image_of_vertices(problem.model, row(spec, r));
    CutResult cut = menger(problem.host, problem.roots, target, k);
    if (cut.found_paths()) continue;
    out.holds = false;
    out.violation = BlockingSeparation{BlockingSeparation::Kind::strict, *cut.separation, r};
    return out;
  }
  return out;
}

ExtractionResult extract(const ExtractionProblem& problem) {
  Solver solver(problem.params);
  return run(problem, solver);
}

ExtractionResult replay(const ExtractionProblem& problem, const std::vector<ReductionRecord>& trace) {
  Replayer replayer(trace);
  ExtractionResult result = run(problem, replayer);
  if (!replayer.exhausted()) {
    ExtractionError err(ExtractionErrorKind::internal_invariant_broken, "trace has records left after replay");
    err.trace = result.trace;
    throw err;
  }
  for (std::size_t i = 0; i < trace.size(); ++i) {
    if (trace[i].measure_before != result.trace[i].measure_before ||
        trace[i].measure_after != result.trace[i].measure_after) {
      ExtractionError err(ExtractionErrorKind::internal_invariant_broken,
                          "recorded measure differs from the replayed one at record " + std::to_string(i));
      err.trace = result.trace;
      throw err;
    }
  }
  return result;
}

ValidationReport verify_result(const ExtractionProblem& problem, const ExtractionResult& result) {
  ValidationReport report;
  const auto [n, g, k] = problem.params;
  const GridAtlas& atlas = result.atlas;
  if (atlas.spec.n != n || atlas.g != g || atlas.k != k) report.add("subgrid-shape", "atlas", "wrong parameters");
  const CoordSet h = inner_subgrid(atlas, k);
  if (result.subgrid != h) report.add("subgrid-shape", "subgrid", "subgrid differs from the atlas square");
  for (GridCoord c : h) {
    if (!problem.model.pattern.vertices.contains(c)) report.add("subgrid-shape", to_string(c), "not a pattern vertex");
  }
  if (!report.ok()) return report;

  try {
    auto [base, labeling] = relabel_square(problem.model, atlas.anchor, g);
    if (base != result.witness.base || labeling != result.witness.labeling) {
      report.add("base-restriction", "base", "base is not the restriction of the input model to the subgrid");
    }
  } catch (const ModelError& err) {
    report.add("subgrid-shape", "edges", err.what());
  }
  if (result.witness.roots != problem.roots) report.add("base-restriction", "roots", "witness roots differ");
  for (const auto& [c, b] : result.witness.base.branches) {
    if (meets(b.vertices, problem.roots)) report.add("root-free-branch", to_string(c), "base branch contains a root");
  }
  for (Violation v : validate_model(problem.host, result.witness.base).violations) {
    v.rule = "base:" + v.rule;
    report.violations.push_back(std::move(v));
  }
  report.append(check_augmentation(problem.host, result.witness));
  return report;
}

ExtractionResult extract_via_tangle_statement(const Graph& host, const Model& grid_model, const VertexSet& roots,
                                              int g, int k) {
  const int n = grid_model.pattern.n;
  ValidationReport report;
  if (grid_model.pattern != full_grid_pattern(n)) report.add("pattern", "G_n", "model must cover the full grid");
  report.append(validate_model(host, grid_model));
  if (!report.ok()) {
    ExtractionError err(ExtractionErrorKind::malformed_input,
                        "grid model is not a model of the full grid: " + report.violations.front().rule);
    throw err;
  }
  return extract(ExtractionProblem{host, roots, grid_model, ExtractionParams{n, g, k}});
}

std::optional<int> row_order_bound(const Model& grid_model, const ExtractionResult& result, const Separation& s) {
  const Model& base = result.witness.base;
  const int g = base.pattern.n;
  const int n = grid_model.pattern.n;
  const VertexSet& side = s.a().vertices;
  auto inside = [&](const VertexSet& img) { return std::includes(side.begin(), side.end(), img.begin(), img.end()); };
  bool row_inside = false;
  for (int a = 1; a <= g && !row_inside; ++a) row_inside = inside(image_of_vertices(base, row(GridSpec{g}, a)));
  if (!row_inside) return std::nullopt;

  const VertexSet cut = s.cut();
  int meeting = 0;
  bool free_column = false;
  for (int j = 1; j <= n; ++j) {
    const VertexSet img = image_of_vertices(grid_model, column(GridSpec{n}, j));
    if (!meets(img, side)) continue;
    ++meeting;
    free_column = free_column || !meets(img, cut);
  }
  // Distinct columns have disjoint images, so each one hit needs its own cut vertex.
  if (!free_column) return meeting;
  // A column inside V(A) meets every row image: either all rows hit the cut,
  // or some row image lies inside V(A), which a tangle member below order n excludes.
  return n;
}

}  // namespace rootgrid
