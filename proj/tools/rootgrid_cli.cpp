// rootgrid: rooted grid minor extraction with checkable certificates.
//
// Exit codes: 0 ok, 1 validation failure, 2 hypothesis violated,
// 3 internal invariant broken, 64 malformed input.

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "rootgrid/extraction.hpp"
#include "rootgrid/instances.hpp"
#include "rootgrid/io.hpp"
#include "rootgrid/oracles.hpp"

namespace {

using namespace rootgrid;
using io::Json;

constexpr int kOk = 0;
constexpr int kValidation = 1;
constexpr int kHypothesis = 2;
constexpr int kInternal = 3;
constexpr int kMalformed = 64;

void emit(const std::string& text, const std::string& out) {
  if (out.empty() || out == "-") {
    std::cout << text;
  } else {
    io::write_text(out, text);
  }
}

void diagnose(const std::string& kind, const std::string& message) {
  std::cerr << Json{{"error", kind}, {"message", message}}.dump() << "\n";
}

VertexSet parse_list(const std::string& text) {
  VertexSet out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      const int v = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.insert(v);
    } catch (const std::logic_error&) {
      throw io::FormatError("not an integer list: " + text);
    }
  }
  return out;
}

// A roots argument is either a {"roots": [...]} file or a comma list.
VertexSet load_roots(const std::string& arg) {
  if (std::filesystem::is_regular_file(arg)) return io::roots_from_json(io::read_json(arg));
  return parse_list(arg);
}

// Either a JSON-lines trace or a result bundle with an embedded one.
std::vector<ReductionRecord> load_trace(const std::string& path) {
  const std::string text = io::read_text(path);
  const Json whole = Json::parse(text, nullptr, false);
  if (!whole.is_discarded() && whole.is_object() && whole.contains("trace")) return io::result_from_json(whole).trace;
  return io::trace_from_jsonl(text);
}

oracles::EnumerationBudget budget_for(int max_vertices, int max_order) {
  oracles::EnumerationBudget b;
  b.maxVertices = max_vertices;
  b.maxOrder = std::max(b.maxOrder, max_order);
  return b;
}

struct GenGrid {
  int n = 0;
  std::string out;
};

struct GenInstance {
  std::string recipe;
  std::string kind;
  std::optional<int> n, g, k, degree, extra;
  std::optional<std::uint64_t> seed;
  std::string out;
};

struct ValidateModel {
  std::string graph, model;
  bool strict = false, pseudo = false;
  std::string out;
};

struct FindSeparation {
  std::string graph, roots, model;
  int max_order = 1;
  std::string out;
};

struct MengerArgs {
  std::string graph, sources, targets, forbidden;
  int k = 1;
  std::string out;
};

struct ExtractArgs {
  std::string instance, graph, roots, model;
  std::optional<int> n, g, k;
  std::string out, trace, replay;
};

struct TangleArgs {
  std::string graph, grid_model;
  int order = 1;
  int max_vertices = 10;
  std::string out;
};

struct OracleArgs {
  std::string graph, grid_model, instance, result;
  int max_order = 1;
  int order = 1;
  int side = 2;
  int max_vertices = 10;
  std::string out;
};

int run_gen_grid(const GenGrid& a) {
  emit(io::dump(io::to_json(grid_graph(GridSpec{a.n}))), a.out);
  return kOk;
}

int run_gen_instance(const GenInstance& a) {
  InstanceRecipe r;
  bool seeded = false;
  if (!a.recipe.empty()) {
    const Json j = io::read_json(a.recipe);
    r = recipe_from_json(j);
    seeded = j.contains("seed");
  }
  if (!a.kind.empty()) r.kind = instance_kind_from(a.kind);
  if (a.n) r.n = *a.n;
  if (a.g) r.g = *a.g;
  if (a.k) r.k = *a.k;
  if (a.degree) r.degree = *a.degree;
  if (a.extra) r.extra_edges = *a.extra;
  if (a.seed) {
    r.seed = *a.seed;
  } else if (const char* env = std::getenv("SEED"); env != nullptr && !seeded) {
    try {
      r.seed = std::stoull(env);
    } catch (const std::logic_error&) {
      throw io::FormatError(std::string("SEED is not an unsigned integer: ") + env);
    }
  }
  if (!a.degree && a.recipe.empty()) r.degree = r.k;
  try {
    emit(io::dump(instance_to_json(generate_instance(r))), a.out);
  } catch (const GenerationError& err) {
    diagnose("GenerationFailed", err.what());
    if (err.last_certificate) std::cout << io::dump(Json{{"lastCertificate", io::to_json(*err.last_certificate)}});
    return kMalformed;
  }
  return kOk;
}

int run_validate_model(const ValidateModel& a) {
  const Graph g = io::graph_from_json(io::read_json(a.graph));
  const Pseudomodel p = io::model_from_json(io::read_json(a.model));
  const ValidationReport report = a.pseudo ? validate_pseudomodel(g, p) : validate_model(g, p);
  emit(io::dump(io::to_json(report)), a.out);
  return report.ok() ? kOk : kValidation;
}

int run_find_separation(const FindSeparation& a) {
  const Graph g = io::graph_from_json(io::read_json(a.graph));
  const VertexSet roots = load_roots(a.roots);
  const Pseudomodel p = io::model_from_json(io::read_json(a.model));
  if (const ValidationReport r = validate_pseudomodel(g, p); !r.ok()) {
    throw io::FormatError("model is not a pseudomodel: " + r.violations.front().rule);
  }
  const auto found = find_row_blocking_separation(g, roots, p, full_rows(p.pattern), a.max_order);
  emit(found ? io::dump(io::to_json(*found)) : std::string("none\n"), a.out);
  return kOk;
}

int run_menger(const MengerArgs& a) {
  const Graph g = io::graph_from_json(io::read_json(a.graph));
  const CutResult r = menger(g, parse_list(a.sources), parse_list(a.targets), a.k,
                             a.forbidden.empty() ? VertexSet{} : parse_list(a.forbidden));
  Json out;
  if (r.found_paths()) {
    out["paths"] = Json::array();
    for (const Path& p : r.paths) out["paths"].push_back(io::to_json(p));
  } else {
    out["cut"] = Json(*r.cut);
    out["separation"] = io::to_json(*r.separation);
  }
  emit(io::dump(out), a.out);
  return kOk;
}

int run_extract(const ExtractArgs& a) {
  ExtractionProblem problem;
  if (!a.instance.empty()) {
    problem = problem_from_json(io::read_json(a.instance));
  } else {
    if (a.graph.empty() || a.roots.empty() || a.model.empty()) {
      throw io::FormatError("extract needs --instance or all of --graph, --roots, --model");
    }
    problem.host = io::graph_from_json(io::read_json(a.graph));
    problem.roots = load_roots(a.roots);
    problem.model = io::model_from_json(io::read_json(a.model));
    problem.params.n = problem.model.pattern.n;
  }
  if (a.n) problem.params.n = *a.n;
  if (a.g) problem.params.g = *a.g;
  if (a.k) problem.params.k = *a.k;
  if (a.instance.empty() && (!a.g || !a.k)) throw io::FormatError("extract needs --g and --k");

  try {
    ExtractionResult result;
    if (a.replay.empty()) {
      result = extract(problem);
    } else {
      result = replay(problem, load_trace(a.replay));
    }
    if (!a.trace.empty()) io::write_text(a.trace, io::trace_to_jsonl(result.trace));
    emit(io::dump(io::result_to_json(problem.params, result)), a.out);
    return kOk;
  } catch (const ExtractionError& err) {
    if (!a.trace.empty()) io::write_text(a.trace, io::trace_to_jsonl(err.trace));
    Json out{{"error", kind_name(err.kind())}, {"message", err.what()}};
    if (err.certificate) out["certificate"] = io::to_json(*err.certificate);
    if (err.cut) out["cut"] = Json(*err.cut);
    emit(io::dump(out), a.out);
    diagnose(kind_name(err.kind()), err.what());
    switch (err.kind()) {
      case ExtractionErrorKind::hypothesis_violated:
        return kHypothesis;
      case ExtractionErrorKind::malformed_input:
        return kMalformed;
      case ExtractionErrorKind::internal_invariant_broken:
        return kInternal;
    }
    return kInternal;
  }
}

int run_check_tangle(const TangleArgs& a) {
  const Graph g = io::graph_from_json(io::read_json(a.graph));
  const auto budget = budget_for(a.max_vertices, a.order - 1);
  const std::vector<Separation> seps = oracles::enumerate_separations(g, a.order - 1, budget);
  Json out{{"order", a.order}, {"separations", seps.size()}};
  bool ok = true;
  if (!a.grid_model.empty()) {
    const Model m = io::model_from_json(io::read_json(a.grid_model));
    if (a.order > m.pattern.n) throw io::FormatError("tangle order exceeds the grid side of the model");
    Tangle t{a.order, {}};
    for (const Separation& s : seps) t.members.push_back(grid_tangle_member(m, s));
    std::sort(t.members.begin(), t.members.end());
    t.members.erase(std::unique(t.members.begin(), t.members.end()), t.members.end());
    const ValidationReport report = check_tangle_axioms(g, t, seps);
    ok = report.ok();
    out["members"] = t.members.size();
    out["report"] = io::to_json(report);
  } else {
    const std::vector<Tangle> tangles = oracles::enumerate_tangles(g, a.order, budget);
    out["tangles"] = Json::array();
    for (const Tangle& t : tangles) {
      const ValidationReport report = check_tangle_axioms(g, t, seps);
      ok = ok && report.ok();
      out["tangles"].push_back({{"members", t.members.size()}, {"report", io::to_json(report)}});
    }
  }
  emit(io::dump(out), a.out);
  return ok ? kOk : kValidation;
}

int run_oracle_separations(const OracleArgs& a) {
  const Graph g = io::graph_from_json(io::read_json(a.graph));
  const auto seps = oracles::enumerate_separations(g, a.max_order, budget_for(a.max_vertices, a.max_order));
  Json list = Json::array();
  for (const Separation& s : seps) list.push_back(io::to_json(s));
  emit(io::dump(Json{{"count", seps.size()}, {"separations", list}}), a.out);
  return kOk;
}

int run_oracle_tangles(const OracleArgs& a) {
  const Graph g = io::graph_from_json(io::read_json(a.graph));
  const auto tangles = oracles::enumerate_tangles(g, a.order, budget_for(a.max_vertices, a.order - 1));
  Json list = Json::array();
  for (const Tangle& t : tangles) {
    Json members = Json::array();
    for (const Separation& s : t.members) members.push_back(io::to_json(s));
    list.push_back({{"order", t.order}, {"members", members}});
  }
  emit(io::dump(Json{{"count", tangles.size()}, {"tangles", list}}), a.out);
  return kOk;
}

int run_oracle_grid_model(const OracleArgs& a) {
  const Graph g = io::graph_from_json(io::read_json(a.graph));
  oracles::EnumerationBudget budget;
  budget.maxVertices = a.max_vertices;
  const auto m = oracles::brute_force_grid_model(g, a.side, budget);
  emit(m ? io::dump(io::to_json(*m)) : std::string("none\n"), a.out);
  return kOk;
}

int run_oracle_row_property(const OracleArgs& a) {
  Graph g;
  Model grid_model;
  if (!a.instance.empty()) {
    const ExtractionProblem p = problem_from_json(io::read_json(a.instance));
    g = p.host;
    grid_model = p.model;
  } else {
    if (a.graph.empty() || a.grid_model.empty()) throw io::FormatError("row-property needs --instance or --graph and --grid-model");
    g = io::graph_from_json(io::read_json(a.graph));
    grid_model = io::model_from_json(io::read_json(a.grid_model));
  }
  const ExtractionResult result = io::result_from_json(io::read_json(a.result));
  const int gside = result.atlas.g;
  const int max_order = std::max(a.max_order, gside - 1);
  const auto seps = oracles::enumerate_separations(g, max_order, budget_for(a.max_vertices, max_order));
  const ValidationReport report = oracles::verify_output_row_property(result, grid_model, seps, gside);
  emit(io::dump(Json{{"separations", seps.size()}, {"report", io::to_json(report)}}), a.out);
  return report.ok() ? kOk : kValidation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rooted grid minor extraction with checkable certificates"};
  app.require_subcommand(1);

  GenGrid gen_grid;
  auto* c_gen_grid = app.add_subcommand("gen-grid", "Write the n x n grid graph");
  c_gen_grid->add_option("--n", gen_grid.n, "Grid side")->required()->check(CLI::PositiveNumber);
  c_gen_grid->add_option("--out", gen_grid.out, "Output file (default stdout)");

  GenInstance gen_inst;
  auto* c_gen_inst = app.add_subcommand("gen-instance", "Generate an instance bundle from a recipe");
  c_gen_inst->add_option("--recipe", gen_inst.recipe, "Recipe JSON file")->check(CLI::ExistingFile);
  c_gen_inst->add_option("--kind", gen_inst.kind, "identity-grid, grid-plus-roots or random-attachment");
  c_gen_inst->add_option("--n", gen_inst.n, "Side of the host grid");
  c_gen_inst->add_option("--g", gen_inst.g, "Side of the grid to extract");
  c_gen_inst->add_option("--k", gen_inst.k, "Number of roots");
  c_gen_inst->add_option("--seed", gen_inst.seed, "Seed (overrides SEED)");
  c_gen_inst->add_option("--degree", gen_inst.degree, "Row-1 neighbours per root");
  c_gen_inst->add_option("--extra-edges", gen_inst.extra, "Extra random edges (random-attachment)");
  c_gen_inst->add_option("--out", gen_inst.out, "Output file (default stdout)");

  ValidateModel validate;
  auto* c_validate = app.add_subcommand("validate-model", "Check a model or pseudomodel against a graph");
  c_validate->add_option("--graph", validate.graph, "Graph file")->required();
  c_validate->add_option("--model", validate.model, "Model file")->required();
  auto* strict_flag = c_validate->add_flag("--strict-model", validate.strict, "Require connected branches (default)");
  c_validate->add_flag("--pseudo", validate.pseudo, "Allow disconnected branches")->excludes(strict_flag);
  c_validate->add_option("--out", validate.out, "Output file (default stdout)");

  FindSeparation find_sep;
  auto* c_find = app.add_subcommand("find-separation", "Search for a separation blocking the roots from a full row");
  c_find->add_option("--graph", find_sep.graph, "Graph file")->required();
  c_find->add_option("--roots", find_sep.roots, "Roots file or comma list")->required();
  c_find->add_option("--model", find_sep.model, "Pseudomodel file")->required();
  c_find->add_option("--max-order", find_sep.max_order, "Report order < this (strict) or = this (reducible)")
      ->required()
      ->check(CLI::PositiveNumber);
  c_find->add_option("--out", find_sep.out, "Output file (default stdout)");

  MengerArgs menger_args;
  auto* c_menger = app.add_subcommand("menger", "Disjoint paths or a small vertex cut");
  c_menger->add_option("--graph", menger_args.graph, "Graph file")->required();
  c_menger->add_option("--sources", menger_args.sources, "Comma-separated source vertices")->required();
  c_menger->add_option("--targets", menger_args.targets, "Comma-separated target vertices")->required();
  c_menger->add_option("--k", menger_args.k, "Number of paths wanted")->required()->check(CLI::PositiveNumber);
  c_menger->add_option("--forbidden", menger_args.forbidden, "Comma-separated vertices to avoid");
  c_menger->add_option("--out", menger_args.out, "Output file (default stdout)");

  ExtractArgs ext;
  auto* c_extract = app.add_subcommand("extract", "Extract a root-augmented g x g grid model");
  c_extract->add_option("--instance", ext.instance, "Instance bundle (graph, roots, model, params)");
  c_extract->add_option("--graph", ext.graph, "Graph file");
  c_extract->add_option("--roots", ext.roots, "Roots file or comma list");
  c_extract->add_option("--model", ext.model, "Pseudomodel file");
  c_extract->add_option("--n", ext.n, "Grid side of the pattern (default: from the model)");
  c_extract->add_option("--g", ext.g, "Side of the grid to extract");
  c_extract->add_option("--k", ext.k, "Number of roots");
  c_extract->add_option("--out", ext.out, "Output bundle (default stdout)");
  c_extract->add_option("--trace", ext.trace, "Also write the trace as JSON lines");
  c_extract->add_option("--replay", ext.replay, "Replay a recorded trace (JSON lines or result bundle)");

  TangleArgs tangle;
  auto* c_tangle = app.add_subcommand("check-tangle", "Check tangle axioms by enumeration");
  c_tangle->add_option("--graph", tangle.graph, "Graph file")->required();
  c_tangle->add_option("--order", tangle.order, "Tangle order")->required()->check(CLI::PositiveNumber);
  c_tangle->add_option("--grid-model", tangle.grid_model, "Orient by the tangle of this grid model");
  c_tangle->add_option("--max-vertices", tangle.max_vertices, "Enumeration budget");
  c_tangle->add_option("--out", tangle.out, "Output file (default stdout)");

  auto* c_oracle = app.add_subcommand("oracle", "Brute-force oracles");
  c_oracle->require_subcommand(1);
  OracleArgs orc;
  auto* o_seps = c_oracle->add_subcommand("separations", "Enumerate separations up to an order");
  o_seps->add_option("--graph", orc.graph, "Graph file")->required();
  o_seps->add_option("--max-order", orc.max_order, "Largest order")->required();
  auto* o_tangles = c_oracle->add_subcommand("tangles", "Enumerate tangles of an order");
  o_tangles->add_option("--graph", orc.graph, "Graph file")->required();
  o_tangles->add_option("--order", orc.order, "Tangle order")->required()->check(CLI::PositiveNumber);
  auto* o_grid = c_oracle->add_subcommand("grid-model", "Search for a grid model");
  o_grid->add_option("--graph", orc.graph, "Graph file")->required();
  o_grid->add_option("--side", orc.side, "Grid side")->required()->check(CLI::PositiveNumber);
  auto* o_row = c_oracle->add_subcommand("row-property", "Check the output row order property");
  o_row->add_option("--instance", orc.instance, "Instance bundle");
  o_row->add_option("--graph", orc.graph, "Graph file");
  o_row->add_option("--grid-model", orc.grid_model, "Model of the full grid");
  o_row->add_option("--result", orc.result, "Result bundle from extract")->required();
  o_row->add_option("--max-order", orc.max_order, "Largest separation order to enumerate");
  for (auto* sub : {o_seps, o_tangles, o_grid, o_row}) {
    sub->add_option("--max-vertices", orc.max_vertices, "Enumeration budget");
    sub->add_option("--out", orc.out, "Output file (default stdout)");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kMalformed;
  }

  try {
    if (*c_gen_grid) return run_gen_grid(gen_grid);
    if (*c_gen_inst) return run_gen_instance(gen_inst);
    if (*c_validate) return run_validate_model(validate);
    if (*c_find) return run_find_separation(find_sep);
    if (*c_menger) return run_menger(menger_args);
    if (*c_extract) return run_extract(ext);
    if (*c_tangle) return run_check_tangle(tangle);
    if (*o_seps) return run_oracle_separations(orc);
    if (*o_tangles) return run_oracle_tangles(orc);
    if (*o_grid) return run_oracle_grid_model(orc);
    if (*o_row) return run_oracle_row_property(orc);
  } catch (const oracles::BudgetExceeded& err) {
    diagnose("BudgetExceeded", err.what());
    return kMalformed;
  } catch (const io::FormatError& err) {
    diagnose("MalformedInput", err.what());
    return kMalformed;
  } catch (const std::invalid_argument& err) {
    diagnose("MalformedInput", err.what());
    return kMalformed;
  } catch (const std::out_of_range& err) {
    diagnose("MalformedInput", err.what());
    return kMalformed;
  } catch (const std::exception& err) {
    diagnose("Error", err.what());
    return kInternal;
  }
  return kMalformed;
}
