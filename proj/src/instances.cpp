#include "rootgrid/instances.hpp"

#include <random>

namespace rootgrid {
namespace {

constexpr int kMaxRetries = 64;

// Portable draw in [0, m); std distributions differ between libraries.
int draw(std::mt19937_64& rng, int m) { return static_cast<int>(rng() % static_cast<std::uint64_t>(m)); }

VertexSet first_row_sample(std::mt19937_64& rng, int n, int count) {
  std::vector<VertexId> pool;
  for (int j = 1; j <= n; ++j) pool.push_back(j);
  VertexSet out;
  for (int t = 0; t < count; ++t) {
    const int pick = t + draw(rng, n - t);
    std::swap(pool[t], pool[pick]);
    out.insert(pool[t]);
  }
  return out;
}

void check_recipe(const InstanceRecipe& r) {
  if (r.n < 1 || r.g < 1 || r.k < 1 || r.k > r.g) throw GenerationError("recipe needs n, g >= 1 and 1 <= k <= g");
  if (r.k > r.n) throw GenerationError("recipe needs k <= n");
  if (r.kind != InstanceKind::identity_grid && (r.degree < r.k || r.degree > r.n)) {
    throw GenerationError("attachment degree must lie in [k, n]");
  }
  if (r.extra_edges < 0) throw GenerationError("extra edge count must be non-negative");
}

}  // namespace

std::string kind_name(InstanceKind kind) {
  switch (kind) {
    case InstanceKind::identity_grid:
      return "identity-grid";
    case InstanceKind::grid_plus_roots:
      return "grid-plus-roots";
    case InstanceKind::random_attachment:
      return "random-attachment";
  }
  return "unknown";
}

InstanceKind instance_kind_from(const std::string& name) {
  for (InstanceKind k : {InstanceKind::identity_grid, InstanceKind::grid_plus_roots, InstanceKind::random_attachment}) {
    if (kind_name(k) == name) return k;
  }
  throw io::FormatError("unknown instance kind " + name);
}

Instance generate_instance(const InstanceRecipe& recipe) {
  check_recipe(recipe);
  const int n = recipe.n;
  const GridSpec spec{n};
  Instance inst{grid_graph(spec), {}, identity_model(n), recipe};
  if (recipe.kind == InstanceKind::identity_grid) {
    for (int j = 1; j <= recipe.k; ++j) inst.roots.insert(grid_vertex_id(spec, {1, j}));
    return inst;
  }

  std::optional<BlockingSeparation> last;
  for (int attempt = 0; attempt < kMaxRetries; ++attempt) {
    std::mt19937_64 rng(recipe.seed + static_cast<std::uint64_t>(attempt));
    Graph g = grid_graph(spec);
    VertexSet roots;
    for (int t = 1; t <= recipe.k; ++t) {
      const VertexId z = n * n + t;
      g.add_vertex(z);
      roots.insert(z);
      for (VertexId v : first_row_sample(rng, n, recipe.degree)) g.add_edge(z, v);
    }
    if (recipe.kind == InstanceKind::random_attachment) {
      const std::vector<VertexId> all(g.vertices().begin(), g.vertices().end());
      const int extra = recipe.extra_edges == 0 ? n : recipe.extra_edges;
      for (int t = 0; t < extra; ++t) {
        const int m = static_cast<int>(all.size());
        const VertexId u = all[draw(rng, m)];
        const VertexId v = all[draw(rng, m)];
        g.add_edge(u, v);
      }
    }
    Instance candidate{std::move(g), std::move(roots), inst.model, recipe};
    const HypothesisCertificate cert = check_hypothesis(candidate.problem());
    if (cert.holds) return candidate;
    last = cert.violation;
  }
  GenerationError err("no instance satisfying the hypothesis after " + std::to_string(kMaxRetries) + " sub-seeds");
  err.last_certificate = last;
  throw err;
}

Graph random_multigraph(std::uint64_t seed, int vertices, int edges) {
  std::mt19937_64 rng(seed);
  Graph g;
  for (VertexId v = 1; v <= vertices; ++v) g.add_vertex(v);
  for (int t = 0; t < edges && vertices > 0; ++t) {
    const VertexId u = 1 + draw(rng, vertices);
    const VertexId v = 1 + draw(rng, vertices);
    g.add_edge(u, v);
  }
  return g;
}

io::Json to_json(const InstanceRecipe& r) {
  return {{"kind", kind_name(r.kind)}, {"n", r.n},           {"g", r.g},
          {"k", r.k},                  {"seed", r.seed},     {"degree", r.degree},
          {"extraEdges", r.extra_edges}};
}

InstanceRecipe recipe_from_json(const io::Json& j) {
  try {
    InstanceRecipe r;
    r.kind = instance_kind_from(j.at("kind").get<std::string>());
    r.n = j.at("n").get<int>();
    r.g = j.at("g").get<int>();
    r.k = j.at("k").get<int>();
    r.seed = j.value("seed", std::uint64_t{0});
    r.degree = j.value("degree", r.k);
    r.extra_edges = j.value("extraEdges", 0);
    return r;
  } catch (const io::Json::exception& err) {
    throw io::FormatError(std::string("recipe: ") + err.what());
  }
}

io::Json instance_to_json(const Instance& inst) {
  return {{"graph", io::to_json(inst.graph)},
          {"roots", io::roots_to_json(inst.roots).at("roots")},
          {"model", io::to_json(inst.model)},
          {"params", io::to_json(ExtractionParams{inst.recipe.n, inst.recipe.g, inst.recipe.k})},
          {"recipe", to_json(inst.recipe)}};
}

ExtractionProblem problem_from_json(const io::Json& j) {
  if (!j.is_object()) throw io::FormatError("instance bundle must be an object");
  for (const char* key : {"graph", "roots", "model", "params"}) {
    if (!j.contains(key)) throw io::FormatError(std::string("instance bundle lacks \"") + key + "\"");
  }
  io::Json roots = io::Json::object();
  roots["roots"] = j.at("roots");
  return {io::graph_from_json(j.at("graph")), io::roots_from_json(roots), io::model_from_json(j.at("model")),
          io::params_from_json(j.at("params"))};
}

}  // namespace rootgrid
