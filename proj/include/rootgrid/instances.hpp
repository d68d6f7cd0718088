#ifndef ROOTGRID_INSTANCES_HPP
#define ROOTGRID_INSTANCES_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include "rootgrid/extraction.hpp"
#include "rootgrid/io.hpp"

namespace rootgrid {

enum class InstanceKind { identity_grid, grid_plus_roots, random_attachment };

[[nodiscard]] std::string kind_name(InstanceKind kind);
[[nodiscard]] InstanceKind instance_kind_from(const std::string& name);

struct InstanceRecipe {
  InstanceKind kind = InstanceKind::identity_grid;
  int n = 8;
  int g = 2;
  int k = 1;
  std::uint64_t seed = 0;
  int degree = 1;       // row-1 neighbours per root
  int extra_edges = 0;  // random-attachment only; 0 means n
};

struct Instance {
  Graph graph;
  VertexSet roots;
  Model model;  // model of G_n
  InstanceRecipe recipe;

  [[nodiscard]] ExtractionProblem problem() const {
    return {graph, roots, model, ExtractionParams{recipe.n, recipe.g, recipe.k}};
  }
};

class GenerationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  std::optional<BlockingSeparation> last_certificate;
};

/// identity-grid: G_n with its identity model, roots = first k vertices of
/// row 1. grid-plus-roots: G_n plus k fresh roots n^2+1 .. n^2+k, each joined
/// to `degree` distinct row-1 vertices; kept only if check_hypothesis holds,
/// otherwise retried with the next sub-seed. random-attachment: grid-plus-roots
/// plus extra random edges. Equal recipes give equal instances.
[[nodiscard]] Instance generate_instance(const InstanceRecipe& recipe);

/// Multigraph on vertices 1..vertices with `edges` random edges (loops and
/// parallel edges included).
[[nodiscard]] Graph random_multigraph(std::uint64_t seed, int vertices, int edges);

[[nodiscard]] io::Json to_json(const InstanceRecipe& r);
[[nodiscard]] InstanceRecipe recipe_from_json(const io::Json& j);

/// graph, roots, model, params, recipe.
[[nodiscard]] io::Json instance_to_json(const Instance& inst);
/// Reads graph, roots, model and params; the recipe is optional.
[[nodiscard]] ExtractionProblem problem_from_json(const io::Json& j);

}  // namespace rootgrid

#endif  // ROOTGRID_INSTANCES_HPP
