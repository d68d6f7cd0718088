#include <gtest/gtest.h>

#include "rootgrid/model.hpp"
#include "support.hpp"

namespace rootgrid {
namespace {

GridPattern one_vertex(int n, GridCoord c) {
  GridPattern p;
  p.n = n;
  p.vertices.insert(c);
  return p;
}

TEST(Validate, IdentityModelOfG2) {
  const Graph g = grid_graph(GridSpec{2});
  EXPECT_TRUE(validate_pseudomodel(g, identity_model(2)).ok());
  EXPECT_TRUE(validate_model(g, identity_model(2)).ok());
}

TEST(Validate, OverlappingBranches) {
  const Graph g = grid_graph(GridSpec{2});
  Model m = identity_model(2);
  m.branches[{1, 2}].vertices.insert(1);
  const ValidationReport r = validate_pseudomodel(g, m);
  EXPECT_TRUE(r.has("pairwise-vertex-disjoint"));
}

TEST(Validate, EdgeImageEndOutsideBranches) {
  Graph g = grid_graph(GridSpec{2});
  g.add_vertex(9);
  Model m = identity_model(2);
  const EdgeId stray = g.add_edge(1, 9);
  m.edge_images[GridEdge({1, 1}, {1, 2})] = stray;
  EXPECT_TRUE(validate_pseudomodel(g, m).has("edge-image-ends"));
}

TEST(Validate, ReusedEdgeImage) {
  const Graph g = grid_graph(GridSpec{2});
  Model m = identity_model(2);
  m.edge_images[GridEdge({2, 1}, {2, 2})] = m.edge_images.at(GridEdge({1, 1}, {1, 2}));
  EXPECT_TRUE(validate_pseudomodel(g, m).has("distinct-edge-images"));
}

TEST(Validate, DisconnectedBranchIsOnlyAPseudomodel) {
  Graph g = grid_graph(GridSpec{2});
  g.add_vertex(9);
  Model m = identity_model(2);
  m.branches[{1, 1}].vertices.insert(9);
  EXPECT_TRUE(validate_pseudomodel(g, m).ok());
  const ValidationReport r = validate_model(g, m);
  ASSERT_EQ(r.violations.size(), 1u);
  EXPECT_EQ(r.violations[0].rule, "branch-connected");
  EXPECT_EQ(r.violations[0].subject, "[1,1]");
}

TEST(Validate, EmptyBranchAndMissingImage) {
  const Graph g = grid_graph(GridSpec{2});
  Model m = identity_model(2);
  m.branches[{2, 2}] = Subgraph{};
  m.edge_images.erase(GridEdge({1, 1}, {2, 1}));
  const ValidationReport r = validate_pseudomodel(g, m);
  EXPECT_TRUE(r.has("non-null-branch"));
  EXPECT_TRUE(r.has("edge-image-missing"));
}

TEST(Validate, ReportsEveryViolation) {
  const Graph g = grid_graph(GridSpec{2});
  Model m = identity_model(2);
  m.branches[{1, 2}].vertices.insert(1);
  m.branches[{2, 2}].vertices.insert(77);
  const ValidationReport r = validate_pseudomodel(g, m);
  EXPECT_TRUE(r.has("pairwise-vertex-disjoint"));
  EXPECT_TRUE(r.has("branch-not-subgraph"));
}

TEST(Images, OfVertices) {
  const Model m = identity_model(3);
  EXPECT_TRUE(image_of_vertices(m, {}).empty());
  EXPECT_EQ(image_of_vertices(m, {{2, 2}}), (VertexSet{5}));
  EXPECT_EQ(image_of_vertices(m, {{1, 1}, {3, 3}}).size(), 2u);
  EXPECT_THROW((void)image_of_vertices(m, {{4, 1}}), ModelError);
}

TEST(Images, OfSubgraph) {
  const Model m = identity_model(3);
  EXPECT_EQ(image_of_subgraph(m, one_vertex(3, {2, 2})), m.branch({2, 2}));
  GridPattern edge = one_vertex(3, {1, 1});
  edge.vertices.insert({1, 2});
  edge.edges.insert(GridEdge({1, 1}, {1, 2}));
  EXPECT_EQ(image_of_subgraph(m, edge), (Subgraph{{1, 2}, {1}}));
  // Row 2 of the identity model is the host's row path.
  GridPattern row2;
  row2.n = 3;
  for (int j = 1; j <= 3; ++j) row2.vertices.insert({2, j});
  row2.edges = {GridEdge({2, 1}, {2, 2}), GridEdge({2, 2}, {2, 3})};
  const Graph host = grid_graph(GridSpec{3});
  const Subgraph img = image_of_subgraph(m, row2);
  EXPECT_EQ(img.vertices, (VertexSet{4, 5, 6}));
  ASSERT_EQ(img.edges.size(), 2u);
  for (EdgeId e : img.edges) EXPECT_EQ(host.ends(e).v - host.ends(e).u, 1);
}

TEST(Restrict, FullEmptyAndCentre) {
  const Model m = identity_model(3);
  EXPECT_EQ(restrict(m, m.pattern), m);
  GridPattern none;
  none.n = 3;
  const Pseudomodel empty = restrict(m, none);
  EXPECT_TRUE(empty.branches.empty());
  EXPECT_TRUE(empty.edge_images.empty());
  const Pseudomodel centre = restrict(m, one_vertex(3, {2, 2}));
  ASSERT_EQ(centre.branches.size(), 1u);
  EXPECT_EQ(centre.branch({2, 2}), (Subgraph{{5}, {}}));
  EXPECT_TRUE(validate_model(grid_graph(GridSpec{3}), centre).ok());
  EXPECT_THROW((void)restrict(m, one_vertex(4, {4, 4})), ModelError);
}

TEST(Relabel, SquareIsRenumbered) {
  const Model m = identity_model(5);
  const auto [small, labels] = relabel_square(m, {2, 3}, 2);
  EXPECT_EQ(small.pattern, full_grid_pattern(2));
  EXPECT_EQ(small.branch({1, 1}), m.branch({2, 3}));
  EXPECT_EQ(small.branch({2, 2}), m.branch({3, 4}));
  EXPECT_EQ(small.edge_images.at(GridEdge({1, 1}, {1, 2})), m.edge_images.at(GridEdge({2, 3}, {2, 4})));
  EXPECT_EQ(labels.size(), 4u);
  EXPECT_TRUE(validate_model(grid_graph(GridSpec{5}), small).ok());
}

// Host: G_2 plus z - x - v11, so the augmenting path is z, x, 1.
struct AugmentFixture : ::testing::Test {
  Graph host = grid_graph(GridSpec{2});
  Model base = identity_model(2);
  EdgeId zx = 0, x1 = 0;
  void SetUp() override {
    host.add_vertex(10);
    host.add_vertex(11);
    zx = host.add_edge(10, 11);
    x1 = host.add_edge(11, 1);
  }
  Path path() const { return Path{{10, 11, 1}, {zx, x1}}; }
  AugmentationWitness witness(const Model& aug) const { return {base, aug, {10}, {}}; }
};

TEST_F(AugmentFixture, DegeneratePathLeavesTheModel) {
  const Model aug = apply_augmentation(host, base, {Path{{1}, {}}}, {1});
  EXPECT_EQ(aug, base);
  EXPECT_TRUE(check_augmentation(host, AugmentationWitness{base, aug, {1}, {}}).ok());
}

TEST_F(AugmentFixture, PathIsAbsorbedIntoTheFirstBranch) {
  const Model aug = apply_augmentation(host, base, {path()}, {10});
  EXPECT_EQ(aug.branch({1, 1}), (Subgraph{{1, 10, 11}, {zx, x1}}));
  EXPECT_EQ(aug.branch({2, 1}), base.branch({2, 1}));
  EXPECT_EQ(aug.edge_images, base.edge_images);
  EXPECT_TRUE(check_augmentation(host, witness(aug)).ok());
}

TEST_F(AugmentFixture, RejectsPathsThatCrossOtherBranches) {
  const EdgeId z2 = host.add_edge(10, 2);
  const Path bad{{10, 2, 1}, {z2, 1}};
  EXPECT_THROW((void)apply_augmentation(host, base, {bad}, {10}), AugmentationError);
  EXPECT_THROW((void)apply_augmentation(host, base, {Path{{11, 1}, {x1}}}, {10}), AugmentationError);
}

TEST_F(AugmentFixture, CheckerCatchesMissingRootAndChangedImage) {
  const Model aug = apply_augmentation(host, base, {path()}, {10});
  Model no_root = aug;
  no_root.branches[{1, 1}] = Subgraph{{1, 11}, {x1}};
  EXPECT_TRUE(check_augmentation(host, witness(no_root)).has("first-column-root"));
  Model moved = aug;
  moved.edge_images[GridEdge({1, 1}, {1, 2})] = host.add_edge(11, 2);
  EXPECT_TRUE(check_augmentation(host, witness(moved)).has("edge-image-unchanged"));
  Model grown = aug;
  grown.branches[{2, 2}].vertices.insert(10);
  EXPECT_TRUE(check_augmentation(host, witness(grown)).has("unchanged-branch"));
}

TEST(Augment, TwoRootsOnTheSubdividedGrid) {
  const ExtractionProblem p = testing::subdivided_grid_problem(5, 2, 2, true);
  ASSERT_TRUE(validate_model(p.host, p.model).ok());
  ASSERT_TRUE(validate_model(p.host, relabel_square(p.model, {1, 1}, 2).first).ok());
}

}  // namespace
}  // namespace rootgrid
