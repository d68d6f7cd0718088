#include <gtest/gtest.h>

#include <algorithm>

#include "rootgrid/oracles.hpp"
#include "rootgrid/separation.hpp"
#include "support.hpp"

namespace rootgrid {
namespace {

bool disjoint_paths(const std::vector<Path>& paths) {
  VertexSet seen;
  for (const Path& p : paths) {
    for (VertexId v : p.vertices) {
      if (!seen.insert(v).second) return false;
    }
  }
  return true;
}

bool is_walk(const Graph& g, const Path& p) {
  if (p.vertices.empty() || p.edges.size() + 1 != p.vertices.size()) return false;
  for (std::size_t i = 0; i < p.edges.size(); ++i) {
    if (!g.has_edge(p.edges[i])) return false;
    const EdgeEnds& e = g.ends(p.edges[i]);
    if (!(e == EdgeEnds{p.vertices[i], p.vertices[i + 1]} || e == EdgeEnds{p.vertices[i + 1], p.vertices[i]})) {
      return false;
    }
  }
  return true;
}

VertexSet ids(GridSpec spec, const CoordSet& cs) {
  VertexSet out;
  for (GridCoord c : cs) out.insert(grid_vertex_id(spec, c));
  return out;
}

TEST(SeparationOrder, WholeAgainstNull) {
  const Graph g = testing::path_graph({1, 2, 3});
  EXPECT_EQ(Separation::make(g, whole(g), {}).order(), 0);
}

TEST(SeparationOrder, PathSplitAtMiddle) {
  const Graph g = testing::path_graph({1, 2, 3});
  const Separation s = Separation::make(g, {{1, 2}, {1}}, {{2, 3}, {2}});
  EXPECT_EQ(s.order(), 1);
  EXPECT_EQ(s.cut(), (VertexSet{2}));
}

TEST(SeparationInvariants, RejectsBadPairs) {
  const Graph g = testing::path_graph({1, 2, 3});
  EXPECT_THROW((void)Separation::make(g, {{1, 2}, {1}}, {{3}, {2}}), SeparationError);   // bc lacks b
  EXPECT_THROW((void)Separation::make(g, {{1, 2}, {1}}, {{2, 3}, {1, 2}}), SeparationError);  // shared edge
  EXPECT_THROW((void)Separation::make(g, {{1}, {}}, {{2, 3}, {2}}), SeparationError);  // ab uncovered
  EXPECT_TRUE(check_separation(g, Separation::trusted({{1}, {}}, {{3}, {}})).has("separation-cover"));
}

TEST(SeparationFromCut, EdgesInsideTheCutGoToA) {
  Graph g = testing::path_graph({1, 2, 3, 4});
  const EdgeId chord = g.add_edge(2, 3);
  const Separation s = separation_from_cut(g, {1}, {2, 3});
  EXPECT_EQ(s.a().vertices, (VertexSet{1, 2, 3}));
  EXPECT_TRUE(s.a().edges.contains(chord));
  EXPECT_TRUE(s.a().edges.contains(2));
  EXPECT_EQ(s.b().vertices, (VertexSet{2, 3, 4}));
  EXPECT_TRUE(check_separation(g, s).ok());
}

TEST(Menger, ColumnsOfG3) {
  const GridSpec spec{3};
  const Graph g = grid_graph(spec);
  const CutResult r = menger(g, ids(spec, column(spec, 1)), ids(spec, column(spec, 3)), 3);
  ASSERT_TRUE(r.found_paths());
  ASSERT_EQ(r.paths.size(), 3u);
  EXPECT_TRUE(disjoint_paths(r.paths));
  for (const Path& p : r.paths) {
    EXPECT_TRUE(is_walk(g, p));
    EXPECT_EQ(p.vertices.size(), 3u);  // the three rows
  }
}

TEST(Menger, UniqueInteriorVertex) {
  const Graph g = testing::path_graph({1, 2, 3});
  const CutResult r = menger(g, {1}, {3}, 2);
  ASSERT_FALSE(r.found_paths());
  EXPECT_EQ(*r.cut, (VertexSet{2}));
  ASSERT_TRUE(r.separation);
  EXPECT_EQ(r.separation->order(), 1);
  EXPECT_TRUE(check_separation(g, *r.separation).ok());
}

TEST(Menger, DifferentComponents) {
  Graph g = testing::path_graph({1, 2});
  g.add_vertex(5);
  const CutResult r = menger(g, {1}, {5}, 1);
  ASSERT_FALSE(r.found_paths());
  EXPECT_TRUE(r.cut->empty());
  EXPECT_EQ(r.separation->order(), 0);
  EXPECT_EQ(r.separation->a().vertices, (VertexSet{1, 2}));
}

TEST(Menger, SharedSourceAndTargetIsATrivialPath) {
  Graph g = testing::path_graph({1, 2, 3, 4});
  g.add_edge(4, 1);
  const VertexSet s{1, 2}, t{2, 3};
  const CutResult r = menger(g, s, t, 2);
  ASSERT_TRUE(r.found_paths());
  ASSERT_EQ(r.paths.size(), 2u);
  EXPECT_TRUE(disjoint_paths(r.paths));
  for (const Path& p : r.paths) {
    EXPECT_TRUE(is_walk(g, p));
    for (std::size_t i = 0; i < p.vertices.size(); ++i) {
      EXPECT_EQ(s.contains(p.vertices[i]), i == 0);
      EXPECT_EQ(t.contains(p.vertices[i]), i + 1 == p.vertices.size());
    }
  }
}

TEST(Menger, ForbiddenVerticesAreAvoided) {
  const GridSpec spec{3};
  const Graph g = grid_graph(spec);
  const CutResult r = menger(g, {1, 2}, {8, 9}, 2, {5});
  ASSERT_TRUE(r.found_paths());
  for (const Path& p : r.paths) EXPECT_EQ(std::count(p.vertices.begin(), p.vertices.end(), 5), 0);
  const CutResult blocked = menger(g, {1, 2}, {8, 9}, 2, {4, 5});
  ASSERT_FALSE(blocked.found_paths());
  EXPECT_EQ(blocked.cut->size(), 1u);
}

class MengerDuality : public ::testing::TestWithParam<int> {};

TEST_P(MengerDuality, PathCountMatchesBruteForceCut) {
  std::mt19937_64 rng(GetParam());
  const int n = 4 + testing::pick(rng, 6);
  const Graph g = random_multigraph(500 + GetParam(), n, testing::pick(rng, 2 * n));
  VertexSet s{1 + testing::pick(rng, n)}, t{1 + testing::pick(rng, n)};
  if (testing::pick(rng, 2) == 0) t.insert(1 + testing::pick(rng, n));
  oracles::EnumerationBudget budget;
  budget.maxOrder = 10;
  const int best = static_cast<int>(oracles::minimum_vertex_cut(g, s, t, budget).size());
  EXPECT_EQ(max_disjoint_paths(g, s, t), best);
  const CutResult r = menger(g, s, t, best + 1);
  ASSERT_FALSE(r.found_paths());
  EXPECT_EQ(static_cast<int>(r.cut->size()), best);
  EXPECT_TRUE(check_separation(g, *r.separation).ok());
  if (best == 0) return;
  const CutResult ok = menger(g, s, t, best);
  ASSERT_TRUE(ok.found_paths());
  EXPECT_EQ(static_cast<int>(ok.paths.size()), best);
  EXPECT_TRUE(disjoint_paths(ok.paths));
  for (const Path& p : ok.paths) {
    EXPECT_TRUE(is_walk(g, p));
    EXPECT_TRUE(s.contains(p.front()));
    EXPECT_TRUE(t.contains(p.back()));
  }
}

INSTANTIATE_TEST_SUITE_P(Seeds, MengerDuality, ::testing::Range(0, 40));

TEST(Blocking, ConnectedGridHasNone) {
  const auto p = testing::grid_problem(8, 2, 1, {1});
  EXPECT_FALSE(find_row_blocking_separation(p.host, p.roots, p.model, full_rows(p.model.pattern), 1));
}

TEST(Blocking, IsolatedRootGivesOrderZero) {
  auto p = testing::grid_problem(8, 2, 1, {});
  p.host.add_vertex(100);
  const auto b = find_row_blocking_separation(p.host, {100}, p.model, full_rows(p.model.pattern), 1);
  ASSERT_TRUE(b);
  EXPECT_EQ(b->kind, BlockingSeparation::Kind::strict);
  EXPECT_EQ(b->separation.order(), 0);
  EXPECT_TRUE(b->separation.a().vertices.contains(100));
}

TEST(Blocking, PendantRootIsStrictForTwo) {
  auto p = testing::grid_problem(8, 2, 2, {});
  p.host.add_vertex(100);
  p.host.add_edge(100, 1);
  const auto b = find_row_blocking_separation(p.host, {100, 1}, p.model, full_rows(p.model.pattern), 2);
  ASSERT_TRUE(b);
  EXPECT_EQ(b->kind, BlockingSeparation::Kind::strict);
  EXPECT_LT(b->separation.order(), 2);
}

TEST(Blocking, RootPairCutIsReducible) {
  // Two roots joined to each other and to row 1: cutting {z1, z2} is order 2 with B != G.
  auto p = testing::grid_problem(8, 2, 2, {});
  for (VertexId z : {100, 101}) p.host.add_vertex(z);
  p.host.add_edge(100, 101);
  p.host.add_edge(100, 1);
  p.host.add_edge(101, 5);
  const auto b = find_row_blocking_separation(p.host, {100, 101}, p.model, full_rows(p.model.pattern), 2);
  ASSERT_TRUE(b);
  EXPECT_EQ(b->kind, BlockingSeparation::Kind::reducible);
  EXPECT_EQ(b->separation.order(), 2);
  EXPECT_NE(b->separation.b(), whole(p.host));
  EXPECT_TRUE(check_separation(p.host, b->separation).ok());
}

// Compared with a brute-force sweep on tiny hosts.
class BlockingAgainstOracle : public ::testing::TestWithParam<int> {};

TEST_P(BlockingAgainstOracle, StrictAndReducibleAreFoundExactly) {
  const auto corpus = testing::hypothesis_corpus(GetParam() + 1);
  const ExtractionProblem& p = corpus.back();
  const int k = p.params.k;
  const auto rows = full_rows(p.model.pattern);
  const auto found = find_row_blocking_separation(p.host, p.roots, p.model, rows, k);

  bool strict = false, reducible = false;
  oracles::for_each_separation(p.host, k, {}, [&](const Separation& s) {
    bool holds_row = false;
    for (int r : rows) {
      VertexSet img = image_of_vertices(p.model, row(GridSpec{p.model.pattern.n}, r));
      holds_row = holds_row || std::includes(s.b().vertices.begin(), s.b().vertices.end(), img.begin(), img.end());
    }
    if (!holds_row || !std::includes(s.a().vertices.begin(), s.a().vertices.end(), p.roots.begin(), p.roots.end())) {
      return true;
    }
    if (s.order() < k) strict = true;
    if (s.order() == k && s.b() != whole(p.host)) reducible = true;
    return true;
  });

  if (strict) {
    ASSERT_TRUE(found);
    EXPECT_EQ(found->kind, BlockingSeparation::Kind::strict);
  } else if (reducible) {
    ASSERT_TRUE(found);
    EXPECT_EQ(found->kind, BlockingSeparation::Kind::reducible);
  } else {
    EXPECT_FALSE(found);
  }
  if (found) {
    const Separation& s = found->separation;
    EXPECT_TRUE(check_separation(p.host, s).ok());
    for (VertexId z : p.roots) EXPECT_TRUE(s.a().vertices.contains(z));
    for (VertexId v : image_of_vertices(p.model, row(GridSpec{p.model.pattern.n}, found->row))) {
      EXPECT_TRUE(s.b().vertices.contains(v));
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Corpus, BlockingAgainstOracle, ::testing::Range(0, 40));

TEST(GridTangle, NullSideStays) {
  const Graph g = grid_graph(GridSpec{3});
  const Separation s = Separation::make(g, {}, whole(g));
  EXPECT_EQ(grid_tangle_member(identity_model(3), s), s);
  EXPECT_EQ(grid_tangle_member(identity_model(3), s.flipped()), s);
}

TEST(GridTangle, CornerIsTheSmallSide) {
  const Graph g = grid_graph(GridSpec{3});
  const Separation corner = separation_from_cut(g, {1}, {2, 4});
  const Separation member = grid_tangle_member(identity_model(3), corner.flipped());
  EXPECT_EQ(member, corner);
  EXPECT_EQ(member.a().vertices, (VertexSet{1, 2, 4}));
}

TEST(GridTangle, OrderAtLeastSideIsRejected) {
  const Graph g = grid_graph(GridSpec{3});
  const Separation row2 = separation_from_cut(g, {1}, {4, 5, 6});
  EXPECT_THROW((void)grid_tangle_member(identity_model(3), row2), SeparationError);
}

TEST(TangleAxioms, EmptyTangleIsIncomplete) {
  const Graph g = testing::path_graph({1, 2});
  const auto seps = oracles::enumerate_separations(g, 0);
  EXPECT_TRUE(check_tangle_axioms(g, Tangle{1, {}}, seps).has("completeness"));
}

TEST(TangleAxioms, K2AtOrderOne) {
  const Graph g = testing::path_graph({1, 2});
  const auto seps = oracles::enumerate_separations(g, 0);
  const Tangle t{1, {Separation::make(g, {}, whole(g))}};
  EXPECT_TRUE(check_tangle_axioms(g, t, seps).ok());
  const Tangle wrong{1, {Separation::make(g, whole(g), {})}};
  EXPECT_TRUE(check_tangle_axioms(g, wrong, seps).has("proper-small-side"));
}

}  // namespace
}  // namespace rootgrid
