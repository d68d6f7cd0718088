#include <gtest/gtest.h>

#include "rootgrid/extraction.hpp"
#include "rootgrid/instances.hpp"
#include "rootgrid/io.hpp"
#include "support.hpp"

namespace rootgrid {
namespace {

std::string bytes(const ExtractionProblem& p, const ExtractionResult& r) { return io::dump(io::result_to_json(p.params, r)); }

bool has_kind(const ExtractionResult& r, const std::string& kind) {
  for (const auto& rec : r.trace) {
    if (kind_name(rec.step) == kind) return true;
  }
  return false;
}

void expect_measure_shrinks(const std::vector<ReductionRecord>& trace) {
  std::optional<std::size_t> prev;
  for (const auto& rec : trace) {
    if (!is_reduction(rec.step)) continue;
    EXPECT_LT(rec.measure_after, rec.measure_before) << kind_name(rec.step);
    if (prev) EXPECT_EQ(rec.measure_before, *prev);
    prev = rec.measure_after;
  }
}

ExtractionErrorKind error_kind(const ExtractionProblem& p) {
  try {
    (void)extract(p);
  } catch (const ExtractionError& e) {
    return e.kind();
  }
  ADD_FAILURE() << "extract succeeded";
  return ExtractionErrorKind::malformed_input;
}

TEST(Bound, MinimumGridSide) {
  EXPECT_EQ(minimum_grid_side(2, 1), 5);
  EXPECT_EQ(minimum_grid_side(2, 2), 13);
  EXPECT_EQ(minimum_grid_side(3, 1), 6);
}

TEST(Extract, IdentityGridWithOneRoot) {
  const auto p = testing::grid_problem(8, 2, 1, {1});
  const ExtractionResult r = extract(p);
  EXPECT_TRUE(verify_result(p, r).ok());
  EXPECT_EQ(r.subgrid.size(), 4u);
  for (const auto& [c, b] : r.witness.base.branches) EXPECT_FALSE(b.vertices.contains(1));
  EXPECT_TRUE(r.witness.augmented.branch({1, 1}).vertices.contains(1));
  EXPECT_TRUE(has_kind(r, "band-selected"));
  EXPECT_TRUE(has_kind(r, "menger-augment"));
}

TEST(Extract, IsolatedRootIsACertificate) {
  auto p = testing::grid_problem(8, 2, 1, {});
  p.host.add_vertex(100);
  p.roots = {100};
  try {
    (void)extract(p);
    FAIL() << "expected a hypothesis violation";
  } catch (const ExtractionError& e) {
    ASSERT_EQ(e.kind(), ExtractionErrorKind::hypothesis_violated);
    ASSERT_TRUE(e.certificate);
    EXPECT_EQ(e.certificate->separation.order(), 0);
    EXPECT_TRUE(e.certificate->separation.a().vertices.contains(100));
  }
}

TEST(Extract, TwoAttachedRoots) {
  for (std::uint64_t seed = 1; seed <= 3; ++seed) {
    for (int degree = 2; degree <= 4; ++degree) {
      InstanceRecipe rec{InstanceKind::grid_plus_roots, 13, 2, 2, seed, degree, 0};
      const ExtractionProblem p = generate_instance(rec).problem();
      const ExtractionResult r = extract(p);
      EXPECT_TRUE(verify_result(p, r).ok()) << seed << "/" << degree;
      for (int i = 1; i <= 2; ++i) {
        const VertexSet& b = r.witness.augmented.branch({i, 1}).vertices;
        EXPECT_TRUE(b.contains(170) || b.contains(171));
      }
      expect_measure_shrinks(r.trace);
    }
  }
}

TEST(Extract, RandomAttachmentPasses) {
  for (std::uint64_t seed = 1; seed <= 3; ++seed) {
    InstanceRecipe rec{InstanceKind::random_attachment, 13, 2, 2, seed, 3, 20};
    const ExtractionProblem p = generate_instance(rec).problem();
    const ExtractionResult r = extract(p);
    EXPECT_TRUE(verify_result(p, r).ok()) << seed;
    expect_measure_shrinks(r.trace);
  }
}

TEST(Extract, SubdividedGridContractsBranches) {
  for (bool external : {false, true}) {
    const ExtractionProblem p = testing::subdivided_grid_problem(5, 2, 1, external);
    ASSERT_TRUE(check_problem(p).ok());
    const ExtractionResult r = extract(p);
    EXPECT_TRUE(verify_result(p, r).ok()) << external;
    EXPECT_TRUE(has_kind(r, "branch-edge-contract")) << external;
    expect_measure_shrinks(r.trace);
  }
  const ExtractionProblem p = testing::subdivided_grid_problem(13, 2, 2, true);
  const ExtractionResult r = extract(p);
  EXPECT_TRUE(verify_result(p, r).ok());
  expect_measure_shrinks(r.trace);
}

TEST(Extract, TangleStatementWithDistantRoots) {
  const ExtractionResult r = extract_via_tangle_statement(grid_graph(GridSpec{13}), identity_model(13), {1, 13}, 2, 2);
  EXPECT_TRUE(verify_result(testing::grid_problem(13, 2, 2, {1, 13}), r).ok());
}

TEST(Extract, MalformedInputs) {
  EXPECT_EQ(error_kind(testing::grid_problem(4, 2, 1, {1})), ExtractionErrorKind::malformed_input);
  EXPECT_EQ(error_kind(testing::grid_problem(12, 2, 2, {1, 2})), ExtractionErrorKind::malformed_input);
  EXPECT_EQ(error_kind(testing::grid_problem(8, 2, 1, {1, 2})), ExtractionErrorKind::malformed_input);
  EXPECT_EQ(error_kind(testing::grid_problem(8, 2, 1, {99})), ExtractionErrorKind::malformed_input);
  EXPECT_EQ(error_kind(testing::grid_problem(8, 2, 3, {1, 2, 3})), ExtractionErrorKind::malformed_input);
  auto overlap = testing::grid_problem(8, 2, 1, {1});
  overlap.model.branches[{1, 2}].vertices.insert(3);
  EXPECT_EQ(error_kind(overlap), ExtractionErrorKind::malformed_input);
  EXPECT_FALSE(check_problem(overlap).ok());
}

TEST(Extract, DeterministicAndReplayable) {
  InstanceRecipe rec{InstanceKind::grid_plus_roots, 13, 2, 2, 5, 3, 0};
  const ExtractionProblem p = generate_instance(rec).problem();
  const ExtractionResult first = extract(p);
  const ExtractionResult second = extract(generate_instance(rec).problem());
  EXPECT_EQ(bytes(p, first), bytes(p, second));
  const ExtractionResult again = replay(p, io::trace_from_jsonl(io::trace_to_jsonl(first.trace)));
  EXPECT_EQ(bytes(p, first), bytes(p, again));
}

TEST(Extract, TamperedTraceIsRejected) {
  const auto p = testing::grid_problem(8, 2, 1, {1});
  ExtractionResult r = extract(p);
  ASSERT_FALSE(r.trace.empty());
  auto shortened = r.trace;
  shortened.pop_back();
  try {
    (void)replay(p, shortened);
    FAIL() << "truncated trace replayed";
  } catch (const ExtractionError& e) {
    EXPECT_EQ(e.kind(), ExtractionErrorKind::internal_invariant_broken);
  }
  auto skewed = r.trace;
  skewed.front().measure_before += 1;
  EXPECT_THROW((void)replay(p, skewed), ExtractionError);
}

TEST(Hypothesis, ConnectedHostHoldsForOneRoot) {
  EXPECT_TRUE(check_hypothesis(testing::grid_problem(8, 2, 1, {10})).holds);
}

TEST(Hypothesis, LeafBlockBehindACutVertex) {
  auto p = testing::grid_problem(8, 2, 2, {});
  for (VertexId z : {100, 101}) p.host.add_vertex(z);
  p.host.add_edge(100, 101);
  p.host.add_vertex(102);
  p.host.add_edge(100, 102);
  p.host.add_edge(101, 102);
  p.host.add_edge(102, 20);
  p.roots = {100, 101};
  const HypothesisCertificate cert = check_hypothesis(p);
  ASSERT_FALSE(cert.holds);
  ASSERT_TRUE(cert.violation);
  EXPECT_EQ(cert.violation->separation.order(), 1);
  EXPECT_TRUE(cert.violation->separation.a().vertices.contains(100));
  EXPECT_TRUE(cert.violation->separation.a().vertices.contains(101));
}

TEST(RowBound, ColumnsCountedOnTheIdentityGrid) {
  const auto p = testing::grid_problem(5, 2, 1, {1});
  const ExtractionResult r = extract(p);
  ASSERT_TRUE(verify_result(p, r).ok());
  const Graph& g = p.host;
  // The band avoids row 1, so H sits in rows 3..4; cutting at row 4 puts both
  // output rows in V(A) while every column meets the cut.
  VertexSet row4;
  for (int j = 1; j <= 5; ++j) row4.insert(grid_vertex_id(GridSpec{5}, {4, j}));
  const Separation s = separation_from_cut(g, {1}, row4);
  const auto bound = row_order_bound(p.model, r, s);
  ASSERT_TRUE(bound);
  EXPECT_GE(*bound, 2);
  EXPECT_LE(*bound, s.order());
  const Separation trivial = Separation::make(g, {}, whole(g));
  EXPECT_FALSE(row_order_bound(p.model, r, trivial));
}

}  // namespace
}  // namespace rootgrid
