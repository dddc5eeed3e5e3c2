#include <gtest/gtest.h>

#include "edgepoly/edgepoly.hpp"
#include "support/graph_enum.hpp"

using namespace edgepoly;

namespace {

VertexSet set_of(std::size_t n, std::initializer_list<Vertex> labels_1based) {
  VertexSet s(n);
  for (Vertex v : labels_1based) s.insert(v - 1);
  return s;
}

std::set<std::vector<std::size_t>> facet_sets(const FacetList& list) {
  std::set<std::vector<std::size_t>> out;
  for (const auto& f : list.facets) out.insert(f.facet_vertices);
  return out;
}

}  // namespace

TEST(VertexFacet, Examples) {
  EXPECT_TRUE(vertex_facet_test(gen::complete(4), 0));
  EXPECT_TRUE(vertex_facet_test(gen::complete_bipartite(3, 3), 0));
  const Graph paw(4, {{0, 1}, {1, 2}, {0, 2}, {0, 3}});
  EXPECT_FALSE(vertex_facet_test(paw, 0));
  EXPECT_THROW(vertex_facet_test(paw, 4), ValidationError);
  EXPECT_THROW(vertex_facet_test(disjoint_union(gen::cycle(3), gen::cycle(3)), 0), DomainError);
}

TEST(SetFacet, Examples) {
  EXPECT_TRUE(set_facet_test(gen::complete(4), set_of(4, {4})));
  EXPECT_FALSE(set_facet_test(gen::complete_bipartite(3, 3), set_of(6, {1, 2})));
  EXPECT_TRUE(set_facet_test(gen::windmill(2), set_of(7, {3, 6})));
  EXPECT_FALSE(set_facet_test(gen::complete(4), set_of(4, {1, 2})));
  EXPECT_THROW(set_facet_test(gen::complete(4), VertexSet(4)), ValidationError);
}

TEST(Enumerate, Examples) {
  EXPECT_EQ(enumerate_facets(gen::complete(4)).facets.size(), 8u);
  EXPECT_EQ(enumerate_facets(gen::complete(6)).facets.size(), 12u);
  const auto k33 = enumerate_facets(gen::complete_bipartite(3, 3));
  EXPECT_EQ(k33.facets.size(), 6u);
  for (const auto& f : k33.facets) EXPECT_EQ(f.kind, FacetKind::coordinate);
  EXPECT_EQ(enumerate_facets(gen::cycle(7)).facets.size(), 7u);
}

TEST(Enumerate, CompleteGraphsHaveTwoNFacets) {
  for (std::size_t n = 4; n <= 8; ++n) EXPECT_EQ(enumerate_facets(gen::complete(n)).facets.size(), 2 * n);
}

TEST(Enumerate, Preconditions) {
  EXPECT_THROW(enumerate_facets(Graph(3, {{0, 1}})), DomainError);
  EXPECT_THROW(enumerate_facets(disjoint_union(gen::cycle(3), gen::cycle(3))), DomainError);
  EXPECT_THROW(enumerate_facets(gen::path(2)), DomainError);
  EXPECT_THROW(enumerate_facets(gen::path(3)), DomainError);  // a segment
  EXPECT_THROW(enumerate_facets(gen::cycle(30)), ResourceError);
  EXPECT_NO_THROW(enumerate_facets(gen::cycle(30), FacetOptions{30}));
}

TEST(Enumerate, MergesCertificatesOfTheSameFacet) {
  // Odd cycles: every vertex is regular and the coordinate facets already
  // cover all faces; any set certificate must be merged or absent.
  const auto list = enumerate_facets(gen::cycle(5));
  EXPECT_EQ(list.facets.size(), 5u);
  for (const auto& m : list.merges) EXPECT_LT(m.kept, list.facets.size());
}

TEST(Bounds, Examples) {
  const auto w2 = facet_count_bounds_check(gen::windmill(2));
  EXPECT_EQ(w2.dim, 6u);
  EXPECT_TRUE(w2.windmill_lower);
  EXPECT_GT(w2.count, 16u);

  const auto k4 = facet_count_bounds_check(gen::complete(4));
  EXPECT_EQ(k4.count, 8u);
  EXPECT_TRUE(k4.upper_ok);

  const auto c7 = facet_count_bounds_check(gen::cycle(7));
  EXPECT_EQ(c7.count, 7u);
  EXPECT_TRUE(c7.upper_ok);
}

TEST(Windmill, CountsAgainstClaimedFormula) {
  const auto rows = windmill_experiment(4, 2);
  ASSERT_EQ(rows.size(), 4u);
  for (const auto& r : rows) {
    const std::uint64_t four_k = std::uint64_t{1} << (2 * r.k);
    EXPECT_EQ(r.facets, four_k + 3 * r.k + 1) << "k=" << r.k;
    EXPECT_EQ(r.published, four_k + 3 * r.k - 1);
    EXPECT_TRUE(r.lower_ok());
    EXPECT_TRUE(r.upper_ok());
  }
  EXPECT_EQ(rows[0].facets, 8u);
  EXPECT_TRUE(*rows[0].oracle_match);
  EXPECT_TRUE(*rows[1].oracle_match);
}

// Every connected class on <= 7 vertices with <= 12 edges: same facets as
// the brute-force hull, and every certificate is a valid facet inequality.
TEST(Enumerate, AgreesWithBruteForceUpToSevenVertices) {
  std::size_t compared = 0;
  for (int n = 3; n <= 7; ++n)
    for (const Graph& g : testsupport::nonisomorphic_graphs(n)) {
      if (!is_connected(g) || g.edge_count() > 12 || dimension(g) < 2) continue;
      const auto list = enumerate_facets(g);
      const auto pts = oracle::polytope_vertices(g);
      ASSERT_EQ(facet_sets(list), oracle::tight_sets(oracle::brute_facets(pts))) << "n=" << n << " e=" << g.edge_count();
      const std::size_t dim = dimension(g);
      for (const auto& f : list.facets) {
        std::vector<std::size_t> tight;
        for (std::size_t i = 0; i < g.edge_count(); ++i) {
          const Edge& e = g.edge(i);
          const int value = f.inequality[e.u] + f.inequality[e.v];
          ASSERT_GE(value, 0);
          if (value == 0) tight.push_back(i);
        }
        ASSERT_EQ(tight, f.facet_vertices);
        ASSERT_EQ(oracle::affine_dim(pts, tight), dim - 1);
      }
      ++compared;
    }
  EXPECT_EQ(compared, 750u);
}
