#include <gtest/gtest.h>

#include "edgepoly/edgepoly.hpp"
#include "support/brute.hpp"
#include "support/graph_enum.hpp"

using namespace edgepoly;
namespace brute = testsupport::brute;

namespace {

VertexSet set_of(std::size_t n, std::initializer_list<Vertex> labels_1based) {
  VertexSet s(n);
  for (Vertex v : labels_1based) s.insert(v - 1);
  return s;
}

std::vector<Vertex> sorted_1based(const VertexSet& s) {
  std::vector<Vertex> out;
  s.for_each([&](Vertex v) { out.push_back(v + 1); });
  return out;
}

}  // namespace

TEST(Graph, CompleteGraphFromPairs) {
  const Graph g(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  EXPECT_EQ(g.vertex_count(), 4u);
  EXPECT_EQ(g.edge_count(), 6u);
  EXPECT_EQ(g, gen::complete(4));
}

TEST(Graph, DuplicatesCollapse) {
  const Graph g(3, {{0, 1}, {1, 0}, {1, 2}});
  EXPECT_EQ(g.edge_count(), 2u);
}

TEST(Graph, RejectsLoopsAndBadLabels) {
  EXPECT_THROW(Graph(2, {{0, 0}}), ValidationError);
  EXPECT_THROW(Graph(2, {{0, 2}}), ValidationError);
  EXPECT_THROW(Graph(0, {}), ValidationError);
}

TEST(Graph, EdgeIndexFindsEdgesInEitherOrder) {
  const Graph g = gen::cycle(5);
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    EXPECT_EQ(g.edge_index(g.edge(i).u, g.edge(i).v), i);
    EXPECT_EQ(g.edge_index(g.edge(i).v, g.edge(i).u), i);
  }
  EXPECT_FALSE(g.edge_index(0, 2));
}

TEST(VertexSetOps, LargeUniverse) {
  VertexSet a(150), b(150);
  a.insert(3);
  a.insert(140);
  b.insert(140);
  b.insert(70);
  EXPECT_EQ((a & b).to_vector(), std::vector<Vertex>{140});
  EXPECT_EQ((a | b).size(), 3u);
  EXPECT_EQ((a - b).first(), 3);
  EXPECT_EQ(a.complement().size(), 148u);
  a.erase_below(100);
  EXPECT_EQ(a.to_vector(), std::vector<Vertex>{140});
}

TEST(Decompose, Examples) {
  auto k4 = decompose(gen::complete(4));
  EXPECT_EQ(k4.count(), 1u);
  EXPECT_EQ(k4.bipartite, std::vector<bool>{false});
  EXPECT_EQ(k4.c0, 0u);

  auto c6 = decompose(gen::cycle(6));
  EXPECT_EQ(c6.count(), 1u);
  EXPECT_EQ(c6.bipartite, std::vector<bool>{true});
  EXPECT_EQ(c6.c0, 1u);

  auto u = decompose(disjoint_union(gen::cycle(3), gen::cycle(4)));
  EXPECT_EQ(u.count(), 2u);
  EXPECT_EQ(u.c0, 1u);
}

TEST(Decompose, AgreesWithExhaustiveColoring) {
  for (int n = 1; n <= 6; ++n)
    for (const Graph& g : testsupport::nonisomorphic_graphs(n)) {
      const auto dec = decompose(g);
      std::size_t total = 0;
      for (std::size_t c = 0; c < dec.count(); ++c) {
        const auto& vs = dec.components[c];
        total += vs.size();
        EXPECT_EQ(dec.bipartite[c], brute::two_colorable(g, std::vector<int>(vs.begin(), vs.end())));
      }
      EXPECT_EQ(total, g.vertex_count());
      EXPECT_EQ(dec.count(), brute::components(g, (1u << n) - 1).size());
    }
}

TEST(SubgraphCounts, FourCycles) {
  EXPECT_EQ(count_c4(gen::complete(4)), 3u);
  EXPECT_EQ(count_c4(gen::complete_bipartite(3, 3)), 9u);
  EXPECT_EQ(count_c4(gen::cycle(6)), 0u);
}

TEST(SubgraphCounts, Cliques) {
  EXPECT_EQ(count_k4(gen::complete(4)), 1u);
  EXPECT_EQ(count_k4(gen::complete(5)), 5u);
  EXPECT_EQ(count_k4(gen::petersen()), 0u);
}

TEST(SubgraphCounts, AgreeWithFourSubsetsUpToSevenVertices) {
  for (int n = 4; n <= 7; ++n)
    for (const Graph& g : testsupport::nonisomorphic_graphs(n)) {
      const auto c4 = count_c4(g);
      const auto k4 = count_k4(g);
      ASSERT_EQ(c4, brute::c4(g));
      ASSERT_EQ(k4, brute::k4(g));
      ASSERT_GE(c4, 3 * k4);
    }
}

TEST(NeighborSet, Examples) {
  const Graph w2 = gen::windmill(2);
  EXPECT_EQ(sorted_1based(neighbor_set(w2, set_of(7, {7}))), (std::vector<Vertex>{1, 2, 3, 4, 5, 6}));
  EXPECT_EQ(sorted_1based(neighbor_set(gen::complete(4), set_of(4, {1, 2}))), (std::vector<Vertex>{3, 4}));
  EXPECT_EQ(sorted_1based(neighbor_set(gen::cycle(6), set_of(6, {1, 4}))), (std::vector<Vertex>{2, 3, 5, 6}));
  EXPECT_THROW(neighbor_set(w2, VertexSet(7)), ValidationError);
}

TEST(Independent, Examples) {
  EXPECT_TRUE(is_independent(gen::cycle(6), set_of(6, {1, 3, 5})));
  EXPECT_FALSE(is_independent(gen::complete(4), set_of(4, {1, 2})));
  EXPECT_TRUE(is_independent(gen::windmill(2), set_of(7, {3, 6})));
  EXPECT_THROW(is_independent(gen::cycle(6), VertexSet(6)), ValidationError);
}

TEST(EdgesBetween, Examples) {
  const Graph k33 = gen::complete_bipartite(3, 3);
  EXPECT_EQ(edges_between(k33, set_of(6, {1, 2, 3}), set_of(6, {1, 2, 3})), 0u);
  // Ordered pairs (s,t) with st an edge: (1,2) and (2,3).
  EXPECT_EQ(edges_between(gen::cycle(5), set_of(5, {1, 2}), set_of(5, {2, 3})), 2u);
  for (const Graph& g : testsupport::nonisomorphic_graphs(5))
    EXPECT_EQ(edges_between(g, g.all_vertices(), g.all_vertices()), 2 * g.edge_count());
}

TEST(Generators, Windmills) {
  EXPECT_EQ(gen::windmill(1), gen::complete(4));
  const Graph w2 = gen::windmill(2);
  EXPECT_EQ(w2.vertex_count(), 7u);
  EXPECT_EQ(w2.edge_count(), 12u);
  for (Vertex j = 0; j < 6; ++j) EXPECT_TRUE(w2.adjacent(j, 6));
}

TEST(Generators, NamedGraphs) {
  const Graph p = gen::petersen();
  EXPECT_EQ(p.edge_count(), 15u);
  for (Vertex v = 0; v < 10; ++v) EXPECT_EQ(p.degree(v), 3u);
  const Graph h = gen::heawood();
  EXPECT_EQ(h.edge_count(), 21u);
  EXPECT_TRUE(is_bipartite(h));
  for (Vertex v = 0; v < 14; ++v) EXPECT_EQ(h.degree(v), 3u);
  EXPECT_EQ(count_c4(p), 0u);
  EXPECT_EQ(count_c4(h), 0u);
}

TEST(Generators, RandomGraphs) {
  EXPECT_EQ(gen::gnp(10, 0.0, 7).edge_count(), 0u);
  EXPECT_EQ(gen::gnp(10, 1.0, 7), gen::complete(10));
  EXPECT_EQ(gen::gnp(30, 0.3, 99), gen::gnp(30, 0.3, 99));
  EXPECT_NE(gen::gnp(30, 0.3, 99), gen::gnp(30, 0.3, 100));
}

TEST(Rng, CounterBasedAndSplittable) {
  CounterRng a(5), b(5);
  for (int i = 0; i < 100; ++i) EXPECT_EQ(a.next(), b.next());
  EXPECT_NE(CounterRng(5).split(0).key(), CounterRng(5).split(1).key());
  EXPECT_EQ(CounterRng(5).split(3).key(), CounterRng(5).split(3).key());
  CounterRng u(1);
  for (int i = 0; i < 1000; ++i) {
    const double x = u.uniform();
    ASSERT_GE(x, 0.0);
    ASSERT_LT(x, 1.0);
  }
}

TEST(Enumeration, ClassCounts) {
  EXPECT_EQ(testsupport::nonisomorphic_graphs(4).size(), 11u);
  EXPECT_EQ(testsupport::nonisomorphic_graphs(5).size(), 34u);
  EXPECT_EQ(testsupport::nonisomorphic_graphs(6).size(), 156u);
  EXPECT_EQ(testsupport::nonisomorphic_graphs(7).size(), 1044u);
}

TEST(InducedSubgraph, RelabelsInOrder) {
  const Graph c6 = gen::cycle(6);
  auto [h, labels] = induced_subgraph(c6, set_of(6, {1, 2, 3, 5}));
  EXPECT_EQ(labels, (std::vector<Vertex>{0, 1, 2, 4}));
  EXPECT_EQ(h.edge_count(), 2u);
  EXPECT_THROW(drop_isolated(Graph(3, {})), DomainError);
  EXPECT_EQ(drop_isolated(Graph(4, {{0, 3}})).vertex_count(), 2u);
}
