#include "fcnlab/generators.hpp"
#include "fcnlab/graph.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <array>

using namespace fcnlab;

namespace {

Graph c4() { return fcn(0); }

}  // namespace

TEST(Graph, BuildSortsLabelsAndMergesDuplicateEdges) {
  const std::vector<std::string> labels{"b", "a", "c"};
  const std::vector<Edge> edges{{0, 1}, {1, 0}, {1, 2}};
  const Graph g = build_graph(3, edges, labels, "t");
  EXPECT_EQ(g.order(), 3u);
  EXPECT_EQ(g.size(), 2u);
  EXPECT_EQ(g.labels(), (std::vector<std::string>{"a", "b", "c"}));
  // b-a and a-c after relabelling: a is index 0.
  EXPECT_TRUE(g.adjacent(0, 1));
  EXPECT_TRUE(g.adjacent(0, 2));
  EXPECT_FALSE(g.adjacent(1, 2));
  EXPECT_EQ(g.degree(0), 2u);
  EXPECT_EQ(g.max_degree(), 2u);
  EXPECT_EQ(g.min_degree(), 1u);
}

TEST(Graph, RejectsSelfLoopOutOfRangeAndDuplicateLabels) {
  const std::vector<Edge> loop{{1, 1}};
  EXPECT_THROW(build_graph(2, loop), GraphError);
  const std::vector<Edge> far{{0, 5}};
  EXPECT_THROW(build_graph(2, far), GraphError);
  const std::vector<std::string> dup{"x", "x"};
  EXPECT_THROW(build_graph(2, {}, dup), GraphError);
  const std::vector<std::string> short_labels{"x"};
  EXPECT_THROW(build_graph(2, {}, short_labels), GraphError);
}

TEST(Graph, LabelledConvenienceBuilder) {
  const std::vector<std::string> labels{"p", "q", "r"};
  const std::vector<std::pair<std::string, std::string>> edges{{"p", "q"}, {"q", "r"}};
  const Graph g = build_labeled_graph(labels, edges, "P3");
  EXPECT_EQ(g.size(), 2u);
  EXPECT_EQ(g.find("q"), Vertex{1});
  EXPECT_FALSE(g.find("z").has_value());
  const std::vector<std::pair<std::string, std::string>> bad{{"p", "zz"}};
  EXPECT_THROW(build_labeled_graph(labels, bad), GraphError);
}

TEST(Graph, UnlabelledGraphUsesIndexAsLabel) {
  const std::vector<Edge> edges{{0, 1}};
  const Graph g = build_graph(3, edges);
  EXPECT_FALSE(g.has_labels());
  EXPECT_EQ(g.label(2), "2");
  EXPECT_TRUE(g.has_isolated_vertex());
}

TEST(Graph, EdgesAreSortedPairs) {
  const Graph g = c4();
  const auto e = g.edges();
  ASSERT_EQ(e.size(), 4u);
  EXPECT_TRUE(std::is_sorted(e.begin(), e.end()));
  for (auto [u, v] : e) EXPECT_LT(u, v);
}

TEST(Graph, ClosedNeighbourhoodContainsVertex) {
  const Graph g = c4();
  for (Vertex v = 0; v < g.order(); ++v) {
    const Bitset c = g.closed_neighbor_set(v);
    EXPECT_TRUE(c.test(v));
    EXPECT_EQ(c.count(), 3u);
  }
}

TEST(Distances, PathAndDisconnected) {
  const Graph p = path(5);
  const DistanceMatrix d = all_pairs_distances(p);
  EXPECT_EQ(d(0, 4), 4);
  EXPECT_EQ(d(2, 2), 0);
  EXPECT_EQ(d.diameter(), 4);
  EXPECT_TRUE(d.all_reachable());

  const std::vector<Edge> edges{{0, 1}};
  const Graph g = build_graph(3, edges);
  const DistanceMatrix dg = all_pairs_distances(g);
  EXPECT_FALSE(dg.reachable(0, 2));
  EXPECT_FALSE(dg.all_reachable());
  EXPECT_EQ(dg.diameter(), 1);
}

TEST(Twins, Fcn1HasFourClassesOfTwo) {
  const TwinPartition t = twin_partition(fcn(1));
  ASSERT_EQ(t.classes.size(), 4u);
  for (const auto& c : t.classes) {
    EXPECT_EQ(c.members.size(), 2u);
    EXPECT_EQ(c.kind, TwinKind::Open);
  }
  EXPECT_EQ(t.twin_excess(), 4u);
}

TEST(Twins, CompleteGraphIsOneClosedClass) {
  const TwinPartition t = twin_partition(complete(5));
  ASSERT_EQ(t.classes.size(), 1u);
  EXPECT_EQ(t.classes[0].kind, TwinKind::Closed);
  EXPECT_EQ(t.twin_excess(), 4u);
}

TEST(Twins, PathHasNone) { EXPECT_EQ(twin_partition(path(5)).twin_excess(), 0u); }

TEST(Connectivity, ComponentsAndInducedSubgraphs) {
  const std::vector<Edge> edges{{0, 1}, {2, 3}};
  const Graph g = build_graph(5, edges);
  EXPECT_FALSE(is_connected(g));
  const auto comps = connected_components(g);
  ASSERT_EQ(comps.size(), 3u);
  EXPECT_EQ(comps[0], (VertexList{0, 1}));
  EXPECT_EQ(comps[2], (VertexList{4}));

  const Graph c = c4();
  const std::array<Vertex, 3> keep{0, 1, 2};
  const Graph sub = induced_subgraph(c, keep);
  EXPECT_EQ(sub.order(), 3u);
  EXPECT_EQ(sub.size(), 2u);
  EXPECT_TRUE(is_connected(sub));
  const std::array<Vertex, 1> gone{*c.find("00")};
  const Graph rest = remove_vertices(c, gone);
  EXPECT_EQ(rest.order(), 3u);
  EXPECT_FALSE(rest.find("00").has_value());
  EXPECT_TRUE(is_connected(rest));
  EXPECT_TRUE(is_connected(Graph{}));
}

TEST(Isomorphism, MappingCheck) {
  const Graph a = cycle(4);
  const Graph b = c4();
  // cycle order 0-1-2-3; FCN(0) cycle 00-01-11-10.
  const VertexList map{*b.find("00"), *b.find("01"), *b.find("11"), *b.find("10")};
  EXPECT_TRUE(is_isomorphism(a, b, map));
  const VertexList bad{*b.find("00"), *b.find("11"), *b.find("01"), *b.find("10")};
  EXPECT_FALSE(is_isomorphism(a, b, bad));
}

TEST(Labels, ResolveRoundTrip) {
  const Graph g = fcn(1);
  const std::vector<std::string> names{"1101", "0001"};
  const VertexList vs = resolve_labels(g, names);
  EXPECT_EQ(vertex_labels(g, vs), names);
  const std::vector<std::string> missing{"9999"};
  EXPECT_THROW(resolve_labels(g, missing), GraphError);
  const Bitset b = to_bitset(g, vs);
  EXPECT_EQ(b.count(), 2u);
  auto back = to_list(b);
  auto sorted = vs;
  std::sort(sorted.begin(), sorted.end());
  EXPECT_EQ(back, sorted);
}
