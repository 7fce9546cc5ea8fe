#include "fcnlab/generators.hpp"

#include <gtest/gtest.h>

using namespace fcnlab;

TEST(Generators, SmallFamilies) {
  const Graph c = cycle(5);
  EXPECT_EQ(c.order(), 5u);
  EXPECT_EQ(c.size(), 5u);
  EXPECT_EQ(c.min_degree(), 2u);
  EXPECT_EQ(path(4).size(), 3u);
  EXPECT_EQ(complete(6).size(), 15u);
  EXPECT_EQ(path(1).order(), 1u);
  EXPECT_THROW(cycle(2), std::invalid_argument);
  EXPECT_THROW(path(0), std::invalid_argument);
  EXPECT_EQ(cycle(12).label(3), "03");
}

TEST(Generators, Hypercube) {
  const Graph q = hypercube(3);
  EXPECT_EQ(q.order(), 8u);
  EXPECT_EQ(q.size(), 12u);
  EXPECT_TRUE(q.adjacent(*q.find("000"), *q.find("100")));
  EXPECT_FALSE(q.adjacent(*q.find("000"), *q.find("110")));
  EXPECT_EQ(hypercube(0).order(), 1u);
}

TEST(Fcn, OrdersAndSizes) {
  const std::size_t orders[] = {4, 16, 64, 256};
  const std::size_t sizes[] = {4, 20, 84, 340};
  for (std::size_t l = 0; l <= 3; ++l) {
    const Graph g = fcn(l);
    EXPECT_EQ(g.order(), orders[l]) << "level " << l;
    EXPECT_EQ(g.size(), sizes[l]) << "level " << l;
    EXPECT_TRUE(is_connected(g));
    for (const auto& s : g.labels()) EXPECT_EQ(s.size(), 2 * l + 2);
  }
  EXPECT_THROW(fcn(8), std::invalid_argument);
}

TEST(Fcn, Level0IsFourCycle) {
  const Graph g = fcn(0);
  EXPECT_TRUE(g.adjacent(*g.find("00"), *g.find("01")));
  EXPECT_TRUE(g.adjacent(*g.find("01"), *g.find("11")));
  EXPECT_TRUE(g.adjacent(*g.find("11"), *g.find("10")));
  EXPECT_TRUE(g.adjacent(*g.find("10"), *g.find("00")));
  EXPECT_FALSE(g.adjacent(*g.find("00"), *g.find("11")));
}

TEST(Fcn, RootCycleJoinsCopies) {
  EXPECT_EQ(fcn_root_suffix(1), "10");
  EXPECT_EQ(fcn_root_suffix(3), "100101");
  const Graph g = fcn(2);
  const std::string r = fcn_root_suffix(2);
  const char* order[] = {"00", "10", "11", "01"};
  for (int i = 0; i < 4; ++i) {
    const auto a = g.find(std::string(order[i]) + r);
    const auto b = g.find(std::string(order[(i + 1) % 4]) + r);
    ASSERT_TRUE(a && b);
    EXPECT_TRUE(g.adjacent(*a, *b));
  }
  // Copies are otherwise disjoint: every edge either stays inside a prefix
  // or joins two root vertices.
  for (auto [u, v] : g.edges()) {
    const std::string a = g.label(u), b = g.label(v);
    if (a.substr(0, 2) != b.substr(0, 2)) {
      EXPECT_EQ(a.substr(2), r);
      EXPECT_EQ(b.substr(2), r);
    }
  }
}

TEST(RootedProduct, StructureAndLabels) {
  const Graph p = rooted_product(path(2), complete(3), Vertex{0});
  EXPECT_EQ(p.order(), 6u);
  EXPECT_EQ(p.size(), 7u);
  EXPECT_TRUE(p.adjacent(*p.find("0:0"), *p.find("1:0")));
  EXPECT_FALSE(p.adjacent(*p.find("0:1"), *p.find("1:1")));
  EXPECT_EQ(rooted_product(path(2), complete(3), std::string("2")).size(), 7u);
  EXPECT_THROW(rooted_product(path(2), complete(3), std::string("9")), std::invalid_argument);
  EXPECT_THROW(rooted_product(path(2), complete(3), Vertex{7}), std::invalid_argument);
}

TEST(RootedProduct, TrivialFactors) {
  // Omega = K1 gives gamma back; gamma = K1 gives omega back.
  const Graph a = rooted_product(cycle(5), complete(1), Vertex{0});
  EXPECT_EQ(a.order(), 5u);
  EXPECT_EQ(a.size(), 5u);
  const Graph b = rooted_product(complete(1), cycle(5), Vertex{2});
  EXPECT_EQ(b.order(), 5u);
  EXPECT_EQ(b.size(), 5u);
}

TEST(RootedProduct, RebuildsFcn) {
  for (std::size_t l = 1; l <= 2; ++l) {
    const Graph prev = fcn(l - 1);
    const Graph prod =
        concatenate_product_labels(rooted_product(fcn(0), prev, fcn_root_suffix(l)));
    const Graph target = fcn(l);
    ASSERT_EQ(prod.order(), target.order());
    EXPECT_EQ(prod.labels(), target.labels());
    EXPECT_EQ(prod.edges(), target.edges()) << "level " << l;
    VertexList identity(target.order());
    for (Vertex v = 0; v < identity.size(); ++v) identity[v] = v;
    EXPECT_TRUE(is_isomorphism(prod, target, identity));
  }
}
