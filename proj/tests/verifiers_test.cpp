#include "fcnlab/generators.hpp"
#include "fcnlab/verifiers.hpp"

#include <gtest/gtest.h>

using namespace fcnlab;

namespace {

VertexList by_label(const Graph& g, std::vector<std::string> names) { return resolve_labels(g, names); }

}  // namespace

TEST(Verifiers, DominationOnC4) {
  const Graph g = fcn(0);
  EXPECT_TRUE(is_dominating(g, by_label(g, {"00", "11"})));
  EXPECT_TRUE(is_dominating(g, by_label(g, {"00", "01"})));
  EXPECT_FALSE(is_dominating(g, by_label(g, {"00"})));
  EXPECT_TRUE(is_independent(g, by_label(g, {"00", "11"})));
  EXPECT_FALSE(is_independent(g, by_label(g, {"00", "01"})));
  // Total domination needs every vertex, members included, to have a neighbour in D.
  EXPECT_TRUE(is_total_dominating(g, by_label(g, {"00", "01"})));
  EXPECT_FALSE(is_total_dominating(g, by_label(g, {"00", "11"})));
  EXPECT_TRUE(is_connected_dominating(g, by_label(g, {"00", "01"})));
  EXPECT_FALSE(is_connected_dominating(g, by_label(g, {"00", "11"})));
}

TEST(Verifiers, DoubleAndTwoDomination) {
  const Graph g = fcn(0);
  // Double: |N[v] ∩ D| >= 2 for every v.
  EXPECT_FALSE(is_double_dominating(g, by_label(g, {"00", "11"})));
  EXPECT_TRUE(is_double_dominating(g, by_label(g, {"00", "01", "11"})));
  // 2-domination constrains only vertices outside D.
  EXPECT_TRUE(is_2_dominating(g, by_label(g, {"00", "11"})));
  EXPECT_FALSE(is_2_dominating(g, by_label(g, {"00", "01"})));
  const Graph p = path(3);
  EXPECT_TRUE(is_2_dominating(p, VertexList{0, 2}));
  EXPECT_FALSE(is_double_dominating(p, VertexList{0, 2}));
  EXPECT_TRUE(is_double_dominating(p, VertexList{0, 1, 2}));
}

TEST(Verifiers, ResolvingOnPathAndCycle) {
  const Graph p = path(6);
  EXPECT_TRUE(is_resolving(p, VertexList{0}));
  EXPECT_FALSE(is_resolving(p, VertexList{2}));
  const Graph c = cycle(6);
  EXPECT_FALSE(is_resolving(c, VertexList{0}));
  EXPECT_TRUE(is_resolving(c, VertexList{0, 1}));
  EXPECT_FALSE(is_resolving(c, VertexList{0, 3}));
  const auto cv = codes(p, VertexList{0});
  ASSERT_EQ(cv.size(), 6u);
  EXPECT_EQ(cv[4], CodeVector{4});
}

TEST(Verifiers, ResolvingNeedsAllButOneOfEachTwinClass) {
  const Graph k = complete(4);
  EXPECT_FALSE(is_resolving(k, VertexList{0, 1}));
  EXPECT_TRUE(is_resolving(k, VertexList{0, 1, 2}));
}

TEST(Verifiers, QuasiDoublePair) {
  const Graph g = fcn(0);
  // U = {00}, V = {01, 11}: U ∪ V 2-dominates (10 sees 00 and 11) and V
  // double dominates C4 - 00, a path 01-11-10.
  const VertexList u = by_label(g, {"00"});
  const VertexList v = by_label(g, {"01", "11"});
  EXPECT_FALSE(is_quasi_double_dominating_pair(g, u, v));
  const VertexList v2 = by_label(g, {"01", "11", "10"});
  EXPECT_TRUE(is_quasi_double_dominating_pair(g, {}, by_label(g, {"00", "01", "11", "10"})));
  EXPECT_TRUE(is_quasi_double_dominating_pair(g, u, v2));
  EXPECT_FALSE(is_quasi_double_dominating_pair(g, u, by_label(g, {"00", "11"})));  // not disjoint
}

TEST(Verifiers, CheckDispatchMatchesPredicates) {
  const Graph g = fcn(1);
  const VertexList d = by_label(g, {"0010", "0110", "1010", "1110", "0001", "1101"});
  EXPECT_EQ(check(ParameterKind::DOM, g, d), is_dominating(g, d));
  EXPECT_EQ(check(ParameterKind::TDOM, g, d), is_total_dominating(g, d));
  EXPECT_EQ(check(ParameterKind::RDOM, g, d), is_dominating(g, d) && is_resolving(g, d));
  EXPECT_EQ(check(ParameterKind::RIDOM, g, d),
            is_dominating(g, d) && is_independent(g, d) && is_resolving(g, d));
}

TEST(Verifiers, FindViolationNamesAVertex) {
  const Graph g = fcn(0);
  const auto msg = find_violation(ParameterKind::DOM, g, by_label(g, {"00"}));
  ASSERT_TRUE(msg.has_value());
  EXPECT_NE(msg->find("11"), std::string::npos);
  EXPECT_FALSE(find_violation(ParameterKind::DOM, g, by_label(g, {"00", "11"})).has_value());
  const auto res = find_violation(ParameterKind::DIM, cycle(6), VertexList{0});
  ASSERT_TRUE(res.has_value());
}

TEST(Certificates, JsonRoundTripAndVerification) {
  const Graph g = fcn(1);
  const VertexList d = by_label(g, {"0010", "0110", "1010", "1110", "0001", "1101"});
  const Certificate cert = make_certificate(ParameterKind::IDOM, g, d);
  const std::string text = certificate_to_json(cert, g);
  const Certificate back = parse_certificate(text, g);
  EXPECT_EQ(back.vertices, cert.vertices);
  EXPECT_EQ(back.kind, ParameterKind::IDOM);
  EXPECT_EQ(certificate_to_json(back, g), text);
  const auto ok = verify_certificate(back, g);
  EXPECT_EQ(ok.ok, is_dominating(g, d) && is_independent(g, d)) << ok.message;
}

TEST(Certificates, DigestMismatchAndBadLabelsAreRejected) {
  const Graph g = fcn(1);
  const Certificate cert = make_certificate(ParameterKind::DOM, fcn(0), VertexList{0, 2});
  const auto res = verify_certificate(cert, g);
  EXPECT_FALSE(res.ok);
  EXPECT_FALSE(res.message.empty());
  EXPECT_ANY_THROW(parse_certificate("{\"kind\":\"DOM\",\"vertices\":[\"zz\"]}", g));
  EXPECT_ANY_THROW(parse_certificate("not json", g));
}

TEST(Certificates, FailingSetReportsReason) {
  const Graph g = fcn(0);
  const Certificate cert = make_certificate(ParameterKind::TDOM, g, by_label(g, {"00", "11"}));
  const auto res = verify_certificate(cert, g);
  EXPECT_FALSE(res.ok);
  EXPECT_FALSE(res.message.empty());
}
