#include "fcnlab/generators.hpp"
#include "fcnlab/graph_io.hpp"

#include <gtest/gtest.h>

#include <filesystem>

using namespace fcnlab;

TEST(GraphIo, JsonRoundTripIsByteIdentical) {
  for (std::size_t l = 0; l <= 2; ++l) {
    const Graph g = fcn(l);
    const std::string a = to_json(g);
    const Graph back = parse_graph_json(a);
    EXPECT_EQ(back, g);
    EXPECT_EQ(to_json(back), a);
  }
}

TEST(GraphIo, UnlabelledJsonRoundTrip) {
  const std::vector<Edge> edges{{0, 2}, {1, 2}};
  const Graph g = build_graph(4, edges, std::nullopt, "u");
  const std::string text = to_json(g);
  EXPECT_NE(text.find("\"labels\": null"), std::string::npos);
  const Graph back = parse_graph_json(text);
  EXPECT_FALSE(back.has_labels());
  EXPECT_EQ(to_json(back), text);
}

TEST(GraphIo, EdgeListRoundTrip) {
  const Graph g = fcn(1);
  const std::string text = to_edge_list(g);
  EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 20);
  const Graph back = parse_edge_list(text, g.name());
  EXPECT_EQ(to_edge_list(back), text);
  EXPECT_EQ(back.order(), 16u);
}

TEST(GraphIo, EdgeListKeepsIsolatedVerticesAndComments) {
  const Graph g = parse_edge_list("# header\na b\n\nc   # lonely\n", "x");
  EXPECT_EQ(g.order(), 3u);
  EXPECT_EQ(g.size(), 1u);
  EXPECT_EQ(g.degree(*g.find("c")), 0u);
  EXPECT_EQ(to_edge_list(g), "a b\nc\n");
}

TEST(GraphIo, DotOfC4) {
  const std::string dot = to_dot(fcn(0));
  EXPECT_EQ(dot.rfind("graph ", 0), 0u);
  EXPECT_EQ(std::count(dot.begin(), dot.end(), '\n'), 1 + 4 + 4 + 1);
  std::size_t edges = 0;
  for (std::size_t p = dot.find("--"); p != std::string::npos; p = dot.find("--", p + 2)) ++edges;
  EXPECT_EQ(edges, 4u);
}

TEST(GraphIo, JsonErrorsCarryPosition) {
  try {
    parse_graph_json("{\n  \"n\": 2,\n  \"edges\": [[0, 1],,]\n}");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
    EXPECT_GT(e.column(), 0u);
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos);
  }
}

TEST(GraphIo, JsonSchemaErrors) {
  EXPECT_THROW(parse_graph_json("[]"), ParseError);
  EXPECT_THROW(parse_graph_json("{\"edges\": []}"), ParseError);
  EXPECT_THROW(parse_graph_json("{\"n\": 2, \"edges\": [[0, 2]]}"), std::invalid_argument);
  EXPECT_THROW(parse_graph_json("{\"n\": 2, \"edges\": [[0, 0]]}"), std::invalid_argument);
}

TEST(GraphIo, EdgeListErrorCarriesLine) {
  try {
    parse_edge_list("a b\nb c d\n");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
    EXPECT_EQ(e.column(), 5u);
  }
  EXPECT_THROW(parse_edge_list("a a\n"), ParseError);
}

TEST(GraphIo, DigestTracksContent) {
  const Graph a = fcn(1);
  EXPECT_EQ(graph_digest(a), graph_digest(fcn(1)));
  EXPECT_NE(graph_digest(a), graph_digest(fcn(0)));
  EXPECT_EQ(graph_digest(a).rfind("fnv1a64:", 0), 0u);
  EXPECT_EQ(graph_digest(a).size(), 8u + 16u);
}

TEST(GraphIo, FormatsAndFiles) {
  EXPECT_EQ(parse_graph_format("dot"), GraphFormat::Dot);
  EXPECT_THROW(parse_graph_format("xml"), std::invalid_argument);
  const auto dir = std::filesystem::temp_directory_path() / "fcnlab_io_test";
  std::filesystem::create_directories(dir);
  const Graph g = fcn(1);
  write_text_file(dir / "g.json", to_json(g));
  write_text_file(dir / "g.edges", to_edge_list(g));
  write_text_file(dir / "g.dat", to_json(g));
  EXPECT_EQ(read_graph_file(dir / "g.json"), g);
  EXPECT_EQ(to_edge_list(read_graph_file(dir / "g.edges")), to_edge_list(g));
  EXPECT_EQ(read_graph_file(dir / "g.dat"), g);  // sniffed
  EXPECT_THROW(read_text_file(dir / "missing.json"), std::runtime_error);
  std::filesystem::remove_all(dir);
}

TEST(GraphIo, LineColumn) {
  const std::string text = "ab\ncd\n";
  EXPECT_EQ(line_column(text, 0), (std::pair<std::size_t, std::size_t>{1, 1}));
  EXPECT_EQ(line_column(text, 4), (std::pair<std::size_t, std::size_t>{2, 2}));
}
