#include <gtest/gtest.h>

#include <sstream>

#include "gears/io.hpp"
#include "gears/rational.hpp"

using namespace gears;

TEST(GraphFormat, RoundTripIsExact) {
  auto g = build_gear(make_gear_spec({1.0, std::sqrt(2.0), 3.14159265358979}, Variant::dual));
  std::stringstream buf;
  write_graph(buf, g);
  const auto back = read_graph(buf);
  EXPECT_EQ(back.vertex_count, g.vertex_count);
  EXPECT_EQ(back.edges, g.edges);
  EXPECT_EQ(back.name, g.name);
}

TEST(GraphFormat, CommentsAndBlankLines) {
  std::istringstream in(
      "# a path\n"
      "graph p2\n\n"
      "vertices 3   # three\n"
      "edge 0 0 1 1.5 1 plain\n"
      "edge 1 1 2 0.5 2 plain\n");
  const auto g = read_graph(in);
  EXPECT_EQ(g.vertex_count, 3);
  ASSERT_EQ(g.edge_count(), 2);
  EXPECT_DOUBLE_EQ(g.edges[1].weight, 2.0);
}

TEST(GraphFormat, RejectsGarbage) {
  std::istringstream bad_class("graph x\nvertices 2\nedge 0 0 1 1 1 spoke\n");
  EXPECT_THROW(read_graph(bad_class), Error);
  std::istringstream no_header("vertices 2\nedge 0 0 1 1 1 plain\n");
  EXPECT_THROW(read_graph(no_header), Error);
  std::istringstream bad_number("graph x\nvertices 2\nedge 0 0 1 one 1 plain\n");
  EXPECT_THROW(read_graph(bad_number), Error);
}

TEST(GraphFormat, MissingFileIsAnIoError) {
  try {
    load_graph("/nonexistent/dir/g.graph");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::io);
  }
}

TEST(DigraphFormat, RoundTrip) {
  const auto d = fig6_dual_digraph();
  std::stringstream buf;
  write_digraph(buf, d);
  EXPECT_EQ(read_digraph(buf).arcs, d.arcs);
  std::istringstream out_of_range("digraph x\nvertices 2\narc 0 5\n");
  EXPECT_THROW(read_digraph(out_of_range), Error);
}

TEST(RationalParsing, Forms) {
  EXPECT_EQ(parse_rational("3/2"), Rational(3, 2));
  EXPECT_EQ(parse_rational("-4/6"), Rational(-2, 3));
  EXPECT_EQ(parse_rational("7"), Rational(7));
  EXPECT_EQ(parse_rational("1.5"), Rational(3, 2));
  EXPECT_EQ(parse_rational("-0.25"), Rational(-1, 4));
  EXPECT_EQ(parse_rational(".5"), Rational(1, 2));
  EXPECT_EQ(parse_rational("0.08"), Rational(2, 25));
  EXPECT_EQ(parse_rational("010/3"), Rational(10, 3));
  EXPECT_EQ(to_string(Rational(3, 2)), "3/2");
  EXPECT_EQ(to_string(Rational(4, 2)), "2");
  EXPECT_THROW(parse_rational("1e3"), Error);
  EXPECT_THROW(parse_rational("1/0"), Error);
  EXPECT_THROW(parse_rational(""), Error);
  EXPECT_THROW(parse_rational("sqrt(2)"), Error);
}
