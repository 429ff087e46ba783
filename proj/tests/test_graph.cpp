#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <set>

#include "gears/graph.hpp"

using namespace gears;

namespace {

std::multiset<double> lengths_of(const MetricGraph& g) {
  std::multiset<double> out;
  for (const auto& e : g.edges) out.insert(e.length);
  return out;
}

int leaves(const MetricGraph& g) {
  const auto deg = g.degrees();
  return static_cast<int>(std::count(deg.begin(), deg.end(), 1));
}

}  // namespace

TEST(Gear, PrimalCounts) {
  const auto g = build_gear(make_gear_spec({1, 2, 3}));
  EXPECT_EQ(g.vertex_count, 6);
  EXPECT_EQ(g.edge_count(), 6);
  EXPECT_DOUBLE_EQ(g.total_length(), 12.0);
  EXPECT_TRUE(validate(g).empty());
}

TEST(Gear, DualMovesEveryTooth) {
  const auto spec = make_gear_spec({1, 2, 3});
  const auto g = build_gear(spec), d = build_gear(dual_gear(spec));
  EXPECT_EQ(d.vertex_count, 6);
  EXPECT_EQ(d.edge_count(), 6);
  EXPECT_TRUE(validate(d).empty());
  for (int i = 0; i < 3; ++i) {
    EXPECT_EQ(g.edges[i], d.edges[i]) << "sides are unchanged";
    EXPECT_NE(spec.attachment_corner(i), dual_gear(spec).attachment_corner(i));
  }
}

TEST(Gear, DualIsAnInvolution) {
  const auto s = make_gear_spec({1, 1, 1}, Variant::dual);
  EXPECT_EQ(dual_gear(s).variant, Variant::primal);
  EXPECT_EQ(dual_gear(dual_gear(s)), s);
  EXPECT_EQ(build_gear(dual_gear(dual_gear(s))).edges, build_gear(s).edges);
}

TEST(Gear, RejectsBadSpecs) {
  EXPECT_THROW(build_gear(make_gear_spec({1, 2})), Error);
  EXPECT_THROW(build_gear(make_gear_spec({1, 0, 2})), Error);
  EXPECT_THROW(build_gear(make_gear_spec({1, -1, 2})), Error);
  EXPECT_THROW(build_gear(make_gear_spec({1, 2, 3}, Variant::primal, {ToothEnd::head})), Error);
  try {
    build_gear(make_gear_spec({1, 2}));
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::validation);
  }
}

TEST(Gear, PolygonDegreesAndLeaves) {
  // Every attachment pattern of a 4-gear: n leaves, corners of degree 2..4.
  for (int mask = 0; mask < 16; ++mask) {
    std::vector<ToothEnd> pattern;
    for (int i = 0; i < 4; ++i) pattern.push_back((mask >> i) & 1 ? ToothEnd::head : ToothEnd::tail);
    for (auto variant : {Variant::primal, Variant::dual}) {
      const auto g = build_gear(make_gear_spec({1, 2, 3, 4}, variant, pattern));
      EXPECT_TRUE(validate(g).empty());
      EXPECT_EQ(leaves(g), 4);
      const auto deg = g.degrees();
      for (int c = 0; c < 4; ++c) {
        EXPECT_GE(deg[c], 2);
        EXPECT_LE(deg[c], 4);
      }
    }
  }
}

TEST(Gear, TeethShareParameterWithSide) {
  const auto spec = make_gear_spec({1, 2, 3}, Variant::primal, {ToothEnd::tail, ToothEnd::head, ToothEnd::tail});
  const auto g = build_gear(spec);
  for (int i = 0; i < 3; ++i) {
    const Edge& side = g.edges[i];
    const Edge& tooth = g.edges[3 + i];
    if (spec.attachment(i) == ToothEnd::tail) {
      EXPECT_EQ(tooth.tail, side.tail);
    } else {
      EXPECT_EQ(tooth.head, side.head);
    }
  }
}

TEST(Subdivide, Counts) {
  const auto cg = subdivide(build_gear(make_gear_spec({1, 2, 3})));
  EXPECT_EQ(cg.vertex_count, 12);
  EXPECT_EQ(cg.edges.size(), 12u);
  const auto small = subdivide(build_gear(make_gear_spec({1, 1, 1})));
  EXPECT_EQ(small.vertex_count, 6);
  EXPECT_EQ(small.edges.size(), 6u);
  EXPECT_TRUE(validate(cg).empty());
}

TEST(Subdivide, PreservesTotalLength) {
  const auto g = build_gear(make_gear_spec({2, 3, 1, 4}, Variant::dual));
  EXPECT_DOUBLE_EQ(static_cast<double>(subdivide(g).edges.size()), g.total_length());
}

TEST(Subdivide, Bipartiteness) {
  EXPECT_TRUE(is_bipartite(subdivide(build_gear(make_gear_spec({1, 2, 3})))));
  EXPECT_FALSE(is_bipartite(subdivide(build_gear(make_gear_spec({1, 1, 1})))));
}

TEST(Subdivide, RolesAndPaths) {
  const auto cg = subdivide(build_gear(make_gear_spec({1, 2, 3})));
  int polygon = 0, interior = 0, leaf = 0;
  for (auto r : cg.roles) {
    polygon += r == VertexRole::polygon;
    interior += r == VertexRole::tooth_interior;
    leaf += r == VertexRole::leaf;
  }
  EXPECT_EQ(polygon, 6);
  EXPECT_EQ(interior, 3);
  EXPECT_EQ(leaf, 3);
  for (std::size_t e = 0; e < cg.paths.size(); ++e) {
    EXPECT_EQ(cg.paths[e].size(), static_cast<std::size_t>(cg.source.edges[e].length) + 1);
  }
}

TEST(Subdivide, RejectsNonIntegerLengths) {
  EXPECT_THROW(subdivide(build_gear(make_gear_spec({1, 1.5, 2}))), Error);
}

TEST(Digraph, MatchesReferencePrimal) {
  const auto d = gear_to_digraph(make_gear_spec({1, 2, 3}));
  const auto ref = fig6_digraph();
  EXPECT_EQ(d.vertex_count, 12);
  EXPECT_EQ(std::multiset(d.arcs.begin(), d.arcs.end()), std::multiset(ref.arcs.begin(), ref.arcs.end()));
}

TEST(Digraph, MatchesReferenceDual) {
  const auto d = gear_to_digraph(make_gear_spec({1, 2, 3}, Variant::dual));
  const auto ref = fig6_dual_digraph();
  EXPECT_EQ(std::multiset(d.arcs.begin(), d.arcs.end()), std::multiset(ref.arcs.begin(), ref.arcs.end()));
}

TEST(Digraph, ReferenceSpotCheckVertex3) {
  // Paper label 3 is index 2: in-arc from 2, out-arcs to 4 and 10.
  const auto g = fig6_digraph();
  std::set<int> in, out;
  for (auto [u, v] : g.arcs) {
    if (v == 2) in.insert(u);
    if (u == 2) out.insert(v);
  }
  EXPECT_EQ(in, (std::set<int>{1}));
  EXPECT_EQ(out, (std::set<int>{3, 9}));
}

TEST(Digraph, ArcCounts) {
  const auto d = gear_to_digraph(make_gear_spec({1, 1, 1}));
  EXPECT_EQ(d.vertex_count, 6);
  EXPECT_EQ(d.arcs.size(), 6u);
  const auto e = gear_to_digraph(make_gear_spec({2, 1, 3, 2}, Variant::dual), ToothArcs::metric);
  EXPECT_EQ(e.arcs.size(), 16u);
  for (auto [u, v] : e.arcs) EXPECT_NE(u, v);
}

TEST(MergedPair, VariantACounts) {
  const auto [left, right] = build_fig3_pair(Fig3Variant::a, {1, 2, 3});
  for (const auto* g : {&left, &right}) {
    EXPECT_EQ(g->vertex_count, 8);
    EXPECT_EQ(g->edge_count(), 15);
    const auto deg = g->degrees();
    int sum = 0;
    for (int d : deg) sum += d;
    EXPECT_EQ(sum, 2 * g->edge_count());
    EXPECT_TRUE(validate(*g).empty());
  }
  EXPECT_EQ(lengths_of(left), lengths_of(right));
}

TEST(MergedPair, VariantBCounts) {
  const auto [left, right] = build_fig3_pair(Fig3Variant::b, {1, 1, 1, 1});
  for (const auto* g : {&left, &right}) {
    EXPECT_EQ(g->edge_count(), 12);
    EXPECT_EQ(g->vertex_count, 11);
    EXPECT_TRUE(validate(*g).empty());
  }
  const auto [l2, r2] = build_fig3_pair(Fig3Variant::b, {1, 2, 3, 4});
  EXPECT_EQ(lengths_of(l2), lengths_of(r2));
}

TEST(MergedPair, WrongArity) {
  EXPECT_THROW(build_fig3_pair(Fig3Variant::a, {1, 2}), Error);
  EXPECT_THROW(build_fig3_pair(Fig3Variant::b, {1, 2, 3}), Error);
}

TEST(Validate, ReportsViolations) {
  auto g = build_gear(make_gear_spec({1, 2, 3}));
  g.edges[1].length = 0.0;
  const auto r = validate(g);
  EXPECT_NE(std::find(r.begin(), r.end(), "nonpositive length"), r.end());

  MetricGraph two;
  two.vertex_count = 4;
  two.add_edge(0, 1, 1.0);
  two.add_edge(2, 3, 1.0);
  const auto r2 = validate(two);
  EXPECT_NE(std::find(r2.begin(), r2.end(), "not connected"), r2.end());

  auto moved = build_gear(make_gear_spec({1, 2, 3}));
  std::swap(moved.edges[3].tail, moved.edges[3].head);  // tooth now head-to-tail
  const auto r3 = validate(moved);
  EXPECT_NE(std::find(r3.begin(), r3.end(), "tooth not head-to-head or tail-to-tail with its side"), r3.end());
  EXPECT_TRUE(validate_metric(moved).empty());
}

TEST(Validate, SplitGearIsAValidMetricGraph) {
  const auto g = build_gear(make_gear_spec({1, 2, 3}));
  const auto split = insert_vertex(g, 4, 1.0);
  EXPECT_FALSE(validate(split).empty());
  EXPECT_TRUE(validate_metric(split).empty());
  EXPECT_TRUE(validate_metric(to_metric(subdivide(g))).empty());
}

TEST(InsertVertex, SplitsEdge) {
  const auto g = build_gear(make_gear_spec({1, 2, 3}));
  const auto h = insert_vertex(g, 1, 0.5);
  EXPECT_EQ(h.vertex_count, 7);
  EXPECT_EQ(h.edge_count(), 7);
  EXPECT_DOUBLE_EQ(h.total_length(), g.total_length());
  EXPECT_THROW(insert_vertex(g, 1, 2.0), Error);
}
