#pragma once

// Gear construction, subdivision, digraph export and the fixed isospectral
// fixtures. Vertex ids are 0-based everywhere.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gears/error.hpp"

namespace gears {

enum class EdgeClass { polygon, tooth, plain };
enum class ToothEnd { tail, head };
enum class Variant { primal, dual };

inline const char* to_string(EdgeClass c) {
  switch (c) {
    case EdgeClass::polygon: return "polygon";
    case EdgeClass::tooth: return "tooth";
    case EdgeClass::plain: return "plain";
  }
  return "plain";
}

inline std::optional<EdgeClass> edge_class_from_string(const std::string& s) {
  if (s == "polygon") return EdgeClass::polygon;
  if (s == "tooth") return EdgeClass::tooth;
  if (s == "plain") return EdgeClass::plain;
  return std::nullopt;
}

inline ToothEnd flip(ToothEnd e) { return e == ToothEnd::tail ? ToothEnd::head : ToothEnd::tail; }
inline Variant flip(Variant v) { return v == Variant::primal ? Variant::dual : Variant::primal; }

/// Combinatorial description of an n-gear.
///
/// Side i runs from polygon corner i to corner i+1 (mod n). `pattern[i]`
/// says at which end of side i tooth i sits in the primal gear; the dual
/// gear attaches every tooth at the other end. An empty pattern means all
/// teeth at the tails, which gives the 12-vertex digraph G for lengths (1,2,3).
struct GearSpec {
  std::vector<double> lengths;
  Variant variant = Variant::primal;
  std::vector<ToothEnd> pattern;

  int n() const { return static_cast<int>(lengths.size()); }

  ToothEnd primal_end(int i) const {
    return pattern.empty() ? ToothEnd::tail : pattern[static_cast<std::size_t>(i)];
  }

  ToothEnd attachment(int i) const {
    const ToothEnd e = primal_end(i);
    return variant == Variant::primal ? e : flip(e);
  }

  /// Polygon corner carrying tooth i.
  int attachment_corner(int i) const {
    return attachment(i) == ToothEnd::tail ? i : (i + 1) % n();
  }

  bool operator==(const GearSpec&) const = default;
};

inline GearSpec make_gear_spec(std::vector<double> lengths, Variant variant = Variant::primal,
                               std::vector<ToothEnd> pattern = {}) {
  return GearSpec{std::move(lengths), variant, std::move(pattern)};
}

inline void check_gear_spec(const GearSpec& spec) {
  if (spec.n() < 3) throw validation_error("gear needs n >= 3 sides, got " + std::to_string(spec.n()));
  for (double l : spec.lengths) {
    if (!(l > 0.0) || !std::isfinite(l)) throw validation_error("gear length must be positive and finite");
  }
  if (!spec.pattern.empty() && static_cast<int>(spec.pattern.size()) != spec.n()) {
    throw validation_error("attachment pattern must have one entry per tooth");
  }
}

/// Toggles primal/dual. Applying it twice gives back the input.
inline GearSpec dual_gear(GearSpec spec) {
  spec.variant = flip(spec.variant);
  return spec;
}

struct Edge {
  int id = 0;
  int tail = 0;
  int head = 0;
  double length = 1.0;
  double weight = 1.0;
  EdgeClass cls = EdgeClass::plain;
  int index = -1;  ///< side/tooth index for gear edges, -1 otherwise

  bool operator==(const Edge&) const = default;
};

/// Metric graph with oriented, weighted edges. Edge e is parameterised by
/// x in [0, length] from tail (x = 0) to head (x = length). Parallel edges
/// and loops are allowed.
struct MetricGraph {
  std::string name;
  int vertex_count = 0;
  std::vector<Edge> edges;

  int edge_count() const { return static_cast<int>(edges.size()); }

  double total_length() const {
    return std::accumulate(edges.begin(), edges.end(), 0.0,
                           [](double acc, const Edge& e) { return acc + e.length; });
  }

  std::vector<int> degrees() const {
    std::vector<int> deg(static_cast<std::size_t>(vertex_count), 0);
    for (const auto& e : edges) {
      ++deg[static_cast<std::size_t>(e.tail)];
      ++deg[static_cast<std::size_t>(e.head)];
    }
    return deg;
  }

  int add_edge(int tail, int head, double length, double weight = 1.0,
               EdgeClass cls = EdgeClass::plain, int index = -1) {
    const int id = edge_count();
    edges.push_back(Edge{id, tail, head, length, weight, cls, index});
    return id;
  }
};

/// Builds the gear. Corners are vertices 0..n-1, the leaf of tooth i is n+i.
/// Sides have ids 0..n-1 and run corner i -> corner i+1; tooth i has id n+i.
/// Teeth are parameterised so they meet their side tail-to-tail or
/// head-to-head: a tooth at the tail starts at the corner, a tooth at the
/// head ends there. Consequently x on tooth i and x on side i agree at the
/// shared corner.
inline MetricGraph build_gear(const GearSpec& spec) {
  check_gear_spec(spec);
  const int n = spec.n();
  MetricGraph g;
  g.name = std::string(spec.variant == Variant::primal ? "gear" : "dual-gear");
  g.vertex_count = 2 * n;
  for (int i = 0; i < n; ++i) {
    g.add_edge(i, (i + 1) % n, spec.lengths[static_cast<std::size_t>(i)], 1.0, EdgeClass::polygon, i);
  }
  for (int i = 0; i < n; ++i) {
    const double l = spec.lengths[static_cast<std::size_t>(i)];
    const int corner = spec.attachment_corner(i);
    if (spec.attachment(i) == ToothEnd::tail) {
      g.add_edge(corner, n + i, l, 1.0, EdgeClass::tooth, i);
    } else {
      g.add_edge(n + i, corner, l, 1.0, EdgeClass::tooth, i);
    }
  }
  return g;
}

/// Splits edge `edge_id` at parameter x (0 < x < length), inserting a
/// degree-2 vertex. The two halves keep weight and class; the second half
/// gets a fresh id at the end of the edge list.
inline MetricGraph insert_vertex(MetricGraph g, int edge_id, double x) {
  auto& e = g.edges.at(static_cast<std::size_t>(edge_id));
  if (!(x > 0.0 && x < e.length)) throw validation_error("split point must lie strictly inside the edge");
  const int mid = g.vertex_count++;
  const int old_head = e.head;
  const double rest = e.length - x;
  e.head = mid;
  e.length = x;
  const Edge copy = e;
  g.add_edge(mid, old_head, rest, copy.weight, copy.cls, copy.index);
  return g;
}

/// Same graph with all lengths multiplied by s.
inline MetricGraph scale_lengths(MetricGraph g, double s) {
  for (auto& e : g.edges) e.length *= s;
  return g;
}

enum class VertexRole { polygon, tooth_interior, leaf, other };

struct CombinatorialEdge {
  int u = 0;
  int v = 0;
  EdgeClass cls = EdgeClass::plain;
};

/// Unit-length subdivision of a metric graph with integer lengths.
///
/// Original vertices keep their ids; interior path vertices are appended
/// edge by edge. `paths[e][j]` is the vertex at x = j on original edge e,
/// so paths of a gear give the slot labelling shared by a gear and its dual.
struct CombinatorialGraph {
  int vertex_count = 0;
  std::vector<CombinatorialEdge> edges;
  std::vector<VertexRole> roles;
  std::vector<std::vector<int>> paths;
  MetricGraph source;

  std::vector<std::vector<int>> adjacency() const {
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(vertex_count));
    for (const auto& e : edges) {
      adj[static_cast<std::size_t>(e.u)].push_back(e.v);
      adj[static_cast<std::size_t>(e.v)].push_back(e.u);
    }
    return adj;
  }
};

inline bool is_integer_length(double l) { return l >= 1.0 && std::abs(l - std::round(l)) < 1e-12; }

inline CombinatorialGraph subdivide(const MetricGraph& g) {
  CombinatorialGraph cg;
  cg.source = g;
  int next = g.vertex_count;
  for (const auto& e : g.edges) {
    if (!is_integer_length(e.length)) {
      throw validation_error("subdivide needs positive integer lengths, edge " + std::to_string(e.id) +
                             " has length " + std::to_string(e.length));
    }
    const int l = static_cast<int>(std::lround(e.length));
    std::vector<int> path;
    path.reserve(static_cast<std::size_t>(l) + 1);
    path.push_back(e.tail);
    for (int j = 1; j < l; ++j) path.push_back(next++);
    path.push_back(e.head);
    for (int j = 0; j < l; ++j) {
      cg.edges.push_back({path[static_cast<std::size_t>(j)], path[static_cast<std::size_t>(j) + 1], e.cls});
    }
    cg.paths.push_back(std::move(path));
  }
  cg.vertex_count = next;

  cg.roles.assign(static_cast<std::size_t>(next), VertexRole::other);
  std::vector<int> deg(static_cast<std::size_t>(next), 0);
  for (const auto& e : cg.edges) {
    ++deg[static_cast<std::size_t>(e.u)];
    ++deg[static_cast<std::size_t>(e.v)];
  }
  for (std::size_t k = 0; k < g.edges.size(); ++k) {
    const auto& path = cg.paths[k];
    const EdgeClass cls = g.edges[k].cls;
    for (std::size_t j = 0; j < path.size(); ++j) {
      auto& role = cg.roles[static_cast<std::size_t>(path[j])];
      const bool interior = j > 0 && j + 1 < path.size();
      if (cls == EdgeClass::polygon) {
        role = VertexRole::polygon;
      } else if (cls == EdgeClass::tooth && interior) {
        role = VertexRole::tooth_interior;
      }
    }
  }
  for (int v = 0; v < next; ++v) {
    if (deg[static_cast<std::size_t>(v)] == 1) cg.roles[static_cast<std::size_t>(v)] = VertexRole::leaf;
  }
  return cg;
}

/// Unit-length metric graph with the same vertices and edges as `cg`.
inline MetricGraph to_metric(const CombinatorialGraph& cg) {
  MetricGraph g;
  g.name = cg.source.name + "-subdivided";
  g.vertex_count = cg.vertex_count;
  for (const auto& e : cg.edges) g.add_edge(e.u, e.v, 1.0, 1.0, e.cls);
  return g;
}

inline bool is_bipartite(int vertex_count, const std::vector<std::vector<int>>& adj) {
  std::vector<int> colour(static_cast<std::size_t>(vertex_count), 0);
  for (int s = 0; s < vertex_count; ++s) {
    if (colour[static_cast<std::size_t>(s)] != 0) continue;
    colour[static_cast<std::size_t>(s)] = 1;
    std::vector<int> stack{s};
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      for (int v : adj[static_cast<std::size_t>(u)]) {
        auto& cv = colour[static_cast<std::size_t>(v)];
        if (cv == 0) {
          cv = -colour[static_cast<std::size_t>(u)];
          stack.push_back(v);
        } else if (cv == colour[static_cast<std::size_t>(u)]) {
          return false;
        }
      }
    }
  }
  return true;
}

inline bool is_bipartite(const CombinatorialGraph& cg) { return is_bipartite(cg.vertex_count, cg.adjacency()); }

// ---------------------------------------------------------------------------
// Digraphs

struct Digraph {
  std::string name;
  int vertex_count = 0;
  std::vector<std::pair<int, int>> arcs;

  bool operator==(const Digraph&) const = default;
};

enum class ToothArcs {
  outward,  ///< teeth point away from the polygon (the convention of the reference digraphs)
  metric,   ///< teeth follow the gear's own edge orientation
};

/// Unit subdivision of a gear as a digraph. Polygon arcs follow the cycle.
///
/// Labelling: polygon vertices come first, numbered along the cycle from the
/// endpoint of side 0 that does not carry tooth 0; then the tooth vertices,
/// tooth by tooth, in increasing x of the tooth's parameterisation, skipping
/// the attachment corner. With lengths (1,2,3) this reproduces the vertex
/// numbers of the two reference digraphs (shifted to 0-based).
inline Digraph gear_to_digraph(const GearSpec& spec, ToothArcs mode = ToothArcs::outward) {
  check_gear_spec(spec);
  const int n = spec.n();
  std::vector<int> len(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const double l = spec.lengths[static_cast<std::size_t>(i)];
    if (!is_integer_length(l)) throw validation_error("digraph export needs integer lengths");
    len[static_cast<std::size_t>(i)] = static_cast<int>(std::lround(l));
  }
  const int perimeter = std::accumulate(len.begin(), len.end(), 0);

  // Corner c_i sits at cycle position offset[i] measured from corner 0.
  std::vector<int> offset(static_cast<std::size_t>(n), 0);
  for (int i = 1; i < n; ++i) offset[static_cast<std::size_t>(i)] = offset[static_cast<std::size_t>(i) - 1] + len[static_cast<std::size_t>(i) - 1];
  const int start = spec.attachment(0) == ToothEnd::tail ? offset[1 % n] % perimeter : 0;
  auto label = [&](int pos) { return ((pos - start) % perimeter + perimeter) % perimeter; };

  Digraph d;
  d.name = spec.variant == Variant::primal ? "gear" : "dual-gear";
  for (int p = 0; p < perimeter; ++p) d.arcs.emplace_back(label(p), label(p + 1));

  int next = perimeter;
  for (int i = 0; i < n; ++i) {
    const int l = len[static_cast<std::size_t>(i)];
    const bool at_tail = spec.attachment(i) == ToothEnd::tail;
    const int corner = label(offset[static_cast<std::size_t>(spec.attachment_corner(i))]);
    std::vector<int> slot(static_cast<std::size_t>(l) + 1);
    for (int j = 0; j <= l; ++j) {
      const bool is_corner = at_tail ? j == 0 : j == l;
      slot[static_cast<std::size_t>(j)] = is_corner ? corner : next++;
    }
    for (int j = 0; j < l; ++j) {
      int a = slot[static_cast<std::size_t>(j)];
      int b = slot[static_cast<std::size_t>(j) + 1];
      if (mode == ToothArcs::outward && !at_tail) std::swap(a, b);
      d.arcs.emplace_back(a, b);
    }
  }
  d.vertex_count = next;
  return d;
}

inline Digraph reverse(const Digraph& g) {
  Digraph r = g;
  r.name = g.name + "-reversed";
  for (auto& [u, v] : r.arcs) std::swap(u, v);
  return r;
}

/// Reference digraph G on 12 vertices, 0-based.
inline Digraph fig6_digraph() {
  Digraph d{"fig6-G", 12, {}};
  const int arcs[12][2] = {{6, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6},
                           {6, 7}, {1, 8}, {8, 9}, {3, 10}, {10, 11}, {11, 12}};
  for (const auto& a : arcs) d.arcs.emplace_back(a[0] - 1, a[1] - 1);
  return d;
}

/// Reference digraph G~, the dual partner of G, 0-based.
inline Digraph fig6_dual_digraph() {
  Digraph d{"fig6-G~", 12, {}};
  const int arcs[12][2] = {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 1},
                           {2, 7}, {4, 9}, {9, 8}, {1, 12}, {12, 11}, {11, 10}};
  for (const auto& a : arcs) d.arcs.emplace_back(a[0] - 1, a[1] - 1);
  return d;
}

// ---------------------------------------------------------------------------
// Merged-edge fixtures: isospectral pairs with plain Kirchhoff-Neumann conditions.

enum class Fig3Variant { a, b };

namespace detail {

inline void add_leaves(MetricGraph& g, int at, double l, int count) {
  for (int c = 0; c < count; ++c) g.add_edge(at, g.vertex_count++, l);
}

inline void add_bundle(MetricGraph& g, int at, double l, int count) {
  const int end = g.vertex_count++;
  for (int c = 0; c < count; ++c) g.add_edge(at, end, l);
}

}  // namespace detail

/// Hard-coded adjacency of the merged-edge pairs.
///
/// Variant a (lengths a,b,c): triangle O,P,Q with doubled sides OP=a,
/// PQ=b, QO=c. Left graph: 3 leaves of length a at O, bundles of 3 parallel
/// edges of length b and c at Q. Right graph: 3 leaves of length a at P,
/// a b-bundle at P and a c-bundle at O.
///
/// Variant b (lengths a,b,c,d): square O,P,Q,R with single sides. Left:
/// sides OP=a, PQ=b, QR=c, RO=d; 2 a-leaves at O, 2 b-leaves at P, a
/// c-bundle of 2 at Q, 2 d-leaves at O. Right: sides OP=c, PQ=b, QR=a,
/// RO=d; 2 a-leaves at Q, 2 b-leaves at P, a c-bundle of 2 at O, 2 d-leaves
/// at O.
inline std::pair<MetricGraph, MetricGraph> build_fig3_pair(Fig3Variant variant, const std::vector<double>& lengths) {
  const std::size_t arity = variant == Fig3Variant::a ? 3 : 4;
  if (lengths.size() != arity) {
    throw validation_error("fig3 variant " + std::string(variant == Fig3Variant::a ? "a" : "b") + " needs " +
                           std::to_string(arity) + " lengths");
  }
  for (double l : lengths) {
    if (!(l > 0.0)) throw validation_error("fig3 lengths must be positive");
  }
  MetricGraph left, right;
  if (variant == Fig3Variant::a) {
    const double a = lengths[0], b = lengths[1], c = lengths[2];
    for (MetricGraph* g : {&left, &right}) {
      g->vertex_count = 3;  // O=0, P=1, Q=2
      for (int r = 0; r < 2; ++r) {
        g->add_edge(0, 1, a);
        g->add_edge(1, 2, b);
        g->add_edge(2, 0, c);
      }
    }
    left.name = "fig3a-left";
    detail::add_leaves(left, 0, a, 3);
    detail::add_bundle(left, 2, b, 3);
    detail::add_bundle(left, 2, c, 3);
    right.name = "fig3a-right";
    detail::add_leaves(right, 1, a, 3);
    detail::add_bundle(right, 1, b, 3);
    detail::add_bundle(right, 0, c, 3);
  } else {
    const double a = lengths[0], b = lengths[1], c = lengths[2], d = lengths[3];
    left.name = "fig3b-left";
    left.vertex_count = 4;  // O=0, P=1, Q=2, R=3
    left.add_edge(0, 1, a);
    left.add_edge(1, 2, b);
    left.add_edge(2, 3, c);
    left.add_edge(3, 0, d);
    detail::add_leaves(left, 0, a, 2);
    detail::add_leaves(left, 1, b, 2);
    detail::add_bundle(left, 2, c, 2);
    detail::add_leaves(left, 0, d, 2);
    right.name = "fig3b-right";
    right.vertex_count = 4;
    right.add_edge(0, 1, c);
    right.add_edge(1, 2, b);
    right.add_edge(2, 3, a);
    right.add_edge(3, 0, d);
    detail::add_leaves(right, 2, a, 2);
    detail::add_leaves(right, 1, b, 2);
    detail::add_bundle(right, 0, c, 2);
    detail::add_leaves(right, 0, d, 2);
  }
  return {left, right};
}

// ---------------------------------------------------------------------------
// Validation

inline bool is_connected(int vertex_count, const std::vector<std::pair<int, int>>& links) {
  if (vertex_count <= 1) return true;
  std::vector<int> parent(static_cast<std::size_t>(vertex_count));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  };
  int components = vertex_count;
  for (auto [u, v] : links) {
    const int a = find(u), b = find(v);
    if (a != b) {
      parent[static_cast<std::size_t>(a)] = b;
      --components;
    }
  }
  return components == 1;
}

/// Lists violated invariants; an empty report means the graph is valid.
/// Checks any metric graph must pass before its spectrum can be computed.
inline std::vector<std::string> validate_metric(const MetricGraph& g) {
  std::vector<std::string> report;
  if (g.vertex_count <= 0) report.emplace_back("no vertices");
  bool ids_ok = true;
  for (const auto& e : g.edges) {
    if (e.tail < 0 || e.tail >= g.vertex_count || e.head < 0 || e.head >= g.vertex_count) ids_ok = false;
  }
  if (!ids_ok) {
    report.emplace_back("vertex out of range");
    return report;
  }
  if (std::any_of(g.edges.begin(), g.edges.end(), [](const Edge& e) { return !(e.length > 0.0); })) {
    report.emplace_back("nonpositive length");
  }
  if (std::any_of(g.edges.begin(), g.edges.end(), [](const Edge& e) { return !(e.weight > 0.0); })) {
    report.emplace_back("nonpositive weight");
  }
  std::vector<std::pair<int, int>> links;
  for (const auto& e : g.edges) links.emplace_back(e.tail, e.head);
  if (!is_connected(g.vertex_count, links)) report.emplace_back("not connected");
  return report;
}

/// validate_metric plus the gear shape whenever the graph carries polygon or
/// tooth edges. Subdivided gears or gears with extra degree-2 vertices are
/// fine metric graphs but fail the gear part, so the solver only asks for
/// validate_metric.
inline std::vector<std::string> validate(const MetricGraph& g) {
  std::vector<std::string> report = validate_metric(g);
  if (std::find(report.begin(), report.end(), "vertex out of range") != report.end()) return report;

  std::vector<const Edge*> sides, teeth;
  for (const auto& e : g.edges) {
    if (e.cls == EdgeClass::polygon) sides.push_back(&e);
    if (e.cls == EdgeClass::tooth) teeth.push_back(&e);
  }
  if (sides.empty() && teeth.empty()) return report;
  const auto deg = g.degrees();
  std::vector<int> out(static_cast<std::size_t>(g.vertex_count), 0), in(static_cast<std::size_t>(g.vertex_count), 0);
  for (const Edge* s : sides) {
    ++out[static_cast<std::size_t>(s->tail)];
    ++in[static_cast<std::size_t>(s->head)];
  }
  bool cycle = !sides.empty();
  std::vector<std::pair<int, int>> side_links;
  for (const Edge* s : sides) {
    if (out[static_cast<std::size_t>(s->tail)] != 1 || in[static_cast<std::size_t>(s->head)] != 1) cycle = false;
    side_links.emplace_back(s->tail, s->head);
  }
  if (cycle) {
    std::vector<int> on_cycle;
    for (const Edge* s : sides) on_cycle.push_back(s->tail);
    std::sort(on_cycle.begin(), on_cycle.end());
    // Relabel cycle vertices densely to test connectivity of the cycle alone.
    std::vector<std::pair<int, int>> dense;
    for (auto [u, v] : side_links) {
      const auto iu = std::lower_bound(on_cycle.begin(), on_cycle.end(), u) - on_cycle.begin();
      const auto iv = std::lower_bound(on_cycle.begin(), on_cycle.end(), v) - on_cycle.begin();
      dense.emplace_back(static_cast<int>(iu), static_cast<int>(iv));
    }
    cycle = is_connected(static_cast<int>(on_cycle.size()), dense);
  }
  if (!cycle) report.emplace_back("polygon is not one oriented cycle");

  bool pendant = true, paired = true;
  for (const Edge* t : teeth) {
    const int dt = deg[static_cast<std::size_t>(t->tail)], dh = deg[static_cast<std::size_t>(t->head)];
    if (!((dt == 1) != (dh == 1))) pendant = false;
    const auto side = std::find_if(sides.begin(), sides.end(), [&](const Edge* s) { return s->index == t->index; });
    if (side == sides.end()) {
      paired = false;
      continue;
    }
    const Edge* s = *side;
    const bool tail_to_tail = t->tail == s->tail && dh == 1;
    const bool head_to_head = t->head == s->head && dt == 1;
    if (!tail_to_tail && !head_to_head) paired = false;
    if (std::abs(t->length - s->length) > 1e-12 * std::max(1.0, s->length)) paired = false;
  }
  if (!pendant) report.emplace_back("tooth is not a pendant edge");
  if (!paired) report.emplace_back("tooth not head-to-head or tail-to-tail with its side");
  return report;
}

inline std::vector<std::string> validate(const CombinatorialGraph& g) {
  std::vector<std::string> report;
  std::vector<std::pair<int, int>> links;
  for (const auto& e : g.edges) {
    if (e.u < 0 || e.u >= g.vertex_count || e.v < 0 || e.v >= g.vertex_count) {
      report.emplace_back("vertex out of range");
      return report;
    }
    links.emplace_back(e.u, e.v);
  }
  if (!is_connected(g.vertex_count, links)) report.emplace_back("not connected");
  return report;
}

}  // namespace gears
