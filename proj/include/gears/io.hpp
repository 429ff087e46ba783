#pragma once

// Line-oriented text formats.
//
//   graph <name>                       digraph <name>
//   vertices <N>                       vertices <N>
//   edge <id> <tail> <head> <length> <weight> <class>
//                                      arc <tail> <head>
//
// '#' starts a comment. Vertex ids are 0-based. Reals are written with 17
// significant digits so a write/read cycle is exact.

#include <charconv>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "gears/error.hpp"
#include "gears/graph.hpp"

namespace gears {

inline std::string format_real(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

namespace detail {

inline std::vector<std::string> tokens_of(const std::string& line) {
  const auto hash = line.find('#');
  std::istringstream in(hash == std::string::npos ? line : line.substr(0, hash));
  std::vector<std::string> out;
  for (std::string t; in >> t;) out.push_back(t);
  return out;
}

inline int parse_int(const std::string& s, int line_no) {
  int v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    throw validation_error("line " + std::to_string(line_no) + ": expected integer, got '" + s + "'");
  }
  return v;
}

inline double parse_real(const std::string& s, int line_no) {
  try {
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used == s.size()) return v;
  } catch (const std::exception&) {
  }
  throw validation_error("line " + std::to_string(line_no) + ": expected real, got '" + s + "'");
}

}  // namespace detail

inline void write_graph(std::ostream& out, const MetricGraph& g) {
  out << "graph " << (g.name.empty() ? "unnamed" : g.name) << "\n";
  out << "vertices " << g.vertex_count << "\n";
  for (const auto& e : g.edges) {
    out << "edge " << e.id << ' ' << e.tail << ' ' << e.head << ' ' << format_real(e.length) << ' '
        << format_real(e.weight) << ' ' << to_string(e.cls) << "\n";
  }
}

/// Parses the graph format. Gear side/tooth indices are not part of the
/// format; they are recovered by pairing polygon and tooth edges in order.
inline MetricGraph read_graph(std::istream& in) {
  MetricGraph g;
  bool have_header = false, have_vertices = false;
  int line_no = 0;
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    const auto tok = detail::tokens_of(line);
    if (tok.empty()) continue;
    if (tok[0] == "graph" && tok.size() == 2) {
      g.name = tok[1];
      have_header = true;
    } else if (tok[0] == "vertices" && tok.size() == 2) {
      g.vertex_count = detail::parse_int(tok[1], line_no);
      have_vertices = true;
    } else if (tok[0] == "edge" && tok.size() == 7) {
      Edge e;
      e.id = detail::parse_int(tok[1], line_no);
      e.tail = detail::parse_int(tok[2], line_no);
      e.head = detail::parse_int(tok[3], line_no);
      e.length = detail::parse_real(tok[4], line_no);
      e.weight = detail::parse_real(tok[5], line_no);
      const auto cls = edge_class_from_string(tok[6]);
      if (!cls) throw validation_error("line " + std::to_string(line_no) + ": unknown edge class '" + tok[6] + "'");
      e.cls = *cls;
      if (e.id != g.edge_count()) throw validation_error("line " + std::to_string(line_no) + ": edge ids must be 0,1,2,...");
      g.edges.push_back(e);
    } else {
      throw validation_error("line " + std::to_string(line_no) + ": unrecognised record '" + tok[0] + "'");
    }
  }
  if (!have_header || !have_vertices) throw validation_error("graph file needs 'graph' and 'vertices' records");
  int side = 0, tooth = 0;
  for (auto& e : g.edges) {
    if (e.cls == EdgeClass::polygon) e.index = side++;
    if (e.cls == EdgeClass::tooth) e.index = tooth++;
  }
  return g;
}

inline void write_digraph(std::ostream& out, const Digraph& d) {
  out << "digraph " << (d.name.empty() ? "unnamed" : d.name) << "\n";
  out << "vertices " << d.vertex_count << "\n";
  for (const auto& [u, v] : d.arcs) out << "arc " << u << ' ' << v << "\n";
}

inline Digraph read_digraph(std::istream& in) {
  Digraph d;
  bool have_header = false, have_vertices = false;
  int line_no = 0;
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    const auto tok = detail::tokens_of(line);
    if (tok.empty()) continue;
    if (tok[0] == "digraph" && tok.size() == 2) {
      d.name = tok[1];
      have_header = true;
    } else if (tok[0] == "vertices" && tok.size() == 2) {
      d.vertex_count = detail::parse_int(tok[1], line_no);
      have_vertices = true;
    } else if (tok[0] == "arc" && tok.size() == 3) {
      const int u = detail::parse_int(tok[1], line_no), v = detail::parse_int(tok[2], line_no);
      if (u < 0 || v < 0 || u >= d.vertex_count || v >= d.vertex_count) {
        throw validation_error("line " + std::to_string(line_no) + ": arc endpoint out of range");
      }
      d.arcs.emplace_back(u, v);
    } else {
      throw validation_error("line " + std::to_string(line_no) + ": unrecognised record '" + tok[0] + "'");
    }
  }
  if (!have_header || !have_vertices) throw validation_error("digraph file needs 'digraph' and 'vertices' records");
  return d;
}

template <class T, class Reader>
T load_file(const std::string& path, Reader reader) {
  std::ifstream in(path);
  if (!in) throw io_error("cannot open '" + path + "'");
  return reader(in);
}

inline MetricGraph load_graph(const std::string& path) { return load_file<MetricGraph>(path, [](std::istream& in) { return read_graph(in); }); }
inline Digraph load_digraph(const std::string& path) { return load_file<Digraph>(path, [](std::istream& in) { return read_digraph(in); }); }

}  // namespace gears
