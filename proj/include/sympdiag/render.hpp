#pragma once

#include <cstdio>
#include <sstream>
#include <string>

#include "sympdiag/diagram.hpp"

namespace sympdiag {

enum class DotStyle { Graph, Diagram };

namespace detail {

inline std::string vertex_label(const Vertex& v) {
  std::ostringstream os;
  os << "k=" << v.k << "\\ndim g=" << v.g.dim() << ", dim h=" << v.h.dim() << "\\n" << class_name(v.cls)
     << "\\nw=" << to_string(v.weight);
  return os.str();
}

}  // namespace detail

// Graph style draws three rows per vertex: H_k, G_k and M_k = G_k/H_k.
// Up steps embed M_k into M_{k+1}; Down steps reduce M_{k+1} onto M_k.
inline std::string render_dot(const WeightedDiagram& d, DotStyle style) {
  std::ostringstream os;
  const std::size_t n = d.vertices.size();
  if (style == DotStyle::Diagram) {
    os << "digraph diagram {\n  rankdir=LR;\n  node [shape=circle];\n";
    for (const auto& v : d.vertices) os << "  v" << v.k << " [label=\"" << detail::vertex_label(v) << "\"];\n";
    for (std::size_t k = 0; k < d.steps.size(); ++k) {
      os << "  v" << k << " -> v" << k + 1 << " [label=\"" << step_name(d.steps[k]) << "\"];\n";
      if (d.steps[k] == Step::Down) os << "  v" << k << " -> v" << k + 1 << ";\n";
    }
    os << "}\n";
    return os.str();
  }
  os << "digraph graph_style {\n  rankdir=LR;\n  node [shape=box];\n";
  const char* rows[3] = {"H", "G", "M"};
  for (const char* r : rows) {
    os << "  subgraph row_" << r << " {\n    rank=same;\n";
    for (const auto& v : d.vertices) {
      os << "    " << r << v.k << " [label=\"" << r << "_" << v.k;
      if (r[0] == 'H') os << "\\ndim " << v.h.dim();
      if (r[0] == 'G') os << "\\n" << detail::vertex_label(v);
      if (r[0] == 'M') os << "\\ndim " << v.g.dim() - v.h.dim();
      os << "\"];\n";
    }
    os << "  }\n";
  }
  for (std::size_t k = 0; k < n; ++k) {
    os << "  H" << k << " -> G" << k << " [label=\"incl\"];\n";
    os << "  G" << k << " -> M" << k << " [label=\"proj\"];\n";
  }
  for (std::size_t k = 0; k < d.steps.size(); ++k) {
    os << "  G" << k << " -> G" << k + 1 << " [label=\"incl\"];\n";
    if (d.steps[k] == Step::Up) {
      os << "  H" << k << " -> H" << k + 1 << " [label=\"incl\"];\n";
      os << "  M" << k << " -> M" << k + 1 << " [label=\"orbit\"];\n";
    } else {
      os << "  H" << k + 1 << " -> H" << k << " [label=\"ideal\"];\n";
      os << "  M" << k + 1 << " -> M" << k << " [label=\"mw\"];\n";
    }
  }
  os << "}\n";
  return os.str();
}

inline std::string render_table(const WeightedDiagram& d) {
  std::ostringstream os;
  os << "  k  dim g  dim h  dim M  weight  class                 step\n";
  for (const auto& v : d.vertices) {
    std::string step = v.k < d.steps.size() ? step_name(d.steps[v.k]) : "-";
    std::string cls = class_name(v.cls);
    std::string w = to_string(v.weight);
    char buf[160];
    std::snprintf(buf, sizeof buf, "%3zu  %5zu  %5zu  %5zu  %6s  %-20s  %s\n", v.k, v.g.dim(), v.h.dim(),
                  v.g.dim() - v.h.dim(), w.c_str(), cls.c_str(), step.c_str());
    os << buf;
  }
  return os.str();
}

}  // namespace sympdiag
