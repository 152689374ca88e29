#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "sympdiag/flags.hpp"
#include "sympdiag/forms.hpp"

namespace sympdiag {

enum class Step { Up, Down };

enum class VertexClass {
  RegularNonReducible,
  RegularReducible,
  SingularAttractive,
  SingularRepulsive,
  EndpointLeft,
  EndpointRight
};

inline const char* step_name(Step s) { return s == Step::Up ? "Up" : "Down"; }

inline const char* class_name(VertexClass c) {
  switch (c) {
    case VertexClass::RegularNonReducible: return "regular-nonreducible";
    case VertexClass::RegularReducible: return "regular-reducible";
    case VertexClass::SingularAttractive: return "attractive";
    case VertexClass::SingularRepulsive: return "repulsive";
    case VertexClass::EndpointLeft: return "endpoint-left";
    case VertexClass::EndpointRight: return "endpoint-right";
  }
  return "";
}

inline bool is_singular(VertexClass c) {
  return c == VertexClass::SingularAttractive || c == VertexClass::SingularRepulsive;
}

struct Vertex {
  std::size_t k = 0;
  Subspace g, h;
  Rational weight;
  VertexClass cls = VertexClass::EndpointLeft;

  bool singular() const { return is_singular(cls); }
};

struct WeightedDiagram {
  std::vector<Vertex> vertices;
  std::vector<Step> steps;
  FlagReport flag_report;

  std::vector<std::size_t> singular_indices() const {
    std::vector<std::size_t> out;
    for (const auto& v : vertices)
      if (v.singular()) out.push_back(v.k);
    return out;
  }
  std::vector<std::size_t> kernel_dims() const {
    std::vector<std::size_t> out;
    for (const auto& v : vertices) out.push_back(v.h.dim());
    return out;
  }
};

inline Rational vertex_weight(const Subspace& g, const Subspace& h) {
  return Rational(static_cast<long>(h.dim()), static_cast<long>(g.dim() - h.dim() + 1));
}

inline VertexClass classify(Step in, Step out) {
  if (in == Step::Down && out == Step::Down) return VertexClass::RegularNonReducible;
  if (in == Step::Up && out == Step::Up) return VertexClass::RegularReducible;
  if (in == Step::Up) return VertexClass::SingularAttractive;
  return VertexClass::SingularRepulsive;
}

inline void classify_vertices(WeightedDiagram& d) {
  const std::size_t n = d.vertices.size();
  for (std::size_t k = 0; k < n; ++k) {
    auto& v = d.vertices[k];
    v.weight = vertex_weight(v.g, v.h);
    if (k == 0)
      v.cls = VertexClass::EndpointLeft;
    else if (k + 1 == n)
      v.cls = VertexClass::EndpointRight;
    else
      v.cls = classify(d.steps[k - 1], d.steps[k]);
  }
}

// Kernels h_k of w restricted to each member, with step directions and vertex classes.
inline WeightedDiagram kernel_chain(const LieAlgebra& g, const TwoForm& w, const Flag& f) {
  if (!is_closed(g, w)) throw Error(ErrorCode::NotClosed, "2-form is not closed");
  WeightedDiagram d;
  d.flag_report = validate_flag(g, f);
  if (!d.flag_report.structural()) throw Error(ErrorCode::InvalidFlag, "flag members must have dimension k, be nested and end at the algebra");
  for (std::size_t k = 0; k < f.members.size(); ++k) d.vertices.push_back({k, f[k], radical(w, f[k]), 0, VertexClass::EndpointLeft});
  for (std::size_t k = 0; k + 1 < d.vertices.size(); ++k) {
    const auto& a = d.vertices[k].h;
    const auto& b = d.vertices[k + 1].h;
    if (b.dim() == a.dim() + 1 && b.contains(a)) {
      d.steps.push_back(Step::Up);
    } else if (a.dim() == b.dim() + 1 && a.contains(b)) {
      if (d.flag_report.composition_series() && !is_ideal_in(g, b, a))
        throw Error(ErrorCode::NestingViolation, "kernel at k=" + std::to_string(k + 1) + " is not an ideal of the kernel at k=" + std::to_string(k));
      d.steps.push_back(Step::Down);
    } else {
      throw Error(ErrorCode::NestingViolation, "kernels at k=" + std::to_string(k) + " and k=" + std::to_string(k + 1) + " are not nested");
    }
  }
  classify_vertices(d);
  return d;
}

struct Run {
  Step dir;
  std::size_t length;
};

struct Contraction {
  std::vector<Run> runs;
  std::vector<Vertex> separators;  // singular vertex between runs[i] and runs[i+1]
};

inline Contraction contract(const WeightedDiagram& d) {
  Contraction c;
  for (std::size_t k = 0; k < d.steps.size(); ++k) {
    if (!c.runs.empty() && c.runs.back().dir == d.steps[k]) {
      ++c.runs.back().length;
      continue;
    }
    if (!c.runs.empty()) c.separators.push_back(d.vertices[k]);
    c.runs.push_back({d.steps[k], 1});
  }
  return c;
}

inline std::vector<Step> uncontract(const Contraction& c) {
  std::vector<Step> out;
  for (const auto& r : c.runs) out.insert(out.end(), r.length, r.dir);
  return out;
}

inline std::string contraction_text(const Contraction& c) {
  std::string s;
  for (std::size_t i = 0; i < c.runs.size(); ++i) {
    if (i > 0) {
      const auto& v = c.separators[i - 1];
      s += " S" + std::to_string(v.k) + "(" + class_name(v.cls) + ", w=" + to_string(v.weight) + ") ";
    }
    s += "[" + std::string(step_name(c.runs[i].dir)) + " x" + std::to_string(c.runs[i].length) + "]";
  }
  return s.empty() ? "[]" : s;
}

struct Predicates {
  bool connected = false;
  bool simple = false;
  bool semi_normal = false;
  bool semi_simple = false;
  bool semi_nilpotent = false;
};

inline bool weight_zero_singular(const Vertex& v) { return v.singular() && v.weight == 0; }

inline Predicates predicates(const LieAlgebra& g, const WeightedDiagram& d) {
  Predicates p;
  std::vector<std::size_t> zeros, singular;
  for (const auto& v : d.vertices) {
    if (v.singular()) singular.push_back(v.k);
    if (weight_zero_singular(v)) zeros.push_back(v.k);
  }
  p.connected = zeros.empty();
  p.simple = p.connected && singular.size() == 1 && d.vertices[singular[0]].cls == VertexClass::SingularAttractive;
  p.semi_normal = true;
  p.semi_nilpotent = true;
  for (auto k : zeros) {
    if (!is_ideal(g, d.vertices[k].g)) p.semi_normal = false;
    if (!is_nilpotent(g, d.vertices[k].g)) p.semi_nilpotent = false;
  }
  std::vector<std::size_t> cuts{0};
  cuts.insert(cuts.end(), zeros.begin(), zeros.end());
  cuts.push_back(d.vertices.size() - 1);
  bool components_simple = true;
  for (std::size_t c = 0; c + 1 < cuts.size(); ++c) {
    std::size_t count = 0;
    bool attractive = true;
    for (std::size_t k = cuts[c] + 1; k < cuts[c + 1]; ++k)
      if (d.vertices[k].singular()) {
        ++count;
        if (d.vertices[k].cls != VertexClass::SingularAttractive) attractive = false;
      }
    if (count != 1 || !attractive) components_simple = false;
  }
  p.semi_simple = p.semi_normal && components_simple;
  return p;
}

struct SingularPair {
  Subspace g, h;
};

inline std::vector<SingularPair> equivalence_key(const WeightedDiagram& d) {
  std::vector<SingularPair> key;
  for (const auto& v : d.vertices)
    if (v.singular()) key.push_back({v.g, v.h});
  std::sort(key.begin(), key.end(), [](const SingularPair& a, const SingularPair& b) {
    int c = canonical_compare(a.g, b.g);
    return c != 0 ? c < 0 : canonical_less(a.h, b.h);
  });
  return key;
}

inline bool equivalent(const WeightedDiagram& a, const WeightedDiagram& b) {
  auto ka = equivalence_key(a), kb = equivalence_key(b);
  if (ka.size() != kb.size()) return false;
  for (std::size_t i = 0; i < ka.size(); ++i)
    if (!(ka[i].g == kb[i].g) || !(ka[i].h == kb[i].h)) return false;
  return true;
}

enum class Template { Alpha, Beta, Gamma, Delta, Disconnected, Other };

inline const char* template_name(Template t) {
  switch (t) {
    case Template::Alpha: return "alpha";
    case Template::Beta: return "beta";
    case Template::Gamma: return "gamma";
    case Template::Delta: return "delta";
    case Template::Disconnected: return "disconnected";
    case Template::Other: return "other";
  }
  return "";
}

inline Template match_template(const WeightedDiagram& d) {
  for (const auto& v : d.vertices)
    if (weight_zero_singular(v)) return Template::Disconnected;
  std::vector<VertexClass> seq;
  for (const auto& v : d.vertices)
    if (v.singular()) seq.push_back(v.cls);
  if (d.steps.empty()) return Template::Other;
  const Step last = d.steps.back();
  using VC = VertexClass;
  const std::vector<VC> a{VC::SingularAttractive}, ar{VC::SingularAttractive, VC::SingularRepulsive},
      ara{VC::SingularAttractive, VC::SingularRepulsive, VC::SingularAttractive},
      arar{VC::SingularAttractive, VC::SingularRepulsive, VC::SingularAttractive, VC::SingularRepulsive};
  if (seq == a && last == Step::Down) return Template::Delta;
  if (seq == ar && last == Step::Up) return Template::Gamma;
  if (seq == ara && last == Step::Down) return Template::Beta;
  if (seq == arar && last == Step::Up) return Template::Alpha;
  return Template::Other;
}

}  // namespace sympdiag
