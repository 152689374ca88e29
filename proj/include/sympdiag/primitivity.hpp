#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "sympdiag/diagram.hpp"
#include "sympdiag/lagrangian.hpp"

namespace sympdiag {

struct PairPresentation {
  LieAlgebra algebra;
  Subspace isotropy;  // h
};

enum class PrimitivityStatus { Primitive, NotPrimitive, QuasiPrimitive, NotQuasiPrimitive, Unknown };

inline const char* status_name(PrimitivityStatus s) {
  switch (s) {
    case PrimitivityStatus::Primitive: return "PRIMITIVE";
    case PrimitivityStatus::NotPrimitive: return "NOT_PRIMITIVE";
    case PrimitivityStatus::QuasiPrimitive: return "QUASI_PRIMITIVE";
    case PrimitivityStatus::NotQuasiPrimitive: return "NOT_QUASI_PRIMITIVE";
    case PrimitivityStatus::Unknown: return "UNKNOWN";
  }
  return "";
}

struct PrimitivityVerdict {
  PrimitivityStatus status;
  std::optional<Subspace> witness;
  std::vector<std::string> searched;
};

inline bool transitive_test(const PairPresentation& p, const Subspace& s) {
  if (!is_subalgebra(p.algebra, s)) throw Error(ErrorCode::NotSubalgebra, "candidate is not a subalgebra");
  return (s + p.isotropy).is_full();
}

namespace detail {

// Hyperplane ideal ker(phi), phi vanishing on [g,g] but not on h.
inline std::optional<Subspace> transitive_ideal_hyperplane(const LieAlgebra& g, const Subspace& h) {
  const Subspace ann = annihilator(derived_algebra(g));
  for (const auto& phi : ann.basis())
    for (const auto& v : h.basis())
      if (dot(phi, v) != 0) return kernel_of(g.dim(), {phi});
  return std::nullopt;
}

inline bool nonzero_on(const Covector& phi, const Subspace& h) {
  for (const auto& v : h.basis())
    if (dot(phi, v) != 0) return true;
  return false;
}

// dphi ^ phi = 0 over single dual-basis covectors and pencils e_i^* + t e_j^*.
inline std::vector<Subspace> pencil_hyperplanes(const LieAlgebra& g, const Subspace& h, std::size_t budget, bool& exhausted) {
  const std::size_t n = g.dim();
  std::vector<Subspace> out;
  exhausted = false;
  auto accept = [&](const Covector& phi) {
    if (!nonzero_on(phi, h)) return;
    Subspace k = kernel_of(n, {phi});
    if (is_subalgebra(g, k)) out.push_back(k);
  };
  std::vector<TwoForm> d;
  for (std::size_t i = 0; i < n; ++i) d.push_back(ce_differential(g, g.basis_vector(i)));
  for (std::size_t i = 0; i < n; ++i)
    if (wedge(d[i], g.basis_vector(i)).is_zero()) accept(g.basis_vector(i));
  std::size_t used = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      if (++used > budget) {
        exhausted = true;
        return out;
      }
      Vector a = g.basis_vector(i), b = g.basis_vector(j);
      ThreeForm c0 = wedge(d[i], a), c2 = wedge(d[j], b);
      ThreeForm x = wedge(d[i], b), y = wedge(d[j], a);
      std::vector<Polynomial> polys;
      for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = p + 1; q < n; ++q)
          for (std::size_t r = q + 1; r < n; ++r) {
            Polynomial poly{c0.at(p, q, r), x.at(p, q, r) + y.at(p, q, r), c2.at(p, q, r)};
            if (poly[0] != 0 || poly[1] != 0 || poly[2] != 0) polys.push_back(poly);
          }
      std::vector<Rational> ts;
      if (polys.empty()) {
        for (long t = 1; t <= static_cast<long>(h.dim()) + 2; ++t) ts.push_back(t);
      } else {
        for (const auto& t : rational_roots(polys.front())) {
          bool all = true;
          for (const auto& poly : polys)
            if (evaluate(poly, t) != 0) all = false;
          if (all && t != 0) ts.push_back(t);
        }
      }
      for (const auto& t : ts) {
        Covector phi = a;
        phi[j] = t;
        if (nonzero_on(phi, h)) {
          accept(phi);
          break;
        }
      }
    }
  return out;
}

}  // namespace detail

inline PrimitivityVerdict primitive_test(const PairPresentation& p) {
  const auto& g = p.algebra;
  if (!is_solvable(g)) throw Error(ErrorCode::NotSolvable, "primitivity test needs a solvable algebra");
  PrimitivityVerdict v{PrimitivityStatus::Primitive, std::nullopt, {"hyperplane ideals"}};
  if (auto w = detail::transitive_ideal_hyperplane(g, p.isotropy)) {
    v.status = PrimitivityStatus::NotPrimitive;
    v.witness = *w;
  }
  return v;
}

// Transitive hyperplane subalgebras found by both modes, canonically ordered.
inline std::vector<Subspace> transitive_hyperplanes(const LieAlgebra& g, const Subspace& h, std::size_t budget, bool& exhausted) {
  std::vector<Subspace> out;
  if (auto w = detail::transitive_ideal_hyperplane(g, h)) out.push_back(*w);
  for (auto& s : detail::pencil_hyperplanes(g, h, budget, exhausted)) out.push_back(std::move(s));
  std::sort(out.begin(), out.end(), canonical_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

inline PrimitivityVerdict quasi_primitive_test(const PairPresentation& p, std::size_t budget = 10000) {
  const auto& g = p.algebra;
  PrimitivityVerdict v{PrimitivityStatus::Unknown, std::nullopt, {"hyperplane ideals", "single covectors", "rational pencils"}};
  if (auto w = detail::transitive_ideal_hyperplane(g, p.isotropy)) {
    v.status = PrimitivityStatus::NotQuasiPrimitive;
    v.witness = *w;
    return v;
  }
  if (p.isotropy.is_zero() || is_nilpotent(g)) {
    v.status = PrimitivityStatus::QuasiPrimitive;
    return v;
  }
  bool exhausted = false;
  auto found = detail::pencil_hyperplanes(g, p.isotropy, budget, exhausted);
  if (!found.empty()) {
    std::sort(found.begin(), found.end(), canonical_less);
    v.status = PrimitivityStatus::NotQuasiPrimitive;
    v.witness = found.front();
  }
  return v;
}

struct Degrees {
  Rational r, d_lower, d_within_search;
};

inline Rational degree_of(std::size_t dim_g, std::size_t dim_h) {
  return Rational(static_cast<long>(dim_h), static_cast<long>(dim_g - dim_h + 1));
}

inline Degrees degrees(const PairPresentation& p, std::size_t budget = 10000) {
  const auto& g = p.algebra;
  Degrees d;
  d.r = degree_of(g.dim(), p.isotropy.dim());
  d.d_within_search = d.r;
  std::set<Subspace, detail::CanonicalLess> seen{g.whole()};
  std::vector<Subspace> stack{g.whole()};
  while (!stack.empty()) {
    Subspace s = stack.back();
    stack.pop_back();
    Subspace hs = intersect(s, p.isotropy);
    d.d_within_search = std::min(d.d_within_search, degree_of(s.dim(), hs.dim()));
    if (hs.is_zero()) continue;
    LieAlgebra sub = induced_subalgebra(g, s);
    Subspace hsub = Subspace::span(s.dim(), [&] {
      std::vector<Vector> vs;
      for (const auto& v : hs.basis()) vs.push_back(s.coordinates(v));
      return vs;
    }());
    bool exhausted = false;
    for (const auto& t : transitive_hyperplanes(sub, hsub, budget, exhausted)) {
      std::vector<Vector> vs;
      for (const auto& c : t.basis()) vs.push_back(s.lift(c));
      Subspace lifted = g.span(vs);
      if (seen.insert(lifted).second) stack.push_back(lifted);
    }
  }
  d.d_lower = d.d_within_search == 0 ? Rational(0) : d.r;
  return d;
}

struct IdealConditionsReport {
  bool a1 = false;  // the smallest ideal containing h is g
  bool a2 = false;  // [g,g] + h = g
  bool equivalent() const { return a1 == a2; }
};

inline IdealConditionsReport ideal_conditions_audit(const LieAlgebra& g, const TwoForm& w) {
  const Subspace h = radical(w);
  IdealConditionsReport r;
  r.a2 = (derived_algebra(g) + h).is_full();
  r.a1 = ideal_closure(g, h).is_full();
  return r;
}

struct SingularBoundEntry {
  std::size_t flag_index;
  bool computed = false;
  bool connected = false;
  std::size_t singular_count = 0;
  bool within_four = true;
  bool within_three = true;  // only meaningful for quasi-primitive pairs
};

struct SingularBoundReport {
  PrimitivityStatus pair_status;
  std::vector<SingularBoundEntry> entries;
  std::vector<std::size_t> violations;  // flag indices
};

inline SingularBoundReport singular_bound_audit(const LieAlgebra& g, const TwoForm& w, const std::vector<Flag>& flags) {
  SingularBoundReport rep;
  rep.pair_status = quasi_primitive_test({g, radical(w)}).status;
  for (std::size_t i = 0; i < flags.size(); ++i) {
    SingularBoundEntry e{i};
    try {
      auto d = kernel_chain(g, w, flags[i]);
      e.computed = true;
      e.connected = predicates(g, d).connected;
      e.singular_count = d.singular_indices().size();
    } catch (const Error&) {
      rep.entries.push_back(e);
      continue;
    }
    if (e.connected) {
      e.within_four = e.singular_count <= 4;
      e.within_three = e.singular_count <= 3;
      if (!e.within_four || (rep.pair_status == PrimitivityStatus::QuasiPrimitive && !e.within_three)) rep.violations.push_back(i);
    }
    rep.entries.push_back(e);
  }
  return rep;
}

}  // namespace sympdiag
