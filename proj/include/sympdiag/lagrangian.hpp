#pragma once

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "sympdiag/diagram.hpp"

namespace sympdiag {

struct LagrangianCandidate {
  Subspace subspace;
  bool verified = false;
  std::vector<std::string> reasons;  // why it was rejected
};

// subalgebra, contains the radical of w, isotropic, dim = rank/2 + dim radical
inline LagrangianCandidate verify_lagrangian(const LieAlgebra& g, const TwoForm& w, const Subspace& l) {
  LagrangianCandidate c{l, false, {}};
  Subspace rad = radical(w);
  if (!is_subalgebra(g, l)) c.reasons.push_back("not a subalgebra");
  if (!l.contains(rad)) c.reasons.push_back("does not contain the radical");
  if (!is_isotropic(w, l)) c.reasons.push_back("not isotropic");
  if (l.dim() != rank(w) / 2 + rad.dim()) c.reasons.push_back("wrong dimension");
  c.verified = c.reasons.empty();
  return c;
}

inline Subspace radical_sum(const TwoForm& w, const Flag& f) {
  Subspace s(w.dim());
  for (const auto& m : f.members) s = s + radical(w, m);
  return s;
}

inline LagrangianCandidate vergne_candidate(const LieAlgebra& g, const TwoForm& w, const Flag& f) {
  return verify_lagrangian(g, w, radical_sum(w, f));
}

enum class SearchMode { Vergne, FlagAdapted, Both };
enum class Completeness { ExhaustiveWithinMode, Heuristic };

inline const char* completeness_name(Completeness c) {
  return c == Completeness::ExhaustiveWithinMode ? "EXHAUSTIVE_WITHIN_MODE" : "HEURISTIC";
}

struct SearchVerdict {
  std::vector<Subspace> found;        // verified and subnormal, canonically ordered
  std::vector<Subspace> unflaggable;  // verified but no composition series passes through them
  Completeness completeness = Completeness::Heuristic;
};

namespace detail {

struct CanonicalLess {
  bool operator()(const Subspace& a, const Subspace& b) const { return canonical_less(a, b); }
};

inline std::vector<Vector> flag_generators(const LieAlgebra& g) {
  std::vector<Vector> gens;
  auto cert = find_normal_flag(g);
  std::vector<Subspace> members;
  if (cert.witness)
    members = cert.witness->members;
  else
    members.push_back(g.whole());
  for (const auto& m : members)
    for (const auto& v : m.basis())
      if (std::find(gens.begin(), gens.end(), v) == gens.end()) gens.push_back(v);
  return gens;
}

inline bool flaggable(const LieAlgebra& g, const Subspace& rad, const Subspace& l) {
  std::vector<Subspace> chain;
  if (!rad.is_zero() && rad.dim() < l.dim()) chain.push_back(rad);
  chain.push_back(l);
  return complete_flag_through(g, chain).complete;
}

}  // namespace detail

inline SearchVerdict find_lagrangians(const LieAlgebra& g, const TwoForm& w, SearchMode mode) {
  if (!is_closed(g, w)) throw Error(ErrorCode::NotClosed, "2-form is not closed");
  const Subspace rad = radical(w);
  const std::size_t target = rank(w) / 2 + rad.dim();
  std::set<Subspace, detail::CanonicalLess> found;

  if (mode != SearchMode::FlagAdapted) {
    auto cert = find_normal_flag(g);
    if (cert.witness) {
      auto c = vergne_candidate(g, w, *cert.witness);
      if (c.verified) found.insert(c.subspace);
    }
  }
  if (mode != SearchMode::Vergne) {
    const auto gens = detail::flag_generators(g);
    std::set<Subspace, detail::CanonicalLess> visited;
    auto dfs = [&](auto&& self, const Subspace& s) -> void {
      if (s.dim() == target) {
        found.insert(s);
        return;
      }
      for (const auto& v : gens) {
        if (s.contains(v)) continue;
        Subspace t = subalgebra_closure(g, add_vector(s, v));
        if (t.dim() > target || !is_isotropic(w, t)) continue;
        if (!visited.insert(t).second) continue;
        self(self, t);
      }
    };
    Subspace start = subalgebra_closure(g, rad);
    if (is_isotropic(w, start) && start.dim() <= target) {
      visited.insert(start);
      dfs(dfs, start);
    }
  }

  SearchVerdict out;
  for (const auto& s : found) {
    if (!verify_lagrangian(g, w, s).verified) continue;
    if (detail::flaggable(g, rad, s))
      out.found.push_back(s);
    else
      out.unflaggable.push_back(s);
  }
  out.completeness = (mode != SearchMode::Vergne && is_abelian(g)) ? Completeness::ExhaustiveWithinMode : Completeness::Heuristic;
  return out;
}

// Composition series through the radical and l; its diagram is simple with singular vertex (l, l).
inline Flag lagrangian_to_flag(const LieAlgebra& g, const TwoForm& w, const Subspace& l) {
  auto c = verify_lagrangian(g, w, l);
  if (!c.verified) throw Error(ErrorCode::NotLagrangian, c.reasons.front());
  const Subspace rad = radical(w);
  std::vector<Subspace> chain;
  if (!rad.is_zero() && rad.dim() < l.dim()) chain.push_back(rad);
  chain.push_back(l);
  auto done = complete_flag_through(g, chain);
  if (!done.complete) throw Error(ErrorCode::Incomplete, "no composition series passes through the Lagrangian subalgebra");
  if (rank(w) > 0) {
    auto d = kernel_chain(g, w, done.flag);
    auto sing = d.singular_indices();
    if (!predicates(g, d).simple || !(d.vertices[sing.front()].g == l) || !(d.vertices[sing.front()].h == l))
      throw Error(ErrorCode::Internal, "flag through a Lagrangian subalgebra does not give a simple diagram");
  }
  return done.flag;
}

inline LagrangianCandidate diagram_to_lagrangian(const LieAlgebra& g, const TwoForm& w, const WeightedDiagram& d) {
  if (!predicates(g, d).simple) throw Error(ErrorCode::NotSimple, "diagram is not simple");
  return verify_lagrangian(g, w, d.vertices[d.singular_indices().front()].g);
}

}  // namespace sympdiag
