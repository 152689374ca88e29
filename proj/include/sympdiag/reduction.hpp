#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sympdiag/lagrangian.hpp"

namespace sympdiag {

struct SemidirectSplit {
  Subspace nil_ideal;   // g_{2m}
  Subspace complement;  // w-orthogonal of nil_ideal
  Subspace iso_part;    // g_{S''} intersected with the complement
  std::size_t repulsive_k = 0;
  std::size_t attractive_k = 0;
};

inline SemidirectSplit split_at_repulsive(const LieAlgebra& g, const TwoForm& w, const WeightedDiagram& d) {
  std::optional<std::size_t> ks;
  for (const auto& v : d.vertices)
    if (v.cls == VertexClass::SingularRepulsive && v.weight == 0) {
      ks = v.k;
      break;
    }
  if (!ks) throw Error(ErrorCode::NoRepulsiveVertex, "diagram has no weight-zero repulsive vertex");
  auto fail = [](const std::string& clause) { throw Error(ErrorCode::SplitInvariantFailed, clause); };

  SemidirectSplit s;
  s.repulsive_k = *ks;
  s.nil_ideal = d.vertices[*ks].g;
  if (!is_ideal(g, s.nil_ideal)) fail("nil_ideal is not an ideal");
  if (!is_nilpotent(g, s.nil_ideal)) fail("nil_ideal is not nilpotent");
  if (rank(w, s.nil_ideal) != s.nil_ideal.dim()) fail("form is degenerate on nil_ideal");
  s.complement = symplectic_orthogonal(w, s.nil_ideal);
  if (!is_subalgebra(g, s.complement)) fail("complement is not a subalgebra");
  if (s.complement.dim() + s.nil_ideal.dim() != g.dim() || !intersect(s.complement, s.nil_ideal).is_zero())
    fail("nil_ideal and complement are not supplementary");
  std::optional<std::size_t> ka;
  for (std::size_t k = *ks + 1; k < d.vertices.size(); ++k)
    if (d.vertices[k].cls == VertexClass::SingularAttractive) {
      ka = k;
      break;
    }
  if (!ka) fail("no attractive vertex to the right of the repulsive vertex");
  s.attractive_k = *ka;
  s.iso_part = intersect(d.vertices[*ka].g, s.complement);
  if (!s.iso_part.contains(radical(w))) fail("iso_part does not contain the radical");
  if (!is_isotropic(w, s.iso_part)) fail("form does not vanish on iso_part");
  return s;
}

// members[j] = g_{2m-j} and kernels[j] = h_j for j = 0..m.
struct DescentChain {
  std::vector<Subspace> members;
  std::vector<Subspace> kernels;
};

namespace detail {

inline bool invariant_under(const LieAlgebra& g, const Subspace& acting, const Subspace& s) {
  for (const auto& x : acting.basis())
    for (const auto& y : s.basis())
      if (!s.contains(g.bracket(x, y))) return false;
  return true;
}

}  // namespace detail

inline DescentChain equivariant_descent(const LieAlgebra& g, const SemidirectSplit& split, const TwoForm& w) {
  DescentChain c;
  const std::size_t m = split.nil_ideal.dim() / 2;
  c.members.push_back(split.nil_ideal);
  c.kernels.push_back(g.zero());
  auto stuck = [](const std::string& why) { throw Error(ErrorCode::DescentStuck, why); };
  for (std::size_t j = 0; j < m; ++j) {
    const Subspace& cur = c.members[j];
    const Subspace& hj = c.kernels[j];
    if (!cur.contains(hj)) stuck("kernel leaves the descent member");
    if (!detail::invariant_under(g, split.complement, cur)) stuck("member is not invariant under the complement");
    if (!detail::invariant_under(g, split.complement, hj)) stuck("kernel is not invariant under the complement");
    if (!(radical(w, cur) == hj)) stuck("radical of the member differs from the kernel");
    if (!is_isotropic(w, hj + split.iso_part)) stuck("form does not vanish on kernel + iso_part");
    Subspace base = hj + bracket_space(g, cur, cur);
    if (base == cur) stuck("no hyperplane contains the kernel and the derived algebra");
    QuotientFrame frame(base, cur);
    std::vector<Matrix> dual;
    for (auto& mtx : induced_action(g, split.complement.basis(), frame)) dual.push_back(mtx.transpose());
    auto spaces = common_eigenspaces(dual, frame.dim());
    if (spaces.empty()) throw Error(ErrorCode::IrrationalSpectrum, "no rational invariant hyperplane");
    std::optional<Subspace> best;
    for (const auto& es : spaces) {
      const Vector& phi = es.space.basis().front();
      Subspace hyper = kernel_of(frame.dim(), {phi});
      Subspace pre = base;
      for (const auto& v : hyper.basis()) pre = add_vector(pre, frame.lift(v));
      if (!best || canonical_less(pre, *best)) best = pre;
    }
    Subspace next_h = radical(w, *best);
    if (next_h.dim() != j + 1 || !next_h.contains(hj)) stuck("kernel dimension off at descent step " + std::to_string(j + 1));
    c.members.push_back(*best);
    c.kernels.push_back(next_h);
  }
  if (!(c.kernels.back() == c.members.back())) stuck("final member is not isotropic");
  return c;
}

struct DeformResult {
  Flag flag;
  std::string method;  // identity, assembled, through-constructed-lagrangian, lagrangian-search
  std::size_t passes = 0;
  bool assembled_composition_series = true;
};

namespace detail {

// The assembled flag: inside a through h, then h_j + a, then g_{2m-j} + a, then the original members above S''.
inline std::optional<Flag> assemble_deformed(const LieAlgebra& g, const TwoForm& w, const Flag& f, const SemidirectSplit& s,
                                             const DescentChain& c) {
  const Subspace h = radical(w);
  const Subspace& a = s.iso_part;
  Flag out;
  out.members.push_back(g.zero());
  auto below = fill_between(g, g.zero(), h);
  if (!below) return std::nullopt;
  out.members.insert(out.members.end(), below->begin(), below->end());
  auto inside = fill_between(g, h, a);
  if (!inside) return std::nullopt;
  out.members.insert(out.members.end(), inside->begin(), inside->end());
  const std::size_t m = c.kernels.size() - 1;
  for (std::size_t j = 1; j <= m; ++j) out.members.push_back(c.kernels[j] + a);
  for (std::size_t j = m; j-- > 0;) out.members.push_back(c.members[j] + a);
  for (std::size_t k = s.attractive_k + 1; k < f.members.size(); ++k) out.members.push_back(f[k]);
  return out;
}

inline std::optional<Flag> flag_through(const LieAlgebra& g, const TwoForm& w, const Subspace& l) {
  if (!verify_lagrangian(g, w, l).verified) return std::nullopt;
  Subspace rad = radical(w);
  std::vector<Subspace> chain;
  if (!rad.is_zero() && rad.dim() < l.dim()) chain.push_back(rad);
  chain.push_back(l);
  auto done = complete_flag_through(g, chain);
  if (!done.complete) return std::nullopt;
  return done.flag;
}

inline void check_simple_result(const LieAlgebra& g, const TwoForm& w, const Flag& f) {
  if (!validate_flag(g, f).composition_series()) throw Error(ErrorCode::Internal, "deformed flag is not a composition series");
  auto d = kernel_chain(g, w, f);
  if (!predicates(g, d).simple) throw Error(ErrorCode::Internal, "deformed flag does not give a simple diagram");
  const auto& sv = d.vertices[d.singular_indices().front()];
  if (!sv.g.contains(radical(w)) || !is_isotropic(w, sv.g) || sv.g.dim() != rank(w) / 2 + radical(w).dim())
    throw Error(ErrorCode::Internal, "singular vertex of the deformed flag is not Lagrangian");
}

}  // namespace detail

inline DeformResult deform_to_simple(const LieAlgebra& g, const TwoForm& w, const Flag& f) {
  auto d = kernel_chain(g, w, f);
  auto p = predicates(g, d);
  if (p.simple) return {f, "identity", 0, true};
  if (!p.semi_simple) throw Error(ErrorCode::NotSemisimple, "diagram is not semi-simple");
  if (!p.semi_nilpotent) throw Error(ErrorCode::NotSeminilpotent, "diagram is not semi-nilpotent");

  DeformResult res;
  Flag cur = f;
  std::optional<Subspace> constructed;
  bool valid = true;
  for (std::size_t pass = 1; pass <= g.dim(); ++pass) {
    auto s = split_at_repulsive(g, w, d);
    auto c = equivariant_descent(g, s, w);
    res.passes = pass;
    constructed = c.members.back() + s.iso_part;
    auto next = detail::assemble_deformed(g, w, cur, s, c);
    if (!next || !validate_flag(g, *next).composition_series()) {
      valid = false;
      break;
    }
    cur = *next;
    d = kernel_chain(g, w, cur);
    p = predicates(g, d);
    if (p.simple) {
      res.flag = cur;
      res.method = "assembled";
      detail::check_simple_result(g, w, res.flag);
      return res;
    }
    if (!p.semi_simple || !p.semi_nilpotent) {
      valid = false;
      break;
    }
  }
  res.assembled_composition_series = valid;
  if (constructed) {
    if (auto fl = detail::flag_through(g, w, *constructed)) {
      res.flag = *fl;
      res.method = "through-constructed-lagrangian";
      detail::check_simple_result(g, w, res.flag);
      return res;
    }
  }
  auto search = find_lagrangians(g, w, SearchMode::FlagAdapted);
  if (search.found.empty()) throw Error(ErrorCode::DeformationFailed, "no flag with a simple diagram was constructed");
  res.flag = lagrangian_to_flag(g, w, search.found.front());
  res.method = "lagrangian-search";
  detail::check_simple_result(g, w, res.flag);
  return res;
}

struct AuditClause {
  std::string name;
  bool holds;
};

struct ReductionReport {
  Step direction = Step::Up;
  std::vector<AuditClause> clauses;
};

// Algebraic content of one reduction step between (g_k, h_k) and (g_{k+1}, h_{k+1}).
inline ReductionReport audit_step(const LieAlgebra& g, const TwoForm& w, const Subspace& gk, const Subspace& hk,
                                  const Subspace& gk1, const Subspace& hk1) {
  ReductionReport r;
  auto fail = [](const std::string& clause) { throw Error(ErrorCode::AuditFailed, clause); };
  const long mk = static_cast<long>(gk.dim()) - static_cast<long>(hk.dim());
  const long mk1 = static_cast<long>(gk1.dim()) - static_cast<long>(hk1.dim());
  if (hk1.contains(hk) && hk1.dim() == hk.dim() + 1) {
    r.direction = Step::Up;
    r.clauses.push_back({"g_k + h_{k+1} = g_{k+1}", gk + hk1 == gk1});
    r.clauses.push_back({"dim M_k = dim M_{k+1}", mk == mk1});
  } else if (hk.contains(hk1) && hk.dim() == hk1.dim() + 1) {
    r.direction = Step::Down;
    r.clauses.push_back({"h_{k+1} is an ideal of h_k", is_ideal_in(g, hk1, hk)});
    r.clauses.push_back({"dim M_k = dim M_{k+1} - 2", mk == mk1 - 2});
  } else {
    fail("kernels are not nested with codimension 1");
  }
  r.clauses.push_back({"h_k is the radical on g_k", radical(w, gk) == hk});
  r.clauses.push_back({"h_{k+1} is the radical on g_{k+1}", radical(w, gk1) == hk1});
  for (const auto& c : r.clauses)
    if (!c.holds) fail(c.name);
  return r;
}

inline ReductionReport step_audit(const LieAlgebra& g, const TwoForm& w, const Flag& f, std::size_t k) {
  if (k + 1 >= f.members.size()) throw Error(ErrorCode::Usage, "step index out of range");
  return audit_step(g, w, f[k], radical(w, f[k]), f[k + 1], radical(w, f[k + 1]));
}

}  // namespace sympdiag
