#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sympdiag/eigen.hpp"
#include "sympdiag/lie_algebra.hpp"

namespace sympdiag {

// members[k] is the k-th member; members[0] is the zero subspace.
struct Flag {
  std::vector<Subspace> members;

  std::size_t length() const { return members.empty() ? 0 : members.size() - 1; }
  const Subspace& operator[](std::size_t k) const { return members[k]; }
  friend bool operator==(const Flag& a, const Flag& b) { return a.members == b.members; }
};

// Prepends the zero subspace to a list of nonzero members.
inline Flag flag_from_members(std::size_t ambient, const std::vector<Subspace>& nonzero) {
  Flag f;
  f.members.push_back(Subspace(ambient));
  f.members.insert(f.members.end(), nonzero.begin(), nonzero.end());
  return f;
}

struct FlagIssue {
  enum class Kind { Dimension, NotNested, NotSubalgebra, NotIdealInNext, DoesNotReachAlgebra } kind;
  std::size_t k;
};

inline const char* issue_name(FlagIssue::Kind k) {
  switch (k) {
    case FlagIssue::Kind::Dimension: return "dimension";
    case FlagIssue::Kind::NotNested: return "not nested in next member";
    case FlagIssue::Kind::NotSubalgebra: return "not a subalgebra";
    case FlagIssue::Kind::NotIdealInNext: return "not an ideal of next member";
    case FlagIssue::Kind::DoesNotReachAlgebra: return "last member is not the algebra";
  }
  return "";
}

struct FlagReport {
  std::vector<FlagIssue> issues;
  std::vector<bool> normal;  // member k is an ideal of g

  bool has(FlagIssue::Kind kind) const {
    for (const auto& i : issues)
      if (i.kind == kind) return true;
    return false;
  }
  // dims, nesting and reaching g: enough to compute a kernel chain
  bool structural() const {
    return !has(FlagIssue::Kind::Dimension) && !has(FlagIssue::Kind::NotNested) &&
           !has(FlagIssue::Kind::DoesNotReachAlgebra);
  }
  bool composition_series() const { return issues.empty(); }
  bool all_normal() const {
    for (bool b : normal)
      if (!b) return false;
    return true;
  }
};

inline FlagReport validate_flag(const LieAlgebra& g, const Flag& f) {
  FlagReport rep;
  const auto& m = f.members;
  for (std::size_t k = 0; k < m.size(); ++k) {
    if (m[k].dim() != k) rep.issues.push_back({FlagIssue::Kind::Dimension, k});
    if (!is_subalgebra(g, m[k])) rep.issues.push_back({FlagIssue::Kind::NotSubalgebra, k});
    if (k + 1 < m.size()) {
      if (!m[k + 1].contains(m[k]))
        rep.issues.push_back({FlagIssue::Kind::NotNested, k});
      else if (!is_ideal_in(g, m[k], m[k + 1]))
        rep.issues.push_back({FlagIssue::Kind::NotIdealInNext, k});
    }
    rep.normal.push_back(is_ideal(g, m[k]));
  }
  if (m.empty() || !m.back().is_full()) rep.issues.push_back({FlagIssue::Kind::DoesNotReachAlgebra, m.size()});
  return rep;
}

namespace detail {

// Picks a line of f.top()/f.sub() spanned by a common eigenvector of ad(acting),
// the one giving the canonically least enlarged subspace.
inline std::optional<Vector> choose_eigen_line(const LieAlgebra& g, const std::vector<Vector>& acting, const QuotientFrame& f) {
  auto spaces = common_eigenspaces(induced_action(g, acting, f), f.dim());
  std::optional<Vector> best;
  Subspace best_space;
  for (const auto& es : spaces) {
    Vector v = f.lift(es.space.basis().front());
    Subspace cand = add_vector(f.sub(), v);
    if (!best || canonical_less(cand, best_space)) {
      best = v;
      best_space = std::move(cand);
    }
  }
  return best;
}

// Members strictly between s and t (exclusive of s, inclusive of t), or nullopt when s is not subnormal in t.
inline std::optional<std::vector<Subspace>> fill_between(const LieAlgebra& g, const Subspace& s, const Subspace& t) {
  std::vector<Subspace> levels{t};
  while (!(levels.back() == s)) {
    Subspace next = s + bracket_space(g, levels.back(), levels.back());
    if (next == levels.back()) return std::nullopt;
    levels.push_back(std::move(next));
  }
  std::vector<Subspace> out;
  for (std::size_t i = levels.size() - 1; i-- > 0;) {
    Subspace cur = levels[i + 1];
    const Subspace& top = levels[i];
    while (cur.dim() < top.dim()) {
      Subspace n = intersect(normalizer_of_in(g, cur, g.whole()), normalizer_of_in(g, top, g.whole()));
      QuotientFrame frame(cur, top);
      auto v = choose_eigen_line(g, n.basis(), frame);
      cur = add_vector(cur, v ? *v : frame.representatives().basis().front());
      out.push_back(cur);
    }
  }
  return out;
}

}  // namespace detail

enum class SolvabilityVerdict { CompletelySolvable, NotSolvable, UndecidedIrrationalSpectrum };

inline const char* verdict_name(SolvabilityVerdict v) {
  switch (v) {
    case SolvabilityVerdict::CompletelySolvable: return "COMPLETELY_SOLVABLE";
    case SolvabilityVerdict::NotSolvable: return "NOT_SOLVABLE";
    case SolvabilityVerdict::UndecidedIrrationalSpectrum: return "UNDECIDED_IRRATIONAL_SPECTRUM";
  }
  return "";
}

struct SolvabilityCertificate {
  SolvabilityVerdict verdict;
  std::optional<Flag> witness;
  std::size_t stalled_at = 0;  // dimension of the ideal reached before stalling
};

inline SolvabilityCertificate complete_solvability_certificate(const LieAlgebra& g) {
  if (!is_solvable(g)) return {SolvabilityVerdict::NotSolvable, std::nullopt, 0};
  std::vector<Vector> acting;
  for (std::size_t i = 0; i < g.dim(); ++i) acting.push_back(g.basis_vector(i));
  Flag f;
  f.members.push_back(g.zero());
  while (f.members.back().dim() < g.dim()) {
    QuotientFrame frame(f.members.back(), g.whole());
    auto v = detail::choose_eigen_line(g, acting, frame);
    if (!v) return {SolvabilityVerdict::UndecidedIrrationalSpectrum, std::nullopt, f.members.back().dim()};
    f.members.push_back(add_vector(f.members.back(), *v));
  }
  return {SolvabilityVerdict::CompletelySolvable, f, g.dim()};
}

// Flag of ideals of g, or nullopt with the certificate verdict explaining why.
inline SolvabilityCertificate find_normal_flag(const LieAlgebra& g) { return complete_solvability_certificate(g); }

struct FlagCompletion {
  bool complete = false;
  Flag flag;
  std::optional<Subspace> stalled_below;  // chain member above which no descent exists
};

inline FlagCompletion complete_flag_through(const LieAlgebra& g, const std::vector<Subspace>& chain) {
  for (std::size_t i = 0; i < chain.size(); ++i) {
    if (!is_subalgebra(g, chain[i])) throw Error(ErrorCode::NotSubalgebra, "chain member " + std::to_string(i) + " is not a subalgebra");
    if (i + 1 < chain.size() && (!chain[i + 1].contains(chain[i]) || chain[i + 1].dim() <= chain[i].dim()))
      throw Error(ErrorCode::ChainNotNested, "chain is not strictly increasing at member " + std::to_string(i));
  }
  std::vector<Subspace> full{g.zero()};
  for (const auto& c : chain)
    if (c.dim() > full.back().dim()) full.push_back(c);
  if (!full.back().is_full()) full.push_back(g.whole());

  FlagCompletion out;
  out.flag.members.push_back(g.zero());
  for (std::size_t i = 0; i + 1 < full.size(); ++i) {
    auto step = detail::fill_between(g, full[i], full[i + 1]);
    if (!step) {
      out.stalled_below = full[i + 1];
      return out;
    }
    out.flag.members.insert(out.flag.members.end(), step->begin(), step->end());
  }
  out.complete = true;
  return out;
}

}  // namespace sympdiag
