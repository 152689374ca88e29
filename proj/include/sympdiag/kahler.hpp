#pragma once

#include <optional>
#include <string>

#include "sympdiag/reduction.hpp"

namespace sympdiag {

struct KahlerPremiseResult {
  bool premise = false;
  std::optional<DeformResult> deformed;
  std::string note;
};

// Premise: [g,g] is nonzero and the form restricted to it is nondegenerate.
// When it holds, a flag through [g,g] is deformed into one with a simple diagram.
inline KahlerPremiseResult kahler_premise_pipeline(const LieAlgebra& g, const TwoForm& w) {
  if (!is_closed(g, w)) throw Error(ErrorCode::NotClosed, "2-form is not closed");
  KahlerPremiseResult r;
  const Subspace dg = derived_algebra(g);
  if (dg.is_zero()) {
    r.note = "derived algebra is zero; premise false by convention";
    return r;
  }
  if (rank(w, dg) != dg.dim()) {
    r.note = "form is degenerate on the derived algebra";
    return r;
  }
  r.premise = true;
  auto through = complete_flag_through(g, {dg});
  if (!through.complete) throw Error(ErrorCode::Incomplete, "no composition series through the derived algebra");
  r.deformed = deform_to_simple(g, w, through.flag);
  r.note = "deformed a flag through the derived algebra";
  return r;
}

}  // namespace sympdiag
