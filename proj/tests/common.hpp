#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "oracle.hpp"
#include "sympdiag/cli.hpp"

namespace testutil {

inline const std::vector<std::string>& corpus_names() {
  static const std::vector<std::string> names{"D1", "E1", "E2", "NF1", "R4", "X1", "X2", "X3"};
  return names;
}

inline std::string corpus_path(const std::string& name) { return std::string(SYMPDIAG_CORPUS_DIR) + "/" + name + ".json"; }

inline std::string read(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline sympdiag::Document load(const std::string& name) { return sympdiag::parse_document(read(corpus_path(name))); }

inline oracle::Document load_oracle(const std::string& name) { return oracle::load(corpus_path(name)); }

inline oracle::Vec to_oracle(const sympdiag::Vector& v) { return oracle::Vec(v.begin(), v.end()); }

inline std::vector<oracle::Vec> to_oracle(const sympdiag::Subspace& s) {
  std::vector<oracle::Vec> out;
  for (const auto& v : s.basis()) out.push_back(to_oracle(v));
  return out;
}

inline bool same(const sympdiag::Subspace& s, const std::vector<oracle::Vec>& o) {
  return oracle::same_span(to_oracle(s), o, s.ambient());
}

struct RunResult {
  int status;
  std::string out, err;
};

inline RunResult run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int st = sympdiag::run_command(args, out, err);
  return {st, out.str(), err.str()};
}

// The E1 brackets exactly as printed, which do not make the printed form closed.
inline sympdiag::LieAlgebra e1_printed_algebra() {
  using namespace sympdiag;
  std::map<LieAlgebra::Key, Vector> up;
  auto e = [](std::size_t i) { return unit_vector(5, i); };
  // basis c b a v u
  up[{2, 1}] = e(0);   // [a,b] = c
  up[{4, 0}] = e(0);   // [u,c] = c
  up[{3, 0}] = e(0);   // [v,c] = c
  up[{4, 2}] = e(2);   // [u,a] = a
  up[{3, 1}] = e(1);   // [v,b] = b
  return LieAlgebra::from_upper({"c", "b", "a", "v", "u"}, up);
}

inline sympdiag::TwoForm e1_form() {
  // a*^v* + b*^u* + v*^u*
  return sympdiag::TwoForm::from_entries(5, {{2, 3, 1}, {1, 4, 1}, {3, 4, 1}});
}

inline sympdiag::Subspace span(const sympdiag::LieAlgebra& g, const std::vector<std::string>& names) {
  std::vector<sympdiag::Vector> vs;
  for (const auto& n : names) vs.push_back(g.basis_vector(g.index_of(n).value()));
  return g.span(vs);
}

}  // namespace testutil
