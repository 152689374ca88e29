#pragma once

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "sympdiag/bilagrangian.hpp"
#include "sympdiag/document.hpp"
#include "sympdiag/kahler.hpp"
#include "sympdiag/lagrangian.hpp"
#include "sympdiag/primitivity.hpp"
#include "sympdiag/reduction.hpp"
#include "sympdiag/render.hpp"

namespace sympdiag {

namespace detail {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Usage, "cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline std::string vector_text(const std::vector<std::string>& basis, const Vector& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    Rational c = v[i];
    if (s.empty()) {
      if (c < 0) s += "-";
    } else {
      s += c < 0 ? " - " : " + ";
    }
    if (c < 0) c = -c;
    if (c != 1) s += to_string(c) + "*";
    s += basis[i];
  }
  return s.empty() ? "0" : s;
}

inline std::string span_text(const std::vector<std::string>& basis, const Subspace& s) {
  if (s.is_zero()) return "0";
  std::string out = "span(";
  for (std::size_t i = 0; i < s.dim(); ++i) out += (i ? ", " : "") + vector_text(basis, s.basis()[i]);
  return out + ")";
}

inline json diagram_json(const Document& doc, const WeightedDiagram& d) {
  const auto& basis = doc.algebra.names();
  json vs = json::array();
  for (const auto& v : d.vertices)
    vs.push_back({{"k", v.k},
                  {"dim_g", v.g.dim()},
                  {"dim_h", v.h.dim()},
                  {"weight", to_string(v.weight)},
                  {"class", class_name(v.cls)},
                  {"h", write_span(basis, v.h)}});
  json steps = json::array();
  for (auto s : d.steps) steps.push_back(step_name(s));
  auto p = predicates(doc.algebra, d);
  json issues = json::array();
  for (const auto& i : d.flag_report.issues) issues.push_back({{"k", i.k}, {"issue", issue_name(i.kind)}});
  return {{"vertices", vs},
          {"steps", steps},
          {"kernel_dims", d.kernel_dims()},
          {"singular", d.singular_indices()},
          {"predicates",
           {{"connected", p.connected},
            {"simple", p.simple},
            {"semi_normal", p.semi_normal},
            {"semi_simple", p.semi_simple},
            {"semi_nilpotent", p.semi_nilpotent}}},
          {"template", template_name(match_template(d))},
          {"flag_issues", issues}};
}

inline void print_predicates(std::ostream& out, const Predicates& p) {
  out << "connected: " << (p.connected ? "true" : "false") << "\n";
  out << "simple: " << (p.simple ? "true" : "false") << "\n";
  out << "semi_normal: " << (p.semi_normal ? "true" : "false") << "\n";
  out << "semi_simple: " << (p.semi_simple ? "true" : "false") << "\n";
  out << "semi_nilpotent: " << (p.semi_nilpotent ? "true" : "false") << "\n";
}

inline bool predicate_value(const Predicates& p, const std::string& name) {
  if (name == "connected") return p.connected;
  if (name == "simple") return p.simple;
  if (name == "semi_normal") return p.semi_normal;
  if (name == "semi_simple") return p.semi_simple;
  if (name == "semi_nilpotent") return p.semi_nilpotent;
  throw Error(ErrorCode::UnknownName, "no predicate named '" + name + "'");
}

// Empty string when the recorded value matches the computed one.
inline std::string check_expectation(const Document& doc, const Expectation& e) {
  const auto& g = doc.algebra;
  const auto& basis = g.names();
  const TwoForm& w = doc.form(e.form);
  if (e.check == "radical") {
    Subspace want = read_span(basis, e.value, "expected.value");
    Subspace got = radical(w);
    return got == want ? "" : "radical is " + span_text(basis, got);
  }
  auto d = kernel_chain(g, w, doc.flag(e.flag));
  if (e.check == "kernel") {
    if (!e.k || *e.k >= d.vertices.size()) return "kernel index out of range";
    Subspace want = read_span(basis, e.value, "expected.value");
    const Subspace& got = d.vertices[*e.k].h;
    return got == want ? "" : "kernel is " + span_text(basis, got);
  }
  if (e.check == "kernel_dims") {
    auto got = d.kernel_dims();
    return json(got) == e.value ? "" : "kernel dims are " + json(got).dump();
  }
  if (e.check == "steps") {
    json got = json::array();
    for (auto s : d.steps) got.push_back(step_name(s));
    return got == e.value ? "" : "steps are " + got.dump();
  }
  if (e.check == "predicate") {
    bool got = predicate_value(predicates(g, d), e.predicate);
    return json(got) == e.value ? "" : e.predicate + " is " + (got ? "true" : "false");
  }
  std::string got = template_name(match_template(d));
  return json(got) == e.value ? "" : "template is " + got;
}

struct AuditLog {
  std::vector<std::pair<std::string, std::string>> lines;  // name, failure detail (empty = pass)
  void add(std::string name, std::string failure) { lines.emplace_back(std::move(name), std::move(failure)); }
  bool ok() const {
    for (const auto& l : lines)
      if (!l.second.empty()) return false;
    return true;
  }
};

inline AuditLog audit_document(const Document& doc) {
  AuditLog log;
  const auto& g = doc.algebra;
  const auto& basis = g.names();
  const std::size_t n = g.dim();

  log.add("algebra: antisymmetry and Jacobi", validate_algebra(g).ok() ? "" : "violations");
  {
    std::string fail;
    for (std::size_t i = 0; i < n && fail.empty(); ++i)
      if (!ce_differential(g, ce_differential(g, g.basis_vector(i))).is_zero()) fail = "d(d e" + std::to_string(i) + "*) != 0";
    log.add("forms: d o d = 0 on the dual basis", fail);
  }
  {
    auto cert = find_normal_flag(g);
    std::string fail;
    if (cert.verdict == SolvabilityVerdict::CompletelySolvable && !validate_flag(g, *cert.witness).all_normal())
      fail = "normal flag witness has a non-ideal member";
    log.add(std::string("flags: solvability certificate ") + verdict_name(cert.verdict), fail);
  }

  for (const auto& [fname, w] : doc.two_forms) {
    const std::string tag = "form " + fname + ": ";
    bool closed = is_closed(g, w);
    log.add(tag + "closed", closed ? "" : "not closed");
    if (!closed) continue;
    log.add(tag + "radical is a subalgebra", is_subalgebra(g, radical(w)) ? "" : "not a subalgebra");

    std::vector<Flag> usable;
    for (const auto& [flname, members] : doc.flags) {
      const std::string ftag = tag + "flag " + flname + ": ";
      Flag f = doc.flag(flname);
      auto rep = validate_flag(g, f);
      if (!rep.structural()) {
        log.add(ftag + "skipped (not a chain of dimensions 0..n)", "");
        continue;
      }
      WeightedDiagram d;
      try {
        d = kernel_chain(g, w, f);
      } catch (const Error& e) {
        log.add(ftag + "kernel chain", e.code() == ErrorCode::NestingViolation && !rep.composition_series()
                                           ? ""
                                           : std::string(e.what()));
        continue;
      }
      usable.push_back(f);
      std::string fail;
      for (std::size_t k = 0; k + 1 < d.vertices.size(); ++k) {
        long dh = static_cast<long>(d.vertices[k + 1].h.dim()) - static_cast<long>(d.vertices[k].h.dim());
        long dr = static_cast<long>(rank(w, d.vertices[k + 1].g)) - static_cast<long>(rank(w, d.vertices[k].g));
        if ((dh != 1 && dh != -1) || (dr != 0 && dr != 2)) fail = "step " + std::to_string(k);
      }
      log.add(ftag + "step dichotomy", fail);
      fail.clear();
      for (const auto& v : d.vertices)
        if (weight_zero_singular(v) && v.cls != VertexClass::SingularRepulsive) fail = "vertex " + std::to_string(v.k);
      log.add(ftag + "weight-zero singular vertices are repulsive", fail);
      if (rep.composition_series()) {
        fail.clear();
        for (std::size_t k = 0; k + 1 < f.members.size(); ++k) {
          try {
            step_audit(g, w, f, k);
          } catch (const Error& e) {
            fail = "step " + std::to_string(k) + ": " + e.what();
            break;
          }
        }
        log.add(ftag + "reduction step audit", fail);
        auto p = predicates(g, d);
        if (p.semi_simple && p.semi_nilpotent) {
          std::string dfail;
          try {
            auto res = deform_to_simple(g, w, f);
            if (!predicates(g, kernel_chain(g, w, res.flag)).simple) dfail = "result not simple";
          } catch (const Error& e) {
            dfail = std::string(e.what());
          }
          log.add(ftag + "deformation to a simple diagram", dfail);
        }
        if (p.simple) {
          std::string lfail;
          auto c = diagram_to_lagrangian(g, w, d);
          if (!c.verified) lfail = c.reasons.front();
          log.add(ftag + "singular vertex of the simple diagram is Lagrangian", lfail);
        }
      }
    }

    auto search = find_lagrangians(g, w, SearchMode::Both);
    for (const auto& l : search.found) {
      std::string fail;
      try {
        Flag f = lagrangian_to_flag(g, w, l);
        auto d = kernel_chain(g, w, f);
        if (rank(w) > 0 && !(diagram_to_lagrangian(g, w, d).subspace == l)) fail = "round trip changed the subspace";
      } catch (const Error& e) {
        fail = std::string(e.what());
      }
      log.add(tag + "Lagrangian " + span_text(basis, l) + " round trip", fail);
    }

    auto ideal_conds = ideal_conditions_audit(g, w);
    log.add(tag + "minimal ideal test agrees with derived algebra test", ideal_conds.equivalent() ? "" : "disagree");
    if (is_solvable(g)) {
      PairPresentation pair{g, radical(w)};
      auto prim = primitive_test(pair);
      std::string fail;
      if (prim.witness && !transitive_test(pair, *prim.witness)) fail = "witness not transitive";
      if (pair.isotropy.is_zero() &&
          (prim.status != PrimitivityStatus::Primitive ||
           quasi_primitive_test(pair).status != PrimitivityStatus::QuasiPrimitive))
        fail = "trivial kernel pair is not primitive";
      log.add(tag + "primitivity verdict " + status_name(prim.status), fail);
    }
    auto bounds = singular_bound_audit(g, w, usable);
    log.add(tag + "singular vertex bounds on connected diagrams", bounds.violations.empty() ? "" : "violations");

    for (const auto& [ln, l] : doc.subspaces)
      for (const auto& [rn, r] : doc.subspaces) {
        if (ln >= rn) continue;
        if (!verify_lagrangian(g, w, l).verified || !verify_lagrangian(g, w, r).verified) continue;
        if (!(intersect(l, r) == radical(w)) || !(l + r).is_full()) continue;
        std::string fail;
        try {
          auto red = reduce_pair(g, w, {l, r});
          auto t = connection(red.algebra, red.form, red.pair);
          if (!audit_connection(red.algebra, red.form, red.pair, t).all()) fail = "connection audit";
        } catch (const Error& e) {
          fail = std::string(e.what());
        }
        log.add(tag + "bilagrangian connection " + ln + "/" + rn, fail);
      }
  }

  for (std::size_t i = 0; i < doc.metadata.expected.size(); ++i) {
    const auto& e = doc.metadata.expected[i];
    std::string fail;
    try {
      fail = check_expectation(doc, e);
    } catch (const Error& ex) {
      fail = std::string(ex.what());
    }
    std::string what = "expected " + e.check;
    if (!e.predicate.empty()) what += " " + e.predicate;
    if (!e.flag.empty()) what += " on " + e.flag;
    if (e.k) what += " at k=" + std::to_string(*e.k);
    log.add(what + " (" + e.origin + ")", fail);
  }

  std::string rt;
  try {
    auto again = parse_document(serialize_document(doc));
    if (serialize_document(again) != serialize_document(doc)) rt = "serialization not stable";
  } catch (const Error& e) {
    rt = e.what();
  }
  log.add("document: parse/serialize round trip", rt);
  return log;
}

}  // namespace detail

// args exclude the program name. Returns the process exit status.
inline int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Kernel-chain diagrams of closed 2-forms on solvable Lie algebras", "sympdiag"};
  app.require_subcommand(1);
  std::string file, form, flag, dot_path, style = "graph", mode = "both", left, right;
  bool as_json = false, contract_flag = false;

  auto* validate = app.add_subcommand("validate", "check a document");
  validate->add_option("file", file)->required();
  validate->add_flag("--json", as_json);

  auto* diagram = app.add_subcommand("diagram", "weighted diagram of a form along a flag");
  diagram->add_option("file", file)->required();
  diagram->add_option("--form", form)->required();
  diagram->add_option("--flag", flag)->required();
  diagram->add_flag("--contract", contract_flag);
  diagram->add_option("--dot", dot_path);
  diagram->add_option("--style", style)->check(CLI::IsMember({"graph", "diagram"}));
  diagram->add_flag("--json", as_json);

  auto* deform = app.add_subcommand("deform", "deform a flag into one with a simple diagram");
  deform->add_option("file", file)->required();
  deform->add_option("--form", form)->required();
  deform->add_option("--flag", flag)->required();
  deform->add_flag("--json", as_json);

  auto* lagr = app.add_subcommand("lagrangians", "Lagrangian subalgebras containing the kernel");
  lagr->add_option("file", file)->required();
  lagr->add_option("--form", form)->required();
  lagr->add_option("--mode", mode)->check(CLI::IsMember({"vergne", "flag-adapted", "both"}));
  lagr->add_flag("--json", as_json);

  auto* bilag = app.add_subcommand("bilagrangian", "connection of a transverse Lagrangian pair");
  bilag->add_option("file", file)->required();
  bilag->add_option("--form", form)->required();
  bilag->add_option("--left", left)->required();
  bilag->add_option("--right", right)->required();
  bilag->add_flag("--json", as_json);

  auto* prim = app.add_subcommand("primitivity", "primitivity of the pair (g, kernel of the form)");
  prim->add_option("file", file)->required();
  prim->add_option("--form", form)->required();
  prim->add_flag("--json", as_json);

  auto* audit = app.add_subcommand("audit", "run every invariant check on a document");
  audit->add_option("file", file)->required();
  audit->add_flag("--json", as_json);

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: USAGE_ERROR: " << e.what() << "\n";
    return 2;
  }

  try {
    const Document doc = parse_document(detail::read_file(file));
    const auto& g = doc.algebra;
    const auto& basis = g.names();

    if (validate->parsed()) {
      json forms = json::object(), flags = json::object();
      for (const auto& [name, w] : doc.two_forms)
        forms[name] = {{"closed", is_closed(g, w)},
                       {"rank", rank(w)},
                       {"radical", detail::span_text(basis, radical(w))}};
      for (const auto& [name, ms] : doc.flags) {
        auto rep = validate_flag(g, doc.flag(name));
        json issues = json::array();
        for (const auto& i : rep.issues) issues.push_back({{"k", i.k}, {"issue", issue_name(i.kind)}});
        flags[name] = {{"composition_series", rep.composition_series()}, {"issues", issues}};
      }
      auto cert = find_normal_flag(g);
      json j = {{"name", doc.name},
                {"dim", g.dim()},
                {"solvability", verdict_name(cert.verdict)},
                {"two_forms", forms},
                {"flags", flags}};
      if (as_json) {
        out << j.dump(2) << "\n";
      } else {
        out << "document " << doc.name << ": dim " << g.dim() << ", " << verdict_name(cert.verdict) << "\n";
        for (const auto& [name, f] : forms.items())
          out << "form " << name << ": closed " << (f["closed"].get<bool>() ? "true" : "false") << ", rank "
              << f["rank"].get<std::size_t>() << ", radical " << f["radical"].get<std::string>() << "\n";
        for (const auto& [name, f] : flags.items()) {
          out << "flag " << name << ": " << (f["composition_series"].get<bool>() ? "composition series" : "not a composition series")
              << "\n";
          for (const auto& i : f["issues"]) out << "  k=" << i["k"].get<std::size_t>() << ": " << i["issue"].get<std::string>() << "\n";
        }
      }
      return 0;
    }

    if (diagram->parsed()) {
      auto d = kernel_chain(g, doc.form(form), doc.flag(flag));
      if (!dot_path.empty()) {
        std::ofstream dot(dot_path, std::ios::binary);
        if (!dot) throw Error(ErrorCode::Usage, "cannot write '" + dot_path + "'");
        dot << render_dot(d, style == "graph" ? DotStyle::Graph : DotStyle::Diagram);
      }
      auto c = contract(d);
      if (as_json) {
        json j = detail::diagram_json(doc, d);
        if (contract_flag) j["contraction"] = contraction_text(c);
        out << j.dump(2) << "\n";
        return 0;
      }
      out << render_table(d);
      if (contract_flag) out << "contraction: " << contraction_text(c) << "  (run length = number of steps)\n";
      detail::print_predicates(out, predicates(g, d));
      out << "template: " << template_name(match_template(d)) << "\n";
      for (const auto& i : d.flag_report.issues) out << "flag issue at k=" << i.k << ": " << issue_name(i.kind) << "\n";
      return 0;
    }

    if (deform->parsed()) {
      const TwoForm& w = doc.form(form);
      auto res = deform_to_simple(g, w, doc.flag(flag));
      auto d = kernel_chain(g, w, res.flag);
      bool simple = predicates(g, d).simple;
      if (as_json) {
        json members = json::array();
        for (const auto& m : res.flag.members) members.push_back(detail::write_span(basis, m));
        out << json{{"method", res.method}, {"passes", res.passes}, {"flag", members}, {"simple", simple},
                    {"diagram", detail::diagram_json(doc, d)}}
                   .dump(2)
            << "\n";
        return 0;
      }
      out << "method: " << res.method << "\n";
      out << "passes: " << res.passes << "\n";
      out << "F0:\n";
      for (std::size_t k = 0; k < res.flag.members.size(); ++k)
        out << "  g" << k << " = " << detail::span_text(basis, res.flag[k]) << "\n";
      out << render_table(d);
      out << "simple: " << (simple ? "true" : "false") << "\n";
      return 0;
    }

    if (lagr->parsed()) {
      SearchMode m = mode == "vergne" ? SearchMode::Vergne : mode == "flag-adapted" ? SearchMode::FlagAdapted : SearchMode::Both;
      auto v = find_lagrangians(g, doc.form(form), m);
      if (as_json) {
        json found = json::array(), unfl = json::array();
        for (const auto& s : v.found) found.push_back(detail::write_span(basis, s));
        for (const auto& s : v.unflaggable) unfl.push_back(detail::write_span(basis, s));
        out << json{{"mode", mode}, {"completeness", completeness_name(v.completeness)}, {"found", found}, {"unflaggable", unfl}}
                   .dump(2)
            << "\n";
        return 0;
      }
      out << "mode: " << mode << "\ncompleteness: " << completeness_name(v.completeness) << "\n";
      out << "found: " << v.found.size() << "\n";
      for (const auto& s : v.found) out << "  " << detail::span_text(basis, s) << "\n";
      out << "unflaggable: " << v.unflaggable.size() << "\n";
      for (const auto& s : v.unflaggable) out << "  " << detail::span_text(basis, s) << "\n";
      return 0;
    }

    if (bilag->parsed()) {
      const TwoForm& w = doc.form(form);
      auto red = reduce_pair(g, w, {doc.subspace(left), doc.subspace(right)});
      const auto& rg = red.algebra;
      auto t = connection(rg, red.form, red.pair);
      auto a = audit_connection(rg, red.form, red.pair, t);
      auto curv = curvature_flatness(rg, t);
      const auto& rb = rg.names();
      if (as_json) {
        json table = json::array();
        for (std::size_t i = 0; i < rg.dim(); ++i)
          for (std::size_t j = 0; j < rg.dim(); ++j)
            if (!is_zero(t.at(i, j))) table.push_back({rb[i], rb[j], detail::write_vector(rb, t.at(i, j))});
        json nz = json::array();
        for (const auto& e : curv.nonzero) nz.push_back({rb[e.i], rb[e.j], rb[e.k], detail::write_vector(rb, e.value)});
        out << json{{"quotiented", red.quotiented},
                    {"connection", table},
                    {"torsion_free", a.torsion_free},
                    {"parallel_form", a.parallel_form},
                    {"preserves_left", a.preserves_left},
                    {"preserves_right", a.preserves_right},
                    {"flat", curv.hess_flat},
                    {"curvature", nz}}
                   .dump(2)
            << "\n";
        return 0;
      }
      if (red.quotiented) out << "passed to the quotient by the kernel of the form\n";
      out << "connection:\n";
      for (std::size_t i = 0; i < rg.dim(); ++i)
        for (std::size_t j = 0; j < rg.dim(); ++j)
          if (!is_zero(t.at(i, j))) out << "  D_" << rb[i] << " " << rb[j] << " = " << detail::vector_text(rb, t.at(i, j)) << "\n";
      out << "torsion_free: " << (a.torsion_free ? "true" : "false") << "\n";
      out << "parallel_form: " << (a.parallel_form ? "true" : "false") << "\n";
      out << "preserves_left: " << (a.preserves_left ? "true" : "false") << "\n";
      out << "preserves_right: " << (a.preserves_right ? "true" : "false") << "\n";
      out << "flat: " << (curv.hess_flat ? "true" : "false") << "\n";
      for (const auto& e : curv.nonzero)
        out << "  R(" << rb[e.i] << ", " << rb[e.j] << ") " << rb[e.k] << " = " << detail::vector_text(rb, e.value) << "\n";
      return 0;
    }

    if (prim->parsed()) {
      const TwoForm& w = doc.form(form);
      PairPresentation pair{g, radical(w)};
      auto pv = primitive_test(pair);
      auto qv = quasi_primitive_test(pair);
      auto deg = degrees(pair);
      auto ideal_conds = ideal_conditions_audit(g, w);
      auto wit = [&](const PrimitivityVerdict& v) { return v.witness ? detail::span_text(basis, *v.witness) : std::string("none"); };
      if (as_json) {
        out << json{{"isotropy", detail::write_span(basis, pair.isotropy)},
                    {"primitive", status_name(pv.status)},
                    {"primitive_witness", wit(pv)},
                    {"quasi_primitive", status_name(qv.status)},
                    {"quasi_primitive_witness", wit(qv)},
                    {"searched", qv.searched},
                    {"degree", to_string(deg.r)},
                    {"degree_lower", to_string(deg.d_lower)},
                    {"degree_within_search", to_string(deg.d_within_search)},
                    {"minimal_ideal_is_g", ideal_conds.a1},
                    {"derived_plus_isotropy_is_g", ideal_conds.a2}}
                   .dump(2)
            << "\n";
        return 0;
      }
      out << "isotropy: " << detail::span_text(basis, pair.isotropy) << "\n";
      out << "primitive: " << status_name(pv.status) << " (witness " << wit(pv) << ")\n";
      out << "quasi-primitive: " << status_name(qv.status) << " (witness " << wit(qv) << ")\n";
      out << "degree: " << to_string(deg.r) << ", lower " << to_string(deg.d_lower) << ", within search "
          << to_string(deg.d_within_search) << "\n";
      out << "minimal ideal containing h is g: " << (ideal_conds.a1 ? "true" : "false") << "\n";
      out << "[g,g] + h = g: " << (ideal_conds.a2 ? "true" : "false") << "\n";
      return 0;
    }

    auto log = detail::audit_document(doc);
    if (as_json) {
      json checks = json::array();
      for (const auto& [name, fail] : log.lines) checks.push_back({{"check", name}, {"pass", fail.empty()}, {"detail", fail}});
      out << json{{"document", doc.name}, {"pass", log.ok()}, {"checks", checks}}.dump(2) << "\n";
    } else {
      for (const auto& [name, fail] : log.lines) out << (fail.empty() ? "PASS " : "FAIL ") << name << (fail.empty() ? "" : ": " + fail) << "\n";
      out << (log.ok() ? "audit passed" : "audit failed") << "\n";
    }
    return log.ok() ? 0 : 3;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_status(e.code());
  }
}

}  // namespace sympdiag
