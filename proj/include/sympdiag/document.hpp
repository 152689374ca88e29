#pragma once

#include <json.hpp>

#include <limits>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "sympdiag/flags.hpp"
#include "sympdiag/forms.hpp"

namespace sympdiag {

using json = nlohmann::json;

struct Discrepancy {
  std::string item, printed, derived;
};

// A value recorded in the document that `audit` recomputes and compares.
struct Expectation {
  std::string check;  // radical, kernel, kernel_dims, steps, predicate, template
  std::string form, flag, predicate;
  std::optional<std::size_t> k;
  json value;
  std::string origin;  // printed or derived
};

struct Metadata {
  std::string description;
  std::vector<std::string> notes;
  std::vector<Discrepancy> discrepancies;
  std::vector<Expectation> expected;
};

struct Document {
  std::string name;
  LieAlgebra algebra;
  std::map<std::string, TwoForm> two_forms;
  std::map<std::string, std::vector<Subspace>> flags;  // nonzero members in order
  std::map<std::string, Subspace> subspaces;
  Metadata metadata;

  const TwoForm& form(const std::string& n) const {
    auto it = two_forms.find(n);
    if (it == two_forms.end()) throw Error(ErrorCode::UnknownName, "no two-form named '" + n + "'");
    return it->second;
  }
  Flag flag(const std::string& n) const {
    auto it = flags.find(n);
    if (it == flags.end()) throw Error(ErrorCode::UnknownName, "no flag named '" + n + "'");
    return flag_from_members(algebra.dim(), it->second);
  }
  const Subspace& subspace(const std::string& n) const {
    auto it = subspaces.find(n);
    if (it == subspaces.end()) throw Error(ErrorCode::UnknownName, "no subspace named '" + n + "'");
    return it->second;
  }
};

namespace detail {

[[noreturn]] inline void schema(const std::string& what) { throw Error(ErrorCode::SchemaError, what); }

inline void only_keys(const json& obj, const std::set<std::string>& allowed, const std::string& where) {
  if (!obj.is_object()) schema(where + " must be an object");
  for (const auto& [k, v] : obj.items())
    if (!allowed.count(k)) schema("unknown field '" + k + "' in " + where);
}

inline Rational read_rational(const json& j, const std::string& where) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return Rational(Integer(j.get<std::uint64_t>()));
    return Rational(Integer(j.get<std::int64_t>()));
  }
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_float()) throw Error(ErrorCode::RationalFormat, "inexact number in " + where);
  schema(where + ": coefficient must be an integer or a \"p/q\" string");
}

inline json write_rational(const Rational& q) {
  if (is_integer(q)) {
    Integer n = num(q);
    if (n >= std::numeric_limits<std::int64_t>::min() && n <= std::numeric_limits<std::int64_t>::max())
      return json(static_cast<std::int64_t>(n));
  }
  return json(to_string(q));
}

inline std::size_t read_name(const std::vector<std::string>& basis, const json& j, const std::string& where) {
  if (!j.is_string()) schema(where + ": basis name must be a string");
  auto s = j.get<std::string>();
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (basis[i] == s) return i;
  schema(where + ": unknown basis symbol '" + s + "'");
}

inline Vector read_vector(const std::vector<std::string>& basis, const json& j, const std::string& where) {
  if (!j.is_object()) schema(where + ": vector must be a coefficient map");
  Vector v = zero_vector(basis.size());
  for (const auto& [k, c] : j.items()) v[read_name(basis, json(k), where)] = read_rational(c, where);
  return v;
}

inline json write_vector(const std::vector<std::string>& basis, const Vector& v) {
  json o = json::object();
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) o[basis[i]] = write_rational(v[i]);
  return o;
}

inline Subspace read_span(const std::vector<std::string>& basis, const json& j, const std::string& where) {
  if (!j.is_array()) schema(where + " must be a list of vectors");
  std::vector<Vector> vs;
  for (const auto& v : j) vs.push_back(read_vector(basis, v, where));
  return Subspace::span(basis.size(), vs);
}

inline json write_span(const std::vector<std::string>& basis, const Subspace& s) {
  json a = json::array();
  for (const auto& v : s.basis()) a.push_back(write_vector(basis, v));
  return a;
}

inline std::string read_string(const json& j, const std::string& where) {
  if (!j.is_string()) schema(where + " must be a string");
  return j.get<std::string>();
}

inline std::pair<std::size_t, std::size_t> line_column(const std::string& text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < text.size() && i + 1 < byte; ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

}  // namespace detail

inline Document parse_document(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    auto [line, col] = detail::line_column(text, e.byte);
    throw Error(ErrorCode::ParseError, "line " + std::to_string(line) + ", column " + std::to_string(col));
  }
  using detail::schema;
  detail::only_keys(j, {"name", "dim", "basis", "brackets", "two_forms", "flags", "subspaces", "metadata"}, "document");
  for (const char* req : {"name", "dim", "basis"})
    if (!j.contains(req)) schema(std::string("missing field '") + req + "'");
  Document d;
  d.name = detail::read_string(j["name"], "name");
  if (!j["dim"].is_number_unsigned()) schema("dim must be a nonnegative integer");
  const std::size_t n = j["dim"].get<std::size_t>();
  if (!j["basis"].is_array()) schema("basis must be a list of names");
  std::vector<std::string> basis;
  for (const auto& b : j["basis"]) {
    auto s = detail::read_string(b, "basis");
    if (std::find(basis.begin(), basis.end(), s) != basis.end()) schema("basis: duplicate symbol '" + s + "'");
    basis.push_back(s);
  }
  if (basis.size() != n) schema("basis has " + std::to_string(basis.size()) + " names but dim is " + std::to_string(n));

  std::map<LieAlgebra::Key, Vector> upper;
  if (j.contains("brackets")) {
    if (!j["brackets"].is_array()) schema("brackets must be a list");
    for (const auto& t : j["brackets"]) {
      if (!t.is_array() || t.size() != 3) schema("brackets: each entry must be [x, y, {coefficients}]");
      std::size_t a = detail::read_name(basis, t[0], "brackets");
      std::size_t b = detail::read_name(basis, t[1], "brackets");
      Vector v = detail::read_vector(basis, t[2], "brackets");
      if (a == b) {
        if (!is_zero(v)) schema("brackets: [" + basis[a] + ", " + basis[a] + "] must vanish");
        continue;
      }
      if (a > b) {
        std::swap(a, b);
        v = -v;
      }
      auto it = upper.find({a, b});
      if (it != upper.end() && it->second != v)
        schema("brackets: contradictory entries for [" + basis[a] + ", " + basis[b] + "]");
      upper[{a, b}] = v;
    }
  }
  d.algebra = LieAlgebra::from_upper(basis, upper);
  auto rep = validate_algebra(d.algebra);
  if (!rep.ok()) {
    const auto& v = rep.violations.front();
    schema("brackets: Jacobi identity fails on (" + basis[v.i] + ", " + basis[v.j] + ", " + basis[v.k] + ")");
  }

  if (j.contains("two_forms")) {
    if (!j["two_forms"].is_object()) schema("two_forms must be an object");
    for (const auto& [name, entries] : j["two_forms"].items()) {
      if (!entries.is_array()) schema("two_forms." + name + " must be a list");
      std::map<std::pair<std::size_t, std::size_t>, Rational> seen;
      for (const auto& t : entries) {
        if (!t.is_array() || t.size() != 3) schema("two_forms." + name + ": each entry must be [x, y, c]");
        std::size_t a = detail::read_name(basis, t[0], "two_forms." + name);
        std::size_t b = detail::read_name(basis, t[1], "two_forms." + name);
        Rational c = detail::read_rational(t[2], "two_forms." + name);
        if (a == b) {
          if (c != 0) schema("two_forms." + name + ": diagonal entry must vanish");
          continue;
        }
        if (a > b) {
          std::swap(a, b);
          c = -c;
        }
        auto it = seen.find({a, b});
        if (it != seen.end() && it->second != c)
          schema("two_forms." + name + ": contradictory entries for (" + basis[a] + ", " + basis[b] + ")");
        seen[{a, b}] = c;
      }
      std::vector<std::tuple<std::size_t, std::size_t, Rational>> es;
      for (const auto& [k, c] : seen) es.push_back({k.first, k.second, c});
      d.two_forms[name] = TwoForm::from_entries(n, es);
    }
  }

  if (j.contains("flags")) {
    if (!j["flags"].is_object()) schema("flags must be an object");
    for (const auto& [name, members] : j["flags"].items()) {
      if (!members.is_array()) schema("flags." + name + " must be a list of members");
      std::vector<Subspace> ms;
      for (const auto& m : members) ms.push_back(detail::read_span(basis, m, "flags." + name));
      d.flags[name] = std::move(ms);
    }
  }

  if (j.contains("subspaces")) {
    if (!j["subspaces"].is_object()) schema("subspaces must be an object");
    for (const auto& [name, s] : j["subspaces"].items()) d.subspaces[name] = detail::read_span(basis, s, "subspaces." + name);
  }

  if (j.contains("metadata")) {
    const auto& m = j["metadata"];
    detail::only_keys(m, {"description", "notes", "discrepancies", "expected"}, "metadata");
    if (m.contains("description")) d.metadata.description = detail::read_string(m["description"], "metadata.description");
    if (m.contains("notes")) {
      if (!m["notes"].is_array()) schema("metadata.notes must be a list");
      for (const auto& s : m["notes"]) d.metadata.notes.push_back(detail::read_string(s, "metadata.notes"));
    }
    if (m.contains("discrepancies")) {
      if (!m["discrepancies"].is_array()) schema("metadata.discrepancies must be a list");
      for (const auto& x : m["discrepancies"]) {
        detail::only_keys(x, {"item", "printed", "derived"}, "metadata.discrepancies");
        Discrepancy dd;
        dd.item = detail::read_string(x.value("item", json()), "discrepancy item");
        dd.printed = detail::read_string(x.value("printed", json()), "discrepancy printed");
        dd.derived = detail::read_string(x.value("derived", json()), "discrepancy derived");
        d.metadata.discrepancies.push_back(std::move(dd));
      }
    }
    if (m.contains("expected")) {
      if (!m["expected"].is_array()) schema("metadata.expected must be a list");
      for (const auto& x : m["expected"]) {
        detail::only_keys(x, {"check", "form", "flag", "predicate", "k", "value", "origin"}, "metadata.expected");
        Expectation e;
        e.check = detail::read_string(x.value("check", json()), "expected.check");
        static const std::set<std::string> checks{"radical", "kernel", "kernel_dims", "steps", "predicate", "template"};
        if (!checks.count(e.check)) schema("expected.check: unknown check '" + e.check + "'");
        if (x.contains("form")) e.form = detail::read_string(x["form"], "expected.form");
        if (x.contains("flag")) e.flag = detail::read_string(x["flag"], "expected.flag");
        if (x.contains("predicate")) e.predicate = detail::read_string(x["predicate"], "expected.predicate");
        if (x.contains("k")) {
          if (!x["k"].is_number_unsigned()) schema("expected.k must be a nonnegative integer");
          e.k = x["k"].get<std::size_t>();
        }
        if (!x.contains("value")) schema("expected entry without value");
        e.value = x["value"];
        e.origin = detail::read_string(x.value("origin", json()), "expected.origin");
        if (e.origin != "printed" && e.origin != "derived") schema("expected.origin must be printed or derived");
        d.metadata.expected.push_back(std::move(e));
      }
    }
  }
  return d;
}

inline json document_json(const Document& d) {
  const auto& basis = d.algebra.names();
  json j = json::object();
  j["name"] = d.name;
  j["dim"] = basis.size();
  j["basis"] = basis;
  json br = json::array();
  for (const auto& [k, v] : d.algebra.entries())
    if (k.first < k.second) br.push_back(json::array({basis[k.first], basis[k.second], detail::write_vector(basis, v)}));
  j["brackets"] = br;
  json forms = json::object();
  for (const auto& [name, w] : d.two_forms) {
    json es = json::array();
    for (std::size_t a = 0; a < basis.size(); ++a)
      for (std::size_t b = a + 1; b < basis.size(); ++b)
        if (w(a, b) != 0) es.push_back(json::array({basis[a], basis[b], detail::write_rational(w(a, b))}));
    forms[name] = es;
  }
  j["two_forms"] = forms;
  json flags = json::object();
  for (const auto& [name, ms] : d.flags) {
    json a = json::array();
    for (const auto& m : ms) a.push_back(detail::write_span(basis, m));
    flags[name] = a;
  }
  j["flags"] = flags;
  json subs = json::object();
  for (const auto& [name, s] : d.subspaces) subs[name] = detail::write_span(basis, s);
  j["subspaces"] = subs;
  json meta = json::object();
  meta["description"] = d.metadata.description;
  meta["notes"] = d.metadata.notes;
  json disc = json::array();
  for (const auto& x : d.metadata.discrepancies) disc.push_back({{"item", x.item}, {"printed", x.printed}, {"derived", x.derived}});
  meta["discrepancies"] = disc;
  json exp = json::array();
  for (const auto& e : d.metadata.expected) {
    json o = {{"check", e.check}, {"value", e.value}, {"origin", e.origin}};
    if (!e.form.empty()) o["form"] = e.form;
    if (!e.flag.empty()) o["flag"] = e.flag;
    if (!e.predicate.empty()) o["predicate"] = e.predicate;
    if (e.k) o["k"] = *e.k;
    exp.push_back(o);
  }
  meta["expected"] = exp;
  j["metadata"] = meta;
  return j;
}

inline std::string serialize_document(const Document& d) { return document_json(d).dump(2) + "\n"; }

}  // namespace sympdiag
