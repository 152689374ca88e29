#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>

#include "common.hpp"
#include "dot_parser.hpp"

using namespace sympdiag;
namespace fs = std::filesystem;

namespace {

ErrorCode parse_code(const std::string& text) {
  try {
    parse_document(text);
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::Internal;
}

std::string minimal(const std::string& brackets, const std::string& extra = "") {
  return R"({"name": "t", "dim": 3, "basis": ["x", "y", "z"], "brackets": )" + brackets + extra + "}";
}

fs::path temp_file(const std::string& name, const std::string& content = "") {
  fs::path p = fs::temp_directory_path() / ("sympdiag_test_" + std::to_string(::getpid()) + "_" + name);
  if (!content.empty()) {
    std::ofstream out(p, std::ios::binary);
    out << content;
  }
  return p;
}

std::size_t count_label(const dot::Graph& g, const std::string& label) {
  std::size_t n = 0;
  for (const auto& e : g.edges) {
    auto it = e.attrs.find("label");
    if (it != e.attrs.end() && it->second == label) ++n;
  }
  return n;
}

}  // namespace

TEST(Document, ParsesE1) {
  auto doc = testutil::load("E1");
  EXPECT_EQ(doc.name, "E1");
  EXPECT_EQ(doc.algebra.dim(), 5u);
  EXPECT_EQ(doc.algebra.names(), (std::vector<std::string>{"c", "b", "a", "v", "u"}));
  std::size_t nonzero = 0;
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = i + 1; j < 5; ++j)
      if (!is_zero(doc.algebra.bracket_basis(i, j))) ++nonzero;
  EXPECT_EQ(nonzero, 5u);
  EXPECT_EQ(doc.flags.at("F").size(), 5u);
  EXPECT_FALSE(doc.metadata.expected.empty());
  EXPECT_FALSE(doc.metadata.discrepancies.empty());
}

TEST(Document, RejectsMalformedInput) {
  EXPECT_EQ(parse_code(minimal(R"([["x", "w", {"z": 1}]])")), ErrorCode::SchemaError);
  EXPECT_EQ(parse_code(minimal(R"([["x", "y", {"z": "1/0"}]])")), ErrorCode::RationalFormat);
  EXPECT_EQ(parse_code(minimal(R"([["x", "y", {"z": 0.5}]])")), ErrorCode::RationalFormat);
  EXPECT_EQ(parse_code(minimal("[]", R"(, "colour": 1)")), ErrorCode::SchemaError);
  EXPECT_EQ(parse_code(minimal(R"([["x", "y", {"z": 1}], ["y", "x", {"z": 1}]])")), ErrorCode::SchemaError);
  EXPECT_EQ(parse_code(minimal(R"([["x", "x", {"z": 1}]])")), ErrorCode::SchemaError);
  EXPECT_EQ(parse_code(R"({"name": "t", "dim": 2, "basis": ["x", "y", "z"]})"), ErrorCode::SchemaError);
  // [x,y] = y, [y,z] = x breaks Jacobi
  EXPECT_EQ(parse_code(minimal(R"([["x", "y", {"y": 1}], ["y", "z", {"x": 1}]])")), ErrorCode::SchemaError);
  EXPECT_EQ(parse_code(minimal("[]", R"(, "two_forms": {"w": [["x", "y", 1.25]]})")), ErrorCode::RationalFormat);
}

TEST(Document, AcceptsConsistentDuplicatesAndRationals) {
  auto doc = parse_document(minimal(R"([["x", "y", {"z": "2/4"}], ["y", "x", {"z": "-1/2"}]])"));
  EXPECT_EQ(doc.algebra.bracket_basis(0, 1), (Vector{0, 0, Rational(1, 2)}));
}

TEST(Document, ParseErrorReportsLineAndColumn) {
  try {
    parse_document("{\n  \"name\": \"t\",\n  \"dim\": ,\n}");
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ParseError);
    EXPECT_NE(std::string(e.what()).find("line 3, column"), std::string::npos) << e.what();
  }
}

TEST(Document, UnknownNamesAreReported) {
  auto doc = testutil::load("E1");
  for (auto f : {+[](const Document& d) { d.form("nope"); }, +[](const Document& d) { d.flag("nope"); },
                 +[](const Document& d) { d.subspace("nope"); }}) {
    try {
      f(doc);
      ADD_FAILURE();
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::UnknownName);
    }
  }
}

TEST(Document, SerializationRoundTripsOnCorpus) {
  for (const auto& name : testutil::corpus_names()) {
    auto doc = testutil::load(name);
    std::string once = serialize_document(doc);
    auto again = parse_document(once);
    EXPECT_EQ(serialize_document(again), once) << name;
    EXPECT_EQ(again.algebra.names(), doc.algebra.names());
    for (std::size_t i = 0; i < doc.algebra.dim(); ++i)
      for (std::size_t j = 0; j < doc.algebra.dim(); ++j) EXPECT_EQ(again.algebra.bracket_basis(i, j), doc.algebra.bracket_basis(i, j));
    for (const auto& [f, w] : doc.two_forms) EXPECT_EQ(again.form(f), w) << name;
    for (const auto& [f, ms] : doc.flags) EXPECT_EQ(again.flags.at(f), ms) << name;
    for (const auto& [s, sub] : doc.subspaces) EXPECT_EQ(again.subspace(s), sub) << name;
  }
}

TEST(Cli, AuditPassesOnEveryCorpusFile) {
  for (const auto& name : testutil::corpus_names()) {
    auto r = testutil::run({"audit", testutil::corpus_path(name)});
    EXPECT_EQ(r.status, 0) << name << "\n" << r.out << r.err;
    EXPECT_NE(r.out.find("audit passed"), std::string::npos) << name;
    EXPECT_EQ(r.out.find("FAIL "), std::string::npos) << name;
  }
}

TEST(Cli, DiagramOutput) {
  auto r = testutil::run({"diagram", testutil::corpus_path("E1"), "--form", "omega", "--flag", "F", "--contract"});
  ASSERT_EQ(r.status, 0) << r.err;
  EXPECT_NE(r.out.find("contraction: [Up x3] S3(attractive, w=3) [Down x2]"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("template: delta"), std::string::npos) << r.out;

  auto j = testutil::run({"diagram", testutil::corpus_path("E1"), "--form", "omega", "--flag", "F", "--json"});
  ASSERT_EQ(j.status, 0);
  auto parsed = json::parse(j.out);
  EXPECT_EQ(parsed["steps"], json({"Up", "Up", "Up", "Down", "Down"}));
}

TEST(Cli, DeformOutput) {
  auto r = testutil::run({"deform", testutil::corpus_path("D1"), "--form", "omega", "--flag", "F2comp"});
  ASSERT_EQ(r.status, 0) << r.err;
  EXPECT_NE(r.out.find("method: assembled"), std::string::npos);
  EXPECT_NE(r.out.find("  g1 = span(c)"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("simple: true"), std::string::npos);
}

TEST(Cli, OtherSubcommands) {
  auto v = testutil::run({"validate", testutil::corpus_path("X3")});
  EXPECT_EQ(v.status, 0);
  EXPECT_NE(v.out.find("flag F3_printed: not a composition series"), std::string::npos) << v.out;

  auto l = testutil::run({"lagrangians", testutil::corpus_path("R4"), "--form", "omega", "--mode", "flag-adapted"});
  EXPECT_EQ(l.status, 0);
  EXPECT_NE(l.out.find("completeness: EXHAUSTIVE_WITHIN_MODE"), std::string::npos) << l.out;

  auto b = testutil::run({"bilagrangian", testutil::corpus_path("D1"), "--form", "omega", "--left", "L", "--right", "N"});
  EXPECT_EQ(b.status, 0) << b.err;
  EXPECT_NE(b.out.find("flat: true"), std::string::npos) << b.out;

  auto p = testutil::run({"primitivity", testutil::corpus_path("E2"), "--form", "omega"});
  EXPECT_EQ(p.status, 0) << p.err;
  EXPECT_NE(p.out.find("primitive: NOT_PRIMITIVE (witness span("), std::string::npos) << p.out;
  EXPECT_NE(p.out.find("degree: 2/3"), std::string::npos) << p.out;
}

TEST(Cli, ExitCodes) {
  auto bad_flag = testutil::run({"diagram", testutil::corpus_path("E1"), "--form", "omega", "--flag", "nope"});
  EXPECT_EQ(bad_flag.status, 2);
  EXPECT_NE(bad_flag.err.find("UNKNOWN_NAME"), std::string::npos) << bad_flag.err;
  EXPECT_EQ(bad_flag.err.find("UNKNOWN_NAME: UNKNOWN_NAME"), std::string::npos);

  EXPECT_EQ(testutil::run({"frobnicate"}).status, 2);
  EXPECT_EQ(testutil::run({"diagram", testutil::corpus_path("E1")}).status, 2);
  EXPECT_EQ(testutil::run({"--help"}).status, 0);

  auto bad = temp_file("bad.json", "{ not json");
  EXPECT_EQ(testutil::run({"validate", bad.string()}).status, 2);
  fs::remove(bad);

  auto not_semi = testutil::run({"deform", testutil::corpus_path("X3"), "--form", "omega", "--flag", "F3"});
  EXPECT_EQ(not_semi.status, 3);
  EXPECT_NE(not_semi.err.find("NOT_SEMISIMPLE"), std::string::npos) << not_semi.err;

  auto invalid = testutil::run({"diagram", testutil::corpus_path("X3"), "--form", "omega", "--flag", "F3_printed"});
  EXPECT_EQ(invalid.status, 3);
}

TEST(Cli, OutputIsDeterministic) {
  for (const auto& name : testutil::corpus_names()) {
    auto a = testutil::run({"audit", testutil::corpus_path(name), "--json"});
    auto b = testutil::run({"audit", testutil::corpus_path(name), "--json"});
    EXPECT_EQ(a.out, b.out) << name;
  }
  auto a = testutil::run({"lagrangians", testutil::corpus_path("X3"), "--form", "omega"});
  auto b = testutil::run({"lagrangians", testutil::corpus_path("X3"), "--form", "omega"});
  EXPECT_EQ(a.out, b.out);
}

TEST(Dot, GraphStyleHasThreeRows) {
  auto doc = testutil::load("E1");
  auto d = kernel_chain(doc.algebra, doc.form("omega"), doc.flag("F"));
  auto g = dot::parse(render_dot(d, DotStyle::Graph));
  EXPECT_TRUE(g.directed);
  EXPECT_EQ(g.nodes.size(), 18u);
  EXPECT_EQ(count_label(g, "mw"), 2u);
  EXPECT_EQ(count_label(g, "ideal"), 2u);
  EXPECT_EQ(count_label(g, "orbit"), 3u);
  EXPECT_EQ(count_label(g, "proj"), 6u);
}

TEST(Dot, DiagramStyleEdgesFollowSteps) {
  auto doc = testutil::load("X3");
  auto d = kernel_chain(doc.algebra, doc.form("omega"), doc.flag("F1"));
  auto g = dot::parse(render_dot(d, DotStyle::Diagram));
  std::size_t downs = 0;
  for (auto s : d.steps) downs += s == Step::Down;
  EXPECT_EQ(g.nodes.size(), d.vertices.size());
  EXPECT_EQ(g.edges.size(), d.steps.size() + downs);
}

TEST(Dot, ZeroDimensionalDiagram) {
  auto doc = parse_document(R"({"name": "pt", "dim": 0, "basis": [], "two_forms": {"omega": []}, "flags": {"F": []}})");
  auto d = kernel_chain(doc.algebra, doc.form("omega"), doc.flag("F"));
  auto g = dot::parse(render_dot(d, DotStyle::Diagram));
  EXPECT_EQ(g.nodes.size(), 1u);
  EXPECT_TRUE(g.edges.empty());
}

TEST(Dot, WrittenByTheCli) {
  auto path = temp_file("e1.dot");
  auto r = testutil::run({"diagram", testutil::corpus_path("E1"), "--form", "omega", "--flag", "F", "--dot", path.string(), "--style", "graph"});
  ASSERT_EQ(r.status, 0) << r.err;
  auto g = dot::parse(testutil::read(path.string()));
  EXPECT_EQ(g.nodes.size(), 18u);
  fs::remove(path);
}

TEST(Binary, ExitStatusFromProcess) {
  std::string cmd = std::string("\"") + SYMPDIAG_CLI + "\" diagram \"" + testutil::corpus_path("E1") +
                    "\" --form omega --flag nope > /dev/null 2>&1";
  int st = std::system(cmd.c_str());
  ASSERT_TRUE(WIFEXITED(st));
  EXPECT_EQ(WEXITSTATUS(st), 2);
  std::string ok = std::string("\"") + SYMPDIAG_CLI + "\" audit \"" + testutil::corpus_path("D1") + "\" > /dev/null 2>&1";
  st = std::system(ok.c_str());
  ASSERT_TRUE(WIFEXITED(st));
  EXPECT_EQ(WEXITSTATUS(st), 0);
}
