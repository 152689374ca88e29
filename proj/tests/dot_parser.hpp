#pragma once

// Minimal recursive-descent parser for the DOT language (graph, digraph, subgraph,
// node/edge/attribute statements, quoted and bare IDs). Used only by tests.

#include <cctype>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace dot {

struct Edge {
  std::string from, to;
  std::map<std::string, std::string> attrs;
};

struct Graph {
  bool directed = false;
  std::string name;
  std::vector<std::string> nodes;  // first appearance order
  std::map<std::string, std::map<std::string, std::string>> node_attrs;
  std::vector<Edge> edges;
};

class Parser {
 public:
  explicit Parser(std::string text) : s_(std::move(text)) {}

  Graph parse() {
    Graph g;
    skip();
    std::string kw = ident();
    if (kw == "strict") kw = ident();
    if (kw == "digraph") g.directed = true;
    else if (kw != "graph") fail("expected graph or digraph");
    skip();
    if (peek() != '{') g.name = id();
    expect('{');
    stmt_list(g);
    expect('}');
    skip();
    if (pos_ != s_.size()) fail("trailing input");
    return g;
  }

 private:
  std::string s_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& m) { throw std::runtime_error("dot: " + m + " at offset " + std::to_string(pos_)); }

  void skip() {
    while (pos_ < s_.size()) {
      if (std::isspace(static_cast<unsigned char>(s_[pos_]))) {
        ++pos_;
      } else if (s_.compare(pos_, 2, "//") == 0) {
        while (pos_ < s_.size() && s_[pos_] != '\n') ++pos_;
      } else if (s_.compare(pos_, 2, "/*") == 0) {
        auto e = s_.find("*/", pos_ + 2);
        if (e == std::string::npos) fail("unterminated comment");
        pos_ = e + 2;
      } else {
        break;
      }
    }
  }
  char peek() {
    skip();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  std::string ident() {
    skip();
    std::size_t b = pos_;
    while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
    if (b == pos_) fail("expected identifier");
    return s_.substr(b, pos_ - b);
  }
  bool at_id() {
    char c = peek();
    return c == '"' || c == '_' || c == '-' || c == '.' || std::isalnum(static_cast<unsigned char>(c));
  }
  std::string id() {
    char c = peek();
    if (c == '"') {
      ++pos_;
      std::string out;
      while (true) {
        if (pos_ >= s_.size()) fail("unterminated string");
        char d = s_[pos_++];
        if (d == '"') break;
        if (d == '\\' && pos_ < s_.size()) {
          char e = s_[pos_++];
          if (e != '"') out += '\\';
          out += e;
          continue;
        }
        out += d;
      }
      return out;
    }
    if (c == '-' || c == '.' || std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t b = pos_;
      if (s_[pos_] == '-') ++pos_;
      bool digits = false;
      while (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '.')) {
        digits = true;
        ++pos_;
      }
      if (!digits) fail("bad numeral");
      return s_.substr(b, pos_ - b);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return ident();
    fail("expected ID");
  }
  std::map<std::string, std::string> attr_lists() {
    std::map<std::string, std::string> out;
    while (accept('[')) {
      while (peek() != ']') {
        std::string k = id();
        expect('=');
        out[k] = id();
        if (!accept(',')) accept(';');
      }
      expect(']');
    }
    return out;
  }
  void touch(Graph& g, const std::string& n) {
    if (!g.node_attrs.count(n)) {
      g.nodes.push_back(n);
      g.node_attrs[n] = {};
    }
  }
  bool edge_op(const Graph& g) {
    skip();
    if (s_.compare(pos_, 2, "->") == 0) {
      if (!g.directed) fail("'->' in undirected graph");
      pos_ += 2;
      return true;
    }
    if (s_.compare(pos_, 2, "--") == 0) {
      if (g.directed) fail("'--' in directed graph");
      pos_ += 2;
      return true;
    }
    return false;
  }
  void stmt_list(Graph& g) {
    while (peek() != '}' && peek() != '\0') {
      stmt(g);
      accept(';');
    }
  }
  void stmt(Graph& g) {
    if (peek() == '{') {
      ++pos_;
      stmt_list(g);
      expect('}');
      return;
    }
    std::size_t save = pos_;
    std::string first = id();
    if (first == "subgraph") {
      if (peek() != '{') id();
      expect('{');
      stmt_list(g);
      expect('}');
      return;
    }
    if (first == "graph" || first == "node" || first == "edge") {
      if (peek() == '[') {
        attr_lists();
        return;
      }
    }
    if (accept('=')) {
      id();
      return;
    }
    (void)save;
    touch(g, first);
    std::vector<std::string> chain{first};
    while (edge_op(g)) {
      std::string next = id();
      touch(g, next);
      chain.push_back(next);
    }
    auto attrs = attr_lists();
    if (chain.size() == 1) {
      for (auto& [k, v] : attrs) g.node_attrs[first][k] = v;
      return;
    }
    for (std::size_t i = 0; i + 1 < chain.size(); ++i) g.edges.push_back({chain[i], chain[i + 1], attrs});
  }
};

inline Graph parse(const std::string& text) { return Parser(text).parse(); }

}  // namespace dot
