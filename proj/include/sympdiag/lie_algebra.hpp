#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sympdiag/error.hpp"
#include "sympdiag/subspace.hpp"

namespace sympdiag {

// Finite dimensional Lie algebra over Q given by structure constants.
// Entries are stored as given; unspecified brackets are zero.
class LieAlgebra {
 public:
  using Key = std::pair<std::size_t, std::size_t>;

  LieAlgebra() = default;

  LieAlgebra(std::vector<std::string> names, std::map<Key, Vector> entries)
      : names_(std::move(names)), entries_(std::move(entries)) {
    const std::size_t n = names_.size();
    table_.assign(n * n, zero_vector(n));
    for (auto it = entries_.begin(); it != entries_.end();) {
      auto [i, j] = it->first;
      if (i >= n || j >= n || it->second.size() != n)
        throw Error(ErrorCode::DimensionMismatch, "structure constant out of range");
      if (sympdiag::is_zero(it->second)) {
        it = entries_.erase(it);
        continue;
      }
      table_[i * n + j] = it->second;
      ++it;
    }
  }

  // Builds from the brackets [e_i, e_j] for i < j, filling [e_j, e_i] = -[e_i, e_j].
  static LieAlgebra from_upper(std::vector<std::string> names, const std::map<Key, Vector>& upper) {
    std::map<Key, Vector> all;
    for (const auto& [k, v] : upper) {
      auto [i, j] = k;
      if (i == j) continue;
      if (i < j) {
        all[{i, j}] = v;
        all[{j, i}] = -v;
      } else {
        all[{j, i}] = -v;
        all[{i, j}] = v;
      }
    }
    return LieAlgebra(std::move(names), std::move(all));
  }

  static LieAlgebra abelian(std::size_t n) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) names.push_back("e" + std::to_string(i + 1));
    return LieAlgebra(names, {});
  }

  std::size_t dim() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::map<Key, Vector>& entries() const { return entries_; }

  std::optional<std::size_t> index_of(const std::string& name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
      if (names_[i] == name) return i;
    return std::nullopt;
  }

  const Vector& bracket_basis(std::size_t i, std::size_t j) const { return table_[i * dim() + j]; }

  Vector bracket(const Vector& x, const Vector& y) const {
    const std::size_t n = dim();
    Vector r = zero_vector(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (x[i] == 0) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (y[j] == 0) continue;
        const Vector& c = table_[i * n + j];
        Rational s = x[i] * y[j];
        for (std::size_t k = 0; k < n; ++k)
          if (c[k] != 0) r[k] += s * c[k];
      }
    }
    return r;
  }

  // Matrix of ad_x on column vectors.
  Matrix ad(const Vector& x) const {
    const std::size_t n = dim();
    Matrix m(n, n);
    for (std::size_t j = 0; j < n; ++j) {
      Vector c = bracket(x, unit_vector(n, j));
      for (std::size_t i = 0; i < n; ++i) m(i, j) = c[i];
    }
    return m;
  }

  Vector basis_vector(std::size_t i) const { return unit_vector(dim(), i); }
  Subspace whole() const { return Subspace::full(dim()); }
  Subspace zero() const { return Subspace(dim()); }
  Subspace span(const std::vector<Vector>& vs) const { return Subspace::span(dim(), vs); }

 private:
  std::vector<std::string> names_;
  std::map<Key, Vector> entries_;
  std::vector<Vector> table_;
};

struct AlgebraViolation {
  enum class Kind { Antisymmetry, Jacobi } kind;
  std::size_t i, j, k;
};

struct AlgebraReport {
  std::vector<AlgebraViolation> violations;
  bool ok() const { return violations.empty(); }
};

inline AlgebraReport validate_algebra(const LieAlgebra& g) {
  AlgebraReport rep;
  const std::size_t n = g.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      if (g.bracket_basis(i, j) + g.bracket_basis(j, i) != zero_vector(n))
        rep.violations.push_back({AlgebraViolation::Kind::Antisymmetry, i, j, j});
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        auto ei = g.basis_vector(i), ej = g.basis_vector(j), ek = g.basis_vector(k);
        Vector s = g.bracket(g.bracket_basis(i, j), ek) + g.bracket(g.bracket_basis(j, k), ei) +
                   g.bracket(g.bracket_basis(k, i), ej);
        if (!is_zero(s)) rep.violations.push_back({AlgebraViolation::Kind::Jacobi, i, j, k});
      }
  return rep;
}

// Span of [x, y] for x in a, y in b.
inline Subspace bracket_space(const LieAlgebra& g, const Subspace& a, const Subspace& b) {
  std::vector<Vector> vs;
  for (const auto& x : a.basis())
    for (const auto& y : b.basis()) {
      Vector z = g.bracket(x, y);
      if (!is_zero(z)) vs.push_back(std::move(z));
    }
  return g.span(vs);
}

inline Subspace derived_algebra(const LieAlgebra& g) { return bracket_space(g, g.whole(), g.whole()); }

inline Subspace subalgebra_closure(const LieAlgebra& g, const Subspace& s) {
  Subspace cur = s;
  for (;;) {
    Subspace next = cur + bracket_space(g, cur, cur);
    if (next.dim() == cur.dim()) return cur;
    cur = std::move(next);
  }
}

inline Subspace subalgebra_closure(const LieAlgebra& g, const std::vector<Vector>& vs) {
  return subalgebra_closure(g, g.span(vs));
}

inline bool is_subalgebra(const LieAlgebra& g, const Subspace& s) {
  const auto& b = s.basis();
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = i + 1; j < b.size(); ++j)
      if (!s.contains(g.bracket(b[i], b[j]))) return false;
  return true;
}

// Whether s is an ideal of t; throws if s is not inside t.
inline bool is_ideal_in(const LieAlgebra& g, const Subspace& s, const Subspace& t) {
  if (!t.contains(s)) throw Error(ErrorCode::SubspaceNotNested, "subspace is not contained in the ambient subalgebra");
  for (const auto& x : t.basis())
    for (const auto& y : s.basis())
      if (!s.contains(g.bracket(x, y))) return false;
  return true;
}

inline bool is_ideal(const LieAlgebra& g, const Subspace& s) { return is_ideal_in(g, s, g.whole()); }

// {x in t : [x, s] inside s}
inline Subspace normalizer_of_in(const LieAlgebra& g, const Subspace& s, const Subspace& t) {
  auto ann = annihilator(s).basis();
  if (ann.empty() || t.is_zero()) return t;
  std::vector<Vector> rows;
  for (const auto& y : s.basis())
    for (const auto& phi : ann) {
      Vector r(t.dim());
      for (std::size_t k = 0; k < t.dim(); ++k) r[k] = dot(phi, g.bracket(t.basis()[k], y));
      rows.push_back(std::move(r));
    }
  if (rows.empty()) return t;
  std::vector<Vector> vs;
  for (const auto& c : nullspace(Matrix::from_rows(rows, t.dim()))) vs.push_back(t.lift(c));
  return g.span(vs);
}

inline Subspace ideal_closure(const LieAlgebra& g, const Subspace& s) {
  Subspace cur = s;
  for (;;) {
    Subspace next = cur + bracket_space(g, g.whole(), cur);
    if (next.dim() == cur.dim()) return cur;
    cur = std::move(next);
  }
}

// Derived series of the subalgebra s, up to and including the first repeated term.
inline std::vector<Subspace> derived_series(const LieAlgebra& g, const Subspace& s) {
  std::vector<Subspace> out{s};
  for (;;) {
    Subspace next = bracket_space(g, out.back(), out.back());
    if (next == out.back()) return out;
    out.push_back(std::move(next));
    if (out.back().is_zero()) return out;
  }
}

inline std::vector<Subspace> lower_central_series(const LieAlgebra& g, const Subspace& s) {
  std::vector<Subspace> out{s};
  for (;;) {
    Subspace next = bracket_space(g, s, out.back());
    if (next == out.back()) return out;
    out.push_back(std::move(next));
    if (out.back().is_zero()) return out;
  }
}

inline std::vector<Subspace> derived_series(const LieAlgebra& g) { return derived_series(g, g.whole()); }
inline std::vector<Subspace> lower_central_series(const LieAlgebra& g) { return lower_central_series(g, g.whole()); }

inline bool is_solvable(const LieAlgebra& g, const Subspace& s) { return derived_series(g, s).back().is_zero(); }
inline bool is_nilpotent(const LieAlgebra& g, const Subspace& s) { return lower_central_series(g, s).back().is_zero(); }
inline bool is_solvable(const LieAlgebra& g) { return is_solvable(g, g.whole()); }
inline bool is_nilpotent(const LieAlgebra& g) { return is_nilpotent(g, g.whole()); }
inline bool is_abelian(const LieAlgebra& g) { return derived_algebra(g).is_zero(); }

struct Quotient {
  LieAlgebra algebra;
  Matrix projection;  // dim(quotient) x dim(g)
  Subspace ideal;
};

// g / ideal with basis the images of the basis vectors off the ideal's pivots.
inline Quotient quotient(const LieAlgebra& g, const Subspace& ideal) {
  if (!is_ideal(g, ideal)) throw Error(ErrorCode::NotAnIdeal, "quotient by a subspace that is not an ideal");
  auto free = ideal.free_columns();
  const std::size_t q = free.size();
  auto project = [&](const Vector& v) {
    Vector r = ideal.reduce(v), c(q);
    for (std::size_t a = 0; a < q; ++a) c[a] = r[free[a]];
    return c;
  };
  std::vector<std::string> names;
  for (auto j : free) names.push_back(g.names()[j]);
  std::map<LieAlgebra::Key, Vector> entries;
  for (std::size_t a = 0; a < q; ++a)
    for (std::size_t b = 0; b < q; ++b) {
      if (a == b) continue;
      Vector c = project(g.bracket_basis(free[a], free[b]));
      if (!is_zero(c)) entries[{a, b}] = c;
    }
  Matrix p(q, g.dim());
  for (std::size_t i = 0; i < g.dim(); ++i) {
    Vector c = project(g.basis_vector(i));
    for (std::size_t a = 0; a < q; ++a) p(a, i) = c[a];
  }
  return {LieAlgebra(std::move(names), std::move(entries)), std::move(p), ideal};
}

// Matrices of ad_x on top/sub for each x in acting; assumes both are ad_x-invariant.
inline std::vector<Matrix> induced_action(const LieAlgebra& g, const std::vector<Vector>& acting, const QuotientFrame& f) {
  std::vector<Matrix> out;
  const std::size_t d = f.dim();
  for (const auto& x : acting) {
    Matrix m(d, d);
    for (std::size_t j = 0; j < d; ++j) {
      Vector c = f.coordinates(g.bracket(x, f.representatives().basis()[j]));
      for (std::size_t i = 0; i < d; ++i) m(i, j) = c[i];
    }
    out.push_back(std::move(m));
  }
  return out;
}

}  // namespace sympdiag

namespace sympdiag {

// The subalgebra s as an algebra in its own right, in echelon coordinates.
inline LieAlgebra induced_subalgebra(const LieAlgebra& g, const Subspace& s) {
  if (!is_subalgebra(g, s)) throw Error(ErrorCode::NotSubalgebra, "subspace is not a subalgebra");
  std::vector<std::string> names;
  for (std::size_t i = 0; i < s.dim(); ++i) names.push_back("s" + std::to_string(i + 1));
  std::map<LieAlgebra::Key, Vector> entries;
  for (std::size_t i = 0; i < s.dim(); ++i)
    for (std::size_t j = 0; j < s.dim(); ++j) {
      if (i == j) continue;
      Vector c = s.coordinates(g.bracket(s.basis()[i], s.basis()[j]));
      if (!is_zero(c)) entries[{i, j}] = c;
    }
  return LieAlgebra(std::move(names), std::move(entries));
}

}  // namespace sympdiag
