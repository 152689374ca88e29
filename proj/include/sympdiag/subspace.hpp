#pragma once

#include <compare>
#include <vector>

#include "sympdiag/linalg.hpp"

namespace sympdiag {

// Subspace of Q^n stored as its reduced row echelon basis, so equal
// subspaces have identical representations.
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(std::size_t ambient) : n_(ambient) {}

  static Subspace span(std::size_t ambient, const std::vector<Vector>& vectors) {
    Subspace s(ambient);
    if (vectors.empty()) return s;
    Matrix m = Matrix::from_rows(vectors, ambient);
    s.pivots_ = rref_in_place(m);
    for (std::size_t r = 0; r < s.pivots_.size(); ++r) s.rows_.push_back(m.row(r));
    return s;
  }

  static Subspace full(std::size_t ambient) {
    std::vector<Vector> e;
    for (std::size_t i = 0; i < ambient; ++i) e.push_back(unit_vector(ambient, i));
    return span(ambient, e);
  }

  std::size_t ambient() const { return n_; }
  std::size_t dim() const { return rows_.size(); }
  bool is_zero() const { return rows_.empty(); }
  bool is_full() const { return rows_.size() == n_; }
  const std::vector<Vector>& basis() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  // Remainder of v after elimination against the echelon basis; zero iff v lies in the span.
  Vector reduce(Vector v) const {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      Rational c = v[pivots_[i]];
      if (c != 0) axpy(v, -c, rows_[i]);
    }
    return v;
  }

  bool contains(const Vector& v) const { return sympdiag::is_zero(reduce(v)); }

  bool contains(const Subspace& o) const {
    for (const auto& r : o.rows_)
      if (!contains(r)) return false;
    return true;
  }

  // Coordinates of v (assumed inside) in the echelon basis.
  Vector coordinates(const Vector& v) const {
    Vector c(rows_.size());
    for (std::size_t i = 0; i < rows_.size(); ++i) c[i] = v[pivots_[i]];
    return c;
  }

  Vector lift(const Vector& coords) const {
    Vector v = zero_vector(n_);
    for (std::size_t i = 0; i < rows_.size(); ++i) axpy(v, coords[i], rows_[i]);
    return v;
  }

  // Columns not carrying a pivot; their unit vectors span a complement.
  std::vector<std::size_t> free_columns() const {
    std::vector<std::size_t> out;
    std::size_t k = 0;
    for (std::size_t j = 0; j < n_; ++j) {
      if (k < pivots_.size() && pivots_[k] == j) {
        ++k;
        continue;
      }
      out.push_back(j);
    }
    return out;
  }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.n_ == b.n_ && a.pivots_ == b.pivots_ && a.rows_ == b.rows_;
  }

 private:
  std::size_t n_ = 0;
  std::vector<std::size_t> pivots_;
  std::vector<Vector> rows_;
};

inline Subspace operator+(const Subspace& a, const Subspace& b) {
  std::vector<Vector> vs = a.basis();
  vs.insert(vs.end(), b.basis().begin(), b.basis().end());
  return Subspace::span(a.ambient(), vs);
}

inline Subspace add_vector(const Subspace& a, const Vector& v) {
  std::vector<Vector> vs = a.basis();
  vs.push_back(v);
  return Subspace::span(a.ambient(), vs);
}

// Covectors vanishing on s, as a subspace of the dual.
inline Subspace annihilator(const Subspace& s) {
  if (s.is_zero()) return Subspace::full(s.ambient());
  return Subspace::span(s.ambient(), nullspace(Matrix::from_rows(s.basis(), s.ambient())));
}

// Common zero set of a family of covectors.
inline Subspace kernel_of(std::size_t ambient, const std::vector<Vector>& covectors) {
  if (covectors.empty()) return Subspace::full(ambient);
  return Subspace::span(ambient, nullspace(Matrix::from_rows(covectors, ambient)));
}

inline Subspace intersect(const Subspace& a, const Subspace& b) {
  if (a.is_zero() || b.is_zero()) return Subspace(a.ambient());
  auto ann = annihilator(b).basis();
  if (ann.empty()) return a;
  Matrix m(ann.size(), a.dim());
  for (std::size_t i = 0; i < ann.size(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) m(i, j) = dot(ann[i], a.basis()[j]);
  std::vector<Vector> vs;
  for (const auto& c : nullspace(m)) vs.push_back(a.lift(c));
  return Subspace::span(a.ambient(), vs);
}

inline int compare_rational(const Rational& a, const Rational& b) { return a < b ? -1 : (b < a ? 1 : 0); }

// Canonical total order: dimension, then pivot columns (earlier pivots first), then entries.
inline int canonical_compare(const Subspace& a, const Subspace& b) {
  if (a.dim() != b.dim()) return a.dim() < b.dim() ? -1 : 1;
  if (a.pivots() != b.pivots()) return a.pivots() < b.pivots() ? -1 : 1;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.ambient(); ++j)
      if (int c = compare_rational(a.basis()[i][j], b.basis()[i][j])) return c;
  return 0;
}

inline bool canonical_less(const Subspace& a, const Subspace& b) { return canonical_compare(a, b) < 0; }

// Quotient top/sub with sub contained in top: coordinates on a fixed complement.
class QuotientFrame {
 public:
  QuotientFrame(Subspace sub, Subspace top) : sub_(std::move(sub)), top_(std::move(top)) {
    std::vector<Vector> reduced;
    for (const auto& v : top_.basis()) reduced.push_back(sub_.reduce(v));
    rep_ = Subspace::span(top_.ambient(), reduced);
  }

  const Subspace& sub() const { return sub_; }
  const Subspace& top() const { return top_; }
  const Subspace& representatives() const { return rep_; }
  std::size_t dim() const { return rep_.dim(); }

  Vector coordinates(const Vector& v) const { return rep_.coordinates(sub_.reduce(v)); }
  Vector lift(const Vector& c) const { return rep_.lift(c); }

 private:
  Subspace sub_, top_, rep_;
};

}  // namespace sympdiag
