#pragma once

#include <optional>
#include <vector>

#include "sympdiag/lagrangian.hpp"

namespace sympdiag {

struct BilagrangianPair {
  Subspace left;   // l
  Subspace right;  // n
};

// D_{e_i} e_j for all basis pairs.
class ConnectionTable {
 public:
  ConnectionTable() = default;
  explicit ConnectionTable(std::size_t n) : n_(n), t_(n * n, zero_vector(n)) {}
  std::size_t dim() const { return n_; }
  Vector& at(std::size_t i, std::size_t j) { return t_[i * n_ + j]; }
  const Vector& at(std::size_t i, std::size_t j) const { return t_[i * n_ + j]; }

  // D_x y, bilinear extension
  Vector apply(const Vector& x, const Vector& y) const {
    Vector r = zero_vector(n_);
    for (std::size_t i = 0; i < n_; ++i) {
      if (x[i] == 0) continue;
      for (std::size_t j = 0; j < n_; ++j)
        if (y[j] != 0) axpy(r, x[i] * y[j], at(i, j));
    }
    return r;
  }

  bool is_zero() const {
    for (const auto& v : t_)
      if (!sympdiag::is_zero(v)) return false;
    return true;
  }
  friend bool operator==(const ConnectionTable& a, const ConnectionTable& b) { return a.t_ == b.t_; }

 private:
  std::size_t n_ = 0;
  std::vector<Vector> t_;
};

// Unique vector with w(D0_x y, z) = -w(y, [x, z]) for all z.
inline Vector d_zero(const LieAlgebra& g, const TwoForm& w, const Vector& x, const Vector& y) {
  const std::size_t n = g.dim();
  Vector rhs(n);
  for (std::size_t k = 0; k < n; ++k) rhs[k] = -w(y, g.bracket(x, g.basis_vector(k)));
  auto inv = inverse(w.matrix().transpose());
  if (!inv) throw Error(ErrorCode::DegenerateForm, "form is degenerate on the algebra");
  return *inv * rhs;
}

namespace detail {

struct Splitting {
  Matrix to_coords;  // inverse of [l-basis | n-basis]
  std::size_t dl;
  Subspace l, n;

  Vector project(const Vector& v, bool left) const {
    Vector c = to_coords * v;
    Vector r = zero_vector(v.size());
    if (left) {
      for (std::size_t i = 0; i < dl; ++i) axpy(r, c[i], l.basis()[i]);
    } else {
      for (std::size_t i = dl; i < c.size(); ++i) axpy(r, c[i], n.basis()[i - dl]);
    }
    return r;
  }
};

inline Splitting make_splitting(const BilagrangianPair& p) {
  std::vector<Vector> cols = p.left.basis();
  cols.insert(cols.end(), p.right.basis().begin(), p.right.basis().end());
  const std::size_t n = p.left.ambient();
  if (cols.size() != n || !intersect(p.left, p.right).is_zero()) throw Error(ErrorCode::NotTransverse, "subspaces are not transverse");
  auto inv = inverse(Matrix::from_columns(cols, n));
  if (!inv) throw Error(ErrorCode::NotTransverse, "subspaces are not transverse");
  return {*inv, p.left.dim(), p.left, p.right};
}

}  // namespace detail

inline void check_pair(const LieAlgebra& g, const TwoForm& w, const BilagrangianPair& p) {
  if (!radical(w).is_zero()) throw Error(ErrorCode::DegenerateForm, "form has a nonzero kernel");
  for (const auto* s : {&p.left, &p.right}) {
    auto c = verify_lagrangian(g, w, *s);
    if (!c.verified) throw Error(ErrorCode::NotLagrangian, c.reasons.front());
  }
  detail::make_splitting(p);
}

// D_X Y = D0_{X1} Y1 + [X2, Y1]_1 + D0_{X2} Y2 + [X1, Y2]_2
inline ConnectionTable connection(const LieAlgebra& g, const TwoForm& w, const BilagrangianPair& p) {
  if (!radical(w).is_zero()) throw Error(ErrorCode::DegenerateForm, "form has a nonzero kernel");
  auto sp = detail::make_splitting(p);
  const std::size_t n = g.dim();
  ConnectionTable t(n);
  for (std::size_t i = 0; i < n; ++i) {
    Vector x = g.basis_vector(i);
    Vector x1 = sp.project(x, true), x2 = sp.project(x, false);
    for (std::size_t j = 0; j < n; ++j) {
      Vector y = g.basis_vector(j);
      Vector y1 = sp.project(y, true), y2 = sp.project(y, false);
      t.at(i, j) = d_zero(g, w, x1, y1) + sp.project(g.bracket(x2, y1), true) + d_zero(g, w, x2, y2) +
                   sp.project(g.bracket(x1, y2), false);
    }
  }
  return t;
}

struct ConnectionAudit {
  bool torsion_free = false;
  bool parallel_form = false;
  bool preserves_left = false;
  bool preserves_right = false;
  bool all() const { return torsion_free && parallel_form && preserves_left && preserves_right; }
};

inline ConnectionAudit audit_connection(const LieAlgebra& g, const TwoForm& w, const BilagrangianPair& p, const ConnectionTable& t) {
  const std::size_t n = g.dim();
  ConnectionAudit a{true, true, true, true};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (t.at(i, j) - t.at(j, i) != g.bracket_basis(i, j)) a.torsion_free = false;
      for (std::size_t k = 0; k < n; ++k)
        if (w(t.at(k, i), g.basis_vector(j)) + w(g.basis_vector(i), t.at(k, j)) != 0) a.parallel_form = false;
    }
  for (std::size_t i = 0; i < n; ++i) {
    for (const auto& v : p.left.basis())
      if (!p.left.contains(t.apply(g.basis_vector(i), v))) a.preserves_left = false;
    for (const auto& v : p.right.basis())
      if (!p.right.contains(t.apply(g.basis_vector(i), v))) a.preserves_right = false;
  }
  return a;
}

struct CurvatureEntry {
  std::size_t i, j, k;
  Vector value;  // R(e_i, e_j) e_k
};

struct Curvature {
  std::vector<CurvatureEntry> nonzero;  // i < j only
  bool hess_flat = true;
};

// R(X,Y)Z = D_X D_Y Z - D_Y D_X Z - D_{[X,Y]} Z
inline Curvature curvature_flatness(const LieAlgebra& g, const ConnectionTable& t) {
  const std::size_t n = g.dim();
  Curvature c;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Vector ei = g.basis_vector(i), ej = g.basis_vector(j);
        Vector r = t.apply(ei, t.at(j, k)) - t.apply(ej, t.at(i, k)) - t.apply(g.bracket_basis(i, j), g.basis_vector(k));
        if (!is_zero(r)) c.nonzero.push_back({i, j, k, std::move(r)});
      }
  c.hess_flat = c.nonzero.empty();
  return c;
}

struct ReducedBilagrangian {
  LieAlgebra algebra;
  TwoForm form;
  BilagrangianPair pair;
  bool quotiented = false;
};

// Passes to g/h when the kernel h of the form is a nonzero ideal.
inline ReducedBilagrangian reduce_pair(const LieAlgebra& g, const TwoForm& w, const BilagrangianPair& p) {
  const Subspace h = radical(w);
  for (const auto* s : {&p.left, &p.right}) {
    auto c = verify_lagrangian(g, w, *s);
    if (!c.verified) throw Error(ErrorCode::NotLagrangian, c.reasons.front());
  }
  if (h.is_zero()) {
    detail::make_splitting(p);
    return {g, w, p, false};
  }
  if (!(intersect(p.left, p.right) == h) || !(p.left + p.right).is_full())
    throw Error(ErrorCode::NotTransverse, "subspaces do not meet exactly in the kernel");
  if (!is_ideal(g, h)) throw Error(ErrorCode::KernelNotIdeal, "kernel of the form is not an ideal");
  auto q = quotient(g, h);
  auto free = h.free_columns();
  const std::size_t d = free.size();
  Matrix m(d, d);
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b) m(a, b) = w(free[a], free[b]);
  auto image = [&](const Subspace& s) {
    std::vector<Vector> vs;
    for (const auto& v : s.basis()) vs.push_back(q.projection * v);
    return Subspace::span(d, vs);
  };
  BilagrangianPair qp{image(p.left), image(p.right)};
  detail::make_splitting(qp);
  return {q.algebra, TwoForm::from_matrix(std::move(m)), qp, true};
}

}  // namespace sympdiag
