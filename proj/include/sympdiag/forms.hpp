#pragma once

#include <array>
#include <vector>

#include "sympdiag/lie_algebra.hpp"

namespace sympdiag {

using Covector = Vector;

// Alternating 2-form stored as its skew Gram matrix in the basis of g.
class TwoForm {
 public:
  TwoForm() = default;
  explicit TwoForm(std::size_t n) : m_(n, n) {}

  // entries (i, j, c) mean c e_i^* ^ e_j^*
  static TwoForm from_entries(std::size_t n, const std::vector<std::tuple<std::size_t, std::size_t, Rational>>& es) {
    TwoForm w(n);
    for (const auto& [i, j, c] : es) {
      w.m_(i, j) += c;
      w.m_(j, i) -= c;
    }
    return w;
  }

  static TwoForm from_matrix(Matrix m) {
    TwoForm w;
    w.m_ = std::move(m);
    return w;
  }

  std::size_t dim() const { return m_.rows(); }
  const Matrix& matrix() const { return m_; }
  Rational operator()(std::size_t i, std::size_t j) const { return m_(i, j); }

  Rational operator()(const Vector& x, const Vector& y) const { return dot(x, m_ * y); }

  bool is_zero() const { return m_.is_zero(); }

  TwoForm operator-() const {
    TwoForm w(dim());
    for (std::size_t i = 0; i < dim(); ++i)
      for (std::size_t j = 0; j < dim(); ++j) w.m_(i, j) = -m_(i, j);
    return w;
  }

  friend TwoForm operator+(const TwoForm& a, const TwoForm& b) {
    TwoForm w(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i)
      for (std::size_t j = 0; j < a.dim(); ++j) w.m_(i, j) = a.m_(i, j) + b.m_(i, j);
    return w;
  }

  friend TwoForm operator*(const Rational& s, const TwoForm& a) {
    TwoForm w(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i)
      for (std::size_t j = 0; j < a.dim(); ++j) w.m_(i, j) = s * a.m_(i, j);
    return w;
  }

  friend bool operator==(const TwoForm& a, const TwoForm& b) { return a.m_ == b.m_; }

 private:
  Matrix m_;
};

// Alternating 3-form as a dense n^3 table.
class ThreeForm {
 public:
  explicit ThreeForm(std::size_t n) : n_(n), t_(n * n * n, Rational(0)) {}
  std::size_t dim() const { return n_; }
  Rational& at(std::size_t i, std::size_t j, std::size_t k) { return t_[(i * n_ + j) * n_ + k]; }
  const Rational& at(std::size_t i, std::size_t j, std::size_t k) const { return t_[(i * n_ + j) * n_ + k]; }
  bool is_zero() const {
    for (const auto& x : t_)
      if (x != 0) return false;
    return true;
  }
  friend bool operator==(const ThreeForm& a, const ThreeForm& b) { return a.t_ == b.t_; }

 private:
  std::size_t n_;
  std::vector<Rational> t_;
};

inline TwoForm wedge(const Covector& a, const Covector& b) {
  const std::size_t n = a.size();
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = a[i] * b[j] - a[j] * b[i];
  return TwoForm::from_matrix(std::move(m));
}

inline ThreeForm wedge(const TwoForm& w, const Covector& a) {
  const std::size_t n = w.dim();
  ThreeForm t(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) t.at(i, j, k) = w(i, j) * a[k] - w(i, k) * a[j] + w(j, k) * a[i];
  return t;
}

// d phi (x, y) = -phi([x, y])
inline TwoForm ce_differential(const LieAlgebra& g, const Covector& phi) {
  const std::size_t n = g.dim();
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = -dot(phi, g.bracket_basis(i, j));
  return TwoForm::from_matrix(std::move(m));
}

// d w (x, y, z) = -w([x,y], z) + w([x,z], y) - w([y,z], x)
inline ThreeForm ce_differential(const LieAlgebra& g, const TwoForm& w) {
  const std::size_t n = g.dim();
  ThreeForm t(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        auto ei = g.basis_vector(i), ej = g.basis_vector(j), ek = g.basis_vector(k);
        Rational v = -w(g.bracket_basis(i, j), ek) + w(g.bracket_basis(i, k), ej) - w(g.bracket_basis(j, k), ei);
        if (v == 0) continue;
        const std::array<std::size_t, 3> idx{i, j, k};
        static constexpr int perms[6][4] = {{0, 1, 2, 1}, {1, 2, 0, 1}, {2, 0, 1, 1}, {1, 0, 2, -1}, {0, 2, 1, -1}, {2, 1, 0, -1}};
        for (const auto& p : perms) t.at(idx[p[0]], idx[p[1]], idx[p[2]]) = p[3] * v;
      }
  return t;
}

struct Triple {
  std::size_t i, j, k;
};

// Basis triples where d w does not vanish.
inline std::vector<Triple> closedness_witnesses(const LieAlgebra& g, const TwoForm& w) {
  ThreeForm t = ce_differential(g, w);
  std::vector<Triple> out;
  for (std::size_t i = 0; i < g.dim(); ++i)
    for (std::size_t j = i + 1; j < g.dim(); ++j)
      for (std::size_t k = j + 1; k < g.dim(); ++k)
        if (t.at(i, j, k) != 0) out.push_back({i, j, k});
  return out;
}

inline bool is_closed(const LieAlgebra& g, const TwoForm& w) { return ce_differential(g, w).is_zero(); }

// Gram matrix of w on the echelon basis of s.
inline Matrix restrict(const TwoForm& w, const Subspace& s) {
  const auto& b = s.basis();
  Matrix m(b.size(), b.size());
  for (std::size_t i = 0; i < b.size(); ++i) {
    Vector wb = w.matrix() * b[i];
    for (std::size_t j = 0; j < b.size(); ++j) m(j, i) = dot(b[j], wb);
  }
  return m;
}

inline std::size_t rank(const TwoForm& w, const Subspace& s) { return rank(restrict(w, s)); }
inline std::size_t rank(const TwoForm& w) { return rank(w.matrix()); }

inline bool is_isotropic(const TwoForm& w, const Subspace& s) { return restrict(w, s).is_zero(); }

// {x in s : w(x, s) = 0}
inline Subspace radical(const TwoForm& w, const Subspace& s) {
  if (s.is_zero()) return s;
  std::vector<Vector> vs;
  for (const auto& c : nullspace(restrict(w, s))) vs.push_back(s.lift(c));
  return Subspace::span(s.ambient(), vs);
}

inline Subspace radical(const TwoForm& w) { return radical(w, Subspace::full(w.dim())); }

// {x in V : w(x, s) = 0}
inline Subspace symplectic_orthogonal(const TwoForm& w, const Subspace& s) {
  std::vector<Vector> rows;
  for (const auto& v : s.basis()) rows.push_back(w.matrix() * v);
  return kernel_of(w.dim(), rows);
}

// Basis of the closed 2-forms on g, solved exactly from the cocycle condition.
inline std::vector<TwoForm> closed_two_forms(const LieAlgebra& g) {
  const std::size_t n = g.dim();
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) pairs.push_back({i, j});
  std::vector<ThreeForm> images;
  for (const auto& [a, b] : pairs) images.push_back(ce_differential(g, wedge(g.basis_vector(a), g.basis_vector(b))));
  std::vector<Vector> rows;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        Vector r(pairs.size());
        for (std::size_t p = 0; p < pairs.size(); ++p) r[p] = images[p].at(i, j, k);
        if (!is_zero(r)) rows.push_back(std::move(r));
      }
  std::vector<Vector> coeffs;
  if (rows.empty()) {
    for (std::size_t p = 0; p < pairs.size(); ++p) coeffs.push_back(unit_vector(pairs.size(), p));
  } else {
    coeffs = nullspace(Matrix::from_rows(rows, pairs.size()));
  }
  std::vector<TwoForm> out;
  for (const auto& c : coeffs) {
    TwoForm w(n);
    for (std::size_t p = 0; p < pairs.size(); ++p)
      if (c[p] != 0) w = w + c[p] * wedge(g.basis_vector(pairs[p].first), g.basis_vector(pairs[p].second));
    out.push_back(std::move(w));
  }
  return out;
}

}  // namespace sympdiag
