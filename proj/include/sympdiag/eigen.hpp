#pragma once

#include <algorithm>
#include <set>
#include <vector>

#include "sympdiag/subspace.hpp"

namespace sympdiag {

// Coefficients low degree first.
using Polynomial = std::vector<Rational>;

inline Polynomial characteristic_polynomial(const Matrix& a) {
  const std::size_t n = a.rows();
  Polynomial c(n + 1, Rational(0));
  c[n] = 1;
  Matrix m(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    m = a * m;
    for (std::size_t i = 0; i < n; ++i) m(i, i) += c[n - k + 1];
    Matrix am = a * m;
    Rational tr = 0;
    for (std::size_t i = 0; i < n; ++i) tr += am(i, i);
    c[n - k] = -tr / static_cast<long>(k);
  }
  return c;
}

inline Rational evaluate(const Polynomial& p, const Rational& x) {
  Rational r = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) r = r * x + *it;
  return r;
}

namespace detail {

// Positive divisors of |v|, v != 0. Trial division up to 10^6; a larger
// leftover cofactor is treated as prime.
inline std::vector<Integer> divisors(Integer v) {
  if (v < 0) v = -v;
  std::vector<std::pair<Integer, int>> factors;
  for (Integer p = 2; p <= 1000000 && p * p <= v; ++p) {
    if (v % p != 0) continue;
    int e = 0;
    while (v % p == 0) {
      v /= p;
      ++e;
    }
    factors.push_back({p, e});
  }
  if (v > 1) factors.push_back({v, 1});
  std::vector<Integer> out{1};
  for (const auto& [p, e] : factors) {
    std::size_t base = out.size();
    Integer pk = 1;
    for (int k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline Integer lcm(const Integer& a, const Integer& b) { return a / boost::multiprecision::gcd(a, b) * b; }

}  // namespace detail

// Distinct rational roots, ascending.
inline std::vector<Rational> rational_roots(Polynomial p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  std::set<Rational> roots;
  if (p.size() <= 1) return {};
  std::size_t low = 0;
  while (p[low] == 0) ++low;
  if (low > 0) roots.insert(Rational(0));
  Polynomial q(p.begin() + static_cast<long>(low), p.end());
  if (q.size() > 1) {
    Integer l = 1;
    for (const auto& c : q) l = detail::lcm(l, den(c));
    std::vector<Integer> ic;
    for (const auto& c : q) ic.push_back(num(c * l));
    auto ps = detail::divisors(ic.front());
    auto qs = detail::divisors(ic.back());
    for (const auto& a : ps)
      for (const auto& b : qs)
        for (int sign : {1, -1}) {
          Rational x(Integer(sign) * a, b);
          if (roots.count(x)) continue;
          if (evaluate(q, x) == 0) roots.insert(x);
        }
  }
  return {roots.begin(), roots.end()};
}

inline std::vector<Rational> rational_eigenvalues(const Matrix& a) { return rational_roots(characteristic_polynomial(a)); }

struct Eigenspace {
  std::vector<Rational> values;  // one eigenvalue per matrix
  Subspace space;
};

// Common eigenspaces of a family of commuting-or-not d x d matrices with rational eigenvalues.
inline std::vector<Eigenspace> common_eigenspaces(const std::vector<Matrix>& mats, std::size_t d) {
  std::vector<Eigenspace> out;
  if (d == 0) return out;
  std::vector<std::vector<Rational>> spectra;
  for (const auto& m : mats) spectra.push_back(rational_eigenvalues(m));
  std::vector<Rational> values;
  auto rec = [&](auto&& self, std::size_t i, const Subspace& w) -> void {
    if (i == mats.size()) {
      out.push_back({values, w});
      return;
    }
    Matrix mb(d, w.dim());
    for (std::size_t c = 0; c < w.dim(); ++c) {
      Vector col = mats[i] * w.basis()[c];
      for (std::size_t r = 0; r < d; ++r) mb(r, c) = col[r];
    }
    for (const auto& lambda : spectra[i]) {
      Matrix shifted = mb;
      for (std::size_t c = 0; c < w.dim(); ++c)
        for (std::size_t r = 0; r < d; ++r) shifted(r, c) -= lambda * w.basis()[c][r];
      auto ns = nullspace(shifted);
      if (ns.empty()) continue;
      std::vector<Vector> vs;
      for (const auto& c : ns) vs.push_back(w.lift(c));
      values.push_back(lambda);
      self(self, i + 1, Subspace::span(d, vs));
      values.pop_back();
    }
  };
  rec(rec, 0, Subspace::full(d));
  return out;
}

}  // namespace sympdiag
