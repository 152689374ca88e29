#include <gtest/gtest.h>

#include <random>

#include "common.hpp"

using namespace sympdiag;

namespace {

Matrix random_matrix(std::mt19937& rng, std::size_t r, std::size_t c) {
  std::uniform_int_distribution<int> d(-3, 3), z(0, 2);
  Matrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = z(rng) == 0 ? 0 : d(rng);
  return m;
}

oracle::Mat to_oracle(const Matrix& m) {
  oracle::Mat a(m.rows(), oracle::Vec(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) a[i][j] = m(i, j);
  return a;
}

LieAlgebra heisenberg() {
  return LieAlgebra::from_upper({"x", "y", "z"}, {{{0, 1}, unit_vector(3, 2)}});
}

}  // namespace

TEST(Rational, ParsesReducedForms) {
  EXPECT_EQ(parse_rational("3/6"), Rational(1, 2));
  EXPECT_EQ(parse_rational("-4"), Rational(-4));
  EXPECT_EQ(parse_rational("-2/-4"), Rational(1, 2));
  EXPECT_EQ(to_string(Rational(-3, 9)), "-1/3");
  EXPECT_EQ(to_string(Rational(7)), "7");
}

TEST(Rational, RejectsBadInput) {
  for (const char* bad : {"1/0", "", "abc", "1.5", "1/", "/2", "1//2"}) {
    try {
      parse_rational(bad);
      ADD_FAILURE() << "accepted " << bad;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::RationalFormat) << bad;
    }
  }
}

TEST(LinearAlgebra, NullspaceAgreesWithOracle) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t r = 1 + rng() % 5, c = 1 + rng() % 6;
    Matrix m = random_matrix(rng, r, c);
    auto ns = nullspace(m);
    for (const auto& v : ns) EXPECT_TRUE(is_zero(m * v));
    std::vector<oracle::Vec> mine;
    for (const auto& v : ns) mine.push_back(oracle::Vec(v.begin(), v.end()));
    auto ref = oracle::nullspace(to_oracle(m), c);
    EXPECT_TRUE(oracle::same_span(mine, ref, c));
    EXPECT_EQ(rank(m) + ns.size(), c);
  }
}

TEST(LinearAlgebra, InverseAndSolve) {
  std::mt19937 rng(11);
  int invertible = 0;
  for (int trial = 0; trial < 100; ++trial) {
    Matrix m = random_matrix(rng, 4, 4);
    auto inv = inverse(m);
    EXPECT_EQ(inv.has_value(), rank(m) == 4);
    if (!inv) continue;
    ++invertible;
    EXPECT_EQ(m * *inv, Matrix::identity(4));
    Vector b{1, 2, 3, 4};
    auto x = solve(m, b);
    ASSERT_TRUE(x.has_value());
    EXPECT_EQ(m * *x, b);
  }
  EXPECT_GT(invertible, 10);
}

TEST(Subspace, CanonicalFormIgnoresSpanningSet) {
  Vector a{1, 2, 0, 1}, b{0, 1, 1, 0};
  auto s = Subspace::span(4, {a, b});
  auto t = Subspace::span(4, {a + b, Rational(3) * b, a - b});
  EXPECT_EQ(s, t);
  EXPECT_EQ(canonical_compare(s, t), 0);
  EXPECT_EQ(s.dim(), 2u);
}

TEST(Subspace, DimensionFormulaForSumAndIntersection) {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    auto rand_space = [&] {
      Matrix m = random_matrix(rng, rng() % 4, 5);
      std::vector<Vector> rows;
      for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(m.row(i));
      return Subspace::span(5, rows);
    };
    Subspace a = rand_space(), b = rand_space();
    Subspace s = a + b, i = intersect(a, b);
    EXPECT_EQ(s.dim() + i.dim(), a.dim() + b.dim());
    EXPECT_TRUE(a.contains(i));
    EXPECT_TRUE(b.contains(i));
    const Subspace ann = annihilator(a);
    EXPECT_EQ(ann.dim(), 5 - a.dim());
    for (const auto& phi : ann.basis())
      for (const auto& v : a.basis()) EXPECT_EQ(dot(phi, v), 0);
  }
}

TEST(Subspace, CanonicalOrderPrefersEarlierPivots) {
  auto first = Subspace::span(3, {unit_vector(3, 0)});
  auto last = Subspace::span(3, {unit_vector(3, 2)});
  EXPECT_TRUE(canonical_less(first, last));
  EXPECT_TRUE(canonical_less(last, Subspace::span(3, {unit_vector(3, 0), unit_vector(3, 1)})));
}

TEST(QuotientFrame, CoordinatesRoundTrip) {
  auto sub = Subspace::span(4, {Vector{1, 1, 0, 0}});
  auto top = Subspace::span(4, {Vector{1, 1, 0, 0}, Vector{0, 1, 0, 0}, Vector{0, 0, 1, 1}});
  QuotientFrame f(sub, top);
  EXPECT_EQ(f.dim(), 2u);
  for (const auto& v : top.basis()) EXPECT_TRUE(top.contains(f.lift(f.coordinates(v))));
  EXPECT_TRUE(sub.contains(Vector{1, 1, 0, 0} - f.lift(f.coordinates(Vector{1, 1, 0, 0}))));
}

TEST(LieAlgebra, CorpusAlgebrasSatisfyJacobi) {
  for (const auto& name : testutil::corpus_names()) {
    auto doc = testutil::load(name);
    EXPECT_TRUE(validate_algebra(doc.algebra).ok()) << name;
  }
}

TEST(LieAlgebra, JacobiViolationIsReported) {
  // [x,y] = y, [y,z] = x, [x,z] = 0 fails Jacobi
  auto g = LieAlgebra::from_upper({"x", "y", "z"}, {{{0, 1}, unit_vector(3, 1)}, {{1, 2}, unit_vector(3, 0)}});
  auto rep = validate_algebra(g);
  ASSERT_FALSE(rep.ok());
  EXPECT_EQ(rep.violations.front().kind, AlgebraViolation::Kind::Jacobi);
}

TEST(LieAlgebra, BracketMatchesOracle) {
  for (const auto& name : testutil::corpus_names()) {
    auto doc = testutil::load(name);
    auto ref = testutil::load_oracle(name);
    const auto& g = doc.algebra;
    for (std::size_t i = 0; i < g.dim(); ++i)
      for (std::size_t j = 0; j < g.dim(); ++j)
        EXPECT_EQ(testutil::to_oracle(g.bracket_basis(i, j)), ref.g.table[i][j]) << name;
  }
}

TEST(LieAlgebra, SeriesAndPredicates) {
  auto h = heisenberg();
  EXPECT_TRUE(is_nilpotent(h));
  EXPECT_TRUE(is_solvable(h));
  EXPECT_FALSE(is_abelian(h));
  EXPECT_EQ(derived_algebra(h), testutil::span(h, {"z"}));

  auto e1 = testutil::load("E1").algebra;
  EXPECT_TRUE(is_solvable(e1));
  EXPECT_FALSE(is_nilpotent(e1));
  auto ds = derived_series(e1);
  EXPECT_EQ(ds[1], testutil::span(e1, {"c", "b", "a"}));
  EXPECT_EQ(ds[2], testutil::span(e1, {"c"}));
  EXPECT_TRUE(ds.back().is_zero());

  // sl(2): e, f, h with [h,e] = 2e, [h,f] = -2f, [e,f] = h
  auto sl2 = LieAlgebra::from_upper({"e", "f", "h"}, {{{2, 0}, Vector{2, 0, 0}}, {{2, 1}, Vector{0, -2, 0}}, {{0, 1}, Vector{0, 0, 1}}});
  EXPECT_TRUE(validate_algebra(sl2).ok());
  EXPECT_FALSE(is_solvable(sl2));
}

TEST(LieAlgebra, IdealsNormalizersAndClosures) {
  auto g = testutil::load("D1").algebra;
  EXPECT_TRUE(is_ideal(g, testutil::span(g, {"x"})));
  EXPECT_FALSE(is_ideal(g, testutil::span(g, {"t"})));
  EXPECT_TRUE(is_subalgebra(g, testutil::span(g, {"t", "x"})));
  EXPECT_EQ(ideal_closure(g, testutil::span(g, {"t"})), testutil::span(g, {"t", "x", "y"}));
  EXPECT_EQ(normalizer_of_in(g, testutil::span(g, {"t"}), g.whole()), testutil::span(g, {"t", "c"}));
  EXPECT_EQ(subalgebra_closure(g, std::vector<Vector>{Vector{1, 0, 0, 0}, Vector{0, 1, 1, 0}}), testutil::span(g, {"t", "x", "y"}));
  try {
    is_ideal_in(g, testutil::span(g, {"t"}), testutil::span(g, {"x", "y"}));
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::SubspaceNotNested);
  }
}

TEST(LieAlgebra, QuotientByIdeal) {
  auto g = testutil::load("D1").algebra;
  auto q = quotient(g, testutil::span(g, {"c"}));
  EXPECT_EQ(q.algebra.dim(), 3u);
  EXPECT_TRUE(validate_algebra(q.algebra).ok());
  EXPECT_EQ(q.algebra.names(), (std::vector<std::string>{"t", "x", "y"}));
  EXPECT_EQ(q.algebra.bracket_basis(0, 1), (Vector{0, 1, 0}));
  try {
    quotient(g, testutil::span(g, {"t"}));
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotAnIdeal);
  }
}

TEST(LieAlgebra, InducedSubalgebra) {
  auto g = testutil::load("E1").algebra;
  auto s = induced_subalgebra(g, testutil::span(g, {"c", "b", "a"}));
  EXPECT_EQ(s.dim(), 3u);
  EXPECT_TRUE(is_nilpotent(s));
  try {
    induced_subalgebra(g, g.span({Vector{0, 0, 1, 0, 0}, Vector{0, 1, 0, 0, 0}}) + testutil::span(g, {"u"}));
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotSubalgebra);
  }
}

TEST(Eigen, CharacteristicPolynomialAndRationalRoots) {
  Matrix d(3, 3);
  d(0, 0) = 1;
  d(1, 1) = Rational(1, 2);
  d(2, 2) = -3;
  d(0, 2) = 5;
  auto roots = rational_eigenvalues(d);
  EXPECT_EQ(roots, (std::vector<Rational>{-3, Rational(1, 2), 1}));
  for (const auto& r : roots) EXPECT_EQ(evaluate(characteristic_polynomial(d), r), 0);

  Matrix rot(2, 2);
  rot(0, 1) = -1;
  rot(1, 0) = 1;
  EXPECT_TRUE(rational_eigenvalues(rot).empty());
  EXPECT_TRUE(common_eigenspaces({rot}, 2).empty());
}

TEST(Eigen, CommonEigenspacesOfCommutingFamily) {
  Matrix a(3, 3), b(3, 3);
  a(0, 0) = 1;
  a(1, 1) = 1;
  a(2, 2) = 2;
  b(0, 0) = 3;
  b(1, 1) = 4;
  b(2, 2) = 4;
  auto spaces = common_eigenspaces({a, b}, 3);
  ASSERT_EQ(spaces.size(), 3u);
  for (const auto& es : spaces) {
    EXPECT_EQ(es.space.dim(), 1u);
    for (const auto& v : es.space.basis()) {
      EXPECT_EQ(a * v, es.values[0] * v);
      EXPECT_EQ(b * v, es.values[1] * v);
    }
  }
}
