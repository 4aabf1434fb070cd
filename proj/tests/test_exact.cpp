#include <gtest/gtest.h>

#include <random>

#include "suplie/linalg.hpp"
#include "suplie/scalar.hpp"

using namespace suplie;

namespace {

// Principal minor enumeration: the exponential oracle for definiteness.
Definiteness minors_oracle(const RatMatrix& g) {
  const std::size_t n = g.rows();
  bool pd = true;
  for (std::size_t k = 1; k <= n; ++k) {
    RatMatrix m(k, k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) m(i, j) = g(i, j);
    if (sgn(determinant(m)) <= 0) pd = false;
  }
  if (pd) return Definiteness::positive_definite;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1) idx.push_back(i);
    RatMatrix m(idx.size(), idx.size());
    for (std::size_t a = 0; a < idx.size(); ++a)
      for (std::size_t b = 0; b < idx.size(); ++b) m(a, b) = g(idx[a], idx[b]);
    if (sgn(determinant(m)) < 0) return Definiteness::indefinite_or_negative;
  }
  return Definiteness::positive_semidefinite;
}

RatMatrix random_matrix(std::mt19937& rng, std::size_t r, std::size_t c, int lo, int hi, double density = 1.0) {
  std::uniform_int_distribution<int> d(lo, hi);
  std::uniform_real_distribution<double> u(0, 1);
  RatMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j)
      if (u(rng) < density) {
        m(i, j) = Rational(d(rng), 1 + std::abs(d(rng)));
        m(i, j).canonicalize();
      }
  return m;
}

}  // namespace

TEST(Scalar, Zeta8SquaresToI) {
  Field f = extend_field(adjoin_i(Field{}), 2);
  Scalar z = Scalar::zeta8();
  EXPECT_TRUE(f.contains(z));
  EXPECT_EQ(z * z, Scalar::i_unit());
  EXPECT_FALSE(Field{}.contains(z));
}

TEST(Scalar, ProductOfRadicals) {
  // sqrt6 * sqrt10 = 2 sqrt15
  EXPECT_EQ(Scalar::sqrt(6) * Scalar::sqrt(10), Scalar(2) * Scalar::sqrt(15));
  EXPECT_EQ(Scalar::sqrt(12), Scalar(2) * Scalar::sqrt(3));
  EXPECT_EQ(Scalar::i_unit() * Scalar::i_unit(), Scalar(-1));
}

TEST(Scalar, InverseIsExact) {
  std::vector<Scalar> xs = {Scalar::parse("1+sqrt(2)"), Scalar::parse("3/2-1/3*sqrt(3)*i+sqrt(6)"), Scalar::zeta8(),
                            Scalar::parse("sqrt(2)+sqrt(3)+sqrt(5)")};
  for (const auto& x : xs) EXPECT_EQ(x * x.inverse(), Scalar(1)) << x.to_string();
}

TEST(Scalar, TextRoundTrip) {
  for (const char* s : {"0", "-1/2", "3*i", "1/2*sqrt(2)+1/2*sqrt(2)*i", "1-2*i", "-7/3*sqrt(5)"}) {
    Scalar x = Scalar::parse(s);
    EXPECT_EQ(Scalar::parse(x.to_string()), x);
  }
  EXPECT_EQ(Scalar::parse("1/2*sqrt(2)+1/2*sqrt(2)*i"), Scalar::zeta8());
  EXPECT_THROW(Scalar::parse("1/0"), ParseError);
  EXPECT_THROW(Scalar::parse("abc"), ParseError);
}

TEST(Field, ExtendRejectsNonSquarefree) {
  try {
    extend_field(Field{}, 4);
    FAIL();
  } catch (const MathError& e) {
    EXPECT_NE(std::string(e.what()).find("not squarefree"), std::string::npos);
  }
  EXPECT_THROW(extend_field(Field{}, 1), MathError);
}

TEST(Field, ExtendIsIdempotent) {
  Field a = extend_field(Field{}, 2);
  Field b = extend_field(a, 2);
  EXPECT_EQ(b.degree(), 2u);
  Field c = extend_field(extend_field(a, 3), 6);  // sqrt6 = sqrt2 sqrt3
  EXPECT_EQ(c.degree(), 4u);
  EXPECT_TRUE(c.contains(Scalar::sqrt(6)));
}

TEST(Linalg, SolveIdentity) {
  auto s = solve_linear(RatMatrix::identity(3), {1, 2, 3});
  ASSERT_TRUE(s.particular);
  EXPECT_EQ(*s.particular, (Vec{1, 2, 3}));
  EXPECT_EQ(s.kernel.dim(), 0u);
}

TEST(Linalg, SolveZero) {
  auto s = solve_linear(RatMatrix(2, 2), {0, 0});
  EXPECT_EQ(s.kernel.dim(), 2u);
  auto t = solve_linear(RatMatrix(2, 2), {0, 1});
  EXPECT_FALSE(t.particular);
  EXPECT_EQ(t.kernel.dim(), 2u);
}

TEST(Linalg, RankNullityAgainstBareiss) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 10; ++trial) {
    RatMatrix a = random_matrix(rng, 20, 30, -3, 3, trial % 2 ? 0.2 : 1.0);
    // make some rows dependent
    for (std::size_t j = 0; j < 30; ++j) a(19, j) = a(0, j) - a(1, j);
    std::size_t r = rank(a);
    EXPECT_EQ(r, bareiss_rank(a));
    EXPECT_EQ(r + kernel(a).dim(), 30u);
    Subspace ker = kernel(a);
    for (const auto& k : ker.basis()) EXPECT_TRUE(is_zero(a * k));
  }
}

TEST(Linalg, SolveRandomConsistent) {
  std::mt19937 rng(5);
  RatMatrix a = random_matrix(rng, 12, 15, -4, 4);
  Vec x0(15);
  for (auto& v : x0) {
    v = Rational(static_cast<int>(rng() % 9) - 4, 1 + rng() % 3);
    v.canonicalize();
  }
  auto s = solve_linear(a, a * x0);
  ASSERT_TRUE(s.particular);
  EXPECT_EQ(a * *s.particular, a * x0);
}

TEST(Linalg, EchelonIsCanonical) {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 10; ++trial) {
    RatMatrix a = random_matrix(rng, 4, 9, -3, 3);
    std::vector<Vec> gens, mixed;
    for (std::size_t i = 0; i < 4; ++i) gens.push_back(a.row(i));
    // random invertible recombination
    for (std::size_t i = 0; i < 4; ++i) {
      Vec v = scaled(Rational(i + 2), gens[i]);
      for (std::size_t j = 0; j < i; ++j) axpy(v, Rational(static_cast<int>(rng() % 5) - 2), gens[j]);
      mixed.push_back(v);
    }
    std::reverse(mixed.begin(), mixed.end());
    EXPECT_EQ(Subspace::span(9, gens), Subspace::span(9, mixed));
  }
}

TEST(Linalg, IntersectAndContains) {
  auto e = [](std::size_t i) { return unit_vec(3, i); };
  Subspace u = Subspace::span(3, {e(0), e(1)}), v = Subspace::span(3, {e(1), e(2)});
  EXPECT_EQ(intersect(u, v), Subspace::span(3, {e(1)}));
  EXPECT_FALSE(Subspace::span(3, {e(0)}).contains(Subspace::span(3, {add(e(0), e(1))})));
  EXPECT_THROW(quotient_basis(Subspace::span(3, {e(0)}), v), MathError);
  EXPECT_EQ(quotient_basis(u, Subspace::span(3, {e(1)})).size(), 1u);
}

TEST(Linalg, ModularLaw) {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    RatMatrix a = random_matrix(rng, 1 + trial % 5, 7, -2, 2, 0.5), b = random_matrix(rng, 1 + (trial * 3) % 6, 7, -2, 2, 0.5);
    Subspace u = row_space(a), v = row_space(b);
    EXPECT_EQ(subspace_sum(u, v).dim() + intersect(u, v).dim(), u.dim() + v.dim());
    EXPECT_TRUE(u.contains(intersect(u, v)));
    EXPECT_TRUE(v.contains(intersect(u, v)));
  }
}

TEST(Definiteness, SmallCases) {
  RatMatrix d12(2, 2), d10(2, 2), ind(2, 2);
  d12(0, 0) = 1, d12(1, 1) = 2;
  d10(0, 0) = 1;
  ind(0, 0) = ind(1, 1) = 1, ind(0, 1) = ind(1, 0) = 2;
  EXPECT_EQ(definiteness(d12).kind, Definiteness::positive_definite);
  EXPECT_EQ(definiteness(d10).kind, Definiteness::positive_semidefinite);
  auto r = definiteness(ind);
  EXPECT_EQ(r.kind, Definiteness::indefinite_or_negative);
  EXPECT_LT(sgn(quadratic(ind, r.witness)), 0);
  EXPECT_EQ(determinant(ind), Rational(-3));
  RatMatrix ns(2, 2);
  ns(0, 1) = 1;
  EXPECT_THROW(definiteness(ns), MathError);
}

TEST(Definiteness, AgreesWithMinorOracle) {
  std::mt19937 rng(2024);
  std::uniform_int_distribution<int> d(-2, 2);
  for (int trial = 0; trial < 400; ++trial) {
    std::size_t n = 1 + trial % 5;
    RatMatrix g(n, n);
    if (trial % 3 == 0) {
      // Gram matrices are PSD, often singular
      RatMatrix b(n, n > 1 ? n - 1 : 1);
      for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) b(i, j) = d(rng);
      g = b * b.transpose();
    } else {
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) g(i, j) = g(j, i) = d(rng);
    }
    auto r = definiteness(g);
    EXPECT_EQ(r.kind, minors_oracle(g));
    if (r.kind != Definiteness::positive_definite) {
      EXPECT_FALSE(is_zero(r.witness));
      EXPECT_LE(sgn(quadratic(g, r.witness)), 0);
    }
  }
}

TEST(Definiteness, CongruenceDiagonalizes) {
  std::mt19937 rng(9);
  std::uniform_int_distribution<int> d(-3, 3);
  for (int trial = 0; trial < 50; ++trial) {
    std::size_t n = 2 + trial % 6;
    RatMatrix g(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) g(i, j) = g(j, i) = d(rng);
    if (trial % 2)
      for (std::size_t i = 0; i < n; ++i) g(i, i) = d(rng);
    Congruence c = congruence_diagonalize(g);
    RatMatrix dd = c.basis.transpose() * g * c.basis;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) EXPECT_EQ(dd(i, j), i == j ? c.diagonal[i] : Rational(0));
    EXPECT_NE(determinant(c.basis), 0);
  }
}
