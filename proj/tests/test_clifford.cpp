#include <gtest/gtest.h>

#include "suplie/clifford.hpp"

using namespace suplie;

namespace {

std::vector<Rational> ones(std::size_t n) { return std::vector<Rational>(n, Rational(1)); }

ScalarMatrix m2(Scalar a, Scalar b, Scalar c, Scalar d) {
  ScalarMatrix m(2, 2);
  m(0, 0) = a, m(0, 1) = b, m(1, 0) = c, m(1, 1) = d;
  return m;
}

}  // namespace

TEST(Clifford, GeneratorRelations) {
  CliffordAlgebra c = clifford_algebra({Rational(2), Rational(3), Rational(5)});
  EXPECT_EQ(c.dim(), 8u);
  for (std::size_t i = 0; i < 3; ++i) {
    Vec sq = c.multiply(c.vector(unit_vec(3, i)), c.vector(unit_vec(3, i)));
    EXPECT_EQ(sq, scaled(c.mu_diag()[i], c.one()));
    for (std::size_t j = i + 1; j < 3; ++j) {
      Vec ei = c.vector(unit_vec(3, i)), ej = c.vector(unit_vec(3, j));
      EXPECT_TRUE(is_zero(add(c.multiply(ei, ej), c.multiply(ej, ei))));
    }
  }
  EXPECT_EQ(c.name(0b101), "e1e3");
  EXPECT_EQ(mu_of(c, unit_vec(3, 1), unit_vec(3, 1)), Rational(3));
  EXPECT_THROW(clifford_algebra({Rational(1), Rational(-1)}), MathError);
  EXPECT_THROW(clifford_algebra(ones(13)), MathError);
}

TEST(Clifford, TransposeReversesProducts) {
  CliffordAlgebra c = clifford_algebra(ones(4));
  Vec a = c.vector({1, 2, 0, 1}), b = c.vector({0, 1, 1, 3});
  Vec ab = c.multiply(a, b);
  EXPECT_EQ(c.transpose(ab), c.multiply(c.transpose(b), c.transpose(a)));
  // (e1 e2)^t = e2 e1 = -e1 e2
  Vec e12 = c.multiply(c.vector(unit_vec(4, 0)), c.vector(unit_vec(4, 1)));
  EXPECT_EQ(c.transpose(e12), scaled(Rational(-1), e12));
  auto nv = c.norm(e12);
  ASSERT_TRUE(nv);
  EXPECT_EQ(*nv, Rational(1));
}

TEST(Clifford, AlphaActionOfVectorIsReflection) {
  CliffordAlgebra c = clifford_algebra(ones(3));
  auto r = c.alpha_on_V(c.vector({1, 0, 0}));
  ASSERT_TRUE(r);
  EXPECT_EQ(determinant(*r), Rational(-1));
}

TEST(Gamma, TwoGeneratorsArePauliX_Y) {
  CliffordRep r = gamma_rep(ones(2));
  Scalar i = Scalar::i_unit();
  EXPECT_EQ(r.space_dim, 2u);
  EXPECT_EQ(r.gammas[0], m2(0, 1, 1, 0));
  EXPECT_EQ(r.gammas[1], m2(0, Scalar(-1) * i, i, 0));
  ASSERT_TRUE(r.grading);
  EXPECT_EQ(*r.grading, (std::vector<int>{0, 1}));
}

TEST(Gamma, RelationsAndIrreducibility) {
  for (std::size_t n = 1; n <= 6; ++n) {
    std::vector<Rational> mu;
    for (std::size_t k = 0; k < n; ++k) mu.push_back(ratio(static_cast<long>(k + 1), 2));
    for (GammaVariant v : {GammaVariant::standard, GammaVariant::graded}) {
      CliffordRep r = gamma_rep(mu, v);
      std::size_t expect_dim = std::size_t{1} << ((v == GammaVariant::graded ? n + 1 : n) / 2);
      EXPECT_EQ(r.space_dim, expect_dim) << n;
      // traces as a second check: tr(g_a g_b) = delta_ab mu_a dim
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
          ScalarMatrix p = r.gammas[a] * r.gammas[b];
          Scalar t = trace(p);
          EXPECT_EQ(t, a == b ? Scalar(mu[a] * static_cast<long>(r.space_dim)) : Scalar(0)) << n << " " << a << " " << b;
        }
      EXPECT_TRUE(verify_gamma_rep(r, v).all()) << n;
      EXPECT_EQ(commutant_dim(r), 1u) << n;
    }
  }
}

TEST(Gamma, ParityTwins) {
  for (std::size_t n = 1; n <= 6; ++n) {
    CliffordRep r = gamma_rep(ones(n), GammaVariant::graded);
    CliffordRep t = parity_reversed(r);
    EXPECT_EQ(odd_intertwiner_dim(r, t), 1u) << n;
    EXPECT_EQ(even_intertwiner_dim(r, t), n % 2 ? 1u : 0u) << n;
  }
  EXPECT_THROW(parity_reversed(gamma_rep(ones(3))), MathError);
}

TEST(Gamma, IrrationalScalesLiveInTower) {
  CliffordRep r = gamma_rep({Rational(2), Rational(3)});
  ScalarMatrix sq = r.gammas[0] * r.gammas[0];
  EXPECT_EQ(sq, Scalar(2) * ScalarMatrix::identity(2));
  EXPECT_FALSE(r.gammas[1](0, 1).is_rational());
}

TEST(Admissible, OneDimensionalOddPart) {
  // n_1 = R x, [x,x] = 2z, lambda = z^*: mu_lambda(x,x) = 1, chi(x) = zeta8
  LieSuperalgebra l = clifford_lie({rat_matrix_from_rows({{Rational(2)}}, 1)});
  Vec lam{1, 0};
  AdmissibleRep r = lambda_admissible_rep(l, lam);
  EXPECT_EQ(r.space_dim, 1u);
  EXPECT_EQ(r.chi[1](0, 0), Scalar::zeta8());
  EXPECT_EQ(r.chi[1] * r.chi[1], Scalar::i_unit() * ScalarMatrix::identity(1));
  EXPECT_TRUE(verify_admissible(l, lam, r).all());
}

TEST(Admissible, ZeroOnBracketsKillsOddPart) {
  LieSuperalgebra l = clifford_lie({rat_matrix_from_rows({{Rational(1), Rational(0)}, {Rational(0), Rational(1)}}, 2),
                                    rat_matrix_from_rows({{Rational(0), Rational(1)}, {Rational(1), Rational(0)}}, 2)});
  Vec lam = zero_vec(l.dim());
  AdmissibleRep r = lambda_admissible_rep(l, lam);
  EXPECT_EQ(r.mu.radical.dim(), 2u);
  for (auto k : l.indices_of_parity(1)) EXPECT_TRUE(r.chi[k].is_zero());
  EXPECT_TRUE(verify_admissible(l, lam, r).all());
}

TEST(Admissible, NegativeFunctionalIsNotAdmissible) {
  LieSuperalgebra l = clifford_lie({rat_matrix_from_rows({{Rational(2)}}, 1)});
  try {
    lambda_admissible_rep(l, Vec{-1, 0});
    FAIL() << "expected NotAdmissible";
  } catch (const NotAdmissible& e) {
    Vec w = e.witness;
    EXPECT_LT(sgn(dot(Vec{-1, 0}, l.bracket(w, w))), 0);
  }
}

TEST(Admissible, SeededAlgebras) {
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    SeededCliffordLie s = seeded_clifford_lie(2, 3, 2, seed);
    EXPECT_TRUE(is_clifford_lie(s.algebra));
    for (GammaVariant v : {GammaVariant::standard, GammaVariant::graded}) {
      AdmissibleRep r = lambda_admissible_rep(s.algebra, s.lambda, v);
      EXPECT_TRUE(verify_admissible(s.algebra, s.lambda, r).all()) << seed;
    }
  }
}

TEST(Phase, AdjustExchangesSymmetryTypes) {
  CliffordRep r = gamma_rep(ones(2));
  const auto& g = *r.grading;
  ScalarMatrix even = ScalarMatrix::identity(2);
  EXPECT_EQ(phase_adjust(even, g), even);
  for (const auto& gam : r.gammas) {
    EXPECT_TRUE(is_hermitian(gam));
    EXPECT_TRUE(is_supersymmetric(phase_adjust(gam, g, true), g));
    EXPECT_EQ(phase_adjust(phase_adjust(gam, g), g, true), gam);
  }
  ScalarMatrix mixed = even + r.gammas[0];
  EXPECT_THROW(phase_adjust(mixed, g), MathError);
}
