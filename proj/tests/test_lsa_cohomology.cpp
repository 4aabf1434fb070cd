#include <gtest/gtest.h>

#include <random>

#include "suplie/cohomology.hpp"

using namespace suplie;

namespace {

ScalarMatrix pauli(int k) {
  ScalarMatrix m(2, 2);
  Scalar i = Scalar::i_unit();
  if (k == 1) m(0, 1) = m(1, 0) = 1;
  if (k == 2) m(0, 1) = -i, m(1, 0) = i;
  if (k == 3) m(0, 0) = 1, m(1, 1) = -1;
  return m;
}

LieSuperalgebra su2() {
  std::vector<ScalarMatrix> b;
  for (int k = 1; k <= 3; ++k) b.push_back(Scalar::i_unit() * pauli(k));
  return from_matrix_basis(b, {0, 0, 0}, 2, 0, {"E1", "E2", "E3"});
}

// 2x2 matrix bracket done by hand, independent of MatrixSpan
Scalar entry_of_commutator(const ScalarMatrix& a, const ScalarMatrix& b, std::size_t r, std::size_t c) {
  Scalar s;
  for (std::size_t k = 0; k < 2; ++k) s = s + a(r, k) * b(k, c) - b(r, k) * a(k, c);
  return s;
}

LieSuperalgebra abelian(std::size_t n, int parity = 0) {
  std::vector<std::string> names;
  for (std::size_t k = 0; k < n; ++k) names.push_back("a" + std::to_string(k + 1));
  return make_lsa(names, std::vector<int>(n, parity), {});
}

}  // namespace

TEST(Lsa, PauliStructureConstants) {
  LieSuperalgebra l = su2();
  // [i s1, i s2] = -[s1,s2] = -2 i s3
  auto i = Scalar::i_unit();
  ScalarMatrix a = i * pauli(1), b = i * pauli(2), c = i * pauli(3);
  EXPECT_EQ(entry_of_commutator(a, b, 0, 0), Scalar(-2) * c(0, 0));
  EXPECT_EQ(l.bracket_basis(0, 1), (SparseRow{{2, Rational(-2)}}));
  EXPECT_EQ(l.bracket_basis(1, 2), (SparseRow{{0, Rational(-2)}}));
  EXPECT_EQ(l.bracket_basis(2, 0), (SparseRow{{1, Rational(-2)}}));
  EXPECT_EQ(l.bracket_basis(1, 0), (SparseRow{{2, Rational(2)}}));
}

TEST(Lsa, KillingOfSu2) {
  BilinearForm k = killing_form(su2());
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) EXPECT_EQ(k.gram(i, j), i == j ? Rational(-8) : Rational(0));
  FormReport r = full_form_report(su2(), k);
  EXPECT_TRUE(r.supersymmetric && r.invariant && r.nondegenerate);
  EXPECT_EQ(r.parity, FormParity::even);
  EXPECT_TRUE(r.derivation_invariant.value_or(false));
}

TEST(Lsa, ValidationNamesTheFailure) {
  BracketTable bad{{{0, 1}, {0, 0, 1}}, {{1, 0}, {0, 0, 1}}};
  try {
    make_lsa({"e1", "e2", "e3"}, {0, 0, 0}, bad);
    FAIL();
  } catch (const LsaValidationError& e) {
    EXPECT_EQ(e.kind, LsaValidationError::Kind::antisymmetry);
    EXPECT_NE(std::string(e.what()).find("(2,1)"), std::string::npos);
  }
  EXPECT_NO_THROW(make_lsa({"x"}, {1}, {}));
  // Jacobi failure: [e1,e2]=e3, [e3,e1]=e1 breaks Jacobi on (e1,e2,e3)
  BracketTable jac{{{0, 1}, {0, 0, 1}}, {{1, 0}, {0, 0, -1}}, {{2, 0}, {1, 0, 0}}, {{0, 2}, {-1, 0, 0}}};
  try {
    make_lsa({"e1", "e2", "e3"}, {0, 0, 0}, jac);
    FAIL();
  } catch (const LsaValidationError& e) {
    EXPECT_EQ(e.kind, LsaValidationError::Kind::jacobi);
  }
}

TEST(Lsa, NotClosedSpanIsRejected) {
  std::vector<ScalarMatrix> b = {Scalar::i_unit() * pauli(1), Scalar::i_unit() * pauli(2)};
  EXPECT_THROW(from_matrix_basis(b, {0, 0}, 2, 0), MathError);
}

TEST(Lsa, ZeroFormReport) {
  auto r = form_report(su2(), BilinearForm{RatMatrix(3, 3)});
  EXPECT_TRUE(r.supersymmetric && r.invariant);
  EXPECT_FALSE(r.nondegenerate);
}

TEST(Lsa, IdealsAndStructure) {
  LieSuperalgebra l = su2();
  EXPECT_EQ(ideal_closure(l, {unit_vec(3, 2)}).dim(), 3u);
  EXPECT_EQ(ideal_closure(l, {}).dim(), 0u);
  auto s = structure_report(l);
  EXPECT_TRUE(s.perfect);
  EXPECT_EQ(s.center.dim(), 0u);
  auto a = structure_report(abelian(2));
  EXPECT_EQ(a.derived.dim(), 0u);
  EXPECT_EQ(a.center.dim(), 2u);
  EXPECT_EQ(generated_submodule({RatMatrix(2, 2)}, {1, 0}).dim(), 1u);
  EXPECT_EQ(generated_submodule({RatMatrix(2, 2)}, {0, 0}).dim(), 0u);
}

TEST(Lsa, QuotientProjectionIsHomomorphism) {
  // su(2) + R (center) quotient by the center
  LieSuperalgebra l = su2();
  Cocycle2 zero = scalar_cocycle(RatMatrix(3, 3), 0);
  LieSuperalgebra e = central_extension(l, zero).algebra;
  Quotient q = quotient_lsa(e, Subspace::span(4, {unit_vec(4, 3)}));
  EXPECT_EQ(q.algebra, l);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      EXPECT_EQ(q.projection * e.bracket(unit_vec(4, i), unit_vec(4, j)),
                q.algebra.bracket(q.projection * unit_vec(4, i), q.projection * unit_vec(4, j)));
  EXPECT_THROW(quotient_lsa(l, Subspace::span(3, {unit_vec(3, 0)})), MathError);
}

TEST(Assoc, GrassmannBasics) {
  AssocSuperalgebra a = grassmann(2);
  EXPECT_EQ(a.dim(), 4u);
  EXPECT_EQ(a.names(), (std::vector<std::string>{"1", "e1", "e2", "e1^e2"}));
  EXPECT_EQ(a.product_basis(2, 1), (SparseRow{{3, Rational(-1)}}));
  EXPECT_TRUE(a.product_basis(3, 1).empty());
  for (std::size_t s = 1; s <= 5; ++s) EXPECT_NO_THROW(validate_assoc(grassmann(s)));
  EXPECT_EQ(graded_part(grassmann(3), GradedSelector::degree(2)).dim(), 3u);
  EXPECT_EQ(graded_part(grassmann(3), GradedSelector::plus()).dim(), 7u);
  EXPECT_EQ(graded_part(grassmann(4), GradedSelector::odd()).dim(), 8u);
  EXPECT_EQ(augmentation(a, {1, 3, 0, 2}), Rational(1));
}

TEST(Assoc, OddSquaresVanishAndAugmentationMultiplies) {
  AssocSuperalgebra a = grassmann(4);
  std::mt19937 rng(1);
  std::uniform_int_distribution<int> d(-3, 3);
  auto odd = graded_indices(a, GradedSelector::odd());
  for (int t = 0; t < 20; ++t) {
    Vec x = zero_vec(a.dim()), y = zero_vec(a.dim()), z = zero_vec(a.dim());
    for (auto k : odd) x[k] = d(rng);
    for (std::size_t k = 0; k < a.dim(); ++k) y[k] = d(rng), z[k] = d(rng);
    EXPECT_TRUE(is_zero(a.multiply(x, x)));
    EXPECT_EQ(augmentation(a, a.multiply(y, z)), augmentation(a, y) * augmentation(a, z));
  }
}

TEST(Assoc, TruncatedQuotient) {
  AssocSuperalgebra a = grassmann(3);
  auto q = quotient_assoc(a, graded_part(a, GradedSelector::at_least(3)));
  EXPECT_EQ(q.algebra.dim(), 7u);
  auto q2 = quotient_assoc(grassmann(2), graded_part(grassmann(2), GradedSelector::at_least(3)));
  EXPECT_EQ(q2.algebra.dim(), 4u);
  EXPECT_THROW(quotient_assoc(a, Subspace::span(8, {unit_vec(8, 1)})), MathError);
}

TEST(Current, Basics) {
  const LieSuperalgebra k = su2();
  CurrentAlgebra g = current_lsa(grassmann(1), k);
  EXPECT_EQ(g.dim(), 6u);
  EXPECT_EQ(g.algebra.odd_dim(), 3u);
  EXPECT_TRUE(g.algebra.bracket_basis(g.index(1, 0), g.index(1, 1)).empty());
  for (std::size_t x = 0; x < 3; ++x)
    for (std::size_t y = 0; y < 3; ++y) {
      SparseRow want;
      for (auto [z, c] : k.bracket_basis(x, y)) want.emplace_back(g.index(1, z), c);
      EXPECT_EQ(g.algebra.bracket_basis(g.index(0, x), g.index(1, y)), want);
    }
  EXPECT_EQ(g.algebra.names()[4], "e1 (x) E2");
  CurrentAlgebra g2 = current_lsa(grassmann(2), su2());
  EXPECT_TRUE(structure_report(g2.algebra).perfect);
  EXPECT_EQ(kernel(eps_projection(g2)).dim(), 9u);
}

TEST(Cohomology, Su2Derivations) {
  LieSuperalgebra l = su2();
  auto d = derivation_space(l);
  EXPECT_EQ(d.all.dim(), 3u);
  EXPECT_EQ(d.outer_dim(), 0u);
  EXPECT_EQ(centroid(l).dim(), 1u);
  BilinearForm k = killing_form(l);
  EXPECT_EQ(split_by_star(l, k, d.all, -1).dim(), 3u);
  EXPECT_EQ(split_by_star(l, k, centroid(l), 1).dim(), 1u);
  RatMatrix id = RatMatrix::identity(3);
  EXPECT_EQ(star(l, k, id), id);
  auto ab = derivation_space(abelian(2));
  EXPECT_EQ(ab.all.dim(), 4u);
  EXPECT_EQ(ab.inner.dim(), 0u);
  EXPECT_EQ(centroid(abelian(2)).dim(), 4u);
}

TEST(Cohomology, StarIsInvolution) {
  LieSuperalgebra l = su2();
  BilinearForm k = killing_form(l);
  std::mt19937 rng(4);
  std::uniform_int_distribution<int> d(-3, 3);
  for (int t = 0; t < 10; ++t) {
    RatMatrix m(3, 3);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) m(i, j) = d(rng);
    EXPECT_EQ(star(l, k, star(l, k, m)), m);
  }
  RatMatrix ad = l.ad_basis(2);
  EXPECT_EQ(star(l, k, ad), detail::negated(ad));
}

TEST(Cohomology, Su2Z2) {
  LieSuperalgebra l = su2();
  Z2Data z = z2_b2(l);
  EXPECT_EQ(z.z2.dim(), 3u);
  EXPECT_EQ(z.b2.dim(), 3u);
  EXPECT_EQ(z.h2(), 0u);
  // kappa_{ad e3} is a coboundary
  RatMatrix w = kappa_T(killing_form(l), l.ad_basis(2)).gram;
  EXPECT_TRUE(is_cocycle(l, w));
  EXPECT_TRUE(z.b2.contains(z.coords.from_gram(w)));
  EXPECT_EQ(invariant_symmetric_forms_dim(l), 1u);
}

TEST(Cohomology, SortedTriplesAgreeWithExhaustiveCheck) {
  CurrentAlgebra g = current_lsa(grassmann(2), su2());
  for (const auto& c : z2_space(g.algebra)) EXPECT_FALSE(cocycle_violation(g.algebra, c.grams[0])) << "z2 basis element";
}

TEST(Cohomology, HochschildLambda1) {
  auto h = hochschild_space(grassmann(1));
  ASSERT_EQ(h.size(), 1u);
  EXPECT_EQ(h[0](1, 1), Rational(1));
  for (std::size_t s = 1; s <= 3; ++s)
    for (const auto& f : hochschild_space(grassmann(s))) {
      EXPECT_TRUE(is_hochschild(grassmann(s), f));
      for (std::size_t k = 0; k < f.cols(); ++k) EXPECT_EQ(f(0, k), 0);
    }
  // delta map on Lambda_2
  RatMatrix delta(4, 4);
  delta(1, 1) = delta(2, 2) = 1;
  EXPECT_TRUE(is_hochschild(grassmann(2), delta));
}

TEST(Cohomology, Heisenberg) {
  RatMatrix w(2, 2);
  w(0, 1) = 1, w(1, 0) = -1;
  auto e = central_extension(abelian(2), scalar_cocycle(w, 0));
  EXPECT_EQ(e.algebra.dim(), 3u);
  EXPECT_EQ(e.algebra.bracket_basis(0, 1), (SparseRow{{2, Rational(1)}}));
  EXPECT_EQ(structure_report(e.algebra).center.dim(), 1u);
}

TEST(Cohomology, XiExtensionOfLambda2Su2) {
  CurrentAlgebra g = current_lsa(grassmann(2), su2());
  BilinearForm k = killing_form(su2());
  RatMatrix delta(4, 4);
  delta(1, 1) = delta(2, 2) = 1;
  Cocycle2 xi = xi_cocycle(g, k, delta, RatMatrix::identity(3));
  auto e = central_extension(g.algebra, xi);
  EXPECT_EQ(e.algebra.dim(), 13u);
  EXPECT_TRUE(structure_report(e.algebra).center.contains(unit_vec(13, 12)));
  EXPECT_THROW(xi_cocycle(g, k, delta, su2().ad_basis(0)), MathError);
}

TEST(Cohomology, EtaWithInnerDerivationIsCoboundary) {
  CurrentAlgebra g = current_lsa(grassmann(1), su2());
  BilinearForm k = killing_form(su2());
  Cocycle2 eta = eta_cocycle(g, k, {1, 0}, su2().ad_basis(2));
  Z2Data z = z2_b2(g.algebra);
  EXPECT_TRUE(z.b2.contains(z.coords.from_gram(eta.grams[0])));
  EXPECT_TRUE(eta_cocycle(g, k, {1, 0}, RatMatrix(3, 3)).grams[0].is_zero());
}

TEST(Cohomology, CocycleAgreesWithExtensionValidity) {
  CurrentAlgebra g = current_lsa(grassmann(1), su2());
  std::mt19937 rng(8);
  std::vector<Cocycle2> zs;
  for (auto& c : z2_space(g.algebra))
    if (c.value_parities[0] == 0) zs.push_back(c);
  ASSERT_FALSE(zs.empty());
  for (int t = 0; t < 12; ++t) {
    RatMatrix w = zs[t % zs.size()].grams[0];
    if (t % 2) {
      // even-even pair keeps the perturbation even
      std::size_t i = rng() % 3, j = (i + 1 + rng() % 2) % 3;
      Rational s = sign_pp(g.algebra.parity(i), g.algebra.parity(j));
      w(i, j) += 1;
      w(j, i) -= s;
    }
    bool coc = is_cocycle(g.algebra, w);
    bool ext = true;
    try {
      central_extension(g.algebra, scalar_cocycle(w, gram_parity(g.algebra.parities(), w)));
    } catch (const MathError&) {
      ext = false;
    }
    EXPECT_EQ(coc, ext);
  }
}

TEST(Cohomology, Cor1SmallCases) {
  for (std::size_t s = 1; s <= 2; ++s) {
    auto r = verify_cor1(grassmann(s), su2(), killing_form(su2()));
    EXPECT_EQ(r.defect, 0u) << "s=" << s;
    EXPECT_EQ(r.eta_generators, 0u);
  }
}
