#include <gtest/gtest.h>

#include "suplie/unirad.hpp"

using namespace suplie;

namespace {

bool fact(const CatalogFacts& f, const std::string& name) {
  for (const auto& x : f.facts)
    if (x.name == name) return x.passed;
  ADD_FAILURE() << "no fact named " << name;
  return false;
}

// 2n x 2n odd element of q(n) built by hand: off-diagonal blocks (1-i) b, b = i(E_jj - E_j+1,j+1)
ScalarMatrix hand_y(std::size_t n, std::size_t j) {
  ScalarMatrix y(2 * n, 2 * n);
  Scalar c = (Scalar(1) - Scalar::i_unit()) * Scalar::i_unit();
  std::size_t k = (j + 1) % n;
  y(j, n + j) = y(n + j, j) = c;
  y(k, n + k) = y(n + k, k) = Scalar(-1) * c;
  return y;
}

}  // namespace

// ---------------------------------------------------------------- catalog

TEST(Catalog, DimensionsMatchMatrixCounts) {
  // su(p|q): (p+q)^2 - 1 real parameters; psu(p|p): one less; pq(n): 2(n^2 - 1); c(n): (1 + sp) | 4(n-1)
  struct Case {
    std::string label;
    std::size_t even, odd;
  } cases[] = {{"su_pq:2,1", 4 + 1 - 1, 2 * 2 * 1},
               {"su_pq:3,1", 9 + 1 - 1, 2 * 3 * 1},
               {"su_pq:3,2", 9 + 4 - 1, 2 * 3 * 2},
               {"psu_pp:2", 4 + 4 - 2, 2 * 4},
               {"pq_n:3", 8, 8},
               {"c_n:2", 1 + 3, 4},
               {"q_n:2", 4, 3}};
  for (const auto& c : cases) {
    CatalogEntry e = build_catalog(c.label);
    EXPECT_EQ(e.algebra.even_dim(), c.even) << c.label;
    EXPECT_EQ(e.algebra.odd_dim(), c.odd) << c.label;
    EXPECT_NO_THROW(validate_lsa(e.algebra)) << c.label;
    EXPECT_EQ(e.label(), c.label);
  }
}

TEST(Catalog, FlagAndLabelFormsAgree) {
  CatalogEntry a = build_catalog(Family::su_pq, {2, 1});
  CatalogEntry b = build_catalog("su_pq:2,1");
  EXPECT_EQ(a.algebra.dim(), b.algebra.dim());
  EXPECT_EQ(a.form.gram, b.form.gram);
}

TEST(Catalog, RejectsBadParameters) {
  EXPECT_THROW(build_catalog("pq_n:2"), Error);
  EXPECT_THROW(build_catalog("su_pq:1,1"), Error);
  EXPECT_THROW(build_catalog("nonsense:3"), ParseError);
}

TEST(Catalog, FactsForSuperalgebras) {
  for (const char* label : {"su_pq:2,1", "c_n:2", "pq_n:3"}) {
    CatalogFacts f = verify_catalog_facts(build_catalog(std::string(label)));
    for (const auto& x : f.facts) EXPECT_TRUE(x.passed) << label << ": " << x.name << " " << x.detail;
  }
}

TEST(Catalog, Psu22OuterClassesAreThree) {
  // psl(2|2) has an sl(2) of outer derivations, hence three central charges
  CatalogFacts f = verify_catalog_facts(build_catalog("psu_pp:2"));
  EXPECT_FALSE(fact(f, "H2 dimension"));
  EXPECT_TRUE(fact(f, "D is outer"));
  EXPECT_TRUE(fact(f, "[kappa_D] nonzero in H2"));
  EXPECT_EQ(z2_b2(build_catalog("psu_pp:2").algebra).h2(), 3u);
}

TEST(Catalog, YSquaresSumToCentralElement) {
  // independent matrix computation: sum_j [Y_j, Y_j] = 2 sum_j Y_j^2 in q(3)
  const std::size_t n = 3;
  ScalarMatrix sum(2 * n, 2 * n);
  for (std::size_t j = 0; j < n; ++j) sum = sum + Scalar(2) * (hand_y(n, j) * hand_y(n, j));
  EXPECT_EQ(sum, (Scalar(8) * Scalar::i_unit()) * ScalarMatrix::identity(2 * n));
  CatalogEntry e = build_catalog("pq_n:3");
  Vec total = zero_vec(e.algebra.dim());
  for (std::size_t j = 1; j <= n; ++j) {
    const Vec& y = e.specials.at("Y_" + std::to_string(j));
    total = add(total, e.algebra.bracket(y, y));
  }
  EXPECT_TRUE(is_zero(total));
}

// ---------------------------------------------------------------- pointedness

TEST(Pointed, CertificateGramAndWitness) {
  CatalogEntry e = build_catalog("su_pq:2,1");
  FindResult r = find_certificate(e.algebra);
  ASSERT_TRUE(r.certificate);
  EXPECT_TRUE(r.certificate->valid);
  // recompute lambda([x,x]) > 0 for a few odd vectors directly
  for (auto k : e.algebra.indices_of_parity(1)) {
    Vec x = unit_vec(e.algebra.dim(), k);
    EXPECT_GT(sgn(dot(r.certificate->lambda, e.algebra.bracket(x, x))), 0);
  }
  // lambda = 0 is never a certificate, and the witness is an odd vector with lambda([w,w]) <= 0
  PointednessCertificate z = pointedness_certificate(e.algebra, zero_vec(e.algebra.dim()));
  EXPECT_FALSE(z.valid);
  EXPECT_EQ(e.algebra.vector_parity(z.witness), 1);
}

TEST(Pointed, FunctionalOnOddPartRejected) {
  CatalogEntry e = build_catalog("su_pq:2,1");
  Vec lam = zero_vec(e.algebra.dim());
  lam[e.algebra.indices_of_parity(1)[0]] = 1;
  EXPECT_THROW(pointedness_certificate(e.algebra, lam), MathError);
}

TEST(Pointed, Verdicts) {
  for (const char* label : {"su_pq:2,1", "c_n:2", "q_n:3"}) {
    CatalogEntry e = build_catalog(std::string(label));
    EXPECT_EQ(pointed_report(e.algebra, catalog_witness(e)).verdict, PointedVerdict::pointed) << label;
  }
  for (const char* label : {"pq_n:3", "psu_pp:2"}) {
    CatalogEntry e = build_catalog(std::string(label));
    PointedReport r = pointed_report(e.algebra, catalog_witness(e));
    EXPECT_EQ(r.verdict, PointedVerdict::non_pointed) << label;
    ASSERT_TRUE(r.witness);
    EXPECT_TRUE(check_non_pointed(e.algebra, *r.witness));
  }
}

TEST(Pointed, SearchIsDeterministicPerSeed) {
  CatalogEntry e = build_catalog("c_n:2");
  CertificateSearch s;
  s.seed = 11;
  auto a = find_certificate(e.algebra, s), b = find_certificate(e.algebra, s);
  ASSERT_TRUE(a.certificate && b.certificate);
  EXPECT_EQ(a.certificate->lambda, b.certificate->lambda);
}

// ---------------------------------------------------------------- current extensions

TEST(Unirad, RandomHochschildIsHochschild) {
  AssocSuperalgebra A = grassmann(3);
  for (std::uint64_t seed : {0u, 1u, 7u}) {
    RatMatrix f = random_even_hochschild(A, seed);
    EXPECT_TRUE(is_hochschild(A, f));
    EXPECT_FALSE(hochschild_violation(A, f).has_value());
  }
  EXPECT_EQ(random_even_hochschild(A, 5).transpose(), random_even_hochschild(A, 5).transpose());
  EXPECT_TRUE(is_hochschild(A, delta_hochschild(A)));
}

TEST(Unirad, SquareZeroSeedsSquareToZero) {
  CatalogEntry e = build_catalog("su_n:2");
  AssocSuperalgebra A = grassmann(3);
  NormalFormData nf;
  nf.hochschild = {random_even_hochschild(A, 3)};
  CurrentExtension ce = normal_form_extension(A, e.algebra, e.form, nf);
  EXPECT_EQ(ce.dim(), 8u * 3 + 1);
  auto seeds = square_zero_seeds(ce, {});
  ASSERT_FALSE(seeds.empty());
  for (const auto& x : seeds) {
    EXPECT_EQ(ce.algebra().vector_parity(x), 1);
    EXPECT_TRUE(is_zero(ce.algebra().bracket(x, x)));
  }
}

TEST(Unirad, TheoremForSu2) {
  CatalogEntry e = build_catalog("su_n:2");
  for (std::size_t s : {3u, 4u}) {
    AssocSuperalgebra A = grassmann(s);
    UradReport zero = verify_urad_theorem(e, s, {RatMatrix(A.dim(), A.dim())});
    EXPECT_TRUE(zero.passed()) << s;
    // F = 0: I = Lambda^{>=3} (x) k exactly; that is 3 * (number of monomials of degree >= 3)
    std::size_t high = 0;
    for (auto m : grassmann_monomials(s))
      if (std::popcount(m) >= 3) ++high;
    EXPECT_EQ(zero.dims.at("dim_I"), 3 * high);
    UradReport rnd = verify_urad_theorem(e, s, {random_even_hochschild(A, 7)});
    for (const auto& c : rnd.checks) EXPECT_TRUE(c.passed) << s << ": " << c.name << " " << c.detail;
  }
}

TEST(Unirad, KernelTheoremSmall) {
  for (const char* label : {"su_pq:2,1", "c_n:2"}) {
    UradReport r = verify_kernel_theorem(build_catalog(std::string(label)), 1);
    for (const auto& c : r.checks) EXPECT_TRUE(c.passed) << label << ": " << c.name << " " << c.detail;
  }
  KernelOptions o;
  o.random_omega_seed = 4;
  EXPECT_TRUE(verify_kernel_theorem(build_catalog("su_pq:2,1"), 2, o).passed());
}

TEST(Unirad, FaithfulnessBoundary) {
  CatalogEntry e = build_catalog("su_n:2");
  for (std::size_t s : {1u, 2u}) {
    FaithfulReport r = faithfulness_boundary(e, s);
    EXPECT_TRUE(r.passed) << s;
    ASSERT_TRUE(r.certificate);
    EXPECT_TRUE(r.certificate->valid);
  }
  FaithfulReport r = faithfulness_boundary(e, 3);
  EXPECT_TRUE(r.passed);
  ASSERT_TRUE(r.witness);
  EXPECT_EQ(r.extensions_checked, hochschild_space(grassmann(3)).size());
  EXPECT_THROW(faithfulness_boundary(build_catalog("su_pq:2,1"), 1), MathError);
}

TEST(Unirad, SpecialIdentities) {
  for (const char* label : {"psu_pp:2", "su_pq:2,1", "su_pq:3,2", "pq_n:3"}) {
    UradReport r = verify_special_identities(build_catalog(std::string(label)));
    for (const auto& c : r.checks) EXPECT_TRUE(c.passed) << label << ": " << c.name << " " << c.detail;
  }
}
