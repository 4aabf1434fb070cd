#include <gtest/gtest.h>

#include <random>

#include "suplie/catalog.hpp"
#include "suplie/cohomology.hpp"

using namespace suplie;

namespace {

constexpr int kRounds = 150;

struct Gen {
  std::mt19937_64 rng;
  explicit Gen(std::uint64_t seed) : rng(seed) {}
  long small(int h = 3) { return std::uniform_int_distribution<long>(-h, h)(rng); }
  std::size_t upto(std::size_t lo, std::size_t hi) { return std::uniform_int_distribution<std::size_t>(lo, hi)(rng); }
  Rational frac() {
    long d = std::uniform_int_distribution<long>(1, 4)(rng);
    return ratio(small(5), d);
  }
  Vec vec(std::size_t n) {
    Vec v(n);
    for (auto& x : v) x = frac();
    return v;
  }
  // rank at most k: product of n x k and k x m factors
  RatMatrix low_rank(std::size_t n, std::size_t m, std::size_t k) {
    RatMatrix a(n, k), b(k, m);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < k; ++j) a(i, j) = small();
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < m; ++j) b(i, j) = small();
    return a * b;
  }
  Subspace subspace(std::size_t n, std::size_t gens) {
    std::vector<Vec> vs;
    for (std::size_t k = 0; k < gens; ++k) vs.push_back(vec(n));
    return Subspace::span(n, vs);
  }
};


}  // namespace

// ---------------------------------------------------------------- exact linear algebra

TEST(Linalg, RankNullity) {
  Gen g(1);
  for (int r = 0; r < kRounds; ++r) {
    std::size_t n = g.upto(1, 7), m = g.upto(1, 7), k = g.upto(0, 5);
    RatMatrix a = k ? g.low_rank(n, m, k) : RatMatrix(n, m);
    std::size_t rk = rank(a);
    Subspace ker = kernel(a);
    EXPECT_EQ(rk + ker.dim(), m);
    EXPECT_EQ(rk, bareiss_rank(a));
    EXPECT_EQ(rk, rank(a.transpose()));
    EXPECT_LE(rk, std::min({n, m, k}));
    for (const auto& v : ker.basis()) EXPECT_TRUE(is_zero(a * v));
  }
}

TEST(Linalg, EchelonFormIsCanonical) {
  Gen g(2);
  for (int r = 0; r < kRounds; ++r) {
    std::size_t n = g.upto(1, 6), m = g.upto(1, 7);
    RatMatrix a = g.low_rank(n, m, g.upto(1, 5));
    // left-multiplying by an invertible matrix keeps the row space, so the reduced echelon rows agree
    RatMatrix p(n, n);
    do {
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) p(i, j) = g.small(2);
    } while (sgn(determinant(p)) == 0);
    RowReducer x = row_reduce(a), y = row_reduce(p * a);
    EXPECT_EQ(x.rref_rows(), y.rref_rows());
    EXPECT_EQ(row_space(a), row_space(p * a));
    // shape: pivot 1, zero elsewhere in pivot columns, pivots strictly increasing
    auto rows = x.rref_rows();
    auto piv = x.pivot_columns();
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i) EXPECT_LT(piv[i - 1], piv[i]);
      for (std::size_t t = 0; t < rows.size(); ++t) EXPECT_EQ(rows[t][piv[i]], Rational(t == i ? 1 : 0));
      for (std::size_t c = 0; c < piv[i]; ++c) EXPECT_EQ(sgn(rows[i][c]), 0);
    }
  }
}

TEST(Linalg, ModularLawAndDimensionFormula) {
  Gen g(3);
  for (int r = 0; r < kRounds; ++r) {
    std::size_t n = g.upto(2, 7);
    Subspace u0 = g.subspace(n, g.upto(0, 3)), v = g.subspace(n, g.upto(0, 4)), w0 = g.subspace(n, g.upto(0, 3));
    Subspace w = subspace_sum(u0, w0);  // U inside W
    const Subspace& u = u0;
    EXPECT_TRUE(w.contains(u));
    EXPECT_EQ(subspace_sum(u, intersect(v, w)), intersect(subspace_sum(u, v), w));
    EXPECT_EQ(subspace_sum(u, v).dim() + intersect(u, v).dim(), u.dim() + v.dim());
    Subspace i = intersect(u, v);
    EXPECT_TRUE(u.contains(i));
    EXPECT_TRUE(v.contains(i));
  }
}

// ---------------------------------------------------------------- Hochschild maps

namespace {

// dimension of the Hochschild space by a dense solve over all n^2 gram entries
std::size_t dense_hochschild_dim(const AssocSuperalgebra& a) {
  const std::size_t n = a.dim(), N = n * n;
  RowReducer rr(N);
  auto at = [n](std::size_t i, std::size_t j) { return i * n + j; };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vec row = zero_vec(N);
      row[at(i, j)] += 1;
      row[at(j, i)] += sign_pp(a.parity(i), a.parity(j));
      rr.insert(row);
    }
  for (std::size_t k = 0; k < n; ++k) {
    Vec row = zero_vec(N);
    row[at(a.unit(), k)] = 1;
    rr.insert(row);
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Vec row = zero_vec(N);
        Vec ij = a.multiply(unit_vec(n, i), unit_vec(n, j)), jk = a.multiply(unit_vec(n, j), unit_vec(n, k)),
            ik = a.multiply(unit_vec(n, i), unit_vec(n, k));
        for (std::size_t m = 0; m < n; ++m) {
          row[at(m, k)] += ij[m];
          row[at(i, m)] -= jk[m];
          row[at(j, m)] -= sign_pp(a.parity(j), a.parity(i)) * ik[m];
        }
        rr.insert(row);
      }
  return N - rr.rank();
}

Rational eval(const RatMatrix& f, const Vec& x, const Vec& y) { return dot(x, f * y); }

Vec homogeneous(Gen& g, const AssocSuperalgebra& a, int parity) {
  Vec v = zero_vec(a.dim());
  for (std::size_t k = 0; k < a.dim(); ++k)
    if (a.parity(k) == parity) v[k] = g.frac();
  return v;
}

}  // namespace

TEST(Hochschild, SpaceMatchesDenseSolveAndAxioms) {
  Gen g(4);
  for (std::size_t s = 1; s <= 4; ++s) {
    AssocSuperalgebra a = grassmann(s);
    auto basis = hochschild_space(a);
    if (s <= 3) EXPECT_EQ(basis.size(), dense_hochschild_dim(a)) << s;
    for (const auto& f : basis) {
      EXPECT_TRUE(is_hochschild(a, f));
      EXPECT_NE(gram_parity(a.parities(), f), 2);
    }
    for (int r = 0; r < 20; ++r) {
      RatMatrix f(a.dim(), a.dim());
      for (const auto& b : basis) f = f + g.frac() * b;
      EXPECT_TRUE(is_hochschild(a, f));
      // identity on random homogeneous elements, not just basis monomials
      int pa = static_cast<int>(g.upto(0, 1)), pb = static_cast<int>(g.upto(0, 1)), pc = static_cast<int>(g.upto(0, 1));
      Vec x = homogeneous(g, a, pa), y = homogeneous(g, a, pb), z = homogeneous(g, a, pc);
      Rational lhs = eval(f, a.multiply(x, y), z);
      Rational rhs = eval(f, x, a.multiply(y, z)) + sign_pp(pb, pa) * eval(f, y, a.multiply(x, z));
      EXPECT_EQ(lhs, rhs);
      EXPECT_EQ(eval(f, x, y), -sign_pp(pa, pb) * eval(f, y, x));
      EXPECT_EQ(sgn(eval(f, unit_vec(a.dim(), a.unit()), z)), 0);
    }
  }
}

TEST(Hochschild, NonHochschildDetected) {
  AssocSuperalgebra a = grassmann(2);
  // F(e1, e1) on a symmetric slot but F(1, e1) != 0 breaks the unit axiom
  RatMatrix f(a.dim(), a.dim());
  f(a.unit(), 1) = 1;
  f(1, a.unit()) = -1;
  EXPECT_TRUE(hochschild_violation(a, f).has_value());
}

// ---------------------------------------------------------------- cocycles and central extensions

TEST(Cocycle, ExtensionIsLieIffCocycle) {
  Gen g(5);
  for (const char* label : {"su_n:2", "su_pq:2,1", "c_n:2"}) {
    LieSuperalgebra l = build_catalog(std::string(label)).algebra;
    Z2Data d = z2_b2(l);
    const std::size_t n = l.dim();
    for (int r = 0; r < 12; ++r) {
      // random homogeneous cocycle: combination of Z2 basis vectors of one parity
      int want = static_cast<int>(g.upto(0, 1));
      Vec c = zero_vec(d.coords.size());
      for (const auto& b : d.z2.basis())
        if (coords_parity(d.coords, b) == want) c = add(c, scaled(g.frac(), b));
      RatMatrix gram = d.coords.to_gram(c);
      EXPECT_TRUE(is_cocycle(l, gram)) << label;
      CentralExtension e = central_extension(l, scalar_cocycle(gram, want));
      EXPECT_EQ(e.algebra.dim(), n + 1);
      // projection to l is the original bracket, the M coordinate is the cocycle
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
          Vec b = e.algebra.bracket(unit_vec(n + 1, i), unit_vec(n + 1, j));
          EXPECT_EQ(e.project(b), to_dense(l.bracket_basis(i, j), n));
          EXPECT_EQ(e.m_part(b)[0], gram(i, j));
        }
      // a super-skew non-cocycle perturbation is refused, and the two checks agree
      Vec junk = zero_vec(d.coords.size());
      for (std::size_t v = 0; v < junk.size(); ++v)
        if (d.coords.var_parity(v) == want) junk[v] = g.small();
      RatMatrix bad = d.coords.to_gram(add(c, junk));
      bool cocycle = is_cocycle(l, bad);
      EXPECT_EQ(cocycle, d.z2.contains(add(c, junk)));
      if (cocycle) {
        EXPECT_NO_THROW(central_extension(l, scalar_cocycle(bad, want)));
      } else {
        EXPECT_THROW(central_extension(l, scalar_cocycle(bad, want)), MathError);
      }
    }
  }
}

TEST(Cocycle, CoboundariesAreCocycles) {
  Gen g(6);
  LieSuperalgebra l = build_catalog("su_pq:2,1").algebra;
  Z2Data d = z2_b2(l);
  EXPECT_TRUE(d.z2.contains(d.b2));
  const std::size_t n = l.dim();
  for (int r = 0; r < 10; ++r) {
    // w(x,y) = lambda([x,y]) for an even functional
    Vec lam = zero_vec(n);
    for (auto k : l.indices_of_parity(0)) lam[k] = g.frac();
    RatMatrix w(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) w(i, j) = dot(lam, to_dense(l.bracket_basis(i, j), n));
    EXPECT_TRUE(is_cocycle(l, w));
    EXPECT_TRUE(d.b2.contains(d.coords.from_gram(w)));
  }
}
