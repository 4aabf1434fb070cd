#pragma once

#include <bit>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "linalg.hpp"
#include "lsa.hpp"
#include "matrix.hpp"
#include "scalar.hpp"

namespace suplie {

// ---------------------------------------------------------------- Clifford algebra

// C(V, mu) with mu = diag(d); basis e_S indexed by bitmask S, dim 2^n.
class CliffordAlgebra {
 public:
  static constexpr std::size_t kMaxGenerators = 12;

  explicit CliffordAlgebra(std::vector<Rational> d) : d_(std::move(d)) {
    if (d_.size() > kMaxGenerators) throw MathError("clifford_algebra: more than 12 generators (product table too large)");
    for (const auto& x : d_)
      if (sgn(x) <= 0) throw MathError("clifford_algebra: mu must be positive definite");
  }

  std::size_t n() const { return d_.size(); }
  std::size_t dim() const { return std::size_t{1} << n(); }
  const std::vector<Rational>& mu_diag() const { return d_; }

  std::string name(unsigned s) const {
    if (s == 0) return "1";
    std::string out;
    for (std::size_t k = 0; k < n(); ++k)
      if (s >> k & 1u) out += "e" + std::to_string(k + 1);
    return out;
  }

  // e_S e_T = c e_{S xor T}
  Rational basis_product(unsigned s, unsigned t) const {
    int swaps = 0;
    for (std::size_t j = 0; j < n(); ++j)
      if (t >> j & 1u) swaps += std::popcount(s >> (j + 1));
    Rational c = (swaps % 2) ? -1 : 1;
    for (std::size_t k = 0; k < n(); ++k)
      if ((s & t) >> k & 1u) c *= d_[k];
    return c;
  }

  Vec multiply(const Vec& a, const Vec& b) const {
    Vec out = zero_vec(dim());
    for (unsigned s = 0; s < dim(); ++s) {
      if (sgn(a[s]) == 0) continue;
      for (unsigned t = 0; t < dim(); ++t)
        if (sgn(b[t]) != 0) out[s ^ t] += a[s] * b[t] * basis_product(s, t);
    }
    return out;
  }

  Vec one() const { return unit_vec(dim(), 0); }
  Vec vector(const Vec& c) const {
    Vec v = zero_vec(dim());
    for (std::size_t k = 0; k < n(); ++k) v[std::size_t{1} << k] = c[k];
    return v;
  }

  // parity operator: negates odd monomials
  Vec parity_op(Vec x) const {
    for (unsigned s = 0; s < dim(); ++s)
      if (std::popcount(s) % 2) x[s] = -x[s];
    return x;
  }

  // antiautomorphism fixing V: reverses the factors of each monomial
  Vec transpose(Vec x) const {
    for (unsigned s = 0; s < dim(); ++s) {
      int k = std::popcount(s);
      if ((k * (k - 1) / 2) % 2) x[s] = -x[s];
    }
    return x;
  }

  // N(x) with x^T x = N(x) 1, when x^T x is scalar
  std::optional<Rational> norm(const Vec& x) const {
    Vec p = multiply(transpose(x), x);
    for (std::size_t s = 1; s < dim(); ++s)
      if (sgn(p[s]) != 0) return std::nullopt;
    return p[0];
  }

  // alpha_x(w) = Pi(x) w x^{-1} on V, for x in the Clifford group
  std::optional<RatMatrix> alpha_on_V(const Vec& x) const {
    auto nx = norm(x);
    if (!nx || sgn(*nx) == 0) return std::nullopt;
    Vec inv = scaled(Rational(1) / *nx, transpose(x));
    if (multiply(x, inv) != one()) return std::nullopt;
    RatMatrix m(n(), n());
    for (std::size_t k = 0; k < n(); ++k) {
      Vec img = multiply(multiply(parity_op(x), unit_vec(dim(), std::size_t{1} << k)), inv);
      for (unsigned s = 0; s < dim(); ++s)
        if (sgn(img[s]) != 0 && std::popcount(s) != 1) return std::nullopt;
      for (std::size_t j = 0; j < n(); ++j) m(j, k) = img[std::size_t{1} << j];
    }
    return m;
  }

 private:
  std::vector<Rational> d_;
};

inline CliffordAlgebra clifford_algebra(std::vector<Rational> mu_diag) { return CliffordAlgebra(std::move(mu_diag)); }

inline Rational mu_of(const CliffordAlgebra& c, const Vec& v, const Vec& w) {
  Rational s = 0;
  for (std::size_t k = 0; k < c.n(); ++k) s += c.mu_diag()[k] * v[k] * w[k];
  return s;
}

// ---------------------------------------------------------------- gamma matrices

namespace clifford_detail {

inline ScalarMatrix kron(const ScalarMatrix& a, const ScalarMatrix& b) {
  ScalarMatrix m(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j).is_zero()) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l) m(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    }
  return m;
}

inline ScalarMatrix pauli(char which) {
  ScalarMatrix m(2, 2);
  switch (which) {
    case 'x': m(0, 1) = 1; m(1, 0) = 1; break;
    case 'y': m(0, 1) = -Scalar::i_unit(); m(1, 0) = Scalar::i_unit(); break;
    case 'z': m(0, 0) = 1; m(1, 1) = -1; break;
    default: m(0, 0) = 1; m(1, 1) = 1; break;
  }
  return m;
}

// Jordan-Wigner string on q qubits: Z..Z P I..I with P at slot k
inline ScalarMatrix jw(std::size_t q, std::size_t k, char p) {
  ScalarMatrix m = ScalarMatrix::identity(1);
  for (std::size_t j = 0; j < q; ++j) m = kron(m, pauli(j < k ? 'z' : j == k ? p : 'i'));
  return m;
}

// sqrt of a positive rational: sqrt(p q) / q
inline Scalar sqrt_rational(const Rational& r) {
  if (sgn(r) <= 0) throw MathError("sqrt of a nonpositive rational");
  mpz_class p = r.get_num(), q = r.get_den();
  mpz_class pq = p * q;
  if (!pq.fits_ulong_p()) throw MathError("sqrt_rational: radicand too large");
  return Scalar::sqrt(pq.get_ui()) * Scalar(Rational(1) / Rational(q));
}

}  // namespace clifford_detail

enum class GammaVariant {
  standard,  // 2^floor(n/2); odd n appends the chirality gamma and has no grading
  graded     // every gamma odd; dim 2^ceil(n/2)
};

struct CliffordRep {
  std::vector<Rational> mu_diag;
  std::vector<ScalarMatrix> units;   // Gamma_i: Hermitian, square 1
  std::vector<ScalarMatrix> gammas;  // sqrt(d_i) Gamma_i
  std::size_t space_dim = 0;
  std::optional<std::vector<int>> grading;  // parity per coordinate
  Field field;

  ScalarMatrix gamma_of(const std::vector<Scalar>& c) const {
    ScalarMatrix m(space_dim, space_dim);
    for (std::size_t k = 0; k < gammas.size(); ++k)
      if (!c[k].is_zero()) m = m + c[k] * gammas[k];
    return m;
  }
};

inline CliffordRep gamma_rep(const std::vector<Rational>& mu_diag, GammaVariant variant = GammaVariant::standard) {
  using namespace clifford_detail;
  const std::size_t n = mu_diag.size();
  for (const auto& d : mu_diag)
    if (sgn(d) <= 0) throw MathError("gamma_rep: mu must be positive definite");
  CliffordRep r;
  r.mu_diag = mu_diag;
  const bool graded = variant == GammaVariant::graded || n % 2 == 0;
  const std::size_t q = graded ? (n + 1) / 2 : n / 2;
  r.space_dim = std::size_t{1} << q;
  for (std::size_t k = 0; k < n; ++k) {
    if (k / 2 < q) r.units.push_back(jw(q, k / 2, k % 2 ? 'y' : 'x'));
    else r.units.push_back(jw(q, q, 'i'));  // Z^{(x) q}: the chirality gamma
  }
  if (graded) {
    std::vector<int> g(r.space_dim);
    for (std::size_t i = 0; i < r.space_dim; ++i) g[i] = std::popcount(i) % 2;
    r.grading = g;
  }
  Field f = n > 1 || variant == GammaVariant::graded ? adjoin_i(Field{}) : Field{};
  for (std::size_t k = 0; k < n; ++k) {
    Scalar s = sqrt_rational(mu_diag[k]);
    for (const auto& t : s.terms())
      if (t.rad > 1) f = extend_field(f, t.rad);
    r.gammas.push_back(s * r.units[k]);
  }
  r.field = f;
  return r;
}

inline CliffordRep parity_reversed(CliffordRep r) {
  if (!r.grading) throw MathError("parity reversal needs a graded representation");
  for (auto& g : *r.grading) g ^= 1;
  return r;
}

inline int matrix_parity(const ScalarMatrix& t, const std::vector<int>& grading) {
  int p = -1;
  for (std::size_t i = 0; i < t.rows(); ++i)
    for (std::size_t j = 0; j < t.cols(); ++j)
      if (!t(i, j).is_zero()) {
        int q = grading[i] ^ grading[j];
        if (p == -1) p = q;
        else if (p != q) return 2;
      }
  return p == -1 ? 0 : p;
}

struct GammaCheck {
  std::size_t pairs_checked = 0;
  bool anticommute = true, hermitian = true, odd = true, dimension = true;
  bool all() const { return anticommute && hermitian && odd && dimension; }
};

// gamma_i gamma_j + gamma_j gamma_i = 2 delta_ij d_i, every pair
inline GammaCheck verify_gamma_rep(const CliffordRep& r, GammaVariant variant = GammaVariant::standard) {
  GammaCheck c;
  const std::size_t n = r.gammas.size();
  std::size_t want = std::size_t{1} << ((variant == GammaVariant::graded ? n + 1 : n) / 2);
  c.dimension = r.space_dim == want;
  ScalarMatrix id = ScalarMatrix::identity(r.space_dim);
  for (std::size_t i = 0; i < n; ++i) {
    if (!(conj_transpose(r.gammas[i]) == r.gammas[i])) c.hermitian = false;
    if (r.grading && matrix_parity(r.gammas[i], *r.grading) != 1) c.odd = false;
    for (std::size_t j = i; j < n; ++j) {
      ScalarMatrix ac = r.gammas[i] * r.gammas[j] + r.gammas[j] * r.gammas[i];
      ScalarMatrix want_m = i == j ? Scalar(2 * r.mu_diag[i]) * id : ScalarMatrix(r.space_dim, r.space_dim);
      if (!(ac == want_m)) c.anticommute = false;
      ++c.pairs_checked;
    }
  }
  return c;
}

namespace clifford_detail {

inline std::pair<Rational, Rational> gaussian_parts(const Scalar& s) {
  if (!s.in_gaussian_rationals()) throw MathError("intertwiner solve needs entries in Q(i)");
  return {s.re_q(), s.im_q()};
}

// complex dimension of {T : a_k T = sign * T b_k for all k, T in the allowed pattern}
inline std::size_t intertwiner_dim(const std::vector<ScalarMatrix>& a, const std::vector<ScalarMatrix>& b, int sign,
                                   const std::vector<std::vector<char>>& allowed) {
  const std::size_t m = a.empty() ? 1 : a[0].rows();
  // unknown (l, c) real part at 2(l m + c), imaginary part at 2(l m + c) + 1
  auto var = [&](std::size_t l, std::size_t c, int im) { return 2 * (l * m + c) + im; };
  RowReducer rr(2 * m * m);
  for (std::size_t l = 0; l < m; ++l)
    for (std::size_t c = 0; c < m; ++c)
      if (!allowed[l][c]) {
        rr.insert(unit_vec(2 * m * m, var(l, c, 0)));
        rr.insert(unit_vec(2 * m * m, var(l, c, 1)));
      }
  for (std::size_t k = 0; k < a.size(); ++k)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t c = 0; c < m; ++c) {
        // (a T)_{jc} - sign (T b)_{jc}, complex coefficient times (x + i y)
        std::map<std::size_t, Rational> re, im;
        auto add_term = [&](const Scalar& coef, std::size_t l, std::size_t cc) {
          auto [p, q] = gaussian_parts(coef);
          re[var(l, cc, 0)] += p;
          re[var(l, cc, 1)] -= q;
          im[var(l, cc, 0)] += q;
          im[var(l, cc, 1)] += p;
        };
        for (std::size_t l = 0; l < m; ++l) {
          if (!a[k](j, l).is_zero()) add_term(a[k](j, l), l, c);
          if (!b[k](l, c).is_zero()) add_term(Scalar(-sign) * b[k](l, c), j, l);
        }
        for (auto* part : {&re, &im}) {
          SparseRow row;
          for (auto& [v, x] : *part)
            if (sgn(x) != 0) row.emplace_back(v, x);
          if (!row.empty()) rr.insert(row);
        }
      }
  return (2 * m * m - rr.rank()) / 2;
}

inline std::vector<std::vector<char>> pattern(std::size_t m, const std::optional<std::vector<int>>& from,
                                              const std::optional<std::vector<int>>& to, int parity) {
  std::vector<std::vector<char>> p(m, std::vector<char>(m, 1));
  if (from && to)
    for (std::size_t l = 0; l < m; ++l)
      for (std::size_t c = 0; c < m; ++c) p[l][c] = ((*to)[l] ^ (*from)[c]) == parity;
  return p;
}

}  // namespace clifford_detail

// Commutants and intertwiners are solved on the unit gammas: scaling by
// sqrt(d_i) != 0 leaves every such solution space unchanged.
inline std::size_t commutant_dim(const CliffordRep& r) {
  return clifford_detail::intertwiner_dim(r.units, r.units, 1, clifford_detail::pattern(r.space_dim, r.grading, r.grading, 0));
}

// even morphisms T: r -> s (T r(v) = s(v) T)
inline std::size_t even_intertwiner_dim(const CliffordRep& r, const CliffordRep& s) {
  return clifford_detail::intertwiner_dim(s.units, r.units, 1, clifford_detail::pattern(r.space_dim, r.grading, s.grading, 0));
}

// odd morphisms T: r -> s (T r(v) = -s(v) T for odd v)
inline std::size_t odd_intertwiner_dim(const CliffordRep& r, const CliffordRep& s) {
  return clifford_detail::intertwiner_dim(s.units, r.units, -1, clifford_detail::pattern(r.space_dim, r.grading, s.grading, 1));
}

// ---------------------------------------------------------------- Clifford-Lie superalgebras

inline bool is_clifford_lie(const LieSuperalgebra& l) {
  for (auto i : l.indices_of_parity(0))
    for (std::size_t j = 0; j < l.dim(); ++j)
      if (!l.bracket_basis(i, j).empty()) return false;
  return true;
}

// n_0 = R^{k0} central, [x_a, x_b] = sum_c S^c_{ab} z_c
inline LieSuperalgebra clifford_lie(const std::vector<RatMatrix>& s) {
  const std::size_t k0 = s.size(), k1 = k0 ? s[0].rows() : 0, n = k0 + k1;
  std::vector<std::string> names;
  std::vector<int> par;
  for (std::size_t c = 0; c < k0; ++c) {
    names.push_back("z" + std::to_string(c + 1));
    par.push_back(0);
  }
  for (std::size_t a = 0; a < k1; ++a) {
    names.push_back("x" + std::to_string(a + 1));
    par.push_back(1);
  }
  std::vector<SparseRow> table(n * n);
  for (std::size_t a = 0; a < k1; ++a)
    for (std::size_t b = 0; b < k1; ++b)
      for (std::size_t c = 0; c < k0; ++c)
        if (sgn(s[c](a, b)) != 0) table[(k0 + a) * n + k0 + b].emplace_back(c, s[c](a, b));
  LieSuperalgebra l(std::move(names), std::move(par), std::move(table));
  validate_lsa(l);
  if (!is_clifford_lie(l)) throw MathError("clifford_lie: even part is not central");
  return l;
}

// Seeded Clifford-Lie superalgebra with a functional lambda = z_1^* whose form
// is PSD: S^1 = B^T B, the other S^c random symmetric.
struct SeededCliffordLie {
  LieSuperalgebra algebra;
  Vec lambda;
};

inline SeededCliffordLie seeded_clifford_lie(std::size_t k0, std::size_t k1, std::size_t rank_b, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> num(-4, 4);
  RatMatrix b(rank_b, k1);
  for (std::size_t i = 0; i < rank_b; ++i)
    for (std::size_t j = 0; j < k1; ++j) b(i, j) = num(rng);
  std::vector<RatMatrix> s{b.transpose() * b};
  for (std::size_t c = 1; c < k0; ++c) {
    RatMatrix m(k1, k1);
    for (std::size_t i = 0; i < k1; ++i)
      for (std::size_t j = i; j < k1; ++j) m(i, j) = m(j, i) = num(rng);
    s.push_back(m);
  }
  LieSuperalgebra l = clifford_lie(s);
  Vec lam = zero_vec(l.dim());
  lam[0] = 1;
  return {std::move(l), std::move(lam)};
}

// ---------------------------------------------------------------- mu_lambda and chi

struct MuLambda {
  std::vector<std::size_t> odd_basis;
  RatMatrix gram;          // (1/2) lambda([x_a, x_b])
  Subspace radical;        // in odd coordinates
  RatMatrix to_quotient;   // odd coordinates -> orthogonal coordinates of n_{1,lambda}
  std::vector<Rational> diag;  // positive diagonal of the induced form
  std::size_t quotient_dim() const { return diag.size(); }
};

class NotAdmissible : public MathError {
 public:
  NotAdmissible(const std::string& what, Vec w) : MathError(what), witness(std::move(w)) {}
  Vec witness;  // odd x with lambda([x,x]) < 0
};

inline MuLambda mu_lambda(const LieSuperalgebra& l, const Vec& lambda) {
  if (!is_clifford_lie(l)) throw MathError("mu_lambda: not a Clifford-Lie superalgebra");
  for (auto k : l.indices_of_parity(1))
    if (sgn(lambda[k]) != 0) throw MathError("mu_lambda: lambda must vanish on odd coordinates");
  MuLambda m;
  m.odd_basis = l.indices_of_parity(1);
  const std::size_t k1 = m.odd_basis.size();
  m.gram = RatMatrix(k1, k1);
  for (std::size_t a = 0; a < k1; ++a)
    for (std::size_t b = 0; b < k1; ++b) {
      Rational v = 0;
      for (const auto& [k, x] : l.bracket_basis(m.odd_basis[a], m.odd_basis[b])) v += x * lambda[k];
      m.gram(a, b) = v / 2;
    }
  if (k1 == 0) {
    m.radical = Subspace(0);
    return m;
  }
  auto d = definiteness(m.gram);
  if (d.kind == Definiteness::indefinite_or_negative) {
    Vec w = zero_vec(l.dim());
    for (std::size_t a = 0; a < k1; ++a) w[m.odd_basis[a]] = d.witness[a];
    throw NotAdmissible("mu_lambda: lambda([x,x]) < 0 for some odd x, so lambda is not in the dual cone", w);
  }
  m.radical = kernel(m.gram);
  Congruence c = congruence_diagonalize(m.gram);
  RatMatrix pinv = inverse(c.basis);
  std::vector<Vec> rows;
  for (std::size_t t = 0; t < k1; ++t)
    if (sgn(c.diagonal[t]) > 0) {
      rows.push_back(pinv.row(t));
      m.diag.push_back(c.diagonal[t]);
    }
  m.to_quotient = rat_matrix_from_rows(rows, k1);
  if (m.diag.size() + m.radical.dim() != k1) throw MathError("mu_lambda: congruence rank mismatch (bug)");
  return m;
}

struct AdmissibleRep {
  MuLambda mu;
  CliffordRep gamma;
  std::vector<ScalarMatrix> chi;  // chi(e_k) for every basis vector of n
  std::size_t space_dim = 0;
};

inline AdmissibleRep lambda_admissible_rep(const LieSuperalgebra& l, const Vec& lambda, GammaVariant variant = GammaVariant::standard) {
  AdmissibleRep r;
  r.mu = mu_lambda(l, lambda);
  const std::size_t q = r.mu.quotient_dim();
  r.gamma = gamma_rep(r.mu.diag, variant);
  r.space_dim = r.gamma.space_dim;
  ScalarMatrix id = ScalarMatrix::identity(r.space_dim);
  std::vector<std::size_t> pos(l.dim(), 0);
  for (std::size_t a = 0; a < r.mu.odd_basis.size(); ++a) pos[r.mu.odd_basis[a]] = a;
  for (std::size_t k = 0; k < l.dim(); ++k) {
    if (l.parity(k) == 0) {
      r.chi.push_back((Scalar::i_unit() * Scalar(lambda[k])) * id);
      continue;
    }
    std::vector<Scalar> c(q);
    for (std::size_t t = 0; t < q; ++t) c[t] = Scalar(r.mu.to_quotient(t, pos[k]));
    r.chi.push_back(Scalar::zeta8() * r.gamma.gamma_of(c));
  }
  return r;
}

inline ScalarMatrix chi_of(const AdmissibleRep& r, const Vec& x) {
  ScalarMatrix m(r.space_dim, r.space_dim);
  for (std::size_t k = 0; k < x.size(); ++k)
    if (sgn(x[k]) != 0) m = m + Scalar(x[k]) * r.chi[k];
  return m;
}

struct AdmissibleCheck {
  bool homomorphism = true, unitary = true, psd_squares = true, radical_zero = true, odd_squares = true;
  bool all() const { return homomorphism && unitary && psd_squares && radical_zero && odd_squares; }
};

namespace clifford_detail {

// Hermitian matrix over Q(i) is PSD iff its realification [[A, -B], [B, A]] is
inline bool hermitian_psd(const ScalarMatrix& h) {
  if (!(conj_transpose(h) == h)) return false;
  const std::size_t m = h.rows();
  RatMatrix r(2 * m, 2 * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      auto [a, b] = gaussian_parts(h(i, j));
      r(i, j) = a;
      r(i + m, j + m) = a;
      r(i, j + m) = -b;
      r(i + m, j) = b;
    }
  return m == 0 || definiteness(r).kind != Definiteness::indefinite_or_negative;
}

}  // namespace clifford_detail

inline AdmissibleCheck verify_admissible(const LieSuperalgebra& l, const Vec& lambda, const AdmissibleRep& r) {
  AdmissibleCheck c;
  const std::size_t n = l.dim();
  const Scalar i = Scalar::i_unit();
  for (std::size_t a = 0; a < n; ++a) {
    // chi(X)^* = -i^{|X|} chi(X)
    Scalar phase = l.parity(a) ? Scalar(-1) * i : Scalar(-1);
    if (!(conj_transpose(r.chi[a]) == phase * r.chi[a])) c.unitary = false;
    for (std::size_t b = 0; b < n; ++b) {
      Scalar sign = (l.parity(a) && l.parity(b)) ? Scalar(1) : Scalar(-1);
      ScalarMatrix sc = r.chi[a] * r.chi[b] + sign * (r.chi[b] * r.chi[a]);
      if (!(sc == chi_of(r, to_dense(l.bracket_basis(a, b), n)))) c.homomorphism = false;
    }
  }
  ScalarMatrix id = ScalarMatrix::identity(r.space_dim);
  for (auto k : l.indices_of_parity(1)) {
    Vec e = unit_vec(n, k);
    Vec sq = l.bracket(e, e);
    // chi(x)^2 = (1/2) i lambda([x,x])
    if (!(r.chi[k] * r.chi[k] == (i * Scalar(dot(lambda, sq) / 2)) * id)) c.odd_squares = false;
    if (!clifford_detail::hermitian_psd(Scalar(-1) * i * chi_of(r, sq))) c.psd_squares = false;
  }
  for (const auto& v : r.mu.radical.basis()) {
    Vec x = zero_vec(n);
    for (std::size_t a = 0; a < r.mu.odd_basis.size(); ++a) x[r.mu.odd_basis[a]] = v[a];
    if (!chi_of(r, x).is_zero()) c.radical_zero = false;
  }
  return c;
}

// ---------------------------------------------------------------- phase adjustment

inline ScalarMatrix phase_adjust(const ScalarMatrix& t, const std::vector<int>& grading, bool inverse = false) {
  int p = matrix_parity(t, grading);
  if (p == 2) throw MathError("phase_adjust: T is not parity-homogeneous");
  if (p == 0) return t;
  Scalar z = inverse ? Scalar::zeta8().conj() : Scalar::zeta8();
  return z * t;
}

// (u, v) = i^{|u||v|} <u, v> with <,> the standard Hermitian form; linear in u
inline bool is_supersymmetric(const ScalarMatrix& t, const std::vector<int>& grading) {
  int p = matrix_parity(t, grading);
  if (p == 2) return false;
  const std::size_t m = t.rows();
  auto form = [&](std::size_t j) { return grading[j] ? Scalar::i_unit() : Scalar(1); };
  // (T e_k, e_j) = (-1)^{|T||k|} (e_k, T e_j)
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t k = 0; k < m; ++k) {
      Scalar lhs = form(j) * t(j, k);
      Scalar rhs = t(k, j).conj() * form(k);
      if (p && grading[k]) rhs = Scalar(-1) * rhs;
      if (!(lhs == rhs)) return false;
    }
  return true;
}

inline bool is_hermitian(const ScalarMatrix& t) { return conj_transpose(t) == t; }

}  // namespace suplie
