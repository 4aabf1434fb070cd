#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cohomology.hpp"
#include "lsa.hpp"

namespace suplie {

enum class Family { su_n, su_pq, psu_pp, c_n, q_n, pq_n };

inline const char* family_name(Family f) {
  switch (f) {
    case Family::su_n: return "su_n";
    case Family::su_pq: return "su_pq";
    case Family::psu_pp: return "psu_pp";
    case Family::c_n: return "c_n";
    case Family::q_n: return "q_n";
    default: return "pq_n";
  }
}

inline Family parse_family(const std::string& s) {
  for (Family f : {Family::su_n, Family::su_pq, Family::psu_pp, Family::c_n, Family::q_n, Family::pq_n})
    if (s == family_name(f)) return f;
  throw ParseError("unknown catalog family '" + s + "' (expected su_n, su_pq, psu_pp, c_n, q_n or pq_n)");
}

struct CatalogEntry {
  Family family = Family::su_n;
  std::vector<int> params;
  LieSuperalgebra algebra;
  BilinearForm form;
  std::optional<RatMatrix> outer_derivation;
  std::map<std::string, Vec> specials;
  // orthogonal pieces of the even part, used for the sign facts
  std::vector<std::pair<std::string, Subspace>> components;
  // the algebra before dividing by R i1 (psu_pp, pq_n)
  std::optional<LieSuperalgebra> carrier;
  std::optional<RatMatrix> carrier_projection;
  std::map<std::string, Vec> carrier_specials;

  std::string label() const {
    std::string s = family_name(family);
    for (std::size_t k = 0; k < params.size(); ++k) s += (k ? "," : ":") + std::to_string(params[k]);
    return s;
  }
};

namespace catalog_detail {

inline Scalar I() { return Scalar::i_unit(); }

inline ScalarMatrix unit(std::size_t n, std::size_t r, std::size_t c, const Scalar& v = Scalar(1)) {
  ScalarMatrix m(n, n);
  m(r, c) = v;
  return m;
}

// anti-Hermitian n x n basis: off-diagonal pairs, then diagonal (traceless or not)
inline std::vector<ScalarMatrix> anti_hermitian(std::size_t n, bool traceless) {
  std::vector<ScalarMatrix> out;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t l = k + 1; l < n; ++l) {
      out.push_back(unit(n, k, l) - unit(n, l, k));
      out.push_back(unit(n, k, l, I()) + unit(n, l, k, I()));
    }
  if (traceless)
    for (std::size_t k = 0; k + 1 < n; ++k) out.push_back(unit(n, k, k, I()) - unit(n, k + 1, k + 1, I()));
  else
    for (std::size_t k = 0; k < n; ++k) out.push_back(unit(n, k, k, I()));
  return out;
}

inline void put_block(ScalarMatrix& m, const ScalarMatrix& b, std::size_t r0, std::size_t c0) {
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) m(r0 + i, c0 + j) = b(i, j);
}

inline ScalarMatrix block(const ScalarMatrix& m, std::size_t r0, std::size_t c0, std::size_t r, std::size_t c) {
  ScalarMatrix b(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) b(i, j) = m(r0 + i, c0 + j);
  return b;
}

inline ScalarMatrix conj_entries(const ScalarMatrix& m) {
  ScalarMatrix t(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) t(i, j) = m(i, j).conj();
  return t;
}

inline std::vector<std::string> seq_names(std::size_t n) {
  std::vector<std::string> v;
  for (std::size_t k = 0; k < n; ++k) v.push_back("E" + std::to_string(k + 1));
  return v;
}

inline LieSuperalgebra renamed(const LieSuperalgebra& l) {
  std::vector<SparseRow> table;
  for (std::size_t i = 0; i < l.dim(); ++i)
    for (std::size_t j = 0; j < l.dim(); ++j) table.push_back(l.bracket_basis(i, j));
  LieSuperalgebra r(seq_names(l.dim()), l.parities(), std::move(table));
  if (l.realization()) r.set_realization(*l.realization());
  return r;
}

inline Subspace index_span(std::size_t n, std::size_t from, std::size_t to) {
  std::vector<Vec> vs;
  for (std::size_t k = from; k < to; ++k) vs.push_back(unit_vec(n, k));
  return Subspace::span(n, vs);
}

inline Subspace project_span(const RatMatrix& proj, const Subspace& s) {
  std::vector<Vec> vs;
  for (const auto& b : s.basis()) vs.push_back(proj * b);
  return Subspace::span(proj.rows(), vs);
}

inline Vec coords_or_throw(const MatrixSpan& span, const ScalarMatrix& m, const std::string& what) {
  auto c = span.coordinates(m);
  if (!c) throw MathError("catalog: " + what + " is not in the realization span");
  return *c;
}

// su(p|q) realization, p >= q, even part su(p), su(q), then i*ii (R i1 when p = q)
struct SupqData {
  std::vector<ScalarMatrix> mats;
  std::vector<int> par;
  std::size_t su_p = 0, su_q = 0, center = 0;
};

inline SupqData su_pq_basis(std::size_t p, std::size_t q) {
  const std::size_t n = p + q;
  SupqData d;
  for (const auto& a : anti_hermitian(p, true)) {
    ScalarMatrix m(n, n);
    put_block(m, a, 0, 0);
    d.mats.push_back(m);
  }
  d.su_p = d.mats.size();
  for (const auto& a : anti_hermitian(q, true)) {
    ScalarMatrix m(n, n);
    put_block(m, a, p, p);
    d.mats.push_back(m);
  }
  d.su_q = d.mats.size() - d.su_p;
  ScalarMatrix c(n, n);
  for (std::size_t k = 0; k < n; ++k) c(k, k) = I() * Scalar(Rational(1, k < p ? static_cast<long>(p) : static_cast<long>(q)));
  d.center = d.mats.size();
  d.mats.push_back(c);
  d.par.assign(d.mats.size(), 0);
  // X = [[0, B], [i B^*, 0]]
  for (std::size_t r = 0; r < p; ++r)
    for (std::size_t s = 0; s < q; ++s)
      for (const Scalar& b : {Scalar(1), I()}) {
        ScalarMatrix m(n, n);
        m(r, p + s) = b;
        m(p + s, r) = I() * b.conj();
        d.mats.push_back(m);
        d.par.push_back(1);
      }
  return d;
}

inline ScalarMatrix odd_pair(std::size_t p, const ScalarMatrix& b) {
  // [[0, B], [i B, 0]] with B real diagonal, as in x_*, y_*, X_j
  ScalarMatrix m(2 * p, 2 * p);
  put_block(m, b, 0, p);
  put_block(m, I() * b, p, 0);
  return m;
}

inline ScalarMatrix diag_unit(std::size_t p, std::size_t j) { return unit(p, j, j); }

inline void check_params(bool ok, const std::string& msg) {
  if (!ok) throw MathError("catalog: " + msg);
}

}  // namespace catalog_detail

inline CatalogEntry build_su_n(int n) {
  using namespace catalog_detail;
  check_params(n >= 2, "su_n needs n >= 2");
  auto mats = anti_hermitian(n, true);
  CatalogEntry e;
  e.family = Family::su_n;
  e.params = {n};
  e.algebra = from_matrix_basis(mats, std::vector<int>(mats.size(), 0), n, 0, seq_names(mats.size()));
  e.form = supertrace_form(e.algebra);
  e.components = {{"su(" + std::to_string(n) + ")", Subspace::whole(mats.size())}};
  return e;
}

inline CatalogEntry build_su_pq(int p, int q) {
  using namespace catalog_detail;
  check_params(q >= 1 && p > q, "su_pq needs p > q >= 1");
  SupqData d = su_pq_basis(p, q);
  MatrixSpan span(d.mats, d.par, p, q);
  CatalogEntry e;
  e.family = Family::su_pq;
  e.params = {p, q};
  e.algebra = span.algebra(seq_names(d.mats.size()));
  e.form = supertrace_form(e.algebra);
  const std::size_t n = e.algebra.dim();
  e.components.push_back({"su(" + std::to_string(p) + ")", index_span(n, 0, d.su_p)});
  if (d.su_q) e.components.push_back({"su(" + std::to_string(q) + ")", index_span(n, d.su_p, d.su_p + d.su_q)});
  e.components.push_back({"center", index_span(n, d.center, d.center + 1)});
  e.specials["i_ii"] = unit_vec(n, d.center);
  ScalarMatrix z(p + q, p + q);
  z(0, p) = 1;
  z(p, 0) = I();
  e.specials["z_star"] = coords_or_throw(span, z, "z_*");
  return e;
}

inline CatalogEntry build_psu_pp(int p) {
  using namespace catalog_detail;
  check_params(p >= 2, "psu_pp needs p >= 2");
  SupqData d = su_pq_basis(p, p);
  MatrixSpan span(d.mats, d.par, p, p);
  LieSuperalgebra car = span.algebra(seq_names(d.mats.size()));
  const std::size_t N = car.dim();
  Quotient q = quotient_lsa(car, Subspace::span(N, {unit_vec(N, d.center)}));
  CatalogEntry e;
  e.family = Family::psu_pp;
  e.params = {p};
  e.algebra = renamed(q.algebra);
  std::vector<ScalarMatrix> lifts;
  for (auto k : q.complement) lifts.push_back(d.mats[k]);
  e.algebra.set_realization({lifts, static_cast<std::size_t>(p), static_cast<std::size_t>(p)});
  e.form = supertrace_form(e.algebra);
  const std::size_t n = e.algebra.dim();
  // D = ad diag(i 1_p, 0)
  ScalarMatrix h(2 * p, 2 * p);
  for (int k = 0; k < p; ++k) h(k, k) = I();
  RatMatrix dm(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    const ScalarMatrix& x = lifts[k];
    dm.set_col(k, q.projection * coords_or_throw(span, h * x - x * h, "D image"));
  }
  e.outer_derivation = dm;
  e.components.push_back({"su(" + std::to_string(p) + ")_1", project_span(q.projection, index_span(N, 0, d.su_p))});
  e.components.push_back({"su(" + std::to_string(p) + ")_2", project_span(q.projection, index_span(N, d.su_p, d.su_p + d.su_q))});
  ScalarMatrix bmat(p, p);
  bmat(0, 0) = 1;
  bmat(1, 1) = -1;
  e.specials["x_star"] = q.projection * coords_or_throw(span, odd_pair(p, bmat), "x_*");
  e.specials["y_star"] = q.projection * coords_or_throw(span, odd_pair(p, ScalarMatrix::identity(p)), "y_*");
  for (int j = 0; j < p; ++j) {
    Vec c = coords_or_throw(span, odd_pair(p, diag_unit(p, j)), "X_j");
    e.carrier_specials["X_" + std::to_string(j + 1)] = c;
    e.specials["X_" + std::to_string(j + 1)] = q.projection * c;
  }
  e.carrier_specials["i1"] = unit_vec(N, d.center);
  e.carrier = car;
  e.carrier_projection = q.projection;
  return e;
}

inline CatalogEntry build_c_n(int nn) {
  using namespace catalog_detail;
  check_params(nn >= 2, "c_n needs n >= 2");
  const std::size_t m = nn - 1, sz = 2 + 2 * m;
  auto cmat = [&](const Scalar& alpha, const ScalarMatrix& M, const ScalarMatrix& Nn, const ScalarMatrix& A, const ScalarMatrix& B) {
    ScalarMatrix x(sz, sz);
    x(0, 0) = alpha;
    x(1, 1) = -alpha;
    put_block(x, M, 0, 2);
    put_block(x, Nn, 0, 2 + m);
    put_block(x, I() * conj_entries(Nn), 1, 2);
    put_block(x, Scalar(-1) * I() * conj_entries(M), 1, 2 + m);
    put_block(x, Scalar(-1) * I() * conj_entries(M).transpose(), 2, 0);
    put_block(x, Nn.transpose(), 2, 1);
    put_block(x, Scalar(-1) * I() * conj_entries(Nn).transpose(), 2 + m, 0);
    put_block(x, Scalar(-1) * M.transpose(), 2 + m, 1);
    put_block(x, A, 2, 2);
    put_block(x, B, 2, 2 + m);
    put_block(x, Scalar(-1) * conj_transpose(B), 2 + m, 2);
    put_block(x, Scalar(-1) * A.transpose(), 2 + m, 2 + m);
    return x;
  };
  ScalarMatrix z1(1, m), zm(m, m);
  std::vector<ScalarMatrix> mats;
  std::vector<int> par;
  mats.push_back(cmat(I(), z1, z1, zm, zm));
  for (const auto& a : anti_hermitian(m, false)) mats.push_back(cmat(Scalar(0), z1, z1, a, zm));
  for (std::size_t k = 0; k < m; ++k)
    for (std::size_t l = k; l < m; ++l)
      for (const Scalar& c : {Scalar(1), I()}) {
        ScalarMatrix b(m, m);
        b(k, l) = b(l, k) = c;
        mats.push_back(cmat(Scalar(0), z1, z1, zm, b));
      }
  par.assign(mats.size(), 0);
  const std::size_t ne = mats.size();
  for (int which = 0; which < 2; ++which)
    for (std::size_t k = 0; k < m; ++k)
      for (const Scalar& c : {Scalar(1), I()}) {
        ScalarMatrix v(1, m);
        v(0, k) = c;
        mats.push_back(which == 0 ? cmat(Scalar(0), v, z1, zm, zm) : cmat(Scalar(0), z1, v, zm, zm));
        par.push_back(1);
      }
  CatalogEntry e;
  e.family = Family::c_n;
  e.params = {nn};
  e.algebra = from_matrix_basis(mats, par, 2, 2 * m, seq_names(mats.size()));
  e.form = supertrace_form(e.algebra);
  const std::size_t n = e.algebra.dim();
  e.components = {{"R", index_span(n, 0, 1)}, {"sp(" + std::to_string(m) + ")", index_span(n, 1, ne)}};
  e.specials["alpha"] = unit_vec(n, 0);
  // i E_11 in the A block; its square norm is minus that of alpha
  e.specials["sp_unit"] = unit_vec(n, 1 + m * (m - 1));
  return e;
}

namespace catalog_detail {

struct QData {
  std::vector<ScalarMatrix> mats;
  std::vector<int> par;
  std::size_t center = 0;
};

inline ScalarMatrix q_element(std::size_t n, const ScalarMatrix& a, const ScalarMatrix& b) {
  ScalarMatrix x(2 * n, 2 * n);
  put_block(x, a, 0, 0);
  put_block(x, a, n, n);
  ScalarMatrix c = (Scalar(1) - I()) * b;
  put_block(x, c, 0, n);
  put_block(x, c, n, 0);
  return x;
}

inline QData q_basis(std::size_t n) {
  QData d;
  ScalarMatrix zn(n, n);
  for (const auto& a : anti_hermitian(n, true)) d.mats.push_back(q_element(n, a, zn));
  d.center = d.mats.size();
  d.mats.push_back(q_element(n, I() * ScalarMatrix::identity(n), zn));
  d.par.assign(d.mats.size(), 0);
  for (const auto& b : anti_hermitian(n, true)) {
    d.mats.push_back(q_element(n, zn, b));
    d.par.push_back(1);
  }
  return d;
}

// tr(ab' + a'b) on lifts
inline BilinearForm q_form(const std::vector<ScalarMatrix>& lifts, std::size_t n) {
  const std::size_t d = lifts.size();
  Scalar inv = (Scalar(1) - I()).inverse();
  std::vector<ScalarMatrix> as, bs;
  for (const auto& x : lifts) {
    as.push_back(block(x, 0, 0, n, n));
    bs.push_back(inv * block(x, 0, n, n, n));
  }
  BilinearForm f{RatMatrix(d, d)};
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      Scalar t = trace(as[i] * bs[j] + as[j] * bs[i]);
      if (!t.is_rational()) throw MathError("catalog: q-form value is not rational");
      f.gram(i, j) = t.rational_value();
    }
  return f;
}

// Y_j with b_j = i(B_j - B_{j+1}), cyclic
inline ScalarMatrix y_matrix(std::size_t n, std::size_t j) {
  ScalarMatrix b = I() * (diag_unit(n, j) - diag_unit(n, (j + 1) % n));
  return q_element(n, ScalarMatrix(n, n), b);
}

}  // namespace catalog_detail

inline CatalogEntry build_q_n(int n) {
  using namespace catalog_detail;
  check_params(n >= 2, "q_n needs n >= 2");
  QData d = q_basis(n);
  MatrixSpan span(d.mats, d.par, n, n);
  CatalogEntry e;
  e.family = Family::q_n;
  e.params = {n};
  e.algebra = span.algebra(seq_names(d.mats.size()));
  e.form = q_form(d.mats, n);
  const std::size_t dim = e.algebra.dim();
  e.components = {{"su(" + std::to_string(n) + ")", index_span(dim, 0, d.center)}, {"center", index_span(dim, d.center, d.center + 1)}};
  e.specials["i1"] = unit_vec(dim, d.center);
  for (int j = 0; j < n; ++j) e.specials["Y_" + std::to_string(j + 1)] = coords_or_throw(span, y_matrix(n, j), "Y_j");
  return e;
}

inline CatalogEntry build_pq_n(int n) {
  using namespace catalog_detail;
  check_params(n > 2, "pq_n needs n > 2");
  QData d = q_basis(n);
  MatrixSpan span(d.mats, d.par, n, n);
  LieSuperalgebra car = span.algebra(seq_names(d.mats.size()));
  const std::size_t N = car.dim();
  Quotient q = quotient_lsa(car, Subspace::span(N, {unit_vec(N, d.center)}));
  CatalogEntry e;
  e.family = Family::pq_n;
  e.params = {n};
  e.algebra = renamed(q.algebra);
  std::vector<ScalarMatrix> lifts;
  for (auto k : q.complement) lifts.push_back(d.mats[k]);
  e.algebra.set_realization({lifts, static_cast<std::size_t>(n), static_cast<std::size_t>(n)});
  e.form = q_form(lifts, n);
  const std::size_t dim = e.algebra.dim();
  // D = ad [[0, 1], [i1, 0]], an odd operator
  ScalarMatrix zm(2 * n, 2 * n);
  put_block(zm, ScalarMatrix::identity(n), 0, n);
  put_block(zm, I() * ScalarMatrix::identity(n), n, 0);
  RatMatrix dm(dim, dim);
  for (std::size_t k = 0; k < dim; ++k)
    dm.set_col(k, q.projection * coords_or_throw(span, super_commutator(zm, 1, lifts[k], e.algebra.parity(k)), "D image"));
  e.outer_derivation = dm;
  e.components = {{"su(" + std::to_string(n) + ")", index_span(dim, 0, d.center)}};
  for (int j = 0; j < n; ++j) {
    Vec c = coords_or_throw(span, y_matrix(n, j), "Y_j");
    e.carrier_specials["Y_" + std::to_string(j + 1)] = c;
    e.specials["Y_" + std::to_string(j + 1)] = q.projection * c;
  }
  e.carrier_specials["i1"] = unit_vec(N, d.center);
  e.carrier = car;
  e.carrier_projection = q.projection;
  return e;
}

inline CatalogEntry build_catalog(Family f, const std::vector<int>& params) {
  auto need = [&](std::size_t k) {
    if (params.size() != k)
      throw MathError(std::string("catalog: ") + family_name(f) + " takes " + std::to_string(k) + " parameter" + (k > 1 ? "s" : ""));
  };
  switch (f) {
    case Family::su_n: need(1); return build_su_n(params[0]);
    case Family::su_pq: need(2); return build_su_pq(params[0], params[1]);
    case Family::psu_pp: need(1); return build_psu_pp(params[0]);
    case Family::c_n: need(1); return build_c_n(params[0]);
    case Family::q_n: need(1); return build_q_n(params[0]);
    default: need(1); return build_pq_n(params[0]);
  }
}

// "su_pq:2,1"
inline CatalogEntry build_catalog(const std::string& spec) {
  auto colon = spec.find(':');
  if (colon == std::string::npos) throw ParseError("catalog spec '" + spec + "' needs the form family:params");
  Family f = parse_family(spec.substr(0, colon));
  std::vector<int> ps;
  std::string rest = spec.substr(colon + 1);
  std::size_t pos = 0;
  while (pos <= rest.size()) {
    auto comma = rest.find(',', pos);
    std::string tok = rest.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    try {
      std::size_t used = 0;
      int v = std::stoi(tok, &used);
      if (used != tok.size()) throw std::invalid_argument(tok);
      ps.push_back(v);
    } catch (const std::exception&) {
      throw ParseError("catalog spec '" + spec + "': bad parameter '" + tok + "'");
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return build_catalog(f, ps);
}

inline std::size_t expected_dimension(Family f, const std::vector<int>& p) {
  auto n = static_cast<std::size_t>(p[0]);
  switch (f) {
    case Family::su_n: return n * n - 1;
    case Family::su_pq: {
      auto s = n + static_cast<std::size_t>(p[1]);
      return s * s - 1;
    }
    case Family::psu_pp: return 4 * n * n - 2;
    case Family::c_n: return (1 + (n - 1) * (2 * n - 1)) + 4 * (n - 1);
    case Family::q_n: return 2 * n * n - 1;
    default: return 2 * (n * n - 1);
  }
}

// ---------------------------------------------------------------- isotropic even vectors

namespace catalog_detail {

inline std::optional<Rational> rational_sqrt(const Rational& q) {
  if (sgn(q) < 0) return std::nullopt;
  mpz_class a = q.get_num(), b = q.get_den();
  mpz_class ra = sqrt(a), rb = sqrt(b);
  if (ra * ra != a || rb * rb != b) return std::nullopt;
  return Rational(ra, rb);
}

// nonzero x in the span of the columns of `basis` with g(x, x) = 0, diagonal entries d
inline std::optional<Vec> isotropic_from_diagonal(const RatMatrix& basis, const Vec& d) {
  const std::size_t n = d.size();
  auto combo = [&](const std::vector<std::pair<std::size_t, Rational>>& cs) {
    Vec x = zero_vec(basis.rows());
    for (const auto& [k, c] : cs) axpy(x, c, basis.col(k));
    return x;
  };
  for (std::size_t k = 0; k < n; ++k)
    if (sgn(d[k]) == 0) return combo({{k, Rational(1)}});
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (sgn(d[a]) > 0 && sgn(d[b]) < 0)
        if (auto r = rational_sqrt(-d[b] / d[a])) return combo({{a, *r}, {b, Rational(1)}});
  // small integer search on three or four diagonal entries
  const int H = 6;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      for (std::size_t c = b + 1; c < n; ++c) {
        if (sgn(d[a]) == sgn(d[b]) && sgn(d[b]) == sgn(d[c])) continue;
        for (int x = 1; x <= H; ++x)
          for (int y = 1; y <= H; ++y) {
            Rational rest = -(d[a] * x * x + d[b] * y * y) / d[c];
            if (auto z = rational_sqrt(rest); z && sgn(*z) != 0) return combo({{a, Rational(x)}, {b, Rational(y)}, {c, *z}});
          }
      }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      for (std::size_t c = b + 1; c < n; ++c)
        for (std::size_t e = c + 1; e < n; ++e)
          for (int x = 1; x <= H; ++x)
            for (int y = 1; y <= H; ++y)
              for (int z = 1; z <= H; ++z) {
                Rational rest = -(d[a] * x * x + d[b] * y * y + d[c] * z * z) / d[e];
                if (auto w = rational_sqrt(rest); w && sgn(*w) != 0)
                  return combo({{a, Rational(x)}, {b, Rational(y)}, {c, Rational(z)}, {e, *w}});
              }
  return std::nullopt;
}

}  // namespace catalog_detail

struct IsotropicData {
  std::vector<Vec> vectors;             // isotropic even vectors spanning the even part
  std::optional<std::pair<Vec, Vec>> hyperbolic;  // w, w2 isotropic with k(w, w2) != 0
  bool spans = false;
};

// Even x with k(x,x) = 0 spanning k_0 (possible when k restricted to k_0 is indefinite).
inline IsotropicData isotropic_even_vectors(const LieSuperalgebra& l, const BilinearForm& kappa) {
  const std::size_t n = l.dim();
  auto ev = l.indices_of_parity(0);
  IsotropicData out;
  if (ev.empty()) {
    out.spans = true;
    return out;
  }
  RatMatrix g(ev.size(), ev.size());
  for (std::size_t a = 0; a < ev.size(); ++a)
    for (std::size_t b = 0; b < ev.size(); ++b) g(a, b) = kappa.gram(ev[a], ev[b]);
  auto lift = [&](const Vec& v) {
    Vec x = zero_vec(n);
    for (std::size_t a = 0; a < ev.size(); ++a) x[ev[a]] = v[a];
    return x;
  };
  auto k = [&](const Vec& x, const Vec& y) { return dot(x, g * y); };
  if (g.is_zero()) {
    for (std::size_t a = 0; a < ev.size(); ++a) out.vectors.push_back(unit_vec(n, ev[a]));
    out.spans = true;
    return out;
  }
  Congruence c = congruence_diagonalize(g);
  auto w = catalog_detail::isotropic_from_diagonal(c.basis, c.diagonal);
  if (!w) return out;
  std::optional<Vec> z;
  for (std::size_t a = 0; a < ev.size() && !z; ++a)
    if (sgn(k(unit_vec(ev.size(), a), *w)) != 0) z = unit_vec(ev.size(), a);
  if (!z) return out;
  Vec w2 = *z;
  axpy(w2, -k(*z, *z) / (2 * k(*z, *w)), *w);
  out.hyperbolic = std::make_pair(lift(*w), lift(w2));
  std::vector<Vec> vs = {*w, w2};
  auto fix = [&](Vec u, const Vec& by) {
    axpy(u, -k(u, u) / (2 * k(u, by)), by);
    return u;
  };
  for (std::size_t a = 0; a < ev.size(); ++a) {
    Vec u = unit_vec(ev.size(), a);
    if (sgn(k(u, u)) == 0) vs.push_back(u);
    else if (sgn(k(u, *w)) != 0) vs.push_back(fix(u, *w));
    else if (sgn(k(u, w2)) != 0) vs.push_back(fix(u, w2));
    else vs.push_back(fix(add(u, w2), *w));
  }
  RowReducer rr(ev.size());
  for (const auto& v : vs) {
    if (sgn(k(v, v)) != 0) throw MathError("isotropic_even_vectors: internal check failed");
    if (rr.insert(v)) out.vectors.push_back(lift(v));
  }
  out.spans = rr.rank() == ev.size();
  return out;
}

// ---------------------------------------------------------------- facts

struct Fact {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct CatalogFacts {
  std::vector<Fact> facts;
  bool all_passed() const {
    for (const auto& f : facts)
      if (!f.passed) return false;
    return true;
  }
};

inline std::size_t expected_h2(Family f) {
  return (f == Family::psu_pp || f == Family::pq_n) ? 1 : 0;
}

inline RatMatrix restrict_gram(const RatMatrix& g, const Subspace& s) {
  const auto& b = s.basis();
  RatMatrix r(b.size(), b.size());
  for (std::size_t i = 0; i < b.size(); ++i) {
    Vec gi = g * b[i];
    for (std::size_t j = 0; j < b.size(); ++j) r(i, j) = dot(b[j], gi);
  }
  return r;
}

inline std::string definiteness_name(const RatMatrix& g) {
  if (g.rows() == 0) return "empty";
  if (definiteness(g).kind == Definiteness::positive_definite) return "positive definite";
  RatMatrix m = Rational(-1) * g;
  if (definiteness(m).kind == Definiteness::positive_definite) return "negative definite";
  return "not definite";
}

// Even x, y with 0 != k(x,x) = -k(y,y), k(x,y) = 0.
inline std::optional<std::pair<Vec, Vec>> equalzero_pair(const CatalogEntry& e) {
  auto iso = isotropic_even_vectors(e.algebra, e.form);
  if (!iso.hyperbolic) return std::nullopt;
  auto [w, w2] = *iso.hyperbolic;
  return std::make_pair(add(w, w2), sub(w, w2));
}

inline CatalogFacts verify_catalog_facts(const CatalogEntry& e) {
  CatalogFacts r;
  const LieSuperalgebra& k = e.algebra;
  const std::size_t n = k.dim();
  auto add_fact = [&](std::string name, bool ok, std::string detail = {}) { r.facts.push_back({std::move(name), ok, std::move(detail)}); };

  try {
    validate_lsa(k);
    add_fact("validation", true);
  } catch (const MathError& err) {
    add_fact("validation", false, err.what());
  }
  std::size_t want = expected_dimension(e.family, e.params);
  add_fact("dimension", n == want, std::to_string(n) + " (formula " + std::to_string(want) + "), even " + std::to_string(k.even_dim()) + ", odd " + std::to_string(k.odd_dim()));

  FormReport fr = form_report(k, e.form);
  FormParity want_parity = (e.family == Family::pq_n || e.family == Family::q_n) ? FormParity::odd : FormParity::even;
  add_fact("form parity", fr.parity == want_parity, to_string(fr.parity));
  add_fact("form supersymmetric", fr.supersymmetric);
  add_fact("form invariant", fr.invariant);
  if (e.family == Family::q_n) {
    Subspace rad = kernel(e.form.gram);
    add_fact("form radical is R i1", rad == Subspace::span(n, {e.specials.at("i1")}), "radical dim " + std::to_string(rad.dim()));
  } else {
    add_fact("form nondegenerate", fr.nondegenerate);
  }
  if (e.carrier) {
    const auto& c = *e.carrier;
    BilinearForm cf = e.family == Family::psu_pp ? supertrace_form(c) : catalog_detail::q_form(c.realization()->matrices, e.params[0]);
    Subspace rad = kernel(cf.gram);
    add_fact("carrier form radical is R i1", rad == Subspace::span(c.dim(), {e.carrier_specials.at("i1")}), "radical dim " + std::to_string(rad.dim()));
  }

  // signs on even components
  for (const auto& [name, span] : e.components) {
    std::string got = definiteness_name(restrict_gram(e.form.gram, span));
    std::string expect;
    if (e.family == Family::su_n) expect = "negative definite";
    else if (e.family == Family::su_pq) expect = name == "center" ? "positive definite" : (name.rfind("su(" + std::to_string(e.params[0]) + ")", 0) == 0 ? "negative definite" : "positive definite");
    else if (e.family == Family::psu_pp) expect = name.back() == '1' ? "negative definite" : "positive definite";
    else if (e.family == Family::c_n) expect = name == "R" ? "negative definite" : "positive definite";
    if (!expect.empty()) add_fact("form on " + name, got == expect, got);
  }

  add_fact("centroid is R id", centroid(k).dim() == 1, "dim " + std::to_string(centroid(k).dim()));
  StructureReport sr = structure_report(k);
  add_fact("perfect", sr.perfect);

  Z2Data z = z2_b2(k);
  if (e.family != Family::q_n)
    add_fact("H2 dimension", z.h2() == expected_h2(e.family), std::to_string(z.h2()) + " (expected " + std::to_string(expected_h2(e.family)) + ")");

  if (e.outer_derivation) {
    const RatMatrix& d = *e.outer_derivation;
    bool der = is_derivation(k, d);
    bool vanish = true;
    for (auto j : k.indices_of_parity(0))
      if (!is_zero(d.col(j))) vanish = false;
    DerivationSpaces ds = derivation_space(k);
    bool outer = !ds.inner.contains(flatten(d));
    add_fact("D is a derivation", der);
    add_fact("D vanishes on the even part", vanish);
    add_fact("D is outer", outer);
    if (fr.nondegenerate) add_fact("D is kappa-skew", in_der_minus(k, e.form, d));
    RatMatrix kd = kappa_T(e.form, d).gram;
    bool coc = is_cocycle(k, kd);
    bool nontrivial = coc && !z.b2.contains(z.coords.from_gram(kd));
    add_fact("[kappa_D] nonzero in H2", nontrivial);
    if (e.family == Family::pq_n) {
      auto od = k.indices_of_parity(1);
      RatMatrix g(od.size(), od.size());
      for (std::size_t a = 0; a < od.size(); ++a)
        for (std::size_t b = 0; b < od.size(); ++b) g(a, b) = kd(od[a], od[b]);
      bool sym = is_symmetric(g);
      std::string got = sym ? definiteness_name(g) : "not symmetric";
      add_fact("kappa_D definite on k_1", got == "positive definite" || got == "negative definite", got);
    }
  }

  if (fr.nondegenerate && e.family != Family::q_n) {
    DerivationSpaces ds = derivation_space(k);
    Subspace dm = split_by_star(k, e.form, ds.all, -1);
    add_fact("dim der_- = dim Z2", dm.dim() == z.z2.dim(), std::to_string(dm.dim()) + " vs " + std::to_string(z.z2.dim()));
    Subspace cp = split_by_star(k, e.form, centroid(k), 1);
    std::size_t sym = invariant_symmetric_forms_dim(k);
    add_fact("dim cent_+ = dim invariant symmetric forms", cp.dim() == sym, std::to_string(cp.dim()) + " vs " + std::to_string(sym));
  }

  auto ev = k.indices_of_parity(0), od = k.indices_of_parity(1);
  if (!od.empty()) {
    std::vector<RatMatrix> action;
    for (auto i : ev) action.push_back(k.ad_basis(i));
    Subspace odd_part = Subspace::span(n, [&] {
      std::vector<Vec> v;
      for (auto j : od) v.push_back(unit_vec(n, j));
      return v;
    }());
    bool all = true;
    for (auto j : od)
      if (!(generated_submodule(action, unit_vec(n, j)) == odd_part)) all = false;
    add_fact("each odd basis vector generates k_1 under k_0", all);
  }

  if (e.family == Family::su_pq || e.family == Family::psu_pp || e.family == Family::c_n) {
    auto iso = isotropic_even_vectors(k, e.form);
    add_fact("isotropic even vectors span k_0", iso.spans, std::to_string(iso.vectors.size()) + " vectors");
    auto pr = equalzero_pair(e);
    bool ok = false;
    if (pr) {
      Rational xx = e.form(pr->first, pr->first), yy = e.form(pr->second, pr->second), xy = e.form(pr->first, pr->second);
      ok = sgn(xx) != 0 && xx == -yy && sgn(xy) == 0;
    }
    add_fact("even x, y with 0 != k(x,x) = -k(y,y), k(x,y) = 0", ok);
    if (e.family == Family::c_n) {
      const Vec &x1 = e.specials.at("alpha"), &x2 = e.specials.at("sp_unit");
      Rational a = e.form(x1, x1), b = e.form(x2, x2);
      add_fact("x1 in R, x2 in sp with k(x1,x1) = -k(x2,x2) != 0, k(x1,x2) = 0", sgn(a) != 0 && a == -b && sgn(e.form(x1, x2)) == 0,
               "k(x1,x1) = " + to_string(a));
    }
  }
  return r;
}

}  // namespace suplie
