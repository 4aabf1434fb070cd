#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "assoc.hpp"
#include "current.hpp"
#include "linalg.hpp"
#include "lsa.hpp"

namespace suplie {

// ---------------------------------------------------------------- derivations

// End(L) is identified with Q^{n*n} by flattening row-major: T(k, j) = coefficient of e_k in T e_j.
inline int endo_parity(const LieSuperalgebra& l, const RatMatrix& t) {
  int p = -1;
  for (std::size_t k = 0; k < l.dim(); ++k)
    for (std::size_t j = 0; j < l.dim(); ++j)
      if (sgn(t(k, j)) != 0) {
        int q = l.parity(k) ^ l.parity(j);
        if (p == -1) p = q;
        else if (p != q) return 2;
      }
  return p;
}

// D[x,y] = [Dx,y] + (-1)^{|D||x|}[x,Dy]
inline bool is_derivation(const LieSuperalgebra& l, const RatMatrix& d) {
  int pd = endo_parity(l, d);
  if (pd == -1) return true;
  if (pd == 2) return false;
  const std::size_t n = l.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vec lhs = d * to_dense(l.bracket_basis(i, j), n);
      Vec r1 = l.bracket(d.col(i), unit_vec(n, j));
      Vec r2 = l.bracket(unit_vec(n, i), d.col(j));
      axpy(r1, Rational(sign_pp(pd, l.parity(i))), r2);
      if (lhs != r1) return false;
    }
  return true;
}

struct DerivationSpaces {
  Subspace even, odd, all, inner;
  std::size_t outer_dim() const { return all.dim() - inner.dim(); }
};

// solve the derivation identity for endomorphisms of parity pd
inline Subspace derivations_of_parity(const LieSuperalgebra& l, int pd) {
  const std::size_t n = l.dim();
  std::vector<long> var(n * n, -1);
  std::vector<std::size_t> full;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t j = 0; j < n; ++j)
      if ((l.parity(k) ^ l.parity(j)) == pd) {
        var[k * n + j] = static_cast<long>(full.size());
        full.push_back(k * n + j);
      }
  RowReducer rr(full.size());
  std::map<std::size_t, std::map<std::size_t, Rational>> rows;
  auto add = [&](std::size_t row, std::size_t k, std::size_t j, const Rational& c) {
    long v = var[k * n + j];
    if (v >= 0) rows[row][static_cast<std::size_t>(v)] += c;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      rows.clear();
      for (const auto& [m, c] : l.bracket_basis(i, j))
        for (std::size_t r = 0; r < n; ++r) add(r, r, m, c);
      for (std::size_t k = 0; k < n; ++k)
        for (const auto& [r, c] : l.bracket_basis(k, j)) add(r, k, i, -c);
      Rational s = sign_pp(pd, l.parity(i));
      for (std::size_t k = 0; k < n; ++k)
        for (const auto& [r, c] : l.bracket_basis(i, k)) add(r, k, j, -s * c);
      for (auto& [r, m] : rows) {
        SparseRow row;
        for (auto& [v, c] : m)
          if (sgn(c) != 0) row.emplace_back(v, c);
        if (!row.empty()) rr.insert(row);
      }
    }
  std::vector<Vec> out;
  for (const auto& kv : rr.kernel_basis()) {
    Vec f = zero_vec(n * n);
    for (std::size_t t = 0; t < full.size(); ++t) f[full[t]] = kv[t];
    out.push_back(std::move(f));
  }
  return Subspace::span(n * n, out);
}

inline DerivationSpaces derivation_space(const LieSuperalgebra& l) {
  const std::size_t n = l.dim();
  DerivationSpaces d;
  d.even = derivations_of_parity(l, 0);
  d.odd = derivations_of_parity(l, 1);
  d.all = subspace_sum(d.even, d.odd);
  std::vector<Vec> ads;
  for (std::size_t i = 0; i < n; ++i) ads.push_back(flatten(l.ad_basis(i)));
  d.inner = Subspace::span(n * n, ads);
  return d;
}

// gamma[a,b] = [gamma a, b]
inline Subspace centroid(const LieSuperalgebra& l) {
  const std::size_t n = l.dim();
  RowReducer rr(n * n);
  std::map<std::size_t, std::map<std::size_t, Rational>> rows;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      rows.clear();
      for (const auto& [m, c] : l.bracket_basis(a, b))
        for (std::size_t r = 0; r < n; ++r) rows[r][r * n + m] += c;
      for (std::size_t k = 0; k < n; ++k)
        for (const auto& [r, c] : l.bracket_basis(k, b)) rows[r][k * n + a] -= c;
      for (auto& [r, m] : rows) {
        SparseRow row;
        for (auto& [v, c] : m)
          if (sgn(c) != 0) row.emplace_back(v, c);
        if (!row.empty()) rr.insert(row);
      }
    }
  return Subspace::span(n * n, rr.kernel_basis());
}

// ---------------------------------------------------------------- star involution

inline RatMatrix parity_sign_matrix(const std::vector<int>& par) {
  RatMatrix p(par.size(), par.size());
  for (std::size_t i = 0; i < par.size(); ++i)
    for (std::size_t j = 0; j < par.size(); ++j) p(i, j) = sign_pp(par[i], par[j]);
  return p;
}

// kappa(Sx,y) = (-1)^{|x||y|} kappa(S* y, x), so S* = K^{-T} (P o (S^T K))
class StarOperator {
 public:
  StarOperator(const RatMatrix& kappa, std::vector<int> par) : k_(kappa), par_(std::move(par)) {
    if (rank(kappa) != kappa.rows()) throw MathError("star: the form is degenerate");
    kinvt_ = inverse(kappa.transpose());
  }

  RatMatrix operator()(const RatMatrix& s) const {
    RatMatrix m = s.transpose() * k_;
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j)
        if (par_[i] & par_[j]) m(i, j) = -m(i, j);
    return kinvt_ * m;
  }

 private:
  RatMatrix k_, kinvt_;
  std::vector<int> par_;
};

inline RatMatrix star(const LieSuperalgebra& l, const BilinearForm& kappa, const RatMatrix& t) {
  return StarOperator(kappa.gram, l.parities())(t);
}

// {T in space : T* = sign T}
inline Subspace split_by_star(const LieSuperalgebra& l, const BilinearForm& kappa, const Subspace& space, int sign) {
  const std::size_t n = l.dim();
  StarOperator st(kappa.gram, l.parities());
  const auto& b = space.basis();
  std::vector<Vec> images;
  for (const auto& v : b) {
    Vec w = flatten(st(unflatten(v, n, n)));
    if (!space.contains(w)) throw MathError("split_by_star: space is not star-stable");
    axpy(w, Rational(-sign), v);
    images.push_back(std::move(w));
  }
  // coefficients c with sum c_k (T_k* - sign T_k) = 0
  RowReducer rr(b.size());
  for (std::size_t r = 0; r < n * n; ++r) {
    SparseRow row;
    for (std::size_t k = 0; k < b.size(); ++k)
      if (sgn(images[k][r]) != 0) row.emplace_back(k, images[k][r]);
    if (!row.empty()) rr.insert(row);
  }
  std::vector<Vec> out;
  for (const auto& c : rr.kernel_basis()) {
    Vec x = zero_vec(n * n);
    for (std::size_t k = 0; k < b.size(); ++k) axpy(x, c[k], b[k]);
    out.push_back(std::move(x));
  }
  return Subspace::span(n * n, out);
}

// kappa_T(x, y) = kappa(Tx, y)
inline BilinearForm kappa_T(const BilinearForm& kappa, const RatMatrix& t) { return {t.transpose() * kappa.gram}; }

inline bool derivation_invariant(const LieSuperalgebra& l, const BilinearForm& kappa) {
  DerivationSpaces d = derivation_space(l);
  return split_by_star(l, kappa, d.all, -1).dim() == d.all.dim();
}

inline FormReport full_form_report(const LieSuperalgebra& l, const BilinearForm& b) {
  return form_report(l, b, [](const LieSuperalgebra& x, const BilinearForm& y) { return derivation_invariant(x, y); });
}

// ---------------------------------------------------------------- pair coordinates

// Coordinates of super-skew (eps = -1) or super-symmetric (eps = +1) bilinear maps:
// F(j,i) = eps (-1)^{p_i p_j} F(i,j); one variable per unordered pair that is not forced to vanish.
class PairCoords {
 public:
  PairCoords(std::vector<int> par, int eps) : par_(std::move(par)), eps_(eps) {
    const std::size_t n = par_.size();
    idx_.assign(n * n, -1);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) {
        if (i == j && eps_ * sign_pp(par_[i], par_[i]) != 1) continue;
        idx_[i * n + j] = static_cast<long>(vars_.size());
        vars_.emplace_back(i, j);
      }
  }

  std::size_t n() const { return par_.size(); }
  std::size_t size() const { return vars_.size(); }
  const std::pair<std::size_t, std::size_t>& var(std::size_t v) const { return vars_[v]; }
  int var_parity(std::size_t v) const { return par_[vars_[v].first] ^ par_[vars_[v].second]; }

  // (variable, sign) for the entry (i, j); sign 0 when the entry is identically zero
  std::pair<std::size_t, int> lookup(std::size_t i, std::size_t j) const {
    if (i <= j) {
      long v = idx_[i * n() + j];
      return v < 0 ? std::pair<std::size_t, int>{0, 0} : std::pair<std::size_t, int>{static_cast<std::size_t>(v), 1};
    }
    long v = idx_[j * n() + i];
    if (v < 0) return {0, 0};
    return {static_cast<std::size_t>(v), eps_ * sign_pp(par_[i], par_[j])};
  }

  RatMatrix to_gram(const Vec& c) const {
    RatMatrix g(n(), n());
    for (std::size_t i = 0; i < n(); ++i)
      for (std::size_t j = 0; j < n(); ++j) {
        auto [v, s] = lookup(i, j);
        if (s != 0) g(i, j) = s * c[v];
      }
    return g;
  }

  // reads the free entries; does not check the symmetry type
  Vec from_gram(const RatMatrix& g) const {
    Vec c(size());
    for (std::size_t v = 0; v < size(); ++v) c[v] = g(vars_[v].first, vars_[v].second);
    return c;
  }

  bool has_symmetry(const RatMatrix& g) const {
    for (std::size_t i = 0; i < n(); ++i)
      for (std::size_t j = 0; j < n(); ++j) {
        Rational want = eps_ * sign_pp(par_[i], par_[j]);
        if (g(j, i) != want * g(i, j)) return false;
      }
    return true;
  }

 private:
  std::vector<int> par_;
  int eps_;
  std::vector<long> idx_;
  std::vector<std::pair<std::size_t, std::size_t>> vars_;
};

// ---------------------------------------------------------------- 2-cocycles

struct Cocycle2 {
  std::vector<RatMatrix> grams;     // one block per value coordinate
  std::vector<int> value_parities;  // parity of each value coordinate
  std::size_t value_dim() const { return grams.size(); }
};

inline Cocycle2 scalar_cocycle(RatMatrix g, int parity) { return {{std::move(g)}, {parity}}; }

// nullopt when g is a super-skew 2-cocycle; otherwise a description of the first failure
inline std::optional<std::string> cocycle_violation(const LieSuperalgebra& l, const RatMatrix& g) {
  const std::size_t n = l.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (g(i, j) != -sign_pp(l.parity(i), l.parity(j)) * g(j, i))
        return "super skew symmetry fails on (" + l.names()[i] + ", " + l.names()[j] + ")";
  // w([x,y],z) = w(x,[y,z]) - (-1)^{|x||y|} w(y,[x,z])
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Rational t = 0;
        for (const auto& [m, c] : l.bracket_basis(i, j)) t += c * g(m, k);
        for (const auto& [m, c] : l.bracket_basis(j, k)) t -= c * g(i, m);
        Rational s = sign_pp(l.parity(i), l.parity(j));
        for (const auto& [m, c] : l.bracket_basis(i, k)) t += s * c * g(j, m);
        if (sgn(t) != 0)
          return "cocycle identity fails on (" + l.names()[i] + ", " + l.names()[j] + ", " + l.names()[k] + ")";
      }
  return std::nullopt;
}

inline bool is_cocycle(const LieSuperalgebra& l, const RatMatrix& g) { return !cocycle_violation(l, g); }

struct Z2Data {
  PairCoords coords;
  Subspace z2, b2;  // in pair coordinates
  std::size_t z2_even = 0, z2_odd = 0;
  std::size_t h2() const { return z2.dim() - b2.dim(); }
};

inline constexpr std::size_t kDenseZ2Cap = 48;

inline int coords_parity(const PairCoords& pc, const Vec& v) {
  for (std::size_t t = 0; t < v.size(); ++t)
    if (sgn(v[t]) != 0) return pc.var_parity(t);
  return 0;
}

// Z^2 and B^2 with scalar (trivial) coefficients, both parities.
inline Z2Data z2_b2(const LieSuperalgebra& l, std::size_t cap = kDenseZ2Cap) {
  const std::size_t n = l.dim();
  if (n > cap)
    throw MathError("Z2 solver refuses dimension " + std::to_string(n) + " (cap " + std::to_string(cap) + "); raise the cap explicitly");
  PairCoords pc(l.parities(), -1);
  RowReducer rr(pc.size());
  std::map<std::size_t, Rational> acc;
  auto put = [&](std::size_t a, std::size_t b, const Rational& c) {
    auto [v, s] = pc.lookup(a, b);
    if (s != 0) acc[v] += s * c;
  };
  // the coboundary operator is super-alternating, so sorted triples suffice
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      for (std::size_t k = j; k < n; ++k) {
        acc.clear();
        for (const auto& [m, c] : l.bracket_basis(i, j)) put(m, k, c);
        for (const auto& [m, c] : l.bracket_basis(j, k)) put(i, m, -c);
        Rational s = sign_pp(l.parity(i), l.parity(j));
        for (const auto& [m, c] : l.bracket_basis(i, k)) put(j, m, s * c);
        SparseRow row;
        for (auto& [v, c] : acc)
          if (sgn(c) != 0) row.emplace_back(v, c);
        if (!row.empty()) rr.insert(row);
      }
  Z2Data d{pc, Subspace::span(pc.size(), rr.kernel_basis()), Subspace(pc.size())};
  for (const auto& b : d.z2.basis()) (coords_parity(pc, b) ? d.z2_odd : d.z2_even)++;
  // B^2: w_m(x,y) = coefficient of e_m in [x,y]
  std::vector<Vec> cob(n, zero_vec(pc.size()));
  for (std::size_t v = 0; v < pc.size(); ++v) {
    auto [i, j] = pc.var(v);
    for (const auto& [m, c] : l.bracket_basis(i, j)) cob[m][v] = c;
  }
  d.b2 = Subspace::span(pc.size(), cob);
  return d;
}

inline std::vector<Cocycle2> z2_space(const LieSuperalgebra& l, std::size_t cap = kDenseZ2Cap) {
  Z2Data d = z2_b2(l, cap);
  std::vector<Cocycle2> out;
  for (const auto& b : d.z2.basis()) out.push_back(scalar_cocycle(d.coords.to_gram(b), coords_parity(d.coords, b)));
  return out;
}

inline Subspace b2_space(const LieSuperalgebra& l, std::size_t cap = kDenseZ2Cap) { return z2_b2(l, cap).b2; }

inline std::size_t h2_dim(const LieSuperalgebra& l, std::size_t cap = kDenseZ2Cap) { return z2_b2(l, cap).h2(); }

// dimension of the space of invariant supersymmetric bilinear forms
inline std::size_t invariant_symmetric_forms_dim(const LieSuperalgebra& l) {
  const std::size_t n = l.dim();
  PairCoords pc(l.parities(), 1);
  RowReducer rr(pc.size());
  std::map<std::size_t, Rational> acc;
  auto put = [&](std::size_t a, std::size_t b, const Rational& c) {
    auto [v, s] = pc.lookup(a, b);
    if (s != 0) acc[v] += s * c;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        acc.clear();
        for (const auto& [m, c] : l.bracket_basis(i, j)) put(m, k, c);
        for (const auto& [m, c] : l.bracket_basis(j, k)) put(i, m, -c);
        SparseRow row;
        for (auto& [v, c] : acc)
          if (sgn(c) != 0) row.emplace_back(v, c);
        if (!row.empty()) rr.insert(row);
      }
  return pc.size() - rr.rank();
}

// ---------------------------------------------------------------- Hochschild maps

// F(ab,c) = F(a,bc) + (-1)^{|b||a|} F(b,ac), F super-skew
inline std::optional<std::string> hochschild_violation(const AssocSuperalgebra& a, const RatMatrix& f) {
  const std::size_t n = a.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (f(i, j) != -sign_pp(a.parity(i), a.parity(j)) * f(j, i))
        return "super skew symmetry fails on (" + a.names()[i] + ", " + a.names()[j] + ")";
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Rational t = 0;
        for (const auto& [m, c] : a.product_basis(i, j)) t += c * f(m, k);
        for (const auto& [m, c] : a.product_basis(j, k)) t -= c * f(i, m);
        Rational s = sign_pp(a.parity(j), a.parity(i));
        for (const auto& [m, c] : a.product_basis(i, k)) t -= s * c * f(j, m);
        if (sgn(t) != 0) return "Hochschild identity fails on (" + a.names()[i] + ", " + a.names()[j] + ", " + a.names()[k] + ")";
      }
  for (std::size_t k = 0; k < n; ++k)
    if (sgn(f(a.unit(), k)) != 0) return "F(1, " + a.names()[k] + ") != 0";
  return std::nullopt;
}

inline bool is_hochschild(const AssocSuperalgebra& a, const RatMatrix& f) { return !hochschild_violation(a, f); }

inline int gram_parity(const std::vector<int>& par, const RatMatrix& g) {
  for (std::size_t i = 0; i < g.rows(); ++i)
    for (std::size_t j = 0; j < g.cols(); ++j)
      if (sgn(g(i, j)) != 0) return par[i] ^ par[j];
  return 0;
}

// basis of Hochschild maps, each homogeneous
inline std::vector<RatMatrix> hochschild_space(const AssocSuperalgebra& a) {
  const std::size_t n = a.dim();
  PairCoords pc(a.parities(), -1);
  RowReducer rr(pc.size());
  std::map<std::size_t, Rational> acc;
  auto put = [&](std::size_t x, std::size_t y, const Rational& c) {
    auto [v, s] = pc.lookup(x, y);
    if (s != 0) acc[v] += s * c;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        acc.clear();
        for (const auto& [m, c] : a.product_basis(i, j)) put(m, k, c);
        for (const auto& [m, c] : a.product_basis(j, k)) put(i, m, -c);
        Rational s = sign_pp(a.parity(j), a.parity(i));
        for (const auto& [m, c] : a.product_basis(i, k)) put(j, m, -s * c);
        SparseRow row;
        for (auto& [v, c] : acc)
          if (sgn(c) != 0) row.emplace_back(v, c);
        if (!row.empty()) rr.insert(row);
      }
  std::vector<RatMatrix> out;
  for (const auto& b : Subspace::span(pc.size(), rr.kernel_basis()).basis()) out.push_back(pc.to_gram(b));
  return out;
}

// ---------------------------------------------------------------- eta and xi

namespace detail {
inline RatMatrix negated(RatMatrix m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = -m(i, j);
  return m;
}
}  // namespace detail

// eta_{f,D}(ax, by) = (-1)^{|b||x|} f(ab) kappa(Dx, y), f a functional on A
inline RatMatrix eta_gram(const CurrentAlgebra& g, const BilinearForm& kappa, const Vec& f, const RatMatrix& d) {
  const std::size_t na = g.A.dim(), nk = g.K.dim();
  RatMatrix kd = d.transpose() * kappa.gram;  // kd(x,y) = kappa(Dx, y)
  Vec fab(na * na, Rational(0));
  for (std::size_t a = 0; a < na; ++a)
    for (std::size_t b = 0; b < na; ++b)
      for (const auto& [c, u] : g.A.product_basis(a, b)) fab[a * na + b] += u * f[c];
  RatMatrix w(g.dim(), g.dim());
  for (std::size_t a = 0; a < na; ++a)
    for (std::size_t b = 0; b < na; ++b) {
      if (sgn(fab[a * na + b]) == 0) continue;
      for (std::size_t x = 0; x < nk; ++x)
        for (std::size_t y = 0; y < nk; ++y)
          if (sgn(kd(x, y)) != 0) w(g.index(a, x), g.index(b, y)) = sign_pp(g.A.parity(b), g.K.parity(x)) * fab[a * na + b] * kd(x, y);
    }
  return w;
}

// xi_{F,S}(ax, by) = (-1)^{|b||x|} F(a,b) kappa(Sx, y)
inline RatMatrix xi_gram(const CurrentAlgebra& g, const BilinearForm& kappa, const RatMatrix& f, const RatMatrix& s) {
  const std::size_t na = g.A.dim(), nk = g.K.dim();
  RatMatrix ks = s.transpose() * kappa.gram;
  RatMatrix w(g.dim(), g.dim());
  for (std::size_t a = 0; a < na; ++a)
    for (std::size_t b = 0; b < na; ++b) {
      if (sgn(f(a, b)) == 0) continue;
      for (std::size_t x = 0; x < nk; ++x)
        for (std::size_t y = 0; y < nk; ++y)
          if (sgn(ks(x, y)) != 0) w(g.index(a, x), g.index(b, y)) = sign_pp(g.A.parity(b), g.K.parity(x)) * f(a, b) * ks(x, y);
    }
  return w;
}

inline bool in_der_minus(const LieSuperalgebra& k, const BilinearForm& kappa, const RatMatrix& d) {
  if (d.is_zero()) return true;
  return is_derivation(k, d) && star(k, kappa, d) == detail::negated(d);
}

inline bool in_cent_plus(const LieSuperalgebra& k, const BilinearForm& kappa, const RatMatrix& s) {
  if (s.is_zero()) return true;
  if (endo_parity(k, s) == 2) return false;
  const Subspace c = centroid(k);
  return c.contains(flatten(s)) && star(k, kappa, s) == s;
}

inline Cocycle2 eta_cocycle(const CurrentAlgebra& g, const BilinearForm& kappa, const Vec& f, const RatMatrix& d) {
  if (!in_der_minus(g.K, kappa, d)) throw MathError("eta: D is not in der_-(k)");
  RatMatrix w = eta_gram(g, kappa, f, d);
  if (auto v = cocycle_violation(g.algebra, w)) throw MathError("eta: " + *v);
  return scalar_cocycle(w, gram_parity(g.algebra.parities(), w));
}

inline Cocycle2 xi_cocycle(const CurrentAlgebra& g, const BilinearForm& kappa, const RatMatrix& f, const RatMatrix& s) {
  if (!in_cent_plus(g.K, kappa, s)) throw MathError("xi: S is not in cent_+(k)");
  if (auto v = hochschild_violation(g.A, f)) throw MathError("xi: F is not a Hochschild map: " + *v);
  RatMatrix w = xi_gram(g, kappa, f, s);
  if (auto v = cocycle_violation(g.algebra, w)) throw MathError("xi: " + *v);
  return scalar_cocycle(w, gram_parity(g.algebra.parities(), w));
}

// ---------------------------------------------------------------- central extensions

struct CentralExtension {
  LieSuperalgebra algebra;
  std::size_t base_dim = 0, m_dim = 0;

  Vec lift(const Vec& x) const {
    Vec v = x;
    v.resize(base_dim + m_dim, Rational(0));
    return v;
  }
  Vec project(const Vec& v) const { return Vec(v.begin(), v.begin() + static_cast<long>(base_dim)); }
  Vec m_part(const Vec& v) const { return Vec(v.begin() + static_cast<long>(base_dim), v.end()); }
};

inline CentralExtension central_extension(const LieSuperalgebra& l, const Cocycle2& w, std::vector<std::string> m_names = {}) {
  const std::size_t n = l.dim(), m = w.value_dim(), N = n + m;
  if (m_names.empty())
    for (std::size_t k = 0; k < m; ++k) m_names.push_back("m" + std::to_string(k + 1));
  std::vector<std::string> names = l.names();
  names.insert(names.end(), m_names.begin(), m_names.end());
  std::vector<int> par = l.parities();
  par.insert(par.end(), w.value_parities.begin(), w.value_parities.end());
  std::vector<SparseRow> table(N * N);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      SparseRow row = l.bracket_basis(i, j);
      for (std::size_t k = 0; k < m; ++k)
        if (sgn(w.grams[k](i, j)) != 0) row.emplace_back(n + k, w.grams[k](i, j));
      table[i * N + j] = std::move(row);
    }
  LieSuperalgebra e(std::move(names), std::move(par), std::move(table));
  try {
    validate_lsa(e);
  } catch (const LsaValidationError& err) {
    if (err.kind == LsaValidationError::Kind::jacobi) throw MathError(std::string("not a cocycle: ") + err.what());
    throw MathError(std::string("central extension rejected: ") + err.what());
  }
  return {std::move(e), n, m};
}

// ---------------------------------------------------------------- cocycle normal form verifier

struct Cor1Options {
  bool include_eta = true;
  bool include_xi = true;
};

struct Cor1Report {
  std::size_t dim_a = 0, dim_k = 0, dim_g = 0;
  std::size_t dim_z2 = 0, dim_z2_even = 0, dim_z2_odd = 0, dim_b2 = 0, h2 = 0;
  std::size_t h2_k = 0, cent_plus_dim = 0, hochschild_dim = 0;
  std::size_t eta_generators = 0, xi_generators = 0, dim_span = 0, defect = 0;
  std::optional<RatMatrix> counterexample;  // a cocycle outside the span when defect > 0
};

// der_- representatives of H^2(k): echelon-selected outer derivations, homogeneous
inline std::vector<RatMatrix> outer_derivation_representatives(const LieSuperalgebra& k) {
  const std::size_t n = k.dim();
  DerivationSpaces d = derivation_space(k);
  RowReducer rr = d.inner.reducer();
  std::vector<RatMatrix> reps;
  for (const Subspace* part : {&d.even, &d.odd})
    for (const auto& b : part->basis())
      if (rr.insert(b)) reps.push_back(unflatten(b, n, n));
  return reps;
}

inline Cor1Report verify_cor1(const AssocSuperalgebra& A, const LieSuperalgebra& K, const BilinearForm& kappa,
                              const Cor1Options& opt = {}) {
  FormReport fr = full_form_report(K, kappa);
  if (!fr.nondegenerate) throw MathError("verify_cor1: kappa is degenerate");
  if (fr.parity == FormParity::mixed) throw MathError("verify_cor1: kappa is not homogeneous");
  if (!fr.supersymmetric) throw MathError("verify_cor1: kappa is not supersymmetric");
  if (!fr.invariant) throw MathError("verify_cor1: kappa is not invariant");
  if (!fr.derivation_invariant.value_or(false)) throw MathError("verify_cor1: kappa is not derivation-invariant");
  if (!structure_report(K).perfect) throw MathError("verify_cor1: k is not perfect");

  const std::size_t nk = K.dim(), na = A.dim();
  CurrentAlgebra g = current_lsa(A, K);
  Cor1Report rep;
  rep.dim_a = na;
  rep.dim_k = nk;
  rep.dim_g = g.dim();
  Z2Data z = z2_b2(g.algebra);
  rep.dim_z2 = z.z2.dim();
  rep.dim_z2_even = z.z2_even;
  rep.dim_z2_odd = z.z2_odd;
  rep.dim_b2 = z.b2.dim();
  rep.h2 = z.h2();

  auto reps = outer_derivation_representatives(K);
  rep.h2_k = reps.size();
  Subspace cent_plus = split_by_star(K, kappa, centroid(K), 1);
  rep.cent_plus_dim = cent_plus.dim();
  auto hoch = hochschild_space(A);
  rep.hochschild_dim = hoch.size();

  RowReducer span = z.b2.reducer();
  RowReducer zz = z.z2.reducer();
  auto add_generator = [&](const RatMatrix& w, const char* what) {
    if (auto v = cocycle_violation(g.algebra, w)) throw MathError(std::string("verify_cor1: ") + what + " generator fails: " + *v);
    Vec c = z.coords.from_gram(w);
    if (!zz.contains(c)) throw MathError(std::string("verify_cor1: ") + what + " generator outside the computed Z2");
    span.insert(c);
  };
  if (opt.include_eta)
    for (const auto& d : reps) {
      if (!in_der_minus(K, kappa, d)) throw MathError("verify_cor1: an outer derivation representative is not kappa-skew");
      for (std::size_t c = 0; c < na; ++c) {
        add_generator(eta_gram(g, kappa, unit_vec(na, c), d), "eta");
        ++rep.eta_generators;
      }
    }
  if (opt.include_xi)
    for (const auto& f : hoch)
      for (const auto& s : cent_plus.basis()) {
        add_generator(xi_gram(g, kappa, f, unflatten(s, nk, nk)), "xi");
        ++rep.xi_generators;
      }
  rep.dim_span = span.rank();
  rep.defect = rep.dim_z2 - rep.dim_span;
  if (rep.defect > 0)
    for (const auto& b : z.z2.basis())
      if (!span.contains(b)) {
        rep.counterexample = z.coords.to_gram(b);
        break;
      }
  return rep;
}

}  // namespace suplie
