#pragma once

#include <deque>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "linalg.hpp"
#include "matrix.hpp"
#include "rational.hpp"
#include "scalar.hpp"

namespace suplie {

// Failed super antisymmetry, parity or graded Jacobi check.
class LsaValidationError : public MathError {
 public:
  enum class Kind { shape, parity, antisymmetry, jacobi };
  LsaValidationError(Kind k, std::vector<std::size_t> idx, const std::string& msg)
      : MathError(msg), kind(k), indices(std::move(idx)) {}
  Kind kind;
  std::vector<std::size_t> indices;
};

struct MatrixRealization {
  std::vector<ScalarMatrix> matrices;
  std::size_t p = 0, q = 0;  // even block size, odd block size
};

using BracketTable = std::map<std::pair<std::size_t, std::size_t>, Vec>;

class LieSuperalgebra {
 public:
  LieSuperalgebra() = default;

  // No validation; use make_lsa or validate_lsa.
  LieSuperalgebra(std::vector<std::string> names, std::vector<int> parities, std::vector<SparseRow> table)
      : names_(std::move(names)), par_(std::move(parities)), table_(std::move(table)) {
    if (table_.size() != names_.size() * names_.size() || par_.size() != names_.size())
      throw LsaValidationError(LsaValidationError::Kind::shape, {}, "structure table shape mismatch");
  }

  std::size_t dim() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::vector<int>& parities() const { return par_; }
  int parity(std::size_t i) const { return par_[i]; }
  const SparseRow& bracket_basis(std::size_t i, std::size_t j) const { return table_[i * dim() + j]; }

  std::vector<std::size_t> indices_of_parity(int p) const {
    std::vector<std::size_t> v;
    for (std::size_t k = 0; k < dim(); ++k)
      if (par_[k] == p) v.push_back(k);
    return v;
  }
  std::size_t even_dim() const { return indices_of_parity(0).size(); }
  std::size_t odd_dim() const { return indices_of_parity(1).size(); }

  Vec bracket(const Vec& u, const Vec& v) const {
    const std::size_t n = dim();
    Vec out = zero_vec(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (sgn(u[i]) == 0) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (sgn(v[j]) == 0) continue;
        const auto& t = bracket_basis(i, j);
        if (t.empty()) continue;
        Rational c = u[i] * v[j];
        axpy(out, c, t);
      }
    }
    return out;
  }

  // ad(x) as a matrix acting on column coordinate vectors
  RatMatrix ad(const Vec& x) const {
    const std::size_t n = dim();
    RatMatrix m(n, n);
    for (std::size_t j = 0; j < n; ++j) {
      Vec col = bracket(x, unit_vec(n, j));
      m.set_col(j, col);
    }
    return m;
  }
  RatMatrix ad_basis(std::size_t i) const {
    const std::size_t n = dim();
    RatMatrix m(n, n);
    for (std::size_t j = 0; j < n; ++j)
      for (const auto& [k, c] : bracket_basis(i, j)) m(k, j) = c;
    return m;
  }

  // parity of a homogeneous vector; -1 for zero, 2 for mixed
  int vector_parity(const Vec& v) const {
    int p = -1;
    for (std::size_t k = 0; k < v.size(); ++k)
      if (sgn(v[k]) != 0) {
        if (p == -1) p = par_[k];
        else if (p != par_[k]) return 2;
      }
    return p;
  }

  const std::optional<MatrixRealization>& realization() const { return real_; }
  void set_realization(MatrixRealization r) { real_ = std::move(r); }

  friend bool operator==(const LieSuperalgebra& a, const LieSuperalgebra& b) {
    return a.names_ == b.names_ && a.par_ == b.par_ && a.table_ == b.table_;
  }

 private:
  std::vector<std::string> names_;
  std::vector<int> par_;
  std::vector<SparseRow> table_;
  std::optional<MatrixRealization> real_;
};

inline std::string bracket_name(const LieSuperalgebra& l, std::size_t i, std::size_t j) {
  return "[" + l.names()[i] + "," + l.names()[j] + "]";
}

// Super antisymmetry, parity of every bracket, graded Jacobi on every basis triple.
inline void validate_lsa(const LieSuperalgebra& l) {
  using K = LsaValidationError::Kind;
  const std::size_t n = l.dim();
  for (std::size_t i = 0; i < n; ++i)
    if (l.parity(i) != 0 && l.parity(i) != 1)
      throw LsaValidationError(K::shape, {i}, "parity of " + l.names()[i] + " must be 0 or 1");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      for (const auto& [k, c] : l.bracket_basis(i, j))
        if (l.parity(k) != (l.parity(i) ^ l.parity(j)))
          throw LsaValidationError(K::parity, {i, j},
                                   "parity violation: " + bracket_name(l, i, j) + " has a component along " + l.names()[k]);
      if (j > i) continue;  // the lower entry is blamed against the upper one
      Vec a = to_dense(l.bracket_basis(i, j), n);
      Vec b = to_dense(l.bracket_basis(j, i), n);
      axpy(a, Rational(sign_pp(l.parity(i), l.parity(j))), b);
      if (!is_zero(a))
        throw LsaValidationError(K::antisymmetry, {i, j},
                                 "antisymmetry violation at (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "): " +
                                     bracket_name(l, i, j) + " != -(-1)^{|x||y|}" + bracket_name(l, j, i));
    }
  // [x,[y,z]] = [[x,y],z] + (-1)^{|x||y|}[y,[x,z]]
  Vec acc = zero_vec(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const auto& jk = l.bracket_basis(j, k);
        const auto& ij = l.bracket_basis(i, j);
        const auto& ik = l.bracket_basis(i, k);
        if (jk.empty() && ij.empty() && ik.empty()) continue;
        std::fill(acc.begin(), acc.end(), Rational(0));
        for (const auto& [m, c] : jk) axpy(acc, c, l.bracket_basis(i, m));
        for (const auto& [m, c] : ij) axpy(acc, -c, l.bracket_basis(m, k));
        Rational s = sign_pp(l.parity(i), l.parity(j));
        for (const auto& [m, c] : ik) axpy(acc, -s * c, l.bracket_basis(j, m));
        if (!is_zero(acc))
          throw LsaValidationError(K::jacobi, {i, j, k},
                                   "graded Jacobi fails on (" + l.names()[i] + ", " + l.names()[j] + ", " + l.names()[k] + ")");
      }
}

inline LieSuperalgebra make_lsa(std::vector<std::string> names, std::vector<int> parities, const BracketTable& brackets) {
  const std::size_t n = names.size();
  if (parities.size() != n) throw LsaValidationError(LsaValidationError::Kind::shape, {}, "names and parities differ in length");
  std::vector<SparseRow> table(n * n);
  for (const auto& [ij, v] : brackets) {
    auto [i, j] = ij;
    if (i >= n || j >= n || v.size() != n)
      throw LsaValidationError(LsaValidationError::Kind::shape, {i, j}, "bracket entry has wrong index or length");
    table[i * n + j] = to_sparse(v);
  }
  LieSuperalgebra l(std::move(names), std::move(parities), std::move(table));
  validate_lsa(l);
  return l;
}

// Solves B c = v for a fixed set of independent real vectors (the columns of B).
class CoordinateSolver {
 public:
  explicit CoordinateSolver(const std::vector<Vec>& basis) : basis_(basis) {
    const std::size_t m = basis.size();
    if (m == 0) return;
    const std::size_t len = basis[0].size();
    RowReducer rr(len);
    for (const auto& b : basis)
      if (!rr.insert(b)) throw MathError("basis is linearly dependent");
    rows_ = rr.pivot_columns();
    RatMatrix sq(m, m);
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t k = 0; k < m; ++k) sq(a, k) = basis[k][rows_[a]];
    inv_ = inverse(sq);
  }

  // nullopt when v is outside the span
  std::optional<Vec> solve(const Vec& v) const {
    const std::size_t m = basis_.size();
    Vec r(m);
    for (std::size_t a = 0; a < m; ++a) r[a] = v[rows_[a]];
    Vec c = inv_ * r;
    Vec back = zero_vec(v.size());
    for (std::size_t k = 0; k < m; ++k) axpy(back, c[k], basis_[k]);
    if (back != v) return std::nullopt;
    return c;
  }

 private:
  std::vector<Vec> basis_;
  std::vector<std::size_t> rows_;
  RatMatrix inv_;
};

inline Vec realify(const ScalarMatrix& m) {
  Vec v;
  v.reserve(2 * m.rows() * m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (!m(i, j).in_gaussian_rationals()) throw MathError("matrix entry " + m(i, j).to_string() + " is outside Q(i)");
      v.push_back(m(i, j).re_q());
      v.push_back(m(i, j).im_q());
    }
  return v;
}

// parity of a supermatrix with even block size p; -1 zero, 2 inhomogeneous
inline int supermatrix_parity(const ScalarMatrix& m, std::size_t p) {
  bool diag = false, off = false;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero()) ((i < p) == (j < p) ? diag : off) = true;
  if (diag && off) return 2;
  if (diag) return 0;
  if (off) return 1;
  return -1;
}

inline ScalarMatrix super_commutator(const ScalarMatrix& x, int px, const ScalarMatrix& y, int py) {
  ScalarMatrix a = x * y, b = y * x;
  if (sign_pp(px, py) < 0) return a + b;
  return a - b;
}

// Structure constants of a real span of supermatrices closed under the super commutator.
class MatrixSpan {
 public:
  MatrixSpan(std::vector<ScalarMatrix> mats, std::vector<int> parities, std::size_t p, std::size_t q)
      : mats_(std::move(mats)), par_(std::move(parities)), p_(p), q_(q) {
    std::vector<Vec> real;
    for (std::size_t k = 0; k < mats_.size(); ++k) {
      const auto& m = mats_[k];
      if (m.rows() != p + q || m.cols() != p + q) throw MathError("matrix basis element has wrong size");
      int pm = supermatrix_parity(m, p);
      if (pm == -1) throw MathError("matrix basis element " + std::to_string(k) + " is zero");
      if (pm != par_[k]) throw MathError("matrix basis element " + std::to_string(k) + " is not homogeneous of the declared parity");
      real.push_back(realify(m));
    }
    try {
      solver_.emplace(real);
    } catch (const MathError&) {
      throw MathError("matrix basis is linearly dependent over R");
    }
  }

  const std::vector<ScalarMatrix>& matrices() const { return mats_; }

  std::optional<Vec> coordinates(const ScalarMatrix& m) const { return solver_->solve(realify(m)); }

  ScalarMatrix element(const Vec& c) const {
    ScalarMatrix m(p_ + q_, p_ + q_);
    for (std::size_t k = 0; k < c.size(); ++k)
      if (sgn(c[k]) != 0) m += Scalar(c[k]) * mats_[k];
    return m;
  }

  LieSuperalgebra algebra(std::vector<std::string> names) const {
    const std::size_t n = mats_.size();
    std::vector<SparseRow> table(n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        ScalarMatrix br = super_commutator(mats_[i], par_[i], mats_[j], par_[j]);
        auto c = coordinates(br);
        if (!c) throw MathError("span not closed: bracket of basis elements " + std::to_string(i) + " and " + std::to_string(j));
        table[i * n + j] = to_sparse(*c);
      }
    LieSuperalgebra l(std::move(names), par_, std::move(table));
    validate_lsa(l);
    l.set_realization({mats_, p_, q_});
    return l;
  }

 private:
  std::vector<ScalarMatrix> mats_;
  std::vector<int> par_;
  std::size_t p_, q_;
  std::optional<CoordinateSolver> solver_;
};

inline LieSuperalgebra from_matrix_basis(const std::vector<ScalarMatrix>& mats, const std::vector<int>& parities, std::size_t p,
                                         std::size_t q, std::vector<std::string> names = {}) {
  if (names.empty())
    for (std::size_t k = 0; k < mats.size(); ++k) names.push_back("e" + std::to_string(k + 1));
  return MatrixSpan(mats, parities, p, q).algebra(std::move(names));
}

// ---------------------------------------------------------------- forms

enum class FormParity { even, odd, mixed };

inline const char* to_string(FormParity p) {
  switch (p) {
    case FormParity::even: return "even";
    case FormParity::odd: return "odd";
    default: return "mixed";
  }
}

struct BilinearForm {
  RatMatrix gram;

  Rational operator()(const Vec& x, const Vec& y) const { return dot(x, gram * y); }
};

inline FormParity form_parity(const LieSuperalgebra& l, const BilinearForm& b) {
  bool same = false, cross = false;
  for (std::size_t i = 0; i < l.dim(); ++i)
    for (std::size_t j = 0; j < l.dim(); ++j)
      if (sgn(b.gram(i, j)) != 0) (l.parity(i) == l.parity(j) ? same : cross) = true;
  if (same && cross) return FormParity::mixed;
  return cross ? FormParity::odd : FormParity::even;
}

inline BilinearForm supertrace_form(const LieSuperalgebra& l) {
  if (!l.realization()) throw MathError("supertrace form needs a matrix realization");
  const auto& r = *l.realization();
  const std::size_t n = l.dim();
  BilinearForm b{RatMatrix(n, n)};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Scalar s = supertrace(r.matrices[i] * r.matrices[j], r.p);
      if (!s.is_rational()) throw MathError("supertrace form is not real rational on basis pair");
      b.gram(i, j) = s.rational_value();
    }
  return b;
}

inline BilinearForm killing_form(const LieSuperalgebra& l) {
  const std::size_t n = l.dim();
  std::vector<RatMatrix> ads;
  for (std::size_t i = 0; i < n; ++i) ads.push_back(l.ad_basis(i));
  BilinearForm b{RatMatrix(n, n)};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Rational s = 0;
      for (std::size_t k = 0; k < n; ++k) {
        Rational d = 0;
        for (std::size_t m = 0; m < n; ++m)
          if (sgn(ads[i](k, m)) != 0 && sgn(ads[j](m, k)) != 0) d += ads[i](k, m) * ads[j](m, k);
        if (l.parity(k)) s -= d;
        else s += d;
      }
      b.gram(i, j) = s;
    }
  return b;
}

enum class FormKind { supertrace, killing };

inline BilinearForm build_form(const LieSuperalgebra& l, FormKind kind) {
  return kind == FormKind::supertrace ? supertrace_form(l) : killing_form(l);
}

struct FormReport {
  bool supersymmetric = false;
  bool superskew = false;
  bool invariant = false;
  bool nondegenerate = false;
  FormParity parity = FormParity::even;
  std::optional<bool> derivation_invariant;  // filled by the cohomology layer
};

inline bool form_invariant(const LieSuperalgebra& l, const BilinearForm& b) {
  const std::size_t n = l.dim();
  // B([x,y],z) = B(x,[y,z])
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Rational lhs = 0, rhs = 0;
        for (const auto& [m, c] : l.bracket_basis(i, j)) lhs += c * b.gram(m, k);
        for (const auto& [m, c] : l.bracket_basis(j, k)) rhs += c * b.gram(i, m);
        if (lhs != rhs) return false;
      }
  return true;
}

using DerivationInvarianceCheck = std::function<bool(const LieSuperalgebra&, const BilinearForm&)>;

inline FormReport form_report(const LieSuperalgebra& l, const BilinearForm& b, const DerivationInvarianceCheck& der_check = {}) {
  const std::size_t n = l.dim();
  FormReport r;
  r.supersymmetric = r.superskew = true;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Rational s = sign_pp(l.parity(i), l.parity(j));
      if (b.gram(i, j) != s * b.gram(j, i)) r.supersymmetric = false;
      if (b.gram(i, j) != -s * b.gram(j, i)) r.superskew = false;
    }
  r.invariant = form_invariant(l, b);
  r.nondegenerate = rank(b.gram) == n;
  r.parity = form_parity(l, b);
  if (der_check && r.nondegenerate && r.parity != FormParity::mixed) r.derivation_invariant = der_check(l, b);
  return r;
}

// ---------------------------------------------------------------- ideals

// Smallest subspace containing the seeds and stable under a family of operators
// given as closures v -> op_k(v).
inline Subspace closure_under(std::size_t n, const std::vector<Vec>& seeds, std::size_t nops,
                              const std::function<Vec(std::size_t, const Vec&)>& op) {
  RowReducer rr(n);
  std::deque<Vec> queue;
  for (const auto& s : seeds)
    if (rr.insert(s)) queue.push_back(s);
  while (!queue.empty()) {
    Vec w = std::move(queue.front());
    queue.pop_front();
    for (std::size_t k = 0; k < nops; ++k) {
      Vec v = op(k, w);
      if (is_zero(v)) continue;
      if (rr.insert(v)) queue.push_back(std::move(v));
    }
  }
  return Subspace::from_reducer(rr);
}

inline Subspace ideal_closure(const LieSuperalgebra& l, const std::vector<Vec>& seeds) {
  const std::size_t n = l.dim();
  return closure_under(n, seeds, n, [&](std::size_t k, const Vec& w) { return l.bracket(unit_vec(n, k), w); });
}

inline Subspace generated_submodule(const std::vector<RatMatrix>& action, const Vec& v) {
  return closure_under(v.size(), {v}, action.size(), [&](std::size_t k, const Vec& w) { return action[k] * w; });
}

inline bool is_ideal(const LieSuperalgebra& l, const Subspace& s, Vec* witness = nullptr) {
  RowReducer rr = s.reducer();
  for (const auto& b : s.basis())
    for (std::size_t k = 0; k < l.dim(); ++k) {
      Vec v = l.bracket(unit_vec(l.dim(), k), b);
      if (!rr.contains(v)) {
        if (witness) *witness = v;
        return false;
      }
    }
  return true;
}

inline bool is_graded(const LieSuperalgebra& l, const Subspace& s) {
  for (const auto& b : s.basis())
    if (l.vector_parity(b) == 2) return false;
  return true;
}

struct Quotient {
  LieSuperalgebra algebra;
  RatMatrix projection;                // dim(quotient) x dim(L)
  std::vector<std::size_t> complement;  // basis vectors of L lifting the quotient basis
};

// Projection onto the span of the chosen basis vectors along a subspace.
inline RatMatrix projection_along(std::size_t n, const Subspace& s, const std::vector<std::size_t>& complement) {
  // columns: s basis then complement unit vectors; invert to read coordinates
  RatMatrix m(n, n);
  std::size_t col = 0;
  for (const auto& b : s.basis()) m.set_col(col++, b);
  for (auto k : complement) m.set_col(col++, unit_vec(n, k));
  RatMatrix inv = inverse(m);
  RatMatrix p(complement.size(), n);
  for (std::size_t a = 0; a < complement.size(); ++a)
    for (std::size_t j = 0; j < n; ++j) p(a, j) = inv(s.dim() + a, j);
  return p;
}

inline std::vector<std::size_t> greedy_complement(std::size_t n, const Subspace& s) {
  RowReducer rr = s.reducer();
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < n; ++k)
    if (rr.insert(unit_vec(n, k))) out.push_back(k);
  return out;
}

inline Quotient quotient_lsa(const LieSuperalgebra& l, const Subspace& ideal) {
  const std::size_t n = l.dim();
  Vec w;
  if (!is_ideal(l, ideal, &w)) throw MathError("quotient_lsa: subspace is not an ideal");
  if (!is_graded(l, ideal)) throw MathError("quotient_lsa: ideal is not graded");
  auto comp = greedy_complement(n, ideal);
  RatMatrix proj = projection_along(n, ideal, comp);
  const std::size_t m = comp.size();
  std::vector<std::string> names;
  std::vector<int> par;
  for (auto k : comp) {
    names.push_back(l.names()[k]);
    par.push_back(l.parity(k));
  }
  std::vector<SparseRow> table(m * m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) table[a * m + b] = to_sparse(proj * to_dense(l.bracket_basis(comp[a], comp[b]), n));
  LieSuperalgebra q(std::move(names), std::move(par), std::move(table));
  validate_lsa(q);
  return {std::move(q), std::move(proj), std::move(comp)};
}

struct StructureReport {
  Subspace derived;
  Subspace center;
  bool perfect = false;
};

inline StructureReport structure_report(const LieSuperalgebra& l) {
  const std::size_t n = l.dim();
  RowReducer d(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      if (!l.bracket_basis(i, j).empty()) d.insert(l.bracket_basis(i, j));
  // x central iff sum_i x_i [e_i, e_j] = 0 for all j
  RowReducer c(n);
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<SparseRow> rows(n);
    for (std::size_t i = 0; i < n; ++i)
      for (const auto& [k, v] : l.bracket_basis(i, j)) rows[k].emplace_back(i, v);
    for (auto& r : rows)
      if (!r.empty()) c.insert(r);
  }
  StructureReport rep{Subspace::from_reducer(d), Subspace::span(n, c.kernel_basis()), false};
  rep.perfect = rep.derived.dim() == n;
  return rep;
}

}  // namespace suplie
