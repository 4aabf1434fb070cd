#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <vector>

#include "matrix.hpp"
#include "rational.hpp"

namespace suplie {

// Incremental reduced row echelon form over Q with sparse pivot rows.
// Pivot rows stay fully reduced, so a new row needs one pass.
class RowReducer {
 public:
  explicit RowReducer(std::size_t ncols) : n_(ncols), pivot_row_(ncols, npos), work_(ncols, Rational(0)), mark_(ncols, 0) {}

  std::size_t ncols() const { return n_; }
  std::size_t rank() const { return rows_.size(); }

  bool insert(const SparseRow& row) {
    scatter(row);
    reduce_work();
    return absorb();
  }
  bool insert(const Vec& v) { return insert(to_sparse(v)); }

  bool contains(const Vec& v) const {
    Vec w = v;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      std::size_t p = pivots_[r];
      if (sgn(w[p]) == 0) continue;
      Rational f = w[p];
      for (const auto& [k, x] : rows_[r]) w[k] -= f * x;
    }
    return is_zero(w);
  }

  // residual after reduction; zero iff v is in the row space
  Vec reduce(Vec w) const {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      std::size_t p = pivots_[r];
      if (sgn(w[p]) == 0) continue;
      Rational f = w[p];
      for (const auto& [k, x] : rows_[r]) w[k] -= f * x;
    }
    return w;
  }

  // rows sorted by pivot column
  std::vector<Vec> rref_rows() const {
    std::vector<Vec> out;
    for (std::size_t c = 0; c < n_; ++c)
      if (pivot_row_[c] != npos) out.push_back(to_dense(rows_[pivot_row_[c]], n_));
    return out;
  }

  std::vector<std::size_t> pivot_columns() const {
    std::vector<std::size_t> ps;
    for (std::size_t c = 0; c < n_; ++c)
      if (pivot_row_[c] != npos) ps.push_back(c);
    return ps;
  }

  // basis of {x : r.x = 0 for every row r}
  std::vector<Vec> kernel_basis() const {
    std::vector<Vec> out;
    for (std::size_t f = 0; f < n_; ++f) {
      if (pivot_row_[f] != npos) continue;
      Vec v(n_, Rational(0));
      v[f] = 1;
      for (std::size_t r = 0; r < rows_.size(); ++r) {
        const auto& row = rows_[r];
        auto it = std::lower_bound(row.begin(), row.end(), f, [](const auto& e, std::size_t c) { return e.first < c; });
        if (it != row.end() && it->first == f) v[pivots_[r]] = -it->second;
      }
      out.push_back(std::move(v));
    }
    return out;
  }

 private:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
  std::size_t n_;
  std::vector<SparseRow> rows_;
  std::vector<std::size_t> pivots_;
  std::vector<std::size_t> pivot_row_;
  Vec work_;
  std::vector<char> mark_;
  std::vector<std::size_t> touched_;

  void touch(std::size_t k) {
    if (!mark_[k]) {
      mark_[k] = 1;
      touched_.push_back(k);
    }
  }

  void scatter(const SparseRow& row) {
    for (const auto& [k, x] : row) {
      work_[k] += x;
      touch(k);
    }
  }

  void reduce_work() {
    std::vector<std::size_t> hits;
    for (auto k : touched_)
      if (pivot_row_[k] != npos) hits.push_back(k);
    for (auto p : hits) {
      if (sgn(work_[p]) == 0) continue;
      Rational f = work_[p];
      for (const auto& [k, x] : rows_[pivot_row_[p]]) {
        work_[k] -= f * x;
        touch(k);
      }
    }
  }

  void clear_work() {
    for (auto k : touched_) {
      work_[k] = 0;
      mark_[k] = 0;
    }
    touched_.clear();
  }

  bool absorb() {
    std::sort(touched_.begin(), touched_.end());
    SparseRow nr;
    for (auto k : touched_)
      if (sgn(work_[k]) != 0) nr.emplace_back(k, work_[k]);
    clear_work();
    if (nr.empty()) return false;
    std::size_t p = nr.front().first;
    Rational inv = Rational(1) / nr.front().second;
    for (auto& e : nr) e.second *= inv;
    // clear column p from the existing rows
    for (auto& row : rows_) {
      auto it = std::lower_bound(row.begin(), row.end(), p, [](const auto& e, std::size_t c) { return e.first < c; });
      if (it == row.end() || it->first != p) continue;
      Rational f = it->second;
      SparseRow merged;
      merged.reserve(row.size() + nr.size());
      std::size_t a = 0, b = 0;
      while (a < row.size() || b < nr.size()) {
        if (b == nr.size() || (a < row.size() && row[a].first < nr[b].first)) {
          merged.push_back(row[a++]);
        } else if (a == row.size() || nr[b].first < row[a].first) {
          merged.emplace_back(nr[b].first, -f * nr[b].second);
          ++b;
        } else {
          Rational x = row[a].second - f * nr[b].second;
          if (sgn(x) != 0) merged.emplace_back(row[a].first, x);
          ++a;
          ++b;
        }
      }
      row = std::move(merged);
    }
    pivot_row_[p] = rows_.size();
    pivots_.push_back(p);
    rows_.push_back(std::move(nr));
    return true;
  }
};

// A subspace of Q^n, stored by its canonical RREF basis.
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(std::size_t ambient) : n_(ambient) {}

  static Subspace span(std::size_t ambient, const std::vector<Vec>& vs) {
    RowReducer rr(ambient);
    for (const auto& v : vs) rr.insert(v);
    return from_reducer(rr);
  }
  static Subspace whole(std::size_t n) {
    Subspace s(n);
    for (std::size_t k = 0; k < n; ++k) s.basis_.push_back(unit_vec(n, k));
    return s;
  }
  static Subspace from_reducer(const RowReducer& rr) {
    Subspace s(rr.ncols());
    s.basis_ = rr.rref_rows();
    return s;
  }

  std::size_t ambient_dim() const { return n_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<Vec>& basis() const& { return basis_; }
  std::vector<Vec> basis() && { return std::move(basis_); }  // safe in range-for over a temporary

  RowReducer reducer() const {
    RowReducer rr(n_);
    for (const auto& b : basis_) rr.insert(b);
    return rr;
  }

  bool contains(const Vec& v) const { return reducer().contains(v); }
  bool contains(const Subspace& o) const {
    RowReducer rr = reducer();
    for (const auto& b : o.basis_)
      if (!rr.contains(b)) return false;
    return true;
  }

  friend bool operator==(const Subspace& a, const Subspace& b) { return a.n_ == b.n_ && a.basis_ == b.basis_; }

 private:
  std::size_t n_ = 0;
  std::vector<Vec> basis_;
};

inline Subspace subspace_sum(const Subspace& u, const Subspace& v) {
  RowReducer rr = u.reducer();
  for (const auto& b : v.basis()) rr.insert(b);
  return Subspace::from_reducer(rr);
}

inline Subspace intersect(const Subspace& u, const Subspace& v) {
  const std::size_t n = u.ambient_dim(), a = u.dim(), b = v.dim();
  // (alpha, beta) with sum alpha_i u_i - sum beta_j v_j = 0
  RowReducer rr(a + b);
  for (std::size_t k = 0; k < n; ++k) {
    SparseRow row;
    for (std::size_t i = 0; i < a; ++i)
      if (sgn(u.basis()[i][k]) != 0) row.emplace_back(i, u.basis()[i][k]);
    for (std::size_t j = 0; j < b; ++j)
      if (sgn(v.basis()[j][k]) != 0) row.emplace_back(a + j, -v.basis()[j][k]);
    if (!row.empty()) rr.insert(row);
  }
  std::vector<Vec> out;
  for (const auto& c : rr.kernel_basis()) {
    Vec x = zero_vec(n);
    for (std::size_t i = 0; i < a; ++i) axpy(x, c[i], u.basis()[i]);
    out.push_back(std::move(x));
  }
  return Subspace::span(n, out);
}

// Vectors of u completing v (which must lie in u) to a basis of u.
inline std::vector<Vec> quotient_basis(const Subspace& u, const Subspace& v) {
  if (!u.contains(v)) throw MathError("quotient_basis: second subspace is not contained in the first");
  RowReducer rr = v.reducer();
  std::vector<Vec> out;
  for (const auto& b : u.basis())
    if (rr.insert(b)) out.push_back(b);
  return out;
}

inline RowReducer row_reduce(const RatMatrix& m) {
  RowReducer rr(m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) rr.insert(m.row(i));
  return rr;
}

inline std::size_t rank(const RatMatrix& m) { return row_reduce(m).rank(); }

inline Subspace kernel(const RatMatrix& m) { return Subspace::span(m.cols(), row_reduce(m).kernel_basis()); }

inline Subspace row_space(const RatMatrix& m) { return Subspace::from_reducer(row_reduce(m)); }

inline Subspace column_space(const RatMatrix& m) { return row_space(m.transpose()); }

struct LinearSolution {
  std::optional<Vec> particular;  // empty when inconsistent
  Subspace kernel;
};

inline LinearSolution solve_linear(const RatMatrix& a, const Vec& b) {
  const std::size_t n = a.cols();
  RowReducer rr(n + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Vec row = a.row(i);
    row.push_back(b[i]);
    rr.insert(row);
  }
  LinearSolution sol{std::nullopt, kernel(a)};
  auto rows = rr.rref_rows();
  Vec x = zero_vec(n);
  for (const auto& r : rows) {
    std::size_t p = 0;
    while (sgn(r[p]) == 0) ++p;
    if (p == n) return sol;
    x[p] = r[n];
  }
  sol.particular = std::move(x);
  return sol;
}

inline RatMatrix inverse(const RatMatrix& m) {
  const std::size_t n = m.rows();
  if (m.cols() != n) throw MathError("inverse of a non-square matrix");
  RatMatrix a = m, inv = RatMatrix::identity(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && sgn(a(p, c)) == 0) ++p;
    if (p == n) throw MathError("matrix is singular");
    if (p != c)
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(p, j), a(c, j));
        std::swap(inv(p, j), inv(c, j));
      }
    Rational f = Rational(1) / a(c, c);
    for (std::size_t j = 0; j < n; ++j) {
      a(c, j) *= f;
      inv(c, j) *= f;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || sgn(a(i, c)) == 0) continue;
      Rational g = a(i, c);
      for (std::size_t j = 0; j < n; ++j) {
        if (sgn(a(c, j)) != 0) a(i, j) -= g * a(c, j);
        if (sgn(inv(c, j)) != 0) inv(i, j) -= g * inv(c, j);
      }
    }
  }
  return inv;
}

// Fraction-free (Bareiss) determinant of an integer-scaled copy.
inline Rational determinant(const RatMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  // clear denominators row by row
  std::vector<std::vector<mpz_class>> a(n, std::vector<mpz_class>(n));
  Rational scale = 1;
  for (std::size_t i = 0; i < n; ++i) {
    mpz_class l = 1;
    for (std::size_t j = 0; j < n; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
    scale /= l;
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m(i, j).get_num() * (l / m(i, j).get_den());
  }
  mpz_class prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(a[p], a[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return Rational(a[n - 1][n - 1]) * scale * sign;
}

// Fraction-free rank, independent of RowReducer; used as a cross-check.
inline std::size_t bareiss_rank(const RatMatrix& m) {
  const std::size_t r = m.rows(), c = m.cols();
  std::vector<std::vector<mpz_class>> a(r, std::vector<mpz_class>(c));
  for (std::size_t i = 0; i < r; ++i) {
    mpz_class l = 1;
    for (std::size_t j = 0; j < c; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
    for (std::size_t j = 0; j < c; ++j) a[i][j] = m(i, j).get_num() * (l / m(i, j).get_den());
  }
  std::size_t rk = 0;
  mpz_class prev = 1;
  for (std::size_t col = 0; col < c && rk < r; ++col) {
    std::size_t p = rk;
    while (p < r && a[p][col] == 0) ++p;
    if (p == r) continue;
    std::swap(a[p], a[rk]);
    for (std::size_t i = rk + 1; i < r; ++i) {
      for (std::size_t j = col + 1; j < c; ++j) a[i][j] = (a[i][j] * a[rk][col] - a[i][col] * a[rk][j]) / prev;
      a[i][col] = 0;
    }
    prev = a[rk][col];
    ++rk;
  }
  return rk;
}

inline bool is_symmetric(const RatMatrix& g) { return g == g.transpose(); }

// Columns of `basis` satisfy basis^T G basis = diag(diagonal).
struct Congruence {
  RatMatrix basis;
  Vec diagonal;
};

// Symmetric elimination with pivoting; when every remaining diagonal entry
// vanishes an off-diagonal pair v_k + v_l is used to create a pivot.
inline Congruence congruence_diagonalize(const RatMatrix& g) {
  const std::size_t n = g.rows();
  if (!is_symmetric(g)) throw MathError("congruence_diagonalize: matrix is not symmetric");
  RatMatrix s = g, v = RatMatrix::identity(n);
  std::vector<char> done(n, 0);
  std::vector<std::size_t> order;
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t k = n;
    for (std::size_t j = 0; j < n && k == n; ++j)
      if (!done[j] && sgn(s(j, j)) != 0) k = j;
    if (k == n) {
      std::size_t a = n, b = n;
      for (std::size_t i = 0; i < n && a == n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
          if (!done[i] && !done[j] && sgn(s(i, j)) != 0) {
            a = i;
            b = j;
            break;
          }
      if (a == n) break;
      // v_a += v_b
      for (std::size_t r = 0; r < n; ++r) v(r, a) += v(r, b);
      for (std::size_t j = 0; j < n; ++j) s(a, j) += s(b, j);
      for (std::size_t j = 0; j < n; ++j) s(j, a) += s(j, b);
      k = a;
    }
    done[k] = 1;
    order.push_back(k);
    const Rational piv = s(k, k);
    Vec f(n, Rational(0));
    for (std::size_t j = 0; j < n; ++j)
      if (!done[j]) f[j] = s(k, j) / piv;
    for (std::size_t j = 0; j < n; ++j) {
      if (done[j] || sgn(f[j]) == 0) continue;
      for (std::size_t r = 0; r < n; ++r)
        if (sgn(v(r, k)) != 0) v(r, j) -= f[j] * v(r, k);
      for (std::size_t i = 0; i < n; ++i)
        if (!done[i] && sgn(s(i, k)) != 0) s(i, j) -= f[j] * s(i, k);
    }
    for (std::size_t j = 0; j < n; ++j)
      if (!done[j]) s(k, j) = s(j, k) = 0;
  }
  for (std::size_t j = 0; j < n; ++j)
    if (!done[j]) order.push_back(j);
  Congruence c{RatMatrix(n, n), Vec(n)};
  for (std::size_t t = 0; t < n; ++t) {
    c.basis.set_col(t, v.col(order[t]));
    c.diagonal[t] = s(order[t], order[t]);
  }
  return c;
}

enum class Definiteness { positive_definite, positive_semidefinite, indefinite_or_negative };

struct DefinitenessResult {
  Definiteness kind;
  Vec witness;  // nonzero x with x^T G x <= 0 unless positive definite (< 0 when not semidefinite)
};

inline Rational quadratic(const RatMatrix& g, const Vec& x) { return dot(x, g * x); }

// Sylvester's criterion decides positive definiteness; the semidefinite
// question goes through congruence diagonalization.
inline DefinitenessResult definiteness(const RatMatrix& g) {
  const std::size_t n = g.rows();
  if (!is_symmetric(g)) throw MathError("definiteness: matrix is not symmetric");
  bool pd = true;
  {
    RatMatrix a = g;
    for (std::size_t k = 0; k < n && pd; ++k) {
      if (sgn(a(k, k)) <= 0) {
        pd = false;
        break;
      }
      for (std::size_t i = k + 1; i < n; ++i) {
        if (sgn(a(i, k)) == 0) continue;
        Rational f = a(i, k) / a(k, k);
        for (std::size_t j = k; j < n; ++j) a(i, j) -= f * a(k, j);
      }
    }
  }
  if (pd) return {Definiteness::positive_definite, {}};
  Congruence c = congruence_diagonalize(g);
  for (std::size_t t = 0; t < n; ++t)
    if (sgn(c.diagonal[t]) < 0) return {Definiteness::indefinite_or_negative, c.basis.col(t)};
  for (std::size_t t = 0; t < n; ++t)
    if (sgn(c.diagonal[t]) == 0) return {Definiteness::positive_semidefinite, c.basis.col(t)};
  return {Definiteness::positive_definite, {}};  // unreachable for symmetric input
}

}  // namespace suplie
