#pragma once

#include <bit>
#include <optional>
#include <string>
#include <vector>

#include "linalg.hpp"
#include "lsa.hpp"
#include "rational.hpp"

namespace suplie {

class AssocSuperalgebra {
 public:
  AssocSuperalgebra() = default;
  AssocSuperalgebra(std::vector<std::string> names, std::vector<int> parities, std::vector<SparseRow> table, std::size_t unit,
                    std::optional<std::vector<int>> z_degrees = std::nullopt)
      : names_(std::move(names)), par_(std::move(parities)), table_(std::move(table)), unit_(unit), deg_(std::move(z_degrees)) {
    if (table_.size() != names_.size() * names_.size() || par_.size() != names_.size())
      throw MathError("associative superalgebra: table shape mismatch");
  }

  std::size_t dim() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::vector<int>& parities() const { return par_; }
  int parity(std::size_t i) const { return par_[i]; }
  std::size_t unit() const { return unit_; }
  const std::optional<std::vector<int>>& z_degrees() const { return deg_; }
  const SparseRow& product_basis(std::size_t i, std::size_t j) const { return table_[i * dim() + j]; }

  Vec multiply(const Vec& a, const Vec& b) const {
    Vec out = zero_vec(dim());
    for (std::size_t i = 0; i < dim(); ++i) {
      if (sgn(a[i]) == 0) continue;
      for (std::size_t j = 0; j < dim(); ++j) {
        if (sgn(b[j]) == 0) continue;
        Rational c = a[i] * b[j];
        axpy(out, c, product_basis(i, j));
      }
    }
    return out;
  }

  // number of Grassmann generators when built by grassmann(), else 0
  std::size_t grassmann_rank() const { return grassmann_s_; }
  void set_grassmann_rank(std::size_t s) { grassmann_s_ = s; }

 private:
  std::vector<std::string> names_;
  std::vector<int> par_;
  std::vector<SparseRow> table_;
  std::size_t unit_ = 0;
  std::optional<std::vector<int>> deg_;
  std::size_t grassmann_s_ = 0;
};

inline void validate_assoc(const AssocSuperalgebra& a) {
  const std::size_t n = a.dim();
  for (std::size_t i = 0; i < n; ++i) {
    if (a.product_basis(a.unit(), i) != SparseRow{{i, Rational(1)}} || a.product_basis(i, a.unit()) != SparseRow{{i, Rational(1)}})
      throw MathError("unit does not act as identity on " + a.names()[i]);
    for (std::size_t j = 0; j < n; ++j) {
      for (const auto& [k, c] : a.product_basis(i, j)) {
        if (a.parity(k) != (a.parity(i) ^ a.parity(j))) throw MathError("product " + a.names()[i] + "*" + a.names()[j] + " breaks parity");
        if (a.z_degrees() && (*a.z_degrees())[k] != (*a.z_degrees())[i] + (*a.z_degrees())[j])
          throw MathError("product " + a.names()[i] + "*" + a.names()[j] + " breaks the Z-grading");
      }
      Vec ab = to_dense(a.product_basis(i, j), n);
      axpy(ab, Rational(-sign_pp(a.parity(i), a.parity(j))), to_dense(a.product_basis(j, i), n));
      if (!is_zero(ab)) throw MathError("supercommutativity fails on (" + a.names()[i] + ", " + a.names()[j] + ")");
    }
  }
  if (a.z_degrees())
    for (std::size_t i = 0; i < n; ++i)
      if ((*a.z_degrees())[i] % 2 != a.parity(i)) throw MathError("parity of " + a.names()[i] + " differs from its degree mod 2");
  Vec acc = zero_vec(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        std::fill(acc.begin(), acc.end(), Rational(0));
        for (const auto& [m, c] : a.product_basis(i, j)) axpy(acc, c, a.product_basis(m, k));
        for (const auto& [m, c] : a.product_basis(j, k)) axpy(acc, -c, a.product_basis(i, m));
        if (!is_zero(acc))
          throw MathError("associativity fails on (" + a.names()[i] + ", " + a.names()[j] + ", " + a.names()[k] + ")");
      }
}

inline std::string monomial_name(unsigned mask) {
  if (mask == 0) return "1";
  std::string s;
  for (unsigned b = 0; b < 32; ++b)
    if (mask >> b & 1) {
      if (!s.empty()) s += "^";
      s += "e" + std::to_string(b + 1);
    }
  return s;
}

// Grassmann monomials ordered by degree, then lexicographically by index list.
inline std::vector<unsigned> grassmann_monomials(std::size_t s) {
  std::vector<unsigned> ms;
  for (unsigned m = 0; m < (1u << s); ++m) ms.push_back(m);
  auto key = [](unsigned m) {
    std::vector<int> idx;
    for (int b = 0; b < 32; ++b)
      if (m >> b & 1) idx.push_back(b);
    return idx;
  };
  std::stable_sort(ms.begin(), ms.end(), [&](unsigned a, unsigned b) {
    int pa = std::popcount(a), pb = std::popcount(b);
    if (pa != pb) return pa < pb;
    return key(a) < key(b);
  });
  return ms;
}

// sign of e_a * e_b for disjoint sorted monomials: (-1)^{#(i in a, j in b, i > j)}
inline int grassmann_sign(unsigned a, unsigned b) {
  int inv = 0;
  for (unsigned j = 0; j < 32; ++j)
    if (b >> j & 1) inv += std::popcount(a >> (j + 1));
  return inv % 2 ? -1 : 1;
}

inline AssocSuperalgebra grassmann(std::size_t s) {
  if (s < 1 || s > 10) throw MathError("grassmann: s must lie in 1..10");
  auto ms = grassmann_monomials(s);
  const std::size_t n = ms.size();
  std::vector<std::size_t> pos(n);
  for (std::size_t k = 0; k < n; ++k) pos[ms[k]] = k;
  std::vector<std::string> names;
  std::vector<int> par, deg;
  for (auto m : ms) {
    names.push_back(monomial_name(m));
    deg.push_back(std::popcount(m));
    par.push_back(std::popcount(m) % 2);
  }
  std::vector<SparseRow> table(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      unsigned a = ms[i], b = ms[j];
      if (a & b) continue;
      table[i * n + j] = {{pos[a | b], Rational(grassmann_sign(a, b))}};
    }
  AssocSuperalgebra A(std::move(names), std::move(par), std::move(table), 0, std::move(deg));
  A.set_grassmann_rank(s);
  return A;
}

inline Rational augmentation(const AssocSuperalgebra& a, const Vec& v) {
  if (!a.z_degrees()) throw MathError("augmentation needs a Z-graded (Grassmann) algebra");
  Rational r = 0;
  for (std::size_t k = 0; k < a.dim(); ++k)
    if ((*a.z_degrees())[k] == 0) r += v[k];
  return r;
}

struct GradedSelector {
  enum class Kind { degree, plus, odd, even_plus, at_least } kind;
  int m = 0;
  static GradedSelector degree(int m) { return {Kind::degree, m}; }
  static GradedSelector at_least(int m) { return {Kind::at_least, m}; }
  static GradedSelector plus() { return {Kind::plus, 0}; }
  static GradedSelector odd() { return {Kind::odd, 0}; }
  static GradedSelector even_plus() { return {Kind::even_plus, 0}; }
  bool matches(int d) const {
    switch (kind) {
      case Kind::degree: return d == m;
      case Kind::at_least: return d >= m;
      case Kind::plus: return d >= 1;
      case Kind::odd: return d % 2 == 1;
      default: return d >= 2 && d % 2 == 0;
    }
  }
};

inline std::vector<std::size_t> graded_indices(const AssocSuperalgebra& a, GradedSelector sel) {
  if (!a.z_degrees()) throw MathError("graded_part on an algebra without Z-degrees");
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < a.dim(); ++k)
    if (sel.matches((*a.z_degrees())[k])) out.push_back(k);
  return out;
}

inline Subspace graded_part(const AssocSuperalgebra& a, GradedSelector sel) {
  std::vector<Vec> vs;
  for (auto k : graded_indices(a, sel)) vs.push_back(unit_vec(a.dim(), k));
  return Subspace::span(a.dim(), vs);
}

struct AssocQuotient {
  AssocSuperalgebra algebra;
  RatMatrix projection;
  std::vector<std::size_t> complement;
};

inline AssocQuotient quotient_assoc(const AssocSuperalgebra& a, const Subspace& ideal) {
  const std::size_t n = a.dim();
  RowReducer rr = ideal.reducer();
  for (const auto& r : ideal.basis()) {
    for (std::size_t k = 0; k < n; ++k)
      if (!rr.contains(a.multiply(unit_vec(n, k), r)) || !rr.contains(a.multiply(r, unit_vec(n, k))))
        throw MathError("quotient_assoc: subspace is not an ideal (product with " + a.names()[k] + " leaves it)");
    int p = -1, d = -1;
    for (std::size_t k = 0; k < n; ++k)
      if (sgn(r[k]) != 0) {
        if (p == -1) p = a.parity(k);
        if (p != a.parity(k)) throw MathError("quotient_assoc: ideal is not graded");
        if (a.z_degrees()) {
          if (d == -1) d = (*a.z_degrees())[k];
          if (d != (*a.z_degrees())[k]) throw MathError("quotient_assoc: ideal is not Z-graded");
        }
      }
  }
  auto comp = greedy_complement(n, ideal);
  RatMatrix proj = projection_along(n, ideal, comp);
  const std::size_t m = comp.size();
  std::vector<std::string> names;
  std::vector<int> par, deg;
  for (auto k : comp) {
    names.push_back(a.names()[k]);
    par.push_back(a.parity(k));
    if (a.z_degrees()) deg.push_back((*a.z_degrees())[k]);
  }
  std::vector<SparseRow> table(m * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) table[i * m + j] = to_sparse(proj * to_dense(a.product_basis(comp[i], comp[j]), n));
  std::size_t unit = std::find(comp.begin(), comp.end(), a.unit()) - comp.begin();
  if (unit == m) throw MathError("quotient_assoc: the ideal contains the unit");
  std::optional<std::vector<int>> zd;
  if (a.z_degrees()) zd = deg;
  AssocSuperalgebra q(std::move(names), std::move(par), std::move(table), unit, std::move(zd));
  validate_assoc(q);
  return {std::move(q), std::move(proj), std::move(comp)};
}

}  // namespace suplie
