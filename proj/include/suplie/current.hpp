#pragma once

#include <string>
#include <vector>

#include "assoc.hpp"
#include "lsa.hpp"

namespace suplie {

// A (x) K with [ax, by] = (-1)^{|x||b|} (ab)[x,y]; basis index a * dim K + x.
struct CurrentAlgebra {
  LieSuperalgebra algebra;
  AssocSuperalgebra A;
  LieSuperalgebra K;

  std::size_t index(std::size_t a, std::size_t x) const { return a * K.dim() + x; }
  std::size_t a_of(std::size_t idx) const { return idx / K.dim(); }
  std::size_t x_of(std::size_t idx) const { return idx % K.dim(); }
  std::size_t dim() const { return algebra.dim(); }

  Vec tensor(const Vec& a, const Vec& x) const {
    Vec v = zero_vec(dim());
    for (std::size_t i = 0; i < A.dim(); ++i)
      if (sgn(a[i]) != 0)
        for (std::size_t j = 0; j < K.dim(); ++j)
          if (sgn(x[j]) != 0) v[index(i, j)] = a[i] * x[j];
    return v;
  }
};

inline CurrentAlgebra current_lsa(const AssocSuperalgebra& A, const LieSuperalgebra& K) {
  const std::size_t na = A.dim(), nk = K.dim(), n = na * nk;
  std::vector<std::string> names;
  std::vector<int> par;
  for (std::size_t a = 0; a < na; ++a)
    for (std::size_t x = 0; x < nk; ++x) {
      names.push_back(A.names()[a] + " (x) " + K.names()[x]);
      par.push_back(A.parity(a) ^ K.parity(x));
    }
  std::vector<SparseRow> table(n * n);
  for (std::size_t a = 0; a < na; ++a)
    for (std::size_t b = 0; b < na; ++b) {
      const auto& ab = A.product_basis(a, b);
      if (ab.empty()) continue;
      for (std::size_t x = 0; x < nk; ++x)
        for (std::size_t y = 0; y < nk; ++y) {
          const auto& xy = K.bracket_basis(x, y);
          if (xy.empty()) continue;
          Rational s = sign_pp(K.parity(x), A.parity(b));
          std::map<std::size_t, Rational> acc;
          for (const auto& [c, u] : ab)
            for (const auto& [z, v] : xy) acc[c * nk + z] += s * u * v;
          SparseRow row;
          for (auto& [k, v] : acc)
            if (sgn(v) != 0) row.emplace_back(k, v);
          table[(a * nk + x) * n + b * nk + y] = std::move(row);
        }
    }
  LieSuperalgebra L(std::move(names), std::move(par), std::move(table));
  try {
    validate_lsa(L);
  } catch (const LsaValidationError& e) {
    throw MathError(std::string("current algebra failed validation (upstream bug): ") + e.what());
  }
  return {std::move(L), A, K};
}

// a (x) x -> augmentation(a) x
inline RatMatrix eps_projection(const CurrentAlgebra& g) {
  if (!g.A.z_degrees()) throw MathError("eps_projection needs a Grassmann coefficient algebra");
  RatMatrix p(g.K.dim(), g.dim());
  for (std::size_t a = 0; a < g.A.dim(); ++a)
    if ((*g.A.z_degrees())[a] == 0)
      for (std::size_t x = 0; x < g.K.dim(); ++x) p(x, g.index(a, x)) = 1;
  return p;
}

// span{a (x) x : a in as, x in xs}
inline Subspace tensor_subspace(const CurrentAlgebra& g, const Subspace& as, const Subspace& xs) {
  std::vector<Vec> vs;
  for (const auto& a : as.basis())
    for (const auto& x : xs.basis()) vs.push_back(g.tensor(a, x));
  return Subspace::span(g.dim(), vs);
}

}  // namespace suplie
