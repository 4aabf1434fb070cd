#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace suplie {

using Rational = mpq_class;
using Vec = std::vector<Rational>;
// (index, value) pairs sorted by index, no explicit zeros
using SparseRow = std::vector<std::pair<std::size_t, Rational>>;

// Base of every library error.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed textual or JSON input.
class ParseError : public Error {
 public:
  using Error::Error;
};

// A mathematical precondition or verification failed.
class MathError : public Error {
 public:
  using Error::Error;
};

inline Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw ParseError("empty rational");
  if (s.front() == '+') s.erase(0, 1);
  Rational q;
  if (q.set_str(s, 10) != 0) throw ParseError("malformed rational '" + std::string(text) + "'");
  if (q.get_den() == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  q.canonicalize();
  return q;
}

// mpq_class(p, q) skips canonicalization, and == on non-canonical values is wrong
inline Rational ratio(long p, long q) {
  if (q == 0) throw MathError("ratio: zero denominator");
  Rational r(p, q);
  r.canonicalize();
  return r;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

inline Vec zero_vec(std::size_t n) { return Vec(n, Rational(0)); }

inline Vec unit_vec(std::size_t n, std::size_t i) {
  Vec v(n, Rational(0));
  v[i] = 1;
  return v;
}

inline bool is_zero(const Vec& v) {
  for (const auto& x : v)
    if (sgn(x) != 0) return false;
  return true;
}

// y += a*x
inline void axpy(Vec& y, const Rational& a, const Vec& x) {
  if (sgn(a) == 0) return;
  for (std::size_t k = 0; k < x.size(); ++k)
    if (sgn(x[k]) != 0) y[k] += a * x[k];
}

inline void axpy(Vec& y, const Rational& a, const SparseRow& x) {
  if (sgn(a) == 0) return;
  for (const auto& [k, v] : x) y[k] += a * v;
}

inline Vec scaled(const Rational& a, Vec v) {
  for (auto& x : v) x *= a;
  return v;
}

inline Vec add(Vec a, const Vec& b) {
  for (std::size_t k = 0; k < a.size(); ++k) a[k] += b[k];
  return a;
}

inline Vec sub(Vec a, const Vec& b) {
  for (std::size_t k = 0; k < a.size(); ++k) a[k] -= b[k];
  return a;
}

inline Rational dot(const Vec& a, const Vec& b) {
  Rational s = 0;
  for (std::size_t k = 0; k < a.size(); ++k)
    if (sgn(a[k]) != 0 && sgn(b[k]) != 0) s += a[k] * b[k];
  return s;
}

inline SparseRow to_sparse(const Vec& v) {
  SparseRow r;
  for (std::size_t k = 0; k < v.size(); ++k)
    if (sgn(v[k]) != 0) r.emplace_back(k, v[k]);
  return r;
}

inline Vec to_dense(const SparseRow& r, std::size_t n) {
  Vec v(n, Rational(0));
  for (const auto& [k, x] : r) v[k] = x;
  return v;
}

// -1 to the power a*b for parities a, b
inline int sign_pp(int a, int b) { return (a & b & 1) ? -1 : 1; }

}  // namespace suplie
