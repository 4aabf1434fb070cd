#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "rational.hpp"

namespace suplie {

// n = k^2 * m with m squarefree
struct SquarefreeSplit {
  std::uint64_t square_root;
  std::uint64_t squarefree;
};

inline SquarefreeSplit squarefree_split(std::uint64_t n) {
  if (n == 0) throw MathError("squarefree_split(0)");
  std::uint64_t k = 1, m = 1;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    for (int t = 0; t < e / 2; ++t) k *= p;
    if (e % 2) m *= p;
  }
  m *= n;
  return {k, m};
}

inline std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> ps;
  for (std::uint64_t p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      ps.push_back(p);
      while (n % p == 0) n /= p;
    }
  if (n > 1) ps.push_back(n);
  return ps;
}

// Element of Q(i, sqrt d1, sqrt d2, ...) in the formal basis sqrt(d) * i^e,
// d squarefree, e in {0,1}. The basis is linearly independent over Q, so
// the sorted nonzero coefficient list is canonical.
class Scalar {
 public:
  struct Term {
    std::uint64_t rad;
    int ipow;
    Rational coef;
  };

  Scalar() = default;
  Scalar(long v) { if (v != 0) terms_.push_back({1, 0, Rational(v)}); }
  Scalar(int v) : Scalar(static_cast<long>(v)) {}
  Scalar(const Rational& q) { if (sgn(q) != 0) terms_.push_back({1, 0, q}); }

  static Scalar i_unit() { return from_term(1, 1, Rational(1)); }

  // sqrt(n) for any positive n, reduced to k*sqrt(m)
  static Scalar sqrt(std::uint64_t n) {
    auto [k, m] = squarefree_split(n);
    return from_term(m, 0, Rational(static_cast<unsigned long>(k)));
  }

  // (1+i)/sqrt 2
  static Scalar zeta8() {
    Scalar s;
    s.terms_ = {{2, 0, Rational(1, 2)}, {2, 1, Rational(1, 2)}};
    return s;
  }

  static Scalar from_term(std::uint64_t rad, int ipow, const Rational& c) {
    Scalar s;
    if (sgn(c) != 0) s.terms_.push_back({rad, ipow, c});
    return s;
  }

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_rational() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].rad == 1 && terms_[0].ipow == 0); }
  bool in_gaussian_rationals() const {
    for (const auto& t : terms_)
      if (t.rad != 1) return false;
    return true;
  }
  bool is_real() const {
    for (const auto& t : terms_)
      if (t.ipow) return false;
    return true;
  }

  Rational coefficient(std::uint64_t rad, int ipow) const {
    for (const auto& t : terms_)
      if (t.rad == rad && t.ipow == ipow) return t.coef;
    return 0;
  }
  Rational rational_value() const {
    if (!is_rational()) throw MathError("scalar " + to_string() + " is not rational");
    return terms_.empty() ? Rational(0) : terms_[0].coef;
  }
  Rational re_q() const { return coefficient(1, 0); }
  Rational im_q() const { return coefficient(1, 1); }

  Scalar operator-() const {
    Scalar s = *this;
    for (auto& t : s.terms_) t.coef = -t.coef;
    return s;
  }
  Scalar& operator+=(const Scalar& o) { return *this = combine(*this, o, 1); }
  Scalar& operator-=(const Scalar& o) { return *this = combine(*this, o, -1); }
  Scalar& operator*=(const Scalar& o) { return *this = mul(*this, o); }
  Scalar& operator/=(const Scalar& o) { return *this = mul(*this, o.inverse()); }
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(const Scalar& a, const Scalar& b) { return mul(a, b); }
  friend Scalar operator/(const Scalar& a, const Scalar& b) { return mul(a, b.inverse()); }
  friend bool operator==(const Scalar& a, const Scalar& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t k = 0; k < a.terms_.size(); ++k) {
      const auto &x = a.terms_[k], &y = b.terms_[k];
      if (x.rad != y.rad || x.ipow != y.ipow || x.coef != y.coef) return false;
    }
    return true;
  }

  Scalar conj() const {
    Scalar s = *this;
    for (auto& t : s.terms_)
      if (t.ipow) t.coef = -t.coef;
    return s;
  }

  // Galois automorphism flipping sqrt(p) for a prime p
  Scalar flip_prime(std::uint64_t p) const {
    Scalar s = *this;
    for (auto& t : s.terms_)
      if (t.rad % p == 0) t.coef = -t.coef;
    return s;
  }

  Scalar inverse() const {
    if (is_zero()) throw MathError("division by zero scalar");
    Scalar num(1), x = *this;
    std::vector<std::uint64_t> primes;
    bool has_i = false;
    for (const auto& t : terms_) {
      has_i = has_i || t.ipow;
      for (auto p : prime_factors(t.rad)) primes.push_back(p);
    }
    std::sort(primes.begin(), primes.end());
    primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
    // multiplying by conjugates pushes x into the fixed field of each automorphism
    if (has_i) {
      Scalar c = x.conj();
      num *= c;
      x *= c;
    }
    for (auto p : primes) {
      Scalar c = x.flip_prime(p);
      num *= c;
      x *= c;
    }
    Rational r = x.rational_value();
    return num * Scalar(Rational(1) / r);
  }

  // Canonical text: "p/q", "p/q*i", "p/q*sqrt(d)", "p/q*sqrt(d)*i", joined by +/-.
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& t : terms_) {
      Rational c = t.coef;
      if (!first) {
        out += sgn(c) < 0 ? "-" : "+";
        c = abs(c);
      }
      out += c.get_str();
      if (t.rad != 1) out += "*sqrt(" + std::to_string(t.rad) + ")";
      if (t.ipow) out += "*i";
      first = false;
    }
    return out;
  }

  static Scalar parse(std::string_view text) {
    std::string s;
    for (char ch : text)
      if (!isspace(static_cast<unsigned char>(ch))) s += ch;
    if (s.empty()) throw ParseError("empty scalar");
    Scalar result;
    std::size_t pos = 0;
    while (pos < s.size()) {
      int sign = 1;
      if (s[pos] == '+' || s[pos] == '-') {
        if (s[pos] == '-') sign = -1;
        ++pos;
      }
      std::size_t end = pos;
      int depth = 0;
      while (end < s.size() && (depth > 0 || (s[end] != '+' && s[end] != '-'))) {
        if (s[end] == '(') ++depth;
        if (s[end] == ')') --depth;
        ++end;
      }
      std::string term = s.substr(pos, end - pos);
      if (term.empty()) throw ParseError("malformed scalar '" + std::string(text) + "'");
      result += Scalar(sign) * parse_product(term, text);
      pos = end;
    }
    return result;
  }

 private:
  std::vector<Term> terms_;

  static Scalar parse_product(const std::string& term, std::string_view whole) {
    Scalar r(1);
    std::size_t pos = 0;
    while (pos <= term.size()) {
      std::size_t star = term.find('*', pos);
      if (star == std::string::npos) star = term.size();
      std::string f = term.substr(pos, star - pos);
      if (f == "i") {
        r *= i_unit();
      } else if (f.rfind("sqrt(", 0) == 0 && f.back() == ')') {
        std::string inner = f.substr(5, f.size() - 6);
        if (inner.empty() || inner.find_first_not_of("0123456789") != std::string::npos)
          throw ParseError("malformed sqrt in '" + std::string(whole) + "'");
        std::uint64_t d = std::stoull(inner);
        if (d == 0) throw ParseError("sqrt(0) in '" + std::string(whole) + "'");
        r *= sqrt(d);
      } else {
        try {
          r *= Scalar(parse_rational(f));
        } catch (const ParseError&) {
          throw ParseError("malformed scalar '" + std::string(whole) + "'");
        }
      }
      pos = star + 1;
    }
    return r;
  }

  static bool key_less(const Term& a, const Term& b) {
    return a.rad != b.rad ? a.rad < b.rad : a.ipow < b.ipow;
  }

  static Scalar combine(const Scalar& a, const Scalar& b, int sign) {
    Scalar r;
    std::size_t x = 0, y = 0;
    while (x < a.terms_.size() || y < b.terms_.size()) {
      if (y == b.terms_.size() || (x < a.terms_.size() && key_less(a.terms_[x], b.terms_[y]))) {
        r.terms_.push_back(a.terms_[x++]);
      } else if (x == a.terms_.size() || key_less(b.terms_[y], a.terms_[x])) {
        Term t = b.terms_[y++];
        if (sign < 0) t.coef = -t.coef;
        r.terms_.push_back(t);
      } else {
        Term t = a.terms_[x++];
        if (sign < 0) t.coef -= b.terms_[y++].coef;
        else t.coef += b.terms_[y++].coef;
        if (sgn(t.coef) != 0) r.terms_.push_back(t);
      }
    }
    return r;
  }

  static Scalar mul(const Scalar& a, const Scalar& b) {
    if (a.terms_.empty() || b.terms_.empty()) return Scalar();
    std::map<std::pair<std::uint64_t, int>, Rational> acc;
    for (const auto& s : a.terms_)
      for (const auto& t : b.terms_) {
        std::uint64_t g = std::gcd(s.rad, t.rad);
        std::uint64_t rad = (s.rad / g) * (t.rad / g);
        Rational c = s.coef * t.coef * Rational(static_cast<unsigned long>(g));
        int e = s.ipow + t.ipow;
        if (e == 2) {
          e = 0;
          c = -c;
        }
        acc[{rad, e}] += c;
      }
    Scalar r;
    for (auto& [k, c] : acc)
      if (sgn(c) != 0) r.terms_.push_back({k.first, k.second, c});
    return r;
  }
};

// A subfield Q(sqrt d1, ..., sqrt dk)[i] of the tower.
class Field {
 public:
  Field() = default;
  const std::vector<std::uint64_t>& adjoined() const { return adjoined_; }
  bool includes_i() const { return includes_i_; }
  std::size_t degree() const { return (std::size_t{1} << adjoined_.size()) * (includes_i_ ? 2 : 1); }

  bool contains_sqrt(std::uint64_t d) const {
    if (d == 1) return true;
    return in_span(adjoined_, d);
  }

  bool contains(const Scalar& s) const {
    for (const auto& t : s.terms())
      if (!contains_sqrt(t.rad) || (t.ipow && !includes_i_)) return false;
    return true;
  }

  friend Field extend_field(const Field& base, std::uint64_t d);
  friend Field adjoin_i(const Field& base);

 private:
  std::vector<std::uint64_t> adjoined_;
  bool includes_i_ = false;

  // is d a product of the given squarefree numbers modulo squares?
  static bool in_span(const std::vector<std::uint64_t>& gens, std::uint64_t d) {
    std::vector<std::uint64_t> primes = prime_factors(d);
    for (auto g : gens)
      for (auto p : prime_factors(g)) primes.push_back(p);
    std::sort(primes.begin(), primes.end());
    primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
    auto vec_of = [&](std::uint64_t n) {
      std::vector<int> v(primes.size(), 0);
      for (std::size_t k = 0; k < primes.size(); ++k) v[k] = (n % primes[k] == 0) ? 1 : 0;
      return v;
    };
    // F2 echelon of the generators, then reduce d
    std::vector<std::vector<int>> rows;
    for (auto g : gens) {
      auto v = vec_of(g);
      for (const auto& r : rows) {
        std::size_t piv = std::find(r.begin(), r.end(), 1) - r.begin();
        if (v[piv])
          for (std::size_t k = 0; k < v.size(); ++k) v[k] ^= r[k];
      }
      if (std::find(v.begin(), v.end(), 1) != v.end()) rows.push_back(v);
    }
    auto v = vec_of(d);
    for (const auto& r : rows) {
      std::size_t piv = std::find(r.begin(), r.end(), 1) - r.begin();
      if (v[piv])
        for (std::size_t k = 0; k < v.size(); ++k) v[k] ^= r[k];
    }
    return std::find(v.begin(), v.end(), 1) == v.end();
  }
};

// Adjoin sqrt(d); d must be squarefree and > 1. Idempotent.
inline Field extend_field(const Field& base, std::uint64_t d) {
  if (d < 2) throw MathError("extend_field: d must be at least 2, got " + std::to_string(d));
  auto [k, m] = squarefree_split(d);
  if (k != 1)
    throw MathError("extend_field: " + std::to_string(d) + " is not squarefree (" + std::to_string(d) + " = " +
                    std::to_string(k * k) + "*" + std::to_string(m) + "); normalize to sqrt(" + std::to_string(m) + ")");
  if (base.contains_sqrt(d)) return base;
  Field f = base;
  f.adjoined_.push_back(d);
  return f;
}

inline Field adjoin_i(const Field& base) {
  Field f = base;
  f.includes_i_ = true;
  return f;
}

}  // namespace suplie
