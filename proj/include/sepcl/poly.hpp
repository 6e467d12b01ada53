#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "sepcl/rational.hpp"

namespace sepcl {

// Dense univariate polynomial over Q. coeffs()[i] is the coefficient of x^i;
// the zero polynomial has no coefficients and degree -1.
class RatPoly {
 public:
  RatPoly() = default;
  explicit RatPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }
  RatPoly(std::initializer_list<long> ints) {
    c_.reserve(ints.size());
    for (long v : ints) c_.emplace_back(v);
    trim();
  }

  static RatPoly constant(const Rat& v) { return RatPoly(std::vector<Rat>{v}); }
  static RatPoly monomial(const Rat& v, std::size_t deg) {
    std::vector<Rat> c(deg + 1);
    c[deg] = v;
    return RatPoly(std::move(c));
  }
  static RatPoly x() { return monomial(1, 1); }
  // (x + shift) choose d, as a polynomial in x.
  static RatPoly binomial_in_x(long shift, unsigned d) {
    RatPoly p = constant(1);
    Integer fact = 1;
    for (unsigned j = 0; j < d; ++j) {
      p *= RatPoly(std::vector<Rat>{Rat(shift - static_cast<long>(j)), Rat(1)});
      fact *= j + 1;
    }
    return p / Rat(fact);
  }
  // (1 + t)^k
  static RatPoly one_plus_t_pow(unsigned k) {
    std::vector<Rat> c(k + 1);
    for (unsigned i = 0; i <= k; ++i) c[i] = Rat(binom(k, i));
    return RatPoly(std::move(c));
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Rat>& coeffs() const { return c_; }
  std::size_t size() const { return c_.size(); }

  // Coefficient of x^i; zero beyond the degree.
  Rat operator[](std::size_t i) const { return i < c_.size() ? c_[i] : Rat(0); }
  Rat leading() const { return c_.empty() ? Rat(0) : c_.back(); }

  Rat operator()(const Rat& x) const {
    Rat acc = 0;
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
  }

  RatPoly& operator+=(const RatPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  RatPoly& operator-=(const RatPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  RatPoly& operator*=(const RatPoly& o) {
    *this = *this * o;
    return *this;
  }
  RatPoly& operator*=(const Rat& s) {
    for (auto& v : c_) v *= s;
    trim();
    return *this;
  }
  RatPoly& operator/=(const Rat& s) {
    if (s == 0) throw Error(ErrorCode::InvalidArgument, "division by zero");
    for (auto& v : c_) v /= s;
    return *this;
  }

  friend RatPoly operator+(RatPoly a, const RatPoly& b) { return a += b; }
  friend RatPoly operator-(RatPoly a, const RatPoly& b) { return a -= b; }
  friend RatPoly operator-(RatPoly a) {
    for (auto& v : a.c_) v = -v;
    return a;
  }
  friend RatPoly operator*(const RatPoly& a, const RatPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rat> c(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    }
    return RatPoly(std::move(c));
  }
  friend RatPoly operator*(RatPoly a, const Rat& s) { return a *= s; }
  friend RatPoly operator*(const Rat& s, RatPoly a) { return a *= s; }
  friend RatPoly operator/(RatPoly a, const Rat& s) { return a /= s; }
  friend bool operator==(const RatPoly& a, const RatPoly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const RatPoly& a, const RatPoly& b) { return !(a == b); }

  RatPoly derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<Rat> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<long>(i);
    return RatPoly(std::move(d));
  }

  // p(a*x + b)
  RatPoly compose_affine(const Rat& a, const Rat& b) const {
    RatPoly lin(std::vector<Rat>{b, a});
    RatPoly acc;
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * lin + constant(c_[i]);
    return acc;
  }

  RatPoly pow(unsigned e) const {
    RatPoly r = constant(1), base = *this;
    while (e) {
      if (e & 1U) r *= base;
      e >>= 1U;
      if (e) base *= base;
    }
    return r;
  }

  // p mod x^n
  RatPoly truncated(std::size_t n) const {
    if (c_.size() <= n) return *this;
    return RatPoly(std::vector<Rat>(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(n)));
  }

  RatPoly shifted(std::size_t k) const {
    if (is_zero()) return {};
    std::vector<Rat> c(k);
    c.insert(c.end(), c_.begin(), c_.end());
    return RatPoly(std::move(c));
  }

  RatPoly monic() const {
    if (is_zero()) return {};
    return *this / leading();
  }

  bool has_integer_coeffs() const {
    return std::all_of(c_.begin(), c_.end(), [](const Rat& v) { return is_integer(v); });
  }

  std::string to_string(char var = 'x') const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (c_[i] == 0) continue;
      Rat v = c_[i];
      bool neg = v < 0;
      if (neg) v = -v;
      if (out.empty())
        out += neg ? "-" : "";
      else
        out += neg ? " - " : " + ";
      bool unit = (v == 1) && i > 0;
      if (!unit) out += sepcl::to_string(v);
      if (i > 0) {
        if (!unit) out += "*";
        out += var;
        if (i > 1) out += "^" + std::to_string(i);
      }
    }
    return out;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<Rat> c_;
};

inline std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b) {
  if (b.is_zero()) throw Error(ErrorCode::InvalidArgument, "polynomial division by zero");
  std::vector<Rat> r = a.coeffs();
  int db = b.degree();
  if (a.degree() < db) return {RatPoly{}, a};
  std::vector<Rat> q(static_cast<std::size_t>(a.degree() - db + 1));
  Rat lb = b.leading();
  for (int i = a.degree(); i >= db; --i) {
    Rat f = r[static_cast<std::size_t>(i)] / lb;
    q[static_cast<std::size_t>(i - db)] = f;
    if (f == 0) continue;
    for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(i - db + j)] -= f * b[static_cast<std::size_t>(j)];
  }
  return {RatPoly(std::move(q)), RatPoly(std::move(r))};
}

// Monic gcd; gcd(0,0) = 0.
inline RatPoly gcd(RatPoly a, RatPoly b) {
  while (!b.is_zero()) {
    RatPoly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

// Squarefree part p / gcd(p, p').
inline RatPoly squarefree_part(const RatPoly& p) {
  if (p.degree() <= 0) return p;
  return divmod(p, gcd(p, p.derivative())).first;
}

// Yun's algorithm: returns factors f_1, f_2, ... with p = lc * prod f_i^i,
// each f_i monic squarefree and pairwise coprime (f_i = 1 when absent).
inline std::vector<RatPoly> squarefree_decomposition(const RatPoly& p) {
  std::vector<RatPoly> out;
  if (p.degree() <= 0) return out;
  RatPoly a = p.monic();
  RatPoly g = gcd(a, a.derivative());
  RatPoly w = divmod(a, g).first;
  RatPoly c = g;
  while (w.degree() > 0) {
    RatPoly y = gcd(w, c);
    out.push_back(divmod(w, y).first.monic());
    w = y;
    c = divmod(c, y).first;
  }
  while (!out.empty() && out.back().degree() <= 0) out.pop_back();
  return out;
}

}  // namespace sepcl
