#pragma once

#include <string>
#include <vector>

#include "sepcl/poly.hpp"

namespace sepcl {

// h*-polynomial of a d-dimensional lattice polytope.
struct HStar {
  RatPoly poly;
  int dim = 0;

  // Validates: nonnegative integer coefficients, constant term 1, degree <= dim.
  static HStar make(RatPoly p, int dim) {
    if (dim < 0) throw Error(ErrorCode::InvalidArgument, "negative dimension");
    if (p.degree() > dim) throw Error(ErrorCode::InvalidArgument, "h* degree exceeds dimension");
    if (p[0] != 1) throw Error(ErrorCode::InvalidArgument, "h* constant term must be 1");
    for (const auto& c : p.coeffs()) {
      if (!is_integer(c)) throw Error(ErrorCode::InvalidArgument, "h* coefficient not integral");
      if (c < 0) throw Error(ErrorCode::NegativeHStar, "negative h* coefficient");
    }
    return HStar{std::move(p), dim};
  }
  static HStar from_ints(const std::vector<long>& c, int dim) {
    std::vector<Rat> v(c.begin(), c.end());
    return make(RatPoly(std::move(v)), dim);
  }

  std::vector<Integer> coefficients() const {
    std::vector<Integer> out(static_cast<std::size_t>(dim) + 1);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = poly[i].get_num();
    return out;
  }
  Integer volume() const {
    Integer s = 0;
    for (const auto& c : poly.coeffs()) s += c.get_num();
    return s;
  }
  friend bool operator==(const HStar& a, const HStar& b) { return a.dim == b.dim && a.poly == b.poly; }
};

// Palindromic with respect to degree d: p_i = p_{d-i} for all i.
inline bool is_palindromic(const RatPoly& p, int d) {
  if (p.degree() > d) return false;
  for (int i = 0; i <= d; ++i)
    if (p[static_cast<std::size_t>(i)] != p[static_cast<std::size_t>(d - i)]) return false;
  return true;
}

// E(x) = sum_i h_i * binom(d + x - i, d).
inline RatPoly ehrhart_from_numerator(const RatPoly& h, int d) {
  RatPoly e;
  for (int i = 0; i <= h.degree(); ++i) {
    if (h[static_cast<std::size_t>(i)] == 0) continue;
    e += RatPoly::binomial_in_x(d - i, static_cast<unsigned>(d)) * h[static_cast<std::size_t>(i)];
  }
  return e;
}

inline RatPoly ehrhart_from_hstar(const HStar& h) { return ehrhart_from_numerator(h.poly, h.dim); }

// (1-t)^{d+1} * sum_{k<=d} E(k) t^k, truncated to degree d. No validity checks.
inline RatPoly series_numerator(const RatPoly& e, int d) {
  std::vector<Rat> vals(static_cast<std::size_t>(d) + 1);
  for (int k = 0; k <= d; ++k) vals[static_cast<std::size_t>(k)] = e(Rat(k));
  RatPoly series(std::move(vals));
  RatPoly one_minus_t({1, -1});
  return (series * one_minus_t.pow(static_cast<unsigned>(d + 1))).truncated(static_cast<std::size_t>(d) + 1);
}

inline HStar hstar_from_ehrhart(const RatPoly& e, int d) {
  if (d < 0 || e.degree() != d) throw Error(ErrorCode::InvalidArgument, "deg E must equal d");
  for (int k = 0; k <= d; ++k)
    if (!is_integer(e(Rat(k))))
      throw Error(ErrorCode::NonIntegerCount, "E(" + std::to_string(k) + ") = " + to_string(e(Rat(k))));
  RatPoly h = series_numerator(e, d);
  for (const auto& c : h.coeffs())
    if (c < 0) throw Error(ErrorCode::NegativeHStar, "computed h* has a negative coefficient");
  return HStar::make(std::move(h), d);
}

// (-1)^{deg E} E(x) == E(-1-x)
inline bool is_symmetric_about_cl(const RatPoly& e) {
  if (e.is_zero()) return true;
  RatPoly reflected = e.compose_affine(-1, -1);
  return (e.degree() % 2 == 0 ? e : -e) == reflected;
}

// gamma_i with h = sum_i gamma_i (1+t)^{d-2i} t^i, for any palindromic h of degree d.
inline RatPoly gamma_of(const RatPoly& h, int d) {
  if (!is_palindromic(h, d)) throw Error(ErrorCode::NotPalindromic, "h is not palindromic of degree " + std::to_string(d));
  RatPoly rest = h;
  std::vector<Rat> gamma(static_cast<std::size_t>(d / 2) + 1);
  for (int i = 0; i <= d / 2; ++i) {
    Rat g = rest[static_cast<std::size_t>(i)];
    gamma[static_cast<std::size_t>(i)] = g;
    if (g != 0) rest -= (RatPoly::one_plus_t_pow(static_cast<unsigned>(d - 2 * i)) * g).shifted(static_cast<std::size_t>(i));
  }
  return RatPoly(std::move(gamma));
}

inline RatPoly gamma_vector(const HStar& h) { return gamma_of(h.poly, h.dim); }

inline RatPoly gamma_recombine(const RatPoly& gamma, int d) {
  RatPoly h;
  for (int i = 0; i <= gamma.degree(); ++i)
    h += (RatPoly::one_plus_t_pow(static_cast<unsigned>(d - 2 * i)) * gamma[static_cast<std::size_t>(i)])
             .shifted(static_cast<std::size_t>(i));
  return h;
}

// Ehrhart polynomial of the n-dimensional cross-polytope.
inline RatPoly cross_polynomial(int n) {
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "negative cross-polynomial index");
  RatPoly c;
  for (int k = 0; k <= n; ++k)
    c += RatPoly::binomial_in_x(n - k, static_cast<unsigned>(n)) * Rat(binom(n, k));
  return c;
}

// Signed cross coefficients sum_i (-1)^i c_i x^i with E = sum_i (-1)^i c_i C_{d-2i}.
inline RatPoly cross_coefficients(const RatPoly& e, int d) {
  RatPoly gamma = gamma_of(series_numerator(e, d), d);
  std::vector<Rat> out(static_cast<std::size_t>(std::max(gamma.degree(), 0)) + 1);
  if (gamma.is_zero()) return {};
  for (int i = 0; i <= gamma.degree(); ++i) {
    Rat c = 0;
    Rat four_pow = 1;
    for (int j = 0; j < i; ++j) four_pow *= 4;
    for (int j = i; j <= gamma.degree(); ++j) {
      c += Rat(binom(j, i)) * gamma[static_cast<std::size_t>(j)] / four_pow;
      four_pow *= 4;
    }
    out[static_cast<std::size_t>(i)] = (i % 2 == 0) ? c : Rat(-c);
  }
  return RatPoly(std::move(out));
}

// Cross-degree: gamma-degree of the series numerator.
inline int cross_degree(const RatPoly& e) { return gamma_of(series_numerator(e, e.degree()), e.degree()).degree(); }

inline RatPoly cross_recombine(const RatPoly& signed_coeffs, int d) {
  RatPoly e;
  for (int i = 0; i <= signed_coeffs.degree(); ++i)
    e += cross_polynomial(d - 2 * i) * signed_coeffs[static_cast<std::size_t>(i)];
  return e;
}

// Numerator N with sum_k (2k+1)E(k)t^k = N(t)/(1-t)^{d+2}.
inline RatPoly mul_2x_plus_1_numerator(const RatPoly& h, int d) {
  RatPoly t = RatPoly::x();
  RatPoly one_minus_t({1, -1});
  return one_minus_t * h + t * one_minus_t * h.derivative() * Rat(2) + t * h * Rat(2 * (d + 1));
}

inline RatPoly mul_2x_plus_1_series(const HStar& h) { return mul_2x_plus_1_numerator(h.poly, h.dim); }

// Power series of num/(1-t)^e up to and including t^order.
inline RatPoly series_expand(const RatPoly& num, int e, int order) {
  RatPoly s = num.truncated(static_cast<std::size_t>(order) + 1);
  for (int r = 0; r < e; ++r) {
    std::vector<Rat> acc(static_cast<std::size_t>(order) + 1);
    Rat run = 0;
    for (int k = 0; k <= order; ++k) {
      run += s[static_cast<std::size_t>(k)];
      acc[static_cast<std::size_t>(k)] = run;
    }
    s = RatPoly(std::move(acc));
  }
  return s;
}

// sum_k (sum_i (-1)^i binom(n,i) C_{d+2(n-i)}(k)) t^k  ==  (1+t)^d (4t)^n / (1-t)^{d+2n+1},
// compared through degree d+2n+2, where the left side is evaluated pointwise.
inline bool gammalemma_check(int d, int n) {
  if (d < 1 || n < 0) throw Error(ErrorCode::InvalidArgument, "gammalemma_check needs d >= 1, n >= 0");
  const int order = d + 2 * n + 2;
  RatPoly lhs_poly;
  for (int i = 0; i <= n; ++i) {
    RatPoly term = cross_polynomial(d + 2 * (n - i)) * Rat(binom(n, i));
    if (i % 2) lhs_poly -= term; else lhs_poly += term;
  }
  std::vector<Rat> lhs(static_cast<std::size_t>(order) + 1);
  for (int k = 0; k <= order; ++k) lhs[static_cast<std::size_t>(k)] = lhs_poly(Rat(k));
  RatPoly four_t_pow = RatPoly::monomial(Rat(1), static_cast<std::size_t>(n)) * Rat(Integer(1) << (2 * n));
  RatPoly rhs = series_expand(RatPoly::one_plus_t_pow(static_cast<unsigned>(d)) * four_t_pow, d + 2 * n + 1, order);
  return RatPoly(std::move(lhs)) == rhs;
}

}  // namespace sepcl
