#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "sepcl/ehrhart.hpp"
#include "sepcl/graph.hpp"

namespace sepcl {

namespace detail {

inline void add_term(std::vector<Rat>& h, long e, const Integer& v) {
  if (v == 0) return;
  if (e < 0) throw Error(ErrorCode::InvalidArgument, "negative exponent in closed form");
  if (h.size() <= static_cast<std::size_t>(e)) h.resize(static_cast<std::size_t>(e) + 1, Rat(0));
  h[static_cast<std::size_t>(e)] += Rat(v);
}

// c * t^k * (1+t)^e, with the whole term dropped when e < 0 (its coefficient vanishes).
inline RatPoly t_pow_one_plus_t(const Integer& c, int k, int e) {
  if (e < 0 || c == 0) return {};
  return RatPoly::monomial(Rat(c), k) * RatPoly::one_plus_t_pow(e);
}

}  // namespace detail

// h* of K_{a+1,b+1}.
inline HStar hstar_bipartite(int a, int b) {
  if (a < 0 || b < 0) throw Error(ErrorCode::InvalidArgument, "parameters must be nonnegative");
  RatPoly h;
  for (int i = 0; i <= std::min(a, b); ++i)
    h += detail::t_pow_one_plus_t(binom(2 * i, i) * binom(a, i) * binom(b, i), i, a + b + 1 - 2 * i);
  return HStar::make(h, a + b + 1);
}

// h* of K_{1,m,n}.
inline HStar hstar_1mn(int m, int n) {
  if (m < 1 || n < 1) throw Error(ErrorCode::InvalidArgument, "parameters must be positive");
  RatPoly h;
  for (int i = 0; i <= std::min(m, n); ++i)
    h += detail::t_pow_one_plus_t(binom(2 * i, i) * binom(m, i) * binom(n, i), i, m + n - 2 * i);
  return HStar::make(h, m + n);
}

// f_G for G = K_{1,1,n}: 3(n-1)n/16 t^2 + (2n+1)/2 t + 1.
inline RatPoly interior_sum_111n(int n) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "n must be positive");
  return RatPoly(std::vector<Rat>{Rat(1), make_rat(2 * n + 1, 2), make_rat(3L * (n - 1) * n, 16)});
}

// The same f_G assembled cut by cut: 2^{-(n+1)} sum_m C(n,m)[(C(m,2)+m(n-m))t^2 + (2m+n+1)t + 2].
inline RatPoly interior_sum_111n_from_cuts(int n) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "n must be positive");
  RatPoly f;
  for (int m = 0; m <= n; ++m) {
    RatPoly cut(std::vector<Rat>{Rat(2), Rat(2 * m + n + 1), Rat(binom(m, 2) + m * (n - m))});
    f += cut * Rat(binom(n, m));
  }
  mpz_class den = 1;
  den <<= static_cast<mp_bitcnt_t>(n + 1);
  return f / Rat(den);
}

// (1+t)^N f(4t/(1+t)^2) for deg f <= N/2.
inline RatPoly suspension_transform(const RatPoly& f, int N) {
  RatPoly h;
  for (int i = 0; i <= f.degree(); ++i) {
    if (N - 2 * i < 0) throw Error(ErrorCode::InvalidArgument, "degree too large for suspension");
    Rat c = f[i];
    for (int k = 0; k < i; ++k) c *= 4;
    h += RatPoly::monomial(c, i) * RatPoly::one_plus_t_pow(N - 2 * i);
  }
  return h;
}

// h* of K_{1,1,1,n}.
inline HStar hstar_111n(int n) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "n must be positive");
  RatPoly h = detail::t_pow_one_plus_t(3 * n * (n - 1), 2, n - 2) + detail::t_pow_one_plus_t(2 * (2 * n + 1), 1, n) +
              RatPoly::one_plus_t_pow(n + 2);
  return HStar::make(h, n + 2);
}

// Both interior-sum forms agree and the suspension transform reproduces hstar_111n.
inline bool suspension_identity_check_111n(int n) {
  const RatPoly f = interior_sum_111n(n);
  return f == interior_sum_111n_from_cuts(n) && suspension_transform(f, n + 2) == hstar_111n(n).poly;
}

// h* of K_{2,2,n}.
inline HStar hstar_22n(int n) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "n must be positive");
  RatPoly h = detail::t_pow_one_plus_t(20 * binom(n, 3), 3, n - 3) + detail::t_pow_one_plus_t(2 * binom(3 * n, 2), 2, n - 1) +
              detail::t_pow_one_plus_t(2 * (3 * n + 1), 1, n + 1) + RatPoly::one_plus_t_pow(n + 3);
  return HStar::make(h, n + 3);
}

// ---- tripartite ----

inline Integer aux_p(long x, long y, long i, long j) { return binom(x - y - 1, i) * binom(y - 1, j) * binom(y + i - j - 1, i); }

inline Integer aux_q(int a, int b, int c, int n1, int n2, int n3) { return binom(a - 1, n1) * binom(b, n2) * binom(c, n3); }

// Upper limit of the last summation index in aux_c: c_{n-1}-1 like its siblings, or c_{n-1}.
enum class AuxCLastLimit { SiblingLimit, FullLimit };

// Planar-tree chains along a class path of sizes c_1..c_n.
inline Integer aux_c(const std::vector<int>& cs, AuxCLastLimit lim = AuxCLastLimit::SiblingLimit) {
  const int n = static_cast<int>(cs.size());
  if (n < 2) throw Error(ErrorCode::InvalidArgument, "class path needs at least two vertices");
  auto c = [&](int i) { return static_cast<long>(cs[static_cast<std::size_t>(i - 1)]); };
  if (n == 2) return binom(c(1) + c(2) - 2, c(2) - 1);
  std::vector<long> j(static_cast<std::size_t>(n + 1), 0);  // j[2..n-1]
  Integer total = 0;
  auto rec = [&](auto&& self, int idx) -> void {
    if (idx == n) {
      Integer v = binom(c(1) + j[2] - 1, j[2]) * binom(c(n - 1) - j[static_cast<std::size_t>(n - 1)] + c(n) - 2, c(n) - 1);
      for (int i = 2; i <= n - 2; ++i)
        v *= binom(c(i) - j[static_cast<std::size_t>(i)] + j[static_cast<std::size_t>(i + 1)] - 1, j[static_cast<std::size_t>(i + 1)]);
      total += v;
      return;
    }
    long hi = (idx == n - 1 && lim == AuxCLastLimit::FullLimit) ? c(idx) : c(idx) - 1;
    for (long x = 0; x <= hi; ++x) {
      j[static_cast<std::size_t>(idx)] = x;
      self(self, idx + 1);
    }
  };
  rec(rec, 2);
  return total;
}

// Third summand of the all-interior case of r. The literal term does not match the
// triangulation; Corrected and Alternate both do wherever checked.
enum class RThirdTerm { Corrected, Alternate, Literal };

inline Integer aux_r(int a, int b, int c, int n1, int n2, int n3, RThirdTerm third = RThirdTerm::Corrected,
                     AuxCLastLimit lim = AuxCLastLimit::SiblingLimit) {
  auto cc = [&](std::vector<int> v) { return aux_c(v, lim); };
  const bool mid1 = n1 != 0 && n1 != a, mid2 = n2 != 0 && n2 != b, mid3 = n3 != 0 && n3 != c;
  if (n1 == 0 && n2 == b && n3 == c) return cc({b, a, c});
  if (n1 == 0 && n2 == b && n3 == 0) return cc({a, b, c});
  if (n1 == 0 && n2 == 0 && n3 == c) return cc({a, c, b});
  if (n1 == 0 && n2 == b && mid3) return cc({n3, a, b, c - n3});
  if (n1 == 0 && mid2 && n3 == c) return cc({n2, a, c, b - n2});
  if (mid1 && n2 == b && n3 == 0) return cc({n1, c, b, a - n1});
  if (mid1 && n2 == 0 && n3 == c) return cc({n1, b, c, a - n1});
  if (n1 == 0 && mid2 && mid3) return cc({b - n2, n3, a, n2, c - n3});
  if (mid1 && n2 == 0 && mid3) return cc({a - n1, n3, b, n1, c - n3});
  if (mid1 && n2 == b && mid3) return cc({n1, c - n3, b, a - n1, n3});
  if (mid1 && mid2 && n3 == 0) return cc({a - n1, n2, c, n1, b - n2});
  if (mid1 && mid2 && n3 == c) return cc({n1, b - n2, c, a - n1, n2});
  if (mid1 && mid2 && mid3) {
    Integer t3;
    switch (third) {
      case RThirdTerm::Corrected: t3 = cc({c - n3, n1, b - n2, n3, a - n1, n2}); break;
      case RThirdTerm::Alternate: t3 = cc({n2, a - n1, n3, b - n2, n1, c - n3}); break;
      case RThirdTerm::Literal: t3 = cc({b - n2, n1, n3, n2, a - n1, c - n3}); break;
    }
    return cc({a - n1, n2, c - n3, n1, b - n2, n3}) + cc({n1, c - n3, n2, a - n1, n3, b - n2}) + t3;
  }
  return 0;
}

// Binomial in the first-class line of the type (i) sum: the literal C(a_1+j-i-2, j-1) or the
// corrected C(a-a_1+j-i-2, j-1) that matches the triangulation.
enum class TypeIReading { Corrected, Literal };

// Type (i) part of h* for K_{a_1,...,a_k}.
inline RatPoly hstar_type_i(const std::vector<int>& parts, TypeIReading reading = TypeIReading::Corrected) {
  long a = 0;
  for (int x : parts) a += x;
  std::vector<Rat> h;
  for (std::size_t m = 0; m < parts.size(); ++m) {
    const long am = parts[m];
    for (long i = 0; i <= a - am - 1; ++i)
      for (long j = 1; j <= am - 1; ++j) {
        if (m == 0) {
          long top = reading == TypeIReading::Corrected ? a - am + j - i - 2 : am + j - i - 2;
          Integer v = aux_p(a, am, i, j) * binom(top, j - 1);
          detail::add_term(h, i + j + 1, v);
          detail::add_term(h, a - i - j - 2, v);
        } else {
          Integer v = aux_p(a, am, i, j) * binom(a - am + j - i - 2, a - am - i - 1);
          detail::add_term(h, i + j, v);
          detail::add_term(h, a - i - j - 1, v);
        }
      }
  }
  return RatPoly(h);
}

inline RatPoly hstar_type_ii(int a, int b, int c, RThirdTerm third = RThirdTerm::Corrected,
                             AuxCLastLimit lim = AuxCLastLimit::SiblingLimit) {
  std::vector<Rat> h;
  const long s = a + b + c;
  for (int n1 = 0; n1 <= a - 1; ++n1)
    for (int n2 = 0; n2 <= b; ++n2)
      for (int n3 = 0; n3 <= c; ++n3) {
        Integer v = aux_q(a, b, c, n1, n2, n3) * aux_r(a, b, c, n1, n2, n3, third, lim);
        const long e = n1 + n2 + n3;
        detail::add_term(h, e, v);
        detail::add_term(h, s - 1 - e, v);
      }
  return RatPoly(h);
}

struct TripartiteHStar {
  RatPoly type_i;
  RatPoly type_ii;
  HStar total;
};

inline TripartiteHStar hstar_tripartite(int a, int b, int c) {
  if (a < 1 || b < 1 || c < 1) throw Error(ErrorCode::InvalidArgument, "class sizes must be positive");
  RatPoly h1 = hstar_type_i({a, b, c});
  RatPoly h2 = hstar_type_ii(a, b, c);
  return {h1, h2, HStar::make(h1 + h2, a + b + c - 1)};
}

inline bool contraction_identity_check(int m, int n) {
  return hstar_bipartite(m, n).poly == RatPoly{1, 1} * hstar_1mn(m, n).poly;
}

// Closed form for a signature when one applies (sizes are matched up to order).
inline std::optional<HStar> hstar_closed_form(const Signature& sig) {
  std::vector<int> s = sig.parts();
  std::sort(s.begin(), s.end());
  if (s.size() == 2) return hstar_bipartite(s[0] - 1, s[1] - 1);
  if (s.size() == 3) {
    if (s[0] == 1) return hstar_1mn(s[1], s[2]);
    if (s[0] == 2 && s[1] == 2) return hstar_22n(s[2]);
    return hstar_tripartite(s[0], s[1], s[2]).total;
  }
  if (s.size() == 4 && s[0] == 1 && s[1] == 1 && s[2] == 1) return hstar_111n(s[3]);
  return std::nullopt;
}

}  // namespace sepcl
