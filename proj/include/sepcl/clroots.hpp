#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sepcl/ehrhart.hpp"

namespace sepcl {

// F(u) = 2^d E((u-1)/2) = u^parity H(u^2).
struct CLTransform {
  RatPoly source;
  int degree = 0;
  int parity = 0;
  RatPoly H;
};

inline CLTransform cl_transform(const RatPoly& e) {
  if (e.is_zero()) throw Error(ErrorCode::NotSymmetric, "zero polynomial");
  if (!is_symmetric_about_cl(e)) throw Error(ErrorCode::NotSymmetric, "polynomial is not symmetric about Re(z) = -1/2");
  const int d = e.degree();
  Rat scale = 1;
  for (int i = 0; i < d; ++i) scale *= 2;
  RatPoly f = e.compose_affine(Rat(1, 2), Rat(-1, 2)) * scale;
  CLTransform t{e, d, d % 2, {}};
  std::vector<Rat> h;
  for (int i = t.parity; i <= d; i += 2) h.push_back(f[i]);
  t.H = RatPoly(h);
  return t;
}

// ---- Sturm sequences ----

enum class SturmChain { Rational, Primitive };

namespace detail {

// Scales a nonzero polynomial by a positive rational so its coefficients are coprime integers.
inline RatPoly primitive_part(const RatPoly& p) {
  if (p.is_zero()) return p;
  Integer l = 1, g = 0;
  for (const auto& c : p.coeffs()) {
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  }
  std::vector<Rat> out;
  for (const auto& c : p.coeffs()) {
    Rat v = c * Rat(l);
    out.push_back(v);
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_num_mpz_t());
  }
  for (auto& v : out) v /= Rat(g);
  return RatPoly(out);
}

inline std::vector<RatPoly> sturm_sequence(const RatPoly& p, SturmChain kind) {
  std::vector<RatPoly> s;
  if (p.is_zero()) return s;
  s.push_back(kind == SturmChain::Primitive ? primitive_part(p) : p);
  RatPoly d = p.derivative();
  if (d.is_zero()) return s;
  s.push_back(kind == SturmChain::Primitive ? primitive_part(d) : d);
  while (true) {
    const RatPoly& a = s[s.size() - 2];
    const RatPoly& b = s.back();
    RatPoly r;
    if (kind == SturmChain::Rational) {
      r = -divmod(a, b).second;
    } else {
      // pseudo-remainder lc(b)^{delta+1} a mod b, sign-corrected so the chain stays a Sturm chain
      Rat lc = b.leading();
      int delta = a.degree() - b.degree();
      Rat f = 1;
      for (int i = 0; i <= delta; ++i) f *= lc;
      r = divmod(a * f, b).second;
      bool flip = sgn(f) > 0;
      r = primitive_part(flip ? -r : r);
    }
    if (r.is_zero()) break;
    s.push_back(std::move(r));
  }
  return s;
}

inline int sign_at(const RatPoly& p, const std::optional<Rat>& x, bool minus_inf) {
  if (x) return sgn(p(*x));
  int s = sgn(p.leading());
  if (minus_inf && p.degree() % 2 == 1) s = -s;
  return s;
}

inline int variations(const std::vector<RatPoly>& seq, const std::optional<Rat>& x, bool minus_inf) {
  int v = 0, last = 0;
  for (const auto& p : seq) {
    int s = sign_at(p, x, minus_inf);
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

}  // namespace detail

// Distinct real roots of a squarefree p in (lo, hi]; nullopt means -inf / +inf.
inline int sturm_count(const RatPoly& p, const std::optional<Rat>& lo, const std::optional<Rat>& hi,
                       SturmChain kind = SturmChain::Rational) {
  if (p.degree() <= 0) return 0;
  auto seq = detail::sturm_sequence(p, kind);
  return detail::variations(seq, lo, true) - detail::variations(seq, hi, false);
}

struct RootInterval {
  Rat lo;  // root in (lo, hi]
  Rat hi;
};

// 1 + max |a_i / a_n| bounds every root.
inline Rat cauchy_bound(const RatPoly& p) {
  Rat m = 0;
  for (int i = 0; i < p.degree(); ++i) m = std::max(m, Rat(abs(p[i] / p.leading())));
  return m + 1;
}

// Disjoint isolating intervals, sorted, for the real roots of a squarefree p.
inline std::vector<RootInterval> isolate_real_roots(const RatPoly& p) {
  std::vector<RootInterval> out;
  if (p.degree() <= 0) return out;
  auto seq = detail::sturm_sequence(p, SturmChain::Rational);
  const Rat b = cauchy_bound(p);
  auto rec = [&](auto&& self, const Rat& lo, const Rat& hi, int vlo, int vhi) -> void {
    int n = vlo - vhi;
    if (n == 0) return;
    if (n == 1) {
      out.push_back({lo, hi});
      return;
    }
    Rat mid = (lo + hi) / 2;
    int vm = detail::variations(seq, mid, false);
    self(self, lo, mid, vlo, vm);
    self(self, mid, hi, vm, vhi);
  };
  Rat lo = -b;
  rec(rec, lo, b, detail::variations(seq, lo, false), detail::variations(seq, b, false));
  return out;
}

// Halves an isolating interval of squarefree p until its width is at most w.
inline RootInterval refine(const RatPoly& p, RootInterval iv, const Rat& w) {
  while (iv.hi - iv.lo > w) {
    Rat mid = (iv.lo + iv.hi) / 2;
    if (sturm_count(p, iv.lo, mid) == 1)
      iv.hi = mid;
    else
      iv.lo = mid;
  }
  return iv;
}

struct WRoot {
  RootInterval interval;
  int multiplicity = 1;
};

struct RootCertificate {
  bool symmetric = false;
  CLTransform transform;
  std::vector<WRoot> roots;  // real roots of H, ascending
  int real_root_count = 0;   // with multiplicity
  bool on_cl = false;
};

namespace detail {

// Multiplicity in p (via its squarefree decomposition) of the unique root of p's squarefree
// part inside iv, or 0 when none of the factors vanishes there.
inline int multiplicity_in(const std::vector<RatPoly>& yun, const RootInterval& iv) {
  for (std::size_t i = 0; i < yun.size(); ++i)
    if (sturm_count(yun[i], iv.lo, iv.hi) > 0) return static_cast<int>(i) + 1;
  return 0;
}

}  // namespace detail

// Roots of E on Re(z) = -1/2 iff E is symmetric and H has only real roots, all <= 0.
inline RootCertificate is_cl(const RatPoly& e) {
  RootCertificate cert;
  if (e.is_zero() || !is_symmetric_about_cl(e)) return cert;
  cert.symmetric = true;
  cert.transform = cl_transform(e);
  const RatPoly& h = cert.transform.H;
  if (h.degree() <= 0) {
    cert.on_cl = true;
    return cert;
  }
  const RatPoly s = squarefree_part(h);
  const auto yun = squarefree_decomposition(h);
  const bool all_nonpositive = sturm_count(s, std::nullopt, Rat(0)) == s.degree();
  for (auto iv : isolate_real_roots(s)) {
    if (all_nonpositive) iv.hi = std::min(iv.hi, Rat(0));
    WRoot r{iv, detail::multiplicity_in(yun, iv)};
    cert.real_root_count += r.multiplicity;
    cert.roots.push_back(r);
  }
  cert.on_cl = cert.real_root_count == h.degree() && all_nonpositive;
  return cert;
}

namespace detail {

// Divides out the largest power of w, returning its exponent.
inline RatPoly strip_zero_roots(const RatPoly& h, int& zero_mult) {
  RatPoly r = h;
  zero_mult = 0;
  while (r.degree() > 0 && r[0] == 0) {
    r = divmod(r, RatPoly::x()).first;
    ++zero_mult;
  }
  return r;
}

}  // namespace detail

// A root of F located through w = u^2 = -4y^2, where y is the imaginary part of the root of E.
struct CLRoot {
  int rank = 0;  // position by imaginary part; equal ranks are equal roots
  int multiplicity = 1;
  bool from_f = false;
  bool from_g = false;
  RootInterval w;  // w-interval (exact 0 for the real root -1/2)
  bool upper = false;  // y >= 0 branch
};

struct InterlaceCertificate {
  std::vector<CLRoot> merged;  // distinct roots of f and g ordered by imaginary part
  RatPoly shared;              // gcd of the squarefree parts of the two H's
  std::vector<int> f_ranks;    // ranks with multiplicity, ascending
  std::vector<int> g_ranks;
  bool interlaces = false;
};

// Certifies g CL-interlaces f: a_1 <= b_1 <= a_2 <= ... <= b_d <= a_{d+1} along the line.
inline InterlaceCertificate interlaces_on_cl(const RatPoly& g, const RatPoly& f) {
  if (f.degree() != g.degree() + 1) throw Error(ErrorCode::NotCL, "need deg f = deg g + 1");
  if (!is_cl(f).on_cl) throw Error(ErrorCode::NotCL, "f does not have its roots on the line");
  if (!is_cl(g).on_cl) throw Error(ErrorCode::NotCL, "g does not have its roots on the line");
  const CLTransform tf = cl_transform(f), tg = cl_transform(g);
  InterlaceCertificate cert;

  int zf = 0, zg = 0;
  const RatPoly hf = detail::strip_zero_roots(tf.H, zf), hg = detail::strip_zero_roots(tg.H, zg);
  const RatPoly sf = squarefree_part(hf).monic(), sg = squarefree_part(hg).monic();
  const RatPoly G = gcd(sf, sg);
  cert.shared = G;
  const RatPoly A = divmod(sf, G).first, B = divmod(sg, G).first;
  const auto yf = squarefree_decomposition(hf), yg = squarefree_decomposition(hg);

  // negative w roots ascending
  const auto ivs = isolate_real_roots(A * B * G);
  const int s = static_cast<int>(ivs.size());
  for (int i = 0; i < s; ++i) {
    const auto& iv = ivs[static_cast<std::size_t>(i)];
    int mf = detail::multiplicity_in(yf, iv), mg = detail::multiplicity_in(yg, iv);
    cert.merged.push_back({i, mf + mg, mf > 0, mg > 0, iv, false});
    for (int k = 0; k < mf; ++k) {
      cert.f_ranks.push_back(i);
      cert.f_ranks.push_back(2 * s - i);
    }
    for (int k = 0; k < mg; ++k) {
      cert.g_ranks.push_back(i);
      cert.g_ranks.push_back(2 * s - i);
    }
  }
  const int mf0 = 2 * zf + tf.parity, mg0 = 2 * zg + tg.parity;
  if (mf0 + mg0 > 0) cert.merged.push_back({s, mf0 + mg0, mf0 > 0, mg0 > 0, {Rat(0), Rat(0)}, true});
  for (int k = 0; k < mf0; ++k) cert.f_ranks.push_back(s);
  for (int k = 0; k < mg0; ++k) cert.g_ranks.push_back(s);
  for (int i = s - 1; i >= 0; --i) {
    CLRoot r = cert.merged[static_cast<std::size_t>(i)];
    r.rank = 2 * s - i;
    r.upper = true;
    cert.merged.push_back(r);
  }
  std::sort(cert.f_ranks.begin(), cert.f_ranks.end());
  std::sort(cert.g_ranks.begin(), cert.g_ranks.end());

  bool ok = cert.f_ranks.size() == static_cast<std::size_t>(f.degree()) && cert.g_ranks.size() == static_cast<std::size_t>(g.degree());
  for (std::size_t i = 0; ok && i < cert.g_ranks.size(); ++i)
    ok = cert.f_ranks[i] <= cert.g_ranks[i] && cert.g_ranks[i] <= cert.f_ranks[i + 1];
  cert.interlaces = ok;
  return cert;
}

// ---- exact bounds for the imaginary parts y = +-sqrt(-w)/2 ----

namespace detail {

// floor / ceil of sqrt(q) for q >= 0, at resolution 2^-bits.
inline Rat sqrt_bound(const Rat& q, int bits, bool upper) {
  if (q <= 0) return 0;
  Integer scale = 1;
  scale <<= static_cast<mp_bitcnt_t>(2 * bits);
  Integer num = q.get_num() * scale, den = q.get_den();
  Integer v;
  if (upper) {
    Integer t = (num + den - 1) / den;
    mpz_sqrt(v.get_mpz_t(), t.get_mpz_t());
    if (v * v < t) v += 1;
  } else {
    Integer t = num / den;
    mpz_sqrt(v.get_mpz_t(), t.get_mpz_t());
  }
  Integer d = 1;
  d <<= static_cast<mp_bitcnt_t>(bits);
  Rat r(v, d);
  r.canonicalize();
  return r;
}

}  // namespace detail

// Interval for the imaginary part of the root on the chosen branch.
inline RootInterval imaginary_interval(const RootInterval& w, bool upper, int bits = 20) {
  // y = sqrt(-w)/2 is decreasing in w, so w in (lo, hi] gives y in [sqrt(-hi)/2, sqrt(-lo)/2)
  Rat ylo = detail::sqrt_bound(-w.hi, bits, false) / 2;
  Rat yhi = detail::sqrt_bound(-w.lo, bits, true) / 2;
  if (upper) return {ylo, yhi};
  return {-yhi, -ylo};
}

// re, im_interval_lo, im_interval_hi for every root of E (with multiplicity), ascending by imaginary part.
inline std::string cl_root_table_csv(const RatPoly& e, int bits = 20) {
  auto cert = is_cl(e);
  if (!cert.on_cl) throw Error(ErrorCode::NotCL, "roots are not all on the line");
  std::string out = "re,im_interval_lo,im_interval_hi\n";
  int zero_mult = 0;
  const RatPoly h = detail::strip_zero_roots(cert.transform.H, zero_mult);
  zero_mult = 2 * zero_mult + cert.transform.parity;
  std::vector<std::pair<RootInterval, int>> rows;
  if (h.degree() > 0) {
    const RatPoly s = squarefree_part(h);
    const auto yun = squarefree_decomposition(h);
    for (auto iv : isolate_real_roots(s)) {
      iv.hi = std::min(iv.hi, Rat(0));
      iv = refine(s, iv, Rat(1, 1048576));
      rows.push_back({imaginary_interval(iv, false, bits), detail::multiplicity_in(yun, iv)});
    }
  }
  std::vector<std::pair<RootInterval, int>> all(rows.begin(), rows.end());
  if (zero_mult) all.push_back({{Rat(0), Rat(0)}, zero_mult});
  for (auto it = rows.rbegin(); it != rows.rend(); ++it) all.push_back({{-it->first.hi, -it->first.lo}, it->second});
  for (const auto& [iv, m] : all)
    for (int k = 0; k < m; ++k) out += "-1/2," + to_string(iv.lo) + "," + to_string(iv.hi) + "\n";
  return out;
}

}  // namespace sepcl
