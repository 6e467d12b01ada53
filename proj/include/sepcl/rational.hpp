#pragma once

#include <gmpxx.h>

#include <string>

#include "sepcl/error.hpp"

namespace sepcl {

using Integer = mpz_class;
using Rat = mpq_class;

inline Rat make_rat(const Integer& num, const Integer& den) {
  if (den == 0) throw Error(ErrorCode::InvalidArgument, "zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

inline std::string to_string(const Integer& z) { return z.get_str(); }

// "p" for integers, "p/q" otherwise; q > 0 always.
inline std::string to_string(const Rat& r) {
  if (is_integer(r)) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

inline Rat parse_rat(const std::string& s) {
  Rat r;
  if (r.set_str(s, 10) != 0) throw Error(ErrorCode::ParseError, "not a rational: " + s);
  r.canonicalize();
  if (r.get_den() == 0) throw Error(ErrorCode::ParseError, "zero denominator: " + s);
  return r;
}

// Binomial coefficient with the convention binom(n,k) = 0 whenever n < 0, k < 0 or k > n.
inline Integer binom(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

inline int sign(const Rat& r) { return sgn(r); }
inline int sign(const Integer& z) { return sgn(z); }

}  // namespace sepcl
