#pragma once

#include <gmpxx.h>

#include <string>

#include "qgt/errors.hpp"

namespace qgt {

// Exact rational scalar. mpq_class keeps values canonical (positive
// denominator, reduced), which is exactly the invariant we need.
using Rational = mpq_class;

inline Rational rational_from_string(const std::string& s) {
  const auto slash = s.find('/');
  try {
    if (slash == std::string::npos) {
      Rational v(mpz_class(s), 1);
      v.canonicalize();
      return v;
    }
    mpz_class num(s.substr(0, slash));
    mpz_class den(s.substr(slash + 1));
    if (den == 0) throw usage_error("rational with zero denominator: " + s);
    Rational v(num, den);
    v.canonicalize();
    return v;
  } catch (const std::invalid_argument&) {
    throw usage_error("cannot parse rational: " + s);
  }
}

// Always "num/den", matching the interchange format.
inline std::string rational_to_string(const Rational& v) {
  return v.get_num().get_str() + "/" + v.get_den().get_str();
}

inline double to_double(const Rational& v) { return v.get_d(); }

inline Rational pow_rational(const Rational& base, long e) {
  if (e == 0) return Rational(1);
  if (base == 0) {
    if (e < 0) throw error("0 raised to a negative power");
    return Rational(0);
  }
  mpz_class num = base.get_num(), den = base.get_den();
  if (e < 0) {
    std::swap(num, den);
    e = -e;
    if (num < 0) {
      num = -num;
      den = -den;
    }
  }
  mpz_class pn, pd;
  mpz_pow_ui(pn.get_mpz_t(), num.get_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(pd.get_mpz_t(), den.get_mpz_t(), static_cast<unsigned long>(e));
  Rational out(pn, pd);
  out.canonicalize();
  return out;
}

// Session base parameter r with q = r^4. Quarter powers of q are integer
// powers of r, so every scalar stays rational. r = 1 is the classical
// (q = 1) session used by the degeneration checks.
struct BaseParam {
  Rational r;
  Rational q;

  explicit BaseParam(const Rational& r_in) : r(r_in), q(pow_rational(r_in, 4)) {
    if (!(r > 0 && r <= 1)) throw usage_error("base parameter r must satisfy 0 < r <= 1");
  }

  static BaseParam from_string(const std::string& s) { return BaseParam(rational_from_string(s)); }

  bool classical() const { return r == 1; }

  // r^k
  Rational r_pow(long k) const { return pow_rational(r, k); }
  // q^(c2/2) = r^(2*c2) where c2 = 2c holds a half-integer exponent c of q
  Rational q_half_pow(long c2) const { return pow_rational(r, 2 * c2); }
};

}  // namespace qgt
