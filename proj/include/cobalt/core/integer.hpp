#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace cobalt {

using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline std::string to_string(const Integer& z) { return z.get_str(); }
inline std::string to_string(const Rational& q) { return q.get_str(); }

/// Residue of `z` modulo `p` in [0, p).
inline uint64_t mod_u64(const Integer& z, uint64_t p) {
  Integer r;
  Integer pz;
  mpz_import(pz.get_mpz_t(), 1, 1, sizeof(uint64_t), 0, 0, &p);
  mpz_fdiv_r(r.get_mpz_t(), z.get_mpz_t(), pz.get_mpz_t());
  uint64_t out = 0;
  size_t count = 0;
  mpz_export(&out, &count, 1, sizeof(uint64_t), 0, 0, r.get_mpz_t());
  return count == 0 ? 0 : out;
}

inline Integer integer_from_u64(uint64_t v) {
  Integer z;
  mpz_import(z.get_mpz_t(), 1, 1, sizeof(uint64_t), 0, 0, &v);
  return z;
}

inline Integer integer_pow(const Integer& base, unsigned long e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

inline Rational rational_pow(const Rational& base, long e) {
  Rational b = base;
  if (e < 0) {
    if (b == 0) throw std::domain_error("zero to a negative power");
    b = 1 / b;
    e = -e;
  }
  Rational r(integer_pow(b.get_num(), static_cast<unsigned long>(e)),
             integer_pow(b.get_den(), static_cast<unsigned long>(e)));
  return r;
}

inline Integer binomial(unsigned long n, unsigned long k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

inline Integer factorial(unsigned long n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

}  // namespace cobalt
