#pragma once

#include <stdexcept>
#include <string>
#include <type_traits>

#include "cobalt/core/integer.hpp"
#include "cobalt/core/multipoly.hpp"
#include "cobalt/core/prime_field.hpp"

namespace cobalt {

// Uniform vocabulary over the exact scalar types: Integer, Rational, Fp, MultiPoly.

template <class C>
struct scalar_traits;

template <>
struct scalar_traits<Integer> {
  static constexpr bool is_field = false;
  static bool is_zero(const Integer& a) { return a == 0; }
  static std::string str(const Integer& a) { return a.get_str(); }
  static Integer exact_div(const Integer& a, const Integer& b) {
    if (b == 0) throw std::domain_error("division by zero");
    if (!mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t())) throw std::domain_error("inexact integer division");
    Integer q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
  }
};

template <>
struct scalar_traits<Rational> {
  static constexpr bool is_field = true;
  static bool is_zero(const Rational& a) { return a == 0; }
  static std::string str(const Rational& a) { return a.get_str(); }
  static Rational exact_div(const Rational& a, const Rational& b) {
    if (b == 0) throw std::domain_error("division by zero");
    return a / b;
  }
};

template <>
struct scalar_traits<Fp> {
  static constexpr bool is_field = true;
  static bool is_zero(const Fp& a) { return a.is_zero(); }
  static std::string str(const Fp& a) { return a.str(); }
  static Fp exact_div(const Fp& a, const Fp& b) { return a / b; }
};

template <>
struct scalar_traits<MultiPoly> {
  static constexpr bool is_field = false;
  static bool is_zero(const MultiPoly& a) { return a.is_zero(); }
  static std::string str(const MultiPoly& a) { return a.str(); }
  static MultiPoly exact_div(const MultiPoly& a, const MultiPoly& b) { return cobalt::exact_div(a, b); }
};

template <class C>
bool is_zero(const C& a) {
  return scalar_traits<C>::is_zero(a);
}

template <class C>
C divide_exact(const C& a, const C& b) {
  return scalar_traits<C>::exact_div(a, b);
}

template <class C>
std::string scalar_str(const C& a) {
  return scalar_traits<C>::str(a);
}

template <class C>
inline constexpr bool is_field_v = scalar_traits<C>::is_field;

/// Materializes a gmpxx expression template or passes any other scalar through.
template <class C, class E>
C eval_as(const E& e) {
  return C(e);
}

}  // namespace cobalt
