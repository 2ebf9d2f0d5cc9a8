#pragma once

#include <algorithm>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "cobalt/core/factor.hpp"
#include "cobalt/core/unipoly.hpp"

namespace cobalt {

/// Z(T) = P(T)/Q(T) with Q(0) = 1 and gcd(P, Q) = 1.
///
/// Over a field the gcd is cancelled exactly. Over a parameter ring (C =
/// MultiPoly) coprimality is checked at three seeded random rational
/// specializations instead of by a multivariate gcd.
template <class C>
class RationalSeries {
 public:
  RationalSeries() : P_(), Q_(C(1)) {}

  const UniPoly<C>& numerator() const { return P_; }
  const UniPoly<C>& denominator() const { return Q_; }
  /// deg P, with -1 for the zero series.
  int N() const { return P_.degree(); }
  int M() const { return Q_.degree(); }
  int K() const { return std::max(N() + 1, M()); }
  bool is_zero() const { return P_.is_zero(); }

  /// alpha_0 .. alpha_upto from Q * sum(alpha_n T^n) = P.
  std::vector<C> coefficients(std::size_t upto) const {
    std::vector<C> a;
    a.reserve(upto + 1);
    for (std::size_t n = 0; n <= upto; ++n) {
      C s = P_.coeff(n);
      for (std::size_t i = 1; i <= n && static_cast<int>(i) <= M(); ++i) {
        const C& qi = Q_.coeffs()[i];
        if (!cobalt::is_zero(qi)) s = C(s - C(qi * a[n - i]));
      }
      a.push_back(s);
    }
    return a;
  }

  std::string str(const std::string& var = "T") const { return "(" + P_.str(var) + ")/(" + Q_.str(var) + ")"; }

  friend bool operator==(const RationalSeries& a, const RationalSeries& b) { return a.P_ == b.P_ && a.Q_ == b.Q_; }

  template <class D>
  friend RationalSeries<D> normalize(UniPoly<D> P, UniPoly<D> Q);

 private:
  UniPoly<C> P_;
  UniPoly<C> Q_;
};

namespace detail {

inline UniPoly<Rational> specialize_poly(const UniPoly<MultiPoly>& p, const std::vector<Rational>& pt) {
  std::vector<Rational> c;
  for (const auto& m : p.coeffs()) c.push_back(m.ring() ? m.evaluate(pt) : m.constant_term());
  return UniPoly<Rational>(std::move(c));
}

inline RingPtr ring_of(const UniPoly<MultiPoly>& p) {
  for (const auto& m : p.coeffs())
    if (m.ring()) return m.ring();
  return nullptr;
}

}  // namespace detail

template <class C>
RationalSeries<C> normalize(UniPoly<C> P, UniPoly<C> Q) {
  const std::string undefined = "series undefined: Q(0) must be a unit";
  C q0 = Q.coeff(0);
  if (cobalt::is_zero(q0)) throw std::domain_error(undefined);
  RationalSeries<C> z;
  if constexpr (is_field_v<C>) {
    if (P.is_zero()) {
      z.P_ = UniPoly<C>();
      z.Q_ = UniPoly<C>(C(1));
      return z;
    }
    UniPoly<C> g = poly_gcd(P, Q);
    P = exact_quotient(P, g);
    Q = exact_quotient(Q, g);
    C inv = C(C(1) / Q.coeff(0));
    z.P_ = inv * P;
    z.Q_ = inv * Q;
  } else {
    auto c = q0.as_constant();
    if (!c) throw std::domain_error(undefined);
    Rational inv = 1 / *c;
    z.P_ = C(inv) * P;
    z.Q_ = C(inv) * Q;
    if (P.is_zero()) {
      z.Q_ = UniPoly<C>(C(1));
      return z;
    }
    RingPtr ring = detail::ring_of(z.P_);
    if (!ring) ring = detail::ring_of(z.Q_);
    if (ring && z.Q_.degree() > 0) {
      std::mt19937_64 rng(0xC0FFEE);
      int shared = 0;
      for (int trial = 0; trial < 3; ++trial) {
        std::vector<Rational> pt;
        for (std::size_t v = 0; v < ring->size(); ++v)
          pt.push_back(make_rational(static_cast<long>(rng() % 2001) - 1000, static_cast<long>(rng() % 97) + 1));
        UniPoly<Rational> ps = detail::specialize_poly(z.P_, pt), qs = detail::specialize_poly(z.Q_, pt);
        if (!ps.is_zero() && poly_gcd(ps, qs).degree() > 0) ++shared;
      }
      if (shared == 3) throw std::invalid_argument("numerator and denominator share a factor");
    }
  }
  return z;
}

template <class C>
RationalSeries<C> constant_series(const C& c) {
  return normalize(UniPoly<C>(c), UniPoly<C>(C(1)));
}

/// Monic U(x) = x^K Q(1/x).
template <class C>
struct HandlePolynomial {
  UniPoly<C> poly;
  int K = 0;
  friend bool operator==(const HandlePolynomial& a, const HandlePolynomial& b) { return a.poly == b.poly; }
};

template <class C>
HandlePolynomial<C> handle_polynomial(const RationalSeries<C>& z) {
  int K = z.K();
  return HandlePolynomial<C>{z.denominator().reversed(static_cast<std::size_t>(K)), K};
}

/// Z'(T) = lambda^{-1} Z(lambda T), so alpha'_n = lambda^{n-1} alpha_n.
template <class C>
RationalSeries<C> scale(const RationalSeries<C>& z, const C& lambda) {
  if constexpr (is_field_v<C>) {
    if (cobalt::is_zero(lambda)) throw std::domain_error("scaling factor is not invertible");
    C inv = C(C(1) / lambda);
    return normalize(inv * z.numerator().scale_argument(lambda), z.denominator().scale_argument(lambda));
  } else {
    auto c = lambda.as_constant();
    if (!c || *c == 0) throw std::domain_error("scaling factor is not invertible");
    return normalize(C(Rational(1 / *c)) * z.numerator().scale_argument(lambda),
                     z.denominator().scale_argument(lambda));
  }
}

/// Coefficientwise sum.
template <class C>
RationalSeries<C> add(const RationalSeries<C>& a, const RationalSeries<C>& b) {
  if constexpr (is_field_v<C>) {
    UniPoly<C> l = poly_lcm(a.denominator(), b.denominator());
    UniPoly<C> fa = exact_quotient(l, a.denominator()), fb = exact_quotient(l, b.denominator());
    return normalize(a.numerator() * fa + b.numerator() * fb, l);
  } else {
    if (a.denominator() == b.denominator()) return normalize(a.numerator() + b.numerator(), a.denominator());
    return normalize(a.numerator() * b.denominator() + b.numerator() * a.denominator(),
                     a.denominator() * b.denominator());
  }
}

/// Connection polynomial (constant term 1) and length of the shortest linear
/// recurrence generating s, over a field.
template <class F>
std::pair<UniPoly<F>, int> berlekamp_massey(const std::vector<F>& s) {
  std::vector<F> C{F(1)}, B{F(1)};
  int L = 0, m = 1;
  F b(1);
  for (std::size_t n = 0; n < s.size(); ++n) {
    F d = s[n];
    for (int i = 1; i <= L; ++i)
      if (static_cast<std::size_t>(i) < C.size()) d = F(d + F(C[i] * s[n - i]));
    if (cobalt::is_zero(d)) {
      ++m;
      continue;
    }
    std::vector<F> T = C;
    F coef = F(d / b);
    if (C.size() < B.size() + m) C.resize(B.size() + m, F(0));
    for (std::size_t i = 0; i < B.size(); ++i) C[i + m] = F(C[i + m] - F(coef * B[i]));
    if (2 * L <= static_cast<int>(n)) {
      L = static_cast<int>(n) + 1 - L;
      B = std::move(T);
      b = d;
      m = 1;
    } else {
      ++m;
    }
  }
  return {UniPoly<F>(std::move(C)), L};
}

/// Series from a coefficient prefix: minimal recurrence, then P = C*S mod T^L.
/// Throws if the reconstruction does not reproduce `verify_extra` trailing terms.
template <class F>
RationalSeries<F> reconstruct_rational(const std::vector<F>& s, std::size_t fit, std::size_t verify_extra) {
  if (s.size() < fit + verify_extra) throw std::invalid_argument("not enough terms for reconstruction");
  std::vector<F> head(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(fit));
  auto [C, L] = berlekamp_massey(head);
  std::vector<F> pc;
  for (int n = 0; n < L; ++n) {
    F acc(0);
    for (int i = 0; i <= n && i <= C.degree(); ++i) acc = F(acc + F(C.coeff(i) * s[n - i]));
    pc.push_back(acc);
  }
  RationalSeries<F> z = normalize(UniPoly<F>(std::move(pc)), C);
  auto check = z.coefficients(fit + verify_extra - 1);
  for (std::size_t n = 0; n < fit + verify_extra; ++n)
    if (!(check[n] == s[n])) throw std::domain_error("cannot certify rationality");
  return z;
}

/// Termwise product, reconstructed from 2*K1*K2+2 terms and verified on 10 more.
template <class F>
RationalSeries<F> hadamard(const RationalSeries<F>& a, const RationalSeries<F>& b) {
  static_assert(is_field_v<F>, "Hadamard reconstruction needs field coefficients");
  const std::size_t fit = static_cast<std::size_t>(2 * a.K() * b.K() + 2);
  const std::size_t extra = 10;
  auto ca = a.coefficients(fit + extra), cb = b.coefficients(fit + extra);
  std::vector<F> prod;
  for (std::size_t n = 0; n < fit + extra; ++n) prod.push_back(F(ca[n] * cb[n]));
  return reconstruct_rational(prod, fit, extra);
}

template <class F>
struct PartialFractionDecomposition {
  std::vector<std::pair<UniPoly<F>, UniPoly<F>>> terms;  // (P_i, Q_i), deg P_i < deg Q_i
  UniPoly<F> polynomial_part;

  /// Sum of the terms and the polynomial part as one normalized series.
  RationalSeries<F> recombine() const {
    RationalSeries<F> acc = normalize(polynomial_part, UniPoly<F>(F(1)));
    for (const auto& [p, q] : terms) acc = add(acc, normalize(p, q));
    return acc;
  }
};

/// Pairwise coprime factors of Q (constant term 1) from the squarefree
/// decomposition with rational roots split off.
inline std::vector<UniPoly<Rational>> builtin_denominator_factors(const UniPoly<Rational>& Q) {
  std::vector<UniPoly<Rational>> out;
  if (Q.degree() <= 0) return out;
  auto fac = factor_rational(Q);
  for (const auto& [f, m] : fac.factors) {
    UniPoly<Rational> q = pow(f, static_cast<unsigned>(m));
    out.push_back(Rational(1 / q.coeff(0)) * q);
  }
  return out;
}

template <class F>
PartialFractionDecomposition<F> partial_fractions(const RationalSeries<F>& z, std::vector<UniPoly<F>> q_factors) {
  static_assert(is_field_v<F>, "partial fractions need field coefficients");
  const UniPoly<F>& P = z.numerator();
  const UniPoly<F>& Q = z.denominator();
  UniPoly<F> prod(F(1));
  for (auto& q : q_factors) {
    if (q.degree() < 1) throw std::invalid_argument("partial fraction factor must be non-constant");
    if (cobalt::is_zero(q.coeff(0))) throw std::invalid_argument("partial fraction factor must have nonzero constant term");
    q = F(F(1) / q.coeff(0)) * q;
    prod = prod * q;
  }
  if (!(prod == Q)) throw std::invalid_argument("factors do not multiply to the denominator");
  for (std::size_t i = 0; i < q_factors.size(); ++i)
    for (std::size_t j = i + 1; j < q_factors.size(); ++j)
      if (poly_gcd(q_factors[i], q_factors[j]).degree() > 0) throw std::invalid_argument("factors are not coprime");
  PartialFractionDecomposition<F> d;
  auto [R, rem] = divmod(P, Q);
  d.polynomial_part = R;
  for (const auto& qi : q_factors) {
    UniPoly<F> rest = exact_quotient(Q, qi);
    UniPoly<F> pi = (rem * inverse_mod(rest, qi)) % qi;
    d.terms.push_back({pi, qi});
  }
  if (!(d.recombine() == z)) throw std::logic_error("partial fraction recombination mismatch");
  return d;
}

inline PartialFractionDecomposition<Rational> partial_fractions(const RationalSeries<Rational>& z) {
  return partial_fractions(z, builtin_denominator_factors(z.denominator()));
}

template <class F>
struct RegularPairResult {
  bool is_regular = false;
  HandlePolynomial<F> U_pair;
  HandlePolynomial<F> U_sum;
};

template <class F>
RegularPairResult<F> regular_pair(const RationalSeries<F>& zb, const RationalSeries<F>& zg) {
  static_assert(is_field_v<F>, "regular-pair analysis needs field coefficients");
  RegularPairResult<F> r;
  UniPoly<F> l = poly_lcm(handle_polynomial(zb).poly, handle_polynomial(zg).poly);
  if (l.is_zero()) l = UniPoly<F>(F(1));
  r.U_pair = HandlePolynomial<F>{l, l.degree()};
  r.U_sum = handle_polynomial(add(zb, zg));
  r.is_regular = r.U_sum.poly == r.U_pair.poly;
  return r;
}

/// Specializes a parameter-ring series at a rational point.
inline RationalSeries<Rational> specialize(const RationalSeries<MultiPoly>& z, const std::vector<Rational>& pt) {
  return normalize(detail::specialize_poly(z.numerator(), pt), detail::specialize_poly(z.denominator(), pt));
}

/// Reduces a rational series modulo p and renormalizes over F_p.
inline RationalSeries<Fp> reduce_mod_p(const RationalSeries<Rational>& z, uint64_t p) {
  return normalize(reduce_mod_p(z.numerator(), p), reduce_mod_p(z.denominator(), p));
}

}  // namespace cobalt
