#pragma once

#include <sstream>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "cobalt/core/scalar.hpp"

namespace cobalt {

/// Dense univariate polynomial, coefficients indexed by exponent.
template <class C>
class UniPoly {
 public:
  UniPoly() = default;
  UniPoly(const C& c) {  // NOLINT(google-explicit-constructor)
    if (!cobalt::is_zero(c)) coeffs_.push_back(c);
  }
  UniPoly(long c) : UniPoly(C(c)) {}  // NOLINT(google-explicit-constructor)
  explicit UniPoly(std::vector<C> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  static UniPoly monomial(const C& c, std::size_t k) {
    std::vector<C> v(k + 1, C(0));
    v[k] = c;
    return UniPoly(std::move(v));
  }
  static UniPoly x() { return monomial(C(1), 1); }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<C>& coeffs() const { return coeffs_; }
  C coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : C(0); }
  C leading() const { return coeffs_.empty() ? C(0) : coeffs_.back(); }

  template <class D>
  D evaluate(const D& t) const {
    D r(0);
    for (std::size_t i = coeffs_.size(); i-- > 0;) r = D(r * t) + D(coeffs_[i]);
    return r;
  }
  C operator()(const C& t) const { return evaluate<C>(t); }

  UniPoly derivative() const {
    if (coeffs_.size() <= 1) return UniPoly();
    std::vector<C> d(coeffs_.size() - 1, C(0));
    for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = C(coeffs_[i] * C(static_cast<long>(i)));
    return UniPoly(std::move(d));
  }

  /// x^k * p(1/x); requires k >= degree.
  UniPoly reversed(std::size_t k) const {
    if (degree() > static_cast<int>(k)) throw std::invalid_argument("reversal degree below polynomial degree");
    std::vector<C> r(k + 1, C(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) r[k - i] = coeffs_[i];
    return UniPoly(std::move(r));
  }

  /// p(lambda * x).
  UniPoly scale_argument(const C& lambda) const {
    std::vector<C> r = coeffs_;
    C pw(1);
    for (auto& c : r) {
      c = C(c * pw);
      pw = C(pw * lambda);
    }
    return UniPoly(std::move(r));
  }

  template <class F>
  auto map(F f) const {
    using D = decltype(f(std::declval<C>()));
    std::vector<D> out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_) out.push_back(f(c));
    return UniPoly<D>(std::move(out));
  }

  UniPoly operator-() const {
    std::vector<C> r = coeffs_;
    for (auto& c : r) c = C(-c);
    return UniPoly(std::move(r));
  }
  friend UniPoly operator+(const UniPoly& a, const UniPoly& b) {
    std::vector<C> r(std::max(a.coeffs_.size(), b.coeffs_.size()), C(0));
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = C(a.coeff(i) + b.coeff(i));
    return UniPoly(std::move(r));
  }
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b) {
    std::vector<C> r(std::max(a.coeffs_.size(), b.coeffs_.size()), C(0));
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = C(a.coeff(i) - b.coeff(i));
    return UniPoly(std::move(r));
  }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return UniPoly();
    std::vector<C> r(a.coeffs_.size() + b.coeffs_.size() - 1, C(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (cobalt::is_zero(a.coeffs_[i])) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) r[i + j] = C(r[i + j] + C(a.coeffs_[i] * b.coeffs_[j]));
    }
    return UniPoly(std::move(r));
  }
  friend UniPoly operator*(const C& s, const UniPoly& a) { return UniPoly(s) * a; }
  UniPoly& operator+=(const UniPoly& o) { return *this = *this + o; }
  UniPoly& operator-=(const UniPoly& o) { return *this = *this - o; }
  UniPoly& operator*=(const UniPoly& o) { return *this = *this * o; }

  friend bool operator==(const UniPoly& a, const UniPoly& b) {
    if (a.coeffs_.size() != b.coeffs_.size()) return false;
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
      if (!(a.coeffs_[i] == b.coeffs_[i])) return false;
    return true;
  }
  friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }

  std::string str(const std::string& var = "T") const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
      if (cobalt::is_zero(coeffs_[i])) continue;
      std::string c = scalar_str(coeffs_[i]);
      bool simple = c.find_first_of("+- ", 1) == std::string::npos;
      bool neg = simple && c[0] == '-';
      if (neg) c = c.substr(1);
      if (!first) os << (neg ? " - " : " + ");
      else if (neg) os << "-";
      first = false;
      std::string mono = i == 0 ? "" : (i == 1 ? var : var + "^" + std::to_string(i));
      if (!simple) c = "(" + c + ")";
      if (mono.empty()) os << c;
      else if (c == "1") os << mono;
      else os << c << "*" << mono;
    }
    return os.str();
  }

 private:
  void trim() {
    while (!coeffs_.empty() && cobalt::is_zero(coeffs_.back())) coeffs_.pop_back();
  }

  std::vector<C> coeffs_;
};

template <class C>
UniPoly<C> pow(const UniPoly<C>& base, unsigned e) {
  UniPoly<C> r(C(1));
  UniPoly<C> b = base;
  while (e) {
    if (e & 1) r = r * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return r;
}

/// Quotient and remainder over a field.
template <class C>
std::pair<UniPoly<C>, UniPoly<C>> divmod(const UniPoly<C>& a, const UniPoly<C>& b) {
  static_assert(is_field_v<C>, "polynomial division needs field coefficients");
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<C> r = a.coeffs();
  int db = b.degree();
  if (a.degree() < db) return {UniPoly<C>(), a};
  std::vector<C> q(a.degree() - db + 1, C(0));
  C inv_lc = C(C(1) / b.leading());
  for (int i = a.degree(); i >= db; --i) {
    C c = C(r[i] * inv_lc);
    q[i - db] = c;
    if (cobalt::is_zero(c)) continue;
    for (int j = 0; j <= db; ++j) r[i - db + j] = C(r[i - db + j] - C(c * b.coeffs()[j]));
  }
  r.resize(db);
  return {UniPoly<C>(std::move(q)), UniPoly<C>(std::move(r))};
}

template <class C>
UniPoly<C> operator%(const UniPoly<C>& a, const UniPoly<C>& b) {
  return divmod(a, b).second;
}

template <class C>
UniPoly<C> monic(const UniPoly<C>& a) {
  if (a.is_zero()) return a;
  C inv = C(C(1) / a.leading());
  return inv * a;
}

/// Exact quotient over a field; throws if the remainder is nonzero.
template <class C>
UniPoly<C> exact_quotient(const UniPoly<C>& a, const UniPoly<C>& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw std::domain_error("polynomial does not divide");
  return q;
}

/// Monic greatest common divisor.
template <class C>
UniPoly<C> poly_gcd(UniPoly<C> a, UniPoly<C> b) {
  if (a.is_zero() && b.is_zero()) throw std::domain_error("gcd undefined");
  while (!b.is_zero()) {
    UniPoly<C> r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

template <class C>
UniPoly<C> poly_lcm(const UniPoly<C>& a, const UniPoly<C>& b) {
  if (a.is_zero() || b.is_zero()) return UniPoly<C>();
  return monic(exact_quotient(a * b, poly_gcd(a, b)));
}

/// Returns (g, s, t) with s*a + t*b = g, g monic.
template <class C>
std::tuple<UniPoly<C>, UniPoly<C>, UniPoly<C>> ext_gcd(const UniPoly<C>& a, const UniPoly<C>& b) {
  UniPoly<C> r0 = a, r1 = b, s0(C(1)), s1, t0, t1(C(1));
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    UniPoly<C> s2 = s0 - q * s1, t2 = t0 - q * t1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) throw std::domain_error("gcd undefined");
  C inv = C(C(1) / r0.leading());
  return {inv * r0, inv * s0, inv * t0};
}

/// Inverse of a modulo m; throws when they share a factor.
template <class C>
UniPoly<C> inverse_mod(const UniPoly<C>& a, const UniPoly<C>& m) {
  auto [g, s, t] = ext_gcd(a % m, m);
  if (g.degree() != 0) throw std::domain_error("polynomial not invertible modulo");
  return s % m;
}

}  // namespace cobalt
