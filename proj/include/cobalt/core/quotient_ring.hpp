#pragma once

#include <stdexcept>
#include <string>

#include "cobalt/core/unipoly.hpp"

namespace cobalt {

/// Element of F[t]/(f) with f monic of degree >= 1.
template <class F>
class QuotientRingElement {
 public:
  QuotientRingElement(UniPoly<F> rep, UniPoly<F> modulus) : modulus_(std::move(modulus)) {
    if (modulus_.degree() < 1) throw std::invalid_argument("quotient modulus must have degree >= 1");
    modulus_ = monic(modulus_);
    rep_ = rep % modulus_;
  }

  static QuotientRingElement generator(const UniPoly<F>& modulus) {
    return QuotientRingElement(UniPoly<F>::x(), modulus);
  }
  static QuotientRingElement constant(const F& c, const UniPoly<F>& modulus) {
    return QuotientRingElement(UniPoly<F>(c), modulus);
  }

  const UniPoly<F>& representative() const { return rep_; }
  const UniPoly<F>& modulus() const { return modulus_; }
  bool is_zero() const { return rep_.is_zero(); }

  QuotientRingElement inverse() const { return QuotientRingElement(inverse_mod(rep_, modulus_), modulus_); }

  friend QuotientRingElement operator+(const QuotientRingElement& a, const QuotientRingElement& b) {
    check(a, b);
    return QuotientRingElement(a.rep_ + b.rep_, a.modulus_);
  }
  friend QuotientRingElement operator-(const QuotientRingElement& a, const QuotientRingElement& b) {
    check(a, b);
    return QuotientRingElement(a.rep_ - b.rep_, a.modulus_);
  }
  friend QuotientRingElement operator*(const QuotientRingElement& a, const QuotientRingElement& b) {
    check(a, b);
    return QuotientRingElement(a.rep_ * b.rep_, a.modulus_);
  }
  friend QuotientRingElement operator/(const QuotientRingElement& a, const QuotientRingElement& b) {
    return a * b.inverse();
  }
  QuotientRingElement operator-() const { return QuotientRingElement(-rep_, modulus_); }
  friend bool operator==(const QuotientRingElement& a, const QuotientRingElement& b) {
    return a.modulus_ == b.modulus_ && a.rep_ == b.rep_;
  }

  /// Evaluates a polynomial at this element.
  QuotientRingElement apply(const UniPoly<F>& p) const {
    QuotientRingElement r = constant(F(0), modulus_);
    for (std::size_t i = p.coeffs().size(); i-- > 0;) r = r * *this + constant(p.coeffs()[i], modulus_);
    return r;
  }

  std::string str() const { return rep_.str("t") + " mod (" + modulus_.str("t") + ")"; }

 private:
  static void check(const QuotientRingElement& a, const QuotientRingElement& b) {
    if (!(a.modulus_ == b.modulus_)) throw std::invalid_argument("quotient ring moduli differ");
  }

  UniPoly<F> rep_;
  UniPoly<F> modulus_;
};

/// True iff the element lies in the base field: its representative has degree <= 0.
template <class F>
bool qr_in_prime_field(const QuotientRingElement<F>& e) {
  return e.representative().degree() <= 0;
}

}  // namespace cobalt
