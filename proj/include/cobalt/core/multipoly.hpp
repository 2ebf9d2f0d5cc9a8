#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cobalt/core/integer.hpp"

namespace cobalt {

/// Ordered list of symbol names shared by a family of multivariate polynomials.
class PolyRing {
 public:
  explicit PolyRing(std::vector<std::string> names);

  const std::vector<std::string>& names() const { return names_; }
  std::size_t size() const { return names_.size(); }
  std::optional<std::size_t> index_of(std::string_view name) const;

  friend bool operator==(const PolyRing& a, const PolyRing& b) { return a.names_ == b.names_; }

 private:
  std::vector<std::string> names_;
};

using RingPtr = std::shared_ptr<const PolyRing>;

RingPtr make_ring(std::vector<std::string> names);

using Exponents = std::vector<uint32_t>;

/// Graded lexicographic comparison: total degree first, then the first
/// differing exponent (earlier variables rank higher).
int grlex_compare(const Exponents& a, const Exponents& b);

struct Term {
  Exponents exps;
  Rational coef;
};

/// Sparse polynomial with rational coefficients in the variables of a PolyRing.
///
/// Terms are kept in strictly decreasing graded-lex order with no zero
/// coefficients. Constants may be created without a ring; they adopt the ring
/// of whatever they are combined with.
class MultiPoly {
 public:
  MultiPoly() = default;
  MultiPoly(long c);             // NOLINT(google-explicit-constructor)
  MultiPoly(int c) : MultiPoly(static_cast<long>(c)) {}  // NOLINT
  MultiPoly(const Rational& c);  // NOLINT(google-explicit-constructor)
  MultiPoly(RingPtr ring, const Rational& c);

  static MultiPoly variable(const RingPtr& ring, std::size_t index);
  static MultiPoly variable(const RingPtr& ring, std::string_view name);
  static MultiPoly monomial(const RingPtr& ring, Exponents exps, Rational coef);
  /// Builds from arbitrary (possibly unsorted, repeated, zero) terms.
  static MultiPoly from_terms(const RingPtr& ring, std::vector<Term> terms);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t num_vars() const { return ring_ ? ring_->size() : 0; }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  std::optional<Rational> as_constant() const;
  Rational constant_term() const;
  int total_degree() const;
  int degree_in(std::size_t var) const;
  const Term& leading_term() const;
  /// Sum of absolute values of the coefficients.
  Rational l1_norm() const;
  /// Least common multiple of coefficient denominators.
  Integer denominator_lcm() const;

  Rational evaluate(std::span<const Rational> point) const;
  /// Evaluation in F_p; coefficient denominators must be invertible mod p.
  uint64_t evaluate_mod(std::span<const uint64_t> point, uint64_t p) const;
  MultiPoly substitute(std::size_t var, const Rational& value) const;
  /// Re-expresses the polynomial in `target`, matching variables by name.
  MultiPoly rebind(const RingPtr& target) const;

  std::string str() const;

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const MultiPoly& o);

  friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend bool operator==(const MultiPoly& a, const MultiPoly& b);
  friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }
  friend std::ostream& operator<<(std::ostream& os, const MultiPoly& p) { return os << p.str(); }

 private:
  static RingPtr common_ring(const MultiPoly& a, const MultiPoly& b);
  void bind_to(const RingPtr& ring);

  RingPtr ring_;
  std::vector<Term> terms_;
};

/// Exact quotient a / b; throws std::domain_error when b does not divide a.
MultiPoly exact_div(const MultiPoly& a, const MultiPoly& b);
MultiPoly pow(const MultiPoly& base, unsigned e);

}  // namespace cobalt
