#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cobalt/core/factor.hpp"
#include "cobalt/core/quotient_ring.hpp"
#include "cobalt/genfun/series.hpp"

namespace cobalt {

enum class Tri { yes, no, undetermined };
enum class Verdict { admits, fails, undetermined };

std::string to_string(Tri t);
std::string to_string(Verdict v);

/// Residue of Z(T) dT / T^2 at the roots of one irreducible factor f of Q,
/// as an element of F[t]/(f) (t a root of f).
template <class F>
struct PoleResidue {
  UniPoly<F> factor;
  QuotientRingElement<F> value;
};

template <class F>
struct ResidueSet {
  std::vector<PoleResidue<F>> poles;
  F at_zero{0};      // alpha_1
  F at_infinity{0};  // -r_1, r_1 the linear coefficient of P div Q
  /// Sum of all residues (conjugates summed by the field trace) is zero.
  bool sum_zero = false;
};

/// Trace of multiplication by e on F[t]/(f).
template <class F>
F field_trace(const QuotientRingElement<F>& e) {
  const auto& f = e.modulus();
  F tr(0);
  auto basis = QuotientRingElement<F>::constant(F(1), f);
  auto t = QuotientRingElement<F>::generator(f);
  for (int i = 0; i < f.degree(); ++i) {
    tr = F(tr + (e * basis).representative().coeff(i));
    basis = basis * t;
  }
  return tr;
}

/// Residues given the distinct irreducible factors of a separable Q.
template <class F>
ResidueSet<F> residues(const RationalSeries<F>& z, const std::vector<UniPoly<F>>& irreducible_factors) {
  ResidueSet<F> r;
  const auto& P = z.numerator();
  const auto& Q = z.denominator();
  const auto dQ = Q.derivative();
  F total(0);
  for (const auto& f : irreducible_factors) {
    auto tau = QuotientRingElement<F>::generator(f);
    auto num = tau.apply(P);
    auto den = tau.apply(dQ) * tau * tau;
    if (den.is_zero()) throw std::domain_error("denominator is not separable");
    auto v = num / den;
    total = F(total + field_trace(v));
    r.poles.push_back({f, v});
  }
  auto alphas = z.coefficients(1);
  r.at_zero = alphas[1];
  auto R = divmod(P, Q).first;
  r.at_infinity = F(F(0) - R.coeff(1));
  total = F(total + r.at_zero + r.at_infinity);
  r.sum_zero = is_zero(total);
  return r;
}

struct ResidueEntry {
  std::string pole;   // e.g. "roots of 1 - T - T^2"
  std::string value;  // representative in t modulo the factor
  int degree = 1;
  bool in_prime_field = false;
};

struct Witness {
  std::string condition;
  std::string explanation;
};

struct RealizationReport {
  uint64_t characteristic = 0;
  std::string series;
  bool cond_rational = true;
  Tri cond_separable = Tri::undetermined;
  bool cond_degree = false;
  Tri cond_residues = Tri::undetermined;
  Verdict verdict = Verdict::undetermined;
  std::vector<ResidueEntry> residues;
  std::optional<bool> residue_sum_zero;
  std::vector<Witness> witnesses;
};

/// Conditions (1)-(4) for an abelian realization in characteristic 0
/// (characteristic == 0) or p (the series is reduced modulo p first).
RealizationReport check_abelian(const RationalSeries<Rational>& z, uint64_t characteristic = 0);
RealizationReport check_abelian(const RationalSeries<Fp>& z);

}  // namespace cobalt
