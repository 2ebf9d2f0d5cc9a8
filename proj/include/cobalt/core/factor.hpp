#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "cobalt/core/unipoly.hpp"

namespace cobalt {

template <class F>
struct SquarefreeResult {
  UniPoly<F> squarefree;  // product of the distinct irreducible factors
  bool is_separable = false;
  bool inseparable_detected = false;
};

/// Squarefree part, separability, and (in characteristic p) whether an
/// irreducible factor with vanishing derivative was met.
SquarefreeResult<Rational> squarefree_part(const UniPoly<Rational>& q);
SquarefreeResult<Fp> squarefree_part(const UniPoly<Fp>& q);

/// Pairwise coprime squarefree factors with multiplicities; monic factors.
std::vector<std::pair<UniPoly<Rational>, int>> squarefree_decomposition(const UniPoly<Rational>& f);
std::vector<std::pair<UniPoly<Fp>, int>> squarefree_decomposition(const UniPoly<Fp>& f);

template <class F>
struct Factorization {
  F unit{0};
  std::vector<std::pair<UniPoly<F>, int>> factors;  // monic
  /// False when some factor could not be certified irreducible.
  bool complete = true;
};

/// Complete factorization over F_p: squarefree decomposition, distinct-degree
/// and equal-degree (Cantor-Zassenhaus) splitting. Deterministic for a seed.
Factorization<Fp> factor_fp(const UniPoly<Fp>& f, uint64_t seed = 0x5eed);

/// Factorization over Q by rational roots; cofactors of degree <= 3 without
/// rational roots are irreducible, larger ones leave the result incomplete.
Factorization<Rational> factor_rational(const UniPoly<Rational>& f);

/// Distinct rational roots.
std::vector<Rational> rational_roots(const UniPoly<Rational>& f);

bool is_irreducible_fp(const UniPoly<Fp>& f);

/// Coefficientwise reduction; throws if a denominator vanishes modulo p.
UniPoly<Fp> reduce_mod_p(const UniPoly<Rational>& f, uint64_t p);

/// The modulus carried by the coefficients, or 0 if none is bound.
uint64_t field_modulus(const UniPoly<Fp>& f);

/// a^e mod m over F_p.
UniPoly<Fp> powmod(const UniPoly<Fp>& a, const Integer& e, const UniPoly<Fp>& m);

}  // namespace cobalt
