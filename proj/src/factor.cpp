#include "cobalt/core/factor.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace cobalt {

namespace {

template <class F>
UniPoly<F> normalize_unit(const UniPoly<F>& f) {
  // Constant term 1 when possible (series convention), monic otherwise.
  if (f.is_zero()) return f;
  F c0 = f.coeff(0);
  if (!is_zero(c0)) return F(F(1) / c0) * f;
  return monic(f);
}

template <class F>
std::vector<std::pair<UniPoly<F>, int>> yun(const UniPoly<F>& f0) {
  std::vector<std::pair<UniPoly<F>, int>> out;
  UniPoly<F> f = monic(f0);
  if (f.degree() <= 0) return out;
  UniPoly<F> d = f.derivative();
  UniPoly<F> a = poly_gcd(f, d);
  UniPoly<F> b = exact_quotient(f, a);
  UniPoly<F> c = exact_quotient(d, a);
  UniPoly<F> dd = c - b.derivative();
  int i = 1;
  while (b.degree() > 0) {
    UniPoly<F> g = poly_gcd(b, dd);
    if (g.degree() > 0) out.push_back({g, i});
    b = exact_quotient(b, g);
    c = exact_quotient(dd, g);
    dd = c - b.derivative();
    ++i;
  }
  return out;
}

UniPoly<Fp> pth_root(const UniPoly<Fp>& f, uint64_t p) {
  std::vector<Fp> r;
  for (std::size_t i = 0; i < f.coeffs().size(); i += p) r.push_back(f.coeffs()[i]);
  return UniPoly<Fp>(std::move(r));
}

std::vector<std::pair<UniPoly<Fp>, int>> musser(const UniPoly<Fp>& f0, uint64_t p) {
  std::vector<std::pair<UniPoly<Fp>, int>> out;
  UniPoly<Fp> f = monic(f0);
  if (f.degree() <= 0) return out;
  UniPoly<Fp> d = f.derivative();
  if (d.is_zero()) {
    for (auto& [g, m] : musser(pth_root(f, p), p)) out.push_back({g, m * static_cast<int>(p)});
    return out;
  }
  UniPoly<Fp> c = poly_gcd(f, d);
  UniPoly<Fp> w = exact_quotient(f, c);
  int i = 1;
  while (w.degree() > 0) {
    UniPoly<Fp> y = poly_gcd(w, c);
    UniPoly<Fp> z = exact_quotient(w, y);
    if (z.degree() > 0) out.push_back({z, i});
    ++i;
    w = y;
    c = exact_quotient(c, y);
  }
  if (c.degree() > 0)
    for (auto& [g, m] : musser(pth_root(c, p), p)) out.push_back({g, m * static_cast<int>(p)});
  return out;
}

UniPoly<Fp> random_poly(std::mt19937_64& rng, int deg, uint64_t p) {
  std::vector<Fp> c;
  for (int i = 0; i <= deg; ++i) c.push_back(Fp::from_residue(rng() % p, p));
  return UniPoly<Fp>(std::move(c));
}

void equal_degree(const UniPoly<Fp>& f, int d, uint64_t p, std::mt19937_64& rng, std::vector<UniPoly<Fp>>& out) {
  if (f.degree() == d) {
    out.push_back(monic(f));
    return;
  }
  const UniPoly<Fp> one(Fp::from_residue(1, p));
  for (;;) {
    UniPoly<Fp> a = random_poly(rng, f.degree() - 1, p);
    if (a.degree() < 1) continue;
    UniPoly<Fp> g = poly_gcd(a, f);
    if (g.degree() <= 0) {
      UniPoly<Fp> b;
      if (p == 2) {
        UniPoly<Fp> t = a % f;
        b = t;
        for (int k = 1; k < d; ++k) {
          t = (t * t) % f;
          b = b + t;
        }
      } else {
        Integer e = (integer_pow(integer_from_u64(p), d) - 1) / 2;
        b = powmod(a, e, f) - one;
      }
      g = poly_gcd(b, f);
    }
    if (g.degree() > 0 && g.degree() < f.degree()) {
      equal_degree(g, d, p, rng, out);
      equal_degree(exact_quotient(f, g), d, p, rng, out);
      return;
    }
  }
}

// Divisors of |n| for |n| up to 10^12; empty optional-like flag on overflow.
bool divisors(const Integer& n0, std::vector<Integer>& out) {
  Integer n = abs(n0);
  if (n > Integer("1000000000000")) return false;
  unsigned long long v = n.get_ui();
  for (unsigned long long d = 1; d * d <= v; ++d)
    if (v % d == 0) {
      out.push_back(Integer(static_cast<unsigned long>(d)));
      if (d * d != v) out.push_back(Integer(static_cast<unsigned long>(v / d)));
    }
  return true;
}

}  // namespace

uint64_t field_modulus(const UniPoly<Fp>& f) {
  for (const auto& c : f.coeffs())
    if (c.bound()) return c.modulus();
  return 0;
}

UniPoly<Fp> reduce_mod_p(const UniPoly<Rational>& f, uint64_t p) {
  std::vector<Fp> c;
  for (const auto& q : f.coeffs()) {
    uint64_t den = mod_u64(q.get_den(), p);
    if (den == 0) throw std::domain_error("coefficient denominator vanishes modulo " + std::to_string(p));
    c.push_back(Fp::from_residue(modular::mul(mod_u64(q.get_num(), p), modular::inv(den, p), p), p));
  }
  return UniPoly<Fp>(std::move(c));
}

UniPoly<Fp> powmod(const UniPoly<Fp>& a, const Integer& e, const UniPoly<Fp>& m) {
  UniPoly<Fp> r = UniPoly<Fp>(Fp(1)) % m;
  UniPoly<Fp> b = a % m;
  std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    r = (r * r) % m;
    if (mpz_tstbit(e.get_mpz_t(), i)) r = (r * b) % m;
  }
  return r;
}

SquarefreeResult<Rational> squarefree_part(const UniPoly<Rational>& q) {
  if (q.is_zero()) throw std::domain_error("squarefree part of zero polynomial");
  SquarefreeResult<Rational> r;
  UniPoly<Rational> d = q.derivative();
  if (d.is_zero()) {
    r.squarefree = UniPoly<Rational>(Rational(1));
    r.is_separable = true;
    return r;
  }
  UniPoly<Rational> g = poly_gcd(q, d);
  r.is_separable = g.degree() == 0;
  r.squarefree = normalize_unit(exact_quotient(q, g));
  return r;
}

SquarefreeResult<Fp> squarefree_part(const UniPoly<Fp>& q) {
  if (q.is_zero()) throw std::domain_error("squarefree part of zero polynomial");
  SquarefreeResult<Fp> r;
  uint64_t p = field_modulus(q);
  if (q.degree() <= 0 || p == 0) {
    r.squarefree = UniPoly<Fp>(Fp(1));
    r.is_separable = true;
    return r;
  }
  UniPoly<Fp> d = q.derivative();
  r.is_separable = !d.is_zero() && poly_gcd(q, d).degree() == 0;
  UniPoly<Fp> rad(Fp::from_residue(1, p));
  for (auto& [g, m] : musser(q, p)) rad = rad * g;
  r.squarefree = normalize_unit(rad);
  // Over a perfect field every irreducible factor is separable, so this
  // records a genuine check rather than an assumption.
  UniPoly<Fp> rd = rad.derivative();
  r.inseparable_detected = rad.degree() > 0 && (rd.is_zero() || poly_gcd(rad, rd).degree() > 0);
  return r;
}

std::vector<std::pair<UniPoly<Rational>, int>> squarefree_decomposition(const UniPoly<Rational>& f) { return yun(f); }

std::vector<std::pair<UniPoly<Fp>, int>> squarefree_decomposition(const UniPoly<Fp>& f) {
  uint64_t p = field_modulus(f);
  if (p == 0) return {};
  return musser(f, p);
}

Factorization<Fp> factor_fp(const UniPoly<Fp>& f, uint64_t seed) {
  if (f.is_zero()) throw std::domain_error("factorization of zero polynomial");
  Factorization<Fp> res;
  res.unit = f.leading();
  uint64_t p = field_modulus(f);
  if (p == 0 || f.degree() <= 0) return res;
  std::mt19937_64 rng(seed);
  for (auto& [s, mult] : musser(f, p)) {
    // Distinct-degree split of the squarefree factor s.
    UniPoly<Fp> rest = s;
    UniPoly<Fp> xpoly = UniPoly<Fp>::monomial(Fp::from_residue(1, p), 1);
    UniPoly<Fp> h = xpoly % rest;
    std::vector<std::pair<UniPoly<Fp>, int>> parts;
    for (int i = 1; rest.degree() >= 2 * i; ++i) {
      h = powmod(h, integer_from_u64(p), rest);
      UniPoly<Fp> g = poly_gcd(rest, h - xpoly);
      if (g.degree() > 0) {
        parts.push_back({g, i});
        rest = exact_quotient(rest, g);
        h = h % rest;
      }
    }
    if (rest.degree() > 0) parts.push_back({monic(rest), rest.degree()});
    for (auto& [g, d] : parts) {
      std::vector<UniPoly<Fp>> irr;
      equal_degree(g, d, p, rng, irr);
      for (auto& q : irr) res.factors.push_back({q, mult});
    }
  }
  std::sort(res.factors.begin(), res.factors.end(), [](const auto& a, const auto& b) {
    if (a.first.degree() != b.first.degree()) return a.first.degree() < b.first.degree();
    for (int i = a.first.degree(); i >= 0; --i) {
      uint64_t x = a.first.coeff(i).value(), y = b.first.coeff(i).value();
      if (x != y) return x < y;
    }
    return a.second < b.second;
  });
  return res;
}

bool is_irreducible_fp(const UniPoly<Fp>& f) {
  if (f.degree() <= 0) return false;
  auto fac = factor_fp(f);
  return fac.factors.size() == 1 && fac.factors[0].second == 1;
}

std::vector<Rational> rational_roots(const UniPoly<Rational>& f) {
  std::vector<Rational> roots;
  if (f.degree() <= 0) return roots;
  // Primitive integer multiple.
  Integer l(1);
  for (const auto& c : f.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  std::vector<Integer> z;
  for (const auto& c : f.coeffs()) z.push_back(Integer(c.get_num() * (l / c.get_den())));
  std::size_t low = 0;
  while (z[low] == 0) ++low;
  if (low > 0) roots.push_back(Rational(0));
  std::vector<Integer> num_div, den_div;
  if (!divisors(z[low], num_div) || !divisors(z.back(), den_div))
    throw std::length_error("coefficients too large for rational root search");
  UniPoly<Rational> g = f;
  for (const auto& a : num_div)
    for (const auto& b : den_div)
      for (int s : {1, -1}) {
        Rational r = make_rational(Integer(a * s), b);
        if (std::find(roots.begin(), roots.end(), r) != roots.end()) continue;
        if (g(r) == 0) roots.push_back(r);
      }
  std::sort(roots.begin(), roots.end());
  return roots;
}

Factorization<Rational> factor_rational(const UniPoly<Rational>& f) {
  if (f.is_zero()) throw std::domain_error("factorization of zero polynomial");
  Factorization<Rational> res;
  res.unit = f.leading();
  for (auto& [s, mult] : yun(f)) {
    UniPoly<Rational> rest = s;
    for (const auto& r : rational_roots(s)) {
      UniPoly<Rational> lin(std::vector<Rational>{Rational(-r), Rational(1)});
      res.factors.push_back({lin, mult});
      rest = exact_quotient(rest, lin);
    }
    if (rest.degree() >= 4) res.complete = false;
    if (rest.degree() > 0) res.factors.push_back({monic(rest), mult});
  }
  return res;
}

}  // namespace cobalt
