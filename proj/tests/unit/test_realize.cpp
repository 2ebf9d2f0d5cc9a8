#include <doctest.h>

#include <random>

#include "cobalt/io/parser.hpp"
#include "cobalt/realize/realize.hpp"

using namespace cobalt;

namespace {

RationalSeries<Rational> series(const std::string& num, const std::string& den) { return parse_series(num, den); }

UniPoly<Fp> fp(std::vector<long long> c, uint64_t p) {
  std::vector<Fp> r;
  for (auto v : c) r.emplace_back(v, p);
  return UniPoly<Fp>(r);
}

// Oracle for a proper Z with irreducible quadratic Q over F_p. If the two conjugate
// residues -p_i gamma_i lie in F_p they are equal (Frobenius swaps them), say -c, and
// then alpha_{n+1} = c (gamma_1^n + gamma_2^n). The power sums come from Newton's
// identities, so the test is independent of quotient-ring arithmetic.
bool quadratic_condition4_oracle(const RationalSeries<Rational>& z, uint64_t p) {
  const auto& Q = z.denominator();
  // U(x) = x^2 + u1 x + u0 has roots gamma_i.
  const long long u1 = static_cast<long long>(mod_u64(Q.coeff(1).get_num(), p));
  const long long u0 = static_cast<long long>(mod_u64(Q.coeff(2).get_num(), p));
  std::vector<long long> s{2 % static_cast<long long>(p), (static_cast<long long>(p) - u1) % static_cast<long long>(p)};
  const auto zp = reduce_mod_p(z, p);
  auto a = zp.coefficients(14);
  for (int n = 2; n < 13; ++n)
    s.push_back(((p - u1) * s[n - 1] % p + (p - u0) * s[n - 2] % p) % p);
  for (uint64_t c = 0; c < p; ++c) {
    bool ok = true;
    for (int n = 0; n < 13 && ok; ++n) ok = a[n + 1].value() == (c * static_cast<uint64_t>(s[n])) % p;
    if (ok) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("residues of a geometric series") {
  auto z = series("3", "1 - 5*T");
  auto r = residues(z, {UniPoly<Rational>(std::vector<Rational>{make_rational(-1, 5), Rational(1)})});
  REQUIRE(r.poles.size() == 1);
  CHECK(r.poles[0].value.representative() == UniPoly<Rational>(Rational(-15)));
  CHECK(r.at_zero == 15);
  CHECK(r.at_infinity == 0);
  CHECK(r.sum_zero);
}

TEST_CASE("residue at zero is alpha_1 and residues sum to zero") {
  auto z = series("2 - T + 4*T^2 + T^3", "1 - 3*T + 2*T^2");
  auto rep = check_abelian(z);
  REQUIRE(rep.residue_sum_zero.has_value());
  CHECK(*rep.residue_sum_zero);
  bool saw_zero = false;
  for (const auto& e : rep.residues)
    if (e.pole == "0") {
      saw_zero = true;
      CHECK(e.value == z.coefficients(1)[1].get_str());
    }
  CHECK(saw_zero);
  // Over F_p with a split denominator as well.
  for (uint64_t p : {7ULL, 11ULL, 13ULL}) {
    auto zp = reduce_mod_p(series("1 + 2*T", "1 - 3*T - T^2"), p);
    auto r = check_abelian(zp);
    if (r.residue_sum_zero) CHECK(*r.residue_sum_zero);
  }
}

TEST_CASE("check_abelian examples") {
  auto sq = check_abelian(series("1", "1 - 2*T + T^2"));
  CHECK(sq.cond_separable == Tri::no);
  CHECK(sq.verdict == Verdict::fails);
  CHECK_FALSE(sq.witnesses.empty());

  auto fib = series("1", "1 - T - T^2");
  CHECK(check_abelian(fib).verdict == Verdict::admits);
  auto f5 = check_abelian(fib, 5);
  CHECK(f5.cond_separable == Tri::no);
  CHECK(f5.verdict == Verdict::fails);
  auto f11 = check_abelian(fib, 11);
  CHECK(f11.verdict == Verdict::admits);
  CHECK(f11.cond_residues == Tri::yes);

  auto deg = check_abelian(series("T^3", "1 - T"));
  CHECK_FALSE(deg.cond_degree);
  CHECK(deg.verdict == Verdict::fails);
  CHECK(check_abelian(series("T^2", "1 - T")).cond_degree);

  CHECK_THROWS_AS(check_abelian(fib, 9), std::invalid_argument);
  CHECK_THROWS_AS(check_abelian(series("1", "1 - 1/7*T"), 7), std::invalid_argument);
}

TEST_CASE("Fibonacci in small characteristics") {
  auto fib = series("1", "1 - T - T^2");
  // Characteristic 3: 1 - T - T^2 is irreducible, yet both residues equal 1.
  auto f3 = check_abelian(fib, 3);
  CHECK(f3.cond_separable == Tri::yes);
  CHECK(f3.cond_residues == Tri::yes);
  CHECK(f3.verdict == Verdict::admits);
  CHECK(quadratic_condition4_oracle(fib, 3));
  // Characteristic 2: the residue is a generator of F_4, not in F_2.
  auto f2 = check_abelian(fib, 2);
  CHECK(f2.cond_residues == Tri::no);
  CHECK(f2.verdict == Verdict::fails);
  CHECK_FALSE(quadratic_condition4_oracle(fib, 2));
  for (uint64_t p : {7ULL, 13ULL, 17ULL, 23ULL}) {
    auto r = check_abelian(fib, p);
    CHECK((r.cond_residues == Tri::yes) == quadratic_condition4_oracle(fib, p));
  }
}

TEST_CASE("shifted Lucas series admits in every characteristic") {
  auto lucas = series("-1 + 3*T", "1 - T - T^2");
  auto c = lucas.coefficients(5);
  CHECK(c == std::vector<Rational>{-1, 2, 1, 3, 4, 7});
  CHECK(check_abelian(lucas).verdict == Verdict::admits);
  // Mod 5 the denominator is (1 + 2T)^2 but the numerator cancels one factor.
  for (uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL}) {
    auto r = check_abelian(lucas, p);
    CHECK(r.verdict == Verdict::admits);
    for (const auto& e : r.residues) CHECK(e.in_prime_field);
  }
  CHECK(reduce_mod_p(lucas, 5).denominator().degree() == 1);
}

TEST_CASE("quotient-ring residue membership") {
  auto f = fp({1, 0, 1}, 5);
  CHECK(qr_in_prime_field(QuotientRingElement<Fp>(fp({3}, 5), f)));
  CHECK_FALSE(qr_in_prime_field(QuotientRingElement<Fp>(fp({0, 1}, 5), f)));
}

TEST_CASE("verdict is invariant under scaling by squares") {
  std::mt19937_64 rng(53);
  const std::vector<uint64_t> primes{3, 5, 7, 11, 13};
  int checked = 0;
  while (checked < 20) {
    uint64_t p = primes[rng() % primes.size()];
    std::vector<long long> num(1 + rng() % 3), den(1 + rng() % 3);
    for (auto& v : num) v = static_cast<long long>(rng() % p);
    for (auto& v : den) v = static_cast<long long>(rng() % p);
    den[0] = 1;
    RationalSeries<Fp> z;
    try {
      z = normalize(fp(num, p), fp(den, p));
    } catch (const std::exception&) {
      continue;
    }
    if (z.is_zero()) continue;
    long long mu = 1 + static_cast<long long>(rng() % (p - 1));
    Fp lam(mu * mu, p);
    auto a = check_abelian(z), b = check_abelian(scale(z, lam));
    CHECK(a.verdict == b.verdict);
    CHECK(a.cond_separable == b.cond_separable);
    CHECK(a.cond_degree == b.cond_degree);
    CHECK(a.cond_residues == b.cond_residues);
    ++checked;
  }
}

TEST_CASE("sums of geometric terms with prime-field data admit") {
  std::mt19937_64 rng(59);
  const std::vector<uint64_t> primes{5, 7, 11, 13, 101};
  for (int trial = 0; trial < 50; ++trial) {
    uint64_t p = primes[static_cast<std::size_t>(trial) % primes.size()];
    std::size_t l = 1 + rng() % 3;
    std::vector<long long> gammas;
    while (gammas.size() < l) {
      long long g = 1 + static_cast<long long>(rng() % (p - 1));
      if (std::find(gammas.begin(), gammas.end(), g) == gammas.end()) gammas.push_back(g);
    }
    RationalSeries<Fp> z = normalize(fp({static_cast<long long>(rng() % p), static_cast<long long>(rng() % p)}, p), fp({1}, p));
    for (long long g : gammas) {
      long long pi = 1 + static_cast<long long>(rng() % (p - 1));
      z = add(z, normalize(fp({pi}, p), fp({1, -g}, p)));
    }
    auto r = check_abelian(z);
    CHECK(r.verdict == Verdict::admits);
  }
  // The same shape over Q.
  auto zq = add(add(series("2", "1 - 3*T"), series("-5", "1 + 2*T")), series("1 + 4*T", "1"));
  CHECK(check_abelian(zq).verdict == Verdict::admits);
}

TEST_CASE("report strings") {
  CHECK(to_string(Verdict::admits) == "admits");
  CHECK(to_string(Tri::undetermined) == "undetermined");
}
