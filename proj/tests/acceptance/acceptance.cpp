// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "cobalt/combinat/combinat.hpp"
#include "cobalt/gram/gram.hpp"
#include "cobalt/gram/relations.hpp"
#include "cobalt/io/parser.hpp"
#include "cobalt/io/reports.hpp"
#include "cobalt/realize/realize.hpp"
#include "cobalt/skein/skein.hpp"

using namespace cobalt;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << " [failed: " << what << "]";
    }
  }
};

GoldenTable golden(const std::string& name) { return load_golden(std::string(COBALT_DATA_DIR) + "/golden/" + name + ".json"); }

// Verifies rows n in [lo, hi] of a golden table in their stored modes.
void check_rows(Outcome& o, const std::string& name, int lo, int hi) {
  auto t = golden(name);
  for (int n = lo; n <= hi; ++n) {
    const ClaimRow* row = t.row(n);
    if (!row) {
      o.require(false, name + " has no row " + std::to_string(n));
      continue;
    }
    auto v = verify_golden_row(t, *row);
    o.require(v.verified, name + " n=" + std::to_string(n) + " (" + v.mode + ")");
    o.detail << " " << name << "[" << n << "]=" << (v.verified ? "ok" : "BAD") << "/" << v.mode;
  }
}

Outcome c1_rank_one() {
  Outcome o;
  check_rows(o, "rank1", 1, 6);
  return o;
}

Outcome c2_catalan() {
  Outcome o;
  auto one = parse_series("1", "1");
  for (int n = 1; n <= 7; ++n) {
    auto d = state_dim(n, one);
    o.require(Integer(static_cast<unsigned long>(d)) == catalan(n), "state_dim(" + std::to_string(n) + ")");
    o.detail << " " << d;
  }
  auto report = rank_exact_report(gram_matrix(enumerate_spanning(7, 1), one));
  o.require(report.rank == 429, "multi-modular rank at n=7");
  o.detail << " (n=7: 877 surfaces, " << report.modular_ranks.size() << " primes"
           << (report.escalated ? ", escalated" : "") << ")";
  return o;
}

Outcome c3_meander() {
  Outcome o;
  auto ry = make_ring({"y1", "y2"});
  for (int n = 1; n <= 4; ++n)
    o.require(det_fraction_free(meander_matrix_y(n, ry)) == meander_formula(n, ry), "formula at n=" + std::to_string(n));
  o.detail << " formula agrees n<=4;";
  auto rb = make_ring({"beta"});
  for (int n = 1; n <= 4; ++n) o.require(!det_fraction_free(meander_matrix(n, rb)).is_zero(), "D_n nonzero");
  // One nonzero value certifies a nonzero polynomial.
  o.require(det_fraction_free(specialize(meander_matrix(5, rb), {Rational(3)})) != 0, "D_5(3) nonzero");
  o.detail << " det D_n(beta) nonzero n<=5";
  return o;
}

Outcome c4_linear() {
  Outcome o;
  check_rows(o, "linear", 1, 5);
  auto t = golden("linear");
  auto z = t.series();
  for (int n = 1; n <= 4; ++n) {
    auto s = enumerate_Am(n, 1);
    auto det = gram_det(s, z);
    o.require(det.degree_in(0) == 0, "beta0 appears at n=" + std::to_string(n));
  }
  o.detail << "; beta0-free n<=4; conjectural predictors:";
  // Exponents of (b1 - s), s = 2, 3, 4, and of b1, for n = 1..7.
  const std::vector<std::vector<long>> table{
      {0, 1, 6, 27, 110, 435, 1722}, {0, 0, 0, 2, 20, 134, 756}, {0, 0, 0, 0, 0, 5, 70}};
  const std::vector<long> beta1{2, 8, 30, 113, 440, 1774, 7406};
  int matched = 0, total = 0;
  for (int n = 1; n <= 7; ++n)
    for (long s = 2; s <= 4; ++s) {
      auto p = linear_conjecture_predictors(n, s);
      o.require(p.conjectural, "predictor not flagged conjectural");
      ++total;
      if (p.exp_beta1_minus_s == table[static_cast<std::size_t>(s - 2)][static_cast<std::size_t>(n - 1)]) ++matched;
      if (s == 2) {
        ++total;
        if (p.exp_beta1 == beta1[static_cast<std::size_t>(n - 1)]) ++matched;
      }
    }
  o.require(matched == total, "predictor mismatch");
  o.detail << " " << matched << "/" << total << " match";
  return o;
}

Outcome c5_rank_two() {
  Outcome o;
  check_rows(o, "rank2-square", 2, 3);
  check_rows(o, "rank2-linear-numerator", 1, 3);
  check_rows(o, "rank2-split", 1, 3);
  // The (b0 gamma + b1) pattern: b0 gamma + b1 takes the place of beta in the square table.
  auto t = golden("rank2-linear-numerator"), sq = golden("rank2-square");
  for (int n = 1; n <= 3; ++n) {
    auto ring = t.ring();
    int lin = -1, beta = -1;
    for (const auto& [f, e] : t.row(n)->claim.factors)
      if (f == parse_multipoly("beta0*gamma + beta1", ring)) lin = e;
    for (const auto& [f, e] : sq.row(n)->claim.factors)
      if (f == parse_multipoly("beta", sq.ring())) beta = e;
    o.require(lin > 0 && lin == beta, "substitution pattern at n=" + std::to_string(n));
  }
  o.detail << "; (b0 gamma + b1) pattern n<=3";
  return o;
}

Outcome c6_polynomial() {
  Outcome o;
  check_rows(o, "quadratic", 1, 3);
  check_rows(o, "cubic", 1, 2);
  const std::vector<std::size_t> qd{3, 11, 46}, cd{4, 19};
  for (int n = 1; n <= 3; ++n) o.require(enumerate_Am(n, 2).size() == qd[static_cast<std::size_t>(n - 1)], "quadratic dim");
  for (int n = 1; n <= 2; ++n) o.require(enumerate_Am(n, 3).size() == cd[static_cast<std::size_t>(n - 1)], "cubic dim");
  o.detail << "; leading term:";
  for (int m = 1; m <= 2; ++m)
    for (int n = 1; n <= 3; ++n) {
      auto r = leading_term_check(n, m);
      o.require(r.holds, "leading term m=" + std::to_string(m) + " n=" + std::to_string(n));
      o.detail << " (" << m << "," << n << ")deg" << r.degree;
    }
  return o;
}

// Residues -p_i gamma_i for an irreducible quadratic denominator: Frobenius swaps
// them, so they lie in F_p iff they are equal to some c, iff alpha_{n+1} = c * s_n
// with s_n the power sums of the roots (Newton's identities).
bool quadratic_residues_in_prime_field(const RationalSeries<Rational>& z, uint64_t p) {
  const auto& Q = z.denominator();
  const uint64_t u1 = mod_u64(Q.coeff(1).get_num(), p), u0 = mod_u64(Q.coeff(2).get_num(), p);
  std::vector<uint64_t> s{2 % p, (p - u1) % p};
  for (int n = 2; n < 13; ++n) s.push_back(((p - u1) * s[n - 1] % p + (p - u0) * s[n - 2] % p) % p);
  auto a = reduce_mod_p(z, p).coefficients(14);
  for (uint64_t c = 0; c < p; ++c) {
    bool ok = true;
    for (int n = 0; n < 13 && ok; ++n) ok = a[n + 1].value() == c * s[n] % p;
    if (ok) return true;
  }
  return false;
}

Outcome c7_abelian() {
  Outcome o;
  auto timed = [&](const RationalSeries<Rational>& z, uint64_t p) {
    auto t0 = std::chrono::steady_clock::now();
    auto r = check_abelian(z, p);
    o.require(std::chrono::steady_clock::now() - t0 < std::chrono::seconds(1), "runtime over 1 s");
    return r.verdict;
  };
  auto fib = parse_series("1", "1 - T - T^2");
  auto lucas = parse_series("-1 + 3*T", "1 - T - T^2");
  o.require(timed(parse_series("1", "1 - 2*T + T^2"), 0) == Verdict::fails, "1/(1-T)^2");
  o.require(timed(fib, 0) == Verdict::admits, "Fibonacci char 0");
  o.require(timed(fib, 5) == Verdict::fails, "Fibonacci char 5");
  o.require(timed(fib, 11) == Verdict::admits, "Fibonacci char 11");
  for (uint64_t p : {0ULL, 2ULL, 3ULL, 5ULL, 7ULL}) o.require(timed(lucas, p) == Verdict::admits, "Lucas char " + std::to_string(p));
  // Characteristic 3: the stated expectation is "fails", but the residues are
  // gamma_i^2 / (gamma_i - gamma_j) = 1/2 + 3/(2 sqrt 5) = 2 in F_3, so the
  // series admits. Compared against the power-sum oracle instead.
  const bool oracle3 = quadratic_residues_in_prime_field(fib, 3);
  const Verdict v3 = timed(fib, 3);
  o.require(oracle3 && v3 == Verdict::admits, "Fibonacci char 3 vs residue oracle");
  // The oracle needs an irreducible denominator: p = 2 and 7, not 11.
  o.require(!quadratic_residues_in_prime_field(fib, 2) && !quadratic_residues_in_prime_field(fib, 7), "oracle sanity");
  o.require(timed(fib, 7) == Verdict::fails, "Fibonacci char 7");
  o.detail << " 1/(1-T)^2 fails; Fibonacci 0/5/11 admit/fail/admit (7 fails); Lucas admits at 0,2,3,5,7;"
           << " DEVIATION: Fibonacci char 3 computed '" << to_string(v3)
           << "' (stated 'fails'; independent residue oracle says residues lie in F_3)";
  return o;
}

Outcome c8_skein() {
  Outcome o;
  for (int K = 1; K <= 4; ++K) {
    auto a = build_symbolic_BS(K);
    o.require(a.dim() == K * K + K, "dim at K=" + std::to_string(K));
    o.require(a.is_associative(), "associativity at K=" + std::to_string(K));
  }
  auto ring = make_ring({"a0", "gamma"});
  auto a = build_BS(parse_series("a0", "1 - gamma*T", {"a0", "gamma"}));
  o.require(det_fraction_free(a.trace_gram()) == parse_multipoly("a0^2*(a0*gamma - 1)", ring), "K=1 trace Gram");
  std::mt19937_64 rng(20240611);
  int checked = 0;
  while (checked < 10) {
    Rational b0 = make_rational(static_cast<long>(rng() % 41) - 20, 1 + static_cast<long>(rng() % 7));
    Rational b1 = make_rational(static_cast<long>(rng() % 41) - 20, 1 + static_cast<long>(rng() % 5));
    if (b1 == 0 || b1 == 2) continue;
    auto r = verify_mat2_split(b0, b1);
    o.require(r.holds(), "Mat2 split at b0=" + b0.get_str() + " b1=" + b1.get_str());
    ++checked;
  }
  o.detail << " dims 2,6,12,20 associative; a0^2(a0 gamma-1); Mat2 x k at 10 random points";
  return o;
}

Outcome c9_negligible() {
  Outcome o;
  for (const auto& r : known_relations()) {
    bool ok = verify_negligible(r.vector, r.z);
    o.require(ok, r.name);
    o.detail << " [" << r.name << ": " << r.vector.terms.size() << " terms " << (ok ? "ok" : "BAD") << "]";
  }
  return o;
}

Outcome c10_properties() {
  Outcome o;
  // Scaling by lambda = mu^2: G' = D G D with D = diag(mu^{-chi}).
  struct Case {
    const char *num, *den;
    int K, max_n;
  };
  for (auto c : {Case{"2", "1 - 3*T", 1, 4}, Case{"1 + T", "1 - T - T^2", 2, 3}})
    for (Rational mu : {Rational(2), make_rational(1, 3)}) {
      auto z = parse_series(c.num, c.den);
      auto zs = scale(z, Rational(mu * mu));
      for (int n = 1; n <= 4; ++n) o.require(state_dim(n, z) == state_dim(n, zs), "rank invariance");
      for (int n = 1; n <= c.max_n; ++n) {
        auto s = enumerate_spanning(n, c.K);
        long chi = 0;
        for (const auto& x : s) chi += x.euler_characteristic();
        o.require(det_fraction_free(gram_matrix(s, zs)) == det_fraction_free(gram_matrix(s, z)) * rational_pow(mu, -2 * chi),
                  "det scaling law");
      }
    }
  o.detail << " scaling ok;";
  // Partial fractions recombine to the series.
  for (auto [num, den] : std::vector<std::pair<const char*, const char*>>{
           {"1", "1 - T - T^2"}, {"T^3 + 1", "1 - 3*T + 2*T^2"}, {"2 - T", "(1 - T)^2*(1 + 2*T)"}, {"1 + T^4", "1 - T^2"}}) {
    auto z = parse_series(num, den);
    auto back = partial_fractions(z).recombine();
    o.require(back.numerator() == z.numerator() && back.denominator() == z.denominator(), std::string("partial fractions of ") + num);
  }
  o.detail << " partial fractions ok;";
  // Hadamard product of two geometric series.
  std::mt19937_64 rng(7);
  for (int i = 0; i < 10; ++i) {
    auto r = [&] { return make_rational(static_cast<long>(rng() % 19) - 9, 1 + static_cast<long>(rng() % 4)); };
    Rational b1 = r(), g1 = r(), b2 = r(), g2 = r();
    if (b1 == 0 || b2 == 0) continue;
    auto geo = [](Rational b, Rational g) {
      return normalize(UniPoly<Rational>(b), UniPoly<Rational>(std::vector<Rational>{Rational(1), Rational(-g)}));
    };
    auto h = hadamard(geo(b1, g1), geo(b2, g2));
    auto e = geo(b1 * b2, g1 * g2);
    o.require(h.numerator() == e.numerator() && h.denominator() == e.denominator(), "Hadamard closed form");
  }
  o.detail << " Hadamard ok;";
  // chi of the closed surface equals chi(a) + chi(b).
  std::size_t pairs = 0;
  for (int n = 0; n <= 4; ++n)
    for (int K = 1; K <= 3; ++K) {
      auto s = enumerate_spanning(n, K);
      for (const auto& a : s)
        for (const auto& b : s) {
          int chi = 0;
          for (int g : glue(a, b).component_genera) chi += 2 - 2 * g;
          if (chi != a.euler_characteristic() + b.euler_characteristic()) o.require(false, "glue Euler characteristic");
          ++pairs;
        }
    }
  o.detail << " glue Euler ok on " << pairs << " pairs;";
  for (int n = 1; n <= 8; ++n) {
    Integer sum = 0;
    for (int k = 1; k <= n; ++k) sum += narayana(n, k);
    o.require(sum == catalan(n), "Narayana row sum");
  }
  o.detail << " Narayana ok";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"rank-one determinants (n<=4 exact, 5-6 PIT)", c1_rank_one},
      {"constant theory dimensions are Catalan (n<=7)", c2_catalan},
      {"meander determinant formula", c3_meander},
      {"linear theory determinants and predictors", c4_linear},
      {"rank-two determinant tables", c5_rank_two},
      {"quadratic and cubic determinant tables", c6_polynomial},
      {"abelian realization verdicts", c7_abelian},
      {"skein algebra B_S", c8_skein},
      {"negligible relations", c9_negligible},
      {"property suites", c10_properties},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail << " [exception: " << e.what() << "]";
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (!o.pass) ++failures;
    std::cout << (o.pass ? "PASS " : "FAIL ") << (i + 1) << ": " << criteria[i].first << " -" << o.detail.str() << " ("
              << std::fixed;
    std::cout.precision(1);
    std::cout << secs << " s)" << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
