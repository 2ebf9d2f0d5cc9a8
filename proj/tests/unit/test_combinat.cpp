#include <doctest.h>

#include "cobalt/combinat/combinat.hpp"
#include "cobalt/genfun/series.hpp"
#include "cobalt/gram/gram.hpp"
#include "cobalt/surf/surface.hpp"

using namespace cobalt;

namespace {

Integer binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

Integer factorial(int n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

// Taylor coefficients of exp(f) for f(0) = 0, from n g_n = sum_j j f_j g_{n-j}.
std::vector<Rational> exp_series(const std::vector<Rational>& f) {
  std::vector<Rational> g(f.size());
  g[0] = 1;
  for (std::size_t n = 1; n < f.size(); ++n) {
    Rational acc = 0;
    for (std::size_t j = 1; j <= n; ++j) acc += Rational(static_cast<long>(j)) * f[j] * g[n - j];
    g[n] = acc / Rational(static_cast<long>(n));
  }
  return g;
}

// Exponent of (beta*gamma - k) in the rank-one determinant, n = 1..5, k = 1..4.
const int kTableExp[6][5] = {{}, {0}, {0, 1}, {0, 4, 1}, {0, 14, 7, 1}, {0, 51, 36, 11, 1}};

}  // namespace

TEST_CASE("small values") {
  CHECK(bell(4) == 15);
  CHECK(catalan(7) == 429);
  CHECK(generalized_bell(3, 2) == 22);
  CHECK(stirling2(5, 2) == 15);
  CHECK(bell(0) == 1);
  CHECK(catalan(0) == 1);
  CHECK(narayana(4, 2) == 6);
  CHECK_THROWS_AS(narayana(3, 0), std::invalid_argument);
  CHECK_THROWS_AS(narayana(3, 4), std::invalid_argument);
}

TEST_CASE("generalized Bell numbers") {
  for (int n = 0; n <= 15; ++n) CHECK(generalized_bell(n, 1) == bell(n));
  const int N = 13;
  for (int k = 1; k <= 4; ++k) {
    std::vector<Rational> f(N);
    for (int j = 1; j < N; ++j) f[j] = Rational(k) / Rational(factorial(j));
    auto g = exp_series(f);
    for (int n = 0; n < N; ++n) CHECK(Rational(generalized_bell(n, k)) == g[n] * Rational(factorial(n)));
  }
}

TEST_CASE("Catalan and Narayana") {
  for (int n = 0; n <= 12; ++n) CHECK(catalan(n) * (n + 1) == binom(2 * n, n));
  for (int n = 1; n <= 12; ++n) {
    Integer sum = 0;
    for (int k = 1; k <= n; ++k) sum += narayana(n, k);
    CHECK(sum == catalan(n));
  }
}

TEST_CASE("c_{n,h} and the alternating binomial identity") {
  for (int n = 1; n <= 12; ++n) {
    Integer alt = 0;
    for (int i = 1; i <= n; ++i) alt += (i % 2 == 1 ? 1 : -1) * binom(2 * n, n - i);
    CHECK(binom(2 * n, n) == 2 * alt);
    CHECK(c_nh(n, 0) == catalan(n));
    CHECK(c_nh(n, n) == 1);
    CHECK(c_nh(n, n + 1) == 0);
    // Every crossingless matching pairs with the adjacent one in some number of circles.
    Integer total = 0;
    for (int h = 0; h <= n; ++h) total += c_nh(n, h);
    CHECK(total == binom(2 * n, n));
  }
}

TEST_CASE("the a sequence") {
  CHECK(a_seq(4) == 43);
  CHECK(a_seq(7) == 1850);
  CHECK(a_seq(0) == 1);
  CHECK(a_seq(1) == 2);
  for (int n = 0; n <= 12; ++n) CHECK(a_seq(n) == a_seq_closed(n));
  for (int n = 0; n <= 9; ++n) CHECK(a_seq(n) == Integer(static_cast<unsigned long>(enumerate_Am(n, 1).size())));
  // EGF exp(2u + u^2/2).
  std::vector<Rational> f(13);
  f[1] = 2;
  f[2] = make_rational(1, 2);
  auto g = exp_series(f);
  for (int n = 0; n <= 12; ++n) CHECK(Rational(a_seq(n)) == g[n] * Rational(factorial(n)));
}

TEST_CASE("component counts d_n^(m)") {
  CHECK(d_nm(2, 1) == 9);
  CHECK(d_nm(3, 1) == 36);
  for (int m = 1; m <= 4; ++m) CHECK(d_nm(1, m) == m + 1);
  for (int n = 1; n <= 8; ++n) CHECK(d_nm(n, 1) == d_n_closed(n));
  // EGF (sum_g (g+1) t^{m+1-g}/(m+1-g)!) exp(same).
  for (int m = 1; m <= 3; ++m) {
    const int N = 8;
    std::vector<Rational> f(N);
    for (int g = 0; g <= m; ++g)
      if (m + 1 - g < N) f[m + 1 - g] = Rational(g + 1) / Rational(factorial(m + 1 - g));
    auto e = exp_series(f);
    for (int n = 1; n < N - 1; ++n) {
      Rational c = 0;
      for (int j = 0; j <= n; ++j) c += f[j] * e[n - j];
      if (n <= 6) CHECK(Rational(d_nm(n, m)) == c * Rational(factorial(n)));
      CHECK(Rational(static_cast<long>(enumerate_Am(n, m).size())) == e[n] * Rational(factorial(n)));
    }
  }
}

TEST_CASE("invariant dimensions") {
  for (int n = 1; n <= 8; ++n) CHECK(sym_invariant_dim(1, n) == 1);
  CHECK(sym_invariant_dim(2, 3) == 4);
  CHECK(sym_invariant_dim(3, 4) == 14);
  for (int n = 1; n <= 8; ++n) {
    Integer p2 = 1;
    for (int i = 1; i < n; ++i) p2 *= 2;
    CHECK(sym_invariant_dim(2, n) == p2);
    // For k >= n every set partition gives an invariant.
    CHECK(sym_invariant_dim(n, n) == bell(n));
  }
  for (int n = 1; n <= 5; ++n)
    for (int k = 1; k <= n - 1; ++k) {
      CAPTURE(n);
      CAPTURE(k);
      CHECK(sym_invariant_dim(k, n) + kTableExp[n][k] == bell(n));
      // At beta*gamma = k the rank of the Gram matrix is the invariant dimension.
      auto z = normalize(UniPoly<Rational>(Rational(k)), UniPoly<Rational>(std::vector<Rational>{Rational(1), Rational(-1)}));
      CHECK(Integer(static_cast<unsigned long>(gram_rank(enumerate_spanning(n, 1), z))) == sym_invariant_dim(k, n));
    }
}

TEST_CASE("linear conjecture predictors") {
  auto p2 = linear_conjecture_predictors(2, 2);
  CHECK(p2.conjectural);
  CHECK(p2.exp_beta1 == 8);
  CHECK(p2.exp_beta1_minus_s == 1);
  CHECK(linear_conjecture_predictors(3, 2).exp_beta1_minus_s == 6);
  CHECK(linear_conjecture_predictors(3, 2).dim_at_s == 8);
  auto p43 = linear_conjecture_predictors(4, 3);
  CHECK(p43.exp_beta1_minus_s == 2);
  CHECK(p43.dim_at_s == 41);
  const std::vector<long> beta1{2, 8, 30, 113, 440, 1774, 7406};
  for (int n = 1; n <= 6; ++n) {
    CHECK(linear_conjecture_predictors(n, 2).exp_beta1 == beta1[n - 1]);
    // dim A(n) = 2^n at b1 = 2 and (3^n + 1)/2 at b1 = 3.
    CHECK(linear_conjecture_predictors(n, 2).dim_at_s == (1u << n));
    Integer p3 = 1;
    for (int i = 0; i < n; ++i) p3 *= 3;
    CHECK(Integer(static_cast<unsigned long>(linear_conjecture_predictors(n, 3).dim_at_s)) == (p3 + 1) / 2);
  }
  CHECK_THROWS_AS(linear_conjecture_predictors(2, 0), std::invalid_argument);
}

TEST_CASE("sequence tables") {
  auto t = sequence_table("catalan", 7);
  CHECK(t.values.size() == 8);
  CHECK(t.values.back() == 429);
  CHECK(t.definition == SequenceDefinition::closed_form);
  CHECK(sequence_table("a", 4).values == std::vector<Integer>{1, 2, 5, 14, 43});
  CHECK(sequence_table("a", 4).definition == SequenceDefinition::recurrence);
  CHECK(sequence_table("bell2", 3).values.back() == 22);
  CHECK_THROWS_AS(sequence_table("fib", 3), std::invalid_argument);
}
