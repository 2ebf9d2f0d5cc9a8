#include <doctest.h>

#include <random>

#include "cobalt/combinat/combinat.hpp"
#include "cobalt/gram/gram.hpp"
#include "cobalt/gram/relations.hpp"
#include "cobalt/io/parser.hpp"

using namespace cobalt;

namespace {

const std::vector<std::string> BG{"beta", "gamma"};

RationalSeries<MultiPoly> geometric() { return parse_series("beta", "1 - gamma*T", BG); }

MultiPoly poly(const std::string& text, const RingPtr& ring) { return parse_multipoly(text, ring); }

FactoredClaim claim(int sign, std::vector<std::pair<std::string, int>> f, const RingPtr& ring) {
  FactoredClaim c;
  c.sign = sign;
  for (auto& [t, e] : f) c.factors.push_back({poly(t, ring), e});
  return c;
}

Matrix<MultiPoly> y_matrix(int n, const RingPtr& ring) { return meander_matrix_y(n, ring); }

}  // namespace

TEST_CASE("pairing") {
  auto ring = make_ring(BG);
  auto d2 = DecoratedSurface::disks(2), t = parse_surface("{1,2}");
  CHECK(pairing(d2, d2, geometric()) == poly("beta^2", ring));
  CHECK(pairing(t, t, parse_series("beta", "1", {"beta"})).is_zero());
  auto g1 = parse_surface("{1:g1}");
  CHECK(pairing(g1, g1, parse_series("beta0 + beta1*T", "1", {"beta0", "beta1"})).is_zero());
  CHECK_THROWS_AS(pairing(d2, DecoratedSurface::disks(3), geometric()), std::invalid_argument);
}

TEST_CASE("gram_matrix") {
  auto ring = make_ring(BG);
  auto g = gram_matrix(enumerate_spanning(2, 1), geometric());
  REQUIRE(g.rows() == 2);
  // enumeration order puts the tube {1,2} first
  CHECK(g(0, 0) == poly("beta*gamma", ring));
  CHECK(g(0, 1) == poly("beta", ring));
  CHECK(g(1, 0) == poly("beta", ring));
  CHECK(g(1, 1) == poly("beta^2", ring));
  CHECK(det_fraction_free(g) == poly("beta^2*(beta*gamma - 1)", ring));

  auto e = gram_matrix(std::vector<DecoratedSurface>{}, geometric());
  CHECK(e.rows() == 0);
  CHECK(det_fraction_free(e) == MultiPoly(1));

  auto c = gram_matrix(enumerate_crossingless(2), parse_series("beta", "1", {"beta"}));
  auto rb = make_ring({"beta"});
  CHECK(c(0, 0).is_zero());
  CHECK(c(0, 1) == poly("beta", rb));
  CHECK(c(1, 1) == poly("beta^2", rb));
}

TEST_CASE("gram matrices are symmetric") {
  CHECK(is_symmetric(gram_matrix(enumerate_spanning(3, 2), parse_series("beta0 + beta1*T", "1", {"beta0", "beta1"}))));
  CHECK(is_symmetric(gram_matrix(enumerate_Am(4, 1), parse_series("1 + 3*T", "1"))));
  CHECK(is_symmetric(gram_matrix(enumerate_crossingless(5), parse_series("2", "1"))));
  CHECK(is_symmetric(gram_matrix(enumerate_spanning(3, 2), parse_series("beta", "(1 - gamma*T)^2", BG))));
}

TEST_CASE("state_dim") {
  CHECK(state_dim(4, parse_series("1", "1")) == 14);
  CHECK(state_dim(4, parse_series("3", "1 - 5*T")) == 15);
  CHECK(state_dim(3, parse_series("1 + 7*T", "1")) == 14);
  for (int n = 0; n <= 6; ++n) CHECK(Integer(static_cast<unsigned long>(state_dim(n, parse_series("1", "1")))) == catalan(n));
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 5; ++trial) {
    Rational b = make_rational(static_cast<long>(rng() % 200) + 3, static_cast<long>(rng() % 13) + 1);
    Rational g = make_rational(static_cast<long>(rng() % 200) + 5, static_cast<long>(rng() % 11) + 1);
    auto z = normalize(UniPoly<Rational>(b), UniPoly<Rational>(std::vector<Rational>{Rational(1), Rational(-g)}));
    for (int n = 1; n <= 6; ++n) CHECK(Integer(static_cast<unsigned long>(state_dim(n, z))) == bell(n));
  }
}

TEST_CASE("gram_det") {
  auto ring = make_ring(BG);
  auto z = geometric();
  CHECK(gram_det(enumerate_spanning(3, 1), z) == poly("beta^5*(beta*gamma - 1)^4*(beta*gamma - 2)", ring));
  auto rl = make_ring({"beta0", "beta1"});
  CHECK(gram_det(enumerate_Am(2, 1), parse_series("beta0 + beta1*T", "1", {"beta0", "beta1"})) ==
        poly("(beta1 - 2)*beta1^8", rl));
  CHECK(gram_det(enumerate_spanning(2, 2), parse_series("beta", "(1 - gamma*T)^2", BG)) ==
        poly("-beta^10*gamma^12", ring));
  GramDetOptions small;
  small.size_limit = 10;
  CHECK_THROWS_AS(gram_det(enumerate_spanning(3, 2), parse_series("beta", "(1 - gamma*T)^2", BG), small),
                  std::length_error);
}

TEST_CASE("determinant engines agree") {
  auto z = parse_series("beta0 + beta1*T", "1", {"beta0", "beta1"});
  auto s = enumerate_Am(3, 1);
  GramDetOptions a, b;
  a.engine = DetEngine::bareiss;
  b.engine = DetEngine::interpolation;
  CHECK(gram_det(s, z, a) == gram_det(s, z, b));
  auto w = scaling_weights(geometric(), 6);
  REQUIRE(w.has_value());
  // alpha_g = beta gamma^g has weight proportional to g - 1
  CHECK((*w)[0] == -(*w)[1]);
}

TEST_CASE("verify_factorization") {
  auto ring = make_ring(BG);
  auto s4 = enumerate_spanning(4, 1);
  auto good = claim(1, {{"beta", 15}, {"gamma", 1}, {"beta*gamma - 1", 14}, {"beta*gamma - 2", 7}, {"beta*gamma - 3", 1}}, ring);
  auto r = verify_factorization(good, s4, geometric());
  CHECK(r.verified);
  CHECK(r.mode == "exact");
  CHECK_FALSE(r.probabilistic);
  auto bad = good;
  bad.factors[2].second = 13;
  CHECK_FALSE(verify_factorization(bad, s4, geometric()).verified);

  VerifyOptions pit;
  pit.mode = VerifyMode::pit;
  auto p = verify_factorization(good, s4, geometric(), pit);
  CHECK(p.verified);
  CHECK(p.probabilistic);
  CHECK(p.points.size() == 5);
  CHECK_FALSE(verify_factorization(bad, s4, geometric(), pit).verified);
  auto negated = good;
  negated.sign = -1;
  CHECK_FALSE(verify_factorization(negated, s4, geometric(), pit).verified);
}

TEST_CASE("PIT points are seeded and nonzero") {
  auto a = pit_points(3, 4, 99), b = pit_points(3, 4, 99), c = pit_points(3, 4, 100);
  CHECK(a == b);
  CHECK_FALSE(a == c);
  for (const auto& pt : a)
    for (const auto& v : pt) {
      CHECK(v != 0);
      CHECK(v.get_den() == 1);
      CHECK(abs(v) <= 65536);
    }
}

TEST_CASE("det_multimodular matches Bareiss") {
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 10; ++trial) {
    int n = 1 + static_cast<int>(rng() % 12);
    Matrix<Integer> m(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m(i, j) = Integer(static_cast<long>(rng() % 2000001) - 1000000) * Integer(1000003);
    CHECK(det_multimodular(m) == det_fraction_free(m));
  }
}

TEST_CASE("meander matrix") {
  auto rb = make_ring({"beta"});
  auto m2 = meander_matrix(2, rb);
  CHECK(m2 == gram_matrix(enumerate_crossingless(2), parse_series("beta", "1", {"beta"})));
  auto m1 = meander_matrix(1, rb);
  REQUIRE(m1.rows() == 1);
  CHECK(m1(0, 0) == poly("beta", rb));
  for (int n = 1; n <= 5; ++n) {
    auto m = meander_matrix(n, rb);
    auto g = gram_matrix(enumerate_crossingless(n), parse_series("beta", "1", {"beta"}));
    CHECK(det_fraction_free(m) == gram_det(enumerate_crossingless(n), parse_series("beta", "1", {"beta"})));
    CHECK(m == g);
    // The adjacent-pairs matching meets itself in n unnested circles.
    auto idx = static_cast<Eigen::Index>(enumerate_matchings(n).size() - 1);
    CHECK(m(idx, idx) == pow(poly("beta", rb), static_cast<unsigned>(n)));
  }
}

TEST_CASE("meander formula") {
  CHECK(c_nh(4, 1) == 28);
  CHECK(chebyshev_u(2) == UniPoly<Rational>(std::vector<Rational>{Rational(-1), Rational(0), Rational(1)}));
  CHECK(chebyshev_u(0) == UniPoly<Rational>(Rational(1)));
  auto ry = make_ring({"y1", "y2"});
  for (int n = 1; n <= 3; ++n) CHECK(meander_formula(n, ry) == det_fraction_free(y_matrix(n, ry)));
  auto m2 = y_matrix(2, ry);
  CHECK(det_cofactor(m2) == meander_formula(2, ry));
}

TEST_CASE("graded_dimension") {
  CHECK(graded_dimension(3) == std::vector<std::size_t>{1, 3, 1});
  CHECK(graded_dimension(1) == std::vector<std::size_t>{1});
  for (int n = 1; n <= 8; ++n) {
    auto d = graded_dimension(n);
    Integer total = 0;
    for (std::size_t k = 0; k < d.size(); ++k) {
      CHECK(Integer(static_cast<unsigned long>(d[k])) == narayana(n, n - static_cast<int>(k)));
      total += static_cast<unsigned long>(d[k]);
    }
    CHECK(total == catalan(n));
  }
}

TEST_CASE("negligible vectors") {
  auto rb = make_ring({"beta"});
  auto zc = parse_series("beta", "1", {"beta"});
  SurfaceVector<MultiPoly> v;
  for (auto t : {"{1,2}{3,4}", "{1,3}{2,4}", "{1,4}{2,3}"}) v.add(parse_surface(t), MultiPoly(1));
  for (auto t : {"{1,2,3}{4}", "{1,2,4}{3}", "{1,3,4}{2}", "{1}{2,3,4}"}) v.add(parse_surface(t), MultiPoly(-1));
  v.add(parse_surface("{1,2,3,4}"), poly("beta", rb));
  CHECK(verify_negligible(v, zc));
  auto broken = v;
  broken.terms.pop_back();
  CHECK_FALSE(verify_negligible(broken, zc));

  auto rl = make_ring({"beta0", "beta1"});
  auto zl = parse_series("beta0 + beta1*T", "1", {"beta0", "beta1"});
  SurfaceVector<MultiPoly> w;
  w.add(parse_surface("{1:g1}{2:g1}"), MultiPoly(1));
  w.add(parse_surface("{1,2:g1}"), -poly("beta1", rl));
  CHECK(verify_negligible(w, zl));
  // With 1/beta1 in place of beta1 the pairing with two disks is beta1^2 - 1.
  auto zn = parse_series("1 + 3*T", "1");
  SurfaceVector<Rational> u;
  u.add(parse_surface("{1:g1}{2:g1}"), Rational(1));
  u.add(parse_surface("{1,2:g1}"), make_rational(-1, 3));
  CHECK_FALSE(verify_negligible(u, zn));

  CHECK(verify_negligible(SurfaceVector<MultiPoly>{}, zc));
}

TEST_CASE("Gram kernel vectors are negligible") {
  auto z = parse_series("1 + 7*T", "1");
  auto s = enumerate_spanning(3, 2);
  auto g = gram_matrix(s, z);
  auto ker = nullspace(g);
  CHECK(ker.cols() == static_cast<Eigen::Index>(s.size()) - 14);
  for (Eigen::Index c = 0; c < ker.cols(); ++c) {
    SurfaceVector<Rational> v;
    for (Eigen::Index i = 0; i < ker.rows(); ++i)
      if (ker(i, c) != 0) v.add(s[static_cast<std::size_t>(i)], ker(i, c));
    CHECK(verify_negligible(v, z));
  }
}

TEST_CASE("rescaling Z acts on the Gram matrix by a diagonal congruence") {
  // Z' = lambda^{-1} Z(lambda T) with lambda = mu^2 gives alpha'_g = mu^{2g-2} alpha_g, so
  // G'_{ij} = mu^{-chi_i - chi_j} G_{ij}. Clearing mu^{2n}: mu^{2n} G' = D G D with D = diag(mu^{deg S}).
  auto ring = make_ring({"beta", "gamma", "mu"});
  auto z = parse_series("beta", "1 - gamma*T", {"beta", "gamma", "mu"});
  auto mu = MultiPoly::variable(ring, 2);
  for (int n = 1; n <= 4; ++n) {
    auto s = enumerate_spanning(n, 1);
    auto alphas = z.coefficients(static_cast<std::size_t>(max_glue_genus(s)));
    const auto N = static_cast<Eigen::Index>(s.size());
    Matrix<MultiPoly> scaled(N, N), dgd(N, N);
    auto g = gram_matrix(s, alphas);
    long sum_deg = 0;
    for (Eigen::Index i = 0; i < N; ++i) {
      sum_deg += degree(s[static_cast<std::size_t>(i)]);
      for (Eigen::Index j = 0; j < N; ++j) {
        auto comps = glue(s[static_cast<std::size_t>(i)], s[static_cast<std::size_t>(j)]).component_genera;
        long e = 2 * n;
        MultiPoly v(1);
        for (int gg : comps) {
          e += 2 * gg - 2;
          v *= alphas[static_cast<std::size_t>(gg)];
        }
        REQUIRE(e >= 0);
        scaled(i, j) = v * pow(mu, static_cast<unsigned>(e));
        dgd(i, j) = g(i, j) * pow(mu, static_cast<unsigned>(degree(s[static_cast<std::size_t>(i)]) +
                                                          degree(s[static_cast<std::size_t>(j)])));
      }
    }
    CHECK(scaled == dgd);
    if (n <= 3) {
      CHECK(det_fraction_free(scaled) == det_fraction_free(g) * pow(mu, static_cast<unsigned>(2 * sum_deg)));
    }
  }
  for (int n = 1; n <= 4; ++n) {
    auto zq = parse_series("2", "1 - 3*T");
    CHECK(state_dim(n, scale(zq, Rational(9))) == state_dim(n, zq));
    CHECK(state_dim(n, scale(zq, make_rational(4, 25))) == state_dim(n, zq));
  }
}

TEST_CASE("leading term in the top coefficient") {
  for (int n = 1; n <= 3; ++n) {
    auto r = leading_term_check(n, 1);
    CHECK(r.holds);
    CHECK(r.degree == r.expected_degree);
    CHECK(r.expected_degree == static_cast<long>(d_nm(n, 1).get_si()));
  }
  for (int n = 1; n <= 2; ++n) CHECK(leading_term_check(n, 2).holds);
}

TEST_CASE("known skein relations are negligible") {
  auto rels = known_relations();
  REQUIRE(rels.size() == 5);
  const std::vector<std::size_t> terms{8, 2, 8, 8, 47};
  for (std::size_t i = 0; i < rels.size(); ++i) {
    CAPTURE(rels[i].name);
    CHECK(rels[i].vector.terms.size() == terms[i]);
    CHECK(verify_negligible(rels[i].vector, rels[i].z));
    // Dropping any one term breaks it.
    auto broken = rels[i].vector;
    broken.terms.erase(broken.terms.begin());
    CHECK_FALSE(verify_negligible(broken, rels[i].z));
  }
}

TEST_CASE("orbit sums") {
  CHECK(orbit(parse_surface("{1,2}{3,4}")).size() == 3);
  CHECK(orbit(parse_surface("{1,2:g1}{3:g1}{4:g2}")).size() == 12);
  CHECK(orbit(parse_surface("{1:g1}{2:g1}{3:g2}{4:g2}")).size() == 6);
  CHECK(orbit(parse_surface("{1,2,3,4}")).size() == 1);
}
