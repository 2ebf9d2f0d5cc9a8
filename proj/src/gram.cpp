#include "cobalt/gram/gram.hpp"

#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>

namespace cobalt {

std::string SpanningSet::id() const {
  switch (kind) {
    case SpanningKind::full: return "full_" + std::to_string(param);
    case SpanningKind::Am: return "A_m(" + std::to_string(param) + ")";
    case SpanningKind::crossingless: return "crossingless";
  }
  return "";
}

std::vector<DecoratedSurface> spanning_surfaces(int n, const SpanningSet& s) {
  switch (s.kind) {
    case SpanningKind::full: return enumerate_spanning(n, s.param);
    case SpanningKind::Am: return enumerate_Am(n, s.param);
    case SpanningKind::crossingless: return enumerate_crossingless(n);
  }
  return {};
}

int max_glue_genus(const std::vector<DecoratedSurface>& surfaces) {
  // A glued component has genus E - V + 1 + G <= n - 1 + G_a + G_b.
  int n = 0, g = 0;
  for (const auto& s : surfaces) {
    n = std::max(n, s.n());
    g = std::max(g, s.total_genus());
  }
  return std::max(0, n - 1) + 2 * g;
}

ModMatrix gram_matrix_mod_p(const std::vector<DecoratedSurface>& surfaces, const std::vector<uint64_t>& alphas,
                            uint64_t p) {
  const std::size_t n = surfaces.size();
  ModMatrix g(n, n, p);
  int buf[128];
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      int k = glue_genera(surfaces[i], surfaces[j], buf);
      uint64_t r = 1;
      for (int c = 0; c < k && r; ++c) r = modular::mul(r, alphas.at(buf[c]), p);
      g(i, j) = g(j, i) = r;
    }
  return g;
}

std::size_t gram_rank(const std::vector<DecoratedSurface>& surfaces, const RationalSeries<Rational>& z) {
  if (surfaces.empty()) return 0;
  auto alphas = z.coefficients(static_cast<std::size_t>(max_glue_genus(surfaces)));
  std::vector<std::size_t> ranks;
  for (uint64_t p : modular::word_primes(8)) {
    std::vector<uint64_t> red;
    red.reserve(alphas.size());
    bool ok = true;
    for (const auto& a : alphas) {
      uint64_t den = mod_u64(a.get_den(), p);
      if (den == 0) {
        ok = false;
        break;
      }
      red.push_back(modular::mul(mod_u64(a.get_num(), p), modular::inv(den, p), p));
    }
    if (!ok) continue;
    ranks.push_back(rank_mod_p(gram_matrix_mod_p(surfaces, red, p)));
    if (ranks.size() == 3) break;
  }
  if (ranks.size() == 3 && ranks[0] == ranks[1] && ranks[1] == ranks[2]) return ranks[0];
  return rank_exact(gram_matrix(surfaces, alphas));
}

std::size_t state_dim(int n, const RationalSeries<Rational>& z) {
  if (z.is_zero()) return 0;
  return gram_rank(enumerate_spanning(n, std::max(1, z.K())), z);
}

std::optional<std::vector<int>> scaling_weights(const RationalSeries<MultiPoly>& z, int max_genus) {
  auto alphas = z.coefficients(static_cast<std::size_t>(std::max(0, max_genus)));
  RingPtr ring;
  for (const auto& a : alphas)
    if (a.ring()) ring = a.ring();
  if (!ring) return std::nullopt;
  const std::size_t nv = ring->size();
  // Unknowns w_1..w_r, c with sum e_i w_i - (g - 1) c = 0 for every term of alpha_g.
  std::vector<std::vector<Rational>> rows;
  for (std::size_t g = 0; g < alphas.size(); ++g) {
    MultiPoly a = alphas[g].rebind(ring);
    for (const auto& t : a.terms()) {
      std::vector<Rational> row(nv + 1, Rational(0));
      for (std::size_t i = 0; i < t.exps.size(); ++i) row[i] = t.exps[i];
      row[nv] = -(static_cast<long>(g) - 1);
      rows.push_back(std::move(row));
    }
  }
  Matrix<Rational> sys(static_cast<Eigen::Index>(std::max<std::size_t>(rows.size(), 1)), static_cast<Eigen::Index>(nv + 1));
  sys.setConstant(Rational(0));
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c <= nv; ++c) sys(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = rows[r][c];
  Matrix<Rational> ker = nullspace(sys);
  for (Eigen::Index k = 0; k < ker.cols(); ++k) {
    if (ker(static_cast<Eigen::Index>(nv), k) == 0) continue;
    Integer l = 1;
    for (Eigen::Index i = 0; i <= static_cast<Eigen::Index>(nv); ++i) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), ker(i, k).get_den_mpz_t());
    if (ker(static_cast<Eigen::Index>(nv), k) < 0) l = -l;
    std::vector<int> w(nv);
    bool nonzero = false;
    for (std::size_t i = 0; i < nv; ++i) {
      Rational v = ker(static_cast<Eigen::Index>(i), k) * l;
      if (!mpz_fits_sint_p(v.get_num_mpz_t())) return std::nullopt;
      w[i] = static_cast<int>(v.get_num().get_si());
      nonzero |= w[i] != 0;
    }
    if (nonzero) return w;
  }
  return std::nullopt;
}

MultiPoly gram_det(const std::vector<DecoratedSurface>& surfaces, const RationalSeries<MultiPoly>& z,
                   const GramDetOptions& opts) {
  if (surfaces.size() > opts.size_limit)
    throw std::length_error("Gram matrix of size " + std::to_string(surfaces.size()) +
                            " exceeds the symbolic limit " + std::to_string(opts.size_limit) +
                            "; use probabilistic verification");
  if (surfaces.empty()) return MultiPoly(1);
  const int gmax = max_glue_genus(surfaces);
  auto g = gram_matrix(surfaces, z.coefficients(static_cast<std::size_t>(gmax)));
  bool bareiss = opts.engine == DetEngine::bareiss ||
                 (opts.engine == DetEngine::automatic && surfaces.size() <= opts.bareiss_max);
  RingPtr ring;
  for (Eigen::Index i = 0; i < g.rows() && !ring; ++i)
    for (Eigen::Index j = 0; j < g.cols() && !ring; ++j) ring = g(i, j).ring();
  if (!ring) bareiss = true;
  if (bareiss) return det_fraction_free(g);
  for (Eigen::Index i = 0; i < g.rows(); ++i)
    for (Eigen::Index j = 0; j < g.cols(); ++j) g(i, j) = g(i, j).rebind(ring);
  InterpolationOptions io;
  if (auto w = scaling_weights(z, gmax); w && w->size() == ring->size()) io.weights = *w;
  return det_interpolate(g, io);
}

MultiPoly FactoredClaim::expand(const RingPtr& ring) const {
  MultiPoly r(ring, Rational(sign));
  for (const auto& [f, e] : factors) {
    if (e < 0) throw std::invalid_argument("negative exponent in a polynomial claim");
    r *= pow(f.rebind(ring), static_cast<unsigned>(e));
  }
  return r;
}

Rational FactoredClaim::evaluate(const std::vector<Rational>& point) const {
  Rational r(sign);
  for (const auto& [f, e] : factors) r *= rational_pow(f.evaluate(point), e);
  return r;
}

std::string FactoredClaim::str() const {
  std::ostringstream os;
  os << (sign < 0 ? "-" : "");
  bool first = true;
  for (const auto& [f, e] : factors) {
    if (!first) os << "*";
    first = false;
    os << "(" << f.str() << ")";
    if (e != 1) os << "^" << e;
  }
  if (first) os << "1";
  return os.str();
}

Integer det_multimodular(const Matrix<Integer>& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  if (m.rows() == 0) return 1;
  // log2 of the Hadamard bound, one row at a time.
  double bits = 0;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    double row = 0;
    std::size_t top = 0;
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      if (m(i, j) != 0) top = std::max(top, mpz_sizeinbase(m(i, j).get_mpz_t(), 2));
    if (top == 0) return 0;
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (m(i, j) == 0) continue;
      long e = 0;
      double d = mpz_get_d_2exp(&e, m(i, j).get_mpz_t());
      row += std::ldexp(d * d, static_cast<int>(2 * e - 2 * static_cast<long>(top)));
    }
    bits += static_cast<double>(top) + 0.5 * std::log2(row);
  }
  const std::size_t need = static_cast<std::size_t>(std::ceil((bits + 2) / 61.0)) + 1;
  auto primes = modular::large_primes(need);
  Integer x = 0, mod = 1;
  for (uint64_t p : primes) {
    uint64_t r = det_mod_p(reduce_mod_p(m, p));
    uint64_t xm = mod_u64(x, p);
    uint64_t t = modular::mul(modular::sub(r, xm, p), modular::inv(mod_u64(mod, p), p), p);
    x += mod * integer_from_u64(t);
    mod *= integer_from_u64(p);
  }
  if (2 * x > mod) x -= mod;
  return x;
}

std::vector<std::vector<Rational>> pit_points(std::size_t nvars, int count, uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> mag(1, 1L << 16);
  std::vector<std::vector<Rational>> pts;
  for (int k = 0; k < count; ++k) {
    std::vector<Rational> pt;
    for (std::size_t i = 0; i < nvars; ++i) {
      long v = mag(rng);
      pt.push_back(Rational((rng() & 1) ? v : -v));
    }
    pts.push_back(std::move(pt));
  }
  return pts;
}

namespace {

RingPtr series_ring(const RationalSeries<MultiPoly>& z) {
  for (const auto& c : z.numerator().coeffs())
    if (c.ring()) return c.ring();
  for (const auto& c : z.denominator().coeffs())
    if (c.ring()) return c.ring();
  return nullptr;
}

Rational det_rational(const Matrix<Rational>& g) {
  Integer scale;
  auto ints = clear_row_denominators(g, &scale);
  Integer d = g.rows() <= 40 ? det_fraction_free(ints) : det_multimodular(ints);
  return Rational(d) / Rational(scale);
}

}  // namespace

VerificationResult verify_factorization(const FactoredClaim& claim, const std::vector<DecoratedSurface>& surfaces,
                                        const RationalSeries<MultiPoly>& z, const VerifyOptions& opts) {
  VerificationResult res;
  res.matrix_size = surfaces.size();
  RingPtr ring = series_ring(z);
  for (const auto& [f, e] : claim.factors)
    if (!ring && f.ring()) ring = f.ring();
  bool exact = opts.mode == VerifyMode::exact ||
               (opts.mode == VerifyMode::automatic && surfaces.size() <= opts.symbolic_limit);
  if (exact) {
    res.mode = "exact";
    GramDetOptions d = opts.det;
    d.size_limit = std::max(d.size_limit, surfaces.size());
    MultiPoly det = gram_det(surfaces, z, d);
    MultiPoly want = ring ? claim.expand(ring) : claim.expand(make_ring({}));
    res.verified = ring ? det.rebind(ring) == want : det == want;
    res.determinant = det;
    return res;
  }
  res.mode = "pit";
  res.probabilistic = true;
  const std::size_t nv = ring ? ring->size() : 0;
  res.points = pit_points(nv, opts.points, opts.seed);
  const std::size_t gmax = static_cast<std::size_t>(max_glue_genus(surfaces));
  res.verified = true;
  for (const auto& pt : res.points) {
    std::vector<Rational> alphas;
    for (const auto& a : z.coefficients(gmax)) alphas.push_back(ring ? a.rebind(ring).evaluate(pt) : a.evaluate(pt));
    Rational lhs = det_rational(gram_matrix(surfaces, alphas));
    std::vector<Rational> cpt = pt;
    Rational rhs(claim.sign);
    for (const auto& [f, e] : claim.factors) rhs *= rational_pow((ring ? f.rebind(ring) : f).evaluate(cpt), e);
    if (lhs != rhs) {
      res.verified = false;
      break;
    }
  }
  return res;
}

UniPoly<Rational> chebyshev_u(int h) {
  if (h < 0) throw std::invalid_argument("Chebyshev index must be nonnegative");
  // U_0 = 1, U_1 = y, U_{k+1} = y U_k - U_{k-1}.
  const auto y = UniPoly<Rational>::monomial(Rational(1), 1);
  UniPoly<Rational> a(Rational(1)), b = y;
  if (h == 0) return a;
  for (int k = 1; k < h; ++k) {
    auto c = y * b - a;
    a = std::move(b);
    b = std::move(c);
  }
  return b;
}

Matrix<MultiPoly> meander_matrix(int n, const RingPtr& ring_beta) {
  auto ms = enumerate_matchings(n);
  const Eigen::Index c = static_cast<Eigen::Index>(ms.size());
  Matrix<MultiPoly> d(c, c);
  for (Eigen::Index i = 0; i < c; ++i)
    for (Eigen::Index j = 0; j < c; ++j) {
      auto [h1, h2] = meander_h1h2(ms[i], ms[j]);
      d(i, j) = h1 == 1 ? MultiPoly::monomial(ring_beta, {static_cast<uint32_t>(h2)}, Rational(1))
                        : MultiPoly(ring_beta, Rational(0));
    }
  return d;
}

Matrix<MultiPoly> meander_matrix_y(int n, const RingPtr& ring_y) {
  auto ms = enumerate_matchings(n);
  const Eigen::Index c = static_cast<Eigen::Index>(ms.size());
  Matrix<MultiPoly> d(c, c);
  for (Eigen::Index i = 0; i < c; ++i)
    for (Eigen::Index j = 0; j < c; ++j) {
      auto [h1, h2] = meander_h1h2(ms[i], ms[j]);
      d(i, j) = MultiPoly::monomial(ring_y, {static_cast<uint32_t>(h1), static_cast<uint32_t>(h2)}, Rational(1));
    }
  return d;
}

MultiPoly meander_formula(int n, const RingPtr& ring_y) {
  if (n < 1) throw std::invalid_argument("meander formula needs n >= 1");
  auto c = [n](int h) -> long {
    if (h > n) return 0;
    Integer v = binomial(2 * n, n - h) - (n - h - 1 >= 0 ? binomial(2 * n, n - h - 1) : Integer(0));
    return v.get_si();
  };
  const long cn = Integer(binomial(2 * n, n) / (n + 1)).get_si();
  UniPoly<Rational> f = UniPoly<Rational>::monomial(Rational(1), static_cast<int>(cn));
  for (int h = 1; h <= n; ++h) {
    long e = c(h) - c(h + 1);
    if (e < 0) throw std::logic_error("negative Chebyshev exponent");
    if (e > 0) f = f * pow(chebyshev_u(h), static_cast<unsigned>(e));
  }
  std::vector<Term> terms;
  for (int k = 0; k <= f.degree(); ++k) {
    const Rational& a = f.coeff(k);
    if (a == 0) continue;
    if (k % 2) throw std::logic_error("meander product is not even in y");
    terms.push_back({{static_cast<uint32_t>(k / 2), static_cast<uint32_t>(k / 2)}, a});
  }
  return MultiPoly::from_terms(ring_y, std::move(terms));
}

std::vector<std::size_t> graded_dimension(int n) {
  std::vector<std::size_t> out(std::max(n, 1), 0);
  for (const auto& s : enumerate_crossingless(n)) out[static_cast<std::size_t>(degree(s) / 2)]++;
  return out;
}

LeadingTermCheck leading_term_check(int n, int m) {
  if (m < 1) throw std::invalid_argument("leading-term law needs m >= 1");
  std::vector<std::string> names;
  for (int i = 0; i <= m; ++i) names.push_back("b" + std::to_string(i));
  auto ring = make_ring(names);
  std::vector<MultiPoly> p;
  for (int i = 0; i <= m; ++i) p.push_back(MultiPoly::variable(ring, i));
  auto z = normalize(UniPoly<MultiPoly>(p), UniPoly<MultiPoly>(MultiPoly(ring, Rational(1))));
  auto surfaces = enumerate_Am(n, m);
  LeadingTermCheck r;
  r.n = n;
  r.m = m;
  for (const auto& s : surfaces) r.expected_degree += s.num_blocks();
  GramDetOptions opts;
  opts.size_limit = std::max(opts.size_limit, surfaces.size());
  MultiPoly det = gram_det(surfaces, z, opts).rebind(ring);
  r.degree = det.degree_in(static_cast<std::size_t>(m));
  std::vector<Term> lead;
  for (const auto& t : det.terms())
    if (static_cast<long>(t.exps[m]) == r.degree) {
      Term u = t;
      u.exps[m] = 0;
      lead.push_back(std::move(u));
    }
  r.leading_coefficient = MultiPoly::from_terms(ring, std::move(lead));
  auto lc = r.leading_coefficient.as_constant();
  r.holds = r.degree == r.expected_degree && lc && (*lc == 1 || *lc == -1);
  return r;
}

}  // namespace cobalt
