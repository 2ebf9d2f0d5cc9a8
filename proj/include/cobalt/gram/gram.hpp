#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cobalt/core/determinant.hpp"
#include "cobalt/core/interpolate.hpp"
#include "cobalt/core/modmatrix.hpp"
#include "cobalt/genfun/series.hpp"
#include "cobalt/surf/matching.hpp"
#include "cobalt/surf/surface.hpp"

namespace cobalt {

enum class SpanningKind { full, Am, crossingless };

struct SpanningSet {
  SpanningKind kind = SpanningKind::full;
  int param = 1;  // K for full, m for Am

  /// "full_K", "A_m(m)" or "crossingless".
  std::string id() const;
  static SpanningSet full(int K) { return {SpanningKind::full, K}; }
  static SpanningSet am(int m) { return {SpanningKind::Am, m}; }
  static SpanningSet crossingless() { return {SpanningKind::crossingless, 0}; }
};

std::vector<DecoratedSurface> spanning_surfaces(int n, const SpanningSet& s);

/// Largest genus a glued component of two members of `surfaces` can have.
int max_glue_genus(const std::vector<DecoratedSurface>& surfaces);

/// Product of alpha_g over the components of the glued closed surface.
template <class C>
C pairing(const DecoratedSurface& a, const DecoratedSurface& b, const std::vector<C>& alphas) {
  int buf[128];
  int k = glue_genera(a, b, buf);
  C r(1);
  for (int i = 0; i < k; ++i) {
    if (buf[i] >= static_cast<int>(alphas.size())) throw std::out_of_range("alpha index beyond precomputed range");
    const C& x = alphas[buf[i]];
    if (is_zero(x)) return C(0);
    r = C(r * x);
  }
  return r;
}

template <class C>
C pairing(const DecoratedSurface& a, const DecoratedSurface& b, const RationalSeries<C>& z) {
  int g = a.n() + a.total_genus() + b.total_genus();
  return pairing(a, b, z.coefficients(static_cast<std::size_t>(g)));
}

template <class C>
Matrix<C> gram_matrix(const std::vector<DecoratedSurface>& surfaces, const std::vector<C>& alphas) {
  const Eigen::Index n = static_cast<Eigen::Index>(surfaces.size());
  Matrix<C> g(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = i; j < n; ++j) {
      g(i, j) = pairing(surfaces[i], surfaces[j], alphas);
      if (j != i) g(j, i) = g(i, j);
    }
  return g;
}

template <class C>
Matrix<C> gram_matrix(const std::vector<DecoratedSurface>& surfaces, const RationalSeries<C>& z) {
  return gram_matrix(surfaces, z.coefficients(static_cast<std::size_t>(max_glue_genus(surfaces))));
}

/// Gram matrix reduced modulo p, from alphas already reduced modulo p.
ModMatrix gram_matrix_mod_p(const std::vector<DecoratedSurface>& surfaces, const std::vector<uint64_t>& alphas,
                            uint64_t p);

/// Rank of the Gram matrix over Q via several primes above 2^30, escalating
/// to exact elimination when the modular ranks disagree.
std::size_t gram_rank(const std::vector<DecoratedSurface>& surfaces, const RationalSeries<Rational>& z);

/// dim A(n): rank of the Gram matrix on enumerate_spanning(n, K).
std::size_t state_dim(int n, const RationalSeries<Rational>& z);

enum class DetEngine { automatic, bareiss, interpolation };

struct GramDetOptions {
  DetEngine engine = DetEngine::automatic;
  std::size_t size_limit = 100;
  /// Matrices up to this size use Bareiss under the automatic engine.
  std::size_t bareiss_max = 12;
};

/// Weights making every alpha_g weighted-homogeneous of weight proportional to
/// g - 1, if such exist (the grading behind the rescaling symmetry).
std::optional<std::vector<int>> scaling_weights(const RationalSeries<MultiPoly>& z, int max_genus);

/// Exact symbolic determinant of the Gram matrix. Throws std::length_error
/// beyond the size limit (use PIT verification instead).
MultiPoly gram_det(const std::vector<DecoratedSurface>& surfaces, const RationalSeries<MultiPoly>& z,
                   const GramDetOptions& opts = {});

/// sign * prod factor^exponent.
struct FactoredClaim {
  int sign = 1;
  std::vector<std::pair<MultiPoly, int>> factors;

  MultiPoly expand(const RingPtr& ring) const;
  Rational evaluate(const std::vector<Rational>& point) const;
  std::string str() const;
};

enum class VerifyMode { automatic, exact, pit };

struct VerifyOptions {
  VerifyMode mode = VerifyMode::automatic;
  int points = 5;
  uint64_t seed = 20240611;
  std::size_t symbolic_limit = 100;
  GramDetOptions det;
};

struct VerificationResult {
  bool verified = false;
  std::string mode;  // "exact" or "pit"
  bool probabilistic = false;
  std::size_t matrix_size = 0;
  std::vector<std::vector<Rational>> points;
  std::optional<MultiPoly> determinant;  // exact mode only
};

/// Compares a factored claim with the Gram determinant: exact expansion for
/// small matrices, seeded random-point identity testing (fraction-free
/// determinants at rational points) for large ones.
VerificationResult verify_factorization(const FactoredClaim& claim, const std::vector<DecoratedSurface>& surfaces,
                                        const RationalSeries<MultiPoly>& z, const VerifyOptions& opts = {});

/// Exact integer determinant by Chinese remaindering over 62-bit primes past
/// the Hadamard bound.
Integer det_multimodular(const Matrix<Integer>& m);

/// Seeded random evaluation points with nonzero integer coordinates.
std::vector<std::vector<Rational>> pit_points(std::size_t nvars, int count, uint64_t seed);

/// Entries delta_{1,h1} beta^{h2} over the crossingless matchings.
Matrix<MultiPoly> meander_matrix(int n, const RingPtr& ring_beta);
/// Entries y1^{h1} y2^{h2}.
Matrix<MultiPoly> meander_matrix_y(int n, const RingPtr& ring_y);
/// (y1 y2)-expansion of y^{c_n} prod_h U_h(y)^{c_{n,h} - c_{n,h+1}} with y^2 -> y1 y2.
MultiPoly meander_formula(int n, const RingPtr& ring_y);
/// Chebyshev polynomial of the second kind.
UniPoly<Rational> chebyshev_u(int h);

/// Counts of crossingless surfaces by degree 0, 2, ..., 2(n-1).
std::vector<std::size_t> graded_dimension(int n);

/// Formal combination of decorated surfaces with a common n.
template <class C>
struct SurfaceVector {
  std::vector<std::pair<DecoratedSurface, C>> terms;

  void add(const DecoratedSurface& s, const C& c) {
    if (!terms.empty() && terms.front().first.n() != s.n())
      throw std::invalid_argument("surface vector terms have different numbers of circles");
    for (auto& [t, d] : terms)
      if (t == s) {
        d = C(d + c);
        return;
      }
    terms.push_back({s, c});
  }
};

/// True iff v pairs to zero with every member of enumerate_spanning(n, K).
template <class C>
bool verify_negligible(const SurfaceVector<C>& v, const RationalSeries<C>& z) {
  if (v.terms.empty()) return true;
  const int n = v.terms.front().first.n();
  const int K = std::max(1, z.K());
  auto spanning = enumerate_spanning(n, K);
  int g = n;
  for (const auto& [s, c] : v.terms) g = std::max(g, n + s.total_genus() + 2 * (K - 1) * n);
  auto alphas = z.coefficients(static_cast<std::size_t>(g));
  for (const auto& t : spanning) {
    C acc(0);
    for (const auto& [s, c] : v.terms) acc = C(acc + C(c * pairing(s, t, alphas)));
    if (!is_zero(acc)) return false;
  }
  return true;
}

/// Leading-term law on A^m(n) for Z = b0 + b1 T + ... + bm T^m: as a
/// polynomial in bm the determinant has degree d (the number of components
/// summed over the spanning set) and leading coefficient +-1.
struct LeadingTermCheck {
  int n = 0;
  int m = 0;
  long expected_degree = 0;
  long degree = -1;
  MultiPoly leading_coefficient;
  bool holds = false;
};

LeadingTermCheck leading_term_check(int n, int m);

struct GramReport {
  int n = 0;
  std::string series;
  std::string spanning_set_id;
  std::size_t matrix_size = 0;
  std::optional<std::size_t> rank;
  std::optional<std::string> determinant;
  std::optional<std::string> claim;
  std::optional<bool> claim_verified;
  std::string mode;  // "exact", "pit" or empty
  bool probabilistic = false;
};

}  // namespace cobalt
