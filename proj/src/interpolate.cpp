#include "cobalt/core/interpolate.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>

#include "cobalt/core/determinant.hpp"
#include "cobalt/core/modmatrix.hpp"

namespace cobalt {

namespace {

struct Grading {
  std::size_t var = 0;
  int weight = 0;
  long total = 0;
};

long weighted_degree(const Exponents& e, const std::vector<int>& w) {
  long s = 0;
  for (std::size_t i = 0; i < e.size(); ++i) s += static_cast<long>(e[i]) * w[i];
  return s;
}

// Verifies that entry weights have the form r_i + c_j and returns the total
// weight of every nonzero determinant term.
std::optional<Grading> find_grading(const Matrix<MultiPoly>& m, const std::vector<int>& w, std::size_t nvars) {
  if (w.size() != nvars) return std::nullopt;
  const Eigen::Index n = m.rows();
  std::vector<std::optional<long>> entry(n * n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) {
      const MultiPoly& e = m(i, j);
      if (e.is_zero()) continue;
      long d = weighted_degree(e.terms().front().exps.empty() ? Exponents(nvars, 0) : e.terms().front().exps, w);
      for (const auto& t : e.terms()) {
        Exponents ex = t.exps.empty() ? Exponents(nvars, 0) : t.exps;
        if (weighted_degree(ex, w) != d) return std::nullopt;
      }
      entry[i * n + j] = d;
    }
  // Propagate row/column potentials through the bipartite support graph.
  std::vector<std::optional<long>> r(n), c(n);
  for (Eigen::Index start = 0; start < n; ++start) {
    if (r[start]) continue;
    r[start] = 0;
    std::vector<std::pair<bool, Eigen::Index>> stack{{true, start}};
    while (!stack.empty()) {
      auto [is_row, k] = stack.back();
      stack.pop_back();
      for (Eigen::Index o = 0; o < n; ++o) {
        auto& v = is_row ? entry[k * n + o] : entry[o * n + k];
        if (!v) continue;
        if (is_row) {
          long want = *v - *r[k];
          if (!c[o]) {
            c[o] = want;
            stack.push_back({false, o});
          } else if (*c[o] != want) {
            return std::nullopt;
          }
        } else {
          long want = *v - *c[k];
          if (!r[o]) {
            r[o] = want;
            stack.push_back({true, o});
          } else if (*r[o] != want) {
            return std::nullopt;
          }
        }
      }
    }
  }
  long total = 0;
  for (Eigen::Index i = 0; i < n; ++i) total += *r[i] + (c[i] ? *c[i] : 0);
  std::optional<std::size_t> pick;
  for (std::size_t v = 0; v < nvars; ++v) {
    if (w[v] == 0) continue;
    if (!pick || std::abs(w[v]) < std::abs(w[*pick])) pick = v;
  }
  if (!pick) return std::nullopt;
  return Grading{*pick, w[*pick], total};
}

struct CompiledTerm {
  Integer coef;
  std::vector<uint32_t> exps;  // over active variables
};

// Newton interpolation at nodes 0..d along one axis, converted to monomial
// coefficients in place.
void interpolate_axis(std::vector<uint64_t>& vals, std::size_t stride, std::size_t len, uint64_t p) {
  std::vector<uint64_t> inv_cache(len, 0);
  for (std::size_t k = 1; k < len; ++k) inv_cache[k] = modular::inv(k, p);
  std::vector<uint64_t> f(len), poly(len);
  const std::size_t block = stride * len;
  for (std::size_t base = 0; base < vals.size(); base += block) {
    for (std::size_t off = 0; off < stride; ++off) {
      for (std::size_t k = 0; k < len; ++k) f[k] = vals[base + off + k * stride];
      // Divided differences with nodes x_k = k: (f[k]-f[k-1]) / (x_k - x_{k-j}) = / j.
      for (std::size_t j = 1; j < len; ++j)
        for (std::size_t k = len - 1; k >= j; --k) {
          f[k] = modular::mul(modular::sub(f[k], f[k - 1], p), inv_cache[j], p);
          if (k == j) break;
        }
      std::fill(poly.begin(), poly.end(), 0);
      poly[0] = f[len - 1];
      std::size_t deg = 0;
      for (std::size_t k = len - 1; k-- > 0;) {
        // poly = poly * (x - k) + f[k]
        uint64_t neg = modular::sub(0, k % p, p);
        for (std::size_t i = deg + 1; i-- > 0;) {
          uint64_t up = poly[i];
          poly[i + 1] = modular::add(poly[i + 1], up, p);
          poly[i] = modular::mul(up, neg, p);
        }
        ++deg;
        poly[0] = modular::add(poly[0], f[k], p);
      }
      for (std::size_t k = 0; k < len; ++k) vals[base + off + k * stride] = poly[k];
    }
  }
}

}  // namespace

Matrix<Rational> specialize(const Matrix<MultiPoly>& m, const std::vector<Rational>& point) {
  Matrix<Rational> r(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      const MultiPoly& e = m(i, j);
      if (e.is_constant()) r(i, j) = e.constant_term();
      else r(i, j) = e.evaluate(point);
    }
  return r;
}

Rational det_at_point(const Matrix<MultiPoly>& m, const std::vector<Rational>& point) {
  Integer scale;
  Matrix<Integer> z = clear_row_denominators(specialize(m, point), &scale);
  return Rational(det_fraction_free(std::move(z))) / Rational(scale);
}

MultiPoly det_interpolate(const Matrix<MultiPoly>& m, const InterpolationOptions& opts, InterpolationStats* stats) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
  const Eigen::Index n = m.rows();
  RingPtr ring;
  for (Eigen::Index i = 0; i < n && !ring; ++i)
    for (Eigen::Index j = 0; j < n && !ring; ++j)
      if (m(i, j).ring()) ring = m(i, j).ring();
  const std::size_t nvars = ring ? ring->size() : 0;
  if (nvars == 0) {
    Matrix<Rational> q(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index j = 0; j < n; ++j) q(i, j) = m(i, j).constant_term();
    Integer scale;
    Matrix<Integer> z = clear_row_denominators(q, &scale);
    return MultiPoly(Rational(det_fraction_free(std::move(z))) / Rational(scale));
  }

  std::optional<Grading> grading;
  if (!opts.weights.empty()) grading = find_grading(m, opts.weights, nvars);
  const bool graded = grading.has_value();
  const Grading gr = graded ? *grading : Grading{};

  // Row denominators, degree bounds, coefficient bound.
  std::vector<Integer> row_lcm(n, Integer(1));
  std::vector<int> row_max(nvars * n, 0), col_max(nvars * n, 0);
  Integer coef_bound(1);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      const MultiPoly& e = m(i, j);
      Integer l = e.denominator_lcm();
      mpz_lcm(row_lcm[i].get_mpz_t(), row_lcm[i].get_mpz_t(), l.get_mpz_t());
      for (const auto& t : e.terms())
        for (std::size_t v = 0; v < t.exps.size(); ++v) {
          int d = static_cast<int>(t.exps[v]);
          row_max[v * n + i] = std::max(row_max[v * n + i], d);
          col_max[v * n + j] = std::max(col_max[v * n + j], d);
        }
    }
    Rational norm(0);
    for (Eigen::Index j = 0; j < n; ++j) norm += m(i, j).l1_norm();
    norm *= row_lcm[i];
    coef_bound *= Integer(norm.get_num());  // denominators are cleared, so norm is integral
  }

  std::vector<int> bound(nvars, -1);
  std::vector<std::size_t> active;
  for (std::size_t v = 0; v < nvars; ++v) {
    if (graded && gr.var == v) continue;
    long rs = 0, cs = 0;
    for (Eigen::Index i = 0; i < n; ++i) {
      rs += row_max[v * n + i];
      cs += col_max[v * n + i];
    }
    bound[v] = static_cast<int>(std::min(rs, cs));
    if (bound[v] > 0) active.push_back(v);
  }

  std::size_t points = 1;
  std::vector<std::size_t> len, stride(active.size());
  for (auto v : active) {
    len.push_back(static_cast<std::size_t>(bound[v]) + 1);
    if (points > opts.max_points / len.back()) throw std::length_error("interpolation grid too large");
    points *= len.back();
  }
  for (std::size_t a = active.size(), s = 1; a-- > 0;) {
    stride[a] = s;
    s *= len[a];
  }

  // Integer-coefficient entries over the active variables.
  std::vector<std::vector<CompiledTerm>> compiled(n * n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      for (const auto& t : m(i, j).terms()) {
        CompiledTerm ct;
        Rational c = t.coef * row_lcm[i];
        ct.coef = c.get_num();
        for (auto v : active) ct.exps.push_back(t.exps.empty() ? 0 : t.exps[v]);
        compiled[i * n + j].push_back(std::move(ct));
      }

  Integer need = 2 * coef_bound + 1;
  Integer modulus(1);
  std::vector<Integer> acc(points, Integer(0));
  std::size_t used = 0;
  std::vector<uint64_t> primes;
  while (modulus < need) {
    ++used;
    primes = modular::large_primes(used);
    const uint64_t p = primes.back();
    std::vector<std::vector<uint64_t>> coef_mod(n * n);
    for (std::size_t e = 0; e < compiled.size(); ++e)
      for (const auto& ct : compiled[e]) coef_mod[e].push_back(mod_u64(ct.coef, p));

    std::vector<uint64_t> vals(points);
    std::vector<std::size_t> idx(active.size(), 0);
    std::vector<std::vector<uint64_t>> powers(active.size());
    ModMatrix mm(n, n, p);
    for (std::size_t pt = 0; pt < points; ++pt) {
      for (std::size_t a = 0; a < active.size(); ++a) {
        powers[a].assign(len[a], 1);
        for (std::size_t k = 1; k < len[a]; ++k) powers[a][k] = modular::mul(powers[a][k - 1], idx[a] % p, p);
      }
      for (std::size_t e = 0; e < compiled.size(); ++e) {
        uint64_t s = 0;
        for (std::size_t t = 0; t < compiled[e].size(); ++t) {
          uint64_t c = coef_mod[e][t];
          for (std::size_t a = 0; a < active.size() && c; ++a) {
            uint32_t ex = compiled[e][t].exps[a];
            if (ex) c = modular::mul(c, powers[a][ex], p);
          }
          s = modular::add(s, c, p);
        }
        mm.data[e] = s;
      }
      vals[pt] = det_mod_p(mm);
      for (std::size_t a = active.size(); a-- > 0;) {
        if (++idx[a] < len[a]) break;
        idx[a] = 0;
      }
    }
    for (std::size_t a = 0; a < active.size(); ++a) interpolate_axis(vals, stride[a], len[a], p);

    // Garner step: acc <- acc + modulus * ((v - acc) / modulus mod p).
    uint64_t minv = modular::inv(mod_u64(modulus, p), p);
    for (std::size_t k = 0; k < points; ++k) {
      uint64_t cur = mod_u64(acc[k], p);
      uint64_t t = modular::mul(modular::sub(vals[k], cur, p), minv, p);
      if (t) acc[k] += modulus * integer_from_u64(t);
    }
    modulus *= integer_from_u64(p);
  }

  Integer den(1);
  for (auto& l : row_lcm) den *= l;
  Integer half = modulus / 2;
  std::vector<Term> terms;
  std::vector<std::size_t> idx(active.size(), 0);
  for (std::size_t k = 0; k < points; ++k) {
    Integer c = acc[k];
    if (c > half) c -= modulus;
    if (c != 0) {
      Exponents ex(nvars, 0);
      for (std::size_t a = 0; a < active.size(); ++a) ex[active[a]] = static_cast<uint32_t>(idx[a]);
      if (graded) {
        long rest = gr.total;
        for (std::size_t v = 0; v < nvars; ++v)
          if (v != gr.var) rest -= static_cast<long>(ex[v]) * opts.weights[v];
        if (rest % gr.weight != 0 || rest / gr.weight < 0)
          throw std::logic_error("determinant is not homogeneous for the declared grading");
        ex[gr.var] = static_cast<uint32_t>(rest / gr.weight);
      }
      terms.push_back(Term{std::move(ex), make_rational(c, den)});
    }
    for (std::size_t a = active.size(); a-- > 0;) {
      if (++idx[a] < len[a]) break;
      idx[a] = 0;
    }
  }
  if (stats) {
    stats->degree_bounds = bound;
    stats->eliminated_variable = grading ? static_cast<int>(grading->var) : -1;
    stats->points = points;
    stats->primes = used;
  }
  return MultiPoly::from_terms(ring, std::move(terms));
}

}  // namespace cobalt
