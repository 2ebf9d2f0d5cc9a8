#include <algorithm>
#include <stdexcept>

#include "cobalt/core/determinant.hpp"
#include "cobalt/core/modmatrix.hpp"

namespace cobalt {

namespace {

// Barrett reduction for moduli below 2^32 and inputs below 2^64.
struct SmallReducer {
  uint64_t p;
  uint64_t m;
  explicit SmallReducer(uint64_t prime) : p(prime), m(~0ULL / prime) {}
  uint64_t reduce(uint64_t x) const {
    uint64_t q = static_cast<uint64_t>((static_cast<unsigned __int128>(x) * m) >> 64);
    uint64_t r = x - q * p;
    return r >= p ? r - p : r;
  }
  // row_i += f * row_k over [from, n)
  void axpy(uint64_t* dst, const uint64_t* src, uint64_t f, std::size_t from, std::size_t n) const {
    for (std::size_t j = from; j < n; ++j) dst[j] = reduce(dst[j] + f * src[j]);
  }
};

struct WideReducer {
  uint64_t p;
  explicit WideReducer(uint64_t prime) : p(prime) {}
  void axpy(uint64_t* dst, const uint64_t* src, uint64_t f, std::size_t from, std::size_t n) const {
    for (std::size_t j = from; j < n; ++j) dst[j] = modular::add(dst[j], modular::mul(f, src[j], p), p);
  }
};

// Forward elimination; returns rank and accumulates the determinant of the
// leading square part when `det` is non-null.
template <class R>
std::size_t eliminate(ModMatrix& m, const R& red, uint64_t* det) {
  const uint64_t p = m.p;
  std::size_t r = 0;
  uint64_t d = 1;
  for (std::size_t c = 0; c < m.cols && r < m.rows; ++c) {
    std::size_t piv = m.rows;
    for (std::size_t i = r; i < m.rows; ++i)
      if (m(i, c) != 0) {
        piv = i;
        break;
      }
    if (piv == m.rows) {
      if (det) {
        *det = 0;
        return r;
      }
      continue;
    }
    if (piv != r) {
      std::swap_ranges(&m.data[piv * m.cols], &m.data[piv * m.cols] + m.cols, &m.data[r * m.cols]);
      d = modular::sub(0, d, p);
    }
    uint64_t pv = m(r, c);
    d = modular::mul(d, pv, p);
    uint64_t inv = modular::inv(pv, p);
    const uint64_t* src = &m.data[r * m.cols];
    for (std::size_t i = r + 1; i < m.rows; ++i) {
      uint64_t a = m(i, c);
      if (a == 0) continue;
      uint64_t f = modular::sub(0, modular::mul(a, inv, p), p);
      red.axpy(&m.data[i * m.cols], src, f, c, m.cols);
    }
    ++r;
  }
  if (det) *det = d;
  return r;
}

}  // namespace

uint64_t det_mod_p(ModMatrix m) {
  if (m.rows != m.cols) throw std::invalid_argument("determinant of non-square matrix");
  if (m.rows == 0) return 1 % m.p;
  uint64_t det = 0;
  if (m.p < (1ULL << 31)) eliminate(m, SmallReducer(m.p), &det);
  else eliminate(m, WideReducer(m.p), &det);
  return det;
}

std::size_t rank_mod_p(ModMatrix m) {
  if (m.p < (1ULL << 31)) return eliminate(m, SmallReducer(m.p), nullptr);
  return eliminate(m, WideReducer(m.p), nullptr);
}

ModMatrix reduce_mod_p(const Matrix<Integer>& m, uint64_t p) {
  ModMatrix r(m.rows(), m.cols(), p);
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) r(i, j) = mod_u64(m(i, j), p);
  return r;
}

ModMatrix reduce_mod_p(const Matrix<Rational>& m, uint64_t p) {
  ModMatrix r(m.rows(), m.cols(), p);
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      uint64_t den = mod_u64(m(i, j).get_den(), p);
      if (den == 0) throw std::domain_error("denominator vanishes modulo p");
      r(i, j) = modular::mul(mod_u64(m(i, j).get_num(), p), modular::inv(den, p), p);
    }
  return r;
}

Matrix<Integer> clear_row_denominators(const Matrix<Rational>& m, Integer* scale) {
  Matrix<Integer> out(m.rows(), m.cols());
  Integer total(1);
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Integer l(1);
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
    for (Eigen::Index j = 0; j < m.cols(); ++j) out(i, j) = Integer(m(i, j).get_num() * (l / m(i, j).get_den()));
    total *= l;
  }
  if (scale) *scale = total;
  return out;
}

std::size_t rank_fraction_free(Matrix<Integer> a) {
  std::size_t r = 0;
  Integer prev(1);
  const Eigen::Index rows = a.rows(), cols = a.cols();
  for (Eigen::Index c = 0; c < cols && static_cast<Eigen::Index>(r) < rows; ++c) {
    const Eigen::Index k = static_cast<Eigen::Index>(r);
    Eigen::Index piv = -1;
    for (Eigen::Index i = k; i < rows; ++i)
      if (a(i, c) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != k) a.row(k).swap(a.row(piv));
    for (Eigen::Index i = k + 1; i < rows; ++i) {
      for (Eigen::Index j = c + 1; j < cols; ++j)
        a(i, j) = divide_exact(Integer(a(i, j) * a(k, c) - a(i, c) * a(k, j)), prev);
      a(i, c) = 0;
    }
    prev = a(k, c);
    ++r;
  }
  return r;
}

RankResult rank_exact_report(const Matrix<Rational>& m, std::size_t num_primes) {
  RankResult res;
  Matrix<Integer> z = clear_row_denominators(m);
  for (uint64_t p : modular::word_primes(num_primes)) res.modular_ranks.push_back(rank_mod_p(reduce_mod_p(z, p)));
  auto [lo, hi] = std::minmax_element(res.modular_ranks.begin(), res.modular_ranks.end());
  if (res.modular_ranks.empty() || *lo != *hi) {
    res.escalated = true;
    res.rank = rank_fraction_free(std::move(z));
  } else {
    res.rank = *hi;
  }
  return res;
}

std::size_t rank_exact(const Matrix<Rational>& m) { return rank_exact_report(m).rank; }

std::size_t rank_exact(const Matrix<Fp>& m) {
  if (m.size() == 0) return 0;
  uint64_t p = 0;
  for (Eigen::Index i = 0; i < m.rows() && !p; ++i)
    for (Eigen::Index j = 0; j < m.cols() && !p; ++j) p = m(i, j).modulus();
  if (p == 0) {
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      for (Eigen::Index j = 0; j < m.cols(); ++j)
        if (!m(i, j).is_zero()) throw std::logic_error("prime-field matrix without a modulus");
    return 0;
  }
  ModMatrix r(m.rows(), m.cols(), p);
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) r(i, j) = m(i, j).bind(p).value();
  return rank_mod_p(std::move(r));
}

}  // namespace cobalt
