#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "cobalt/core/matrix.hpp"

namespace cobalt {

namespace detail {

template <class T>
std::size_t pivot_cost(const T&) {
  return 0;
}
inline std::size_t pivot_cost(const MultiPoly& p) { return p.terms().size(); }
inline std::size_t pivot_cost(const Integer& z) { return mpz_sizeinbase(z.get_mpz_t(), 2); }

}  // namespace detail

/// Determinant by single-step fraction-free (Bareiss) elimination.
///
/// Works over any integral domain scalar. Every division is checked to be
/// exact; a nonzero remainder throws std::domain_error.
template <class T>
T det_fraction_free(Matrix<T> a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("determinant of non-square matrix");
  const Eigen::Index n = a.rows();
  if (n == 0) return T(1);
  T prev(1);
  bool negate = false;
  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    // Cheapest nonzero pivot in column k.
    Eigen::Index best = -1;
    std::size_t best_cost = 0;
    for (Eigen::Index i = k; i < n; ++i) {
      if (is_zero(a(i, k))) continue;
      std::size_t c = detail::pivot_cost(a(i, k));
      if (best < 0 || c < best_cost) {
        best = i;
        best_cost = c;
      }
    }
    if (best < 0) return T(0);
    if (best != k) {
      a.row(k).swap(a.row(best));
      negate = !negate;
    }
    const T pivot = a(k, k);
    for (Eigen::Index i = k + 1; i < n; ++i) {
      const T aik = a(i, k);
      for (Eigen::Index j = k + 1; j < n; ++j) {
        T num = T(T(a(i, j) * pivot) - T(aik * a(k, j)));
        a(i, j) = divide_exact(num, prev);
      }
      a(i, k) = T(0);
    }
    prev = pivot;
  }
  T d = a(n - 1, n - 1);
  return negate ? T(-d) : d;
}

/// Reduced row echelon form over a field; returns pivot columns.
template <class F>
std::vector<Eigen::Index> rref_in_place(Matrix<F>& a) {
  static_assert(is_field_v<F>, "row reduction needs a field");
  std::vector<Eigen::Index> pivots;
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < a.cols() && r < a.rows(); ++c) {
    Eigen::Index p = -1;
    for (Eigen::Index i = r; i < a.rows(); ++i)
      if (!is_zero(a(i, c))) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != r) a.row(r).swap(a.row(p));
    F inv = F(F(1) / a(r, c));
    for (Eigen::Index j = c; j < a.cols(); ++j) a(r, j) = F(a(r, j) * inv);
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
      if (i == r || is_zero(a(i, c))) continue;
      F f = a(i, c);
      for (Eigen::Index j = c; j < a.cols(); ++j) a(i, j) = F(a(i, j) - F(f * a(r, j)));
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

template <class F>
std::size_t rank_field(Matrix<F> a) {
  return rref_in_place(a).size();
}

/// Basis of {v : a v = 0}, one column per basis vector.
template <class F>
Matrix<F> nullspace(Matrix<F> a) {
  auto pivots = rref_in_place(a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  Matrix<F> basis = zero_matrix<F>(a.cols(), a.cols() - static_cast<Eigen::Index>(pivots.size()));
  Eigen::Index col = 0;
  for (Eigen::Index f = 0; f < a.cols(); ++f) {
    if (is_pivot[f]) continue;
    basis(f, col) = F(1);
    for (std::size_t r = 0; r < pivots.size(); ++r) basis(pivots[r], col) = F(-a(static_cast<Eigen::Index>(r), f));
    ++col;
  }
  return basis;
}

/// Cofactor expansion; exponential, used as an oracle on tiny matrices.
template <class T>
T det_cofactor(const Matrix<T>& a) {
  const Eigen::Index n = a.rows();
  if (n == 0) return T(1);
  if (n == 1) return a(0, 0);
  T s(0);
  for (Eigen::Index j = 0; j < n; ++j) {
    Matrix<T> minor(n - 1, n - 1);
    for (Eigen::Index i = 1; i < n; ++i)
      for (Eigen::Index c = 0, cc = 0; c < n; ++c)
        if (c != j) minor(i - 1, cc++) = a(i, c);
    T term = T(a(0, j) * det_cofactor(minor));
    s = (j % 2 == 0) ? T(s + term) : T(s - term);
  }
  return s;
}

}  // namespace cobalt
