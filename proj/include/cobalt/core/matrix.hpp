#pragma once

#include <Eigen/Core>

#include "cobalt/core/scalar.hpp"

namespace Eigen {

// Exact scalars are stored in Eigen containers; the numeric-analysis parts of
// NumTraits (epsilon, precision) are never used.
template <>
struct NumTraits<mpz_class> : GenericNumTraits<mpz_class> {
  typedef mpz_class Real;
  typedef mpz_class NonInteger;
  typedef mpz_class Nested;
  typedef mpz_class Literal;
  enum {
    IsInteger = 1,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 60,
    MulCost = 120
  };
  static int digits10() { return 0; }
  static int max_digits10() { return 0; }
};

template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
  typedef mpq_class Real;
  typedef mpq_class NonInteger;
  typedef mpq_class Nested;
  typedef mpq_class Literal;
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 150,
    MulCost = 150
  };
  static int digits10() { return 0; }
  static int max_digits10() { return 0; }
};

template <>
struct NumTraits<cobalt::Fp> : GenericNumTraits<cobalt::Fp> {
  typedef cobalt::Fp Real;
  typedef cobalt::Fp NonInteger;
  typedef cobalt::Fp Nested;
  typedef cobalt::Fp Literal;
  enum {
    IsInteger = 0,
    IsSigned = 0,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 3,
    MulCost = 5
  };
  static int digits10() { return 0; }
  static int max_digits10() { return 0; }
};

template <>
struct NumTraits<cobalt::MultiPoly> : GenericNumTraits<cobalt::MultiPoly> {
  typedef cobalt::MultiPoly Real;
  typedef cobalt::MultiPoly NonInteger;
  typedef cobalt::MultiPoly Nested;
  typedef cobalt::MultiPoly Literal;
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 10,
    AddCost = 500,
    MulCost = 1000
  };
  static int digits10() { return 0; }
  static int max_digits10() { return 0; }
};

}  // namespace Eigen

namespace cobalt {

template <class T>
using Matrix = Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic>;

template <class T>
using Vector = Eigen::Matrix<T, Eigen::Dynamic, 1>;

template <class T>
Matrix<T> zero_matrix(Eigen::Index rows, Eigen::Index cols) {
  Matrix<T> m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i)
    for (Eigen::Index j = 0; j < cols; ++j) m(i, j) = T(0);
  return m;
}

template <class T>
Matrix<T> identity_matrix(Eigen::Index n) {
  Matrix<T> m = zero_matrix<T>(n, n);
  for (Eigen::Index i = 0; i < n; ++i) m(i, i) = T(1);
  return m;
}

template <class T>
Matrix<T> transposed(const Matrix<T>& m) {
  Matrix<T> t(m.cols(), m.rows());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) t(j, i) = m(i, j);
  return t;
}

template <class T>
bool is_symmetric(const Matrix<T>& m) {
  if (m.rows() != m.cols()) return false;
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = i + 1; j < m.cols(); ++j)
      if (!(m(i, j) == m(j, i))) return false;
  return true;
}

template <class T>
Vector<T> mat_vec(const Matrix<T>& m, const Vector<T>& v) {
  Vector<T> r(m.rows());
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    T s(0);
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      if (!is_zero(v(j))) s = T(s + T(m(i, j) * v(j)));
    r(i) = s;
  }
  return r;
}

}  // namespace cobalt
