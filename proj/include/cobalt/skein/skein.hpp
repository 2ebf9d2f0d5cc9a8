#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "cobalt/core/determinant.hpp"
#include "cobalt/core/matrix.hpp"
#include "cobalt/genfun/series.hpp"

namespace cobalt {

/// End(1) of the skein category: basis x^n (n < K) followed by x^n u x^k
/// (n, k < K, row-major in n), with u x^m u = alpha_m u and U(x) = 0.
template <class C>
class SkeinAlgebra {
 public:
  using Element = std::vector<C>;

  /// From a handle polynomial U (monic, degree K) and alpha_0 .. alpha_{2K-1}.
  SkeinAlgebra(UniPoly<C> U, std::vector<C> alphas) : U_(std::move(U)), alphas_(std::move(alphas)) {
    K_ = U_.degree();
    if (K_ < 1) throw std::invalid_argument("skein algebra needs K >= 1");
    if (static_cast<int>(alphas_.size()) < 2 * K_) throw std::invalid_argument("need alpha_0 .. alpha_{2K-1}");
    build_powers();
    build_table();
  }

  int K() const { return K_; }
  int dim() const { return K_ * K_ + K_; }
  const std::vector<C>& alphas() const { return alphas_; }
  const UniPoly<C>& handle() const { return U_; }

  int x_index(int n) const { return n; }
  int uxk_index(int n, int k) const { return K_ + n * K_ + k; }

  std::string label(int i) const {
    auto xp = [](int e) { return e == 0 ? std::string() : e == 1 ? std::string("x") : "x^" + std::to_string(e); };
    if (i < K_) return i == 0 ? "1" : xp(i);
    int n = (i - K_) / K_, k = (i - K_) % K_;
    return xp(n) + "u" + xp(k);
  }

  Element zero() const { return Element(dim(), C(0)); }
  Element basis(int i) const {
    Element e = zero();
    e[i] = C(1);
    return e;
  }
  Element one() const { return basis(0); }

  const Element& mul_basis(int i, int j) const { return table_[i * dim() + j]; }

  Element mul(const Element& a, const Element& b) const {
    Element r = zero();
    for (int i = 0; i < dim(); ++i) {
      if (is_zero(a[i])) continue;
      for (int j = 0; j < dim(); ++j) {
        if (is_zero(b[j])) continue;
        C ab = C(a[i] * b[j]);
        const Element& t = mul_basis(i, j);
        for (int k = 0; k < dim(); ++k)
          if (!is_zero(t[k])) r[k] = C(r[k] + C(ab * t[k]));
      }
    }
    return r;
  }

  static Element add(const Element& a, const Element& b) {
    Element r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = C(a[i] + b[i]);
    return r;
  }
  static Element sub(const Element& a, const Element& b) {
    Element r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = C(a[i] - b[i]);
    return r;
  }
  static Element scaled(const C& c, const Element& a) {
    Element r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = C(c * a[i]);
    return r;
  }

  /// tr(x^n) = alpha_{n+1}, tr(x^n u x^k) = alpha_{n+k}.
  C trace_basis(int i) const {
    if (i < K_) return alphas_.at(i + 1);
    int n = (i - K_) / K_, k = (i - K_) % K_;
    return alphas_.at(n + k);
  }
  C trace(const Element& a) const {
    C t(0);
    for (int i = 0; i < dim(); ++i)
      if (!is_zero(a[i])) t = C(t + C(a[i] * trace_basis(i)));
    return t;
  }

  /// x^n u x^k -> x^k u x^n, fixing x-powers.
  Element bar(const Element& a) const {
    Element r = zero();
    for (int i = 0; i < dim(); ++i) {
      if (i < K_) {
        r[i] = a[i];
      } else {
        int n = (i - K_) / K_, k = (i - K_) % K_;
        r[uxk_index(k, n)] = a[i];
      }
    }
    return r;
  }

  Matrix<C> trace_gram() const {
    Matrix<C> g(dim(), dim());
    for (int i = 0; i < dim(); ++i)
      for (int j = 0; j < dim(); ++j) g(i, j) = trace(mul_basis(i, j));
    return g;
  }

  bool is_associative() const {
    for (int i = 0; i < dim(); ++i)
      for (int j = 0; j < dim(); ++j) {
        const Element& ij = mul_basis(i, j);
        for (int k = 0; k < dim(); ++k)
          if (!(mul(ij, basis(k)) == mul(basis(i), mul_basis(j, k)))) return false;
      }
    return true;
  }

  bool trace_is_symmetric() const {
    for (int i = 0; i < dim(); ++i)
      for (int j = i + 1; j < dim(); ++j)
        if (!(trace(mul_basis(i, j)) == trace(mul_basis(j, i)))) return false;
    return true;
  }

  /// bar(ab) = bar(b) bar(a) on all basis pairs.
  bool bar_is_anti_automorphism() const {
    for (int i = 0; i < dim(); ++i)
      for (int j = 0; j < dim(); ++j)
        if (!(bar(mul_basis(i, j)) == mul(bar(basis(j)), bar(basis(i))))) return false;
    return true;
  }

  std::string str(const Element& a) const {
    std::string s;
    for (int i = 0; i < dim(); ++i) {
      if (is_zero(a[i])) continue;
      if (!s.empty()) s += " + ";
      s += "(" + scalar_str(a[i]) + ")" + (i == 0 ? "" : "*" + label(i));
    }
    return s.empty() ? "0" : s;
  }

 private:
  // pow_[m] = x^m reduced modulo U, coefficients of 1..x^{K-1}, for m < 2K.
  void build_powers() {
    pow_.assign(2 * K_, std::vector<C>(K_, C(0)));
    for (int m = 0; m < K_; ++m) pow_[m][m] = C(1);
    for (int m = K_; m < 2 * K_; ++m) {
      // x * x^{m-1}: shift, then x^K = -sum_{i<K} U_i x^i.
      const auto& prev = pow_[m - 1];
      std::vector<C> cur(K_, C(0));
      for (int i = 0; i + 1 < K_; ++i) cur[i + 1] = prev[i];
      const C& top = prev[K_ - 1];
      if (!is_zero(top))
        for (int i = 0; i < K_; ++i) cur[i] = C(cur[i] - C(top * U_.coeff(i)));
      pow_[m] = std::move(cur);
    }
  }

  void build_table() {
    const int d = dim();
    table_.assign(d * d, zero());
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        Element& r = table_[i * d + j];
        if (i < K_ && j < K_) {
          for (int t = 0; t < K_; ++t) r[t] = pow_[i + j][t];
        } else if (i < K_) {
          int n = (j - K_) / K_, k = (j - K_) % K_;
          for (int t = 0; t < K_; ++t) r[uxk_index(t, k)] = pow_[i + n][t];
        } else if (j < K_) {
          int n = (i - K_) / K_, k = (i - K_) % K_;
          for (int t = 0; t < K_; ++t) r[uxk_index(n, t)] = pow_[k + j][t];
        } else {
          int n = (i - K_) / K_, k = (i - K_) % K_;
          int m = (j - K_) / K_, l = (j - K_) % K_;
          r[uxk_index(n, l)] = alphas_.at(k + m);
        }
      }
  }

  UniPoly<C> U_;
  std::vector<C> alphas_;
  int K_ = 0;
  std::vector<std::vector<C>> pow_;
  std::vector<Element> table_;
};

/// B_S for a concrete or parametric series.
template <class C>
SkeinAlgebra<C> build_BS(const RationalSeries<C>& z) {
  auto h = handle_polynomial(z);
  if (h.K < 1) throw std::invalid_argument("zero series has no skein algebra");
  return SkeinAlgebra<C>(h.poly, z.coefficients(static_cast<std::size_t>(2 * h.K)));
}

/// Fully symbolic B_S of rank K: alpha_0..alpha_{K-1} and the handle
/// coefficients q_1..q_K are free parameters, with U(x) = x^K + q_1 x^{K-1} + ... + q_K
/// and alpha_n = -(q_1 alpha_{n-1} + ... + q_K alpha_{n-K}) for n >= K.
SkeinAlgebra<MultiPoly> build_symbolic_BS(int K);

/// B = B_S modulo the radical of its trace form.
template <class F>
struct QuotientAlgebra {
  int dimension = 0;
  int radical_dimension = 0;
  Matrix<F> radical;                     // columns span the radical
  std::vector<int> complement;           // basis indices spanning a complement
  std::vector<std::vector<std::vector<F>>> structure;  // structure[i][j] = coords of b_i b_j
  Matrix<F> gram;                        // trace Gram matrix of B_S

  /// True iff a - b lies in the radical.
  bool equivalent(const std::vector<F>& a, const std::vector<F>& b) const {
    for (Eigen::Index i = 0; i < gram.rows(); ++i) {
      F s(0);
      for (Eigen::Index j = 0; j < gram.cols(); ++j) s = F(s + F(gram(i, j) * F(a[j] - b[j])));
      if (!is_zero(s)) return false;
    }
    return true;
  }

  /// Coordinates of the class of v in the complement basis.
  std::vector<F> project(std::vector<F> v) const {
    for (Eigen::Index r = 0; r < reduced_.rows(); ++r) {
      F c = v[pivots_[r]];
      if (is_zero(c)) continue;
      for (Eigen::Index j = 0; j < reduced_.cols(); ++j) v[j] = F(v[j] - F(c * reduced_(r, j)));
    }
    std::vector<F> out;
    for (int i : complement) out.push_back(v[i]);
    return out;
  }

  Matrix<F> reduced_;  // radical basis in reduced row echelon form (rows)
  std::vector<Eigen::Index> pivots_;
};

template <class F>
QuotientAlgebra<F> radical_quotient(const SkeinAlgebra<F>& a) {
  static_assert(is_field_v<F>, "radical quotient needs field coefficients");
  QuotientAlgebra<F> q;
  q.gram = a.trace_gram();
  q.radical = nullspace(q.gram);
  q.radical_dimension = static_cast<int>(q.radical.cols());
  q.dimension = a.dim() - q.radical_dimension;
  auto in_radical = [&](const std::vector<F>& v) { return q.equivalent(v, a.zero()); };
  for (Eigen::Index c = 0; c < q.radical.cols(); ++c) {
    std::vector<F> v(a.dim());
    for (int i = 0; i < a.dim(); ++i) v[i] = q.radical(i, c);
    for (int i = 0; i < a.dim(); ++i)
      if (!in_radical(a.mul(a.basis(i), v)) || !in_radical(a.mul(v, a.basis(i))))
        throw std::logic_error("radical of the trace form is not a two-sided ideal");
  }
  q.reduced_ = transposed(q.radical);
  q.pivots_ = rref_in_place(q.reduced_);
  q.reduced_.conservativeResize(static_cast<Eigen::Index>(q.pivots_.size()), q.reduced_.cols());
  std::vector<bool> is_pivot(a.dim(), false);
  for (auto p : q.pivots_) is_pivot[p] = true;
  for (int i = 0; i < a.dim(); ++i)
    if (!is_pivot[i]) q.complement.push_back(i);
  for (int i : q.complement) {
    std::vector<std::vector<F>> row;
    for (int j : q.complement) row.push_back(q.project(a.mul_basis(i, j)));
    q.structure.push_back(std::move(row));
  }
  return q;
}

struct Mat2SplitCheck {
  int quotient_dimension = 0;
  bool z_squared = false;        // z^2 = -b1 z
  bool matrix_units = false;     // E_ij E_kl = delta_jk E_il
  bool idempotent_central = false;
  bool unit_decomposition = false;  // E11 + E22 + e = 1
  bool holds() const { return quotient_dimension == 5 && z_squared && matrix_units && idempotent_central && unit_decomposition; }
};

/// For Z = b0 + b1 T with b1 not in {0, 2}: checks B = Mat_2 x k modulo the
/// radical through the images E11 = b1^-1 ux, E12 = b1^-1 (u - b0 b1^-1 ux),
/// E21 = x, E22 = b1^-1 (xu - b0 x) and e = -b1^-1 z, z = xu + ux - b0 x - b1.
Mat2SplitCheck verify_mat2_split(const Rational& b0, const Rational& b1);

}  // namespace cobalt
