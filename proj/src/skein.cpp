#include "cobalt/skein/skein.hpp"

namespace cobalt {

SkeinAlgebra<MultiPoly> build_symbolic_BS(int K) {
  if (K < 1) throw std::invalid_argument("skein algebra needs K >= 1");
  std::vector<std::string> names;
  for (int i = 0; i < K; ++i) names.push_back("a" + std::to_string(i));
  for (int i = 1; i <= K; ++i) names.push_back("q" + std::to_string(i));
  auto ring = make_ring(names);
  std::vector<MultiPoly> u(K + 1, MultiPoly(ring, Rational(0)));
  u[K] = MultiPoly(ring, Rational(1));
  for (int i = 1; i <= K; ++i) u[K - i] = MultiPoly::variable(ring, K + i - 1);
  std::vector<MultiPoly> alphas;
  for (int n = 0; n < 2 * K; ++n) {
    if (n < K) {
      alphas.push_back(MultiPoly::variable(ring, n));
      continue;
    }
    MultiPoly s(ring, Rational(0));
    for (int i = 1; i <= K; ++i) s -= u[K - i] * alphas[n - i];
    alphas.push_back(s);
  }
  return SkeinAlgebra<MultiPoly>(UniPoly<MultiPoly>(u), alphas);
}

Mat2SplitCheck verify_mat2_split(const Rational& b0, const Rational& b1) {
  if (b1 == 0 || b1 == 2) throw std::invalid_argument("split check needs b1 not in {0, 2}");
  auto z = normalize(UniPoly<Rational>(std::vector<Rational>{b0, b1}), UniPoly<Rational>(Rational(1)));
  auto a = build_BS(z);
  auto q = radical_quotient(a);
  using A = SkeinAlgebra<Rational>;
  const Rational inv = 1 / b1;
  auto one = a.one();
  auto x = a.basis(a.x_index(1));
  auto u = a.basis(a.uxk_index(0, 0));
  auto ux = a.basis(a.uxk_index(0, 1));
  auto xu = a.basis(a.uxk_index(1, 0));

  std::vector<A::Element> E(4);  // E11, E12, E21, E22
  E[0] = A::scaled(inv, ux);
  E[1] = A::scaled(inv, A::sub(u, A::scaled(b0 * inv, ux)));
  E[2] = x;
  E[3] = A::scaled(inv, A::sub(xu, A::scaled(b0, x)));
  auto zz = A::sub(A::sub(A::add(xu, ux), A::scaled(b0, x)), A::scaled(b1, one));
  auto e = A::scaled(-inv, zz);

  Mat2SplitCheck r;
  r.quotient_dimension = q.dimension;
  r.z_squared = q.equivalent(a.mul(zz, zz), A::scaled(-b1, zz));
  r.matrix_units = true;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l) {
          auto lhs = a.mul(E[2 * i + j], E[2 * k + l]);
          auto rhs = j == k ? E[2 * i + l] : a.zero();
          r.matrix_units &= q.equivalent(lhs, rhs);
        }
  r.idempotent_central = q.equivalent(a.mul(e, e), e);
  for (int i = 0; i < a.dim(); ++i) r.idempotent_central &= q.equivalent(a.mul(e, a.basis(i)), a.mul(a.basis(i), e));
  for (const auto& m : E) {
    r.idempotent_central &= q.equivalent(a.mul(e, m), a.zero());
    r.idempotent_central &= q.equivalent(a.mul(m, e), a.zero());
  }
  r.unit_decomposition = q.equivalent(A::add(A::add(E[0], E[3]), e), one);
  return r;
}

}  // namespace cobalt
