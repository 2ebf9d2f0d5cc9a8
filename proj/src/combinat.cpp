#include "cobalt/combinat/combinat.hpp"

#include <functional>
#include <stdexcept>

#include "cobalt/gram/gram.hpp"

namespace cobalt {

Integer stirling2(int n, int k) {
  if (n < 0 || k < 0) throw std::invalid_argument("negative argument");
  std::vector<Integer> row(k + 1, 0);
  row[0] = 1;
  for (int i = 1; i <= n; ++i)
    for (int j = std::min(i, k); j >= 0; --j) row[j] = j == 0 ? Integer(0) : Integer(j * row[j] + row[j - 1]);
  return row[k];
}

Integer bell(int n) { return generalized_bell(n, 1); }

Integer generalized_bell(int n, int k) {
  if (n < 0 || k < 0) throw std::invalid_argument("negative argument");
  Integer s = 0;
  for (int j = 0; j <= n; ++j) s += stirling2(n, j) * integer_pow(k, j);
  return s;
}

Integer catalan(int n) {
  if (n < 0) throw std::invalid_argument("negative argument");
  return binomial(2 * n, n) / (n + 1);
}

Integer narayana(int n, int k) {
  if (n < 1 || k < 1 || k > n) throw std::invalid_argument("narayana(n, k) needs 1 <= k <= n");
  return binomial(n, k) * binomial(n, k - 1) / n;
}

Integer a_seq(int n) {
  if (n < 0) throw std::invalid_argument("negative argument");
  Integer a = 1, b = 2;
  if (n == 0) return a;
  for (int i = 2; i <= n; ++i) {
    Integer c = 2 * b + (i - 1) * a;
    a = b;
    b = c;
  }
  return b;
}

Integer a_seq_closed(int n) {
  Integer s = 0;
  for (int j = 0; 2 * j <= n; ++j) {
    Integer dfact = 1;
    for (int i = 2 * j - 1; i > 1; i -= 2) dfact *= i;
    s += binomial(n, 2 * j) * integer_pow(2, n - 2 * j) * dfact;
  }
  return s;
}

Integer d_nm(int n, int m) {
  if (m < 1) throw std::invalid_argument("m must be at least 1");
  Integer d = 0;
  for (const auto& s : enumerate_Am(n, m)) d += s.num_blocks();
  return d;
}

Integer d_n_closed(int n) {
  if (n < 1) throw std::invalid_argument("n must be at least 1");
  return n * (a_seq(n) + 2 * a_seq(n - 1)) / 2;
}

Integer sym_invariant_dim(int k, int n) {
  if (k < 1) throw std::invalid_argument("k must be at least 1");
  // Walk the partitions of k by multiplicities m_1..m_k.
  Rational total = 0;
  std::vector<int> mult(k + 1, 0);
  std::function<void(int, int)> walk = [&](int remaining, int largest) {
    if (remaining == 0) {
      Integer z = 1;
      for (int i = 1; i <= k; ++i) z *= integer_pow(i, mult[i]) * factorial(mult[i]);
      total += Rational(integer_pow(mult[1], n)) / Rational(z);
      return;
    }
    for (int part = std::min(remaining, largest); part >= 1; --part) {
      ++mult[part];
      walk(remaining - part, part);
      --mult[part];
    }
  };
  walk(k, k);
  if (total.get_den() != 1) throw std::logic_error("invariant dimension is not an integer");
  return total.get_num();
}

Integer c_nh(int n, int h) {
  if (h > n) return 0;
  Integer a = binomial(2 * n, n - h);
  Integer b = n - h - 1 >= 0 ? binomial(2 * n, n - h - 1) : Integer(0);
  return a - b;
}

SequenceTable sequence_table(const std::string& name, int max_n) {
  SequenceTable t;
  t.name = name;
  for (int n = 0; n <= max_n; ++n) {
    if (name == "bell") {
      t.values.push_back(bell(n));
      t.definition = SequenceDefinition::closed_form;
    } else if (name == "catalan") {
      t.values.push_back(catalan(n));
      t.definition = SequenceDefinition::closed_form;
    } else if (name == "a") {
      t.values.push_back(a_seq(n));
      t.definition = SequenceDefinition::recurrence;
    } else if (name == "bell2") {
      t.values.push_back(generalized_bell(n, 2));
      t.definition = SequenceDefinition::egf_extraction;
    } else {
      throw std::invalid_argument("unknown sequence " + name);
    }
  }
  return t;
}

ConjecturalPrediction linear_conjecture_predictors(int n, long s) {
  if (n < 1) throw std::invalid_argument("n must be at least 1");
  if (s == 0) throw std::invalid_argument("s must be nonzero");
  ConjecturalPrediction p;
  p.n = n;
  p.s = s;
  // A^1(n) spans A(n) for a linear theory; b0 = 1 is a generic choice.
  auto z = normalize(UniPoly<Rational>(std::vector<Rational>{Rational(1), Rational(s)}), UniPoly<Rational>(Rational(1)));
  p.dim_at_s = gram_rank(enumerate_Am(n, 1), z);
  p.exp_beta1_minus_s = a_seq(n) - static_cast<unsigned long>(p.dim_at_s);
  p.exp_beta1 = 2 * n * a_seq(n - 1) + a_seq(n) - catalan(n + 1);
  return p;
}

}  // namespace cobalt
