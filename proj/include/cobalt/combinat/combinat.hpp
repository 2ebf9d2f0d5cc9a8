#pragma once

#include <string>
#include <vector>

#include "cobalt/core/integer.hpp"

namespace cobalt {

Integer stirling2(int n, int k);
Integer bell(int n);
/// Set partitions of n with one of k labels per block: sum_j S(n, j) k^j.
Integer generalized_bell(int n, int k);
/// binom(2n, n) / (n + 1).
Integer catalan(int n);
/// binom(n, k) binom(n, k - 1) / n; non-crossing partitions of n with k blocks.
Integer narayana(int n, int k);

/// a_0 = 1, a_1 = 2, a_n = 2 a_{n-1} + (n - 1) a_{n-2}.
Integer a_seq(int n);
/// sum_j binom(n, 2j) 2^{n-2j} (2j - 1)!!, from the EGF exp(2u + u^2/2).
Integer a_seq_closed(int n);

/// Total number of components over enumerate_Am(n, m), counted directly.
Integer d_nm(int n, int m);
/// n (a_n + 2 a_{n-1}) / 2.
Integer d_n_closed(int n);

/// sum over cycle types lambda of k of m_1(lambda)^n / z_lambda: invariants of
/// S_k in the n-th tensor power of its permutation representation.
Integer sym_invariant_dim(int k, int n);

/// binom(2n, n - h) - binom(2n, n - h - 1), zero for h > n.
Integer c_nh(int n, int h);

enum class SequenceDefinition { closed_form, recurrence, egf_extraction };

struct SequenceTable {
  std::string name;
  std::vector<Integer> values;
  SequenceDefinition definition = SequenceDefinition::closed_form;
};

SequenceTable sequence_table(const std::string& name, int max_n);

/// Predictions for the linear theory Z = b0 + b1 T, always flagged conjectural:
/// the exponent of (b1 - s) is a_n - dim A(n) at b1 = s, and the exponent of
/// b1 is 2n a_{n-1} + a_n - c_{n+1}.
struct ConjecturalPrediction {
  int n = 0;
  long s = 0;
  std::size_t dim_at_s = 0;
  Integer exp_beta1_minus_s;
  Integer exp_beta1;
  bool conjectural = true;
};

ConjecturalPrediction linear_conjecture_predictors(int n, long s);

}  // namespace cobalt
