#pragma once

#include <cstdint>
#include <vector>

#include "cobalt/core/matrix.hpp"

namespace cobalt {

/// Dense row-major matrix of residues modulo a single prime.
struct ModMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  uint64_t p = 0;
  std::vector<uint64_t> data;

  ModMatrix() = default;
  ModMatrix(std::size_t r, std::size_t c, uint64_t prime) : rows(r), cols(c), p(prime), data(r * c, 0) {}
  uint64_t& operator()(std::size_t i, std::size_t j) { return data[i * cols + j]; }
  uint64_t operator()(std::size_t i, std::size_t j) const { return data[i * cols + j]; }
};

/// Determinant modulo p by Gaussian elimination (destroys its argument).
uint64_t det_mod_p(ModMatrix m);

/// Rank modulo p by Gaussian elimination.
std::size_t rank_mod_p(ModMatrix m);

/// Reduces an integer matrix modulo p.
ModMatrix reduce_mod_p(const Matrix<Integer>& m, uint64_t p);

/// Reduces a rational matrix modulo p; throws if a denominator vanishes mod p.
ModMatrix reduce_mod_p(const Matrix<Rational>& m, uint64_t p);

/// Scales each row by the lcm of its denominators, giving an integer matrix
/// with the same rank (and determinant times the product of the scalings).
Matrix<Integer> clear_row_denominators(const Matrix<Rational>& m, Integer* scale = nullptr);

struct RankResult {
  std::size_t rank = 0;
  std::vector<std::size_t> modular_ranks;
  bool escalated = false;  // true when primes disagreed and exact elimination ran
};

/// Exact rank over Q: ranks modulo several primes above 2^30, the maximum
/// returned when they agree, exact fraction-free elimination otherwise.
RankResult rank_exact_report(const Matrix<Rational>& m, std::size_t num_primes = 3);
std::size_t rank_exact(const Matrix<Rational>& m);
std::size_t rank_exact(const Matrix<Fp>& m);

/// Rank of an integer matrix by fraction-free elimination (no modular step).
std::size_t rank_fraction_free(Matrix<Integer> m);

}  // namespace cobalt
