#include "cobalt/core/prime_field.hpp"

#include <mutex>

namespace cobalt::modular {

bool is_prime(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % p == 0) return n == p;
  }
  uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // These bases are a deterministic witness set for all n < 2^64.
  for (uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    uint64_t x = pow(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mul(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

namespace {

std::vector<uint64_t> primes_below(uint64_t bound, std::vector<uint64_t>& cache, std::mutex& mu,
                                   std::size_t count) {
  std::lock_guard<std::mutex> lock(mu);
  uint64_t c = cache.empty() ? bound - 1 : cache.back() - 2;
  if (c % 2 == 0) --c;
  while (cache.size() < count) {
    if (is_prime(c)) cache.push_back(c);
    c -= 2;
  }
  return std::vector<uint64_t>(cache.begin(), cache.begin() + static_cast<std::ptrdiff_t>(count));
}

}  // namespace

std::vector<uint64_t> large_primes(std::size_t count) {
  static std::vector<uint64_t> cache;
  static std::mutex mu;
  return primes_below(1ULL << 62, cache, mu, count);
}

std::vector<uint64_t> word_primes(std::size_t count) {
  static std::vector<uint64_t> cache;
  static std::mutex mu;
  return primes_below(1ULL << 31, cache, mu, count);
}

}  // namespace cobalt::modular
