#pragma once

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace cobalt {

namespace modular {

inline uint64_t mul(uint64_t a, uint64_t b, uint64_t p) {
  return static_cast<uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}
inline uint64_t add(uint64_t a, uint64_t b, uint64_t p) {
  uint64_t s = a + b;
  return (s >= p || s < a) ? s - p : s;
}
inline uint64_t sub(uint64_t a, uint64_t b, uint64_t p) { return a >= b ? a - b : a + (p - b); }

inline uint64_t pow(uint64_t a, uint64_t e, uint64_t p) {
  uint64_t r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mul(r, a, p);
    a = mul(a, a, p);
    e >>= 1;
  }
  return r;
}

/// Inverse of a nonzero residue; throws on zero or non-invertible input.
inline uint64_t inv(uint64_t a, uint64_t p) {
  int64_t t = 0, new_t = 1;
  uint64_t r = p, new_r = a % p;
  while (new_r != 0) {
    uint64_t q = r / new_r;
    int64_t tmp_t = t - static_cast<int64_t>(q) * new_t;
    t = new_t;
    new_t = tmp_t;
    uint64_t tmp_r = r - q * new_r;
    r = new_r;
    new_r = tmp_r;
  }
  if (r != 1) throw std::domain_error("residue is not invertible");
  return t < 0 ? static_cast<uint64_t>(t + static_cast<int64_t>(p)) : static_cast<uint64_t>(t);
}

inline uint64_t from_signed(int64_t v, uint64_t p) {
  int64_t r = v % static_cast<int64_t>(p);
  return r < 0 ? static_cast<uint64_t>(r + static_cast<int64_t>(p)) : static_cast<uint64_t>(r);
}

/// Deterministic Miller-Rabin for 64-bit inputs.
bool is_prime(uint64_t n);

/// `count` distinct primes just below 2^62, largest first. Deterministic.
std::vector<uint64_t> large_primes(std::size_t count);

/// `count` distinct primes just below 2^31 (all above 2^30), largest first.
std::vector<uint64_t> word_primes(std::size_t count);

}  // namespace modular

/// Element of the prime field F_p.
///
/// An element built from a plain integer without a modulus is "unbound": it
/// acts as that integer and adopts the modulus of the first bound element it
/// meets. This lets generic code write `C(0)` and `C(1)` for every scalar.
class Fp {
 public:
  Fp() = default;
  Fp(long long v) : raw_(v) {}  // NOLINT(google-explicit-constructor)
  Fp(long long v, uint64_t p) : p_(p) {
    if (p < 2) throw std::domain_error("prime field modulus must be >= 2");
    v_ = modular::from_signed(v, p);
  }
  static Fp from_residue(uint64_t v, uint64_t p) {
    Fp r;
    r.p_ = p;
    r.v_ = v % p;
    return r;
  }

  bool bound() const { return p_ != 0; }
  uint64_t modulus() const { return p_; }
  /// Canonical residue; for unbound elements requires a non-negative value.
  uint64_t value() const {
    if (!bound()) {
      if (raw_ < 0) throw std::logic_error("unbound negative prime-field constant");
      return static_cast<uint64_t>(raw_);
    }
    return v_;
  }
  Fp bind(uint64_t p) const { return bound() ? *this : Fp(raw_, p); }

  bool is_zero() const { return bound() ? v_ == 0 : raw_ == 0; }
  bool is_one() const { return bound() ? v_ == 1 % p_ : raw_ == 1; }

  Fp inverse() const {
    if (!bound()) {
      if (raw_ == 1 || raw_ == -1) return *this;
      throw std::logic_error("inverse of unbound prime-field constant");
    }
    if (v_ == 0) throw std::domain_error("inverse of zero in prime field");
    return from_residue(modular::inv(v_, p_), p_);
  }

  friend Fp operator+(const Fp& a, const Fp& b) {
    uint64_t p = common(a, b);
    if (p == 0) return Fp(a.raw_ + b.raw_);
    return from_residue(modular::add(a.bind(p).v_, b.bind(p).v_, p), p);
  }
  friend Fp operator-(const Fp& a, const Fp& b) {
    uint64_t p = common(a, b);
    if (p == 0) return Fp(a.raw_ - b.raw_);
    return from_residue(modular::sub(a.bind(p).v_, b.bind(p).v_, p), p);
  }
  friend Fp operator*(const Fp& a, const Fp& b) {
    uint64_t p = common(a, b);
    if (p == 0) return Fp(a.raw_ * b.raw_);
    return from_residue(modular::mul(a.bind(p).v_, b.bind(p).v_, p), p);
  }
  friend Fp operator/(const Fp& a, const Fp& b) {
    uint64_t p = common(a, b);
    if (p == 0) return a * b.inverse();
    return a.bind(p) * b.bind(p).inverse();
  }
  Fp operator-() const { return Fp(0) - *this; }
  Fp& operator+=(const Fp& o) { return *this = *this + o; }
  Fp& operator-=(const Fp& o) { return *this = *this - o; }
  Fp& operator*=(const Fp& o) { return *this = *this * o; }
  Fp& operator/=(const Fp& o) { return *this = *this / o; }

  friend bool operator==(const Fp& a, const Fp& b) {
    uint64_t p = common(a, b);
    if (p == 0) return a.raw_ == b.raw_;
    return a.bind(p).v_ == b.bind(p).v_;
  }
  friend bool operator!=(const Fp& a, const Fp& b) { return !(a == b); }

  std::string str() const { return bound() ? std::to_string(v_) : std::to_string(raw_); }
  friend std::ostream& operator<<(std::ostream& os, const Fp& a) { return os << a.str(); }

 private:
  static uint64_t common(const Fp& a, const Fp& b) {
    if (a.p_ && b.p_ && a.p_ != b.p_) throw std::logic_error("mixed prime-field moduli");
    return a.p_ ? a.p_ : b.p_;
  }

  long long raw_ = 0;
  uint64_t v_ = 0;
  uint64_t p_ = 0;
};

}  // namespace cobalt
