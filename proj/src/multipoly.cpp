#include "cobalt/core/multipoly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "cobalt/core/prime_field.hpp"

namespace cobalt {

PolyRing::PolyRing(std::vector<std::string> names) : names_(std::move(names)) {
  for (std::size_t i = 0; i < names_.size(); ++i)
    for (std::size_t j = i + 1; j < names_.size(); ++j)
      if (names_[i] == names_[j]) throw std::invalid_argument("duplicate variable name '" + names_[i] + "'");
}

std::optional<std::size_t> PolyRing::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

RingPtr make_ring(std::vector<std::string> names) {
  return std::make_shared<const PolyRing>(std::move(names));
}

int grlex_compare(const Exponents& a, const Exponents& b) {
  uint64_t da = 0, db = 0;
  for (auto e : a) da += e;
  for (auto e : b) db += e;
  if (da != db) return da < db ? -1 : 1;
  std::size_t n = std::max(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    uint32_t x = i < a.size() ? a[i] : 0;
    uint32_t y = i < b.size() ? b[i] : 0;
    if (x != y) return x < y ? -1 : 1;
  }
  return 0;
}

namespace {

bool grlex_greater(const Term& a, const Term& b) { return grlex_compare(a.exps, b.exps) > 0; }

// Merge two sorted term lists, b scaled by `sign`.
std::vector<Term> merge_terms(const std::vector<Term>& a, const std::vector<Term>& b, int sign) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    int c;
    if (i == a.size()) c = -1;
    else if (j == b.size()) c = 1;
    else c = grlex_compare(a[i].exps, b[j].exps);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back(b[j++]);
      if (sign < 0) out.back().coef = -out.back().coef;
    } else {
      Rational s = sign > 0 ? Rational(a[i].coef + b[j].coef) : Rational(a[i].coef - b[j].coef);
      if (s != 0) out.push_back(Term{a[i].exps, s});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

MultiPoly::MultiPoly(long c) {
  if (c != 0) terms_.push_back(Term{{}, Rational(c)});
}

MultiPoly::MultiPoly(const Rational& c) {
  if (c != 0) terms_.push_back(Term{{}, c});
}

MultiPoly::MultiPoly(RingPtr ring, const Rational& c) : ring_(std::move(ring)) {
  if (c != 0) terms_.push_back(Term{Exponents(num_vars(), 0), c});
}

MultiPoly MultiPoly::variable(const RingPtr& ring, std::size_t index) {
  if (!ring || index >= ring->size()) throw std::out_of_range("variable index out of range");
  Exponents e(ring->size(), 0);
  e[index] = 1;
  return monomial(ring, std::move(e), Rational(1));
}

MultiPoly MultiPoly::variable(const RingPtr& ring, std::string_view name) {
  auto idx = ring ? ring->index_of(name) : std::nullopt;
  if (!idx) throw std::invalid_argument("unknown variable '" + std::string(name) + "'");
  return variable(ring, *idx);
}

MultiPoly MultiPoly::monomial(const RingPtr& ring, Exponents exps, Rational coef) {
  MultiPoly p;
  p.ring_ = ring;
  if (exps.size() != p.num_vars()) throw std::invalid_argument("exponent vector length mismatch");
  if (coef != 0) p.terms_.push_back(Term{std::move(exps), std::move(coef)});
  return p;
}

MultiPoly MultiPoly::from_terms(const RingPtr& ring, std::vector<Term> terms) {
  MultiPoly p;
  p.ring_ = ring;
  for (auto& t : terms)
    if (t.exps.size() != p.num_vars()) throw std::invalid_argument("exponent vector length mismatch");
  std::sort(terms.begin(), terms.end(), grlex_greater);
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().exps == t.exps) {
      p.terms_.back().coef += t.coef;
      if (p.terms_.back().coef == 0) p.terms_.pop_back();
    } else if (t.coef != 0) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

bool MultiPoly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  for (auto e : terms_[0].exps)
    if (e) return false;
  return true;
}

std::optional<Rational> MultiPoly::as_constant() const {
  if (!is_constant()) return std::nullopt;
  return constant_term();
}

Rational MultiPoly::constant_term() const {
  if (terms_.empty()) return Rational(0);
  const Term& last = terms_.back();
  for (auto e : last.exps)
    if (e) return Rational(0);
  return last.coef;
}

int MultiPoly::total_degree() const {
  if (terms_.empty()) return -1;
  int d = 0;
  for (auto e : terms_.front().exps) d += static_cast<int>(e);
  return d;
}

int MultiPoly::degree_in(std::size_t var) const {
  if (terms_.empty()) return -1;
  int d = 0;
  for (const auto& t : terms_)
    if (var < t.exps.size()) d = std::max(d, static_cast<int>(t.exps[var]));
  return d;
}

const Term& MultiPoly::leading_term() const {
  if (terms_.empty()) throw std::logic_error("leading term of zero polynomial");
  return terms_.front();
}

Rational MultiPoly::l1_norm() const {
  Rational s(0);
  for (const auto& t : terms_) s += abs(t.coef);
  return s;
}

Integer MultiPoly::denominator_lcm() const {
  Integer l(1);
  for (const auto& t : terms_) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), t.coef.get_den_mpz_t());
  return l;
}

Rational MultiPoly::evaluate(std::span<const Rational> point) const {
  if (point.size() != num_vars()) throw std::invalid_argument("evaluation point has wrong dimension");
  Rational s(0);
  for (const auto& t : terms_) {
    Rational m = t.coef;
    for (std::size_t i = 0; i < t.exps.size(); ++i)
      if (t.exps[i]) m *= rational_pow(point[i], t.exps[i]);
    s += m;
  }
  return s;
}

uint64_t MultiPoly::evaluate_mod(std::span<const uint64_t> point, uint64_t p) const {
  if (point.size() != num_vars()) throw std::invalid_argument("evaluation point has wrong dimension");
  uint64_t s = 0;
  for (const auto& t : terms_) {
    uint64_t c = modular::mul(mod_u64(t.coef.get_num(), p), modular::inv(mod_u64(t.coef.get_den(), p), p), p);
    for (std::size_t i = 0; i < t.exps.size(); ++i)
      if (t.exps[i]) c = modular::mul(c, modular::pow(point[i], t.exps[i], p), p);
    s = modular::add(s, c, p);
  }
  return s;
}

MultiPoly MultiPoly::substitute(std::size_t var, const Rational& value) const {
  if (var >= num_vars()) throw std::out_of_range("substitution variable out of range");
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Term u = t;
    u.coef *= rational_pow(value, t.exps[var]);
    u.exps[var] = 0;
    out.push_back(std::move(u));
  }
  return from_terms(ring_, std::move(out));
}

MultiPoly MultiPoly::rebind(const RingPtr& target) const {
  if (ring_ == target) return *this;
  std::vector<std::size_t> map(num_vars());
  for (std::size_t i = 0; i < num_vars(); ++i) {
    auto idx = target ? target->index_of(ring_->names()[i]) : std::nullopt;
    bool used = false;
    for (const auto& t : terms_) used = used || t.exps[i] != 0;
    if (!idx) {
      if (used) throw std::invalid_argument("variable '" + ring_->names()[i] + "' missing from target ring");
      map[i] = SIZE_MAX;
    } else {
      map[i] = *idx;
    }
  }
  std::vector<Term> out;
  std::size_t n = target ? target->size() : 0;
  for (const auto& t : terms_) {
    Term u{Exponents(n, 0), t.coef};
    for (std::size_t i = 0; i < t.exps.size(); ++i)
      if (t.exps[i]) u.exps[map[i]] = t.exps[i];
    out.push_back(std::move(u));
  }
  return from_terms(target, std::move(out));
}

std::string MultiPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    Rational c = t.coef;
    bool neg = c < 0;
    if (neg) c = -c;
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    bool has_var = false;
    std::ostringstream mono;
    for (std::size_t i = 0; i < t.exps.size(); ++i) {
      if (!t.exps[i]) continue;
      if (has_var) mono << "*";
      mono << ring_->names()[i];
      if (t.exps[i] > 1) mono << "^" << t.exps[i];
      has_var = true;
    }
    if (!has_var) {
      os << c.get_str();
    } else if (c == 1) {
      os << mono.str();
    } else {
      os << c.get_str() << "*" << mono.str();
    }
  }
  return os.str();
}

RingPtr MultiPoly::common_ring(const MultiPoly& a, const MultiPoly& b) {
  if (!a.ring_) return b.ring_;
  if (!b.ring_) return a.ring_;
  if (a.ring_ == b.ring_ || *a.ring_ == *b.ring_) return a.ring_;
  throw std::invalid_argument("polynomials from different rings");
}

void MultiPoly::bind_to(const RingPtr& ring) {
  if (ring_ == ring) return;
  if (ring_ && ring && *ring_ == *ring) {
    ring_ = ring;
    return;
  }
  if (ring_) throw std::invalid_argument("polynomials from different rings");
  ring_ = ring;
  for (auto& t : terms_) t.exps.assign(num_vars(), 0);
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r = *this;
  for (auto& t : r.terms_) t.coef = -t.coef;
  return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) { return *this = *this + o; }
MultiPoly& MultiPoly::operator-=(const MultiPoly& o) { return *this = *this - o; }
MultiPoly& MultiPoly::operator*=(const MultiPoly& o) { return *this = *this * o; }

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
  RingPtr ring = MultiPoly::common_ring(a, b);
  MultiPoly x = a, y = b;
  x.bind_to(ring);
  y.bind_to(ring);
  MultiPoly r;
  r.ring_ = ring;
  r.terms_ = merge_terms(x.terms_, y.terms_, +1);
  return r;
}

MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) {
  RingPtr ring = MultiPoly::common_ring(a, b);
  MultiPoly x = a, y = b;
  x.bind_to(ring);
  y.bind_to(ring);
  MultiPoly r;
  r.ring_ = ring;
  r.terms_ = merge_terms(x.terms_, y.terms_, -1);
  return r;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  RingPtr ring = MultiPoly::common_ring(a, b);
  MultiPoly x = a, y = b;
  x.bind_to(ring);
  y.bind_to(ring);
  if (x.is_zero() || y.is_zero()) {
    MultiPoly z;
    z.ring_ = ring;
    return z;
  }
  std::size_t n = ring ? ring->size() : 0;
  std::vector<Term> prod;
  prod.reserve(x.terms_.size() * y.terms_.size());
  for (const auto& s : x.terms_) {
    for (const auto& t : y.terms_) {
      Term u{Exponents(n), s.coef * t.coef};
      for (std::size_t i = 0; i < n; ++i) u.exps[i] = s.exps[i] + t.exps[i];
      prod.push_back(std::move(u));
    }
  }
  return MultiPoly::from_terms(ring, std::move(prod));
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (a.terms_[i].coef != b.terms_[i].coef) return false;
    if (grlex_compare(a.terms_[i].exps, b.terms_[i].exps) != 0) return false;
  }
  if (a.ring_ && b.ring_ && !(*a.ring_ == *b.ring_) && !a.is_constant()) return false;
  return true;
}

MultiPoly exact_div(const MultiPoly& a, const MultiPoly& b) {
  if (b.is_zero()) throw std::domain_error("division by zero polynomial");
  if (auto c = b.as_constant()) {
    MultiPoly q = a;
    for (auto& t : const_cast<std::vector<Term>&>(q.terms())) t.coef /= *c;
    return q;
  }
  RingPtr ring = a.ring() ? a.ring() : b.ring();
  MultiPoly r = a.ring() ? a : a.rebind(ring);
  MultiPoly bb = b;
  std::vector<Term> quotient;
  const Term& lb = bb.leading_term();
  while (!r.is_zero()) {
    const Term& lr = r.leading_term();
    Term q{Exponents(lr.exps.size()), lr.coef / lb.coef};
    for (std::size_t i = 0; i < lr.exps.size(); ++i) {
      if (lr.exps[i] < lb.exps[i]) throw std::domain_error("inexact polynomial division");
      q.exps[i] = lr.exps[i] - lb.exps[i];
    }
    MultiPoly qt = MultiPoly::monomial(ring, q.exps, q.coef);
    r = r - qt * bb;
    quotient.push_back(std::move(q));
  }
  return MultiPoly::from_terms(ring, std::move(quotient));
}

MultiPoly pow(const MultiPoly& base, unsigned e) {
  MultiPoly r(1L);
  MultiPoly b = base;
  while (e) {
    if (e & 1) r = r * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return r;
}

}  // namespace cobalt
