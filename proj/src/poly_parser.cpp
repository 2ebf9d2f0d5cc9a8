#include "cobalt/io/parser.hpp"

#include <cctype>

namespace cobalt {

namespace {

class Parser {
 public:
  Parser(std::string_view text, const RingPtr& ring) : s_(text), ring_(ring) {}

  MultiPoly parse() {
    MultiPoly r = expr();
    skip();
    if (pos_ < s_.size()) throw ParseError(std::string("unexpected '") + s_[pos_] + "'", pos_);
    return r;
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  MultiPoly expr() {
    skip();
    MultiPoly r = term();
    for (;;) {
      if (accept('+')) r += term();
      else if (accept('-')) r -= term();
      else return r;
    }
  }

  MultiPoly term() {
    MultiPoly r = unary();
    for (;;) {
      if (accept('*')) {
        r *= unary();
      } else if (accept('/')) {
        std::size_t at = pos_;
        MultiPoly d = unary();
        auto c = d.as_constant();
        if (!c) throw ParseError("division by a non-constant", at);
        if (*c == 0) throw ParseError("division by zero", at);
        r *= MultiPoly(Rational(1 / *c));
      } else {
        return r;
      }
    }
  }

  MultiPoly unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  MultiPoly power() {
    MultiPoly b = atom();
    if (accept('^')) {
      skip();
      std::size_t at = pos_;
      if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
        throw ParseError("expected a nonnegative integer exponent", at);
      unsigned long e = 0;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
        e = e * 10 + static_cast<unsigned long>(s_[pos_++] - '0');
        if (e > 100000) throw ParseError("exponent too large", at);
      }
      return pow(b, static_cast<unsigned>(e));
    }
    return b;
  }

  MultiPoly atom() {
    skip();
    if (pos_ >= s_.size()) throw ParseError("unexpected end of input", pos_);
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      MultiPoly r = expr();
      if (!accept(')')) throw ParseError("expected ')'", pos_);
      return r;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      std::string_view name = s_.substr(start, pos_ - start);
      auto idx = ring_ ? ring_->index_of(name) : std::nullopt;
      if (!idx) throw ParseError("unknown symbol '" + std::string(name) + "'", start);
      return MultiPoly::variable(ring_, *idx);
    }
    throw ParseError(std::string("unexpected '") + c + "'", pos_);
  }

  MultiPoly number() {
    std::size_t start = pos_;
    std::string digits;
    long frac = -1;
    while (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '.')) {
      if (s_[pos_] == '.') {
        if (frac >= 0) throw ParseError("malformed number", start);
        frac = 0;
      } else {
        digits += s_[pos_];
        if (frac >= 0) ++frac;
      }
      ++pos_;
    }
    if (digits.empty()) throw ParseError("malformed number", start);
    Rational v(Integer(digits), Integer(1));
    if (frac > 0) v /= Rational(integer_pow(10, static_cast<unsigned long>(frac)));
    v.canonicalize();
    return MultiPoly(v);
  }

  std::string_view s_;
  RingPtr ring_;
  std::size_t pos_ = 0;
};

}  // namespace

MultiPoly parse_multipoly(std::string_view text, const RingPtr& ring) {
  MultiPoly r = Parser(text, ring).parse();
  return ring && !r.ring() ? MultiPoly(ring, r.constant_term()) : r;
}

std::vector<std::string> split_names(std::string_view list) {
  std::vector<std::string> out;
  std::string cur;
  auto flush = [&] {
    if (!cur.empty()) out.push_back(cur);
    cur.clear();
  };
  for (char c : list) {
    if (c == ',') flush();
    else if (!std::isspace(static_cast<unsigned char>(c))) cur += c;
  }
  flush();
  return out;
}

UniPoly<MultiPoly> parse_param_poly(std::string_view text, const std::vector<std::string>& params) {
  for (const auto& p : params)
    if (p == "T") throw std::invalid_argument("parameter name T is reserved for the series variable");
  auto names = params;
  names.push_back("T");
  auto full = make_ring(names);
  auto base = make_ring(params);
  MultiPoly p = parse_multipoly(text, full);
  const std::size_t t = params.size();
  int deg = p.is_zero() ? -1 : p.degree_in(t);
  std::vector<std::vector<Term>> by_degree(std::max(deg + 1, 0));
  for (const auto& term : p.terms()) {
    Exponents e(term.exps.begin(), term.exps.begin() + static_cast<long>(t));
    by_degree[term.exps[t]].push_back({e, term.coef});
  }
  std::vector<MultiPoly> coeffs;
  for (auto& ts : by_degree) coeffs.push_back(MultiPoly::from_terms(base, std::move(ts)));
  return UniPoly<MultiPoly>(coeffs);
}

UniPoly<Rational> parse_rational_poly(std::string_view text) {
  auto p = parse_param_poly(text, {});
  std::vector<Rational> c;
  for (const auto& m : p.coeffs()) c.push_back(m.constant_term());
  return UniPoly<Rational>(c);
}

RationalSeries<Rational> parse_series(std::string_view num, std::string_view den) {
  return normalize(parse_rational_poly(num), parse_rational_poly(den));
}

RationalSeries<MultiPoly> parse_series(std::string_view num, std::string_view den,
                                       const std::vector<std::string>& params) {
  return normalize(parse_param_poly(num, params), parse_param_poly(den, params));
}

}  // namespace cobalt
