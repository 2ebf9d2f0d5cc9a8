#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cobalt/core/multipoly.hpp"
#include "cobalt/genfun/series.hpp"

namespace cobalt {

class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::invalid_argument(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Parses `+ - * / ^` expressions with parentheses over the ring's variables.
/// Numbers are integers or decimals; division only by nonzero constants;
/// exponents are nonnegative integers.
MultiPoly parse_multipoly(std::string_view text, const RingPtr& ring);

/// A polynomial in T with coefficients in the given parameters.
UniPoly<MultiPoly> parse_param_poly(std::string_view text, const std::vector<std::string>& params);
/// A polynomial in T with rational coefficients.
UniPoly<Rational> parse_rational_poly(std::string_view text);

RationalSeries<Rational> parse_series(std::string_view num, std::string_view den);
RationalSeries<MultiPoly> parse_series(std::string_view num, std::string_view den,
                                       const std::vector<std::string>& params);

/// "beta,gamma" -> {"beta", "gamma"}.
std::vector<std::string> split_names(std::string_view list);

}  // namespace cobalt
