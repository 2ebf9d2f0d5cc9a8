#pragma once

#include <string>
#include <vector>

#include "cobalt/gram/gram.hpp"

namespace cobalt {

/// A skein relation: a combination of surfaces expected to be negligible for z.
struct KnownRelation {
  std::string name;
  RationalSeries<MultiPoly> z;
  SurfaceVector<MultiPoly> vector;
};

/// Adds c times the orbit sum of the surface literal `s` to v.
void add_orbit(SurfaceVector<MultiPoly>& v, const MultiPoly& c, const std::string& s);

/// Relations for constant, linear and quadratic Z, with coefficients cleared
/// of denominators.
std::vector<KnownRelation> known_relations();

}  // namespace cobalt
