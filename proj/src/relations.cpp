#include "cobalt/gram/relations.hpp"

#include "cobalt/io/parser.hpp"

namespace cobalt {

void add_orbit(SurfaceVector<MultiPoly>& v, const MultiPoly& c, const std::string& s) {
  for (const auto& t : orbit(parse_surface(s))) v.add(t, c);
}

std::vector<KnownRelation> known_relations() {
  std::vector<KnownRelation> out;

  {
    const std::vector<std::string> vars{"beta"};
    auto ring = make_ring(vars);
    auto p = [&](const std::string& t) { return parse_multipoly(t, ring); };
    KnownRelation r{"constant Z, A(4): eight-term symmetric relation", parse_series("beta", "1", vars), {}};
    add_orbit(r.vector, p("1"), "{1,2}{3,4}");
    add_orbit(r.vector, p("-1"), "{1,2,3}{4}");
    add_orbit(r.vector, p("beta"), "{1,2,3,4}");
    out.push_back(std::move(r));
  }
  {
    const std::vector<std::string> vars{"beta0", "beta1"};
    auto ring = make_ring(vars);
    auto p = [&](const std::string& t) { return parse_multipoly(t, ring); };
    auto z = parse_series("beta0 + beta1*T", "1", vars);
    KnownRelation two{"linear Z, A(2): two dotted cups", z, {}};
    add_orbit(two.vector, p("1"), "{1:g1}{2:g1}");
    add_orbit(two.vector, p("-beta1"), "{1,2:g1}");
    out.push_back(std::move(two));

    // Multiplied through by beta1^3.
    KnownRelation seven{"linear Z, A(3): seven-term relation", z, {}};
    add_orbit(seven.vector, p("beta1^3"), "{1,2,3}");
    add_orbit(seven.vector, p("-beta0"), "{1:g1}{2:g1}{3:g1}");
    add_orbit(seven.vector, p("beta1"), "{1:g1}{2:g1}{3}");
    add_orbit(seven.vector, p("-beta1^2"), "{1,2}{3:g1}");
    out.push_back(std::move(seven));
  }
  {
    const std::vector<std::string> vars{"beta0", "beta1", "beta2"};
    auto ring = make_ring(vars);
    auto p = [&](const std::string& t) { return parse_multipoly(t, ring); };
    auto z = parse_series("beta0 + beta1*T + beta2*T^2", "1", vars);

    KnownRelation three{"quadratic Z, A(3): three-holed torus", z, {}};
    add_orbit(three.vector, p("beta2^3"), "{1,2,3:g1}");
    add_orbit(three.vector, p("-beta2^2"), "{1,2:g1}{3:g2}");
    add_orbit(three.vector, p("beta2"), "{1:g1}{2:g2}{3:g2}");
    add_orbit(three.vector, p("-beta1"), "{1:g2}{2:g2}{3:g2}");
    out.push_back(std::move(three));

    KnownRelation four{"quadratic Z, A(4): four-holed sphere", z, {}};
    add_orbit(four.vector, p("beta2^5"), "{1,2,3,4}");
    add_orbit(four.vector, p("-beta2^4"), "{1,2,3}{4:g2}");
    add_orbit(four.vector, p("-beta2^4"), "{1,2:g1}{3,4:g1}");
    add_orbit(four.vector, p("beta2^3"), "{1,2}{3:g2}{4:g2}");
    add_orbit(four.vector, p("beta2^3"), "{1,2:g1}{3:g1}{4:g2}");
    add_orbit(four.vector, p("-beta1*beta2^2"), "{1,2:g1}{3:g2}{4:g2}");
    add_orbit(four.vector, p("-beta2^2"), "{1}{2:g2}{3:g2}{4:g2}");
    add_orbit(four.vector, p("-2*beta2^2"), "{1:g1}{2:g1}{3:g2}{4:g2}");
    add_orbit(four.vector, p("3*beta1*beta2"), "{1:g1}{2:g2}{3:g2}{4:g2}");
    add_orbit(four.vector, p("-3*beta1^2 + beta0*beta2"), "{1:g2}{2:g2}{3:g2}{4:g2}");
    out.push_back(std::move(four));
  }
  return out;
}

}  // namespace cobalt
