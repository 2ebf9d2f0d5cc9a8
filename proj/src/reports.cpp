#include "cobalt/io/reports.hpp"

#include <algorithm>
#include <fstream>
#include <stdexcept>

#include "cobalt/io/parser.hpp"

namespace cobalt {

SpanningSet parse_spanning(const std::string& text, int default_K) {
  auto colon = text.find(':');
  std::string kind = text.substr(0, colon);
  int param = default_K;
  if (colon != std::string::npos) {
    try {
      param = std::stoi(text.substr(colon + 1));
    } catch (const std::exception&) {
      throw std::invalid_argument("bad spanning set parameter in '" + text + "'");
    }
  }
  if (kind == "full") {
    if (param < 1) throw std::invalid_argument("full spanning set needs K >= 1");
    return SpanningSet::full(param);
  }
  if (kind == "Am") {
    if (colon == std::string::npos || param < 1) throw std::invalid_argument("Am spanning set needs Am:m with m >= 1");
    return SpanningSet::am(param);
  }
  if (kind == "crossingless" && colon == std::string::npos) return SpanningSet::crossingless();
  throw std::invalid_argument("unknown spanning set '" + text + "'");
}

Json to_json(const GramReport& r) {
  Json j;
  j["schema"] = 1;
  j["n"] = r.n;
  j["series"] = r.series;
  j["spanning_set"] = r.spanning_set_id;
  j["size"] = r.matrix_size;
  j["rank"] = r.rank ? Json(*r.rank) : Json("not computed");
  if (r.determinant) j["det"] = {{"terms", *r.determinant}};
  else if (r.mode == "pit") j["det"] = "PIT-verified";
  else j["det"] = "not computed";
  if (r.claim) {
    j["factorization"] = {{"claim", *r.claim},
                          {"verified", r.claim_verified.value_or(false)},
                          {"mode", r.mode},
                          {"probabilistic", r.probabilistic}};
  }
  return j;
}

Json to_json(const RealizationReport& r) {
  Json j;
  j["schema"] = 1;
  j["characteristic"] = r.characteristic;
  j["series"] = r.series;
  j["cond_rational"] = r.cond_rational;
  auto tri = [](Tri t) { return t == Tri::undetermined ? Json("undetermined") : Json(t == Tri::yes); };
  j["cond_separable"] = tri(r.cond_separable);
  j["cond_degree"] = r.cond_degree;
  j["cond_residues"] = tri(r.cond_residues);
  j["verdict"] = to_string(r.verdict);
  Json res = Json::array();
  for (const auto& e : r.residues)
    res.push_back({{"pole", e.pole}, {"value", e.value}, {"degree", e.degree}, {"in_prime_field", e.in_prime_field}});
  j["residues"] = res;
  if (r.residue_sum_zero) j["residue_sum_zero"] = *r.residue_sum_zero;
  Json w = Json::array();
  for (const auto& x : r.witnesses) w.push_back({{"condition", x.condition}, {"explanation", x.explanation}});
  j["witnesses"] = w;
  return j;
}

RationalSeries<MultiPoly> GoldenTable::series() const { return parse_series(num, den, params); }

const ClaimRow* GoldenTable::row(int n) const {
  for (const auto& r : rows)
    if (r.n == n) return &r;
  return nullptr;
}

GoldenTable parse_golden(const Json& j) {
  if (j.value("schema", 0) != 1) throw std::invalid_argument("claim file: unsupported schema");
  GoldenTable t;
  t.id = j.at("table").get<std::string>();
  t.description = j.value("description", "");
  t.params = j.at("params").get<std::vector<std::string>>();
  t.num = j.at("series").at("num").get<std::string>();
  t.den = j.at("series").at("den").get<std::string>();
  t.spanning = j.at("spanning").get<std::string>();
  auto ring = t.ring();
  for (const auto& r : j.at("rows")) {
    ClaimRow row;
    row.n = r.at("n").get<int>();
    row.claim.sign = r.at("sign").get<int>();
    if (row.claim.sign != 1 && row.claim.sign != -1) throw std::invalid_argument("claim file: sign must be +1 or -1");
    for (const auto& f : r.at("factors"))
      row.claim.factors.push_back({parse_multipoly(f.at(0).get<std::string>(), ring), f.at(1).get<int>()});
    if (r.contains("dim")) row.dim = r.at("dim").get<std::size_t>();
    row.mode = r.value("mode", "exact");
    t.rows.push_back(std::move(row));
  }
  return t;
}

VerificationResult verify_golden_row(const GoldenTable& t, const ClaimRow& row, uint64_t seed) {
  auto z = t.series();
  auto surfaces = spanning_surfaces(row.n, parse_spanning(t.spanning, std::max(1, z.K())));
  VerifyOptions opts;
  opts.seed = seed;
  opts.mode = row.mode == "pit" ? VerifyMode::pit : VerifyMode::exact;
  opts.symbolic_limit = std::max<std::size_t>(opts.symbolic_limit, surfaces.size());
  auto r = verify_factorization(row.claim, surfaces, z, opts);
  // The stored dimension is the size of the spanning set, which is a basis.
  if (row.dim && surfaces.size() != *row.dim) r.verified = false;
  return r;
}

GoldenTable load_golden(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open claim file " + path);
  Json j;
  try {
    j = Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument("claim file " + path + ": " + e.what());
  }
  try {
    return parse_golden(j);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument("claim file " + path + ": " + e.what());
  }
}

}  // namespace cobalt
