#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "cobalt/gram/gram.hpp"
#include "cobalt/realize/realize.hpp"

namespace cobalt {

using Json = nlohmann::ordered_json;

/// "full" (rank K of the series), "full:K", "Am:m" or "crossingless".
SpanningSet parse_spanning(const std::string& text, int default_K);

Json to_json(const GramReport& r);
Json to_json(const RealizationReport& r);

/// One row of a stored determinant table.
struct ClaimRow {
  int n = 0;
  FactoredClaim claim;
  std::optional<std::size_t> dim;
  std::string mode = "exact";  // "exact" or "pit"
};

/// A determinant table stored as factored claims for one series.
struct GoldenTable {
  std::string id;
  std::string description;
  std::vector<std::string> params;
  std::string num, den;
  std::string spanning;
  std::vector<ClaimRow> rows;

  RingPtr ring() const { return make_ring(params); }
  RationalSeries<MultiPoly> series() const;
  const ClaimRow* row(int n) const;
};

GoldenTable parse_golden(const Json& j);

/// Checks one stored row against the Gram determinant, in the row's mode.
VerificationResult verify_golden_row(const GoldenTable& t, const ClaimRow& row, uint64_t seed = VerifyOptions{}.seed);
GoldenTable load_golden(const std::string& path);

}  // namespace cobalt
