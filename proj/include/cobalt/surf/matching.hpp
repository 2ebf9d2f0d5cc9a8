#pragma once

#include <utility>
#include <vector>

#include "cobalt/surf/surface.hpp"

namespace cobalt {

/// Non-crossing perfect matching of the points 1..2n.
class CrossinglessMatching {
 public:
  CrossinglessMatching() = default;
  /// From 1-based arcs; throws unless they form a non-crossing perfect matching.
  CrossinglessMatching(int n, const std::vector<std::pair<int, int>>& arcs);

  int n() const { return static_cast<int>(partner_.size() / 2); }
  /// 1-based partner of 1-based point i.
  int partner(int i) const { return partner_[i - 1] + 1; }
  std::vector<std::pair<int, int>> arcs() const;

  friend bool operator==(const CrossinglessMatching& a, const CrossinglessMatching& b) {
    return a.partner_ == b.partner_;
  }

 private:
  std::vector<int> partner_;  // 0-based
};

/// Block {i1<...<im} goes to arcs (2i_j, 2i_{j+1}-1) and the closing arc (2i1-1, 2im).
CrossinglessMatching partition_to_matching(const DecoratedSurface& s);

/// Inverse of partition_to_matching (genus labels are 0).
DecoratedSurface matching_to_partition(const CrossinglessMatching& m);

/// Matchings in the order of enumerate_crossingless.
std::vector<CrossinglessMatching> enumerate_matchings(int n);

struct MeanderRegions {
  int h1 = 0;
  int h2 = 0;
  int circles = 0;
};

/// Superimposes a (above the line) with the mirror image of b (below), and
/// counts circles by nesting depth: h2 = circles at even depth, h1 = 1 +
/// circles at odd depth.
MeanderRegions meander_regions(const CrossinglessMatching& a, const CrossinglessMatching& b);

inline std::pair<int, int> meander_h1h2(const CrossinglessMatching& a, const CrossinglessMatching& b) {
  auto r = meander_regions(a, b);
  return {r.h1, r.h2};
}

}  // namespace cobalt
