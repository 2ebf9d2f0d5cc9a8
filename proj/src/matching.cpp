#include "cobalt/surf/matching.hpp"

#include <algorithm>
#include <stdexcept>

namespace cobalt {

CrossinglessMatching::CrossinglessMatching(int n, const std::vector<std::pair<int, int>>& arcs) {
  if (n < 0 || static_cast<int>(arcs.size()) != n) throw std::invalid_argument("a matching of 2n points needs n arcs");
  partner_.assign(2 * n, -1);
  for (auto [a, b] : arcs) {
    if (a < 1 || b < 1 || a > 2 * n || b > 2 * n || a == b) throw std::invalid_argument("arc endpoint out of range");
    if (partner_[a - 1] >= 0 || partner_[b - 1] >= 0) throw std::invalid_argument("point matched twice");
    partner_[a - 1] = b - 1;
    partner_[b - 1] = a - 1;
  }
  for (auto [a, b] : arcs) {
    int lo = std::min(a, b), hi = std::max(a, b);
    for (auto [c, d] : arcs) {
      int lo2 = std::min(c, d), hi2 = std::max(c, d);
      if (lo < lo2 && lo2 < hi && hi < hi2) throw std::invalid_argument("arcs cross");
    }
  }
}

std::vector<std::pair<int, int>> CrossinglessMatching::arcs() const {
  std::vector<std::pair<int, int>> out;
  for (std::size_t i = 0; i < partner_.size(); ++i)
    if (partner_[i] > static_cast<int>(i)) out.push_back({static_cast<int>(i) + 1, partner_[i] + 1});
  return out;
}

CrossinglessMatching partition_to_matching(const DecoratedSurface& s) {
  std::vector<std::pair<int, int>> arcs;
  for (const auto& b : s.blocks()) {
    for (std::size_t j = 0; j + 1 < b.size(); ++j) arcs.push_back({2 * b[j], 2 * b[j + 1] - 1});
    arcs.push_back({2 * b.front() - 1, 2 * b.back()});
  }
  return CrossinglessMatching(s.n(), arcs);
}

DecoratedSurface matching_to_partition(const CrossinglessMatching& m) {
  // Circle i owns points 2i-1 and 2i; point 2i leads to the next circle of its block.
  const int n = m.n();
  std::vector<int> next(n + 1, 0);
  for (int i = 1; i <= n; ++i) {
    int q = m.partner(2 * i);
    if (q % 2 == 0) throw std::invalid_argument("matching is not in the image of the partition map");
    next[i] = (q + 1) / 2;
  }
  std::vector<std::vector<int>> blocks;
  std::vector<bool> seen(n + 1, false);
  for (int i = 1; i <= n; ++i) {
    if (seen[i]) continue;
    std::vector<int> b;
    for (int c = i; !seen[c]; c = next[c]) {
      seen[c] = true;
      b.push_back(c);
    }
    std::sort(b.begin(), b.end());
    blocks.push_back(std::move(b));
  }
  std::vector<int> genus(blocks.size(), 0);
  return DecoratedSurface(n, std::move(blocks), std::move(genus));
}

std::vector<CrossinglessMatching> enumerate_matchings(int n) {
  std::vector<CrossinglessMatching> out;
  for (const auto& s : enumerate_crossingless(n)) out.push_back(partition_to_matching(s));
  return out;
}

MeanderRegions meander_regions(const CrossinglessMatching& a, const CrossinglessMatching& b) {
  if (a.n() != b.n()) throw std::invalid_argument("matchings of different sizes");
  const int pts = 2 * a.n();
  std::vector<int> circle(pts + 1, -1);
  int count = 0;
  for (int start = 1; start <= pts; ++start) {
    if (circle[start] >= 0) continue;
    int p = start;
    do {
      int q = a.partner(p);
      circle[p] = circle[q] = count;
      p = b.partner(q);
    } while (p != start);
    ++count;
  }
  // A point of circle C lies inside circle D iff an odd number of D's points
  // are to its left on the line.
  std::vector<int> leftmost(count, pts + 1);
  for (int p = pts; p >= 1; --p) leftmost[circle[p]] = p;
  MeanderRegions r;
  r.circles = count;
  r.h1 = 1;
  for (int c = 0; c < count; ++c) {
    int depth = 0;
    for (int d = 0; d < count; ++d) {
      if (d == c) continue;
      int left = 0;
      for (int p = 1; p < leftmost[c]; ++p) left += circle[p] == d;
      depth += left % 2;
    }
    if (depth % 2 == 0) ++r.h2;
    else ++r.h1;
  }
  return r;
}

}  // namespace cobalt
