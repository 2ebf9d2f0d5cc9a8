#include "cobalt/surf/surface.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace cobalt {

namespace {

constexpr int kMaxCircles = 64;

void check_n(int n) {
  if (n < 0 || n > kMaxCircles) throw std::invalid_argument("number of circles out of range");
}

}  // namespace

DecoratedSurface::DecoratedSurface(int n, std::vector<std::vector<int>> blocks, std::vector<int> genus) {
  check_n(n);
  if (blocks.size() != genus.size()) throw std::invalid_argument("one genus label per block required");
  std::vector<int> owner(n, -1);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (blocks[b].empty()) throw std::invalid_argument("empty block");
    if (genus[b] < 0) throw std::invalid_argument("negative genus label");
    for (int c : blocks[b]) {
      if (c < 1 || c > n) throw std::invalid_argument("circle label out of range");
      if (owner[c - 1] >= 0) throw std::invalid_argument("circle " + std::to_string(c) + " in two blocks");
      owner[c - 1] = static_cast<int>(b);
    }
  }
  for (int c = 0; c < n; ++c)
    if (owner[c] < 0) throw std::invalid_argument("circle " + std::to_string(c + 1) + " not covered");
  // Renumber blocks by least element.
  std::vector<int> renum(blocks.size(), -1);
  int next = 0;
  rgs_.resize(n);
  for (int c = 0; c < n; ++c) {
    int b = owner[c];
    if (renum[b] < 0) renum[b] = next++;
    rgs_[c] = static_cast<uint8_t>(renum[b]);
  }
  genus_.assign(blocks.size(), 0);
  for (std::size_t b = 0; b < blocks.size(); ++b) genus_[renum[b]] = genus[b];
}

DecoratedSurface DecoratedSurface::from_rgs(std::vector<uint8_t> rgs, std::vector<int> genus) {
  check_n(static_cast<int>(rgs.size()));
  int next = 0;
  for (auto v : rgs) {
    if (v > next) throw std::invalid_argument("not a restricted growth string");
    if (v == next) ++next;
  }
  if (static_cast<int>(genus.size()) != next) throw std::invalid_argument("one genus label per block required");
  DecoratedSurface s;
  s.rgs_ = std::move(rgs);
  s.genus_ = std::move(genus);
  return s;
}

DecoratedSurface DecoratedSurface::disks(int n) {
  std::vector<uint8_t> rgs(n);
  for (int i = 0; i < n; ++i) rgs[i] = static_cast<uint8_t>(i);
  return from_rgs(std::move(rgs), std::vector<int>(n, 0));
}

std::vector<std::vector<int>> DecoratedSurface::blocks() const {
  std::vector<std::vector<int>> b(genus_.size());
  for (std::size_t c = 0; c < rgs_.size(); ++c) b[rgs_[c]].push_back(static_cast<int>(c) + 1);
  return b;
}

std::vector<int> DecoratedSurface::block_sizes() const {
  std::vector<int> s(genus_.size(), 0);
  for (auto v : rgs_) ++s[v];
  return s;
}

int DecoratedSurface::total_genus() const {
  int g = 0;
  for (int x : genus_) g += x;
  return g;
}

int DecoratedSurface::euler_characteristic() const {
  auto sizes = block_sizes();
  int chi = 0;
  for (std::size_t b = 0; b < sizes.size(); ++b) chi += 2 - 2 * genus_[b] - sizes[b];
  return chi;
}

std::string DecoratedSurface::str() const {
  std::ostringstream os;
  auto bl = blocks();
  for (std::size_t b = 0; b < bl.size(); ++b) {
    os << "{";
    for (std::size_t i = 0; i < bl[b].size(); ++i) os << (i ? "," : "") << bl[b][i];
    os << ":g" << genus_[b] << "}";
  }
  return os.str();
}

DecoratedSurface parse_surface(std::string_view text) {
  std::size_t pos = 0;
  auto fail = [&](const std::string& what) {
    throw std::invalid_argument("surface literal: " + what + " at position " + std::to_string(pos));
  };
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto number = [&]() -> int {
    skip_ws();
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos]))) fail("expected a number");
    long v = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      v = v * 10 + (text[pos++] - '0');
      if (v > 1000000) fail("number too large");
    }
    return static_cast<int>(v);
  };
  std::vector<std::vector<int>> blocks;
  std::vector<int> genus;
  int n = 0;
  skip_ws();
  while (pos < text.size()) {
    if (text[pos] != '{') fail("expected '{'");
    ++pos;
    std::vector<int> block;
    block.push_back(number());
    skip_ws();
    while (pos < text.size() && text[pos] == ',') {
      ++pos;
      block.push_back(number());
      skip_ws();
    }
    int g = 0;
    if (pos < text.size() && text[pos] == ':') {
      ++pos;
      skip_ws();
      if (pos >= text.size() || text[pos] != 'g') fail("expected 'g'");
      ++pos;
      g = number();
      skip_ws();
    }
    if (pos >= text.size() || text[pos] != '}') fail("expected '}'");
    ++pos;
    for (int c : block) n = std::max(n, c);
    blocks.push_back(std::move(block));
    genus.push_back(g);
    skip_ws();
  }
  try {
    return DecoratedSurface(n, std::move(blocks), std::move(genus));
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument(std::string("surface literal: ") + e.what());
  }
}

std::vector<std::vector<uint8_t>> set_partitions_rgs(int n) {
  check_n(n);
  std::vector<std::vector<uint8_t>> out;
  std::vector<uint8_t> cur(n, 0);
  if (n == 0) {
    out.push_back({});
    return out;
  }
  // Iterative lexicographic successor with running maxima.
  std::vector<int> mx(n, 1);  // largest value allowed at i: max(cur[0..i-1]) + 1
  mx[0] = 0;
  for (;;) {
    out.push_back(cur);
    int i = n - 1;
    while (i > 0 && cur[i] == mx[i]) --i;
    if (i == 0) break;
    ++cur[i];
    for (int j = i + 1; j < n; ++j) {
      cur[j] = 0;
      mx[j] = std::max(mx[j - 1], static_cast<int>(cur[j - 1]) + 1);
    }
  }
  return out;
}

std::vector<DecoratedSurface> enumerate_spanning(int n, int K) {
  if (K < 1) throw std::invalid_argument("K must be at least 1");
  std::vector<DecoratedSurface> out;
  for (auto& rgs : set_partitions_rgs(n)) {
    int blocks = 0;
    for (auto v : rgs) blocks = std::max(blocks, static_cast<int>(v) + 1);
    std::vector<int> g(blocks, 0);
    for (;;) {
      out.push_back(DecoratedSurface::from_rgs(rgs, g));
      int i = blocks - 1;
      while (i >= 0 && g[i] == K - 1) g[i--] = 0;
      if (i < 0) break;
      ++g[i];
    }
  }
  return out;
}

std::vector<DecoratedSurface> enumerate_Am(int n, int m) {
  if (m < 1) throw std::invalid_argument("m must be at least 1");
  std::vector<DecoratedSurface> out;
  for (auto& s : enumerate_spanning(n, m + 1)) {
    auto sizes = s.block_sizes();
    bool ok = true;
    for (std::size_t b = 0; b < sizes.size() && ok; ++b) ok = s.genus()[b] + sizes[b] <= m + 1;
    if (ok) out.push_back(std::move(s));
  }
  return out;
}

bool is_noncrossing(const DecoratedSurface& s) {
  const auto& r = s.rgs();
  const int n = s.n();
  for (int i1 = 0; i1 < n; ++i1)
    for (int i2 = i1 + 1; i2 < n; ++i2) {
      if (r[i2] == r[i1]) continue;
      for (int i3 = i2 + 1; i3 < n; ++i3) {
        if (r[i3] != r[i1]) continue;
        for (int i4 = i3 + 1; i4 < n; ++i4)
          if (r[i4] == r[i2]) return false;
      }
    }
  return true;
}

std::vector<DecoratedSurface> enumerate_crossingless(int n) {
  std::vector<DecoratedSurface> out;
  for (auto& rgs : set_partitions_rgs(n)) {
    int blocks = 0;
    for (auto v : rgs) blocks = std::max(blocks, static_cast<int>(v) + 1);
    DecoratedSurface s = DecoratedSurface::from_rgs(rgs, std::vector<int>(blocks, 0));
    if (is_noncrossing(s)) out.push_back(std::move(s));
  }
  return out;
}

int glue_genera(const DecoratedSurface& a, const DecoratedSurface& b, int* out) {
  if (a.n() != b.n()) throw std::invalid_argument("glued surfaces have different numbers of circles");
  const int na = a.num_blocks(), nb = b.num_blocks();
  int parent[2 * kMaxCircles];
  for (int i = 0; i < na + nb; ++i) parent[i] = i;
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  const auto& ra = a.rgs();
  const auto& rb = b.rgs();
  for (int c = 0; c < a.n(); ++c) {
    int x = find(ra[c]), y = find(na + rb[c]);
    if (x != y) parent[x] = y;
  }
  // Per root: E - V + 1 + G accumulated as circles - blocks + genus, +1 at the end.
  int acc[2 * kMaxCircles];
  bool seen[2 * kMaxCircles] = {};
  for (int i = 0; i < na + nb; ++i) acc[i] = 0;
  for (int c = 0; c < a.n(); ++c) ++acc[find(ra[c])];
  for (int i = 0; i < na; ++i) acc[find(i)] += a.genus()[i] - 1;
  for (int j = 0; j < nb; ++j) acc[find(na + j)] += b.genus()[j] - 1;
  int k = 0;
  for (int i = 0; i < na + nb; ++i) {
    int r = find(i);
    if (!seen[r]) {
      seen[r] = true;
      out[k++] = acc[r] + 1;
    }
  }
  return k;
}

ClosedSurfaceClass glue(const DecoratedSurface& a, const DecoratedSurface& b) {
  int buf[2 * kMaxCircles];
  int k = glue_genera(a, b, buf);
  ClosedSurfaceClass c;
  c.component_genera.assign(buf, buf + k);
  std::sort(c.component_genera.begin(), c.component_genera.end());
  return c;
}

int degree(const DecoratedSurface& s) { return s.n() - s.euler_characteristic(); }

std::vector<DecoratedSurface> orbit(const DecoratedSurface& s) {
  std::vector<int> perm(s.n());
  std::iota(perm.begin(), perm.end(), 1);
  const auto blocks = s.blocks();
  std::set<DecoratedSurface> seen;
  do {
    auto moved = blocks;
    for (auto& b : moved)
      for (int& c : b) c = perm[c - 1];
    seen.insert(DecoratedSurface(s.n(), moved, s.genus()));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return {seen.begin(), seen.end()};
}

}  // namespace cobalt
