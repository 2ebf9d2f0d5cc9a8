#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace cobalt {

/// Genus-labelled set partition of the boundary circles {1..n}.
///
/// Stored as a restricted growth string (block index of each circle, blocks
/// numbered by least element) plus one genus label per block.
class DecoratedSurface {
 public:
  DecoratedSurface() = default;
  /// From explicit 1-based blocks and labels; blocks are canonicalized.
  DecoratedSurface(int n, std::vector<std::vector<int>> blocks, std::vector<int> genus);
  /// From a restricted growth string (0-based, canonical) and labels.
  static DecoratedSurface from_rgs(std::vector<uint8_t> rgs, std::vector<int> genus);
  /// n disks of genus 0.
  static DecoratedSurface disks(int n);

  int n() const { return static_cast<int>(rgs_.size()); }
  int num_blocks() const { return static_cast<int>(genus_.size()); }
  const std::vector<uint8_t>& rgs() const { return rgs_; }
  const std::vector<int>& genus() const { return genus_; }
  std::vector<std::vector<int>> blocks() const;
  std::vector<int> block_sizes() const;
  int total_genus() const;

  /// Sum over blocks of 2 - 2g - |b|.
  int euler_characteristic() const;

  /// Literal form, e.g. {1,4,6:g2}{2,3:g0}{5:g1}.
  std::string str() const;

  friend bool operator==(const DecoratedSurface& a, const DecoratedSurface& b) {
    return a.rgs_ == b.rgs_ && a.genus_ == b.genus_;
  }
  friend bool operator<(const DecoratedSurface& a, const DecoratedSurface& b) {
    if (a.rgs_ != b.rgs_) return a.rgs_ < b.rgs_;
    return a.genus_ < b.genus_;
  }

 private:
  std::vector<uint8_t> rgs_;
  std::vector<int> genus_;
};

/// Parses the literal syntax `{1,4,6:g2}{2,3:g0}{5:g1}`; `:gK` may be omitted
/// (genus 0). Throws std::invalid_argument with a character position.
DecoratedSurface parse_surface(std::string_view text);

/// Multiset of genera of the connected components of a closed surface.
struct ClosedSurfaceClass {
  std::vector<int> component_genera;  // sorted ascending
  friend bool operator==(const ClosedSurfaceClass& a, const ClosedSurfaceClass& b) {
    return a.component_genera == b.component_genera;
  }
};

/// All restricted growth strings of length n in lexicographic order.
std::vector<std::vector<uint8_t>> set_partitions_rgs(int n);

/// Every set partition with every genus labelling in [0, K): partitions in
/// restricted-growth order, then genus vectors lexicographically.
std::vector<DecoratedSurface> enumerate_spanning(int n, int K);

/// The members of enumerate_spanning(n, m+1) with genus + |block| <= m+1 for every block.
std::vector<DecoratedSurface> enumerate_Am(int n, int m);

/// Genus-0 surfaces on non-crossing partitions, in restricted-growth order.
std::vector<DecoratedSurface> enumerate_crossingless(int n);

/// No i1<i2<i3<i4 with i1,i3 in one block and i2,i4 in another.
bool is_noncrossing(const DecoratedSurface& s);

/// Closed surface obtained by gluing a and b along their common boundary.
/// Each component with V blocks, E circles and total label G has genus E - V + 1 + G.
ClosedSurfaceClass glue(const DecoratedSurface& a, const DecoratedSurface& b);

/// Allocation-free variant for Gram assembly: writes component genera to `out`
/// (unsorted) and returns the number of components.
int glue_genera(const DecoratedSurface& a, const DecoratedSurface& b, int* out);

/// n - chi(s).
int degree(const DecoratedSurface& s);

/// Distinct images of s under permutations of its boundary circles, sorted.
std::vector<DecoratedSurface> orbit(const DecoratedSurface& s);

}  // namespace cobalt
