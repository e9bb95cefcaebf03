#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

#include "cintervals/check.hpp"
#include "cintervals/core_model.hpp"

namespace cintervals {

/// Union-find over the consecutive universe [lo, hi] where only neighboring
/// slices are ever merged. Every slice is a run of consecutive integers and
/// is identified by its smallest member.
///
/// A separator sits on each boundary b (between b and b+1); removing it
/// merges the two slices it separates.
class SliceUnionFind {
 public:
  SliceUnionFind() = default;
  SliceUnionFind(Pos lo, Pos hi) { reset(lo, hi); }

  /// Slices [lo, hi] into singletons. Reuses the existing storage.
  void reset(Pos lo, Pos hi) {
    CINTERVALS_CHECK(lo <= hi, "empty slice universe");
    lo_ = lo;
    hi_ = hi;
    const Pos m = hi - lo + 1;
    parent_.resize(m);
    std::iota(parent_.begin(), parent_.end(), Pos{0});
    size_.assign(m, 1);
    min_.resize(m);
    std::iota(min_.begin(), min_.end(), Pos{0});
    separator_.assign(m, 1);
    ops_ += m;
  }

  Pos lo() const { return lo_; }
  Pos hi() const { return hi_; }

  bool has_separator(Pos b) const {
    CINTERVALS_CHECK(b >= lo_ && b < hi_, "boundary outside universe");
    return separator_[b - lo_] != 0;
  }

  /// Removes the separator after `b`, merging the slices of b and b+1.
  void remove_separator(Pos b) {
    CINTERVALS_CHECK(b >= lo_ && b < hi_, "boundary outside universe");
    ++ops_;
    if (!separator_[b - lo_]) return;
    separator_[b - lo_] = 0;
    Pos a = root(b - lo_);
    Pos c = root(b + 1 - lo_);
    if (size_[a] < size_[c]) std::swap(a, c);
    parent_[c] = a;
    size_[a] += size_[c];
    min_[a] = std::min(min_[a], min_[c]);
  }

  /// Smallest element of the slice containing x.
  Pos find(Pos x) {
    CINTERVALS_CHECK(x >= lo_ && x <= hi_, "element outside universe");
    ++ops_;
    return min_[root(x - lo_)] + lo_;
  }

  /// Number of elementary operations performed so far (reset cells, unions,
  /// finds).
  std::uint64_t operations() const { return ops_; }

 private:
  Pos root(Pos x) {
    Pos r = x;
    while (parent_[r] != r) r = parent_[r];
    while (parent_[x] != r) {
      Pos next = parent_[x];
      parent_[x] = r;
      x = next;
    }
    return r;
  }

  Pos lo_ = 0;
  Pos hi_ = 0;
  std::vector<Pos> parent_;
  std::vector<Pos> size_;
  std::vector<Pos> min_;
  std::vector<unsigned char> separator_;
  std::uint64_t ops_ = 0;
};

}  // namespace cintervals
