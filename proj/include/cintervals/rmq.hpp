#pragma once

#include <bit>
#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace cintervals {

/// Sparse table answering range-extremum queries in O(1) after
/// O(m log m) preprocessing. Queries are 1-based and inclusive.
///
/// `Better(a, b)` is true when a is strictly preferable to b; std::less
/// gives range minima, std::greater range maxima. Ties resolve to the
/// leftmost position.
template <typename Value, typename Better = std::less<Value>>
class RangeTable {
 public:
  RangeTable() = default;
  explicit RangeTable(std::span<const Value> source) { assign(source); }
  explicit RangeTable(const std::vector<Value>& source)
      : RangeTable(std::span<const Value>(source)) {}

  /// Rebuilds the table over `source`, reusing storage.
  void assign(std::span<const Value> source) {
    if (source.empty()) throw std::invalid_argument("empty range table");
    source_.assign(source.begin(), source.end());
    const std::size_t m = source_.size();
    levels_ = static_cast<std::size_t>(std::bit_width(m));
    table_.resize(levels_ * m);
    for (std::size_t i = 0; i < m; ++i) table_[i] = static_cast<std::uint32_t>(i);
    for (std::size_t k = 1; k < levels_; ++k) {
      const std::size_t half = std::size_t{1} << (k - 1);
      const std::uint32_t* prev = table_.data() + (k - 1) * m;
      std::uint32_t* cur = table_.data() + k * m;
      const std::size_t count = m - (std::size_t{1} << k) + 1;
      for (std::size_t i = 0; i < count; ++i) {
        cur[i] = pick(prev[i], prev[i + half]);
      }
    }
    cells_ = levels_ * m;
  }

  std::size_t size() const { return source_.size(); }

  /// Number of table cells written by the last build.
  std::uint64_t build_cost() const { return cells_; }

  /// 1-based position of the extremum of source[lo..hi] (leftmost on ties).
  std::size_t arg_query(std::size_t lo, std::size_t hi) const {
    if (lo < 1 || lo > hi || hi > source_.size()) {
      throw std::out_of_range("range query [" + std::to_string(lo) + "," +
                              std::to_string(hi) + "] outside 1.." +
                              std::to_string(source_.size()));
    }
    const std::size_t len = hi - lo + 1;
    const std::size_t k = static_cast<std::size_t>(std::bit_width(len)) - 1;
    const std::size_t m = source_.size();
    const std::uint32_t* row = table_.data() + k * m;
    return pick(row[lo - 1], row[hi - (std::size_t{1} << k)]) + 1;
  }

  Value query(std::size_t lo, std::size_t hi) const {
    return source_[arg_query(lo, hi) - 1];
  }

 private:
  std::uint32_t pick(std::uint32_t left, std::uint32_t right) const {
    return better_(source_[right], source_[left]) ? right : left;
  }

  std::vector<Value> source_;
  std::vector<std::uint32_t> table_;
  std::size_t levels_ = 0;
  std::uint64_t cells_ = 0;
  [[no_unique_address]] Better better_{};
};

template <typename Value>
using MinTable = RangeTable<Value, std::less<Value>>;
template <typename Value>
using MaxTable = RangeTable<Value, std::greater<Value>>;

}  // namespace cintervals
