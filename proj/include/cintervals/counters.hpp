#pragma once

#include <cstdint>
#include <ostream>

namespace cintervals {

/// Basic-operation counts, one field per stage. Each unit is a constant-time
/// step (a scanned position, a union or find, a stack push or pop, a table
/// cell, an emitted hit).
struct OpCounters {
  std::uint64_t resolve = 0;
  std::uint64_t right_end = 0;
  std::uint64_t retrieve = 0;
  std::uint64_t renumber = 0;
  std::uint64_t compute_v = 0;
  std::uint64_t range_tables = 0;
  std::uint64_t lr_stack = 0;
  std::uint64_t filter = 0;
  std::uint64_t emit = 0;

  std::uint64_t domination() const { return resolve + right_end; }
  std::uint64_t guided() const {
    return renumber + compute_v + range_tables + lr_stack + filter;
  }
  std::uint64_t total() const { return domination() + retrieve + guided() + emit; }

  OpCounters& operator+=(const OpCounters& o) {
    resolve += o.resolve;
    right_end += o.right_end;
    retrieve += o.retrieve;
    renumber += o.renumber;
    compute_v += o.compute_v;
    range_tables += o.range_tables;
    lr_stack += o.lr_stack;
    filter += o.filter;
    emit += o.emit;
    return *this;
  }

  friend bool operator==(const OpCounters&, const OpCounters&) = default;
};

inline std::ostream& operator<<(std::ostream& os, const OpCounters& c) {
  return os << "resolve=" << c.resolve << " right_end=" << c.right_end
            << " retrieve=" << c.retrieve << " renumber=" << c.renumber
            << " compute_v=" << c.compute_v << " range_tables=" << c.range_tables
            << " lr_stack=" << c.lr_stack << " filter=" << c.filter
            << " emit=" << c.emit << " total=" << c.total();
}

}  // namespace cintervals
