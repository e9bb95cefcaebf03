#pragma once

#include <algorithm>
#include <initializer_list>
#include <random>
#include <tuple>
#include <vector>

#include "cintervals.hpp"

namespace testing_support {

using cintervals::Pos;
using cintervals::Sequence;
using cintervals::Symbol;

inline Sequence seq(std::vector<Symbol> codes, Symbol p = 0) {
  if (p == 0) p = codes.empty() ? 1 : *std::max_element(codes.begin(), codes.end());
  return Sequence(codes, p);
}

// Running example pair over the alphabet 1..6.
inline Sequence running_t() { return seq({1, 2, 5, 2, 1, 4, 3, 1, 2, 6, 5}, 6); }
inline Sequence running_s() { return seq({5, 6, 4, 2, 3, 4, 1, 5}, 6); }

inline std::vector<Symbol> random_codes(std::mt19937_64& rng, Pos n, Symbol p) {
  std::vector<Symbol> out(n);
  for (auto& c : out) c = static_cast<Symbol>(cintervals::bench::draw_below(rng, p) + 1);
  return out;
}

using Row = std::tuple<Pos, Pos, Pos, Pos, Pos>;

inline std::vector<Row> rows_of(const std::vector<cintervals::ResultRecord>& recs) {
  std::vector<Row> out;
  for (const auto& r : recs) out.emplace_back(r.t.begin, r.t.end, r.s.begin, r.s.end, r.size);
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<Row> rows_of(const std::vector<cintervals::oracle::Match>& ms) {
  std::vector<Row> out;
  for (const auto& m : ms) out.emplace_back(m.t.begin, m.t.end, m.s.begin, m.s.end, m.size);
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<Row> pipeline_rows(const Sequence& t, const Sequence& s, Pos min_size) {
  cintervals::SearchOptions opts;
  opts.min_size = min_size;
  return rows_of(cintervals::collect_common_intervals(t, s, opts));
}

inline std::vector<Row> oracle_rows(const Sequence& t, const Sequence& s, Pos min_size) {
  return rows_of(cintervals::oracle::naive_common(t, s, min_size));
}

}  // namespace testing_support
