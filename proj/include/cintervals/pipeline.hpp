#pragma once

// End-to-end search: dedup, domination on both sides, streamed dominating
// orders, guided search per pair of orders, and conversion of every hit to
// maximal locations in the requested coordinates.

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "cintervals/core_model.hpp"
#include "cintervals/counters.hpp"
#include "cintervals/domination.hpp"
#include "cintervals/guided_search.hpp"
#include "cintervals/order_stream.hpp"

namespace cintervals {

enum class LocationMode { maximal, maxmin, both };
enum class Coordinates { original, dedup };

struct SearchOptions {
  /// Smallest interval size reported. 1 adds the singleton intervals.
  Pos min_size = 2;
  bool emit_elements = false;
  Coordinates coords = Coordinates::original;
  /// Check LR-stack invariants after every operation (quadratic; tests only).
  bool audit = false;
};

/// One common interval with one maximal location in each sequence. Maxmin
/// locations are always filled; `elements` only with emit_elements (sorted
/// symbol codes).
struct ResultRecord {
  Pos size = 0;
  Location t;
  Location s;
  Location t_maxmin;
  Location s_maxmin;
  std::vector<Symbol> elements;

  friend bool operator==(const ResultRecord&, const ResultRecord&) = default;
};

struct Stats {
  Pos n1 = 0, n2 = 0;              // input lengths
  Pos n1_dedup = 0, n2_dedup = 0;  // after collapsing runs
  Symbol p = 0;                    // alphabet size
  Pos q1 = 0, q2 = 0;              // dominating orders per side
  std::uint64_t pairs = 0;         // order pairs searched
  std::uint64_t singletons = 0;
  std::uint64_t reported = 0;      // N, records handed to the sink
  OpCounters counters;
};

namespace detail {

inline Location convert(const Location& loc, const PositionMap& map, Coordinates c,
                        bool maxmin) {
  if (c == Coordinates::dedup) return loc;
  return maxmin ? expand_maxmin_to_original(loc, map) : expand_to_original(loc, map);
}

}  // namespace detail

/// Reports every pair of (T run, S run) of every symbol common to both
/// sequences, by increasing symbol code. Returns the number reported.
template <typename Sink>
std::uint64_t emit_singletons(const Deduplicated& t, const Deduplicated& s,
                              const SearchOptions& opts, Sink&& sink) {
  const Symbol p = t.sequence.alphabet_size();
  std::vector<std::vector<Pos>> in_s(p + 1);
  for (Pos j = 1; j <= s.sequence.size(); ++j) in_s[s.sequence[j]].push_back(j);
  std::vector<std::vector<Pos>> in_t(p + 1);
  for (Pos i = 1; i <= t.sequence.size(); ++i) in_t[t.sequence[i]].push_back(i);
  std::uint64_t count = 0;
  ResultRecord rec;
  rec.size = 1;
  for (Symbol c = 1; c <= p; ++c) {
    for (Pos i : in_t[c]) {
      for (Pos j : in_s[c]) {
        const Location ti{i, i}, sj{j, j};
        rec.t = detail::convert(ti, t.positions, opts.coords, false);
        rec.s = detail::convert(sj, s.positions, opts.coords, false);
        rec.t_maxmin = detail::convert(ti, t.positions, opts.coords, true);
        rec.s_maxmin = detail::convert(sj, s.positions, opts.coords, true);
        if (opts.emit_elements) rec.elements = {c};
        sink(static_cast<const ResultRecord&>(rec));
        ++count;
      }
    }
  }
  return count;
}

/// Reports every common interval of T and S of size >= min_size, once per
/// pair of maximal locations. Both sequences must share one alphabet.
template <typename Sink>
Stats find_common_intervals(const Sequence& t_in, const Sequence& s_in,
                            const SearchOptions& opts, Sink&& sink) {
  if (t_in.alphabet_size() != s_in.alphabet_size()) {
    throw std::invalid_argument("sequences use different alphabets");
  }
  if (opts.min_size < 1) throw std::invalid_argument("min_size must be at least 1");

  Stats stats;
  stats.n1 = t_in.size();
  stats.n2 = s_in.size();
  stats.p = t_in.alphabet_size();

  const Deduplicated t = dedup(t_in);
  const Deduplicated s = dedup(s_in);
  stats.n1_dedup = t.sequence.size();
  stats.n2_dedup = s.sequence.size();
  const OccIndex t_occ = build_occ_index(t.sequence);
  const OccIndex s_occ = build_occ_index(s.sequence);
  const Domination t_dom = resolve_all(t.sequence, t_occ);
  const Domination s_dom = resolve_all(s.sequence, s_occ);
  stats.q1 = t_dom.q();
  stats.q2 = s_dom.q();
  stats.counters += t_dom.counters;
  stats.counters += s_dom.counters;

  if (opts.min_size <= 1) {
    stats.singletons = emit_singletons(t, s, opts, sink);
    stats.reported += stats.singletons;
  }

  const auto t_positions = t_dom.dominating_positions();
  const auto s_positions = s_dom.dominating_positions();
  OrderStream t_stream(t.sequence, t_occ, t_positions);
  OrderStream s_stream(s.sequence, s_occ, s_positions);
  GuidedSearch guided(stats.p);
  ResultRecord rec;

  t_stream.run([&](const OrderView& tv) {
    const auto& t_pairs = t_dom.records[tv.rank].pairs;
    s_stream.run([&](const OrderView& sv) {
      const auto& s_pairs = s_dom.records[sv.rank].pairs;
      ++stats.pairs;
      guided.run(
          tv.values, t_pairs, sv.values, s_pairs,
          [&](const GuidedHit& hit) {
            const Pos size = hit.u - hit.s + 1;
            if (size < opts.min_size) return;
            const auto& pair = guided.pair();
            const Pos y = hit.pi_loc.begin, z = hit.pi_loc.end;
            const Location t_mm{tv.positions[hit.s - 1], tv.positions[hit.u - 1]};
            const Location s_mm{sv.positions[y - 1], sv.positions[z - 1]};
            const Location t_max = to_maximal(tv.positions, hit.s, hit.u, pair.F[hit.s], t_occ);
            const Location s_max = to_maximal(sv.positions, y, z, pair.Phi[y], s_occ);
            rec.size = size;
            rec.t = detail::convert(t_max, t.positions, opts.coords, false);
            rec.s = detail::convert(s_max, s.positions, opts.coords, false);
            rec.t_maxmin = detail::convert(t_mm, t.positions, opts.coords, true);
            rec.s_maxmin = detail::convert(s_mm, s.positions, opts.coords, true);
            if (opts.emit_elements) {
              rec.elements.assign(pair.symbol_of.begin() + static_cast<std::ptrdiff_t>(hit.s),
                                  pair.symbol_of.begin() + static_cast<std::ptrdiff_t>(hit.u) + 1);
              std::sort(rec.elements.begin(), rec.elements.end());
            }
            ++stats.counters.emit;
            ++stats.reported;
            sink(static_cast<const ResultRecord&>(rec));
          },
          opts.audit);
    });
  });

  stats.counters.retrieve += t_stream.operations() + s_stream.operations();
  stats.counters += guided.counters();
  return stats;
}

template <typename Sink>
Stats find_common_intervals(const EncodedPair& pair, const SearchOptions& opts,
                            Sink&& sink) {
  return find_common_intervals(pair.t, pair.s, opts, sink);
}

/// Collects every record, sorted by (T location, S location).
inline std::vector<ResultRecord> collect_common_intervals(const Sequence& t,
                                                          const Sequence& s,
                                                          const SearchOptions& opts = {},
                                                          Stats* stats = nullptr) {
  std::vector<ResultRecord> out;
  Stats st = find_common_intervals(t, s, opts, [&](const ResultRecord& r) { out.push_back(r); });
  std::sort(out.begin(), out.end(), [](const ResultRecord& a, const ResultRecord& b) {
    return std::tie(a.t, a.s, a.size) < std::tie(b.t, b.s, b.size);
  });
  if (stats) *stats = st;
  return out;
}

/// Domination functions of a sequence after dedup, as text.
inline std::string dump_domination(const Sequence& seq) {
  const Deduplicated d = dedup(seq);
  return format_domination(resolve_all(d.sequence, build_occ_index(d.sequence)));
}

}  // namespace cintervals
