#pragma once

// Dominating orders of a sequence and their domination functions.
//
// Resolve(d) is called for d = 1..n. An unresolved d starts a dominating
// order O_d; every position i of B_d whose order is contained in O_d (and not
// in an earlier dominating order) is labelled as strictly dominated by d.
// RightEnd then finds, for each such i = B_d[h], the index f with
// B_i = B_d[h..f]. Only the (h, f) endpoints are kept.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cintervals/check.hpp"
#include "cintervals/core_model.hpp"
#include "cintervals/counters.hpp"
#include "cintervals/interval_union_find.hpp"

namespace cintervals {

/// (s, F_d(s)) pair of a domination function.
struct DomPair {
  Pos start = 0;
  Pos end = 0;
  friend constexpr auto operator<=>(const DomPair&, const DomPair&) = default;
};

struct DominationRecord {
  Pos d = 0;
  Pos length = 0;              // k_d
  std::vector<DomPair> pairs;  // decreasing start, last one is (1, k_d)

  /// F_d as a dense lookup over 1..k_d, 0 where undefined.
  std::vector<Pos> dense() const {
    std::vector<Pos> f(length + 1, 0);
    for (const auto& p : pairs) f[p.start] = p.end;
    return f;
  }
};

/// Result of resolving every position of a sequence.
struct Domination {
  /// Records in increasing d; the dominating stack reads them from the back.
  std::vector<DominationRecord> records;
  /// owner[i] = d of the dominating order that strictly dominates O_i
  /// (owner[d] = d for dominating positions). Index 0 unused.
  std::vector<Pos> owner;
  OpCounters counters;

  std::size_t q() const { return records.size(); }

  std::vector<Pos> dominating_positions() const {
    std::vector<Pos> d;
    d.reserve(records.size());
    for (const auto& r : records) d.push_back(r.d);
    return d;
  }
};

/// RightEnd: for each h > 1 such that B_d[h] is strictly dominated by d,
/// computes last[h] with B_{B_d[h]} = B_d[h..last[h]]. Returns the pairs
/// (h, last[h]) plus (1, k_d), in decreasing h.
///
/// `owner` flags strict domination (owner[i] == d).
inline std::vector<DomPair> right_end(Pos d, std::span<const Pos> positions,
                                      std::span<const Pos> owner,
                                      const OccIndex& occ,
                                      std::uint64_t* ops = nullptr) {
  const Pos k = positions.size();
  auto b = [&](Pos h) { return positions[h - 1]; };
  std::vector<Pos> last(k + 1, 0);
  struct Entry {
    Pos h;
    Pos succ;
  };
  std::vector<Entry> stack;
  std::uint64_t steps = 0;
  for (Pos g = 2; g <= k; ++g) {
    ++steps;
    while (!stack.empty() && b(g) > stack.back().succ) {
      last[stack.back().h] = g - 1;
      stack.pop_back();
      ++steps;
    }
    if (owner[b(g)] == d) {
      const Pos succ = occ.succ[b(g) - 1];
      // Pairs above are nested: larger h, no larger succ.
      CINTERVALS_CHECK(stack.empty() || (stack.back().h < g &&
                                         succ <= stack.back().succ),
                       "right-end stack order violated");
      stack.push_back({g, succ});
    }
  }
  while (!stack.empty()) {
    last[stack.back().h] = k;
    stack.pop_back();
    ++steps;
  }
  std::vector<DomPair> pairs;
  for (Pos h = k; h >= 2; --h) {
    if (last[h] != 0) pairs.push_back({h, last[h]});
  }
  pairs.push_back({1, k});
  if (ops) *ops += steps + k;
  return pairs;
}

/// Incremental Resolve over one sequence. Call resolve(d) for d = 1..n in
/// order; each call either returns the record of a new dominating order or
/// nothing if d was already resolved.
class Resolver {
 public:
  Resolver(const Sequence& seq, const OccIndex& occ)
      : seq_(seq), occ_(occ), owner_(seq.size() + 1, 0),
        orders_(seq.alphabet_size()) {}

  std::optional<DominationRecord> resolve(Pos d) {
    CINTERVALS_CHECK(d >= 1 && d <= seq_.size(), "resolve position out of range");
    if (owner_[d] != 0) return std::nullopt;

    counters_.resolve += orders_.build(seq_, occ_, d, order_);
    owner_[d] = d;

    const Pos fence = occ_.succ[d - 1];
    const std::uint64_t before = slices_.operations();
    slices_.reset(d - 1, fence);
    const auto& positions = order_.positions;
    for (Pos idx = positions.size(); idx-- > 0;) {
      const Pos i = positions[idx];
      for (Pos j = i; j < fence; j = occ_.succ[j]) slices_.remove_separator(j);
      if (owner_[i] != 0) continue;
      const Pos close = occ_.succ[i - 1];
      if (close <= fence && slices_.find(i) == slices_.find(close)) {
        owner_[i] = d;
      }
    }
    counters_.resolve += slices_.operations() - before;

    DominationRecord rec;
    rec.d = d;
    rec.length = positions.size();
    rec.pairs = right_end(d, positions, owner_, occ_, &counters_.right_end);
    return rec;
  }

  bool resolved(Pos i) const { return owner_[i] != 0; }
  /// Dominating position owning i, 0 while unresolved.
  Pos owner(Pos i) const { return owner_[i]; }
  const std::vector<Pos>& owners() const { return owner_; }
  const OpCounters& counters() const { return counters_; }

 private:
  const Sequence& seq_;
  const OccIndex& occ_;
  std::vector<Pos> owner_;
  OrderBuilder orders_;
  OrderSlice order_;
  SliceUnionFind slices_;
  OpCounters counters_;
};

/// Runs Resolve for every position. Dominating orders are not retained.
inline Domination resolve_all(const Sequence& seq, const OccIndex& occ) {
  Resolver resolver(seq, occ);
  Domination out;
  for (Pos d = 1; d <= seq.size(); ++d) {
    if (auto rec = resolver.resolve(d)) out.records.push_back(std::move(*rec));
  }
  out.owner = resolver.owners();
  out.counters = resolver.counters();
  for (Pos i = 1; i <= seq.size(); ++i) {
    CINTERVALS_CHECK(out.owner[i] != 0 && out.owner[i] <= i,
                     "position left unresolved");
  }
  return out;
}

/// Text form: "d=1: (1,6)(2,3)(3,3)(4,5); d=4: (1,5)(2,4); q=2".
/// Pairs are listed in increasing start.
inline std::string format_domination(const Domination& dom) {
  std::string out;
  for (const auto& rec : dom.records) {
    out += "d=" + std::to_string(rec.d) + ":";
    out += ' ';
    for (auto it = rec.pairs.rbegin(); it != rec.pairs.rend(); ++it) {
      out += "(" + std::to_string(it->start) + "," + std::to_string(it->end) + ")";
    }
    out += "; ";
  }
  out += "q=" + std::to_string(dom.q());
  return out;
}

}  // namespace cintervals
