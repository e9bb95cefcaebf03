#pragma once

// Brute-force reference computations, straight from the definitions.
// Quadratic to cubic; meant for tests and the `verify` command only.

#include <algorithm>
#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "cintervals/core_model.hpp"
#include "cintervals/domination.hpp"

namespace cintervals::oracle {

/// Bumped whenever the oracle's output format or semantics change; golden
/// files record it.
inline constexpr const char* kVersion = "naive-v1";

inline constexpr Pos kDefaultCap = 200;

using SymbolSet = std::vector<Symbol>;  // sorted

/// One (T, S)-maximal location pair of a common interval.
struct Match {
  Location t;
  Location s;
  Pos size = 0;
  friend auto operator<=>(const Match&, const Match&) = default;
};

struct Locations {
  std::map<SymbolSet, std::vector<Location>> maximal;
  std::map<SymbolSet, std::vector<Location>> maxmin;
};

/// All maximal and maxmin locations of every interval of `seq`.
inline Locations naive_locations(const Sequence& seq) {
  const Pos n = seq.size();
  Locations out;
  std::vector<char> in(seq.alphabet_size() + 2, 0);
  for (Pos i = 1; i <= n; ++i) {
    std::fill(in.begin(), in.end(), 0);
    SymbolSet members;
    for (Pos j = i; j <= n; ++j) {
      const bool fresh = !in[seq[j]];
      if (fresh) {
        in[seq[j]] = 1;
        members.insert(std::upper_bound(members.begin(), members.end(), seq[j]), seq[j]);
      }
      const bool left_max = i == 1 || !in[seq[i - 1]];
      if (!left_max) break;
      if (j == n || !in[seq[j + 1]]) out.maximal[members].push_back({i, j});
      if (fresh) out.maxmin[members].push_back({i, j});
    }
  }
  return out;
}

/// Shrinks a maximal location to its maxmin counterpart by dropping the
/// rightmost element while it has a copy to its left inside the location.
inline Location naive_shrink(const Sequence& seq, Location loc) {
  for (;;) {
    bool copy = false;
    for (Pos k = loc.begin; k < loc.end; ++k) copy = copy || seq[k] == seq[loc.end];
    if (!copy) return loc;
    --loc.end;
  }
}

/// Every (T, S)-maximal location pair of common intervals of size at least
/// `min_size`, sorted.
inline std::vector<Match> naive_common(const Sequence& t, const Sequence& s,
                                       Pos min_size = 2, Pos cap = kDefaultCap) {
  if (t.size() > cap || s.size() > cap) {
    throw std::invalid_argument("oracle cap exceeded: lengths " + std::to_string(t.size()) +
                                ", " + std::to_string(s.size()) + " > " +
                                std::to_string(cap));
  }
  const auto lt = naive_locations(t);
  const auto ls = naive_locations(s);
  std::vector<Match> out;
  for (const auto& [set, tlocs] : lt.maximal) {
    if (set.size() < min_size) continue;
    auto it = ls.maximal.find(set);
    if (it == ls.maximal.end()) continue;
    for (const auto& a : tlocs) {
      for (const auto& b : it->second) out.push_back({a, b, set.size()});
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/// (s, u, y, z) with (s..u) a common interval of Id and pi, located at
/// [y, z] on pi, valid w.r.t. F and Phi. Arrays are 1-based.
using ValidHit = std::tuple<Pos, Pos, Pos, Pos>;

inline std::vector<ValidHit> naive_valid_common(std::span<const Pos> pi,
                                                std::span<const Pos> F,
                                                std::span<const Pos> Phi,
                                                Pos min_size = 2) {
  const Pos m = pi.size() - 1;
  std::vector<Pos> where(m + 1, 0);
  for (Pos y = 1; y <= m; ++y) where[pi[y]] = y;
  std::vector<ValidHit> out;
  for (Pos s = 1; s <= m; ++s) {
    Pos lo = where[s], hi = where[s];
    for (Pos u = s; u <= m; ++u) {
      lo = std::min(lo, where[u]);
      hi = std::max(hi, where[u]);
      if (u - s + 1 < min_size || hi - lo != u - s) continue;
      if (F[s] == 0 || u > F[s]) continue;
      if (Phi[lo] == 0 || hi > Phi[lo]) continue;
      out.emplace_back(s, u, lo, hi);
    }
  }
  return out;
}

/// For each gap s, the min and max value of pi between the positions of s
/// and s+1 (both included). Index 0 unused.
inline std::pair<std::vector<Pos>, std::vector<Pos>> naive_gap_extrema(
    std::span<const Pos> pi) {
  const Pos m = pi.size() - 1;
  std::vector<Pos> where(m + 1, 0);
  for (Pos y = 1; y <= m; ++y) where[pi[y]] = y;
  std::vector<Pos> lo(m, 0), hi(m, 0);
  for (Pos s = 1; s < m; ++s) {
    const Pos a = std::min(where[s], where[s + 1]);
    const Pos b = std::max(where[s], where[s + 1]);
    lo[s] = *std::min_element(pi.begin() + a, pi.begin() + b + 1);
    hi[s] = *std::max_element(pi.begin() + a, pi.begin() + b + 1);
  }
  return {lo, hi};
}

/// B_i by direct scan: positions of first occurrences in T[i..] up to (not
/// including) the next copy of t_{i-1}. Boundary symbols never match.
inline std::vector<Pos> naive_order_positions(const Sequence& seq, Pos i) {
  std::vector<Pos> out;
  std::vector<char> seen(seq.alphabet_size() + 2, 0);
  const bool fenced = i > 1;
  for (Pos j = i; j <= seq.size(); ++j) {
    if (fenced && seq[j] == seq[i - 1]) break;
    if (!seen[seq[j]]) {
      seen[seq[j]] = 1;
      out.push_back(j);
    }
  }
  return out;
}

/// True iff `inner` occurs as a contiguous run of `outer`.
inline bool is_contiguous_in(const std::vector<Pos>& inner, const std::vector<Pos>& outer) {
  if (inner.empty()) return true;
  auto it = std::find(outer.begin(), outer.end(), inner.front());
  if (it == outer.end()) return false;
  const auto start = static_cast<std::size_t>(it - outer.begin());
  if (start + inner.size() > outer.size()) return false;
  return std::equal(inner.begin(), inner.end(), outer.begin() + static_cast<std::ptrdiff_t>(start));
}

struct NaiveDomination {
  std::vector<Pos> owner;        // 1-based, strict dominator of each order
  std::vector<Pos> dominating;   // increasing
  std::map<Pos, std::vector<DomPair>> pairs;  // per dominating d, increasing start
};

/// Domination labels from the definition: O_i is strictly dominated by the
/// smallest d whose B_d contains B_i contiguously. Expects a sequence
/// without equal neighbors.
inline NaiveDomination naive_domination(const Sequence& seq, Pos cap = kDefaultCap) {
  const Pos n = seq.size();
  if (n > cap) throw std::invalid_argument("oracle cap exceeded");
  std::vector<std::vector<Pos>> b(n + 1);
  for (Pos i = 1; i <= n; ++i) b[i] = naive_order_positions(seq, i);
  NaiveDomination out;
  out.owner.assign(n + 1, 0);
  for (Pos i = 1; i <= n; ++i) {
    for (Pos d = 1; d <= i; ++d) {
      if (is_contiguous_in(b[i], b[d])) {
        out.owner[i] = d;
        break;
      }
    }
    if (out.owner[i] == i) out.dominating.push_back(i);
  }
  for (Pos i = 1; i <= n; ++i) {
    const Pos d = out.owner[i];
    const auto& bd = b[d];
    const auto start = static_cast<Pos>(std::find(bd.begin(), bd.end(), i) - bd.begin()) + 1;
    out.pairs[d].push_back({start, start + b[i].size() - 1});
  }
  for (auto& [d, pairs] : out.pairs) std::sort(pairs.begin(), pairs.end());
  return out;
}

/// Direct test of the domination criterion for i > d: i < succ(i-1) <=
/// succ(d-1), i in B_d, and no symbol of the area of i occurs in T[d..i-1].
inline bool naive_dominates_by_criterion(const Sequence& seq, Pos d, Pos i) {
  const Pos n = seq.size();
  auto next_copy = [&](Pos k) {
    for (Pos j = k + 1; j <= n; ++j) {
      if (k >= 1 && seq[j] == seq[k]) return j;
    }
    return n + 1;
  };
  const Pos succ_i = next_copy(i - 1);
  const Pos succ_d = next_copy(d - 1);
  if (!(i < succ_i && succ_i <= succ_d)) return false;
  const auto bd = naive_order_positions(seq, d);
  if (std::find(bd.begin(), bd.end(), i) == bd.end()) return false;
  for (Pos j = i; j < succ_i; ++j) {
    for (Pos k = d; k < i; ++k) {
      if (seq[k] == seq[j]) return false;
    }
  }
  return true;
}

}  // namespace cintervals::oracle
