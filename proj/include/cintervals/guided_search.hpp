#pragma once

// Common intervals of two dominating orders that are valid with respect to
// both domination functions.
//
// The first order is renumbered to the identity Id = 1..k_d and the second
// accordingly to a permutation pi. Symbols present in only one order are
// appended at the tail of the other (padding); the domination functions F
// (on Id) and Phi (on pi) are left untouched, so no padded value can ever
// fall inside a valid location.
//
// For every gap s|s+1 the bounding pair [l_s, r_s] is the min/max of
// pi[v_s..x_s], where [v_s, Phi(v_s)] is the innermost Phi-window holding
// both s and s+1 and x_s is the rightmost of their positions. LR-Search
// sweeps s downward, keeping left/right endpoint candidates on an LR-stack;
// the Filter reads the candidates of s and keeps those with u <= F(s).

#include <algorithm>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "cintervals/check.hpp"
#include "cintervals/core_model.hpp"
#include "cintervals/counters.hpp"
#include "cintervals/domination.hpp"
#include "cintervals/interval_union_find.hpp"
#include "cintervals/rmq.hpp"

namespace cintervals {

/// Two orders over their joint symbol set, renumbered so the first is Id.
/// All arrays are 1-based; index 0 is unused.
struct RenumberedPair {
  Pos size = 0;        // p', size of the joint symbol set
  Pos id_length = 0;   // k_d; Id values above it are padding
  Pos pi_length = 0;   // k_delta; pi positions above it are padding
  std::vector<Pos> pi;       // pi[y] = value at position y
  std::vector<Pos> pi_inv;   // pi_inv[v] = position of value v
  std::vector<Pos> F;        // F[s] = end index on Id, 0 if undefined
  std::vector<Pos> Phi;      // Phi[y] = end position on pi, 0 if undefined
  std::vector<Symbol> symbol_of;  // renumbered value -> original symbol code

  bool is_padding_value(Pos v) const { return v > id_length || pi_inv[v] > pi_length; }
};

/// Builds RenumberedPair instances; scratch tables are indexed by symbol
/// code and reset through epoch stamps, so each pair costs O(k_d + k_delta).
class PairRenumberer {
 public:
  explicit PairRenumberer(Symbol alphabet_size)
      : code_(alphabet_size + 2, 0), stamp_(alphabet_size + 2, 0) {}

  /// Returns the number of elementary steps taken.
  std::uint64_t build(std::span<const Symbol> id_values,
                      std::span<const DomPair> id_pairs,
                      std::span<const Symbol> pi_values,
                      std::span<const DomPair> pi_pairs, RenumberedPair& out) {
    if (++epoch_ == 0) {
      std::fill(stamp_.begin(), stamp_.end(), 0);
      epoch_ = 1;
    }
    const Pos kd = id_values.size();
    const Pos kdelta = pi_values.size();
    out.id_length = kd;
    out.pi_length = kdelta;
    out.symbol_of.assign(1, 0);
    for (Pos k = 0; k < kd; ++k) {
      code_[id_values[k]] = static_cast<Symbol>(k + 1);
      stamp_[id_values[k]] = epoch_;
      out.symbol_of.push_back(id_values[k]);
    }
    out.pi.assign(1, 0);
    seen_on_pi_.assign(kd + 1, 0);
    for (Symbol c : pi_values) {
      if (stamp_[c] != epoch_) {
        stamp_[c] = epoch_;
        out.symbol_of.push_back(c);
        code_[c] = static_cast<Symbol>(out.symbol_of.size() - 1);
      } else {
        seen_on_pi_[code_[c]] = 1;
      }
      out.pi.push_back(code_[c]);
    }
    for (Pos v = 1; v <= kd; ++v) {
      if (!seen_on_pi_[v]) out.pi.push_back(v);
    }
    const Pos size = out.symbol_of.size() - 1;
    out.size = size;
    CINTERVALS_CHECK(out.pi.size() == size + 1, "padding produced a non-permutation");
    out.pi_inv.assign(size + 1, 0);
    for (Pos y = 1; y <= size; ++y) out.pi_inv[out.pi[y]] = y;
    out.F.assign(size + 1, 0);
    for (const auto& p : id_pairs) out.F[p.start] = p.end;
    out.Phi.assign(size + 1, 0);
    for (const auto& p : pi_pairs) out.Phi[p.start] = p.end;
    return kd + kdelta + 3 * (size + 1) + id_pairs.size() + pi_pairs.size();
  }

 private:
  std::vector<Symbol> code_;
  std::vector<std::uint32_t> stamp_;
  std::vector<unsigned char> seen_on_pi_;
  std::uint32_t epoch_ = 0;
};

inline RenumberedPair renumber_and_pad(std::span<const Symbol> id_values,
                                       std::span<const DomPair> id_pairs,
                                       std::span<const Symbol> pi_values,
                                       std::span<const DomPair> pi_pairs,
                                       Symbol alphabet_size) {
  PairRenumberer renumberer(alphabet_size);
  RenumberedPair out;
  renumberer.build(id_values, id_pairs, pi_values, pi_pairs, out);
  return out;
}

/// For each s in 1..p'-1, v[s] is the start of the innermost Phi-window of
/// pi containing both s and s+1, or 0 when no window holds both.
///
/// Windows are laid over pi as bracket pairs; the scan over pi keeps the
/// positions between consecutive live brackets in one slice, so the slice
/// minimum of an already seen neighbor is the start of the innermost window
/// still open. Candidates are checked against their window afterwards: with
/// padding, Phi(1) no longer spans all of pi.
inline std::vector<Pos> compute_v(std::span<const Pos> pi,
                                  std::span<const Pos> pi_inv,
                                  std::span<const Pos> Phi,
                                  SliceUnionFind& slices,
                                  std::uint64_t* ops = nullptr) {
  const Pos m = pi.size() - 1;
  std::vector<Pos> v(m, 0);
  if (m < 2) return v;
  std::uint64_t steps = 0;
  const std::uint64_t uf_before = slices.operations();

  // Live bracket count on each boundary b (between positions b and b+1).
  std::vector<Pos> brackets(m + 1, 0);
  // Windows closing after each position, as singly linked lists.
  std::vector<Pos> closing_head(m + 1, 0);
  std::vector<Pos> closing_next(m + 1, 0);
  for (Pos w = 1; w <= m; ++w) {
    if (Phi[w] == 0) continue;
    CINTERVALS_CHECK(Phi[w] >= w && Phi[w] <= m, "window end out of range");
    ++brackets[w - 1];
    ++brackets[Phi[w]];
    closing_next[w] = closing_head[Phi[w]];
    closing_head[Phi[w]] = w;
    ++steps;
  }
  slices.reset(1, m);
  for (Pos b = 1; b < m; ++b) {
    if (brackets[b] == 0) slices.remove_separator(b);
  }
  auto release = [&](Pos b) {
    if (--brackets[b] == 0 && b >= 1 && b < m) slices.remove_separator(b);
  };

  for (Pos pos = 1; pos <= m; ++pos) {
    const Pos val = pi[pos];
    if (val > 1 && pi_inv[val - 1] < pos) v[val - 1] = slices.find(pi_inv[val - 1]);
    if (val < m && pi_inv[val + 1] < pos) v[val] = slices.find(pi_inv[val + 1]);
    for (Pos w = closing_head[pos]; w != 0; w = closing_next[w]) {
      release(w - 1);
      release(pos);
      ++steps;
    }
    ++steps;
  }

  for (Pos s = 1; s < m; ++s) {
    const Pos w = v[s];
    if (w == 0) continue;
    const Pos lo = std::min(pi_inv[s], pi_inv[s + 1]);
    const Pos hi = std::max(pi_inv[s], pi_inv[s + 1]);
    if (Phi[w] == 0 || w > lo || hi > Phi[w]) v[s] = 0;
    ++steps;
  }
  if (ops) *ops += steps + (slices.operations() - uf_before);
  return v;
}

/// Bounding functions over the gaps 1..p'-1 (index 0 unused). A gap with
/// no enclosing window gets the sentinel pair l = 0, r = p'+1.
struct BoundingProfile {
  std::vector<Pos> v;
  std::vector<Pos> x;
  std::vector<Pos> l;
  std::vector<Pos> r;

  bool defined(Pos s) const { return v[s] != 0; }
};

inline BoundingProfile compute_bounds(std::span<const Pos> pi_inv,
                                      std::span<const Pos> v,
                                      const MinTable<Pos>& pi_min,
                                      const MaxTable<Pos>& pi_max) {
  const Pos m = pi_inv.size() - 1;
  BoundingProfile prof;
  prof.v.assign(v.begin(), v.end());
  prof.x.assign(m, 0);
  prof.l.assign(m, 0);
  prof.r.assign(m, m + 1);
  for (Pos s = 1; s < m; ++s) {
    prof.x[s] = std::max(pi_inv[s], pi_inv[s + 1]);
    if (v[s] == 0) continue;
    prof.l[s] = pi_min.query(v[s], prof.x[s]);
    prof.r[s] = pi_max.query(v[s], prof.x[s]);
  }
  return prof;
}

/// LR-stack with L^-R^+ discipline: L decreases from top to bottom, R
/// increases from top to bottom. Each element a of L owns the contiguous
/// run Set_R(a) of R that starts at its pointer R^top(a) and stops just
/// before the pointer of the element below it.
///
/// Both stacks are vectors whose back is the top; R^top is an index into R.
class LRStack {
 public:
  struct LeftEntry {
    Pos value;
    std::size_t rtop;
  };

  void clear() {
    left_.clear();
    right_.clear();
  }

  bool empty() const { return left_.empty(); }
  std::span<const LeftEntry> left() const { return left_; }
  std::span<const Pos> right() const { return right_; }

  /// Discards L candidates larger than a and, if any went, puts a on top.
  /// The top of L then owns the top of R.
  void pop_l(Pos a) {
    bool popped = false;
    while (!left_.empty() && left_.back().value > a) {
      left_.pop_back();
      popped = true;
      ++ops_;
    }
    if (left_.empty() && !popped) return;
    CINTERVALS_CHECK(!right_.empty(), "left candidates without right candidates");
    if (popped && (left_.empty() || left_.back().value != a)) {
      left_.push_back({a, right_.size() - 1});
    } else {
      left_.back().rtop = right_.size() - 1;
    }
    ++ops_;
  }

  /// Discards R candidates smaller than c, then every L candidate whose
  /// Set_R became empty.
  void pop_r(Pos c) {
    while (!right_.empty() && right_.back() < c) {
      right_.pop_back();
      ++ops_;
    }
    while (!left_.empty() && left_.back().rtop >= right_.size()) {
      const std::size_t floor = left_.size() >= 2 ? left_[left_.size() - 2].rtop + 1 : 0;
      ++ops_;
      if (right_.size() > floor) {
        left_.back().rtop = right_.size() - 1;
        break;
      }
      left_.pop_back();
    }
  }

  /// Requires no L-blocking element for a and no R-blocking element for c.
  void push_lr(Pos a, Pos c) {
    CINTERVALS_CHECK(left_.empty() || left_.back().value <= a, "push_lr: a is L-blocked");
    CINTERVALS_CHECK(right_.empty() || right_.back() >= c, "push_lr: c is R-blocked");
    if (right_.empty() || right_.back() != c) right_.push_back(c);
    if (left_.empty() || left_.back().value != a) {
      left_.push_back({a, right_.size() - 1});
    } else {
      left_.back().rtop = right_.size() - 1;
    }
    ++ops_;
  }

  /// Set_R of the L element at stack index i (0 = bottom), top of R first,
  /// hence in increasing value order.
  std::vector<Pos> set_r(std::size_t i) const {
    std::vector<Pos> out;
    const std::size_t floor = i == 0 ? 0 : left_[i - 1].rtop + 1;
    for (std::size_t k = left_[i].rtop + 1; k-- > floor;) out.push_back(right_[k]);
    return out;
  }

  /// Filter: if s is the top of L, reports u in Set_R(s) while u <= limit.
  /// Never modifies the stack. Returns the number of reported values.
  template <typename Report>
  std::size_t scan_top(Pos s, Pos limit, Report&& report) const {
    if (left_.empty() || left_.back().value != s) return 0;
    const std::size_t floor = left_.size() >= 2 ? left_[left_.size() - 2].rtop + 1 : 0;
    std::size_t count = 0;
    for (std::size_t k = left_.back().rtop + 1; k-- > floor;) {
      const Pos u = right_[k];
      if (u > limit) break;
      report(u);
      ++count;
    }
    return count;
  }

  /// Full structural check; O(|L| + |R|).
  void check_invariants() const {
    auto fail = [](const char* what) { throw std::logic_error(std::string("LR-stack: ") + what); };
    if (left_.empty() != right_.empty()) fail("L and R must be empty together");
    for (std::size_t i = 1; i < left_.size(); ++i) {
      if (!(left_[i - 1].value < left_[i].value)) fail("L not decreasing from top");
      if (!(left_[i - 1].rtop < left_[i].rtop)) fail("R^top not order-preserving and injective");
    }
    for (std::size_t k = 1; k < right_.size(); ++k) {
      if (!(right_[k - 1] > right_[k])) fail("R not increasing from top");
    }
    if (!left_.empty()) {
      if (left_.back().rtop + 1 != right_.size()) fail("top of L does not own top of R");
      if (left_.front().rtop >= right_.size()) fail("R^top out of range");
    }
  }

  std::uint64_t operations() const { return ops_; }

 private:
  std::vector<LeftEntry> left_;
  std::vector<Pos> right_;
  std::uint64_t ops_ = 0;
};

/// LR-Search with the F-Filter over Id = 1..size. Calls emit(s, u) for every
/// common interval (s..u), u > s, of Id and pi that is valid with respect to
/// Phi (encoded in l, r) and F. For fixed s, u is increasing.
///
/// With `audit`, the LR-stack invariants are checked after every operation.
template <typename Emit>
void lr_search(Pos size, std::span<const Pos> l, std::span<const Pos> r,
               std::span<const Pos> F, LRStack& stack, Emit&& emit,
               bool audit = false, std::uint64_t* filter_ops = nullptr) {
  stack.clear();
  std::uint64_t filtered = 0;
  for (Pos s = size - 1; s >= 1; --s) {
    stack.pop_l(l[s]);
    if (audit) stack.check_invariants();
    stack.pop_r(r[s]);
    if (audit) stack.check_invariants();
    if (r[s] == s + 1) {
      stack.push_lr(l[s], s + 1);
      if (audit) stack.check_invariants();
    }
    ++filtered;
    if (F[s] != 0) {
      filtered += stack.scan_top(s, F[s], [&](Pos u) { emit(s, u); });
    }
  }
  if (filter_ops) *filter_ops += filtered;
}

/// Location [y, z] on pi of the common interval (s..u).
inline Location locate_on_pi(Pos s, Pos u, const MinTable<Pos>& inv_min,
                             const MaxTable<Pos>& inv_max) {
  return {inv_min.query(s, u), inv_max.query(s, u)};
}

/// One guided hit: (s..u) on Id, located at [y, z] on pi. Both are indices
/// into the original orders (s, u into B_d; y, z into B_delta).
struct GuidedHit {
  Pos s = 0;
  Pos u = 0;
  Location pi_loc;
};

/// Runs the guided search for one pair of orders, reusing buffers across
/// pairs. Not shareable between threads.
class GuidedSearch {
 public:
  explicit GuidedSearch(Symbol alphabet_size) : renumber_(alphabet_size) {}

  template <typename Emit>
  void run(std::span<const Symbol> id_values, std::span<const DomPair> id_pairs,
           std::span<const Symbol> pi_values, std::span<const DomPair> pi_pairs,
           Emit&& emit, bool audit = false) {
    counters_.renumber += renumber_.build(id_values, id_pairs, pi_values, pi_pairs, pair_);
    const Pos m = pair_.size;
    if (pair_.id_length < 2 || pair_.pi_length < 2) {
      profile_ = {};
      return;
    }
    auto pi = std::span<const Pos>(pair_.pi);
    auto inv = std::span<const Pos>(pair_.pi_inv);
    auto v = compute_v(pi, inv, pair_.Phi, slices_, &counters_.compute_v);
    pi_min_.assign(pi.subspan(1));
    pi_max_.assign(pi.subspan(1));
    counters_.range_tables += pi_min_.build_cost() + pi_max_.build_cost();
    profile_ = compute_bounds(inv, v, pi_min_, pi_max_);
    counters_.range_tables += m;

    bool located = false;
    const std::uint64_t stack_before = stack_.operations();
    lr_search(
        m, profile_.l, profile_.r, pair_.F, stack_,
        [&](Pos s, Pos u) {
          if (!located) {
            inv_min_.assign(inv.subspan(1));
            inv_max_.assign(inv.subspan(1));
            counters_.range_tables += inv_min_.build_cost() + inv_max_.build_cost();
            located = true;
          }
          GuidedHit hit{s, u, locate_on_pi(s, u, inv_min_, inv_max_)};
          CINTERVALS_CHECK(u <= pair_.id_length && hit.pi_loc.end <= pair_.pi_length,
                           "padded symbol in a guided hit");
          emit(hit);
        },
        audit, &counters_.filter);
    counters_.lr_stack += m + (stack_.operations() - stack_before);
  }

  const RenumberedPair& pair() const { return pair_; }
  const BoundingProfile& profile() const { return profile_; }
  const OpCounters& counters() const { return counters_; }

 private:
  PairRenumberer renumber_;
  RenumberedPair pair_;
  SliceUnionFind slices_;
  BoundingProfile profile_;
  MinTable<Pos> pi_min_;
  MaxTable<Pos> pi_max_;
  MinTable<Pos> inv_min_;
  MaxTable<Pos> inv_max_;
  LRStack stack_;
  OpCounters counters_;
};

}  // namespace cintervals
