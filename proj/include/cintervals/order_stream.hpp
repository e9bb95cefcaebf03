#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "cintervals/check.hpp"
#include "cintervals/core_model.hpp"

namespace cintervals {

/// One dominating order handed to a stream visitor. Spans are valid only
/// for the duration of the callback.
struct OrderView {
  Pos d = 0;
  std::size_t rank = 0;  // index of d among the dominating positions
  std::span<const Symbol> values;
  std::span<const Pos> positions;

  Pos size() const { return values.size(); }
};

/// Regenerates the dominating orders of a sequence in decreasing d from the
/// dominating positions and the Prec links alone.
///
/// W is a doubly linked list over positions 1..n. When d is visited, B_d is
/// the stretch of W from the node holding d to the node `end`. Afterwards
/// the stretch is rescanned for the next dominating position d': positions
/// with a copy inside [d', ...) are dropped, the scan stops at the closing
/// copy of t_{d'-1}, and `end` moves to the last kept node.
class OrderStream {
 public:
  /// `dominating` must be increasing (the bottom of the stack first).
  OrderStream(const Sequence& seq, const OccIndex& occ,
              std::span<const Pos> dominating)
      : seq_(seq), occ_(occ), dominating_(dominating.begin(), dominating.end()) {}

  template <typename Visit>
  void run(Visit&& visit) {
    const Pos n = seq_.size();
    const Pos tail = n + 1;
    next_.resize(n + 2);
    prev_.resize(n + 2);
    for (Pos i = 0; i <= n; ++i) next_[i] = i + 1;
    for (Pos i = 1; i <= n + 1; ++i) prev_[i] = i - 1;
    ops_ += n + 1;
    end_ = n;

    for (std::size_t rank = dominating_.size(); rank-- > 0;) {
      const Pos d = dominating_[rank];
      // Positions 1..d-1 are still in W, so d is the d-th node.
      CINTERVALS_CHECK(prev_[d] == d - 1, "stream lost a position before d");
      values_.clear();
      positions_.clear();
      for (Pos node = d;; node = next_[node]) {
        positions_.push_back(node);
        values_.push_back(seq_[node]);
        ++ops_;
        if (node == end_) break;
        CINTERVALS_CHECK(node != tail, "stream end handle not reachable");
      }
      visit(OrderView{d, rank, values_, positions_});

      if (rank == 0) break;
      const Pos next_d = dominating_[rank - 1];
      // d-1 >= d' always belongs to B_{d'}; it is the end if nothing from d on survives.
      end_ = d - 1;
      for (Pos node = d; node != tail;) {
        ++ops_;
        const Pos after = next_[node];
        const Pos copy = occ_.prec[node];
        if (next_d != 1 && copy == next_d - 1) {
          unlink(node);
          break;
        }
        if (copy >= next_d) {
          unlink(node);
        } else {
          end_ = node;
        }
        node = after;
      }
    }
  }

  /// Current content of W, for inspection between visits.
  std::vector<Pos> remaining() const {
    std::vector<Pos> out;
    for (Pos node = next_[0]; node != seq_.size() + 1; node = next_[node]) {
      out.push_back(node);
    }
    return out;
  }

  /// Position value held by the end handle.
  Pos end_value() const { return end_; }

  std::uint64_t operations() const { return ops_; }

 private:
  void unlink(Pos node) {
    next_[prev_[node]] = next_[node];
    prev_[next_[node]] = prev_[node];
  }

  const Sequence& seq_;
  const OccIndex& occ_;
  std::vector<Pos> dominating_;
  std::vector<Pos> next_;
  std::vector<Pos> prev_;
  std::vector<Symbol> values_;
  std::vector<Pos> positions_;
  Pos end_ = 0;
  std::uint64_t ops_ = 0;
};

template <typename Visit>
void stream_orders(const Sequence& seq, const OccIndex& occ,
                   std::span<const Pos> dominating, Visit&& visit) {
  OrderStream stream(seq, occ, dominating);
  stream.run(visit);
}

}  // namespace cintervals
