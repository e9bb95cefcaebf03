#pragma once

// Sequences over a finite alphabet, occurrence links, orders and
// location conversions.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "cintervals/check.hpp"

namespace cintervals {

/// 1-based position in a sequence. Position 0 and n+1 are the virtual boundaries.
using Pos = std::size_t;
/// Symbol code, 1..p. The boundary symbol is p+1.
using Symbol = std::uint32_t;

/// Inclusive 1-based range [begin, end].
struct Location {
  Pos begin = 0;
  Pos end = 0;

  constexpr Pos length() const { return end - begin + 1; }
  friend constexpr auto operator<=>(const Location&, const Location&) = default;
};

inline std::ostream& operator<<(std::ostream& os, const Location& loc) {
  return os << '[' << loc.begin << ',' << loc.end << ']';
}

/// Symbol sequence over {1..p}. Storage is padded so that positions 0 and
/// n+1 hold the boundary code p+1, which never occurs inside the sequence.
class Sequence {
 public:
  Sequence() : data_{1, 1} {}

  Sequence(std::span<const Symbol> codes, Symbol alphabet_size)
      : alphabet_(alphabet_size) {
    data_.reserve(codes.size() + 2);
    data_.push_back(boundary());
    for (Symbol c : codes) {
      if (c < 1 || c > alphabet_size) {
        throw std::invalid_argument("symbol code " + std::to_string(c) +
                                    " outside alphabet 1.." +
                                    std::to_string(alphabet_size));
      }
      data_.push_back(c);
    }
    data_.push_back(boundary());
  }

  Pos size() const { return data_.size() - 2; }
  bool empty() const { return size() == 0; }
  Symbol alphabet_size() const { return alphabet_; }
  Symbol boundary() const { return alphabet_ + 1; }

  /// Valid for 0 <= i <= n+1.
  Symbol operator[](Pos i) const { return data_[i]; }

  std::span<const Symbol> codes() const { return {data_.data() + 1, size()}; }

  friend bool operator==(const Sequence& a, const Sequence& b) {
    return a.alphabet_ == b.alphabet_ && a.data_ == b.data_;
  }

 private:
  std::vector<Symbol> data_;
  Symbol alphabet_ = 0;
};

/// Bijection between input tokens and symbol codes.
class TokenMap {
 public:
  /// Returns the code of `token`, assigning the next free code on first sight.
  Symbol intern(std::string_view token) {
    auto it = codes_.find(std::string(token));
    if (it != codes_.end()) return it->second;
    tokens_.emplace_back(token);
    auto code = static_cast<Symbol>(tokens_.size());
    codes_.emplace(tokens_.back(), code);
    return code;
  }

  /// Numeric maps decode code c as the decimal string of c.
  static TokenMap numeric(Symbol alphabet_size) {
    TokenMap map;
    map.numeric_ = true;
    map.tokens_.reserve(alphabet_size);
    for (Symbol c = 1; c <= alphabet_size; ++c) {
      map.tokens_.push_back(std::to_string(c));
      map.codes_.emplace(map.tokens_.back(), c);
    }
    return map;
  }

  const std::string& token(Symbol code) const { return tokens_.at(code - 1); }
  Symbol size() const { return static_cast<Symbol>(tokens_.size()); }
  bool is_numeric() const { return numeric_; }

 private:
  std::vector<std::string> tokens_;
  std::unordered_map<std::string, Symbol> codes_;
  bool numeric_ = false;
};

struct EncodedPair {
  Sequence t;
  Sequence s;
  TokenMap tokens;
};

/// Codes tokens by first appearance, scanning `t_tokens` first. The alphabet
/// is the union of both supports.
template <typename Token>
EncodedPair encode(std::span<const Token> t_tokens,
                   std::span<const Token> s_tokens) {
  if (t_tokens.empty() || s_tokens.empty()) {
    throw std::invalid_argument("empty sequence");
  }
  TokenMap map;
  std::vector<Symbol> t_codes, s_codes;
  t_codes.reserve(t_tokens.size());
  s_codes.reserve(s_tokens.size());
  for (const auto& tok : t_tokens) t_codes.push_back(map.intern(tok));
  for (const auto& tok : s_tokens) s_codes.push_back(map.intern(tok));
  Symbol p = map.size();
  return {Sequence(t_codes, p), Sequence(s_codes, p), std::move(map)};
}

inline EncodedPair encode(const std::vector<std::string>& t_tokens,
                          const std::vector<std::string>& s_tokens) {
  return encode(std::span<const std::string>(t_tokens),
                std::span<const std::string>(s_tokens));
}

/// Integer mode: codes are used as given; p is the largest value seen.
inline EncodedPair encode_ints(std::span<const Symbol> t_values,
                               std::span<const Symbol> s_values) {
  if (t_values.empty() || s_values.empty()) {
    throw std::invalid_argument("empty sequence");
  }
  Symbol p = 0;
  for (Symbol v : t_values) p = std::max(p, v);
  for (Symbol v : s_values) p = std::max(p, v);
  return {Sequence(t_values, p), Sequence(s_values, p), TokenMap::numeric(p)};
}

/// Maps each position of a deduplicated sequence to the run of equal
/// symbols it stands for in the original sequence.
class PositionMap {
 public:
  PositionMap() = default;
  explicit PositionMap(std::vector<Location> runs) : runs_(std::move(runs)) {}

  static PositionMap identity(Pos n) {
    std::vector<Location> runs(n);
    for (Pos i = 0; i < n; ++i) runs[i] = {i + 1, i + 1};
    return PositionMap(std::move(runs));
  }

  Pos size() const { return runs_.size(); }
  Pos original_size() const { return runs_.empty() ? 0 : runs_.back().end; }
  const Location& run(Pos i) const { return runs_[i - 1]; }
  std::span<const Location> runs() const { return runs_; }

 private:
  std::vector<Location> runs_;
};

struct Deduplicated {
  Sequence sequence;
  PositionMap positions;
};

/// Collapses every run of equal adjacent symbols to a single position.
inline Deduplicated dedup(const Sequence& seq) {
  std::vector<Symbol> codes;
  std::vector<Location> runs;
  for (Pos i = 1; i <= seq.size(); ++i) {
    if (i > 1 && seq[i] == seq[i - 1]) {
      runs.back().end = i;
    } else {
      codes.push_back(seq[i]);
      runs.push_back({i, i});
    }
  }
  return {Sequence(codes, seq.alphabet_size()), PositionMap(std::move(runs))};
}

/// Maximal location in deduplicated coordinates -> maximal location of the
/// same set in the original sequence.
inline Location expand_to_original(const Location& loc,
                                   const PositionMap& map) {
  return {map.run(loc.begin).begin, map.run(loc.end).end};
}

/// Maxmin location in deduplicated coordinates -> maxmin location in the
/// original sequence (right-minimal stops at the first copy of the run).
inline Location expand_maxmin_to_original(const Location& loc,
                                          const PositionMap& map) {
  return {map.run(loc.begin).begin, map.run(loc.end).begin};
}

/// Next/previous occurrence links. succ is indexed 0..n, prec 1..n+1; the
/// boundary symbol sits at 0 and n+1.
struct OccIndex {
  std::vector<Pos> succ;
  std::vector<Pos> prec;

  Pos size() const { return succ.size() - 1; }
};

inline OccIndex build_occ_index(const Sequence& seq) {
  const Pos n = seq.size();
  const Symbol slots = seq.alphabet_size() + 2;
  OccIndex occ;
  occ.succ.assign(n + 1, n + 1);
  occ.prec.assign(n + 2, 0);
  std::vector<Pos> seen(slots, n + 1);
  for (Pos i = n + 1; i-- > 0;) {
    occ.succ[i] = seen[seq[i]];
    seen[seq[i]] = i;
  }
  std::fill(seen.begin(), seen.end(), 0);
  for (Pos i = 1; i <= n + 1; ++i) {
    occ.prec[i] = seen[seq[i]];
    seen[seq[i]] = i;
  }
  return occ;
}

/// An order O_i: the distinct symbols of the area T[i..succ[i-1]-1] in
/// first-occurrence order, with the positions of those first occurrences.
struct OrderSlice {
  std::vector<Symbol> values;
  std::vector<Pos> positions;

  Pos size() const { return values.size(); }
};

/// Reusable scratch for order extraction. Symbols are marked with an epoch
/// stamp so each call costs O(area) without clearing.
class OrderBuilder {
 public:
  explicit OrderBuilder(Symbol alphabet_size) : stamp_(alphabet_size + 2, 0) {}

  /// Fills `out` with O_i and B_i. Returns the area length scanned.
  Pos build(const Sequence& seq, const OccIndex& occ, Pos i, OrderSlice& out) {
    CINTERVALS_CHECK(i >= 1 && i <= seq.size(), "order position out of range");
    next_epoch();
    out.values.clear();
    out.positions.clear();
    const Pos stop = occ.succ[i - 1];
    for (Pos j = i; j < stop; ++j) {
      Symbol c = seq[j];
      if (stamp_[c] != epoch_) {
        stamp_[c] = epoch_;
        out.values.push_back(c);
        out.positions.push_back(j);
      }
    }
    return stop - i;
  }

 private:
  void next_epoch() {
    if (++epoch_ == 0) {
      std::fill(stamp_.begin(), stamp_.end(), 0);
      epoch_ = 1;
    }
  }

  std::vector<std::uint32_t> stamp_;
  std::uint32_t epoch_ = 0;
};

inline OrderSlice order_of(const Sequence& seq, const OccIndex& occ, Pos i) {
  OrderBuilder builder(seq.alphabet_size());
  OrderSlice out;
  builder.build(seq, occ, i, out);
  return out;
}

/// Converts the maxmin location [B[s], B[u]] of an order strictly dominated
/// with end index f (s <= u <= f) into its maximal location. `positions` is
/// B_d, indexed 1-based through s, u, f.
inline Location to_maximal(std::span<const Pos> positions, Pos s, Pos u, Pos f,
                           const OccIndex& occ) {
  CINTERVALS_CHECK(s >= 1 && s <= u && u <= f && f <= positions.size(),
                   "to_maximal index out of range");
  const Pos begin = positions[s - 1];
  const Pos end = u < f ? positions[u] - 1 : occ.succ[begin - 1] - 1;
  return {begin, end};
}

}  // namespace cintervals
