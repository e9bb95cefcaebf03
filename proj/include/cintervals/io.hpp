#pragma once

// Token input, TSV/JSONL record formatting and golden files.

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "cintervals/core_model.hpp"
#include "cintervals/oracle.hpp"
#include "cintervals/pipeline.hpp"

namespace cintervals {

/// Largest value accepted in integer mode; scratch tables are sized by it.
inline constexpr Symbol kMaxIntSymbol = Symbol{1} << 24;

/// Whitespace-separated tokens; lines whose first non-blank character is
/// '#' are skipped.
inline std::vector<std::string> read_tokens(std::istream& in) {
  std::vector<std::string> tokens;
  std::string line;
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t\r\f\v");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream words(line);
    std::string w;
    while (words >> w) tokens.push_back(std::move(w));
  }
  return tokens;
}

inline std::vector<std::string> read_token_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_tokens(in);
}

inline std::vector<Symbol> parse_ints(const std::vector<std::string>& tokens) {
  std::vector<Symbol> out;
  out.reserve(tokens.size());
  for (const auto& tok : tokens) {
    std::uint64_t v = 0;
    const auto* end = tok.data() + tok.size();
    auto [ptr, ec] = std::from_chars(tok.data(), end, v);
    if (ec != std::errc{} || ptr != end || v == 0) {
      throw std::invalid_argument("not a positive integer: '" + tok + "'");
    }
    if (v > kMaxIntSymbol) {
      throw std::invalid_argument("integer too large: " + tok);
    }
    out.push_back(static_cast<Symbol>(v));
  }
  return out;
}

/// Reads T and S and codes them. Integer mode keeps the values as codes.
inline EncodedPair load_pair(const std::string& t_path, const std::string& s_path, bool ints) {
  const auto t = read_token_file(t_path);
  const auto s = read_token_file(s_path);
  if (t.empty()) throw std::invalid_argument(t_path + ": empty sequence");
  if (s.empty()) throw std::invalid_argument(s_path + ": empty sequence");
  if (ints) {
    const auto tv = parse_ints(t), sv = parse_ints(s);
    return encode_ints(tv, sv);
  }
  return encode(t, s);
}

/// Decoded tokens of `codes`, numerically sorted for integer maps and
/// lexicographically otherwise.
inline std::vector<std::string> decode_elements(const std::vector<Symbol>& codes,
                                                const TokenMap& tokens) {
  std::vector<Symbol> sorted(codes);
  std::sort(sorted.begin(), sorted.end());
  std::vector<std::string> out;
  out.reserve(sorted.size());
  for (Symbol c : sorted) out.push_back(tokens.token(c));
  if (!tokens.is_numeric()) std::sort(out.begin(), out.end());
  return out;
}

inline std::string join(const std::vector<std::string>& parts, char sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

/// One TSV line without the newline. Column layout:
///   maximal: t_begin t_end s_begin s_end size
///   maxmin:  same columns holding the maxmin locations
///   both:    maximal four, maxmin four, size
/// followed by the comma-separated elements when requested.
inline std::string format_tsv(const ResultRecord& r, LocationMode mode,
                              const TokenMap* tokens = nullptr) {
  std::string out;
  auto put = [&](Pos v) {
    if (!out.empty()) out += '\t';
    out += std::to_string(v);
  };
  auto put_loc = [&](const Location& t, const Location& s) {
    put(t.begin);
    put(t.end);
    put(s.begin);
    put(s.end);
  };
  if (mode == LocationMode::maxmin) {
    put_loc(r.t_maxmin, r.s_maxmin);
  } else {
    put_loc(r.t, r.s);
    if (mode == LocationMode::both) put_loc(r.t_maxmin, r.s_maxmin);
  }
  put(r.size);
  if (tokens) {
    out += '\t';
    out += join(decode_elements(r.elements, *tokens), ',');
  }
  return out;
}

inline std::string format_jsonl(const ResultRecord& r, LocationMode mode,
                                const TokenMap* tokens = nullptr) {
  nlohmann::ordered_json j;
  auto loc = [](const Location& l) { return nlohmann::json::array({l.begin, l.end}); };
  if (mode != LocationMode::maxmin) {
    j["t"] = loc(r.t);
    j["s"] = loc(r.s);
  }
  if (mode != LocationMode::maximal) {
    j["t_maxmin"] = loc(r.t_maxmin);
    j["s_maxmin"] = loc(r.s_maxmin);
  }
  j["size"] = r.size;
  if (tokens) j["elements"] = decode_elements(r.elements, *tokens);
  return j.dump();
}

/// Golden file line: "t_begin t_end s_begin s_end size", tab separated.
struct GoldenRow {
  Location t;
  Location s;
  Pos size = 0;
  friend auto operator<=>(const GoldenRow&, const GoldenRow&) = default;
};

inline std::string format_golden_row(const GoldenRow& g) {
  return std::to_string(g.t.begin) + '\t' + std::to_string(g.t.end) + '\t' +
         std::to_string(g.s.begin) + '\t' + std::to_string(g.s.end) + '\t' +
         std::to_string(g.size);
}

/// Reads rows, skipping blank and '#' lines.
inline std::vector<GoldenRow> read_golden(std::istream& in) {
  std::vector<GoldenRow> rows;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line);
    GoldenRow g;
    if (!(fields >> g.t.begin >> g.t.end >> g.s.begin >> g.s.end >> g.size)) {
      throw std::invalid_argument("malformed golden line " + std::to_string(lineno));
    }
    rows.push_back(g);
  }
  return rows;
}

inline std::vector<GoldenRow> read_golden_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_golden(in);
}

inline void write_golden(std::ostream& out, std::vector<GoldenRow> rows) {
  std::sort(rows.begin(), rows.end());
  out << "# oracle " << oracle::kVersion << '\n';
  for (const auto& g : rows) out << format_golden_row(g) << '\n';
}

}  // namespace cintervals
