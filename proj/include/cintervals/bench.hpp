#pragma once

// Synthetic inputs for complexity sweeps and the bench runner.
//
// Generator: std::mt19937_64 (the standard 64-bit Mersenne Twister, fully
// specified output sequence) with rejection-sampled bounded draws and a
// partial Fisher-Yates shuffle written out here, so the same seed yields
// the same sequences on every platform and standard library.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "cintervals/core_model.hpp"
#include "cintervals/pipeline.hpp"

namespace cintervals::bench {

inline constexpr const char* kGeneratorId = "mt19937_64/rejection/fisher-yates";

/// Uniform draw from 0..bound-1.
inline std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t span = std::mt19937_64::max() - bound + 1;  // 2^64 - bound
  const std::uint64_t limit = std::mt19937_64::max() - span % bound;
  std::uint64_t x;
  do x = rng(); while (x > limit);
  return x % bound;
}

/// Concatenation of `blocks` blocks, n symbols in total, block sizes
/// differing by at most one. A block is a random permutation of a random
/// subset of 1..p; a block longer than p is a chain of such permutations,
/// each as long as possible.
inline std::vector<Symbol> generate_blocks(Pos n, Symbol p, Pos blocks,
                                           std::mt19937_64& rng) {
  if (n == 0 || p == 0 || blocks == 0) {
    throw std::invalid_argument("bench parameters must be positive");
  }
  if (blocks > n) throw std::invalid_argument("more blocks than symbols");
  std::vector<Symbol> pool(p);
  std::iota(pool.begin(), pool.end(), Symbol{1});
  std::vector<Symbol> out;
  out.reserve(n);
  for (Pos b = 0; b < blocks; ++b) {
    const Pos len = n / blocks + (b < n % blocks ? 1 : 0);
    for (Pos done = 0; done < len;) {
      const Pos chunk = std::min<Pos>(len - done, p);
      for (Pos k = 0; k < chunk; ++k) {
        const auto pick = k + static_cast<Pos>(draw_below(rng, p - k));
        std::swap(pool[k], pool[pick]);
        out.push_back(pool[k]);
      }
      done += chunk;
    }
  }
  return out;
}

/// Concatenation of `blocks` random permutations over pairwise disjoint
/// random subsets of 1..p, except that each block after the first also
/// holds one symbol drawn from the block before it. Each link adds one
/// dominating order, so the domination number equals `blocks`. Needs
/// n - blocks + 1 <= p.
inline std::vector<Symbol> generate_linked(Pos n, Symbol p, Pos blocks,
                                           std::mt19937_64& rng) {
  if (n == 0 || p == 0 || blocks == 0) {
    throw std::invalid_argument("bench parameters must be positive");
  }
  if (blocks > n) throw std::invalid_argument("more blocks than symbols");
  if (n - blocks + 1 > p) {
    throw std::invalid_argument("linked blocks need n - q + 1 <= p");
  }
  std::vector<Symbol> pool(p);
  std::iota(pool.begin(), pool.end(), Symbol{1});
  for (Pos k = 0; k + 1 < p; ++k) {
    std::swap(pool[k], pool[k + static_cast<Pos>(draw_below(rng, p - k))]);
  }
  std::vector<Symbol> out;
  out.reserve(n);
  Pos fresh = 0, prev_begin = 0, prev_len = 0;
  for (Pos b = 0; b < blocks; ++b) {
    const Pos len = n / blocks + (b < n % blocks ? 1 : 0);
    const Pos begin = out.size();
    if (b > 0) out.push_back(out[prev_begin + static_cast<Pos>(draw_below(rng, prev_len))]);
    while (out.size() - begin < len) out.push_back(pool[fresh++]);
    for (Pos k = begin; k + 1 < out.size(); ++k) {
      std::swap(out[k], out[k + static_cast<Pos>(draw_below(rng, out.size() - k))]);
    }
    prev_begin = begin;
    prev_len = len;
  }
  return out;
}

/// Random permutation of 1..p.
inline std::vector<Symbol> generate_permutation(Symbol p, std::mt19937_64& rng) {
  return generate_blocks(p, p, 1, rng);
}

enum class Generator { blocks, linked };

struct Config {
  Generator generator = Generator::blocks;
  Pos n = 4096;
  Symbol p = 64;
  Pos q = 1;
  std::uint64_t seed = 1;
  Pos reps = 1;
};

struct Run {
  std::uint64_t seed = 0;
  Stats stats;
  double wall_ms = 0;
};

/// Runs the pipeline on `reps` generated pairs; T and S of rep k are drawn
/// in that order from a generator seeded with seed + k.
inline std::vector<Run> run(const Config& cfg, const SearchOptions& opts = {}) {
  std::vector<Run> runs;
  for (Pos k = 0; k < cfg.reps; ++k) {
    Run r;
    r.seed = cfg.seed + k;
    std::mt19937_64 rng(r.seed);
    auto gen = cfg.generator == Generator::linked ? generate_linked : generate_blocks;
    const auto t = gen(cfg.n, cfg.p, cfg.q, rng);
    const auto s = gen(cfg.n, cfg.p, cfg.q, rng);
    const Sequence ts(t, cfg.p), ss(s, cfg.p);
    const auto start = std::chrono::steady_clock::now();
    r.stats = find_common_intervals(ts, ss, opts, [](const ResultRecord&) {});
    r.wall_ms = std::chrono::duration<double, std::milli>(
                    std::chrono::steady_clock::now() - start).count();
    runs.push_back(r);
  }
  return runs;
}

}  // namespace cintervals::bench
