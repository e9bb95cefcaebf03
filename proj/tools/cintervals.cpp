// cintervals: common intervals of two sequences.
//
//   cintervals find T S [--ints] [--min-size N] [--format tsv|jsonl]
//                       [--locations maximal|maxmin|both] [--emit-elements]
//                       [--coords original|dedup] [--counters]
//   cintervals orders T [--ints]
//   cintervals verify T S [--cap N] [--ints] [--min-size N]
//                         [--golden FILE] [--write-golden FILE]
//   cintervals bench --n N --p P --q Q --seed X --reps R [--generator blocks|linked]
//
// Exit codes: 0 success, 1 verification mismatch, 2 usage, parse or I/O error.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cintervals.hpp"

namespace ci = cintervals;

namespace {

constexpr int kOk = 0;
constexpr int kMismatch = 1;
constexpr int kUsage = 2;

struct FindArgs {
  std::string t_path, s_path;
  bool ints = false;
  ci::Pos min_size = 2;
  std::string format = "tsv";
  ci::LocationMode locations = ci::LocationMode::maximal;
  bool emit_elements = false;
  ci::Coordinates coords = ci::Coordinates::original;
  bool counters = false;
};

struct VerifyArgs {
  std::string t_path, s_path;
  bool ints = false;
  ci::Pos min_size = 2;
  ci::Pos cap = ci::oracle::kDefaultCap;
  std::string golden;
  std::string write_golden;
};

void print_stats(std::ostream& os, const ci::Stats& st) {
  os << "n1=" << st.n1 << " n2=" << st.n2 << " n1_dedup=" << st.n1_dedup
     << " n2_dedup=" << st.n2_dedup << " p=" << st.p << " q1=" << st.q1
     << " q2=" << st.q2 << " pairs=" << st.pairs << " N=" << st.reported << '\n'
     << st.counters << '\n';
}

int run_find(const FindArgs& a) {
  const auto pair = ci::load_pair(a.t_path, a.s_path, a.ints);
  ci::SearchOptions opts;
  opts.min_size = a.min_size;
  opts.emit_elements = a.emit_elements;
  opts.coords = a.coords;
  const ci::TokenMap* tokens = a.emit_elements ? &pair.tokens : nullptr;
  const bool jsonl = a.format == "jsonl";
  std::string line;
  const auto st = ci::find_common_intervals(pair, opts, [&](const ci::ResultRecord& r) {
    line = jsonl ? ci::format_jsonl(r, a.locations, tokens)
                 : ci::format_tsv(r, a.locations, tokens);
    line += '\n';
    std::cout << line;
  });
  std::cout.flush();
  if (a.counters) print_stats(std::cerr, st);
  return kOk;
}

int run_orders(const std::string& path, bool ints) {
  const auto tokens = ci::read_token_file(path);
  if (tokens.empty()) throw std::invalid_argument(path + ": empty sequence");
  const auto pair = ints ? ci::encode_ints(ci::parse_ints(tokens), ci::parse_ints(tokens))
                         : ci::encode(tokens, tokens);
  const auto d = ci::dedup(pair.t);
  const auto occ = ci::build_occ_index(d.sequence);
  const auto dom = ci::resolve_all(d.sequence, occ);
  std::cout << ci::format_domination(dom) << '\n';
  const auto positions = dom.dominating_positions();
  ci::stream_orders(d.sequence, occ, positions, [&](const ci::OrderView& v) {
    std::cout << "O" << v.d << ":";
    for (auto c : v.values) std::cout << ' ' << pair.tokens.token(c);
    std::cout << '\n';
  });
  return kOk;
}

std::vector<ci::GoldenRow> pipeline_rows(const ci::EncodedPair& pair, ci::Pos min_size) {
  ci::SearchOptions opts;
  opts.min_size = min_size;
  std::vector<ci::GoldenRow> rows;
  ci::find_common_intervals(pair, opts, [&](const ci::ResultRecord& r) {
    rows.push_back({r.t, r.s, r.size});
  });
  std::sort(rows.begin(), rows.end());
  return rows;
}

// Prints the multiset difference; returns true when both sides agree.
bool report_diff(const std::vector<ci::GoldenRow>& ours, const std::vector<ci::GoldenRow>& ref,
                 const std::string& ref_name) {
  std::vector<ci::GoldenRow> only_ours, only_ref;
  std::set_difference(ours.begin(), ours.end(), ref.begin(), ref.end(),
                      std::back_inserter(only_ours));
  std::set_difference(ref.begin(), ref.end(), ours.begin(), ours.end(),
                      std::back_inserter(only_ref));
  if (only_ours.empty() && only_ref.empty()) return true;
  std::cout << "mismatch against " << ref_name << ": " << only_ours.size()
            << " extra, " << only_ref.size() << " missing\n";
  for (const auto& g : only_ours) std::cout << "+ " << ci::format_golden_row(g) << '\n';
  for (const auto& g : only_ref) std::cout << "- " << ci::format_golden_row(g) << '\n';
  return false;
}

int run_verify(const VerifyArgs& a) {
  const auto pair = ci::load_pair(a.t_path, a.s_path, a.ints);
  const auto ours = pipeline_rows(pair, a.min_size);
  std::vector<ci::GoldenRow> naive;
  for (const auto& m : ci::oracle::naive_common(pair.t, pair.s, a.min_size, a.cap)) {
    naive.push_back({m.t, m.s, m.size});
  }
  bool ok = report_diff(ours, naive, "oracle");
  if (!a.write_golden.empty()) {
    std::ofstream out(a.write_golden);
    if (!out) throw std::runtime_error("cannot write " + a.write_golden);
    ci::write_golden(out, naive);
  }
  if (!a.golden.empty()) {
    auto golden = ci::read_golden_file(a.golden);
    std::sort(golden.begin(), golden.end());
    ok = report_diff(ours, golden, a.golden) && ok;
  }
  if (ok) std::cout << "ok: " << ours.size() << " records\n";
  return ok ? kOk : kMismatch;
}

int run_bench(const ci::bench::Config& cfg, ci::Pos min_size) {
  ci::SearchOptions opts;
  opts.min_size = min_size;
  std::cout << "# generator " << ci::bench::kGeneratorId << ' '
            << (cfg.generator == ci::bench::Generator::linked ? "linked" : "blocks") << '\n'
            << "seed\tn\tp\tq\tq1\tq2\tN\tdomination\tretrieve\tguided\ttotal\twall_ms\n";
  for (const auto& r : ci::bench::run(cfg, opts)) {
    const auto& st = r.stats;
    std::cout << r.seed << '\t' << cfg.n << '\t' << cfg.p << '\t' << cfg.q << '\t'
              << st.q1 << '\t' << st.q2 << '\t' << st.reported << '\t'
              << st.counters.domination() << '\t' << st.counters.retrieve << '\t'
              << st.counters.guided() << '\t' << st.counters.total() << '\t'
              << r.wall_ms << '\n';
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Common intervals of two sequences"};
  app.require_subcommand(1);

  const std::map<std::string, ci::LocationMode> location_modes{
      {"maximal", ci::LocationMode::maximal},
      {"maxmin", ci::LocationMode::maxmin},
      {"both", ci::LocationMode::both}};
  const std::map<std::string, ci::Coordinates> coord_modes{
      {"original", ci::Coordinates::original}, {"dedup", ci::Coordinates::dedup}};

  FindArgs fa;
  auto* find = app.add_subcommand("find", "Report every common interval with its maximal locations");
  find->add_option("T", fa.t_path, "First sequence file")->required()->check(CLI::ExistingFile);
  find->add_option("S", fa.s_path, "Second sequence file")->required()->check(CLI::ExistingFile);
  find->add_flag("--ints", fa.ints, "Tokens are positive integers used as codes");
  find->add_option("--min-size", fa.min_size, "Smallest interval size (1 adds singletons)")
      ->check(CLI::PositiveNumber);
  find->add_option("--format", fa.format, "Output format")->check(CLI::IsMember({"tsv", "jsonl"}));
  find->add_option("--locations", fa.locations, "Location columns")
      ->transform(CLI::CheckedTransformer(location_modes));
  find->add_flag("--emit-elements", fa.emit_elements, "Append the sorted element list");
  find->add_option("--coords", fa.coords, "Coordinate system of the output")
      ->transform(CLI::CheckedTransformer(coord_modes));
  find->add_flag("--counters", fa.counters, "Print statistics and operation counters to stderr");

  std::string orders_path;
  bool orders_ints = false;
  auto* orders = app.add_subcommand("orders", "Print the dominating orders of one sequence");
  orders->add_option("T", orders_path, "Sequence file")->required()->check(CLI::ExistingFile);
  orders->add_flag("--ints", orders_ints, "Tokens are positive integers used as codes");

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "Compare the search against the brute-force oracle");
  verify->add_option("T", va.t_path, "First sequence file")->required()->check(CLI::ExistingFile);
  verify->add_option("S", va.s_path, "Second sequence file")->required()->check(CLI::ExistingFile);
  verify->add_flag("--ints", va.ints, "Tokens are positive integers used as codes");
  verify->add_option("--min-size", va.min_size, "Smallest interval size")->check(CLI::PositiveNumber);
  verify->add_option("--cap", va.cap, "Largest sequence length the oracle accepts")
      ->check(CLI::PositiveNumber);
  verify->add_option("--golden", va.golden, "Also compare against this golden file")
      ->check(CLI::ExistingFile);
  verify->add_option("--write-golden", va.write_golden, "Write the oracle output as a golden file");

  ci::bench::Config bc;
  ci::Pos bench_min_size = 2;
  auto* bench = app.add_subcommand("bench", "Run the search on generated sequences");
  const std::map<std::string, ci::bench::Generator> generators{
      {"blocks", ci::bench::Generator::blocks}, {"linked", ci::bench::Generator::linked}};
  bench->add_option("--generator", bc.generator,
                    "blocks: q permutations of random subsets; linked: disjoint blocks "
                    "joined by one shared symbol each")
      ->transform(CLI::CheckedTransformer(generators));
  bench->add_option("--n", bc.n, "Sequence length")->check(CLI::PositiveNumber);
  bench->add_option("--p", bc.p, "Alphabet size")->check(CLI::PositiveNumber);
  bench->add_option("--q", bc.q, "Number of permutation blocks per sequence")
      ->check(CLI::PositiveNumber);
  bench->add_option("--seed", bc.seed, "Generator seed");
  bench->add_option("--reps", bc.reps, "Repetitions (seed, seed+1, ...)")->check(CLI::PositiveNumber);
  bench->add_option("--min-size", bench_min_size, "Smallest interval size")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*find) return run_find(fa);
    if (*orders) return run_orders(orders_path, orders_ints);
    if (*verify) return run_verify(va);
    if (*bench) return run_bench(bc, bench_min_size);
  } catch (const std::exception& e) {
    std::cerr << "cintervals: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
