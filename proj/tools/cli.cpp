#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "hausp/io.hpp"
#include "hausp/miner.hpp"
#include "hausp/oracle.hpp"
#include "hausp/synthetic.hpp"

namespace hausp {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Ratio parse_xi(const std::string& text) {
  Ratio xi;
  try {
    xi = Ratio::parse(text);
  } catch (const std::exception&) {
    throw UsageError("xi '" + text + "' is not a number");
  }
  if (xi <= Ratio(0) || xi > Ratio(1)) throw UsageError("xi must lie in (0, 1], got " + text);
  return xi;
}

DatasetFormat parse_format(const std::string& text) {
  if (text == "auto") return DatasetFormat::auto_detect;
  if (text == "occurrence") return DatasetFormat::occurrence_utility;
  if (text == "quantity") return DatasetFormat::quantity;
  throw UsageError("unknown format '" + text + "'");
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    if (!part.empty()) out.push_back(part);
  }
  return out;
}

template <class F>
auto as_usage(F&& f) {
  try {
    return f();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

struct DataArgs {
  std::string input;
  std::string eu;
  std::string format = "auto";

  void add(CLI::App* app, bool required = true) {
    auto* o = app->add_option("--input", input, "dataset file");
    if (required) o->required();
    app->add_option("--eu", eu, "external utility table (quantity format)");
    app->add_option("--format", format, "auto|occurrence|quantity");
  }

  Database load(std::ostream& err) const {
    std::vector<std::string> warnings;
    auto fmt = parse_format(format);
    std::optional<std::string> eu_path;
    if (!eu.empty()) eu_path = eu;
    Database d = load_qsdb(input, eu_path, fmt, &warnings);
    for (const auto& w : warnings) err << "warning: " << input << ": " << w << '\n';
    return d;
  }
};

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  return out;
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"High average-utility sequential pattern miner", "hausp-pg"};
  app.require_subcommand(1);

  // mine
  DataArgs mine_data;
  std::string mine_xi, mine_strategy = "advance", mine_policy = "global", mine_output, mine_stats;
  std::size_t mine_max_len = 0;
  bool mine_trace = false;
  auto* mine_cmd = app.add_subcommand("mine", "mine high average-utility sequential patterns");
  mine_data.add(mine_cmd);
  mine_cmd->add_option("--xi", mine_xi, "minimum average utility threshold as a fraction of u(D)")->required();
  mine_cmd->add_option("--strategy", mine_strategy, "rsau|trsau|advance");
  mine_cmd->add_option("--rrs-policy", mine_policy, "global|occurrence");
  mine_cmd->add_option("--max-len", mine_max_len, "maximum pattern length (items)");
  mine_cmd->add_option("--output", mine_output, "results file")->required();
  mine_cmd->add_option("--stats", mine_stats, "stats file (key=value)");
  mine_cmd->add_flag("--trace", mine_trace, "print per-candidate bounds to stderr");

  // oracle
  DataArgs oracle_data;
  std::string oracle_xi, oracle_output;
  std::size_t oracle_max_len = 0;
  auto* oracle_cmd = app.add_subcommand("oracle", "brute-force reference miner (small inputs only)");
  oracle_data.add(oracle_cmd);
  oracle_cmd->add_option("--xi", oracle_xi, "threshold fraction")->required();
  oracle_cmd->add_option("--max-len", oracle_max_len, "maximum pattern length, at most 8")->required();
  oracle_cmd->add_option("--output", oracle_output, "results file")->required();

  // diff
  std::string diff_a, diff_b;
  auto* diff_cmd = app.add_subcommand("diff", "compare two result files as sets");
  diff_cmd->add_option("a", diff_a)->required();
  diff_cmd->add_option("b", diff_b)->required();

  // gen
  DataArgs gen_data;
  std::size_t gen_dup = 1, gen_synthetic = 0;
  std::uint64_t gen_seed = 1;
  std::string gen_output;
  auto* gen_cmd = app.add_subcommand("gen", "duplicate a dataset or generate a synthetic one");
  gen_data.add(gen_cmd, false);
  gen_cmd->add_option("--dup", gen_dup, "number of concatenated copies");
  gen_cmd->add_option("--synthetic", gen_synthetic, "generate this many random sequences instead of reading --input");
  gen_cmd->add_option("--seed", gen_seed, "seed for --synthetic");
  gen_cmd->add_option("--output", gen_output, "dataset file (occurrence-utility format)")->required();

  // bench
  DataArgs bench_data;
  std::string bench_xis, bench_strategies = "rsau,trsau,advance", bench_policy = "global";
  std::size_t bench_max_len = 0;
  auto* bench_cmd = app.add_subcommand("bench", "run a grid of thresholds and strategies, one report per cell");
  bench_data.add(bench_cmd);
  bench_cmd->add_option("--xi-list", bench_xis, "comma-separated thresholds")->required();
  bench_cmd->add_option("--strategies", bench_strategies, "comma-separated strategies");
  bench_cmd->add_option("--rrs-policy", bench_policy, "global|occurrence");
  bench_cmd->add_option("--max-len", bench_max_len, "maximum pattern length (items)");

  try {
    try {
      app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
      out << app.help();
      return kOk;
    } catch (const CLI::ParseError& e) {
      err << "error: " << e.what() << '\n' << "run with --help for usage\n";
      return kUsage;
    }

    if (*mine_cmd) {
      MinerConfig cfg;
      cfg.xi = parse_xi(mine_xi);
      cfg.strategy = as_usage([&] { return parse_strategy(mine_strategy); });
      cfg.rrs_policy = as_usage([&] { return parse_rrs_policy(mine_policy); });
      if (mine_max_len > 0) cfg.max_pattern_length = mine_max_len;
      cfg.trace = mine_trace;
      cfg.trace_out = &err;
      Database d = mine_data.load(err);
      MiningResult r = mine(d, cfg);
      save_results(r.results, mine_output);
      if (!mine_stats.empty()) {
        RunReport rep{mine_data.input, fingerprint(d), cfg, r.threshold.minau, r.stats, mine_output};
        auto s = open_out(mine_stats);
        write_stats(rep, s);
      }
      return kOk;
    }
    if (*oracle_cmd) {
      OracleConfig cfg;
      cfg.xi = parse_xi(oracle_xi);
      cfg.max_pattern_length = oracle_max_len;
      Database d = oracle_data.load(err);
      ResultSet rs = as_usage([&] { return oracle_mine(d, cfg); });
      save_results(rs, oracle_output);
      return kOk;
    }
    if (*diff_cmd) {
      ResultSet a = load_results(diff_a);
      ResultSet b = load_results(diff_b);
      std::size_t i = 0, j = 0, differences = 0;
      while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].pattern < b[j].pattern)) {
          out << "< " << a[i].pattern.str() << " #AUTIL: " << a[i].au << '\n';
          ++i;
        } else if (i == a.size() || b[j].pattern < a[i].pattern) {
          out << "> " << b[j].pattern.str() << " #AUTIL: " << b[j].au << '\n';
          ++j;
        } else {
          if (a[i].au != b[j].au) {
            out << "~ " << a[i].pattern.str() << " #AUTIL: " << a[i].au << " vs " << b[j].au << '\n';
            ++differences;
          }
          ++i;
          ++j;
          continue;
        }
        ++differences;
      }
      return differences == 0 ? kOk : kDiffMismatch;
    }
    if (*gen_cmd) {
      if (gen_dup == 0) throw UsageError("--dup must be positive");
      Database base;
      if (gen_synthetic > 0) {
        SyntheticConfig sc;
        sc.sequences = gen_synthetic;
        sc.seed = gen_seed;
        base = generate_synthetic(sc);
      } else if (!gen_data.input.empty()) {
        base = gen_data.load(err);
      } else {
        throw UsageError("gen needs --input or --synthetic");
      }
      Database d = duplicate_dataset(base, gen_dup);
      auto o = open_out(gen_output);
      write_qsdb(d, o);
      return kOk;
    }
    if (*bench_cmd) {
      std::vector<Ratio> xis;
      for (const auto& x : split_list(bench_xis)) xis.push_back(parse_xi(x));
      std::vector<StrategyVersion> strategies;
      for (const auto& s : split_list(bench_strategies)) {
        strategies.push_back(as_usage([&] { return parse_strategy(s); }));
      }
      auto policy = as_usage([&] { return parse_rrs_policy(bench_policy); });
      if (xis.empty() || strategies.empty()) throw UsageError("empty --xi-list or --strategies");
      Database d = bench_data.load(err);
      Fingerprint fp = fingerprint(d);
      bool first = true;
      for (const auto& xi : xis) {
        for (auto s : strategies) {
          MinerConfig cfg;
          cfg.xi = xi;
          cfg.strategy = s;
          cfg.rrs_policy = policy;
          if (bench_max_len > 0) cfg.max_pattern_length = bench_max_len;
          MiningResult r = mine(d, cfg);
          if (!first) out << '\n';
          first = false;
          write_stats({bench_data.input, fp, cfg, r.threshold.minau, r.stats, "-"}, out);
        }
      }
      return kOk;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kParse;
  } catch (const IoError& e) {
    err << "i/o error: " << e.what() << '\n';
    return kIo;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace hausp
