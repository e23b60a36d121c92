// Command-line front end: reproduces the published tables and runs the
// verification suites.  Exit codes: 0 success, 1 verification failure,
// 2 usage error.

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "relmon/reports.hpp"

namespace {

struct CommonOpts {
  std::string format = "text";
  std::string out;
  int threads = 1;
  uint64_t budget = 10'000'000;
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
  cmd->add_option("--format", opts.format, "output format: json|csv|text")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  cmd->add_option("--out", opts.out, "write output to a file instead of stdout");
  cmd->add_option("--threads", opts.threads, "worker pool size")->check(CLI::PositiveNumber);
  cmd->add_option("--budget", opts.budget, "enumeration budget for map spaces");
}

int emit(const CommonOpts& opts, const std::string& payload) {
  if (opts.out.empty()) {
    std::cout << payload;
    return 0;
  }
  std::ofstream file(opts.out, std::ios::binary);
  if (!file) {
    std::cerr << "cannot open output file: " << opts.out << "\n";
    return 2;
  }
  file << payload;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact classification data for the monoid algebra of relations"};
  app.require_subcommand(1);

  CommonOpts posets_opts, gtable_opts, dims_opts, radical_opts, oracle_opts, table3_opts,
      selftest_opts;
  int posets_size = 0, gtable_max = 3, dims_n = 3, radical_n = 3, oracle_n = 2;
  std::string gram_dump_path;

  auto* cmd_posets = app.add_subcommand("posets", "isomorphism classes of posets of one size");
  cmd_posets->add_option("--size", posets_size, "poset size, 0..8")->required();
  add_common(cmd_posets, posets_opts);

  auto* cmd_gtable = app.add_subcommand("g-table", "lattice data and g for all classes");
  cmd_gtable->add_option("--max-size", gtable_max, "largest poset size, 0..8")->required();
  add_common(cmd_gtable, gtable_opts);

  auto* cmd_dims = app.add_subcommand("dims", "per-class dimension terms and totals");
  cmd_dims->add_option("--n", dims_n, "ground set size, 0..8")->required();
  add_common(cmd_dims, dims_opts);

  auto* cmd_radical = app.add_subcommand("radical", "algebra, semisimple and radical dimensions");
  cmd_radical->add_option("--n", radical_n, "ground set size, 0..8")->required();
  add_common(cmd_radical, radical_opts);

  auto* cmd_oracle = app.add_subcommand("oracle", "trace-form radical verification");
  cmd_oracle->add_option("--n", oracle_n, "ground set size, 0..3")->required();
  cmd_oracle->add_option("--dump-gram", gram_dump_path,
                         "write the Gram matrix (binary) and a JSON header");
  add_common(cmd_oracle, oracle_opts);

  auto* cmd_table3 = app.add_subcommand("table3", "the published size <= 3 table");
  add_common(cmd_table3, table3_opts);

  auto* cmd_selftest = app.add_subcommand("selftest", "run every invariant and golden check");
  add_common(cmd_selftest, selftest_opts);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  try {
    if (cmd_posets->parsed()) {
      if (posets_size < 0 || posets_size > 8) {
        std::cerr << "posets: --size must be in 0..8\n";
        return 2;
      }
      return emit(posets_opts, relmon::posets_report(posets_size, posets_opts.threads,
                                                     relmon::parse_format(posets_opts.format)));
    }
    if (cmd_gtable->parsed()) {
      if (gtable_max < 0 || gtable_max > 8) {
        std::cerr << "g-table: --max-size must be in 0..8\n";
        return 2;
      }
      return emit(gtable_opts, relmon::gtable_report(gtable_max, gtable_opts.threads,
                                                     relmon::parse_format(gtable_opts.format)));
    }
    if (cmd_dims->parsed()) {
      if (dims_n < 0 || dims_n > 8) {
        std::cerr << "dims: --n must be in 0..8\n";
        return 2;
      }
      return emit(dims_opts, relmon::dims_report(dims_n, dims_opts.threads,
                                                 relmon::parse_format(dims_opts.format)));
    }
    if (cmd_radical->parsed()) {
      if (radical_n < 0 || radical_n > 8) {
        std::cerr << "radical: --n must be in 0..8\n";
        return 2;
      }
      return emit(radical_opts,
                  relmon::radical_report(radical_n, radical_opts.threads,
                                         relmon::parse_format(radical_opts.format)));
    }
    if (cmd_oracle->parsed()) {
      if (oracle_n < 0 || oracle_n > 3) {
        std::cerr << "oracle: --n must be in 0..3 (the 2^16-dimensional case at n=4 is out of "
                     "reach by design)\n";
        return 2;
      }
      if (!gram_dump_path.empty())
        relmon::dump_gram(relmon::gram(oracle_n, oracle_opts.threads), gram_dump_path);
      return emit(oracle_opts, relmon::oracle_report(oracle_n, oracle_opts.threads,
                                                     relmon::parse_format(oracle_opts.format)));
    }
    if (cmd_table3->parsed()) {
      return emit(table3_opts, relmon::table3_report(table3_opts.threads,
                                                     relmon::parse_format(table3_opts.format)));
    }
    if (cmd_selftest->parsed()) {
      relmon::SelftestConfig config;
      config.threads = selftest_opts.threads;
      config.budget = selftest_opts.budget;
      auto results = relmon::run_selftest(config);
      int rc = emit(selftest_opts, relmon::selftest_report(results));
      if (rc != 0) return rc;
      for (const auto& r : results)
        if (!r.pass) return 1;
      return 0;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "verification failure: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
