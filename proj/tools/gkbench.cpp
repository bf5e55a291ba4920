// Copyright 2026 The gkselect Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// gkbench: seeded quantile benchmarks over the simulated execution engine.
//
//   gkbench --algo gk_select,full_sort --n 1e6 --p 8 --trials 10 --csv-out t.csv
//   gkbench speedup --csv t.csv
//   gkbench generate --dist zipf --n 100

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "gkselect/bench/config.hpp"
#include "gkselect/bench/report.hpp"
#include "gkselect/bench/suite.hpp"
#include "gkselect/common/error.hpp"

namespace {

constexpr int kExitChecksFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitRuntime = 3;

struct RunFlags {
  std::string config_file;
  std::optional<std::string> algo, n, p, workers, q, eps, trials, seed, dist,
      csv_out, summary_out, oracle_limit, variant, driver_merge;
  bool bucket_only = false;
  bool no_warmup = false;
  bool quiet = false;
};

gks::bench::SuiteConfig build_config(const RunFlags& f) {
  gks::bench::SuiteConfig c;
  if (!f.config_file.empty()) c = gks::bench::load_config_file(f.config_file, c);
  auto set = [&c](const char* key, const std::optional<std::string>& v) {
    if (v) gks::bench::apply_setting(c, key, *v);
  };
  set("algo", f.algo);
  set("n", f.n);
  set("p", f.p);
  set("workers", f.workers);
  set("q", f.q);
  set("eps", f.eps);
  set("trials", f.trials);
  set("seed", f.seed);
  set("dist", f.dist);
  set("csv-out", f.csv_out);
  set("summary-out", f.summary_out);
  set("oracle-limit", f.oracle_limit);
  set("variant", f.variant);
  set("driver-merge", f.driver_merge);
  if (f.bucket_only) c.full_sort = false;
  if (f.no_warmup) c.warmup = false;
  return c;
}

std::unique_ptr<std::ofstream> open_out(const std::string& path) {
  auto out = std::make_unique<std::ofstream>(path);
  if (!*out) {
    throw gks::Error(gks::ErrorCode::kInvalidArgument, "cannot write '" + path + "'");
  }
  return out;
}

int run(const RunFlags& flags) {
  gks::bench::SuiteConfig config;
  try {
    config = build_config(flags);
    config.expand();
  } catch (const gks::Error& e) {
    std::cerr << "gkbench: " << e.what() << '\n';
    return kExitUsage;
  }

  std::unique_ptr<std::ofstream> csv_file;
  std::ostream* csv = &std::cout;
  if (!config.csv_out.empty()) {
    csv_file = open_out(config.csv_out);
    csv = csv_file.get();
  }
  std::size_t failed = 0;
  const auto results = gks::bench::run_suite(
      config, csv, [&](const gks::bench::TrialResult& r) {
        if (!r.passed()) ++failed;
        for (const auto& m : r.messages) std::cerr << "gkbench: " << m << '\n';
        if (!flags.quiet && csv != &std::cout) {
          std::cerr << gks::algos::to_string(r.config.algorithm) << " n=" << r.config.n
                    << " P=" << r.config.partitions << " mean_ms=" << r.mean_wall_ms
                    << (r.passed() ? "" : " FAILED") << '\n';
        }
      });
  if (!config.summary_out.empty()) {
    gks::bench::write_summary(*open_out(config.summary_out), results);
  }
  if (failed > 0) {
    std::cerr << "gkbench: " << failed << " of " << results.size()
              << " cells failed their checks\n";
    return kExitChecksFailed;
  }
  return 0;
}

int speedup(const std::string& csv_path, const std::string& out_path) {
  std::ifstream in(csv_path);
  if (!in) {
    std::cerr << "gkbench: cannot read '" << csv_path << "'\n";
    return kExitUsage;
  }
  const auto report = gks::bench::report_speedup(in);
  for (const auto& w : report.warnings) std::cerr << "gkbench: warning: " << w << '\n';
  if (out_path.empty()) {
    gks::bench::write_speedup(std::cout, report);
  } else {
    gks::bench::write_speedup(*open_out(out_path), report);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Benchmark harness for distributed quantile selection"};
  app.require_subcommand(0, 1);

  RunFlags flags;
  app.add_option("--config", flags.config_file, "key=value config file")
      ->check(CLI::ExistingFile);
  app.add_option("--algo", flags.algo,
                 "Comma list of gk_approx, gk_select, afs, jeffers, full_sort, or all");
  app.add_option("--n", flags.n, "Comma list of dataset sizes (1e6 accepted)");
  app.add_option("--p", flags.p, "Comma list of partition counts (default 4*workers)");
  app.add_option("--workers", flags.workers, "Worker threads (default: hardware)");
  app.add_option("--q", flags.q, "Quantile level in [0, 1]");
  app.add_option("--eps", flags.eps, "Sketch error epsilon");
  app.add_option("--trials", flags.trials, "Timed trials per cell");
  app.add_option("--seed", flags.seed, "Base seed");
  app.add_option("--dist", flags.dist,
                 "uniform_int, zipf, sorted, reverse_sorted or constant");
  app.add_option("--csv-out", flags.csv_out, "Per-trial CSV path (default stdout)");
  app.add_option("--summary-out", flags.summary_out, "Per-cell summary CSV path");
  app.add_option("--oracle-limit", flags.oracle_limit,
                 "Largest n verified against a sorted copy");
  app.add_option("--variant", flags.variant, "classical, fixed_buffer or growing_buffer");
  app.add_option("--driver-merge", flags.driver_merge, "fold or tree");
  app.add_flag("--bucket-only", flags.bucket_only,
               "full_sort sorts only the bucket holding rank k");
  app.add_flag("--no-warmup", flags.no_warmup, "Keep the first trial");
  app.add_flag("--quiet", flags.quiet, "No per-cell progress on stderr");

  std::string csv_path, out_path;
  auto* sp = app.add_subcommand("speedup", "Ratios of full_sort time to each algorithm");
  sp->add_option("--csv", csv_path, "Per-trial or summary CSV")->required();
  sp->add_option("--out", out_path, "Output path (default stdout)");

  std::string gen_dist = "uniform_int", gen_n = "10", gen_out;
  std::uint64_t gen_seed = 1;
  auto* gen = app.add_subcommand("generate", "Print a generated dataset, one value per line");
  gen->add_option("--dist", gen_dist, "Distribution");
  gen->add_option("--n", gen_n, "Number of values");
  gen->add_option("--seed", gen_seed, "Seed");
  gen->add_option("--out", gen_out, "Output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*sp) return speedup(csv_path, out_path);
    if (*gen) {
      const auto data = gks::bench::generate(gks::bench::parse_distribution(gen_dist),
                                             gks::bench::parse_count(gen_n), gen_seed);
      std::unique_ptr<std::ofstream> file;
      std::ostream* out = &std::cout;
      if (!gen_out.empty()) {
        file = open_out(gen_out);
        out = file.get();
      }
      for (const auto v : data) *out << v << '\n';
      return 0;
    }
    return run(flags);
  } catch (const gks::Error& e) {
    std::cerr << "gkbench: " << e.what() << '\n';
    return e.code() == gks::ErrorCode::kInvalidArgument ? kExitUsage : kExitRuntime;
  } catch (const std::exception& e) {
    std::cerr << "gkbench: " << e.what() << '\n';
    return kExitRuntime;
  }
}
