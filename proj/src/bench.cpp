#include "josabpp/bench.hpp"

#include <sys/utsname.h>

#include <atomic>
#include <charconv>
#include <chrono>
#include <cstdio>
#include <stdexcept>
#include <thread>

#include "json.hpp"
#include "josabpp/generator.hpp"
#include "josabpp/kernels.hpp"
#include "josabpp/validator.hpp"

namespace josabpp {

namespace {

std::string fmt_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

std::string fmt_fixed(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", digits, v);
  return buf;
}

void require_feasible(const Instance& instance, const Solution& solution,
                      const std::string& what) {
  const ValidationReport report = validate(instance, solution);
  if (report.feasible) return;
  std::string msg = "validator rejected " + what + ":";
  for (const Violation& v : report.violations) {
    msg += "\n  [constraint " + std::to_string(v.constraint) + "] " + v.detail;
  }
  throw std::runtime_error(msg);
}

BenchRow make_row(const Instance& instance, const SolverConfig& config,
                  const Solution& solution, double runtime_s) {
  BenchRow row;
  row.instance = instance.name;
  row.algorithm = algorithm_name(config.algorithm);
  row.seed = config.seed;
  row.runtime_s = runtime_s;
  row.objective = solution.objective;
  row.selected_items = solution.selected_items;
  for (const Batch& b : solution.batches) {
    row.picklists += static_cast<int64_t>(b.picklists.size());
  }
  row.batches = static_cast<int64_t>(solution.batches.size());
  row.pcpi = solution.pcpi;
  row.goal_met = solution.goal_met;
  return row;
}

}  // namespace

std::vector<BenchRow> run_benchmark(const std::vector<Instance>& instances,
                                    const std::vector<SolverConfig>& algorithms,
                                    int jobs) {
  struct Run {
    size_t instance;
    SolverConfig config;
    Solution solution;
    double runtime_s;
  };

  // Solver runs stay on this thread, one after another, so the wall-clock
  // column is not polluted by sibling runs.
  std::vector<Run> runs;
  runs.reserve(instances.size() * algorithms.size());
  for (size_t i = 0; i < instances.size(); ++i) {
    for (const SolverConfig& config : algorithms) {
      const auto t0 = std::chrono::steady_clock::now();
      Solution sol = solve(instances[i], config);
      const auto t1 = std::chrono::steady_clock::now();
      runs.push_back(Run{i, config, std::move(sol),
                         std::chrono::duration<double>(t1 - t0).count()});
    }
  }

  if (jobs <= 1) {
    for (const Run& run : runs) {
      require_feasible(instances[run.instance], run.solution,
                       instances[run.instance].name + "/" +
                           algorithm_name(run.config.algorithm));
    }
  } else {
    std::atomic<size_t> next{0};
    std::vector<std::string> failures(runs.size());
    auto worker = [&] {
      for (size_t k = next.fetch_add(1); k < runs.size();
           k = next.fetch_add(1)) {
        try {
          require_feasible(instances[runs[k].instance], runs[k].solution,
                           instances[runs[k].instance].name + "/" +
                               algorithm_name(runs[k].config.algorithm));
        } catch (const std::exception& e) {
          failures[k] = e.what();
        }
      }
    };
    std::vector<std::thread> threads;
    const auto n_threads = static_cast<size_t>(jobs);
    threads.reserve(n_threads);
    for (size_t t = 0; t < n_threads; ++t) threads.emplace_back(worker);
    for (auto& t : threads) t.join();
    for (const std::string& f : failures) {
      if (!f.empty()) throw std::runtime_error(f);
    }
  }

  std::vector<BenchRow> rows;
  rows.reserve(runs.size());
  for (const Run& run : runs) {
    rows.push_back(
        make_row(instances[run.instance], run.config, run.solution, run.runtime_s));
  }
  return rows;
}

SelectionRow run_selection_study(const Instance& instance, int repeats,
                                 uint64_t master_seed) {
  if (repeats < 1) throw std::invalid_argument("repeats must be >= 1");

  const SolverConfig config{Algorithm::DGA, 0};
  const Solution original = solve(instance, config);
  require_feasible(instance, original, instance.name + "/dga (original pool)");

  double sum_pcpi = 0.0;
  for (int r = 0; r < repeats; ++r) {
    const Instance trimmed =
        trim_order_pool(instance, master_seed + static_cast<uint64_t>(r));
    const Solution sol = solve(trimmed, config);
    require_feasible(trimmed, sol,
                     instance.name + "/dga (trimmed pool, seed " +
                         std::to_string(master_seed + static_cast<uint64_t>(r)) +
                         ")");
    sum_pcpi += sol.pcpi;
  }

  SelectionRow row;
  row.instance = instance.name;
  row.pcpi_modified = sum_pcpi / repeats;
  row.pcpi_original = original.pcpi;
  if (row.pcpi_modified == 0.0) {
    throw std::domain_error("trimmed-pool pcpi is zero; difference undefined");
  }
  row.difference_pct =
      (row.pcpi_original - row.pcpi_modified) / row.pcpi_modified * 100.0;
  return row;
}

std::string bench_csv(const std::vector<BenchRow>& rows) {
  std::string out =
      "instance,algorithm,seed,runtime_s,objective,selected_items,picklists,"
      "batches,pcpi,goal_met\n";
  for (const BenchRow& r : rows) {
    out += r.instance + "," + r.algorithm + "," + std::to_string(r.seed) + "," +
           fmt_double(r.runtime_s) + "," + fmt_double(r.objective) + "," +
           std::to_string(r.selected_items) + "," +
           std::to_string(r.picklists) + "," + std::to_string(r.batches) + "," +
           fmt_double(r.pcpi) + "," + (r.goal_met ? "true" : "false") + "\n";
  }
  return out;
}

std::string bench_table(const std::vector<BenchRow>& rows) {
  char line[256];
  std::string out;
  std::snprintf(line, sizeof(line), "%-20s %-9s %8s %10s %12s %9s %9s %7s %8s %s\n",
                "instance", "algorithm", "seed", "runtime_s", "objective",
                "selected", "picklists", "batches", "pcpi", "goal");
  out += line;
  for (const BenchRow& r : rows) {
    std::snprintf(line, sizeof(line),
                  "%-20s %-9s %8llu %10.3f %12.0f %9lld %9lld %7lld %8.2f %s\n",
                  r.instance.c_str(), r.algorithm.c_str(),
                  static_cast<unsigned long long>(r.seed), r.runtime_s,
                  r.objective, static_cast<long long>(r.selected_items),
                  static_cast<long long>(r.picklists),
                  static_cast<long long>(r.batches), r.pcpi,
                  r.goal_met ? "yes" : "no");
    out += line;
  }
  return out;
}

std::string selection_csv(const std::vector<SelectionRow>& rows) {
  std::string out = "instance,pcpi_modified,pcpi_original,difference_pct\n";
  for (const SelectionRow& r : rows) {
    out += r.instance + "," + fmt_double(r.pcpi_modified) + "," +
           fmt_double(r.pcpi_original) + "," + fmt_double(r.difference_pct) +
           "\n";
  }
  return out;
}

std::string selection_table(const std::vector<SelectionRow>& rows) {
  std::string out = "instance              pcpi_modified  pcpi_original  difference\n";
  for (const SelectionRow& r : rows) {
    char line[160];
    std::snprintf(line, sizeof(line), "%-20s %14s %14s %10s%%\n",
                  r.instance.c_str(), fmt_fixed(r.pcpi_modified, 2).c_str(),
                  fmt_fixed(r.pcpi_original, 2).c_str(),
                  fmt_fixed(r.difference_pct, 2).c_str());
    out += line;
  }
  return out;
}

std::string bench_meta_json() {
  nlohmann::json j;
  utsname uts{};
  if (uname(&uts) == 0) {
    j["os"] = std::string(uts.sysname) + " " + uts.release;
    j["arch"] = uts.machine;
  } else {
    j["os"] = "unknown";
    j["arch"] = "unknown";
  }
  j["compiler"] = __VERSION__;
  j["kernel_variant"] = kernels::active_kernels().name;
  j["avx2_available"] = kernels::avx2_available();
  return j.dump(2) + "\n";
}

}  // namespace josabpp
