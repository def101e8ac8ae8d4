#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "josabpp/solver.hpp"
#include "josabpp/types.hpp"

namespace josabpp {

struct BenchRow {
  std::string instance;
  std::string algorithm;
  uint64_t seed = 0;
  double runtime_s = 0.0;
  double objective = 0.0;
  int64_t selected_items = 0;
  int64_t picklists = 0;
  int64_t batches = 0;
  double pcpi = 0.0;
  bool goal_met = false;
};

struct SelectionRow {
  std::string instance;
  double pcpi_modified = 0.0;  // mean over the trimmed-pool repeats
  double pcpi_original = 0.0;
  double difference_pct = 0.0; // (original - modified) / modified * 100
};

/// One timed solver run per (instance, algorithm), instances in the given
/// order, algorithms in the given order. Every solution is checked by the
/// independent validator before its row is recorded; a violation aborts the
/// campaign with a std::runtime_error naming the instance and algorithm.
/// Solver runs execute sequentially on the calling thread so wall-clock
/// numbers stay clean; `jobs` > 1 parallelizes only the validation of
/// completed solutions.
std::vector<BenchRow> run_benchmark(const std::vector<Instance>& instances,
                                    const std::vector<SolverConfig>& algorithms,
                                    int jobs = 1);

/// Order-selection impact study for one instance: solves the original with
/// DGA, then `repeats` trimmed pools (trim seeds master_seed + 0..repeats-1),
/// and compares mean trimmed pcpi against the original pcpi.
SelectionRow run_selection_study(const Instance& instance, int repeats,
                                 uint64_t master_seed);

std::string bench_csv(const std::vector<BenchRow>& rows);
std::string bench_table(const std::vector<BenchRow>& rows);
std::string selection_csv(const std::vector<SelectionRow>& rows);
std::string selection_table(const std::vector<SelectionRow>& rows);

/// Host/toolchain tags stored next to benchmark CSVs so timing columns stay
/// attributable; written as a small JSON object.
std::string bench_meta_json();

}  // namespace josabpp
