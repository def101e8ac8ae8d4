// Command-line front end: generate, solve, validate, exact, bench and
// experiment subcommands over the JSON instance/solution formats.
//
// Exit codes: 0 success (and feasible validations), 1 domain failure
// (infeasible solution, invalid input, search limits) with a structured
// JSON error on stderr, 2 usage errors.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "josabpp/bench.hpp"
#include "josabpp/exact.hpp"
#include "josabpp/generator.hpp"
#include "josabpp/io.hpp"
#include "josabpp/kernels.hpp"
#include "josabpp/solver.hpp"
#include "josabpp/validator.hpp"

namespace {

using josabpp::Instance;
using josabpp::Solution;

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw josabpp::ParseError("cannot open for write: " + path);
  out << content;
  if (!out) throw josabpp::ParseError("write failed: " + path);
}

void emit_error(const std::string& type, const std::string& message,
                const nlohmann::json& extra = {}) {
  nlohmann::json j;
  j["error"]["type"] = type;
  j["error"]["message"] = message;
  for (auto it = extra.begin(); it != extra.end(); ++it) {
    j["error"][it.key()] = it.value();
  }
  std::cerr << j.dump(2) << "\n";
}

std::string solution_summary(const Solution& sol) {
  int64_t picklists = 0;
  for (const auto& b : sol.batches) {
    picklists += static_cast<int64_t>(b.picklists.size());
  }
  char buf[256];
  std::snprintf(buf, sizeof(buf),
                "%s objective=%.0f selected=%lld picklists=%lld batches=%zu "
                "pcpi=%.2f goal_met=%s",
                sol.algorithm.c_str(), sol.objective,
                static_cast<long long>(sol.selected_items),
                static_cast<long long>(picklists), sol.batches.size(), sol.pcpi,
                sol.goal_met ? "yes" : "no");
  return buf;
}

std::string stats_json(const josabpp::InstanceStats& s) {
  nlohmann::json j;
  j["name"] = s.name;
  j["seed"] = s.seed;
  j["items"] = s.items;
  j["orders"] = s.orders;
  j["zones"] = s.zones;
  j["total_order_articles"] = s.total_order_articles;
  j["item_goal"] = s.item_goal;
  return j.dump(2) + "\n";
}

std::vector<std::string> split_csv_list(const std::string& s) {
  std::vector<std::string> out;
  size_t start = 0;
  while (start <= s.size()) {
    const size_t comma = s.find(',', start);
    const size_t end = comma == std::string::npos ? s.size() : comma;
    if (end > start) out.push_back(s.substr(start, end - start));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"JOSABPP solver toolkit: joint order selection, allocation, "
               "batching and picking"};
  app.require_subcommand(1);
  app.footer("Instance and solution files are JSON with format_version=1.");

  // generate
  auto* gen = app.add_subcommand("generate", "Generate a random instance");
  std::string gen_preset;
  josabpp::GenParams gp;
  std::string gen_out;
  std::string gen_stats;
  gen->add_option("--preset", gen_preset, "small, medium or large");
  auto* o_items = gen->add_option("--items", gp.items, "Warehouse items");
  auto* o_orders = gen->add_option("--orders", gp.orders, "Orders in the pool");
  auto* o_zones = gen->add_option("--zones", gp.zones, "Zones");
  auto* o_racks = gen->add_option("--racks", gp.racks, "Racks per aisle");
  auto* o_aisles = gen->add_option("--aisles", gp.aisles, "Aisles per zone");
  auto* o_articles =
      gen->add_option("--articles", gp.articles, "Distinct articles (0: items/20)");
  auto* o_mos = gen->add_option("--mean-order-size", gp.mean_order_size,
                                "Mean articles per order, in (1, 3.5)");
  auto* o_igr = gen->add_option("--ig-ratio", gp.ig_ratio,
                                "Item goal as a fraction of total order articles");
  auto* o_vmin = gen->add_option("--volume-min", gp.volume_min, "Min article volume");
  auto* o_vmax = gen->add_option("--volume-max", gp.volume_max, "Max article volume");
  auto* o_pv = gen->add_option("--picklist-volume", gp.picklist_volume,
                               "Volume capacity V per picklist");
  auto* o_q = gen->add_option("--orders-per-batch", gp.orders_per_batch,
                              "Order capacity Q per batch");
  auto* o_name = gen->add_option("--name", gp.name, "Instance name");
  gen->add_option("--seed", gp.seed, "Generator seed");
  gen->add_option("-o,--output", gen_out, "Instance file to write")->required();
  gen->add_option("--stats", gen_stats, "Also write a stats manifest JSON");

  // solve
  auto* slv = app.add_subcommand("solve", "Run a greedy solver on an instance");
  std::string slv_instance, slv_out, slv_algorithm = "dga", slv_kernel;
  uint64_t slv_seed = 0;
  slv->add_option("instance", slv_instance, "Instance file")
      ->required()
      ->check(CLI::ExistingFile);
  slv->add_option("-a,--algorithm", slv_algorithm, "dga or rdga");
  slv->add_option("--seed", slv_seed, "Seed for the randomized variant");
  slv->add_option("-o,--output", slv_out,
                  "Solution file to write (default: JSON on stdout)");
  slv->add_option("--kernel", slv_kernel, "scalar, avx2 or auto");

  // validate
  auto* val = app.add_subcommand("validate", "Check a solution against an instance");
  std::string val_instance, val_solution;
  bool val_json = false;
  val->add_option("instance", val_instance, "Instance file")
      ->required()
      ->check(CLI::ExistingFile);
  val->add_option("solution", val_solution, "Solution file")
      ->required()
      ->check(CLI::ExistingFile);
  val->add_flag("--json", val_json, "Machine-readable report on stdout");

  // exact
  auto* exa = app.add_subcommand("exact", "Exhaustively solve a tiny instance");
  std::string exa_instance, exa_out;
  josabpp::ExactLimits exa_limits;
  exa->add_option("instance", exa_instance, "Instance file")
      ->required()
      ->check(CLI::ExistingFile);
  exa->add_option("-o,--output", exa_out,
                  "Solution file to write (default: JSON on stdout)");
  exa->add_option("--max-order-articles", exa_limits.max_total_order_articles,
                  "Refusal threshold on total order articles");
  exa->add_option("--max-items", exa_limits.max_items,
                  "Refusal threshold on warehouse items");

  // bench
  auto* ben = app.add_subcommand("bench", "Timed solver runs over instances");
  std::vector<std::string> ben_instances;
  std::string ben_algorithms = "dga,rdga";
  std::string ben_csv, ben_meta, ben_kernel;
  uint64_t ben_seed = 0;
  int ben_jobs = 1;
  ben->add_option("instances", ben_instances, "Instance files")
      ->required()
      ->check(CLI::ExistingFile);
  ben->add_option("--algorithms", ben_algorithms, "Comma list of dga,rdga");
  ben->add_option("--seed", ben_seed, "Seed passed to every run");
  ben->add_option("--jobs", ben_jobs, "Threads for validating results");
  ben->add_option("--csv", ben_csv, "CSV file to write");
  ben->add_option("--meta", ben_meta,
                  "Host metadata JSON (default: <csv>.meta.json)");
  ben->add_option("--kernel", ben_kernel, "scalar, avx2 or auto");

  // experiment selection
  auto* exp = app.add_subcommand("experiment", "Scripted studies over an instance");
  exp->require_subcommand(1);
  auto* sel = exp->add_subcommand(
      "selection", "Order-pool trimming impact on cost per item");
  std::string sel_instance, sel_csv;
  int sel_repeats = 5;
  uint64_t sel_seed = 0;
  sel->add_option("instance", sel_instance, "Instance file")
      ->required()
      ->check(CLI::ExistingFile);
  sel->add_option("--repeats", sel_repeats, "Trimmed pools per instance");
  sel->add_option("--seed", sel_seed, "Master seed; repeat r uses seed+r");
  sel->add_option("--csv", sel_csv, "CSV file to write");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }

  try {
    if (gen->parsed()) {
      josabpp::GenParams params = gp;
      if (!gen_preset.empty()) {
        params = josabpp::preset_params(gen_preset);
        params.seed = gp.seed;
        if (o_items->count()) params.items = gp.items;
        if (o_orders->count()) params.orders = gp.orders;
        if (o_zones->count()) params.zones = gp.zones;
        if (o_racks->count()) params.racks = gp.racks;
        if (o_aisles->count()) params.aisles = gp.aisles;
        if (o_articles->count()) params.articles = gp.articles;
        if (o_mos->count()) params.mean_order_size = gp.mean_order_size;
        if (o_igr->count()) params.ig_ratio = gp.ig_ratio;
        if (o_vmin->count()) params.volume_min = gp.volume_min;
        if (o_vmax->count()) params.volume_max = gp.volume_max;
        if (o_pv->count()) params.picklist_volume = gp.picklist_volume;
        if (o_q->count()) params.orders_per_batch = gp.orders_per_batch;
        if (o_name->count()) params.name = gp.name;
      }
      const Instance inst = josabpp::generate(params);
      josabpp::save_instance_file(inst, gen_out);
      const josabpp::InstanceStats stats =
          josabpp::instance_stats(inst, params.seed);
      if (!gen_stats.empty()) write_text_file(gen_stats, stats_json(stats));
      std::cout << "wrote " << gen_out << ": " << stats.items << " items, "
                << stats.orders << " orders, " << stats.zones << " zones, "
                << stats.total_order_articles << " order articles, item goal "
                << stats.item_goal << "\n";
      return 0;
    }

    if (slv->parsed()) {
      if (!slv_kernel.empty()) josabpp::kernels::set_active_kernels(slv_kernel);
      const Instance inst = josabpp::load_instance_file(slv_instance);
      josabpp::SolverConfig config;
      config.algorithm = josabpp::parse_algorithm(slv_algorithm);
      config.seed = slv_seed;
      const Solution sol = josabpp::solve(inst, config);
      if (slv_out.empty()) {
        std::cout << josabpp::save_solution(sol);
      } else {
        josabpp::save_solution_file(sol, slv_out);
        std::cout << solution_summary(sol) << "\n";
      }
      return 0;
    }

    if (val->parsed()) {
      const Instance inst = josabpp::load_instance_file(val_instance);
      const Solution sol = josabpp::load_solution_file(val_solution);
      const josabpp::ValidationReport report = josabpp::validate(inst, sol);
      std::cout << (val_json ? josabpp::report_to_json(report)
                             : josabpp::report_to_text(report));
      return report.feasible ? 0 : 1;
    }

    if (exa->parsed()) {
      const Instance inst = josabpp::load_instance_file(exa_instance);
      const Solution sol = josabpp::exact_solve(inst, exa_limits);
      if (exa_out.empty()) {
        std::cout << josabpp::save_solution(sol);
      } else {
        josabpp::save_solution_file(sol, exa_out);
        std::cout << solution_summary(sol) << "\n";
      }
      return 0;
    }

    if (ben->parsed()) {
      if (!ben_kernel.empty()) josabpp::kernels::set_active_kernels(ben_kernel);
      std::vector<Instance> instances;
      instances.reserve(ben_instances.size());
      for (const std::string& path : ben_instances) {
        instances.push_back(josabpp::load_instance_file(path));
      }
      std::vector<josabpp::SolverConfig> configs;
      for (const std::string& name : split_csv_list(ben_algorithms)) {
        configs.push_back(
            josabpp::SolverConfig{josabpp::parse_algorithm(name), ben_seed});
      }
      if (configs.empty()) {
        std::cerr << "--algorithms must name at least one algorithm\n";
        return 2;
      }
      const std::vector<josabpp::BenchRow> rows =
          josabpp::run_benchmark(instances, configs, ben_jobs);
      std::cout << josabpp::bench_table(rows);
      if (!ben_csv.empty()) {
        write_text_file(ben_csv, josabpp::bench_csv(rows));
        const std::string meta =
            ben_meta.empty() ? ben_csv + ".meta.json" : ben_meta;
        write_text_file(meta, josabpp::bench_meta_json());
      } else if (!ben_meta.empty()) {
        write_text_file(ben_meta, josabpp::bench_meta_json());
      }
      return 0;
    }

    if (sel->parsed()) {
      const Instance inst = josabpp::load_instance_file(sel_instance);
      const josabpp::SelectionRow row =
          josabpp::run_selection_study(inst, sel_repeats, sel_seed);
      const std::vector<josabpp::SelectionRow> rows{row};
      std::cout << josabpp::selection_table(rows);
      if (!sel_csv.empty()) write_text_file(sel_csv, josabpp::selection_csv(rows));
      return 0;
    }
  } catch (const josabpp::ParseError& e) {
    emit_error("parse", e.what());
    return 1;
  } catch (const josabpp::ValidationError& e) {
    nlohmann::json extra;
    extra["issues"] = e.issues();
    emit_error("validation", "instance violates model invariants", extra);
    return 1;
  } catch (const josabpp::ExactLimitError& e) {
    nlohmann::json extra;
    extra["total_order_articles"] = e.total_order_articles;
    extra["items"] = e.items;
    emit_error("limit", e.what(), extra);
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    emit_error("internal", e.what());
    return 1;
  }

  return 0;
}
