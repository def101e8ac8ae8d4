#include "josabpp/validator.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <map>
#include <set>

#include "json.hpp"
#include "josabpp/picklisting.hpp"

namespace josabpp {

namespace {

constexpr double kVolumeSlack = 1e-9;  // absorbs summation noise only

bool close(double a, double b) {
  const double scale = std::max(1.0, std::max(std::fabs(a), std::fabs(b)));
  return std::fabs(a - b) <= 1e-9 * scale;
}

std::string fmt_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

}  // namespace

ValidationReport validate(const Instance& instance, const Solution& solution) {
  ValidationReport report;
  auto violation = [&](int constraint, int batch, std::string detail) {
    report.violations.push_back(Violation{constraint, batch, std::move(detail)});
  };

  const auto n_orders = static_cast<int32_t>(instance.orders.size());
  const auto n_items = static_cast<int32_t>(instance.items.size());
  const auto n_zones = static_cast<int32_t>(instance.zones.size());

  if (solution.instance != instance.name) {
    violation(0, -1,
              "solution was computed for instance '" + solution.instance +
                  "', validating against '" + instance.name + "'");
  }

  // Referential pass; batches with dangling ids are excluded from the
  // content checks below so one bad id does not cascade.
  std::vector<bool> batch_refs_ok(solution.batches.size(), true);
  for (size_t b = 0; b < solution.batches.size(); ++b) {
    const Batch& batch = solution.batches[b];
    const int bi = static_cast<int>(b);
    for (int32_t oid : batch.orders) {
      if (oid < 0 || oid >= n_orders) {
        violation(0, bi, "unknown order id " + std::to_string(oid));
        batch_refs_ok[b] = false;
      }
    }
    for (const Picklist& p : batch.picklists) {
      if (p.zone < 0 || p.zone >= n_zones) {
        violation(0, bi, "unknown zone id " + std::to_string(p.zone));
        batch_refs_ok[b] = false;
      }
      for (int32_t id : p.items) {
        if (id < 0 || id >= n_items) {
          violation(0, bi, "unknown item id " + std::to_string(id));
          batch_refs_ok[b] = false;
        }
      }
    }
  }

  // (2) each order in at most one batch
  {
    std::map<int32_t, int> first_batch;
    for (size_t b = 0; b < solution.batches.size(); ++b) {
      std::set<int32_t> here;
      for (int32_t oid : solution.batches[b].orders) {
        if (!here.insert(oid).second) {
          violation(2, static_cast<int>(b),
                    "order " + std::to_string(oid) + " listed twice");
          continue;
        }
        auto [it, fresh] = first_batch.emplace(oid, static_cast<int>(b));
        if (!fresh) {
          violation(2, static_cast<int>(b),
                    "order " + std::to_string(oid) + " already in batch " +
                        std::to_string(it->second));
        }
      }
    }
  }

  // (3) each item in at most one picklist
  {
    std::map<int32_t, int> first_batch;
    for (size_t b = 0; b < solution.batches.size(); ++b) {
      for (const Picklist& p : solution.batches[b].picklists) {
        for (int32_t id : p.items) {
          auto [it, fresh] = first_batch.emplace(id, static_cast<int>(b));
          if (!fresh) {
            violation(3, static_cast<int>(b),
                      "item " + std::to_string(id) + " already picked in batch " +
                          std::to_string(it->second));
          }
        }
      }
    }
  }

  bool zones_ok = true;
  for (size_t b = 0; b < solution.batches.size(); ++b) {
    const Batch& batch = solution.batches[b];
    const int bi = static_cast<int>(b);

    // (4) per-batch article multisets: ordered vs picked
    if (batch_refs_ok[b]) {
      std::map<int32_t, int64_t> delta;  // ordered - picked, per article
      for (int32_t oid : batch.orders) {
        for (int32_t a : instance.orders[static_cast<size_t>(oid)].articles) {
          delta[a] += 1;
        }
      }
      for (const Picklist& p : batch.picklists) {
        for (int32_t id : p.items) {
          delta[instance.items[static_cast<size_t>(id)].article] -= 1;
        }
      }
      for (const auto& [article, d] : delta) {
        if (d > 0) {
          violation(4, bi,
                    "article " + std::to_string(article) + ": " +
                        std::to_string(d) + " ordered occurrence(s) unpicked");
        } else if (d < 0) {
          violation(4, bi,
                    "article " + std::to_string(article) + ": " +
                        std::to_string(-d) + " picked item(s) nobody ordered");
        }
      }
    }

    for (const Picklist& p : batch.picklists) {
      if (!batch_refs_ok[b]) continue;

      // (5) single zone per picklist
      for (int32_t id : p.items) {
        const Location& loc = instance.items[static_cast<size_t>(id)].location;
        if (loc.zone != p.zone) {
          violation(5, bi,
                    "item " + std::to_string(id) + " lies in zone " +
                        std::to_string(loc.zone) + ", picklist is for zone " +
                        std::to_string(p.zone));
          zones_ok = false;
        }
      }

      // (6) volume cap
      double vol = 0.0;
      for (int32_t id : p.items) {
        const WarehouseItem& it = instance.items[static_cast<size_t>(id)];
        vol += instance.articles[static_cast<size_t>(it.article)].volume;
      }
      if (vol > instance.params.picklist_volume + kVolumeSlack) {
        violation(6, bi,
                  "picklist volume " + fmt_double(vol) + " exceeds limit " +
                      fmt_double(instance.params.picklist_volume));
      }
    }

    // (7) batch size cap
    if (static_cast<int64_t>(batch.orders.size()) >
        instance.params.orders_per_batch) {
      violation(7, bi,
                "batch has " + std::to_string(batch.orders.size()) +
                    " orders, limit is " +
                    std::to_string(instance.params.orders_per_batch));
    }
  }

  // (8) item goal
  int64_t selected = 0;
  for (const Batch& b : solution.batches) {
    for (const Picklist& p : b.picklists) {
      selected += static_cast<int64_t>(p.items.size());
    }
  }
  if (selected < instance.params.item_goal) {
    std::set<int32_t> used;
    for (const Batch& b : solution.batches) {
      used.insert(b.orders.begin(), b.orders.end());
    }
    bool pool_exhausted = true;
    for (int32_t oid = 0; oid < n_orders; ++oid) {
      if (!used.count(oid)) {
        pool_exhausted = false;
        break;
      }
    }
    const std::string detail = std::to_string(selected) +
                               " item(s) selected, goal is " +
                               std::to_string(instance.params.item_goal);
    if (pool_exhausted) {
      report.warnings.push_back(
          Violation{8, -1, detail + " (order pool exhausted)"});
    } else {
      violation(8, -1, detail + " with orders left in the pool");
    }
  }

  // Bookkeeping integrity: recompute objective and pcpi from scratch. Only
  // meaningful when every id resolves and zones match, otherwise the tour
  // costs are undefined.
  bool refs_ok = zones_ok;
  for (bool ok : batch_refs_ok) refs_ok = refs_ok && ok;
  if (refs_ok) {
    double objective = 0.0;
    for (const Batch& b : solution.batches) {
      for (const Picklist& p : b.picklists) {
        objective += picklist_cost(instance, p);
      }
    }
    report.objective = objective;
    report.pcpi =
        selected > 0 ? objective / static_cast<double>(selected) : 0.0;

    if (!close(solution.objective, objective)) {
      violation(0, -1,
                "recorded objective " + fmt_double(solution.objective) +
                    " differs from recomputed " + fmt_double(objective));
    }
    if (!close(solution.pcpi, report.pcpi)) {
      violation(0, -1,
                "recorded pcpi " + fmt_double(solution.pcpi) +
                    " differs from recomputed " + fmt_double(report.pcpi));
    }
    if (solution.selected_items != selected) {
      violation(0, -1,
                "recorded selected_items " +
                    std::to_string(solution.selected_items) +
                    " differs from recomputed " + std::to_string(selected));
    }
    const bool goal_met = selected >= instance.params.item_goal;
    if (solution.goal_met != goal_met) {
      violation(0, -1,
                std::string("recorded goal_met ") +
                    (solution.goal_met ? "true" : "false") +
                    " differs from recomputed " + (goal_met ? "true" : "false"));
    }
  }

  report.feasible = report.violations.empty();
  return report;
}

double objective(const Instance& instance, const Solution& solution) {
  double total = 0.0;
  for (const Batch& b : solution.batches) {
    for (const Picklist& p : b.picklists) {
      total += picklist_cost(instance, p);
    }
  }
  if (!close(total, solution.objective)) {
    throw std::runtime_error("recorded objective " +
                             fmt_double(solution.objective) +
                             " differs from recomputed " + fmt_double(total));
  }
  return total;
}

double pcpi(const Instance& instance, const Solution& solution) {
  int64_t selected = 0;
  double total = 0.0;
  for (const Batch& b : solution.batches) {
    for (const Picklist& p : b.picklists) {
      selected += static_cast<int64_t>(p.items.size());
      total += picklist_cost(instance, p);
    }
  }
  if (selected == 0) {
    throw std::domain_error("pcpi is undefined for an empty solution");
  }
  return total / static_cast<double>(selected);
}

std::string report_to_json(const ValidationReport& report) {
  nlohmann::json j;
  j["feasible"] = report.feasible;
  j["objective"] = report.objective;
  j["pcpi"] = report.pcpi;
  auto render = [](const std::vector<Violation>& list) {
    nlohmann::json arr = nlohmann::json::array();
    for (const Violation& v : list) {
      nlohmann::json vj;
      vj["constraint"] = v.constraint;
      vj["batch"] = v.batch;
      vj["detail"] = v.detail;
      arr.push_back(std::move(vj));
    }
    return arr;
  };
  j["violations"] = render(report.violations);
  j["warnings"] = render(report.warnings);
  return j.dump(2) + "\n";
}

std::string report_to_text(const ValidationReport& report) {
  std::string out;
  out += report.feasible ? "feasible: yes\n" : "feasible: no\n";
  out += "objective: " + fmt_double(report.objective) + "\n";
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.2f", report.pcpi);
  out += "pcpi: ";
  out += buf;
  out += "\n";
  auto render = [&](const char* label, const std::vector<Violation>& list) {
    out += label;
    if (list.empty()) {
      out += " none\n";
      return;
    }
    out += "\n";
    for (const Violation& v : list) {
      out += "  [constraint " + std::to_string(v.constraint);
      if (v.batch >= 0) out += ", batch " + std::to_string(v.batch);
      out += "] " + v.detail + "\n";
    }
  };
  render("violations:", report.violations);
  render("warnings:", report.warnings);
  return out;
}

}  // namespace josabpp
