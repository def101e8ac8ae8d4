#pragma once

#include <string>
#include <vector>

#include "josabpp/types.hpp"

namespace josabpp {

/// One feasibility problem. `constraint` is the model constraint number
/// (2..8); 0 marks referential or bookkeeping integrity problems (dangling
/// ids, recorded objective/pcpi mismatching the recomputation, ...).
/// `batch` is the offending batch index, or -1 for solution-level entries.
struct Violation {
  int constraint = 0;
  int batch = -1;
  std::string detail;
};

struct ValidationReport {
  bool feasible = false;
  std::vector<Violation> violations;
  std::vector<Violation> warnings;  // non-fatal, e.g. legal early pool exhaustion
  double objective = 0.0;           // recomputed from scratch
  double pcpi = 0.0;                // recomputed; 0 when no items selected
};

/// Independent feasibility check of `solution` against `instance`:
///   (2) no order id appears in two batches
///   (3) no item id appears in two picklists
///   (4) per batch, order articles == picklist item articles as multisets
///   (5) every picklist's items lie in the picklist's single zone
///   (6) every picklist's summed article volume is <= V
///   (7) every batch has at most Q orders
///   (8) at least item_goal items are selected; reported as a warning
///       instead when the solution legally exhausted the order pool
/// plus referential integrity and exact recomputation of objective and pcpi.
/// Never throws on bad solutions; every problem becomes a report entry.
ValidationReport validate(const Instance& instance, const Solution& solution);

/// Recomputes the total picklist cost from scratch. Throws
/// std::runtime_error if the recorded objective differs.
double objective(const Instance& instance, const Solution& solution);

/// objective / number of selected items. Throws std::domain_error on an
/// empty solution.
double pcpi(const Instance& instance, const Solution& solution);

std::string report_to_json(const ValidationReport& report);

/// Human-readable rendering; pcpi rounded to 2 decimals.
std::string report_to_text(const ValidationReport& report);

}  // namespace josabpp
