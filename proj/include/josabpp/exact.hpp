#pragma once

#include <cstdint>
#include <stdexcept>

#include "josabpp/types.hpp"

namespace josabpp {

struct ExactLimits {
  int64_t max_total_order_articles = 10;
  int64_t max_items = 14;
};

/// Thrown when an instance is too large for exhaustive search; carries the
/// measured sizes.
class ExactLimitError : public std::runtime_error {
 public:
  ExactLimitError(std::string msg, int64_t total_order_articles, int64_t items)
      : std::runtime_error(std::move(msg)),
        total_order_articles(total_order_articles),
        items(items) {}

  int64_t total_order_articles;
  int64_t items;
};

/// Globally optimal solution by exhaustive enumeration: order subsets
/// meeting the item goal (the full pool when it cannot be met), batch
/// partitions respecting Q, injective item assignments, picklist partitions
/// respecting V, and the optimal visiting order per picklist. Intended as
/// ground truth for tiny instances only; refuses anything over `limits`.
/// Ties between equal-cost solutions resolve to the lexicographically
/// smallest canonical serialization among enumerated candidates.
Solution exact_solve(const Instance& instance, const ExactLimits& limits = {});

}  // namespace josabpp
