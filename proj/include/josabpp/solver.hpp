#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>

#include "josabpp/types.hpp"

namespace josabpp {

enum class Algorithm { DGA, RDGA };

std::string algorithm_name(Algorithm a);
Algorithm parse_algorithm(const std::string& name);  // "dga" | "rdga"

struct SolverConfig {
  Algorithm algorithm = Algorithm::DGA;
  uint64_t seed = 0;  // consumed by RDGA's order choice; recorded either way
};

/// Snapshot of one greedy order-selection step, for external verification.
/// Spans are valid only during the callback.
struct BestOrderStep {
  std::span<const int32_t> pool;            // remaining order ids, ascending
  std::span<const int32_t> batch_selected;  // item ids already in this batch
  int64_t remaining_goal = 0;
  int32_t chosen_order = -1;
  std::span<const int32_t> chosen_items;    // allocation for chosen_order
  int64_t chosen_dist = 0;                  // summed allocation distance
};

using BestOrderObserver = std::function<void(const Instance&, const BestOrderStep&)>;

/// Runs the greedy construction: batches are built one by one until the item
/// goal is met or the order pool is exhausted. Within a batch, orders are
/// added while |orders| < Q, the pool is non-empty and the batch's item
/// count is below the remaining goal. DGA picks the order minimizing the
/// average nearest-reference distance of its allocated items; RDGA picks a
/// pool order uniformly at random (seeded) and allocates with the same
/// nearest-reference rule. Single-threaded; deterministic for a fixed
/// (instance, config).
///
/// `observer`, when set, is invoked after every DGA order choice.
Solution solve(const Instance& instance, const SolverConfig& config,
               const BestOrderObserver& observer = nullptr);

}  // namespace josabpp
