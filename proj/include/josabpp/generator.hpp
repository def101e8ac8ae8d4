#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "josabpp/types.hpp"

namespace josabpp {

/// Instance generation parameters. The presets pin (items, orders, zones,
/// racks, aisles); everything else keeps its default unless overridden.
struct GenParams {
  std::string name = "instance";
  int64_t items = 10'000;
  int64_t orders = 500;
  int32_t zones = 10;
  int32_t racks = 100;
  int32_t aisles = 100;
  int64_t articles = 0;          // 0 -> items / 20
  double mean_order_size = 2.64;
  double ig_ratio = 0.20;        // item goal as a fraction of total order articles
  int32_t volume_min = 1;
  int32_t volume_max = 10;
  double picklist_volume = 60.0; // V
  int32_t orders_per_batch = 46; // Q
  uint64_t seed = 0;
};

/// Named size categories: small = (10k items, 500 orders, 10 zones),
/// medium = (100k, 5'000, 50), large = (1M, 50'000, 100); all with
/// 100 racks x 100 aisles per zone.
GenParams preset_params(const std::string& preset);  // "small" | "medium" | "large"

/// Deterministic seeded generation: article volumes uniform over
/// [volume_min, volume_max]; order sizes from a truncated geometric
/// distribution calibrated to mean_order_size; order contents uniform over
/// articles; per-article supply topped up to demand, remaining items
/// assigned uniformly; locations uniform over (zone, aisle, rack);
/// IG = round(ig_ratio * total order articles), at least 1; cross-aisles at
/// racks {0, (R-1)/2, R-1}. Throws ValidationError when the parameters are
/// unsatisfiable (e.g. fewer items than total demand).
Instance generate(const GenParams& params);

/// Reduces the order pool: orders are drawn uniformly without replacement
/// (seeded) until their cumulative article count first reaches the item
/// goal. Items, zones and params are preserved bit-exactly; the surviving
/// orders keep their article lists and are renumbered densely in ascending
/// original-id order.
Instance trim_order_pool(const Instance& instance, uint64_t seed);

/// Realized statistics recorded in generation manifests.
struct InstanceStats {
  std::string name;
  uint64_t seed = 0;
  int64_t items = 0;
  int64_t orders = 0;
  int64_t zones = 0;
  int64_t total_order_articles = 0;
  int64_t item_goal = 0;
};

InstanceStats instance_stats(const Instance& instance, uint64_t seed);

}  // namespace josabpp
