#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace josabpp {

/// A product type. Orders request articles; the warehouse stores items of articles.
struct Article {
  int32_t id = 0;
  double volume = 0.0;  // > 0, and <= Instance.params.picklist_volume
};

/// A customer order: a multiset of article ids. The stored sequence is
/// preserved from the input file and is the iteration order used by the
/// solver when allocating items occurrence by occurrence.
struct Order {
  int32_t id = 0;
  std::vector<int32_t> articles;
};

/// Grid coordinate inside one zone.
struct Location {
  int32_t zone = 0;
  int32_t aisle = 0;
  int32_t rack = 0;

  friend bool operator==(const Location&, const Location&) = default;
};

/// One picking zone: an aisles x racks grid. The rack coordinate varies
/// freely within an aisle; changing aisles is possible only at the three
/// cross-aisle rack coordinates. The depot sits at (aisle 0, rack 0) and
/// cross_aisle_racks[0] == 0, so the depot lies on a cross-aisle.
struct ZoneSpec {
  int32_t id = 0;
  int32_t aisles = 0;
  int32_t racks = 0;
  std::array<int32_t, 3> cross_aisle_racks{0, 0, 0};

  Location depot() const { return Location{id, 0, 0}; }
};

/// One physical copy of an article at a fixed location.
struct WarehouseItem {
  int32_t id = 0;
  int32_t article = 0;
  Location location;
};

struct InstanceParams {
  int64_t item_goal = 0;        // IG: minimum number of items to batch
  double picklist_volume = 0;   // V: max summed article volume per picklist
  int32_t orders_per_batch = 0; // Q: max orders per batch
};

/// Full problem input. All ids are dense: collection k holds ids 0..k-1.
struct Instance {
  std::string name;
  InstanceParams params;
  std::vector<ZoneSpec> zones;
  std::vector<Article> articles;
  std::vector<WarehouseItem> items;
  std::vector<Order> orders;
};

/// Ordered pick sequence within one zone.
struct Picklist {
  int32_t zone = 0;
  std::vector<int32_t> items;  // warehouse item ids, in pick order
};

/// A set of orders plus the picklists covering exactly their articles.
struct Batch {
  std::vector<int32_t> orders;  // order ids, ascending
  std::vector<Picklist> picklists;
};

struct Solution {
  std::string instance;   // Instance.name this solution was computed for
  std::string algorithm;  // "dga", "rdga", "exact"
  uint64_t seed = 0;
  bool goal_met = false;  // selected_items >= item_goal
  double objective = 0.0; // total picklist cost; integral under unit steps
  double pcpi = 0.0;      // objective / selected_items (0 when empty)
  int64_t selected_items = 0;
  bool optimal = false;   // set only by the exact solver
  std::vector<Batch> batches;
};

/// Solver-internal bookkeeping for the batch under construction.
struct SelectionState {
  std::vector<int32_t> remaining_inventory;  // available item ids
  std::vector<int32_t> batch_selected;       // item ids chosen for this batch
  int64_t remaining_goal = 0;                // may go negative on the final batch
};

/// Thrown when an input file is structurally broken (not valid JSON, wrong
/// types, unknown format version).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Thrown when a structurally valid instance or solution violates model
/// invariants; carries one message per violated invariant.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(std::vector<std::string> issues)
      : std::runtime_error(join(issues)), issues_(std::move(issues)) {}

  const std::vector<std::string>& issues() const { return issues_; }

 private:
  static std::string join(const std::vector<std::string>& issues) {
    std::string all = "instance validation failed:";
    for (const auto& s : issues) {
      all += "\n  - ";
      all += s;
    }
    return all;
  }

  std::vector<std::string> issues_;
};

/// Per-article total demanded count over all orders. Articles never ordered
/// map to 0. Indexed by article id.
std::vector<int64_t> demand_profile(const Instance& instance);

}  // namespace josabpp
