// Hand-built instances and solutions shared by the unit and acceptance
// suites. Everything here is constructed directly (no generator involved) so
// the expected numbers can be checked by hand.
#pragma once

#include <cstdint>
#include <random>

#include "josabpp/types.hpp"

namespace josabpp::testsupport {

/// One zone, `aisles` x `racks`, cross-aisles at {0, mid, last}.
ZoneSpec simple_zone(int32_t id, int32_t aisles, int32_t racks);

/// Smallest non-trivial input: one order of one article, one matching item
/// one aisle away from the depot, Q = 1, IG = 1. Any correct solver returns
/// a single one-item picklist of cost 2.
Instance make_micro_instance();

/// Two-zone, 12-item instance with a hand-derived feasible baseline
/// solution (3 batches, 8 items selected against a goal of 5). The slack in
/// every direction (spare item copies, unsaturated volumes, goal met with
/// room) is what lets each mutation below break exactly one constraint.
struct MutationFixture {
  Instance instance;
  Solution base;
};

MutationFixture make_mutation_fixture();

/// Minimal mutations of the baseline, one per model constraint. Each breaks
/// only its own constraint; bookkeeping fields are re-annotated where the
/// mutation changes them so constraint 0 stays silent.
Solution mutate_duplicate_order(const MutationFixture& fx);   // (2)
Solution mutate_duplicate_item(const MutationFixture& fx);    // (3)
Solution mutate_drop_item(const MutationFixture& fx);         // (4)
Solution mutate_cross_zone(const MutationFixture& fx);        // (5)
Solution mutate_overfull_picklist(const MutationFixture& fx); // (6)
Solution mutate_extra_order(const MutationFixture& fx);       // (7)
Solution mutate_drop_batch(const MutationFixture& fx);        // (8)

/// Recomputes objective, pcpi, selected_items and goal_met from the
/// solution's picklists. Requires structurally sound picklists.
void annotate(const Instance& instance, Solution& solution);

/// Random instance small enough for the exact solver: <= 5 orders with
/// <= 10 article occurrences total, <= 14 items, 1-2 zones. Roughly one in
/// eight draws gets an unreachable item goal to exercise pool exhaustion.
Instance make_tiny_instance(std::mt19937_64& rng);

/// Random mid-size instance (hundreds of items, tens of orders) for solver
/// property tests where the generator presets would be too slow.
Instance make_mini_instance(std::mt19937_64& rng);

}  // namespace josabpp::testsupport
