#pragma once

#include <span>
#include <vector>

#include "josabpp/types.hpp"

namespace josabpp {

/// Tour cost of one picklist: depot -> items in sequence -> depot, using the
/// zone grid metric. Throws std::domain_error if an item lies outside
/// p.zone.
double picklist_cost(const Instance& instance, const Picklist& p);

/// Splits a set of selected items into picklists: items are grouped by zone
/// (ascending), sorted by (aisle, rack, id) within each zone, then packed in
/// that order first-fit against the volume limit V. An item joins the open
/// picklist if the summed volume stays <= V, otherwise the picklist is
/// closed and a new one starts with that item. The pick sequence is the
/// sorted order; no route optimization happens here.
std::vector<Picklist> compute_picklists(const Instance& instance,
                                        std::span<const int32_t> selected);

}  // namespace josabpp
