#pragma once

#include "josabpp/types.hpp"

namespace josabpp {

/// Walking distance between two locations of the same zone, in unit grid
/// steps. Within an aisle the rack coordinate is freely walkable; switching
/// aisles is possible only at the zone's three cross-aisle racks:
///
///   same aisle:      |x.rack - y.rack|
///   different aisle: |x.aisle - y.aisle|
///                    + min over cross racks c of |x.rack - c| + |y.rack - c|
///
/// Distances are integral under unit steps; the return type is real so that
/// scaled axis metrics stay representable without an interface change.
/// Throws std::domain_error when x and y are not both in `zone`.
double distance(const ZoneSpec& zone, const Location& x, const Location& y);

/// distance(zone, zone.depot(), x). Finite for every in-zone location since
/// the depot lies on a cross-aisle.
double distance_to_depot(const ZoneSpec& zone, const Location& x);

}  // namespace josabpp
