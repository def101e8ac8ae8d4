#include "josabpp/geometry.hpp"

#include <stdexcept>
#include <string>

#include "josabpp/kernels.hpp"

namespace josabpp {

namespace {

void require_in_zone(const ZoneSpec& zone, const Location& x) {
  if (x.zone != zone.id) {
    throw std::domain_error("distance undefined across zones: location in zone " +
                            std::to_string(x.zone) + ", expected zone " +
                            std::to_string(zone.id));
  }
}

}  // namespace

double distance(const ZoneSpec& zone, const Location& x, const Location& y) {
  require_in_zone(zone, x);
  require_in_zone(zone, y);
  const kernels::CrossAisles cross{zone.cross_aisle_racks[0],
                                   zone.cross_aisle_racks[1],
                                   zone.cross_aisle_racks[2]};
  return kernels::point_distance(x.aisle, x.rack, y.aisle, y.rack, cross);
}

double distance_to_depot(const ZoneSpec& zone, const Location& x) {
  return distance(zone, zone.depot(), x);
}

}  // namespace josabpp
