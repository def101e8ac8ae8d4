#include "josabpp/picklisting.hpp"

#include <algorithm>

#include "josabpp/geometry.hpp"

namespace josabpp {

double picklist_cost(const Instance& instance, const Picklist& p) {
  const ZoneSpec& zone = instance.zones.at(static_cast<size_t>(p.zone));
  Location cur = zone.depot();
  double cost = 0.0;
  for (int32_t id : p.items) {
    const Location& loc = instance.items.at(static_cast<size_t>(id)).location;
    cost += distance(zone, cur, loc);
    cur = loc;
  }
  cost += distance(zone, cur, zone.depot());
  return cost;
}

std::vector<Picklist> compute_picklists(const Instance& instance,
                                        std::span<const int32_t> selected) {
  struct Key {
    int32_t zone;
    int32_t aisle;
    int32_t rack;
    int32_t id;
  };
  std::vector<Key> keys;
  keys.reserve(selected.size());
  for (int32_t id : selected) {
    const WarehouseItem& it = instance.items.at(static_cast<size_t>(id));
    keys.push_back(Key{it.location.zone, it.location.aisle, it.location.rack, id});
  }
  std::sort(keys.begin(), keys.end(), [](const Key& a, const Key& b) {
    if (a.zone != b.zone) return a.zone < b.zone;
    if (a.aisle != b.aisle) return a.aisle < b.aisle;
    if (a.rack != b.rack) return a.rack < b.rack;
    return a.id < b.id;
  });

  const double cap = instance.params.picklist_volume;
  std::vector<Picklist> lists;
  double open_volume = 0.0;
  for (const Key& k : keys) {
    const WarehouseItem& it = instance.items[static_cast<size_t>(k.id)];
    const double vol = instance.articles[static_cast<size_t>(it.article)].volume;
    const bool fits = !lists.empty() && lists.back().zone == k.zone &&
                      open_volume + vol <= cap;
    if (!fits) {
      lists.push_back(Picklist{k.zone, {}});
      open_volume = 0.0;
    }
    lists.back().items.push_back(k.id);
    open_volume += vol;
  }
  return lists;
}

}  // namespace josabpp
