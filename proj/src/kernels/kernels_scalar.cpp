#include "josabpp/kernels.hpp"

namespace josabpp::kernels {

namespace {

void min_dist_over_refs_scalar(const int32_t* aisles, const int32_t* racks,
                               size_t n, const int32_t* ref_aisles,
                               const int32_t* ref_racks, size_t n_refs,
                               CrossAisles cross, int32_t* out) {
  for (size_t i = 0; i < n; ++i) {
    int32_t best = INT32_MAX;
    for (size_t j = 0; j < n_refs; ++j) {
      const int32_t d =
          point_distance(aisles[i], racks[i], ref_aisles[j], ref_racks[j], cross);
      if (d < best) best = d;
    }
    out[i] = best;
  }
}

NearestResult nearest_candidate_scalar(
    const int32_t* slots, size_t n, const int32_t* base_dist,
    const int32_t* id_by_slot, const int32_t* zone_by_slot,
    const int32_t* aisle_by_slot, const int32_t* rack_by_slot,
    const int32_t* zone_c0, const int32_t* zone_c1, const int32_t* zone_c2,
    const RefPoint* extras, size_t n_extras, const int32_t* excluded_slots,
    size_t n_excluded) {
  NearestResult best;
  for (size_t i = 0; i < n; ++i) {
    const int32_t slot = slots[i];
    bool excluded = false;
    for (size_t e = 0; e < n_excluded; ++e) {
      if (excluded_slots[e] == slot) {
        excluded = true;
        break;
      }
    }
    if (excluded) continue;

    const int32_t zone = zone_by_slot[slot];
    int32_t d = base_dist != nullptr ? base_dist[slot] : INT32_MAX;
    if (n_extras > 0) {
      const CrossAisles cross{zone_c0[zone], zone_c1[zone], zone_c2[zone]};
      for (size_t e = 0; e < n_extras; ++e) {
        if (extras[e].zone != zone) continue;
        const int32_t de = point_distance(aisle_by_slot[slot], rack_by_slot[slot],
                                          extras[e].aisle, extras[e].rack, cross);
        if (de < d) d = de;
      }
    }

    const int32_t id = id_by_slot[slot];
    if (d < best.dist || (d == best.dist && id < best.id)) {
      best = NearestResult{d, id, slot};
    }
  }
  return best;
}

}  // namespace

const KernelOps& scalar_kernels() {
  static const KernelOps ops{"scalar", &min_dist_over_refs_scalar,
                             &nearest_candidate_scalar};
  return ops;
}

}  // namespace josabpp::kernels
