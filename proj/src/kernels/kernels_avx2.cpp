// AVX2 variants of the distance kernels. Compiled with -mavx2 and entered
// only after a runtime CPU check; must match the scalar kernels bit for bit.

#include <immintrin.h>

#include "josabpp/kernels.hpp"

namespace josabpp::kernels {

namespace {

inline __m256i abs_diff(__m256i a, __m256i b) {
  return _mm256_abs_epi32(_mm256_sub_epi32(a, b));
}

// Vector form of point_distance: 8 (aisle, rack) points against one
// broadcast reference; cross racks given per lane.
inline __m256i grid_distance(__m256i aisle, __m256i rack, __m256i ref_aisle,
                             __m256i ref_rack, __m256i c0, __m256i c1,
                             __m256i c2) {
  const __m256i da = abs_diff(aisle, ref_aisle);
  const __m256i same = _mm256_cmpeq_epi32(da, _mm256_setzero_si256());
  const __m256i dsame = abs_diff(rack, ref_rack);
  const __m256i d0 = _mm256_add_epi32(abs_diff(rack, c0), abs_diff(ref_rack, c0));
  const __m256i d1 = _mm256_add_epi32(abs_diff(rack, c1), abs_diff(ref_rack, c1));
  const __m256i d2 = _mm256_add_epi32(abs_diff(rack, c2), abs_diff(ref_rack, c2));
  const __m256i detour = _mm256_min_epi32(d0, _mm256_min_epi32(d1, d2));
  const __m256i dcross = _mm256_add_epi32(da, detour);
  return _mm256_blendv_epi8(dcross, dsame, same);
}

void min_dist_over_refs_avx2(const int32_t* aisles, const int32_t* racks,
                             size_t n, const int32_t* ref_aisles,
                             const int32_t* ref_racks, size_t n_refs,
                             CrossAisles cross, int32_t* out) {
  const __m256i c0 = _mm256_set1_epi32(cross.c0);
  const __m256i c1 = _mm256_set1_epi32(cross.c1);
  const __m256i c2 = _mm256_set1_epi32(cross.c2);

  size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    const __m256i aisle = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(aisles + i));
    const __m256i rack = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(racks + i));
    __m256i acc = _mm256_set1_epi32(INT32_MAX);
    for (size_t j = 0; j < n_refs; ++j) {
      const __m256i ra = _mm256_set1_epi32(ref_aisles[j]);
      const __m256i rr = _mm256_set1_epi32(ref_racks[j]);
      acc = _mm256_min_epi32(acc, grid_distance(aisle, rack, ra, rr, c0, c1, c2));
    }
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + i), acc);
  }
  for (; i < n; ++i) {
    int32_t best = INT32_MAX;
    for (size_t j = 0; j < n_refs; ++j) {
      const int32_t d =
          point_distance(aisles[i], racks[i], ref_aisles[j], ref_racks[j], cross);
      if (d < best) best = d;
    }
    out[i] = best;
  }
}

NearestResult nearest_candidate_avx2(
    const int32_t* slots, size_t n, const int32_t* base_dist,
    const int32_t* id_by_slot, const int32_t* zone_by_slot,
    const int32_t* aisle_by_slot, const int32_t* rack_by_slot,
    const int32_t* zone_c0, const int32_t* zone_c1, const int32_t* zone_c2,
    const RefPoint* extras, size_t n_extras, const int32_t* excluded_slots,
    size_t n_excluded) {
  const __m256i inf = _mm256_set1_epi32(INT32_MAX);
  __m256i best_d = inf;
  __m256i best_id = inf;
  __m256i best_slot = _mm256_set1_epi32(-1);

  size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    const __m256i slot = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(slots + i));

    __m256i excl = _mm256_setzero_si256();
    for (size_t e = 0; e < n_excluded; ++e) {
      excl = _mm256_or_si256(
          excl, _mm256_cmpeq_epi32(slot, _mm256_set1_epi32(excluded_slots[e])));
    }

    __m256i d = base_dist != nullptr
                    ? _mm256_i32gather_epi32(base_dist, slot, 4)
                    : inf;
    const __m256i id = _mm256_i32gather_epi32(id_by_slot, slot, 4);

    if (n_extras > 0) {
      const __m256i zone = _mm256_i32gather_epi32(zone_by_slot, slot, 4);
      const __m256i aisle = _mm256_i32gather_epi32(aisle_by_slot, slot, 4);
      const __m256i rack = _mm256_i32gather_epi32(rack_by_slot, slot, 4);
      const __m256i c0 = _mm256_i32gather_epi32(zone_c0, zone, 4);
      const __m256i c1 = _mm256_i32gather_epi32(zone_c1, zone, 4);
      const __m256i c2 = _mm256_i32gather_epi32(zone_c2, zone, 4);
      for (size_t e = 0; e < n_extras; ++e) {
        const __m256i zmask =
            _mm256_cmpeq_epi32(zone, _mm256_set1_epi32(extras[e].zone));
        const __m256i ea = _mm256_set1_epi32(extras[e].aisle);
        const __m256i er = _mm256_set1_epi32(extras[e].rack);
        const __m256i de = grid_distance(aisle, rack, ea, er, c0, c1, c2);
        d = _mm256_min_epi32(d, _mm256_blendv_epi8(inf, de, zmask));
      }
    }

    // Excluded lanes become (INF, INF) and can never win.
    d = _mm256_blendv_epi8(d, inf, excl);
    const __m256i idm = _mm256_blendv_epi8(id, inf, excl);

    const __m256i lt_d = _mm256_cmpgt_epi32(best_d, d);
    const __m256i eq_d = _mm256_cmpeq_epi32(best_d, d);
    const __m256i lt_id = _mm256_cmpgt_epi32(best_id, idm);
    const __m256i lt =
        _mm256_or_si256(lt_d, _mm256_and_si256(eq_d, lt_id));
    best_d = _mm256_blendv_epi8(best_d, d, lt);
    best_id = _mm256_blendv_epi8(best_id, idm, lt);
    best_slot = _mm256_blendv_epi8(best_slot, slot, lt);
  }

  alignas(32) int32_t hd[8];
  alignas(32) int32_t hid[8];
  alignas(32) int32_t hslot[8];
  _mm256_store_si256(reinterpret_cast<__m256i*>(hd), best_d);
  _mm256_store_si256(reinterpret_cast<__m256i*>(hid), best_id);
  _mm256_store_si256(reinterpret_cast<__m256i*>(hslot), best_slot);

  NearestResult best;
  for (int lane = 0; lane < 8; ++lane) {
    if (hslot[lane] < 0) continue;
    if (hd[lane] < best.dist || (hd[lane] == best.dist && hid[lane] < best.id)) {
      best = NearestResult{hd[lane], hid[lane], hslot[lane]};
    }
  }

  // Scalar tail, same semantics as the reference kernel.
  for (; i < n; ++i) {
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

const KernelOps& avx2_kernels() {
  static const KernelOps ops{"avx2", &min_dist_over_refs_avx2,
                             &nearest_candidate_avx2};
  return ops;
}

}  // namespace josabpp::kernels
