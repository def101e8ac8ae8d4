#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

namespace josabpp::kernels {

/// The three cross-aisle rack coordinates of one zone.
struct CrossAisles {
  int32_t c0 = 0;
  int32_t c1 = 0;
  int32_t c2 = 0;
};

/// A reference point for nearest_candidate, tagged with its zone.
struct RefPoint {
  int32_t zone = 0;
  int32_t aisle = 0;
  int32_t rack = 0;
};

/// Result of nearest_candidate. slot < 0 means no admissible candidate.
struct NearestResult {
  int32_t dist = INT32_MAX;
  int32_t id = INT32_MAX;
  int32_t slot = -1;
};

/// Scalar grid distance, the reference semantics every kernel variant must
/// reproduce bit for bit. Both points must be in the same zone.
inline int32_t point_distance(int32_t ax, int32_t ar, int32_t bx, int32_t br,
                              CrossAisles c) {
  auto iabs = [](int32_t v) { return v < 0 ? -v : v; };
  if (ax == bx) return iabs(ar - br);
  const int32_t d0 = iabs(ar - c.c0) + iabs(br - c.c0);
  const int32_t d1 = iabs(ar - c.c1) + iabs(br - c.c1);
  const int32_t d2 = iabs(ar - c.c2) + iabs(br - c.c2);
  int32_t best = d0 < d1 ? d0 : d1;
  if (d2 < best) best = d2;
  return iabs(ax - bx) + best;
}

/// Data-parallel kernels behind the solver's inner loops. `scalar` is the
/// reference implementation; SIMD variants are selected at runtime and are
/// required to produce identical outputs (all arithmetic is int32).
struct KernelOps {
  const char* name;

  /// out[i] = min over j < n_refs of point_distance(aisles[i], racks[i],
  /// ref_aisles[j], ref_racks[j], cross). All points share one zone.
  /// n_refs >= 1.
  void (*min_dist_over_refs)(const int32_t* aisles, const int32_t* racks,
                             size_t n, const int32_t* ref_aisles,
                             const int32_t* ref_racks, size_t n_refs,
                             CrossAisles cross, int32_t* out);

  /// Lexicographic argmin of (dist, id) over candidate slots, where
  ///   dist(slot) = min( base_dist[slot] if base_dist else INT32_MAX,
  ///                     min over extras e with e.zone == zone_by_slot[slot]
  ///                         of point_distance(slot coords, e coords,
  ///                                           zone cross racks) )
  /// Slots listed in excluded_slots are skipped. zone_c0/c1/c2 are indexed
  /// by zone id.
  NearestResult (*nearest_candidate)(
      const int32_t* slots, size_t n, const int32_t* base_dist,
      const int32_t* id_by_slot, const int32_t* zone_by_slot,
      const int32_t* aisle_by_slot, const int32_t* rack_by_slot,
      const int32_t* zone_c0, const int32_t* zone_c1, const int32_t* zone_c2,
      const RefPoint* extras, size_t n_extras, const int32_t* excluded_slots,
      size_t n_excluded);
};

const KernelOps& scalar_kernels();

/// True when the CPU can run the AVX2 variant built into this binary.
bool avx2_available();

/// Active kernel set. Defaults to the widest supported variant; the
/// JOSABPP_KERNEL environment variable (scalar|avx2|auto) overrides the
/// default before first use.
const KernelOps& active_kernels();

/// Forces a variant by name ("scalar", "avx2", "auto"). Throws
/// std::invalid_argument for unknown names or unsupported variants.
void set_active_kernels(const std::string& name);

}  // namespace josabpp::kernels
