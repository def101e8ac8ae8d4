#include <algorithm>
#include <climits>
#include <cmath>
#include <random>
#include <vector>

#include "doctest.h"
#include "josabpp/geometry.hpp"
#include "josabpp/kernels.hpp"

using namespace josabpp;
using kernels::CrossAisles;
using kernels::KernelOps;
using kernels::NearestResult;
using kernels::RefPoint;

namespace {

struct Universe {
  std::vector<int32_t> ids, zones, aisles, racks;
  std::vector<int32_t> zone_c0, zone_c1, zone_c2;
  int32_t n_zones = 0;
};

Universe random_universe(std::mt19937_64& rng, size_t n_slots) {
  auto pick = [&rng](int64_t n) {
    return static_cast<int32_t>(rng() % static_cast<uint64_t>(n));
  };
  Universe u;
  u.n_zones = 1 + pick(4);
  for (int32_t z = 0; z < u.n_zones; ++z) {
    const int32_t racks = 2 + pick(30);
    const int32_t a = pick(racks);
    const int32_t b = pick(racks);
    u.zone_c0.push_back(0);
    u.zone_c1.push_back(std::min(a, b));
    u.zone_c2.push_back(std::max(a, b));
  }
  for (size_t i = 0; i < n_slots; ++i) {
    u.ids.push_back(pick(1 << 20));
    u.zones.push_back(pick(u.n_zones));
    u.aisles.push_back(pick(32));
    u.racks.push_back(pick(32));
  }
  return u;
}

// Plain restatement of the contract, kept free of any early exits or
// blocking tricks so kernel variants have something dumb to agree with.
NearestResult naive_nearest(const Universe& u, const std::vector<int32_t>& slots,
                            const int32_t* base_dist,
                            const std::vector<RefPoint>& extras,
                            const std::vector<int32_t>& excluded) {
  NearestResult best;
  for (int32_t slot : slots) {
    if (std::find(excluded.begin(), excluded.end(), slot) != excluded.end()) {
      continue;
    }
    const int32_t zone = u.zones[static_cast<size_t>(slot)];
    int32_t d = base_dist != nullptr ? base_dist[slot] : INT32_MAX;
    const CrossAisles cross{u.zone_c0[static_cast<size_t>(zone)],
                            u.zone_c1[static_cast<size_t>(zone)],
                            u.zone_c2[static_cast<size_t>(zone)]};
    for (const RefPoint& e : extras) {
      if (e.zone != zone) continue;
      d = std::min(d, kernels::point_distance(u.aisles[static_cast<size_t>(slot)],
                                              u.racks[static_cast<size_t>(slot)],
                                              e.aisle, e.rack, cross));
    }
    const int32_t id = u.ids[static_cast<size_t>(slot)];
    if (d < best.dist || (d == best.dist && id < best.id)) {
      best = NearestResult{d, id, slot};
    }
  }
  return best;
}

void exercise_ops(const KernelOps& ops, uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto pick = [&rng](int64_t n) {
    return static_cast<int32_t>(rng() % static_cast<uint64_t>(n));
  };

  for (int round = 0; round < 60; ++round) {
    const size_t n_slots = 1 + static_cast<size_t>(pick(70));
    const Universe u = random_universe(rng, n_slots);

    // kernel 1 against a direct double loop
    {
      const size_t n_refs = 1 + static_cast<size_t>(pick(9));
      std::vector<int32_t> ra(n_refs), rr(n_refs);
      for (size_t j = 0; j < n_refs; ++j) {
        ra[j] = pick(32);
        rr[j] = pick(32);
      }
      const CrossAisles cross{0, pick(16), 16 + pick(16)};
      std::vector<int32_t> got(n_slots);
      ops.min_dist_over_refs(u.aisles.data(), u.racks.data(), n_slots, ra.data(),
                             rr.data(), n_refs, cross, got.data());
      for (size_t i = 0; i < n_slots; ++i) {
        int32_t want = INT32_MAX;
        for (size_t j = 0; j < n_refs; ++j) {
          want = std::min(want, kernels::point_distance(u.aisles[i], u.racks[i],
                                                        ra[j], rr[j], cross));
        }
        REQUIRE(got[i] == want);
      }
    }

    // kernel 2 against the naive restatement
    {
      std::vector<int32_t> slots;
      for (size_t i = 0; i < n_slots; ++i) {
        if (pick(4) != 0) slots.push_back(static_cast<int32_t>(i));
      }
      std::vector<int32_t> base(n_slots);
      for (auto& b : base) b = pick(1 << 16);
      const bool with_base = pick(3) != 0;

      std::vector<RefPoint> extras;
      for (int e = pick(6); e > 0; --e) {
        extras.push_back(RefPoint{pick(u.n_zones + 1), pick(32), pick(32)});
      }
      std::vector<int32_t> excluded;
      for (int32_t s : slots) {
        if (pick(5) == 0) excluded.push_back(s);
      }

      const NearestResult want =
          naive_nearest(u, slots, with_base ? base.data() : nullptr, extras,
                        excluded);
      const NearestResult got = ops.nearest_candidate(
          slots.data(), slots.size(), with_base ? base.data() : nullptr,
          u.ids.data(), u.zones.data(), u.aisles.data(), u.racks.data(),
          u.zone_c0.data(), u.zone_c1.data(), u.zone_c2.data(), extras.data(),
          extras.size(), excluded.data(), excluded.size());
      REQUIRE(got.dist == want.dist);
      REQUIRE(got.id == want.id);
      REQUIRE(got.slot == want.slot);
    }
  }
}

}  // namespace

TEST_SUITE("kernels") {

TEST_CASE("point distance agrees with the zone metric") {
  std::mt19937_64 rng(31);
  auto pick = [&rng](int64_t n) {
    return static_cast<int32_t>(rng() % static_cast<uint64_t>(n));
  };
  for (int i = 0; i < 500; ++i) {
    ZoneSpec z;
    z.id = 0;
    z.aisles = 1 + pick(30);
    z.racks = 2 + pick(30);
    const int32_t a = pick(z.racks);
    const int32_t b = pick(z.racks);
    z.cross_aisle_racks = {0, std::min(a, b), std::max(a, b)};
    const Location p{0, pick(z.aisles), pick(z.racks)};
    const Location q{0, pick(z.aisles), pick(z.racks)};
    const CrossAisles cross{z.cross_aisle_racks[0], z.cross_aisle_racks[1],
                            z.cross_aisle_racks[2]};
    CHECK(kernels::point_distance(p.aisle, p.rack, q.aisle, q.rack, cross) ==
          static_cast<int32_t>(distance(z, p, q)));
  }
}

TEST_CASE("scalar kernels match their contracts") {
  exercise_ops(kernels::scalar_kernels(), 32);
}

TEST_CASE("avx2 kernels are bit-identical to scalar") {
  if (!kernels::avx2_available()) {
    MESSAGE("avx2 not available on this host, variant skipped");
    return;
  }
  kernels::set_active_kernels("avx2");
  const KernelOps& ops = kernels::active_kernels();
  CHECK(std::string(ops.name) == "avx2");
  exercise_ops(ops, 33);
  exercise_ops(ops, 34);
  kernels::set_active_kernels("auto");
}

TEST_CASE("empty or fully excluded candidate list yields no slot") {
  const Universe u = [] {
    std::mt19937_64 rng(35);
    return random_universe(rng, 8);
  }();
  std::vector<int32_t> slots{0, 3, 5};
  const NearestResult none = kernels::scalar_kernels().nearest_candidate(
      slots.data(), 0, nullptr, u.ids.data(), u.zones.data(), u.aisles.data(),
      u.racks.data(), u.zone_c0.data(), u.zone_c1.data(), u.zone_c2.data(),
      nullptr, 0, nullptr, 0);
  CHECK(none.slot == -1);

  const NearestResult all_excluded = kernels::scalar_kernels().nearest_candidate(
      slots.data(), slots.size(), nullptr, u.ids.data(), u.zones.data(),
      u.aisles.data(), u.racks.data(), u.zone_c0.data(), u.zone_c1.data(),
      u.zone_c2.data(), nullptr, 0, slots.data(), slots.size());
  CHECK(all_excluded.slot == -1);
}

TEST_CASE("kernel selection by name") {
  kernels::set_active_kernels("scalar");
  CHECK(std::string(kernels::active_kernels().name) == "scalar");
  CHECK_THROWS_AS(kernels::set_active_kernels("sse9"), std::invalid_argument);
  if (!kernels::avx2_available()) {
    CHECK_THROWS_AS(kernels::set_active_kernels("avx2"), std::invalid_argument);
  }
  kernels::set_active_kernels("auto");
  if (kernels::avx2_available()) {
    CHECK(std::string(kernels::active_kernels().name) == "avx2");
  } else {
    CHECK(std::string(kernels::active_kernels().name) == "scalar");
  }
}

}  // TEST_SUITE
