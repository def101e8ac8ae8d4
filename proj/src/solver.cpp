#include "josabpp/solver.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "josabpp/kernels.hpp"
#include "josabpp/picklisting.hpp"

namespace josabpp {

std::string algorithm_name(Algorithm a) {
  switch (a) {
    case Algorithm::DGA:
      return "dga";
    case Algorithm::RDGA:
      return "rdga";
  }
  throw std::invalid_argument("unknown algorithm value");
}

Algorithm parse_algorithm(const std::string& name) {
  if (name == "dga") return Algorithm::DGA;
  if (name == "rdga") return Algorithm::RDGA;
  throw std::invalid_argument("unknown algorithm: " + name +
                              " (expected dga or rdga)");
}

namespace {

using kernels::KernelOps;
using kernels::NearestResult;
using kernels::RefPoint;

// Warehouse items flattened into "slots" sorted by (zone, id): SoA coordinate
// arrays the kernels can stream, contiguous per-zone ranges, and per-article
// availability lists maintained under O(1) removal.
struct SlotIndex {
  std::vector<int32_t> id_by_slot;
  std::vector<int32_t> article_by_slot;
  std::vector<int32_t> zone_by_slot;
  std::vector<int32_t> aisle_by_slot;
  std::vector<int32_t> rack_by_slot;
  std::vector<int32_t> zone_c0, zone_c1, zone_c2;
  std::vector<std::pair<int32_t, int32_t>> zone_range;  // [begin, end) per zone
  std::vector<std::vector<int32_t>> avail;              // article -> slots
  std::vector<int32_t> pos_in_avail;                    // slot -> index, -1 gone

  void consume(int32_t slot) {
    auto& list = avail[static_cast<size_t>(article_by_slot[slot])];
    const int32_t p = pos_in_avail[slot];
    const int32_t moved = list.back();
    list[static_cast<size_t>(p)] = moved;
    pos_in_avail[moved] = p;
    list.pop_back();
    pos_in_avail[slot] = -1;
  }
};

SlotIndex build_index(const Instance& inst) {
  const size_t n = inst.items.size();
  SlotIndex ix;

  std::vector<int32_t> by_slot(n);
  for (size_t i = 0; i < n; ++i) by_slot[i] = static_cast<int32_t>(i);
  std::sort(by_slot.begin(), by_slot.end(), [&](int32_t a, int32_t b) {
    const int32_t za = inst.items[static_cast<size_t>(a)].location.zone;
    const int32_t zb = inst.items[static_cast<size_t>(b)].location.zone;
    if (za != zb) return za < zb;
    return a < b;
  });

  ix.id_by_slot.resize(n);
  ix.article_by_slot.resize(n);
  ix.zone_by_slot.resize(n);
  ix.aisle_by_slot.resize(n);
  ix.rack_by_slot.resize(n);
  for (size_t s = 0; s < n; ++s) {
    const WarehouseItem& it = inst.items[static_cast<size_t>(by_slot[s])];
    ix.id_by_slot[s] = it.id;
    ix.article_by_slot[s] = it.article;
    ix.zone_by_slot[s] = it.location.zone;
    ix.aisle_by_slot[s] = it.location.aisle;
    ix.rack_by_slot[s] = it.location.rack;
  }

  ix.zone_range.assign(inst.zones.size(), {0, 0});
  {
    size_t s = 0;
    for (size_t z = 0; z < inst.zones.size(); ++z) {
      const auto begin = static_cast<int32_t>(s);
      while (s < n && ix.zone_by_slot[s] == static_cast<int32_t>(z)) ++s;
      ix.zone_range[z] = {begin, static_cast<int32_t>(s)};
    }
  }

  ix.zone_c0.resize(inst.zones.size());
  ix.zone_c1.resize(inst.zones.size());
  ix.zone_c2.resize(inst.zones.size());
  for (size_t z = 0; z < inst.zones.size(); ++z) {
    ix.zone_c0[z] = inst.zones[z].cross_aisle_racks[0];
    ix.zone_c1[z] = inst.zones[z].cross_aisle_racks[1];
    ix.zone_c2[z] = inst.zones[z].cross_aisle_racks[2];
  }

  ix.avail.assign(inst.articles.size(), {});
  ix.pos_in_avail.assign(n, -1);
  for (size_t s = 0; s < n; ++s) {
    auto& list = ix.avail[static_cast<size_t>(ix.article_by_slot[s])];
    ix.pos_in_avail[s] = static_cast<int32_t>(list.size());
    list.push_back(static_cast<int32_t>(s));
  }
  return ix;
}

struct OrderAllocation {
  std::vector<int32_t> items;  // item ids, one per article occurrence
  std::vector<int32_t> slots;
  int64_t dist = 0;
};

// Allocates one item per article occurrence: each occurrence takes the
// available item nearest to the reference set (base table and/or `refs`),
// ties to the lowest item id, and the pick itself joins the references for
// the following occurrences. `refs` is restored to its entry size.
OrderAllocation allocate_order(const SlotIndex& ix, const KernelOps& ops,
                               const Order& order, const int32_t* base_dist,
                               std::vector<RefPoint>& refs,
                               std::vector<int32_t>& excluded) {
  const size_t ref_base = refs.size();
  excluded.clear();

  OrderAllocation a;
  a.items.reserve(order.articles.size());
  a.slots.reserve(order.articles.size());
  for (int32_t article : order.articles) {
    const auto& cands = ix.avail[static_cast<size_t>(article)];
    const NearestResult r = ops.nearest_candidate(
        cands.data(), cands.size(), base_dist, ix.id_by_slot.data(),
        ix.zone_by_slot.data(), ix.aisle_by_slot.data(), ix.rack_by_slot.data(),
        ix.zone_c0.data(), ix.zone_c1.data(), ix.zone_c2.data(), refs.data(),
        refs.size(), excluded.data(), excluded.size());
    if (r.slot < 0) {
      refs.resize(ref_base);
      throw std::logic_error("order " + std::to_string(order.id) +
                             ": no available item for article " +
                             std::to_string(article));
    }
    a.dist += r.dist;
    a.items.push_back(r.id);
    a.slots.push_back(r.slot);
    excluded.push_back(r.slot);
    refs.push_back(RefPoint{ix.zone_by_slot[r.slot], ix.aisle_by_slot[r.slot],
                            ix.rack_by_slot[r.slot]});
  }
  refs.resize(ref_base);
  return a;
}

// d_new / n_new < d_best / n_best, exactly, in integers.
bool strictly_better(int64_t d_new, size_t n_new, int64_t d_best,
                     size_t n_best) {
  return d_new * static_cast<int64_t>(n_best) <
         d_best * static_cast<int64_t>(n_new);
}

}  // namespace

Solution solve(const Instance& instance, const SolverConfig& config,
               const BestOrderObserver& observer) {
  for (const Order& o : instance.orders) {
    if (o.articles.empty()) {
      throw std::invalid_argument("order " + std::to_string(o.id) +
                                  " is empty");
    }
  }

  SlotIndex ix = build_index(instance);
  const KernelOps& ops = kernels::active_kernels();
  const size_t n_slots = instance.items.size();
  const size_t n_zones = instance.zones.size();

  std::vector<int32_t> pool(instance.orders.size());
  for (size_t i = 0; i < pool.size(); ++i) pool[i] = static_cast<int32_t>(i);

  int64_t remaining_goal = instance.params.item_goal;
  std::mt19937_64 rng(config.seed);

  Solution sol;
  sol.instance = instance.name;
  sol.algorithm = algorithm_name(config.algorithm);
  sol.seed = config.seed;

  // Per-zone coordinates of the items already committed to the open batch;
  // index 0 of the scratch ref arrays is always the zone depot.
  std::vector<std::vector<int32_t>> s_aisles(n_zones), s_racks(n_zones);
  std::vector<int32_t> base_dist(n_slots);
  std::vector<RefPoint> refs;
  std::vector<int32_t> excluded;
  std::vector<int32_t> ref_aisles, ref_racks;

  const bool is_dga = config.algorithm == Algorithm::DGA;
  const auto q = static_cast<size_t>(instance.params.orders_per_batch);

  while (remaining_goal > 0 && !pool.empty()) {
    std::vector<int32_t> batch_orders;
    std::vector<int32_t> batch_items;  // S, in allocation order
    for (auto& v : s_aisles) v.clear();
    for (auto& v : s_racks) v.clear();
    refs.clear();
    if (!is_dga) {
      for (size_t z = 0; z < n_zones; ++z) {
        refs.push_back(RefPoint{static_cast<int32_t>(z), 0, 0});
      }
    }

    while (batch_orders.size() < q && !pool.empty() &&
           static_cast<int64_t>(batch_items.size()) < remaining_goal) {
      int32_t chosen = -1;
      OrderAllocation chosen_alloc;

      if (is_dga) {
        // base_dist[slot] = distance to the nearest of S and the own-zone
        // depot; fixed while the pool is scanned.
        for (size_t z = 0; z < n_zones; ++z) {
          const auto [begin, end] = ix.zone_range[z];
          if (begin == end) continue;
          ref_aisles.assign(1, 0);
          ref_racks.assign(1, 0);
          ref_aisles.insert(ref_aisles.end(), s_aisles[z].begin(), s_aisles[z].end());
          ref_racks.insert(ref_racks.end(), s_racks[z].begin(), s_racks[z].end());
          ops.min_dist_over_refs(
              ix.aisle_by_slot.data() + begin, ix.rack_by_slot.data() + begin,
              static_cast<size_t>(end - begin), ref_aisles.data(),
              ref_racks.data(), ref_aisles.size(),
              kernels::CrossAisles{ix.zone_c0[z], ix.zone_c1[z], ix.zone_c2[z]},
              base_dist.data() + begin);
        }

        int64_t best_d = 0;
        size_t best_n = 0;
        for (int32_t oid : pool) {
          OrderAllocation a =
              allocate_order(ix, ops, instance.orders[static_cast<size_t>(oid)],
                             base_dist.data(), refs, excluded);
          if (best_n == 0 ||
              strictly_better(a.dist, a.items.size(), best_d, best_n)) {
            best_d = a.dist;
            best_n = a.items.size();
            chosen = oid;
            chosen_alloc = std::move(a);
          }
        }
        if (observer) {
          observer(instance,
                   BestOrderStep{std::span<const int32_t>(pool),
                                 std::span<const int32_t>(batch_items),
                                 remaining_goal, chosen,
                                 std::span<const int32_t>(chosen_alloc.items),
                                 chosen_alloc.dist});
        }
      } else {
        const size_t k = static_cast<size_t>(rng() % pool.size());
        chosen = pool[k];
        chosen_alloc =
            allocate_order(ix, ops, instance.orders[static_cast<size_t>(chosen)],
                           nullptr, refs, excluded);
      }

      batch_orders.push_back(chosen);
      pool.erase(std::lower_bound(pool.begin(), pool.end(), chosen));
      for (size_t i = 0; i < chosen_alloc.slots.size(); ++i) {
        const int32_t slot = chosen_alloc.slots[i];
        const auto z = static_cast<size_t>(ix.zone_by_slot[slot]);
        s_aisles[z].push_back(ix.aisle_by_slot[slot]);
        s_racks[z].push_back(ix.rack_by_slot[slot]);
        if (!is_dga) {
          refs.push_back(RefPoint{ix.zone_by_slot[slot], ix.aisle_by_slot[slot],
                                  ix.rack_by_slot[slot]});
        }
        batch_items.push_back(chosen_alloc.items[i]);
        ix.consume(slot);
      }
    }

    Batch batch;
    batch.orders = std::move(batch_orders);
    std::sort(batch.orders.begin(), batch.orders.end());
    batch.picklists = compute_picklists(instance, batch_items);
    sol.batches.push_back(std::move(batch));
    remaining_goal -= static_cast<int64_t>(batch_items.size());
  }

  double objective = 0.0;
  int64_t selected = 0;
  for (const Batch& b : sol.batches) {
    for (const Picklist& p : b.picklists) {
      objective += picklist_cost(instance, p);
      selected += static_cast<int64_t>(p.items.size());
    }
  }
  sol.objective = objective;
  sol.selected_items = selected;
  sol.goal_met = selected >= instance.params.item_goal;
  sol.pcpi = selected > 0 ? objective / static_cast<double>(selected) : 0.0;
  sol.optimal = false;
  return sol;
}

}  // namespace josabpp
