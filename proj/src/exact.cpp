#include "josabpp/exact.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <map>
#include <string>
#include <vector>

#include "josabpp/io.hpp"
#include "josabpp/kernels.hpp"

namespace josabpp {

namespace {

constexpr int64_t kInf = std::numeric_limits<int64_t>::max() / 4;

// Exhaustive per-zone tables over the zone's item set (at most 14 items in
// total across all zones, so every mask fits comfortably):
//   tour[mask]  cost of the optimal depot -> mask -> depot visiting order
//   part[mask]  cost of the optimal split of mask into picklists <= V,
//               each block costed with its optimal tour
// plus enough bookkeeping to reconstruct both choices deterministically.
struct ZoneTable {
  std::vector<int32_t> ids;  // item ids in this zone, ascending
  std::vector<double> vol;   // summed volume per mask
  std::vector<int64_t> tour;
  std::vector<int8_t> best_last;
  std::vector<int8_t> parent;  // parent[mask * m + last]
  std::vector<int64_t> part;
  std::vector<int32_t> choice;  // first block of the optimal split
};

ZoneTable build_zone_table(const Instance& inst, const ZoneSpec& zone,
                           std::vector<int32_t> ids) {
  ZoneTable t;
  t.ids = std::move(ids);
  const int m = static_cast<int>(t.ids.size());
  const size_t n_masks = size_t{1} << m;
  const kernels::CrossAisles cross{zone.cross_aisle_racks[0],
                                   zone.cross_aisle_racks[1],
                                   zone.cross_aisle_racks[2]};

  std::vector<int64_t> depot_d(static_cast<size_t>(m));
  std::vector<int64_t> d(static_cast<size_t>(m) * static_cast<size_t>(m));
  std::vector<double> volume(static_cast<size_t>(m));
  for (int i = 0; i < m; ++i) {
    const WarehouseItem& a = inst.items[static_cast<size_t>(t.ids[static_cast<size_t>(i)])];
    depot_d[static_cast<size_t>(i)] = kernels::point_distance(
        0, 0, a.location.aisle, a.location.rack, cross);
    volume[static_cast<size_t>(i)] =
        inst.articles[static_cast<size_t>(a.article)].volume;
    for (int j = 0; j < m; ++j) {
      const WarehouseItem& b =
          inst.items[static_cast<size_t>(t.ids[static_cast<size_t>(j)])];
      d[static_cast<size_t>(i) * static_cast<size_t>(m) + static_cast<size_t>(j)] =
          kernels::point_distance(a.location.aisle, a.location.rack,
                                  b.location.aisle, b.location.rack, cross);
    }
  }

  t.vol.assign(n_masks, 0.0);
  for (size_t mask = 1; mask < n_masks; ++mask) {
    const int low = std::countr_zero(mask);
    t.vol[mask] = t.vol[mask & (mask - 1)] + volume[static_cast<size_t>(low)];
  }

  // Held-Karp over all masks at once.
  std::vector<int64_t> dp(n_masks * static_cast<size_t>(m), kInf);
  t.parent.assign(n_masks * static_cast<size_t>(m), -1);
  for (int i = 0; i < m; ++i) {
    dp[(size_t{1} << i) * static_cast<size_t>(m) + static_cast<size_t>(i)] =
        depot_d[static_cast<size_t>(i)];
  }
  for (size_t mask = 1; mask < n_masks; ++mask) {
    for (int last = 0; last < m; ++last) {
      const int64_t cur = dp[mask * static_cast<size_t>(m) + static_cast<size_t>(last)];
      if (cur >= kInf || !(mask >> last & 1)) continue;
      for (int nxt = 0; nxt < m; ++nxt) {
        if (mask >> nxt & 1) continue;
        const size_t nmask = mask | (size_t{1} << nxt);
        const int64_t cand =
            cur + d[static_cast<size_t>(last) * static_cast<size_t>(m) +
                    static_cast<size_t>(nxt)];
        int64_t& slot = dp[nmask * static_cast<size_t>(m) + static_cast<size_t>(nxt)];
        if (cand < slot) {
          slot = cand;
          t.parent[nmask * static_cast<size_t>(m) + static_cast<size_t>(nxt)] =
              static_cast<int8_t>(last);
        }
      }
    }
  }

  t.tour.assign(n_masks, kInf);
  t.best_last.assign(n_masks, -1);
  t.tour[0] = 0;
  for (size_t mask = 1; mask < n_masks; ++mask) {
    for (int last = 0; last < m; ++last) {
      if (!(mask >> last & 1)) continue;
      const int64_t cur =
          dp[mask * static_cast<size_t>(m) + static_cast<size_t>(last)];
      if (cur >= kInf) continue;
      const int64_t total = cur + depot_d[static_cast<size_t>(last)];
      if (total < t.tour[mask]) {
        t.tour[mask] = total;
        t.best_last[mask] = static_cast<int8_t>(last);
      }
    }
  }

  // Optimal picklist split per mask.
  t.part.assign(n_masks, kInf);
  t.choice.assign(n_masks, 0);
  t.part[0] = 0;
  const double cap = inst.params.picklist_volume + 1e-9;
  for (size_t mask = 1; mask < n_masks; ++mask) {
    for (size_t s = mask; s != 0; s = (s - 1) & mask) {
      if (t.vol[s] > cap || t.part[mask ^ s] >= kInf) continue;
      const int64_t cand = t.tour[s] + t.part[mask ^ s];
      if (cand < t.part[mask]) {
        t.part[mask] = cand;
        t.choice[mask] = static_cast<int32_t>(s);
      }
    }
  }

  // Keep dp for tour reconstruction.
  t.parent.shrink_to_fit();
  return t;
}

// Visiting order of the optimal tour over `mask`, as positions into ids.
std::vector<int> reconstruct_tour(const ZoneTable& t, size_t mask) {
  const int m = static_cast<int>(t.ids.size());
  std::vector<int> seq;
  int last = t.best_last[mask];
  size_t cur = mask;
  while (cur != 0) {
    seq.push_back(last);
    const int prev =
        t.parent[cur * static_cast<size_t>(m) + static_cast<size_t>(last)];
    cur ^= size_t{1} << last;
    last = prev;
  }
  std::reverse(seq.begin(), seq.end());
  return seq;
}

struct Enumerator {
  const Instance& inst;
  const std::vector<ZoneTable>& tables;
  const std::vector<int32_t>& zone_of_item;  // item id -> zone
  const std::vector<int>& bit_of_item;       // item id -> bit in its zone

  std::vector<std::vector<int32_t>> blocks;      // current partition (order ids)
  std::vector<std::vector<int32_t>> block_items; // chosen item ids per block
  std::vector<int64_t> block_cost;
  std::vector<std::vector<int32_t>> avail;       // article -> free item ids asc
  int64_t partial_cost = 0;

  int64_t best_cost = kInf;
  bool have_best = false;
  Solution best;
  std::string best_serial;

  explicit Enumerator(const Instance& i, const std::vector<ZoneTable>& t,
                      const std::vector<int32_t>& z, const std::vector<int>& b)
      : inst(i), tables(t), zone_of_item(z), bit_of_item(b) {
    avail.assign(inst.articles.size(), {});
    for (const WarehouseItem& it : inst.items) {
      avail[static_cast<size_t>(it.article)].push_back(it.id);
    }
  }

  int64_t batch_cost(const std::vector<int32_t>& items) const {
    std::map<int32_t, size_t> mask_by_zone;
    for (int32_t id : items) {
      mask_by_zone[zone_of_item[static_cast<size_t>(id)]] |=
          size_t{1} << bit_of_item[static_cast<size_t>(id)];
    }
    int64_t cost = 0;
    for (const auto& [zone, mask] : mask_by_zone) {
      const int64_t c = tables[static_cast<size_t>(zone)].part[mask];
      if (c >= kInf) return kInf;
      cost += c;
    }
    return cost;
  }

  std::vector<Picklist> batch_picklists(const std::vector<int32_t>& items) const {
    std::map<int32_t, size_t> mask_by_zone;
    for (int32_t id : items) {
      mask_by_zone[zone_of_item[static_cast<size_t>(id)]] |=
          size_t{1} << bit_of_item[static_cast<size_t>(id)];
    }
    std::vector<Picklist> lists;
    for (const auto& [zone, mask] : mask_by_zone) {
      const ZoneTable& t = tables[static_cast<size_t>(zone)];
      size_t rest = mask;
      std::vector<Picklist> zone_lists;
      while (rest != 0) {
        const auto block = static_cast<size_t>(t.choice[rest]);
        Picklist p;
        p.zone = zone;
        for (int pos : reconstruct_tour(t, block)) {
          p.items.push_back(t.ids[static_cast<size_t>(pos)]);
        }
        zone_lists.push_back(std::move(p));
        rest ^= block;
      }
      std::sort(zone_lists.begin(), zone_lists.end(),
                [](const Picklist& a, const Picklist& b) {
                  return *std::min_element(a.items.begin(), a.items.end()) <
                         *std::min_element(b.items.begin(), b.items.end());
                });
      for (auto& p : zone_lists) lists.push_back(std::move(p));
    }
    return lists;
  }

  void record_candidate() {
    if (have_best && partial_cost > best_cost) return;
    int64_t selected = 0;
    for (const auto& items : block_items) {
      selected += static_cast<int64_t>(items.size());
    }

    Solution cand;
    cand.instance = inst.name;
    cand.algorithm = "exact";
    cand.seed = 0;
    cand.optimal = true;
    cand.selected_items = selected;
    cand.goal_met = selected >= inst.params.item_goal;
    cand.objective = static_cast<double>(partial_cost);
    cand.pcpi = selected > 0
                    ? cand.objective / static_cast<double>(selected)
                    : 0.0;
    for (size_t b = 0; b < blocks.size(); ++b) {
      Batch batch;
      batch.orders = blocks[b];
      batch.picklists = batch_picklists(block_items[b]);
      cand.batches.push_back(std::move(batch));
    }

    if (!have_best || partial_cost < best_cost) {
      best_cost = partial_cost;
      best = std::move(cand);
      best_serial.clear();  // lazily filled on the first tie
      have_best = true;
      return;
    }
    // Equal cost: keep the lexicographically smaller canonical form.
    if (best_serial.empty()) best_serial = save_solution(best);
    std::string serial = save_solution(cand);
    if (serial < best_serial) {
      best = std::move(cand);
      best_serial = std::move(serial);
    }
  }

  // Chooses items for blocks[bi] article by article, then recurses into the
  // next block. Combinations are enumerated in ascending item-id order.
  void assign_block(size_t bi) {
    if (bi == blocks.size()) {
      record_candidate();
      return;
    }
    std::map<int32_t, int> demand;
    for (int32_t oid : blocks[bi]) {
      for (int32_t a : inst.orders[static_cast<size_t>(oid)].articles) {
        demand[a] += 1;
      }
    }
    std::vector<std::pair<int32_t, int>> wants(demand.begin(), demand.end());
    std::vector<int32_t> chosen;
    assign_article(bi, wants, 0, chosen);
  }

  void assign_article(size_t bi, const std::vector<std::pair<int32_t, int>>& wants,
                      size_t wi, std::vector<int32_t>& chosen) {
    if (wi == wants.size()) {
      const int64_t cost = batch_cost(chosen);
      if (cost >= kInf) return;
      // Strictly worse than the incumbent is pruned; equal cost continues so
      // the serialization tie-break sees every candidate.
      if (have_best && partial_cost + cost > best_cost) return;

      block_items[bi] = chosen;
      partial_cost += cost;
      struct Removed {
        int32_t article;
        size_t index;
        int32_t id;
      };
      std::vector<Removed> removed;
      removed.reserve(chosen.size());
      for (int32_t id : chosen) {
        const int32_t article = inst.items[static_cast<size_t>(id)].article;
        auto& list = avail[static_cast<size_t>(article)];
        const auto it = std::find(list.begin(), list.end(), id);
        removed.push_back(
            Removed{article, static_cast<size_t>(it - list.begin()), id});
        list.erase(it);
      }
      assign_block(bi + 1);
      for (auto rit = removed.rbegin(); rit != removed.rend(); ++rit) {
        auto& list = avail[static_cast<size_t>(rit->article)];
        list.insert(list.begin() + static_cast<ptrdiff_t>(rit->index), rit->id);
      }
      partial_cost -= cost;
      return;
    }
    const auto& [article, count] = wants[wi];
    const auto& list = avail[static_cast<size_t>(article)];
    // Choose `count` ids out of `list`, lexicographically.
    std::vector<size_t> pick;
    choose_combination(bi, wants, wi, list, static_cast<size_t>(count), 0, pick,
                       chosen);
  }

  void choose_combination(size_t bi,
                          const std::vector<std::pair<int32_t, int>>& wants,
                          size_t wi, const std::vector<int32_t>& list,
                          size_t count, size_t from, std::vector<size_t>& pick,
                          std::vector<int32_t>& chosen) {
    if (pick.size() == count) {
      const size_t base = chosen.size();
      for (size_t idx : pick) chosen.push_back(list[idx]);
      assign_article(bi, wants, wi + 1, chosen);
      chosen.resize(base);
      return;
    }
    const size_t need = count - pick.size();
    for (size_t i = from; i + need <= list.size(); ++i) {
      pick.push_back(i);
      choose_combination(bi, wants, wi, list, count, i + 1, pick, chosen);
      pick.pop_back();
    }
  }

  // Set partitions of `order_ids` into blocks of at most Q orders. Each
  // order goes into an existing block or opens a new one, which enumerates
  // every partition exactly once; block order follows minimal elements.
  void partition_orders(const std::vector<int32_t>& order_ids, size_t next) {
    if (next == order_ids.size()) {
      block_items.assign(blocks.size(), {});
      assign_block(0);
      return;
    }
    const int32_t oid = order_ids[next];
    const auto q = static_cast<size_t>(inst.params.orders_per_batch);
    for (auto& block : blocks) {
      if (block.size() >= q) continue;
      block.push_back(oid);
      partition_orders(order_ids, next + 1);
      block.pop_back();
    }
    blocks.emplace_back(1, oid);
    partition_orders(order_ids, next + 1);
    blocks.pop_back();
  }
};

}  // namespace

Solution exact_solve(const Instance& instance, const ExactLimits& limits) {
  int64_t total_order_articles = 0;
  for (const Order& o : instance.orders) {
    if (o.articles.empty()) {
      throw std::invalid_argument("order " + std::to_string(o.id) +
                                  " is empty");
    }
    total_order_articles += static_cast<int64_t>(o.articles.size());
  }
  const auto n_items = static_cast<int64_t>(instance.items.size());
  if (total_order_articles > limits.max_total_order_articles ||
      n_items > limits.max_items) {
    throw ExactLimitError(
        "instance too large for exhaustive search: " +
            std::to_string(total_order_articles) + " order articles (limit " +
            std::to_string(limits.max_total_order_articles) + "), " +
            std::to_string(n_items) + " items (limit " +
            std::to_string(limits.max_items) + ")",
        total_order_articles, n_items);
  }

  std::vector<int32_t> zone_of_item(instance.items.size());
  std::vector<int> bit_of_item(instance.items.size());
  std::vector<std::vector<int32_t>> zone_items(instance.zones.size());
  for (const WarehouseItem& it : instance.items) {
    zone_of_item[static_cast<size_t>(it.id)] = it.location.zone;
    auto& ids = zone_items[static_cast<size_t>(it.location.zone)];
    bit_of_item[static_cast<size_t>(it.id)] = static_cast<int>(ids.size());
    ids.push_back(it.id);
  }
  std::vector<ZoneTable> tables;
  tables.reserve(instance.zones.size());
  for (size_t z = 0; z < instance.zones.size(); ++z) {
    tables.push_back(
        build_zone_table(instance, instance.zones[z], std::move(zone_items[z])));
  }

  Enumerator en(instance, tables, zone_of_item, bit_of_item);

  const size_t n = instance.orders.size();
  std::vector<int64_t> subset_articles(size_t{1} << n, 0);
  bool any_meets_goal = false;
  for (size_t mask = 1; mask < (size_t{1} << n); ++mask) {
    const int low = std::countr_zero(mask);
    subset_articles[mask] =
        subset_articles[mask & (mask - 1)] +
        static_cast<int64_t>(
            instance.orders[static_cast<size_t>(low)].articles.size());
    if (subset_articles[mask] >= instance.params.item_goal) {
      any_meets_goal = true;
    }
  }

  for (size_t mask = 0; mask < (size_t{1} << n); ++mask) {
    const bool admissible =
        any_meets_goal ? subset_articles[mask] >= instance.params.item_goal
                       : mask + 1 == (size_t{1} << n);
    if (!admissible) continue;
    std::vector<int32_t> order_ids;
    for (size_t i = 0; i < n; ++i) {
      if (mask >> i & 1) order_ids.push_back(static_cast<int32_t>(i));
    }
    en.partition_orders(order_ids, 0);
  }

  if (!en.have_best) {
    // Only reachable with an empty order pool: the empty selection.
    Solution sol;
    sol.instance = instance.name;
    sol.algorithm = "exact";
    sol.optimal = true;
    sol.goal_met = instance.params.item_goal <= 0;
    return sol;
  }
  return en.best;
}

}  // namespace josabpp
