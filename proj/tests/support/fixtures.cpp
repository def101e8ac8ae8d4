#include "support/fixtures.hpp"

#include <algorithm>
#include <utility>

#include "josabpp/picklisting.hpp"

namespace josabpp::testsupport {

ZoneSpec simple_zone(int32_t id, int32_t aisles, int32_t racks) {
  ZoneSpec z;
  z.id = id;
  z.aisles = aisles;
  z.racks = racks;
  z.cross_aisle_racks = {0, (racks - 1) / 2, racks - 1};
  return z;
}

Instance make_micro_instance() {
  Instance ins;
  ins.name = "micro";
  ins.params = InstanceParams{1, 1.0, 1};
  ins.zones.push_back(simple_zone(0, 2, 3));
  ins.articles.push_back(Article{0, 1.0});
  ins.items.push_back(WarehouseItem{0, 0, Location{0, 1, 0}});
  ins.orders.push_back(Order{0, {0}});
  return ins;
}

void annotate(const Instance& instance, Solution& solution) {
  double objective = 0.0;
  int64_t selected = 0;
  for (const Batch& b : solution.batches) {
    for (const Picklist& p : b.picklists) {
      objective += picklist_cost(instance, p);
      selected += static_cast<int64_t>(p.items.size());
    }
  }
  solution.objective = objective;
  solution.selected_items = selected;
  solution.goal_met = selected >= instance.params.item_goal;
  solution.pcpi = selected > 0 ? objective / static_cast<double>(selected) : 0.0;
}

MutationFixture make_mutation_fixture() {
  MutationFixture fx;
  Instance& ins = fx.instance;
  ins.name = "mutfix";
  ins.params = InstanceParams{5, 6.0, 2};
  ins.zones.push_back(simple_zone(0, 6, 7));
  ins.zones.push_back(simple_zone(1, 6, 7));
  ins.articles = {Article{0, 2.0}, Article{1, 3.0}, Article{2, 4.0}};
  ins.items = {
      WarehouseItem{0, 0, Location{0, 1, 1}},
      WarehouseItem{1, 0, Location{0, 2, 2}},
      WarehouseItem{2, 0, Location{1, 1, 1}},
      WarehouseItem{3, 0, Location{1, 3, 3}},
      WarehouseItem{4, 1, Location{0, 1, 2}},
      WarehouseItem{5, 1, Location{0, 4, 4}},
      WarehouseItem{6, 1, Location{1, 2, 2}},
      WarehouseItem{7, 1, Location{1, 0, 5}},
      WarehouseItem{8, 2, Location{0, 2, 1}},
      WarehouseItem{9, 2, Location{0, 5, 5}},
      WarehouseItem{10, 2, Location{1, 2, 3}},
      WarehouseItem{11, 2, Location{1, 4, 0}},
  };
  ins.orders = {Order{0, {0, 1}}, Order{1, {0, 2}}, Order{2, {1, 2}},
                Order{3, {0}}, Order{4, {1}}};

  Solution& sol = fx.base;
  sol.instance = ins.name;
  sol.algorithm = "dga";
  sol.seed = 0;
  sol.batches = {
      Batch{{0, 1}, {Picklist{0, {0, 1}}, Picklist{0, {4}}, Picklist{1, {10}}}},
      Batch{{2, 4}, {Picklist{0, {5}}, Picklist{0, {8}}, Picklist{1, {6}}}},
      Batch{{3}, {Picklist{1, {2}}}},
  };
  annotate(ins, sol);
  return fx;
}

// (2): order 3 reappears in a fresh batch, allocated to the spare copy of
// its article so every other constraint still holds.
Solution mutate_duplicate_order(const MutationFixture& fx) {
  Solution s = fx.base;
  s.batches.push_back(Batch{{3}, {Picklist{1, {3}}}});
  annotate(fx.instance, s);
  return s;
}

// (3): the second batch picks item 4, which the first batch already picked.
// Same article, same zone, same volume, so only disjointness breaks.
Solution mutate_duplicate_item(const MutationFixture& fx) {
  Solution s = fx.base;
  s.batches[1].picklists[0].items = {4};
  annotate(fx.instance, s);
  return s;
}

// (4): the third batch loses its only picklist; its order's article is now
// unpicked while the goal still holds on the remaining items.
Solution mutate_drop_item(const MutationFixture& fx) {
  Solution s = fx.base;
  s.batches[2].picklists.clear();
  annotate(fx.instance, s);
  return s;
}

// (5): item 1 (zone 0) moves into the first batch's zone-1 picklist. Volume
// still fits and the batch multiset is unchanged. Bookkeeping fields keep
// the baseline values: the recomputation is skipped over broken zones.
Solution mutate_cross_zone(const MutationFixture& fx) {
  Solution s = fx.base;
  s.batches[0].picklists[0].items = {0};
  s.batches[0].picklists[2].items = {10, 1};
  return s;
}

// (6): the first batch's two zone-0 picklists merge into one of volume 7
// against a cap of 6.
Solution mutate_overfull_picklist(const MutationFixture& fx) {
  Solution s = fx.base;
  s.batches[0].picklists[0].items = {0, 1, 4};
  s.batches[0].picklists.erase(s.batches[0].picklists.begin() + 1);
  annotate(fx.instance, s);
  return s;
}

// (7): the third batch's order and picklist fold into the second batch,
// putting 3 orders in one batch against Q = 2. Picklists as a whole are
// unchanged, so the baseline annotations stay exact.
Solution mutate_extra_order(const MutationFixture& fx) {
  Solution s = fx.base;
  s.batches[1].orders = {2, 3, 4};
  s.batches[1].picklists.push_back(fx.base.batches[2].picklists[0]);
  s.batches.erase(s.batches.begin() + 2);
  return s;
}

// (8): the first batch disappears, dropping the selection to 4 items
// against a goal of 5 while orders 0 and 1 sit unused in the pool.
Solution mutate_drop_batch(const MutationFixture& fx) {
  Solution s = fx.base;
  s.batches.erase(s.batches.begin());
  annotate(fx.instance, s);
  return s;
}

Instance make_tiny_instance(std::mt19937_64& rng) {
  auto pick = [&rng](int64_t n) {
    return static_cast<int32_t>(rng() % static_cast<uint64_t>(n));
  };

  Instance ins;
  ins.name = "tiny";
  const int32_t n_zones = 1 + pick(2);
  for (int32_t z = 0; z < n_zones; ++z) {
    ins.zones.push_back(simple_zone(z, 3 + pick(3), 3 + pick(3)));
  }
  const int32_t n_articles = 2 + pick(3);
  for (int32_t a = 0; a < n_articles; ++a) {
    ins.articles.push_back(Article{a, static_cast<double>(1 + pick(3))});
  }
  ins.params.picklist_volume = static_cast<double>(4 + pick(3));
  ins.params.orders_per_batch = 1 + pick(3);

  const int32_t n_orders = 3 + pick(3);
  int64_t total = 0;
  for (int32_t o = 0; o < n_orders && total < 10; ++o) {
    Order order;
    order.id = o;
    const auto size = std::min<int64_t>(1 + pick(3), 10 - total);
    for (int64_t k = 0; k < size; ++k) {
      order.articles.push_back(pick(n_articles));
    }
    total += size;
    ins.orders.push_back(std::move(order));
  }

  std::vector<int32_t> article_of;
  const auto demand = demand_profile(ins);
  for (int32_t a = 0; a < n_articles; ++a) {
    for (int64_t k = 0; k < demand[static_cast<size_t>(a)]; ++k) {
      article_of.push_back(a);
    }
  }
  const auto surplus_cap = 14 - static_cast<int64_t>(article_of.size());
  for (int64_t k = pick(surplus_cap + 1); k > 0; --k) {
    article_of.push_back(pick(n_articles));
  }
  for (size_t i = 0; i < article_of.size(); ++i) {
    const ZoneSpec& z = ins.zones[static_cast<size_t>(pick(n_zones))];
    ins.items.push_back(WarehouseItem{
        static_cast<int32_t>(i), article_of[i],
        Location{z.id, pick(z.aisles), pick(z.racks)}});
  }

  if (pick(8) == 0) {
    ins.params.item_goal = total + 1 + pick(3);  // unreachable on purpose
  } else {
    ins.params.item_goal = 1 + pick(total);
  }
  return ins;
}

Instance make_mini_instance(std::mt19937_64& rng) {
  auto pick = [&rng](int64_t n) {
    return static_cast<int32_t>(rng() % static_cast<uint64_t>(n));
  };

  Instance ins;
  ins.name = "mini";
  const int32_t n_zones = 2 + pick(2);
  for (int32_t z = 0; z < n_zones; ++z) {
    ins.zones.push_back(simple_zone(z, 6 + pick(5), 6 + pick(5)));
  }
  const int32_t n_articles = 8 + pick(5);
  for (int32_t a = 0; a < n_articles; ++a) {
    ins.articles.push_back(Article{a, static_cast<double>(1 + pick(4))});
  }
  ins.params.picklist_volume = static_cast<double>(8 + pick(5));
  ins.params.orders_per_batch = 3 + pick(4);

  const int32_t n_orders = 20 + pick(21);
  int64_t total = 0;
  for (int32_t o = 0; o < n_orders; ++o) {
    Order order;
    order.id = o;
    const int32_t size = 1 + pick(4);
    for (int32_t k = 0; k < size; ++k) {
      order.articles.push_back(pick(n_articles));
    }
    total += size;
    ins.orders.push_back(std::move(order));
  }

  std::vector<int32_t> article_of;
  const auto demand = demand_profile(ins);
  for (int32_t a = 0; a < n_articles; ++a) {
    for (int64_t k = 0; k < demand[static_cast<size_t>(a)]; ++k) {
      article_of.push_back(a);
    }
  }
  for (int64_t k = total + pick(total + 1); k > 0; --k) {
    article_of.push_back(pick(n_articles));
  }
  for (size_t i = 0; i < article_of.size(); ++i) {
    const ZoneSpec& z = ins.zones[static_cast<size_t>(pick(n_zones))];
    ins.items.push_back(WarehouseItem{
        static_cast<int32_t>(i), article_of[i],
        Location{z.id, pick(z.aisles), pick(z.racks)}});
  }

  ins.params.item_goal = std::max<int64_t>(1, (total * 2) / 5);
  return ins;
}

}  // namespace josabpp::testsupport
