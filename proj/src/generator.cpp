#include "josabpp/generator.hpp"

#include <cmath>
#include <random>

namespace josabpp {

namespace {

// Uniform draw in [0, n) straight off the engine. Pinned by hand because the
// standard distributions are not bit-stable across library implementations.
uint64_t draw_mod(std::mt19937_64& rng, uint64_t n) { return rng() % n; }

// Uniform double in [0, 1) with 53 random bits.
double draw_u01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

constexpr int kMaxOrderSize = 6;

// Mean of the geometric distribution with success probability p truncated to
// {1, ..., kMaxOrderSize}. Decreasing in p; range (1, 3.5).
double truncated_geometric_mean(double p) {
  const double q = 1.0 - p;
  double mass = 0.0;
  double weighted = 0.0;
  double qe = 1.0;  // q^(k-1)
  for (int k = 1; k <= kMaxOrderSize; ++k) {
    const double pk = qe * p;
    mass += pk;
    weighted += k * pk;
    qe *= q;
  }
  return weighted / mass;
}

// cdf[k-1] = P(size <= k) for the truncated geometric calibrated to `mean`.
std::array<double, kMaxOrderSize> order_size_cdf(double mean) {
  double lo = 1e-12;  // mean -> 3.5
  double hi = 1.0 - 1e-12;  // mean -> 1
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (truncated_geometric_mean(mid) > mean) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  const double p = 0.5 * (lo + hi);
  const double q = 1.0 - p;
  double mass = 0.0;
  double qe = 1.0;
  std::array<double, kMaxOrderSize> pmf{};
  for (int k = 1; k <= kMaxOrderSize; ++k) {
    pmf[static_cast<size_t>(k - 1)] = qe * p;
    mass += qe * p;
    qe *= q;
  }
  std::array<double, kMaxOrderSize> cdf{};
  double acc = 0.0;
  for (int k = 0; k < kMaxOrderSize; ++k) {
    acc += pmf[static_cast<size_t>(k)] / mass;
    cdf[static_cast<size_t>(k)] = acc;
  }
  cdf[kMaxOrderSize - 1] = 1.0;
  return cdf;
}

int64_t round_half_up(double x) { return static_cast<int64_t>(std::floor(x + 0.5)); }

void check_params(const GenParams& p, int64_t articles) {
  std::vector<std::string> issues;
  if (p.items < 1) issues.push_back("items must be >= 1");
  if (p.orders < 1) issues.push_back("orders must be >= 1");
  if (p.zones < 1) issues.push_back("zones must be >= 1");
  if (p.racks < 1) issues.push_back("racks must be >= 1");
  if (p.aisles < 1) issues.push_back("aisles must be >= 1");
  if (articles < 1) issues.push_back("articles must be >= 1");
  if (p.volume_min < 1 || p.volume_min > p.volume_max) {
    issues.push_back("need 1 <= volume_min <= volume_max");
  }
  if (!(p.picklist_volume > 0)) issues.push_back("picklist_volume must be > 0");
  if (p.volume_max > p.picklist_volume) {
    issues.push_back("volume_max must not exceed picklist_volume");
  }
  if (p.orders_per_batch < 1) issues.push_back("orders_per_batch must be >= 1");
  if (!(p.mean_order_size > 1.0) || !(p.mean_order_size < 3.5)) {
    issues.push_back("mean_order_size must lie in (1, 3.5)");
  }
  if (!(p.ig_ratio > 0.0) || p.ig_ratio > 1.0) {
    issues.push_back("ig_ratio must lie in (0, 1]");
  }
  if (!issues.empty()) throw ValidationError(std::move(issues));
}

}  // namespace

GenParams preset_params(const std::string& preset) {
  GenParams p;
  p.name = preset;
  if (preset == "small") {
    p.items = 10'000;
    p.orders = 500;
    p.zones = 10;
  } else if (preset == "medium") {
    p.items = 100'000;
    p.orders = 5'000;
    p.zones = 50;
  } else if (preset == "large") {
    p.items = 1'000'000;
    p.orders = 50'000;
    p.zones = 100;
  } else {
    throw std::invalid_argument("unknown preset: " + preset +
                                " (expected small, medium or large)");
  }
  p.racks = 100;
  p.aisles = 100;
  return p;
}

Instance generate(const GenParams& params) {
  const int64_t n_articles =
      params.articles > 0 ? params.articles : params.items / 20;
  check_params(params, n_articles);

  std::mt19937_64 rng(params.seed);

  Instance inst;
  inst.name = params.name;
  inst.params.picklist_volume = params.picklist_volume;
  inst.params.orders_per_batch = params.orders_per_batch;

  inst.zones.reserve(static_cast<size_t>(params.zones));
  for (int32_t z = 0; z < params.zones; ++z) {
    ZoneSpec zone;
    zone.id = z;
    zone.aisles = params.aisles;
    zone.racks = params.racks;
    zone.cross_aisle_racks = {0, (params.racks - 1) / 2, params.racks - 1};
    inst.zones.push_back(zone);
  }

  // Draw order is part of the format: volumes, order sizes, order contents,
  // surplus item articles, item locations.
  const auto volume_span =
      static_cast<uint64_t>(params.volume_max - params.volume_min + 1);
  inst.articles.reserve(static_cast<size_t>(n_articles));
  for (int64_t a = 0; a < n_articles; ++a) {
    Article art;
    art.id = static_cast<int32_t>(a);
    art.volume = static_cast<double>(
        params.volume_min + static_cast<int32_t>(draw_mod(rng, volume_span)));
    inst.articles.push_back(art);
  }

  const auto cdf = order_size_cdf(params.mean_order_size);
  std::vector<int> sizes(static_cast<size_t>(params.orders));
  for (auto& s : sizes) {
    const double u = draw_u01(rng);
    int k = 1;
    while (k < kMaxOrderSize && u >= cdf[static_cast<size_t>(k - 1)]) ++k;
    s = k;
  }

  inst.orders.reserve(static_cast<size_t>(params.orders));
  for (int64_t o = 0; o < params.orders; ++o) {
    Order order;
    order.id = static_cast<int32_t>(o);
    order.articles.reserve(static_cast<size_t>(sizes[static_cast<size_t>(o)]));
    for (int k = 0; k < sizes[static_cast<size_t>(o)]; ++k) {
      order.articles.push_back(
          static_cast<int32_t>(draw_mod(rng, static_cast<uint64_t>(n_articles))));
    }
    inst.orders.push_back(std::move(order));
  }

  const std::vector<int64_t> demand = demand_profile(inst);
  int64_t total_demand = 0;
  for (int64_t d : demand) total_demand += d;
  if (total_demand > params.items) {
    throw ValidationError({"items (" + std::to_string(params.items) +
                           ") cannot cover total order articles (" +
                           std::to_string(total_demand) + ")"});
  }

  std::vector<int32_t> article_of_item;
  article_of_item.reserve(static_cast<size_t>(params.items));
  for (int64_t a = 0; a < n_articles; ++a) {
    for (int64_t c = 0; c < demand[static_cast<size_t>(a)]; ++c) {
      article_of_item.push_back(static_cast<int32_t>(a));
    }
  }
  while (static_cast<int64_t>(article_of_item.size()) < params.items) {
    article_of_item.push_back(
        static_cast<int32_t>(draw_mod(rng, static_cast<uint64_t>(n_articles))));
  }

  inst.items.reserve(static_cast<size_t>(params.items));
  for (int64_t i = 0; i < params.items; ++i) {
    WarehouseItem it;
    it.id = static_cast<int32_t>(i);
    it.article = article_of_item[static_cast<size_t>(i)];
    it.location.zone =
        static_cast<int32_t>(draw_mod(rng, static_cast<uint64_t>(params.zones)));
    it.location.aisle =
        static_cast<int32_t>(draw_mod(rng, static_cast<uint64_t>(params.aisles)));
    it.location.rack =
        static_cast<int32_t>(draw_mod(rng, static_cast<uint64_t>(params.racks)));
    inst.items.push_back(it);
  }

  inst.params.item_goal =
      std::max<int64_t>(1, round_half_up(params.ig_ratio *
                                         static_cast<double>(total_demand)));
  return inst;
}

Instance trim_order_pool(const Instance& instance, uint64_t seed) {
  std::mt19937_64 rng(seed);
  const size_t n = instance.orders.size();

  std::vector<int32_t> perm(n);
  for (size_t i = 0; i < n; ++i) perm[i] = static_cast<int32_t>(i);
  for (size_t i = n; i > 1; --i) {
    const size_t j = static_cast<size_t>(draw_mod(rng, i));
    std::swap(perm[i - 1], perm[j]);
  }

  std::vector<bool> keep(n, false);
  int64_t cum = 0;
  for (size_t k = 0; k < n && cum < instance.params.item_goal; ++k) {
    const auto oid = static_cast<size_t>(perm[k]);
    keep[oid] = true;
    cum += static_cast<int64_t>(instance.orders[oid].articles.size());
  }

  Instance out;
  out.name = instance.name;
  out.params = instance.params;
  out.zones = instance.zones;
  out.articles = instance.articles;
  out.items = instance.items;
  out.orders.reserve(n);
  for (size_t oid = 0; oid < n; ++oid) {
    if (!keep[oid]) continue;
    Order o;
    o.id = static_cast<int32_t>(out.orders.size());
    o.articles = instance.orders[oid].articles;
    out.orders.push_back(std::move(o));
  }
  return out;
}

InstanceStats instance_stats(const Instance& instance, uint64_t seed) {
  InstanceStats s;
  s.name = instance.name;
  s.seed = seed;
  s.items = static_cast<int64_t>(instance.items.size());
  s.orders = static_cast<int64_t>(instance.orders.size());
  s.zones = static_cast<int64_t>(instance.zones.size());
  for (const Order& o : instance.orders) {
    s.total_order_articles += static_cast<int64_t>(o.articles.size());
  }
  s.item_goal = instance.params.item_goal;
  return s;
}

}  // namespace josabpp
