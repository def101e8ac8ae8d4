#include "josabpp/io.hpp"

#include <fstream>
#include <limits>
#include <sstream>

#include "json.hpp"

namespace josabpp {

namespace {

using nlohmann::json;

// Zone dimensions are capped so every within-zone distance fits comfortably
// in int32 (max distance < aisles + 2 * racks).
constexpr int64_t kMaxZoneDim = 1'000'000;

json parse_stream(std::istream& in, const char* what) {
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw ParseError(std::string(what) + ": " + e.what());
  }
}

const json& member(const json& j, const char* key, const std::string& ctx) {
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(ctx + ": missing field '" + key + "'");
  return *it;
}

void require_object(const json& j, const std::string& ctx) {
  if (!j.is_object()) throw ParseError(ctx + ": expected an object");
}

void require_array(const json& j, const std::string& ctx) {
  if (!j.is_array()) throw ParseError(ctx + ": expected an array");
}

int64_t as_int(const json& j, const std::string& ctx) {
  if (!j.is_number_integer()) throw ParseError(ctx + ": expected an integer");
  return j.get<int64_t>();
}

int32_t as_int32(const json& j, const std::string& ctx) {
  const int64_t v = as_int(j, ctx);
  if (v < std::numeric_limits<int32_t>::min() ||
      v > std::numeric_limits<int32_t>::max()) {
    throw ParseError(ctx + ": value out of 32-bit range");
  }
  return static_cast<int32_t>(v);
}

uint64_t as_uint64(const json& j, const std::string& ctx) {
  if (j.is_number_unsigned()) return j.get<uint64_t>();
  if (j.is_number_integer()) {
    const int64_t v = j.get<int64_t>();
    if (v < 0) throw ParseError(ctx + ": expected a non-negative integer");
    return static_cast<uint64_t>(v);
  }
  throw ParseError(ctx + ": expected an integer");
}

double as_number(const json& j, const std::string& ctx) {
  if (!j.is_number()) throw ParseError(ctx + ": expected a number");
  return j.get<double>();
}

bool as_bool(const json& j, const std::string& ctx) {
  if (!j.is_boolean()) throw ParseError(ctx + ": expected a boolean");
  return j.get<bool>();
}

std::string as_string(const json& j, const std::string& ctx) {
  if (!j.is_string()) throw ParseError(ctx + ": expected a string");
  return j.get<std::string>();
}

void check_format_version(const json& j, const char* what) {
  const int64_t v = as_int(member(j, "format_version", what), "format_version");
  if (v != kFormatVersion) {
    throw ParseError(std::string(what) + ": unsupported format_version " +
                     std::to_string(v) + " (expected " +
                     std::to_string(kFormatVersion) + ")");
  }
}

std::string idx(const char* name, size_t i) {
  return std::string(name) + "[" + std::to_string(i) + "]";
}

// Collects every model-invariant problem instead of stopping at the first.
class IssueList {
 public:
  template <typename... Parts>
  void add(Parts&&... parts) {
    std::string msg;
    (msg.append(to_piece(std::forward<Parts>(parts))), ...);
    issues_.push_back(std::move(msg));
  }

  void raise_if_any() const {
    if (!issues_.empty()) throw ValidationError(issues_);
  }

 private:
  static std::string to_piece(const std::string& s) { return s; }
  static std::string to_piece(const char* s) { return s; }
  static std::string to_piece(int32_t v) { return std::to_string(v); }
  static std::string to_piece(int64_t v) { return std::to_string(v); }
  static std::string to_piece(size_t v) { return std::to_string(v); }
  static std::string to_piece(double v) {
    std::ostringstream os;
    os << v;
    return os.str();
  }

  std::vector<std::string> issues_;
};

void validate_instance(const Instance& inst) {
  IssueList issues;

  if (inst.params.item_goal < 1) {
    issues.add("params.item_goal must be >= 1, got ", inst.params.item_goal);
  }
  if (!(inst.params.picklist_volume > 0)) {
    issues.add("params.picklist_volume must be > 0, got ",
               inst.params.picklist_volume);
  }
  if (inst.params.orders_per_batch < 1) {
    issues.add("params.orders_per_batch must be >= 1, got ",
               static_cast<int64_t>(inst.params.orders_per_batch));
  }

  for (size_t i = 0; i < inst.zones.size(); ++i) {
    const ZoneSpec& z = inst.zones[i];
    if (z.id != static_cast<int32_t>(i)) {
      issues.add(idx("zones", i), ": id must be ", i, ", got ", z.id);
    }
    if (z.aisles < 1 || z.aisles > kMaxZoneDim) {
      issues.add(idx("zones", i), ": aisles must be in [1, ", kMaxZoneDim,
                 "], got ", z.aisles);
    }
    if (z.racks < 1 || z.racks > kMaxZoneDim) {
      issues.add(idx("zones", i), ": racks must be in [1, ", kMaxZoneDim,
                 "], got ", z.racks);
    }
    if (z.racks >= 1 && z.racks <= kMaxZoneDim) {
      if (z.cross_aisle_racks[0] != 0) {
        issues.add(idx("zones", i), ": cross_aisle_racks[0] must be 0, got ",
                   z.cross_aisle_racks[0]);
      }
      for (int k = 0; k < 3; ++k) {
        const int32_t c = z.cross_aisle_racks[static_cast<size_t>(k)];
        if (c < 0 || c >= z.racks) {
          issues.add(idx("zones", i), ": cross_aisle_racks[", k,
                     "] out of rack range: ", c);
        }
      }
      if (z.cross_aisle_racks[0] > z.cross_aisle_racks[1] ||
          z.cross_aisle_racks[1] > z.cross_aisle_racks[2]) {
        issues.add(idx("zones", i), ": cross_aisle_racks must be non-decreasing");
      }
    }
  }

  for (size_t i = 0; i < inst.articles.size(); ++i) {
    const Article& a = inst.articles[i];
    if (a.id != static_cast<int32_t>(i)) {
      issues.add(idx("articles", i), ": id must be ", i, ", got ", a.id);
    }
    if (!(a.volume > 0)) {
      issues.add(idx("articles", i), ": volume must be > 0, got ", a.volume);
    } else if (a.volume > inst.params.picklist_volume) {
      issues.add(idx("articles", i), ": volume ", a.volume,
                 " exceeds picklist_volume ", inst.params.picklist_volume,
                 " so the article can never be picked");
    }
  }

  const auto n_articles = static_cast<int64_t>(inst.articles.size());
  const auto n_zones = static_cast<int64_t>(inst.zones.size());
  for (size_t i = 0; i < inst.items.size(); ++i) {
    const WarehouseItem& it = inst.items[i];
    if (it.id != static_cast<int32_t>(i)) {
      issues.add(idx("items", i), ": id must be ", i, ", got ", it.id);
    }
    if (it.article < 0 || it.article >= n_articles) {
      issues.add(idx("items", i), ": unknown article ", it.article);
    }
    if (it.location.zone < 0 || it.location.zone >= n_zones) {
      issues.add(idx("items", i), ": unknown zone ", it.location.zone);
    } else {
      const ZoneSpec& z = inst.zones[static_cast<size_t>(it.location.zone)];
      if (it.location.aisle < 0 || it.location.aisle >= z.aisles) {
        issues.add(idx("items", i), ": aisle ", it.location.aisle,
                   " outside zone ", z.id);
      }
      if (it.location.rack < 0 || it.location.rack >= z.racks) {
        issues.add(idx("items", i), ": rack ", it.location.rack,
                   " outside zone ", z.id);
      }
    }
  }

  for (size_t i = 0; i < inst.orders.size(); ++i) {
    const Order& o = inst.orders[i];
    if (o.id != static_cast<int32_t>(i)) {
      issues.add(idx("orders", i), ": id must be ", i, ", got ", o.id);
    }
    if (o.articles.empty()) {
      issues.add(idx("orders", i), ": order is empty");
    }
    for (int32_t a : o.articles) {
      if (a < 0 || a >= n_articles) {
        issues.add(idx("orders", i), ": unknown article ", a);
      }
    }
  }

  // Supply must cover total demand so every order remains fully allocatable
  // no matter which orders were batched before it.
  std::vector<int64_t> demand(inst.articles.size(), 0);
  bool demand_known = true;
  for (const Order& o : inst.orders) {
    for (int32_t a : o.articles) {
      if (a < 0 || a >= n_articles) {
        demand_known = false;
      } else {
        demand[static_cast<size_t>(a)] += 1;
      }
    }
  }
  if (demand_known) {
    std::vector<int64_t> supply(inst.articles.size(), 0);
    for (const WarehouseItem& it : inst.items) {
      if (it.article >= 0 && it.article < n_articles) {
        supply[static_cast<size_t>(it.article)] += 1;
      }
    }
    for (size_t a = 0; a < demand.size(); ++a) {
      if (supply[a] < demand[a]) {
        issues.add("article ", a, ": supply ", supply[a],
                   " is below total demand ", demand[a]);
      }
    }
  }

  issues.raise_if_any();
}

json location_to_json(const Location& loc) {
  json j;
  j["zone"] = loc.zone;
  j["aisle"] = loc.aisle;
  j["rack"] = loc.rack;
  return j;
}

Location location_from_json(const json& j, const std::string& ctx) {
  require_object(j, ctx);
  Location loc;
  loc.zone = as_int32(member(j, "zone", ctx), ctx + ".zone");
  loc.aisle = as_int32(member(j, "aisle", ctx), ctx + ".aisle");
  loc.rack = as_int32(member(j, "rack", ctx), ctx + ".rack");
  return loc;
}

}  // namespace

Instance load_instance(std::istream& in) {
  const json j = parse_stream(in, "instance");
  require_object(j, "instance");
  check_format_version(j, "instance");

  Instance inst;
  inst.name = as_string(member(j, "name", "instance"), "name");

  const json& params = member(j, "params", "instance");
  require_object(params, "params");
  inst.params.item_goal = as_int(member(params, "item_goal", "params"),
                                 "params.item_goal");
  inst.params.picklist_volume =
      as_number(member(params, "picklist_volume", "params"),
                "params.picklist_volume");
  inst.params.orders_per_batch =
      as_int32(member(params, "orders_per_batch", "params"),
               "params.orders_per_batch");

  const json& zones = member(j, "zones", "instance");
  require_array(zones, "zones");
  inst.zones.reserve(zones.size());
  for (size_t i = 0; i < zones.size(); ++i) {
    const std::string ctx = idx("zones", i);
    require_object(zones[i], ctx);
    ZoneSpec z;
    z.id = as_int32(member(zones[i], "id", ctx), ctx + ".id");
    z.aisles = as_int32(member(zones[i], "aisles", ctx), ctx + ".aisles");
    z.racks = as_int32(member(zones[i], "racks", ctx), ctx + ".racks");
    const json& cross = member(zones[i], "cross_aisle_racks", ctx);
    require_array(cross, ctx + ".cross_aisle_racks");
    if (cross.size() != 3) {
      throw ParseError(ctx + ".cross_aisle_racks: expected exactly 3 entries");
    }
    for (size_t k = 0; k < 3; ++k) {
      z.cross_aisle_racks[k] =
          as_int32(cross[k], ctx + ".cross_aisle_racks[" + std::to_string(k) + "]");
    }
    inst.zones.push_back(z);
  }

  const json& articles = member(j, "articles", "instance");
  require_array(articles, "articles");
  inst.articles.reserve(articles.size());
  for (size_t i = 0; i < articles.size(); ++i) {
    const std::string ctx = idx("articles", i);
    require_object(articles[i], ctx);
    Article a;
    a.id = as_int32(member(articles[i], "id", ctx), ctx + ".id");
    a.volume = as_number(member(articles[i], "volume", ctx), ctx + ".volume");
    inst.articles.push_back(a);
  }

  const json& items = member(j, "items", "instance");
  require_array(items, "items");
  inst.items.reserve(items.size());
  for (size_t i = 0; i < items.size(); ++i) {
    const std::string ctx = idx("items", i);
    require_object(items[i], ctx);
    WarehouseItem it;
    it.id = as_int32(member(items[i], "id", ctx), ctx + ".id");
    it.article = as_int32(member(items[i], "article", ctx), ctx + ".article");
    it.location =
        location_from_json(member(items[i], "location", ctx), ctx + ".location");
    inst.items.push_back(it);
  }

  const json& orders = member(j, "orders", "instance");
  require_array(orders, "orders");
  inst.orders.reserve(orders.size());
  for (size_t i = 0; i < orders.size(); ++i) {
    const std::string ctx = idx("orders", i);
    require_object(orders[i], ctx);
    Order o;
    o.id = as_int32(member(orders[i], "id", ctx), ctx + ".id");
    const json& arts = member(orders[i], "articles", ctx);
    require_array(arts, ctx + ".articles");
    o.articles.reserve(arts.size());
    for (size_t k = 0; k < arts.size(); ++k) {
      o.articles.push_back(
          as_int32(arts[k], ctx + ".articles[" + std::to_string(k) + "]"));
    }
    inst.orders.push_back(std::move(o));
  }

  validate_instance(inst);
  return inst;
}

Instance load_instance_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open instance file: " + path.string());
  return load_instance(in);
}

std::string save_instance(const Instance& instance) {
  json j;
  j["format_version"] = kFormatVersion;
  j["name"] = instance.name;

  json params;
  params["item_goal"] = instance.params.item_goal;
  params["picklist_volume"] = instance.params.picklist_volume;
  params["orders_per_batch"] = instance.params.orders_per_batch;
  j["params"] = std::move(params);

  json zones = json::array();
  for (const ZoneSpec& z : instance.zones) {
    json zj;
    zj["id"] = z.id;
    zj["aisles"] = z.aisles;
    zj["racks"] = z.racks;
    zj["cross_aisle_racks"] = z.cross_aisle_racks;
    zones.push_back(std::move(zj));
  }
  j["zones"] = std::move(zones);

  json articles = json::array();
  for (const Article& a : instance.articles) {
    json aj;
    aj["id"] = a.id;
    aj["volume"] = a.volume;
    articles.push_back(std::move(aj));
  }
  j["articles"] = std::move(articles);

  json items = json::array();
  for (const WarehouseItem& it : instance.items) {
    json ij;
    ij["id"] = it.id;
    ij["article"] = it.article;
    ij["location"] = location_to_json(it.location);
    items.push_back(std::move(ij));
  }
  j["items"] = std::move(items);

  json orders = json::array();
  for (const Order& o : instance.orders) {
    json oj;
    oj["id"] = o.id;
    oj["articles"] = o.articles;
    orders.push_back(std::move(oj));
  }
  j["orders"] = std::move(orders);

  return j.dump(2) + "\n";
}

void save_instance_file(const Instance& instance,
                        const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot open for write: " + path.string());
  out << save_instance(instance);
  if (!out) throw ParseError("write failed: " + path.string());
}

Solution load_solution(std::istream& in) {
  const json j = parse_stream(in, "solution");
  require_object(j, "solution");
  check_format_version(j, "solution");

  Solution sol;
  sol.instance = as_string(member(j, "instance", "solution"), "instance");
  sol.algorithm = as_string(member(j, "algorithm", "solution"), "algorithm");
  if (sol.algorithm != "dga" && sol.algorithm != "rdga" &&
      sol.algorithm != "exact") {
    throw ParseError("solution.algorithm must be dga, rdga or exact, got '" +
                     sol.algorithm + "'");
  }
  sol.seed = as_uint64(member(j, "seed", "solution"), "seed");
  sol.goal_met = as_bool(member(j, "goal_met", "solution"), "goal_met");
  sol.optimal = as_bool(member(j, "optimal", "solution"), "optimal");
  sol.objective = as_number(member(j, "objective", "solution"), "objective");
  sol.pcpi = as_number(member(j, "pcpi", "solution"), "pcpi");
  sol.selected_items =
      as_int(member(j, "selected_items", "solution"), "selected_items");

  const json& batches = member(j, "batches", "solution");
  require_array(batches, "batches");
  sol.batches.reserve(batches.size());
  for (size_t b = 0; b < batches.size(); ++b) {
    const std::string bctx = idx("batches", b);
    require_object(batches[b], bctx);
    Batch batch;

    const json& orders = member(batches[b], "orders", bctx);
    require_array(orders, bctx + ".orders");
    for (size_t k = 0; k < orders.size(); ++k) {
      batch.orders.push_back(
          as_int32(orders[k], bctx + ".orders[" + std::to_string(k) + "]"));
    }

    const json& picklists = member(batches[b], "picklists", bctx);
    require_array(picklists, bctx + ".picklists");
    for (size_t p = 0; p < picklists.size(); ++p) {
      const std::string pctx = bctx + ".picklists[" + std::to_string(p) + "]";
      require_object(picklists[p], pctx);
      Picklist pl;
      pl.zone = as_int32(member(picklists[p], "zone", pctx), pctx + ".zone");
      const json& pitems = member(picklists[p], "items", pctx);
      require_array(pitems, pctx + ".items");
      for (size_t k = 0; k < pitems.size(); ++k) {
        pl.items.push_back(
            as_int32(pitems[k], pctx + ".items[" + std::to_string(k) + "]"));
      }
      batch.picklists.push_back(std::move(pl));
    }
    sol.batches.push_back(std::move(batch));
  }
  return sol;
}

Solution load_solution_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open solution file: " + path.string());
  return load_solution(in);
}

std::string save_solution(const Solution& solution) {
  json j;
  j["format_version"] = kFormatVersion;
  j["instance"] = solution.instance;
  j["algorithm"] = solution.algorithm;
  j["seed"] = solution.seed;
  j["goal_met"] = solution.goal_met;
  j["optimal"] = solution.optimal;
  j["objective"] = solution.objective;
  j["pcpi"] = solution.pcpi;
  j["selected_items"] = solution.selected_items;

  json batches = json::array();
  for (const Batch& b : solution.batches) {
    json bj;
    bj["orders"] = b.orders;
    json picklists = json::array();
    for (const Picklist& p : b.picklists) {
      json pj;
      pj["zone"] = p.zone;
      pj["items"] = p.items;
      picklists.push_back(std::move(pj));
    }
    bj["picklists"] = std::move(picklists);
    batches.push_back(std::move(bj));
  }
  j["batches"] = std::move(batches);

  return j.dump(2) + "\n";
}

void save_solution_file(const Solution& solution,
                        const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot open for write: " + path.string());
  out << save_solution(solution);
  if (!out) throw ParseError("write failed: " + path.string());
}

}  // namespace josabpp
