#include "josabpp/types.hpp"

namespace josabpp {

std::vector<int64_t> demand_profile(const Instance& instance) {
  std::vector<int64_t> demand(instance.articles.size(), 0);
  for (const Order& order : instance.orders) {
    for (int32_t article : order.articles) {
      demand.at(static_cast<size_t>(article)) += 1;
    }
  }
  return demand;
}

}  // namespace josabpp
