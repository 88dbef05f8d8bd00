#include "lexfair/search.hpp"

#include <algorithm>

#include "enum_util.hpp"
#include "lexfair/efficiency.hpp"
#include "lexfair/fairness.hpp"
#include "lexfair/prefs.hpp"

namespace lexfair {

std::optional<Allocation> exists_allocation(const Instance& instance,
                                            const PropertyQuery& query) {
  const int n = instance.agent_count();
  const int m = instance.item_count();
  if (query.properties.empty())
    throw Error(ErrorCode::UsageError, "search needs at least one property");

  // Dedup, then order cheap checks before the exhaustive Pareto one.
  std::vector<Property> cheap;
  bool want_po = false;
  bool want_rm = false;
  for (Property p : query.properties) {
    if (p == Property::PO) {
      want_po = true;
    } else if (p == Property::RM) {
      want_rm = true;
    } else if (std::find(cheap.begin(), cheap.end(), p) == cheap.end()) {
      cheap.push_back(p);
    }
  }

  std::optional<Allocation> found;
  auto consider = [&](const Allocation& candidate) {
    for (Property p : cheap)
      if (!check_fairness(instance, candidate, p).pass) return true;  // keep looking
    if (want_po && !check_po_exhaustive(instance, candidate, query.cap).pass)
      return true;
    found = candidate;
    return false;  // stop: canonically first hit
  };

  if (want_rm) {
    // Only rank-maximal allocations can qualify; enumerate just those.
    enumerate_rm_allocations(instance, query.cap, consider);
    return found;
  }

  const std::uint64_t total =
      detail::checked_power(n, m, query.cap, "allocation search");
  Allocation current(instance);
  for (Item item = 0; item < m; ++item) current.bundle(1).set(item);
  if (!consider(current)) return found;
  detail::Odometer odo(std::vector<int>(m, n));
  for (std::uint64_t k = 1; k < total; ++k) {
    odo.advance([&](std::size_t item, int from, int to) {
      current.bundle(from + 1).reset(static_cast<Item>(item));
      current.bundle(to + 1).set(static_cast<Item>(item));
    });
    if (!consider(current)) return found;
  }
  return found;
}

UncoveredChores uncovered_chores(const Instance& instance,
                                 const Allocation& allocation) {
  validate_allocation(instance, allocation, /*require_complete=*/true);
  UncoveredChores out;
  out.per_agent.reserve(instance.agent_count());
  for (int agent = 1; agent <= instance.agent_count(); ++agent) {
    const ItemSet& bundle = allocation.bundle(agent);
    ItemSet received_goods = bundle & instance.goods(agent);
    int best_good_rank = instance.item_count() + 1;
    received_goods.for_each([&](Item g) {
      best_good_rank = std::min(best_good_rank, instance.position(agent, g));
    });
    ItemSet uncovered(instance.item_count());
    ItemSet received_chores = bundle - instance.goods(agent);
    received_chores.for_each([&](Item c) {
      if (instance.position(agent, c) < best_good_rank) uncovered.set(c);
    });
    out.total += uncovered.count();
    out.per_agent.push_back(std::move(uncovered));
  }
  return out;
}

}  // namespace lexfair
