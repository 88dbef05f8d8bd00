#include "lexfair/fairness.hpp"

#include <algorithm>

#include "enum_util.hpp"
#include "lexfair/prefs.hpp"

namespace lexfair {

MmsBundle mms_bundle(const Instance& instance, int agent) {
  const int n = instance.agent_count();
  const int m = instance.item_count();
  MmsBundle out{agent, instance.empty_set(), MmsBundle::Method::ClosedForm};
  if (m == 0) return out;
  if (n == 1) {  // single partition: the whole item set
    out.bundle = instance.all_items();
    return out;
  }
  const ItemSet& goods = instance.goods(agent);
  Item top = instance.item_at(agent, 1);
  if (instance.is_chore(agent, top)) {
    out.bundle = goods;
    out.bundle.set(top);
    return out;
  }
  if (goods.count() < n) return out;  // empty
  // Goods minus the agent's n-1 most important goods.
  out.bundle = goods;
  int dropped = 0;
  for (Item item : instance.ordering(agent)) {
    if (dropped == n - 1) break;
    if (goods.test(item)) {
      out.bundle.reset(item);
      ++dropped;
    }
  }
  return out;
}

MmsBundle mms_bundle_bruteforce(const Instance& instance, int agent,
                                std::uint64_t cap) {
  const int n = instance.agent_count();
  const int m = instance.item_count();
  std::uint64_t total =
      detail::checked_power(n, m, cap, "maximin brute force");

  // Labelled n-slot partitions; every unordered partition appears at least
  // once, and max/min are label-independent.
  std::vector<ItemSet> slots(n, instance.empty_set());
  for (Item item = 0; item < m; ++item) slots[0].set(item);

  MmsBundle out{agent, instance.empty_set(), MmsBundle::Method::BruteForce};
  const ItemSet& worst_first = worst_of(instance, agent, slots);
  out.bundle = worst_first;

  detail::Odometer odo(std::vector<int>(m, n));
  for (std::uint64_t k = 1; k < total; ++k) {
    odo.advance([&](std::size_t item, int from, int to) {
      slots[from].reset(static_cast<Item>(item));
      slots[to].set(static_cast<Item>(item));
    });
    const ItemSet& worst = worst_of(instance, agent, slots);
    if (prefers(instance, agent, worst, out.bundle)) out.bundle = worst;
  }
  return out;
}

namespace {

// Searches for a single-item removal that repairs envy of `envious` towards
// `envied`; returns true when one exists. With `collect`, instead records every
// removal that fails to repair it (the EFX witnesses).
bool envy_repairable(const Instance& instance, const Allocation& allocation,
                     int envious, int envied, std::vector<EnvyWitness>* collect) {
  const ItemSet& mine = allocation.bundle(envious);
  const ItemSet& theirs = allocation.bundle(envied);
  bool repairable = false;

  ItemSet their_goods = theirs & instance.goods(envious);
  their_goods.for_each([&](Item g) {
    ItemSet reduced = theirs;
    reduced.reset(g);
    if (weakly_prefers(instance, envious, mine, reduced))
      repairable = true;
    else if (collect)
      collect->push_back({envious, envied, g});
  });

  ItemSet my_chores = mine - instance.goods(envious);
  my_chores.for_each([&](Item c) {
    ItemSet reduced = mine;
    reduced.reset(c);
    if (weakly_prefers(instance, envious, reduced, theirs))
      repairable = true;
    else if (collect)
      collect->push_back({envious, envied, c});
  });

  return repairable;
}

}  // namespace

Report check_fairness(const Instance& instance, const Allocation& allocation,
                      Property notion) {
  if (notion == Property::PO || notion == Property::RM)
    throw Error(ErrorCode::UsageError,
                std::string(property_name(notion)) +
                    " has a dedicated checker; this one handles ef, ef1, efx "
                    "and mms");
  validate_allocation(instance, allocation, /*require_complete=*/true);

  Report report;
  report.property = notion;
  const int n = instance.agent_count();

  if (notion == Property::MMS) {
    for (int i = 1; i <= n; ++i) {
      MmsBundle threshold = mms_bundle(instance, i);
      if (!weakly_prefers(instance, i, allocation.bundle(i), threshold.bundle)) {
        report.pass = false;
        report.mms.push_back({i, threshold.bundle});
      }
    }
    return report;
  }

  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      if (i == j) continue;
      if (!prefers(instance, i, allocation.bundle(j), allocation.bundle(i)))
        continue;  // i does not envy j
      switch (notion) {
        case Property::EF:
          report.pass = false;
          report.envy.push_back({i, j, std::nullopt});
          break;
        case Property::EF1:
          if (!envy_repairable(instance, allocation, i, j, nullptr)) {
            report.pass = false;
            report.envy.push_back({i, j, std::nullopt});
          }
          break;
        case Property::EFX: {
          std::vector<EnvyWitness> failures;
          envy_repairable(instance, allocation, i, j, &failures);
          if (!failures.empty()) {
            report.pass = false;
            report.envy.insert(report.envy.end(), failures.begin(),
                               failures.end());
          }
          break;
        }
        default:
          break;
      }
    }
  }
  return report;
}

}  // namespace lexfair
