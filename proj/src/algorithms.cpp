#include "lexfair/algorithms.hpp"

#include <algorithm>
#include <numeric>

#include "lexfair/prefs.hpp"

namespace lexfair {

namespace {
// Internal invariants of the solvers; a failure is a bug, not bad input.
void ensure(bool condition, const char* what) {
  if (!condition) throw std::logic_error(what);
}
}  // namespace

Allocation serial_dictatorship(const Instance& instance, const Allocation& base,
                               const SdPlan& plan) {
  const int n = instance.agent_count();
  validate_allocation(instance, base, /*require_complete=*/false);
  if (plan.pool.universe_size() != instance.item_count())
    throw Error(ErrorCode::ItemSetMismatch, "pool universe does not match instance");
  if (plan.pool.intersects(base.assigned()))
    throw Error(ErrorCode::PoolOverlap,
                "pool and base allocation share an item");
  {
    std::vector<int> sorted = plan.ordering;
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> expected(n);
    std::iota(expected.begin(), expected.end(), 1);
    if (sorted != expected)
      throw Error(ErrorCode::AgentMismatch,
                  "pick ordering is not a permutation of 1..n");
  }
  if (static_cast<int>(plan.quotas.size()) != n)
    throw Error(ErrorCode::AgentMismatch, "expected one quota per agent");
  for (int q : plan.quotas)
    if (q < 0) throw Error(ErrorCode::AgentMismatch, "quotas must be non-negative");

  Allocation result = base;
  ItemSet pool = plan.pool;
  for (int agent : plan.ordering) {
    if (pool.empty()) break;
    int quota = plan.quotas[agent - 1];
    if (quota == 0) continue;
    // Most preferred block: remaining goods by increasing importance rank,
    // then remaining chores by decreasing rank. Equals `quota` repeated
    // single best-item picks because preferences are lexicographic.
    std::vector<Item> picks;
    const std::vector<Item>& order = instance.ordering(agent);
    for (Item item : order)
      if (pool.test(item) && instance.is_good(agent, item))
        picks.push_back(item);
    for (auto it = order.rbegin(); it != order.rend(); ++it)
      if (pool.test(*it) && instance.is_chore(agent, *it))
        picks.push_back(*it);
    if (static_cast<int>(picks.size()) > quota) picks.resize(quota);
    for (Item item : picks) {
      result.bundle(agent).set(item);
      pool.reset(item);
    }
  }
  return result;
}

int unenvied_agent(const Instance& instance, const Allocation& allocation) {
  const int n = instance.agent_count();
  validate_allocation(instance, allocation, /*require_complete=*/false);
  for (int j = 1; j <= n; ++j) {
    bool envied = false;
    for (int i = 1; i <= n && !envied; ++i)
      if (i != j &&
          prefers(instance, i, allocation.bundle(j), allocation.bundle(i)))
        envied = true;
    if (!envied) return j;
  }
  throw Error(ErrorCode::NoUnenviedAgent, "every agent is envied by someone");
}

Allocation solve_efx_po_separable(const Instance& instance) {
  const int n = instance.agent_count();
  const int m = instance.item_count();
  Classification cls = classify(instance);
  if (!cls.separable)
    throw Error(ErrorCode::NotSeparable,
                "instance is not separable; use the exhaustive search instead");
  if (!cls.has_terrible_chores)
    throw Error(ErrorCode::NoTerribleChores,
                "some agent's most important item is a good; use the "
                "exhaustive search instead");

  // Deal the common chores: agent 1 absorbs the surplus, everyone else takes
  // one, each picking its least important remaining ones.
  SdPlan plan;
  plan.ordering.resize(n);
  std::iota(plan.ordering.begin(), plan.ordering.end(), 1);
  plan.quotas.assign(n, 1);
  plan.quotas[0] = std::max(1, cls.common_chores.count() - n + 1);
  plan.pool = cls.common_chores;
  Allocation result = serial_dictatorship(instance, Allocation(instance), plan);

  std::vector<int> unserved;  // agents left empty, ascending
  int z = 0;                  // largest agent that received a common chore
  for (int i = 1; i <= n; ++i) {
    if (result.bundle(i).empty())
      unserved.push_back(i);
    else
      z = i;
  }

  ItemSet remaining = instance.all_items() - cls.common_chores;
  for (int i = z; i >= 1; --i) {
    ItemSet grab = instance.goods(i) & remaining;
    result.bundle(i) |= grab;
    remaining -= grab;
  }

  // Grow a bundle for each still-empty agent, walking importance ranks: the
  // first agent whose rank-k item is a remaining good takes it together with
  // every remaining item no other empty agent wants as a good.
  for (int rank = 1; rank <= m; ++rank) {
    bool assigned = true;
    while (assigned && !unserved.empty()) {
      assigned = false;
      for (std::size_t u = 0; u < unserved.size(); ++u) {
        int agent = unserved[u];
        Item want = instance.item_at(agent, rank);
        if (!remaining.test(want) || !instance.is_good(agent, want)) continue;
        ensure(result.bundle(agent).empty(),
               "agent fed a singleton good already held items");
        ItemSet grab = instance.goods(agent) & remaining;
        for (int other : unserved)
          if (other != agent) grab -= instance.goods(other);
        grab.set(want);
        result.bundle(agent) = grab;
        remaining -= grab;
        unserved.erase(unserved.begin() + u);
        assigned = true;
        break;
      }
    }
  }
  ensure(result.complete(), "solver produced an incomplete allocation");
  return result;
}

Allocation solve_ef1_po_common_terrible(const Instance& instance, bool force) {
  const int n = instance.agent_count();
  Classification cls = classify(instance);
  if (!force && cls.common_terrible.count() < n - 1)
    throw Error(ErrorCode::TooFewCommonTerribleChores,
                "fewer than n-1 chores are terrible for every agent (" +
                    std::to_string(cls.common_terrible.count()) + " of " +
                    std::to_string(n - 1) + " needed); rerun with force to "
                    "waive the guarantee");

  // Goods first: each agent takes the goods nobody before it claimed.
  Allocation result(instance);
  ItemSet assigned(instance.item_count());
  for (int i = 1; i <= n; ++i) {
    ItemSet grab = instance.goods(i) - assigned;
    result.bundle(i) = grab;
    assigned |= grab;
  }

  // Non-terrible common chores: in reverse agent order, each takes the ones
  // that are not terrible for it.
  ItemSet pool = cls.common_chores - cls.common_terrible;
  for (int i = n; i >= 1; --i) {
    ItemSet grab = pool - cls.terrible[i - 1];
    result.bundle(i) |= grab;
    pool -= grab;
  }
  ensure(pool.empty(), "non-terrible common chores left undealt");

  // Common terrible chores dealt by serial dictatorship; an unenvied agent
  // picks last so nobody minds its final pick, and the first picker absorbs
  // the surplus.
  int last = unenvied_agent(instance, result);
  SdPlan plan;
  for (int i = 1; i <= n; ++i)
    if (i != last) plan.ordering.push_back(i);
  plan.ordering.push_back(last);
  plan.quotas.assign(n, 1);
  plan.quotas[plan.ordering.front() - 1] =
      std::max(1, cls.common_terrible.count() - n + 1);
  plan.pool = cls.common_terrible;
  result = serial_dictatorship(instance, result, plan);
  ensure(result.complete(), "solver produced an incomplete allocation");
  return result;
}

Allocation solve_mms_po(const Instance& instance) {
  const int n = instance.agent_count();
  Classification cls = classify(instance);
  if (!cls.has_terrible_chores)
    throw Error(ErrorCode::NoTerribleChores,
                "some agent's most important item is a good; use the "
                "exhaustive search instead");
  Allocation result(instance);
  if (instance.item_count() == 0) return result;

  const Item worst = instance.item_at(n, 1);  // agent n's most important chore

  ItemSet assigned(instance.item_count());
  for (int i = 1; i <= n; ++i) {
    ItemSet grab = instance.goods(i) - assigned;
    result.bundle(i) = grab;
    assigned |= grab;
  }

  ItemSet rest = cls.common_chores;
  rest.reset(worst);
  result.bundle(n) |= rest;

  bool tops_everyones_order = true;
  for (int i = 1; i <= n && tops_everyones_order; ++i)
    if (instance.item_at(i, 1) != worst) tops_everyones_order = false;

  if (tops_everyones_order) {
    result.bundle(1).set(worst);
  } else if (cls.common_chores.test(worst)) {
    int pick = 0;
    for (int i = 1; i <= n; ++i)
      if (instance.item_at(i, 1) != worst) pick = i;
    result.bundle(pick).set(worst);
  }
  // Otherwise `worst` is a good for somebody and was dealt with the goods.
  ensure(result.complete(), "solver produced an incomplete allocation");
  return result;
}

}  // namespace lexfair
