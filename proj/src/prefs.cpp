#include "lexfair/prefs.hpp"

namespace lexfair {

Comparison compare_bundles(const Instance& instance, int agent, const ItemSet& x,
                           const ItemSet& y) {
  if (x.universe_size() != instance.item_count() ||
      y.universe_size() != instance.item_count())
    throw Error(ErrorCode::ItemSetMismatch,
                "bundle universe does not match the instance");
  if (x == y) return Comparison::Equal;

  ItemSet diff = x ^ y;
  Item decisive = -1;
  int best_rank = instance.item_count() + 1;
  diff.for_each([&](Item item) {
    int rank = instance.position(agent, item);
    if (rank < best_rank) {
      best_rank = rank;
      decisive = item;
    }
  });
  // The decisive item sits in exactly one bundle; X wins when it is a good in
  // X or a chore in Y.
  bool in_x = x.test(decisive);
  bool good = instance.is_good(agent, decisive);
  return (in_x == good) ? Comparison::Preferred : Comparison::Dispreferred;
}

bool prefers(const Instance& instance, int agent, const ItemSet& x,
             const ItemSet& y) {
  return compare_bundles(instance, agent, x, y) == Comparison::Preferred;
}

bool weakly_prefers(const Instance& instance, int agent, const ItemSet& x,
                    const ItemSet& y) {
  return compare_bundles(instance, agent, x, y) != Comparison::Dispreferred;
}

Classification classify(const Instance& instance) {
  const int n = instance.agent_count();
  const int m = instance.item_count();

  Classification out;
  out.terrible.reserve(n);
  out.common_goods = ItemSet::full(m);
  out.common_chores = ItemSet::full(m);
  out.common_terrible = ItemSet::full(m);
  out.agent_separable.assign(n, 1);
  out.objective = true;
  out.has_terrible_chores = true;

  for (int agent = 1; agent <= n; ++agent) {
    const ItemSet& goods = instance.goods(agent);
    out.common_goods &= goods;
    out.common_chores -= goods;
    if (agent > 1 && goods != instance.goods(1)) out.objective = false;

    // Terrible chores: the chore prefix of the importance ordering.
    ItemSet terrible(m);
    for (Item item : instance.ordering(agent)) {
      if (goods.test(item)) break;
      terrible.set(item);
    }
    out.common_terrible &= terrible;
    if (terrible.empty() && m > 0) out.has_terrible_chores = false;
    out.terrible.push_back(std::move(terrible));

    // Separable: the good/chore flag flips at most once along the ordering.
    int flips = 0;
    for (int rank = 2; rank <= m; ++rank)
      if (goods.test(instance.item_at(agent, rank)) !=
          goods.test(instance.item_at(agent, rank - 1)))
        ++flips;
    out.agent_separable[agent - 1] = flips <= 1;
  }

  out.separable = true;
  for (char s : out.agent_separable)
    if (!s) out.separable = false;
  return out;
}

namespace {
const ItemSet& extreme_of(const Instance& instance, int agent,
                          const std::vector<ItemSet>& bundles, bool best) {
  if (bundles.empty())
    throw Error(ErrorCode::EmptyCollection,
                "cannot pick from an empty collection of bundles");
  std::size_t pick = 0;
  for (std::size_t i = 1; i < bundles.size(); ++i) {
    Comparison cmp = compare_bundles(instance, agent, bundles[i], bundles[pick]);
    if (cmp == (best ? Comparison::Preferred : Comparison::Dispreferred)) pick = i;
  }
  return bundles[pick];
}
}  // namespace

const ItemSet& best_of(const Instance& instance, int agent,
                       const std::vector<ItemSet>& bundles) {
  return extreme_of(instance, agent, bundles, true);
}

const ItemSet& worst_of(const Instance& instance, int agent,
                        const std::vector<ItemSet>& bundles) {
  return extreme_of(instance, agent, bundles, false);
}

}  // namespace lexfair
