#pragma once

#include <vector>

#include "lexfair/model.hpp"

namespace lexfair {

enum class Comparison { Dispreferred = -1, Equal = 0, Preferred = 1 };

/// Lexicographic bundle comparison for `agent`: X is preferred to Y exactly
/// when the most important item (by the agent's importance ordering) on which
/// the two bundles differ is either a good in X or a chore in Y. Identical
/// bundles compare Equal; distinct bundles never do, so the relation is a
/// strict total order on bundles.
Comparison compare_bundles(const Instance& instance, int agent, const ItemSet& x,
                           const ItemSet& y);

/// True when `agent` strictly prefers X to Y.
bool prefers(const Instance& instance, int agent, const ItemSet& x,
             const ItemSet& y);

/// True when `agent` prefers X to Y or the bundles are identical.
bool weakly_prefers(const Instance& instance, int agent, const ItemSet& x,
                    const ItemSet& y);

/// Structural summary of an instance.
struct Classification {
  /// Per agent: the terrible chores — the maximal set of chores every one of
  /// which is more important than every good. This is the chore prefix of the
  /// importance ordering (all chores when the agent has no goods).
  std::vector<ItemSet> terrible;
  ItemSet common_goods;     // items every agent calls a good
  ItemSet common_chores;    // items every agent calls a chore
  ItemSet common_terrible;  // intersection of the per-agent terrible sets
  std::vector<char> agent_separable;  // per agent: all chores before all goods or vice versa
  bool separable = false;            // every agent separable
  bool objective = false;            // all agents share one goods set
  bool has_terrible_chores = false;  // every agent's most important item is a chore
};

Classification classify(const Instance& instance);

/// Most preferred bundle in a non-empty collection (first occurrence on ties,
/// which arise only between identical sets). Throws EmptyCollection.
const ItemSet& best_of(const Instance& instance, int agent,
                       const std::vector<ItemSet>& bundles);

/// Least preferred bundle in a non-empty collection, same tie rule.
const ItemSet& worst_of(const Instance& instance, int agent,
                        const std::vector<ItemSet>& bundles);

}  // namespace lexfair
