#pragma once

#include <vector>

#include "lexfair/model.hpp"

namespace lexfair {

/// Plan for a serial-dictatorship round: agents pick in `ordering`, agent i
/// taking up to `quotas[i-1]` items from `pool`. A pick is the agent's most
/// preferred remaining pool item: its most important remaining good, or, when
/// no goods remain for it, its least important remaining chore.
struct SdPlan {
  std::vector<int> ordering;  // a permutation of 1..n
  std::vector<int> quotas;    // per agent (index 0 = agent 1), non-negative
  ItemSet pool;               // disjoint from base.assigned()
};

/// Extends `base` by running the plan; stops early when the pool empties.
Allocation serial_dictatorship(const Instance& instance, const Allocation& base,
                               const SdPlan& plan);

/// Smallest-numbered agent whose bundle nobody strictly prefers to their own.
/// Throws NoUnenviedAgent when every agent is envied (cannot happen for
/// Pareto-optimal partial allocations).
int unenvied_agent(const Instance& instance, const Allocation& allocation);

/// Envy-free-up-to-any-item and Pareto-optimal allocation for instances that
/// are separable (every agent ranks all chores before all goods or vice
/// versa) and where everyone's most important item is a chore. First deals the
/// common chores by serial dictatorship, then grows personalised good bundles
/// for the agents left empty. Throws NotSeparable / NoTerribleChores.
Allocation solve_efx_po_separable(const Instance& instance);

/// Envy-free-up-to-one-item and Pareto-optimal allocation for instances with
/// at least n-1 common terrible chores. Greedily assigns goods, spreads the
/// remaining non-terrible common chores, then deals the common terrible
/// chores by serial dictatorship with an unenvied agent picking last. With
/// `force`, runs even when common terrible chores are scarce (the EF1
/// guarantee may then fail). Throws TooFewCommonTerribleChores.
Allocation solve_ef1_po_common_terrible(const Instance& instance,
                                        bool force = false);

/// Maximin-share and Pareto-optimal allocation for instances where everyone's
/// most important item is a chore. Greedily assigns goods, hands agent n the
/// common chores except the one it minds most, and places that last chore
/// with agent 1 (when it tops every ordering) or with the largest-numbered
/// agent whose top item differs. Throws NoTerribleChores.
Allocation solve_mms_po(const Instance& instance);

}  // namespace lexfair
