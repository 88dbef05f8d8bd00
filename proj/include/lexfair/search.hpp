#pragma once

#include <optional>
#include <vector>

#include "lexfair/model.hpp"

namespace lexfair {

/// A conjunction of properties to search for, and the enumeration ceiling.
struct PropertyQuery {
  std::vector<Property> properties;
  std::uint64_t cap = kDefaultCap;
};

/// Canonically first complete allocation satisfying every queried property, or
/// nothing when none exists. With RM in the query only rank-maximal
/// allocations are enumerated; otherwise all n^m complete allocations are,
/// with the cheap properties filtering before the quadratic Pareto check.
std::optional<Allocation> exists_allocation(const Instance& instance,
                                            const PropertyQuery& query);

/// Per-agent chores more important (to their holder) than every good in the
/// holder's bundle — all of the holder's chores when it received no goods.
struct UncoveredChores {
  std::vector<ItemSet> per_agent;
  int total = 0;
};

UncoveredChores uncovered_chores(const Instance& instance,
                                 const Allocation& allocation);

}  // namespace lexfair
