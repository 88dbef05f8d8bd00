#pragma once

#include <functional>
#include <vector>

#include "lexfair/model.hpp"

namespace lexfair {

/// True when `challenger` assigns the same set of items as `incumbent`, every
/// agent weakly prefers its challenger bundle, and at least one strictly does.
/// Both allocations may be partial.
bool pareto_dominates(const Instance& instance, const Allocation& challenger,
                      const Allocation& incumbent);

/// Exhaustive Pareto check: enumerates every reassignment of the allocation's
/// assigned items (n^|assigned| states, ascending canonical index) and fails
/// with the first dominating reassignment as witness. `jobs` > 1 splits the
/// scan across threads; the witness stays the canonically first one.
Report check_po_exhaustive(const Instance& instance, const Allocation& allocation,
                           std::uint64_t cap = kDefaultCap, int jobs = 1);

/// Per-item sets of agents allowed to hold the item under rank maximality:
/// a chore for everyone ranked by the agents who consider it least important;
/// any other item ranked by whoever values it as a good most importantly.
struct RmEligibility {
  std::vector<std::vector<int>> eligible;  // per item, ascending agent numbers
};

RmEligibility rm_eligibility(const Instance& instance);

/// Number of rank-maximal allocations (product of eligibility sizes); throws
/// CapExceeded when it exceeds cap.
std::uint64_t rm_allocation_count(const RmEligibility& eligibility,
                                  std::uint64_t cap = kDefaultCap);

/// Checks that every item sits with an eligible holder, reporting every
/// misplaced item.
Report check_rm(const Instance& instance, const Allocation& allocation);

/// Visits every rank-maximal allocation in canonical order (item 0 cycles
/// through its eligible holders fastest, holders ascending). The visitor
/// returns false to stop early.
void enumerate_rm_allocations(const Instance& instance, std::uint64_t cap,
                              const std::function<bool(const Allocation&)>& visit);

std::vector<Allocation> rm_allocations(const Instance& instance,
                                       std::uint64_t cap = kDefaultCap);

}  // namespace lexfair
