#pragma once

#include "lexfair/model.hpp"

namespace lexfair {

struct MmsBundle {
  enum class Method { ClosedForm, BruteForce };
  int agent = 0;
  ItemSet bundle;
  Method method = Method::ClosedForm;
};

/// The agent's maximin share: the best bundle it can guarantee itself by
/// splitting all items into n bundles and receiving the least preferred one.
/// Closed form: with one agent the whole item set; when the most important
/// item is a chore, that chore plus all the agent's goods; otherwise the empty
/// set if the agent has fewer than n goods, else its goods minus the n-1 most
/// important ones.
MmsBundle mms_bundle(const Instance& instance, int agent);

/// Reference implementation by enumerating all n^m labelled partitions.
/// Throws CapExceeded when n^m > cap.
MmsBundle mms_bundle_bruteforce(const Instance& instance, int agent,
                                std::uint64_t cap = kDefaultCap);

/// Checks EF, EF1, EFX or MMS on a complete allocation and reports every
/// violating pair (or agent, for MMS). Throws UsageError for PO/RM, which have
/// dedicated checkers.
Report check_fairness(const Instance& instance, const Allocation& allocation,
                      Property notion);

}  // namespace lexfair
