#include "lexfair/efficiency.hpp"

#include <algorithm>
#include <optional>
#include <thread>

#include "enum_util.hpp"
#include "lexfair/prefs.hpp"

namespace lexfair {

bool pareto_dominates(const Instance& instance, const Allocation& challenger,
                      const Allocation& incumbent) {
  validate_allocation(instance, challenger, /*require_complete=*/false);
  validate_allocation(instance, incumbent, /*require_complete=*/false);
  if (challenger.assigned() != incumbent.assigned())
    throw Error(ErrorCode::ItemSetMismatch,
                "allocations assign different item sets and cannot be compared");
  bool strict = false;
  for (int i = 1; i <= instance.agent_count(); ++i) {
    Comparison cmp = compare_bundles(instance, i, challenger.bundle(i),
                                     incumbent.bundle(i));
    if (cmp == Comparison::Dispreferred) return false;
    if (cmp == Comparison::Preferred) strict = true;
  }
  return strict;
}

namespace {

// Scans reassignments of `items` (the incumbent's assigned items) over the
// canonical index range [lo, hi) and returns the first index whose induced
// allocation Pareto-dominates the incumbent. `slot[item]` is the item's digit
// position; unassigned items have slot -1.
std::optional<std::uint64_t> scan_for_dominator(
    const Instance& instance, const Allocation& incumbent,
    const std::vector<Item>& items, const std::vector<int>& slot,
    std::uint64_t lo, std::uint64_t hi) {
  const int n = instance.agent_count();
  detail::Odometer odo(std::vector<int>(items.size(), n));
  odo.seek(lo);
  for (std::uint64_t k = lo; k < hi; ++k) {
    const std::vector<int>& digits = odo.digits();
    bool strict = false;
    bool dominated = false;
    for (int agent = 1; agent <= n && !dominated; ++agent) {
      // Lexicographic comparison of the candidate bundle against the
      // incumbent's, walking the agent's importance order to the first item
      // held differently.
      for (Item item : instance.ordering(agent)) {
        int s = slot[item];
        if (s < 0) continue;
        bool candidate_holds = digits[s] == agent - 1;
        bool incumbent_holds = incumbent.bundle(agent).test(item);
        if (candidate_holds == incumbent_holds) continue;
        if (candidate_holds == instance.is_good(agent, item))
          strict = true;  // the decisive difference favours the candidate
        else
          dominated = true;  // favours the incumbent: candidate loses
        break;
      }
    }
    if (!dominated && strict) return k;
    if (k + 1 < hi) odo.advance([](std::size_t, int, int) {});
  }
  return std::nullopt;
}

Allocation allocation_at(const Instance& instance, const std::vector<Item>& items,
                         std::uint64_t k) {
  detail::Odometer odo(std::vector<int>(items.size(), instance.agent_count()));
  odo.seek(k);
  Allocation out(instance);
  for (std::size_t j = 0; j < items.size(); ++j)
    out.bundle(odo.digits()[j] + 1).set(items[j]);
  return out;
}

}  // namespace

Report check_po_exhaustive(const Instance& instance, const Allocation& allocation,
                           std::uint64_t cap, int jobs) {
  validate_allocation(instance, allocation, /*require_complete=*/false);
  Report report;
  report.property = Property::PO;

  const std::vector<Item> items = allocation.assigned().to_vector();
  const std::uint64_t total = detail::checked_power(
      instance.agent_count(), static_cast<int>(items.size()), cap,
      "exhaustive efficiency check");
  std::vector<int> slot(instance.item_count(), -1);
  for (std::size_t j = 0; j < items.size(); ++j) slot[items[j]] = static_cast<int>(j);

  std::optional<std::uint64_t> witness;
  if (jobs <= 1 || total < 1024) {
    witness = scan_for_dominator(instance, allocation, items, slot, 0, total);
  } else {
    const int workers = std::min<std::uint64_t>(jobs, total);
    std::vector<std::optional<std::uint64_t>> found(workers);
    std::vector<std::thread> threads;
    threads.reserve(workers);
    for (int w = 0; w < workers; ++w) {
      std::uint64_t lo = total / workers * w + std::min<std::uint64_t>(w, total % workers);
      std::uint64_t hi = lo + total / workers + (static_cast<std::uint64_t>(w) < total % workers ? 1 : 0);
      threads.emplace_back([&, w, lo, hi] {
        found[w] = scan_for_dominator(instance, allocation, items, slot, lo, hi);
      });
    }
    for (std::thread& t : threads) t.join();
    for (const auto& f : found)
      if (f && (!witness || *f < *witness)) witness = f;
  }

  if (witness) {
    report.pass = false;
    report.dominator = allocation_at(instance, items, *witness);
  }
  return report;
}

RmEligibility rm_eligibility(const Instance& instance) {
  const int n = instance.agent_count();
  const int m = instance.item_count();
  Classification cls = classify(instance);

  RmEligibility out;
  out.eligible.resize(m);
  for (Item item = 0; item < m; ++item) {
    bool common_chore = cls.common_chores.test(item);
    int extreme = 0;
    std::vector<int>& agents = out.eligible[item];
    for (int agent = 1; agent <= n; ++agent) {
      // A chore for everyone goes to whoever minds it least (largest
      // position); anything else goes to whoever values it as a good the most
      // (smallest position among agents calling it a good).
      if (!common_chore && !instance.is_good(agent, item)) continue;
      int pos = instance.position(agent, item);
      bool better = agents.empty() || (common_chore ? pos > extreme : pos < extreme);
      if (better) {
        extreme = pos;
        agents.clear();
      }
      if (pos == extreme) agents.push_back(agent);
    }
  }
  return out;
}

std::uint64_t rm_allocation_count(const RmEligibility& eligibility,
                                  std::uint64_t cap) {
  std::uint64_t total = 1;
  for (const std::vector<int>& agents : eligibility.eligible) {
    std::uint64_t size = agents.size();
    if (size == 0 || total > cap / size)
      throw Error(ErrorCode::CapExceeded,
                  "rank-maximal enumeration would exceed " + std::to_string(cap) +
                      " allocations");
    total *= size;
  }
  return total;
}

Report check_rm(const Instance& instance, const Allocation& allocation) {
  validate_allocation(instance, allocation, /*require_complete=*/true);
  RmEligibility eligibility = rm_eligibility(instance);
  Report report;
  report.property = Property::RM;
  for (Item item = 0; item < instance.item_count(); ++item) {
    int holder = allocation.holder(item);
    const std::vector<int>& agents = eligibility.eligible[item];
    if (std::find(agents.begin(), agents.end(), holder) == agents.end()) {
      report.pass = false;
      report.rm.push_back({item, holder, agents});
    }
  }
  return report;
}

void enumerate_rm_allocations(
    const Instance& instance, std::uint64_t cap,
    const std::function<bool(const Allocation&)>& visit) {
  RmEligibility eligibility = rm_eligibility(instance);
  const std::uint64_t total = rm_allocation_count(eligibility, cap);
  const int m = instance.item_count();

  std::vector<int> radices(m);
  for (Item item = 0; item < m; ++item)
    radices[item] = static_cast<int>(eligibility.eligible[item].size());

  Allocation current(instance);
  for (Item item = 0; item < m; ++item)
    current.bundle(eligibility.eligible[item][0]).set(item);
  if (!visit(current)) return;

  detail::Odometer odo(std::move(radices));
  for (std::uint64_t k = 1; k < total; ++k) {
    odo.advance([&](std::size_t item, int from, int to) {
      current.bundle(eligibility.eligible[item][from]).reset(static_cast<Item>(item));
      current.bundle(eligibility.eligible[item][to]).set(static_cast<Item>(item));
    });
    if (!visit(current)) return;
  }
}

std::vector<Allocation> rm_allocations(const Instance& instance,
                                       std::uint64_t cap) {
  std::vector<Allocation> out;
  enumerate_rm_allocations(instance, cap, [&](const Allocation& a) {
    out.push_back(a);
    return true;
  });
  return out;
}

}  // namespace lexfair
