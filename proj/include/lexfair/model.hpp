#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace lexfair {

/// Canonical item index, 0-based. The canonical order of items is the order in
/// which their identifiers were declared when the instance was built.
using Item = int;

/// Default ceiling on the number of states any exhaustive routine may visit.
inline constexpr std::uint64_t kDefaultCap = 10'000'000;

enum class ErrorCode {
  MissingItemInOrdering,
  DuplicateItem,
  UnknownItem,
  AgentCountMismatch,
  AgentMismatch,
  IncompleteAllocation,
  ItemSetMismatch,
  PoolOverlap,
  CapExceeded,
  EmptyCollection,
  NotSeparable,
  NoTerribleChores,
  TooFewCommonTerribleChores,
  NoUnenviedAgent,
  InvalidX3C,
  InvalidSetCover,
  NotACover,
  InfeasibleParams,
  RetriesExhausted,
  ParseError,
  UsageError,
};

/// Stable machine-readable token for an error code (e.g. "DuplicateItem").
const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

/// A set of items drawn from a fixed universe of m items, stored as a bitset.
/// All sets that participate in one operation must share the same universe size.
class ItemSet {
 public:
  ItemSet() = default;
  explicit ItemSet(int universe_size);

  static ItemSet full(int universe_size);
  static ItemSet of(int universe_size, std::initializer_list<Item> items);

  int universe_size() const { return universe_; }
  bool test(Item item) const;
  void set(Item item);
  void reset(Item item);
  bool empty() const;
  int count() const;
  /// Smallest item index in the set, or -1 when empty.
  Item first() const;
  std::vector<Item> to_vector() const;

  bool contains(const ItemSet& other) const;   // superset-or-equal
  bool intersects(const ItemSet& other) const;

  ItemSet& operator|=(const ItemSet& other);
  ItemSet& operator&=(const ItemSet& other);
  ItemSet& operator^=(const ItemSet& other);
  ItemSet& operator-=(const ItemSet& other);

  friend ItemSet operator|(ItemSet a, const ItemSet& b) { return a |= b; }
  friend ItemSet operator&(ItemSet a, const ItemSet& b) { return a &= b; }
  friend ItemSet operator^(ItemSet a, const ItemSet& b) { return a ^= b; }
  friend ItemSet operator-(ItemSet a, const ItemSet& b) { return a -= b; }

  ItemSet complement() const;

  bool operator==(const ItemSet& other) const = default;

  /// Calls fn(Item) for every member in ascending canonical order.
  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        int b = __builtin_ctzll(bits);
        fn(static_cast<Item>(w * 64 + b));
        bits &= bits - 1;
      }
    }
  }

 private:
  void check_item(Item item) const;

  int universe_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Raw, unchecked description of an instance as read from text.
struct RawOrderingEntry {
  std::string id;
  bool good = false;  // true: '+' prefix, false: '-' prefix
};

struct RawInstance {
  int agent_count = 0;
  std::vector<std::string> items;  // canonical order
  /// (1-based agent number, full importance ordering, most important first)
  std::vector<std::pair<int, std::vector<RawOrderingEntry>>> orderings;
};

/// A validated fair-division instance: n agents, m items, and for every agent a
/// partition of the items into goods and chores plus a strict importance
/// ordering over all items (most important first). Agents are numbered 1..n in
/// the public interface; items are canonical 0-based indices.
class Instance {
 public:
  int agent_count() const { return static_cast<int>(order_.size()); }
  int item_count() const { return static_cast<int>(item_ids_.size()); }

  const std::vector<std::string>& item_ids() const { return item_ids_; }
  const std::string& item_id(Item item) const;
  /// Canonical index for an identifier; throws UnknownItem.
  Item item(const std::string& id) const;

  bool is_good(int agent, Item item) const;
  bool is_chore(int agent, Item item) const { return !is_good(agent, item); }
  const ItemSet& goods(int agent) const;
  ItemSet chores(int agent) const;

  /// Item at 1-based importance rank `rank` for `agent` (rank 1 = most important).
  Item item_at(int agent, int rank) const;
  /// 1-based importance rank of `item` for `agent`.
  int position(int agent, Item item) const;
  const std::vector<Item>& ordering(int agent) const;

  ItemSet empty_set() const { return ItemSet(item_count()); }
  ItemSet all_items() const { return ItemSet::full(item_count()); }

 private:
  friend Instance validate_instance(const RawInstance& raw);

  std::vector<std::string> item_ids_;
  std::vector<ItemSet> goods_;              // per agent (0-based internally)
  std::vector<std::vector<Item>> order_;    // per agent: rank-1 -> item
  std::vector<std::vector<int>> position_;  // per agent: item -> rank-1

  void check_agent(int agent) const;
  void check_instance_item(Item item) const;
};

/// Checks a raw description and builds an Instance. Throws Error with code
/// AgentCountMismatch, UnknownItem, DuplicateItem or MissingItemInOrdering.
Instance validate_instance(const RawInstance& raw);

/// An allocation: one bundle per agent, pairwise disjoint. It is partial when
/// some items are unassigned and complete when the bundles cover all items.
class Allocation {
 public:
  Allocation() = default;
  explicit Allocation(const Instance& instance);
  Allocation(int agent_count, int universe_size);

  int agent_count() const { return static_cast<int>(bundles_.size()); }
  int universe_size() const;

  const ItemSet& bundle(int agent) const;
  ItemSet& bundle(int agent);

  /// Union of all bundles.
  ItemSet assigned() const;
  bool complete() const { return assigned().count() == universe_size(); }
  /// Agent holding `item` (1-based), or 0 when unassigned.
  int holder(Item item) const;

  bool operator==(const Allocation& other) const = default;

 private:
  std::vector<ItemSet> bundles_;
};

/// Throws unless `allocation` has the instance's shape (AgentMismatch), has
/// pairwise-disjoint bundles (DuplicateItem), and — when `require_complete` —
/// covers every item (IncompleteAllocation).
void validate_allocation(const Instance& instance, const Allocation& allocation,
                         bool require_complete);

enum class Property { EF, EF1, EFX, MMS, PO, RM };

const char* property_name(Property property);
std::optional<Property> property_from_name(const std::string& name);

/// One envy-based violation: `envious` prefers `envied`'s bundle. For EFX
/// failures `item` is a specific removal that still leaves envy; for EF and
/// EF1 failures it is empty (EF1: no single-item removal helps at all).
struct EnvyWitness {
  int envious = 0;
  int envied = 0;
  std::optional<Item> item;
};

struct MmsWitness {
  int agent = 0;
  ItemSet threshold;  // the agent's maximin bundle that the allocation misses
};

struct RmWitness {
  Item item = -1;
  int holder = 0;             // 0 when the item is unassigned
  std::vector<int> eligible;  // ascending agent numbers allowed to hold `item`
};

/// Verdict of a property check plus every violation found.
struct Report {
  Property property = Property::EF;
  bool pass = true;
  std::vector<EnvyWitness> envy;
  std::vector<MmsWitness> mms;
  std::vector<RmWitness> rm;
  std::optional<Allocation> dominator;  // set on PO failure
};

}  // namespace lexfair
