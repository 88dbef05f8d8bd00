#include "lexfair/model.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

namespace lexfair {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::MissingItemInOrdering: return "MissingItemInOrdering";
    case ErrorCode::DuplicateItem: return "DuplicateItem";
    case ErrorCode::UnknownItem: return "UnknownItem";
    case ErrorCode::AgentCountMismatch: return "AgentCountMismatch";
    case ErrorCode::AgentMismatch: return "AgentMismatch";
    case ErrorCode::IncompleteAllocation: return "IncompleteAllocation";
    case ErrorCode::ItemSetMismatch: return "ItemSetMismatch";
    case ErrorCode::PoolOverlap: return "PoolOverlap";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::EmptyCollection: return "EmptyCollection";
    case ErrorCode::NotSeparable: return "NotSeparable";
    case ErrorCode::NoTerribleChores: return "NoTerribleChores";
    case ErrorCode::TooFewCommonTerribleChores: return "TooFewCommonTerribleChores";
    case ErrorCode::NoUnenviedAgent: return "NoUnenviedAgent";
    case ErrorCode::InvalidX3C: return "InvalidX3C";
    case ErrorCode::InvalidSetCover: return "InvalidSetCover";
    case ErrorCode::NotACover: return "NotACover";
    case ErrorCode::InfeasibleParams: return "InfeasibleParams";
    case ErrorCode::RetriesExhausted: return "RetriesExhausted";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::UsageError: return "UsageError";
  }
  return "UnknownError";
}

// ---------------------------------------------------------------------------
// ItemSet

ItemSet::ItemSet(int universe_size)
    : universe_(universe_size), words_((universe_size + 63) / 64, 0) {}

ItemSet ItemSet::full(int universe_size) {
  ItemSet s(universe_size);
  for (int i = 0; i < universe_size; ++i) s.set(i);
  return s;
}

ItemSet ItemSet::of(int universe_size, std::initializer_list<Item> items) {
  ItemSet s(universe_size);
  for (Item i : items) s.set(i);
  return s;
}

void ItemSet::check_item(Item item) const {
  if (item < 0 || item >= universe_)
    throw Error(ErrorCode::UnknownItem,
                "item index " + std::to_string(item) + " outside universe of " +
                    std::to_string(universe_));
}

bool ItemSet::test(Item item) const {
  check_item(item);
  return (words_[item / 64] >> (item % 64)) & 1u;
}

void ItemSet::set(Item item) {
  check_item(item);
  words_[item / 64] |= std::uint64_t{1} << (item % 64);
}

void ItemSet::reset(Item item) {
  check_item(item);
  words_[item / 64] &= ~(std::uint64_t{1} << (item % 64));
}

bool ItemSet::empty() const {
  return std::all_of(words_.begin(), words_.end(),
                     [](std::uint64_t w) { return w == 0; });
}

int ItemSet::count() const {
  int total = 0;
  for (std::uint64_t w : words_) total += __builtin_popcountll(w);
  return total;
}

Item ItemSet::first() const {
  for (std::size_t w = 0; w < words_.size(); ++w)
    if (words_[w] != 0) return static_cast<Item>(w * 64 + __builtin_ctzll(words_[w]));
  return -1;
}

std::vector<Item> ItemSet::to_vector() const {
  std::vector<Item> out;
  out.reserve(count());
  for_each([&](Item i) { out.push_back(i); });
  return out;
}

bool ItemSet::contains(const ItemSet& other) const {
  for (std::size_t w = 0; w < words_.size(); ++w)
    if ((other.words_[w] & ~words_[w]) != 0) return false;
  return true;
}

bool ItemSet::intersects(const ItemSet& other) const {
  for (std::size_t w = 0; w < words_.size(); ++w)
    if ((words_[w] & other.words_[w]) != 0) return true;
  return false;
}

namespace {
void check_same_universe(const ItemSet& a, const ItemSet& b) {
  if (a.universe_size() != b.universe_size())
    throw Error(ErrorCode::ItemSetMismatch,
                "item sets drawn from different universes (" +
                    std::to_string(a.universe_size()) + " vs " +
                    std::to_string(b.universe_size()) + ")");
}
}  // namespace

ItemSet& ItemSet::operator|=(const ItemSet& other) {
  check_same_universe(*this, other);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= other.words_[w];
  return *this;
}

ItemSet& ItemSet::operator&=(const ItemSet& other) {
  check_same_universe(*this, other);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= other.words_[w];
  return *this;
}

ItemSet& ItemSet::operator^=(const ItemSet& other) {
  check_same_universe(*this, other);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= other.words_[w];
  return *this;
}

ItemSet& ItemSet::operator-=(const ItemSet& other) {
  check_same_universe(*this, other);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= ~other.words_[w];
  return *this;
}

ItemSet ItemSet::complement() const {
  ItemSet out = ItemSet::full(universe_);
  out -= *this;
  return out;
}

// ---------------------------------------------------------------------------
// Instance

void Instance::check_agent(int agent) const {
  if (agent < 1 || agent > agent_count())
    throw Error(ErrorCode::AgentMismatch,
                "agent " + std::to_string(agent) + " outside 1.." +
                    std::to_string(agent_count()));
}

void Instance::check_instance_item(Item item) const {
  if (item < 0 || item >= item_count())
    throw Error(ErrorCode::UnknownItem,
                "item index " + std::to_string(item) + " outside universe of " +
                    std::to_string(item_count()));
}

const std::string& Instance::item_id(Item item) const {
  check_instance_item(item);
  return item_ids_[item];
}

Item Instance::item(const std::string& id) const {
  for (int i = 0; i < item_count(); ++i)
    if (item_ids_[i] == id) return i;
  throw Error(ErrorCode::UnknownItem, "unknown item '" + id + "'");
}

bool Instance::is_good(int agent, Item item) const {
  check_agent(agent);
  return goods_[agent - 1].test(item);
}

const ItemSet& Instance::goods(int agent) const {
  check_agent(agent);
  return goods_[agent - 1];
}

ItemSet Instance::chores(int agent) const {
  check_agent(agent);
  return goods_[agent - 1].complement();
}

Item Instance::item_at(int agent, int rank) const {
  check_agent(agent);
  if (rank < 1 || rank > item_count())
    throw Error(ErrorCode::UnknownItem,
                "rank " + std::to_string(rank) + " outside 1.." +
                    std::to_string(item_count()));
  return order_[agent - 1][rank - 1];
}

int Instance::position(int agent, Item item) const {
  check_agent(agent);
  check_instance_item(item);
  return position_[agent - 1][item] + 1;
}

const std::vector<Item>& Instance::ordering(int agent) const {
  check_agent(agent);
  return order_[agent - 1];
}

Instance validate_instance(const RawInstance& raw) {
  if (raw.agent_count < 1)
    throw Error(ErrorCode::AgentCountMismatch,
                "agent count must be at least 1, got " +
                    std::to_string(raw.agent_count));

  const int n = raw.agent_count;
  const int m = static_cast<int>(raw.items.size());

  std::unordered_map<std::string, Item> index;
  index.reserve(raw.items.size());
  for (int i = 0; i < m; ++i) {
    if (!index.emplace(raw.items[i], i).second)
      throw Error(ErrorCode::DuplicateItem,
                  "item '" + raw.items[i] + "' declared twice");
  }

  if (static_cast<int>(raw.orderings.size()) != n)
    throw Error(ErrorCode::AgentCountMismatch,
                "expected " + std::to_string(n) + " agent orderings, got " +
                    std::to_string(raw.orderings.size()));

  Instance inst;
  inst.item_ids_ = raw.items;
  inst.goods_.assign(n, ItemSet(m));
  inst.order_.assign(n, {});
  inst.position_.assign(n, std::vector<int>(m, -1));

  std::vector<bool> seen_agent(n, false);
  for (const auto& [agent, entries] : raw.orderings) {
    if (agent < 1 || agent > n)
      throw Error(ErrorCode::AgentCountMismatch,
                  "agent number " + std::to_string(agent) + " outside 1.." +
                      std::to_string(n));
    if (seen_agent[agent - 1])
      throw Error(ErrorCode::AgentCountMismatch,
                  "agent " + std::to_string(agent) + " described twice");
    seen_agent[agent - 1] = true;

    auto& order = inst.order_[agent - 1];
    auto& position = inst.position_[agent - 1];
    for (const RawOrderingEntry& entry : entries) {
      auto it = index.find(entry.id);
      if (it == index.end())
        throw Error(ErrorCode::UnknownItem, "agent " + std::to_string(agent) +
                                                " ranks unknown item '" +
                                                entry.id + "'");
      Item item = it->second;
      if (position[item] != -1)
        throw Error(ErrorCode::DuplicateItem,
                    "agent " + std::to_string(agent) + " ranks item '" +
                        entry.id + "' twice");
      position[item] = static_cast<int>(order.size());
      order.push_back(item);
      if (entry.good) inst.goods_[agent - 1].set(item);
    }
    if (static_cast<int>(order.size()) != m) {
      for (int i = 0; i < m; ++i)
        if (position[i] == -1)
          throw Error(ErrorCode::MissingItemInOrdering,
                      "agent " + std::to_string(agent) + " does not rank item '" +
                          raw.items[i] + "'");
    }
  }
  return inst;
}

// ---------------------------------------------------------------------------
// Allocation

Allocation::Allocation(const Instance& instance)
    : Allocation(instance.agent_count(), instance.item_count()) {}

Allocation::Allocation(int agent_count, int universe_size)
    : bundles_(agent_count, ItemSet(universe_size)) {}

int Allocation::universe_size() const {
  return bundles_.empty() ? 0 : bundles_.front().universe_size();
}

const ItemSet& Allocation::bundle(int agent) const {
  if (agent < 1 || agent > agent_count())
    throw Error(ErrorCode::AgentMismatch,
                "agent " + std::to_string(agent) + " outside 1.." +
                    std::to_string(agent_count()));
  return bundles_[agent - 1];
}

ItemSet& Allocation::bundle(int agent) {
  return const_cast<ItemSet&>(std::as_const(*this).bundle(agent));
}

ItemSet Allocation::assigned() const {
  ItemSet out(universe_size());
  for (const ItemSet& b : bundles_) out |= b;
  return out;
}

int Allocation::holder(Item item) const {
  for (int i = 0; i < agent_count(); ++i)
    if (bundles_[i].test(item)) return i + 1;
  return 0;
}

void validate_allocation(const Instance& instance, const Allocation& allocation,
                         bool require_complete) {
  if (allocation.agent_count() != instance.agent_count() ||
      allocation.universe_size() != instance.item_count())
    throw Error(ErrorCode::AgentMismatch,
                "allocation shape (" + std::to_string(allocation.agent_count()) +
                    " agents over " + std::to_string(allocation.universe_size()) +
                    " items) does not match instance (" +
                    std::to_string(instance.agent_count()) + " agents over " +
                    std::to_string(instance.item_count()) + " items)");
  ItemSet seen(instance.item_count());
  for (int i = 1; i <= instance.agent_count(); ++i) {
    if (seen.intersects(allocation.bundle(i))) {
      ItemSet dup = seen & allocation.bundle(i);
      throw Error(ErrorCode::DuplicateItem,
                  "item '" + instance.item_id(dup.first()) +
                      "' assigned to more than one agent");
    }
    seen |= allocation.bundle(i);
  }
  if (require_complete && seen.count() != instance.item_count()) {
    ItemSet missing = seen.complement();
    throw Error(ErrorCode::IncompleteAllocation,
                "item '" + instance.item_id(missing.first()) +
                    "' is unassigned in a context requiring a complete allocation");
  }
}

// ---------------------------------------------------------------------------
// Properties

const char* property_name(Property property) {
  switch (property) {
    case Property::EF: return "ef";
    case Property::EF1: return "ef1";
    case Property::EFX: return "efx";
    case Property::MMS: return "mms";
    case Property::PO: return "po";
    case Property::RM: return "rm";
  }
  return "?";
}

std::optional<Property> property_from_name(const std::string& name) {
  if (name == "ef") return Property::EF;
  if (name == "ef1") return Property::EF1;
  if (name == "efx") return Property::EFX;
  if (name == "mms") return Property::MMS;
  if (name == "po") return Property::PO;
  if (name == "rm") return Property::RM;
  return std::nullopt;
}

}  // namespace lexfair
