#include "lexfair/generators.hpp"

#include <algorithm>
#include <numeric>

namespace lexfair {

namespace {

// splitmix64 (Steele, Lea & Flood's SplittableRandom finalizer): tiny, fast
// and identical on every platform, which keeps generated fixtures stable.
struct SplitMix64 {
  std::uint64_t state;

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // Unbiased-enough bounded draw via 128-bit multiply; avoids the
  // implementation-defined std::uniform_int_distribution.
  std::uint64_t below(std::uint64_t bound) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(next()) * bound) >> 64);
  }

  // Uniform in [0, 1) with 53 random bits.
  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  template <typename T>
  void shuffle(std::vector<T>& values) {
    for (std::size_t i = values.size(); i > 1; --i)
      std::swap(values[i - 1], values[below(i)]);
  }
};

constexpr int kMaxRetries = 128;

}  // namespace

Instance gen_random(const GenParams& params) {
  const int n = params.agents;
  const int m = params.items;
  const int t = params.common_terrible;
  const bool need_terrible = params.require_terrible || t > 0;

  if (n < 1)
    throw Error(ErrorCode::InfeasibleParams, "at least one agent is required");
  if (m < 0) throw Error(ErrorCode::InfeasibleParams, "negative item count");
  if (params.good_probability < 0.0 || params.good_probability > 1.0)
    throw Error(ErrorCode::InfeasibleParams,
                "good probability must lie in [0, 1]");
  if (t < 0)
    throw Error(ErrorCode::InfeasibleParams, "negative common terrible count");
  if (t > m)
    throw Error(ErrorCode::InfeasibleParams,
                "cannot reserve " + std::to_string(t) +
                    " common terrible chores among " + std::to_string(m) +
                    " items");
  if (need_terrible && m == 0)
    throw Error(ErrorCode::InfeasibleParams,
                "terrible chores require at least one item");

  SplitMix64 rng{params.seed};

  std::vector<std::string> ids;
  ids.reserve(m);
  for (int i = 1; i <= m; ++i) ids.push_back("o" + std::to_string(i));

  // The common terrible chores: a random t items forced to be chores for
  // everyone and placed as everyone's most important prefix.
  std::vector<Item> pool(m);
  std::iota(pool.begin(), pool.end(), 0);
  rng.shuffle(pool);
  std::vector<Item> prefix(pool.begin(), pool.begin() + t);
  std::vector<bool> forced_chore(m, false);
  for (Item item : prefix) forced_chore[item] = true;

  // Goods sets: one shared draw for objective instances, one per agent
  // otherwise. Re-drawn when a constraint demands a chore among the
  // non-forced items and sampling produced none.
  auto draw_goods = [&](bool must_have_chore) {
    for (int attempt = 0; attempt < kMaxRetries; ++attempt) {
      std::vector<bool> good(m, false);
      bool has_chore = false;
      for (Item item = 0; item < m; ++item) {
        if (!forced_chore[item] && rng.unit() < params.good_probability)
          good[item] = true;
        else
          has_chore = true;
      }
      if (!must_have_chore || has_chore) return good;
    }
    throw Error(ErrorCode::RetriesExhausted,
                "could not sample a goods set with at least one chore; "
                "lower the good probability");
  };

  const bool must_have_chore = need_terrible && t == 0;
  std::vector<std::vector<bool>> goods(n);
  if (params.objective) {
    goods.assign(n, draw_goods(must_have_chore));
  } else {
    for (int i = 0; i < n; ++i) goods[i] = draw_goods(must_have_chore);
  }

  RawInstance raw;
  raw.agent_count = n;
  raw.items = ids;
  for (int agent = 1; agent <= n; ++agent) {
    const std::vector<bool>& good = goods[agent - 1];

    std::vector<Item> rest;
    for (Item item : pool)
      if (!forced_chore[item]) rest.push_back(item);
    rng.shuffle(rest);

    std::vector<Item> head(prefix);
    rng.shuffle(head);

    if (params.separable) {
      // Stable-split the suffix into one chore block and one good block.
      // A chore prefix forces the chores-first orientation; otherwise flip a
      // coin unless terrible chores are demanded.
      bool chores_first = need_terrible || rng.below(2) == 0;
      std::vector<Item> chores, goods_block;
      for (Item item : rest)
        (good[item] ? goods_block : chores).push_back(item);
      std::vector<Item> ordered(head);
      const auto& first = chores_first ? chores : goods_block;
      const auto& second = chores_first ? goods_block : chores;
      ordered.insert(ordered.end(), first.begin(), first.end());
      ordered.insert(ordered.end(), second.begin(), second.end());
      rest = std::move(ordered);
    } else {
      if (need_terrible && t == 0) {
        // Rotate the first chore to the front so the top item is a chore.
        auto it = std::find_if(rest.begin(), rest.end(),
                               [&](Item item) { return !good[item]; });
        std::rotate(rest.begin(), it, it + 1);
      }
      rest.insert(rest.begin(), head.begin(), head.end());
    }

    std::vector<RawOrderingEntry> entries;
    entries.reserve(m);
    for (Item item : rest) entries.push_back({ids[item], good[item]});
    raw.orderings.emplace_back(agent, std::move(entries));
  }
  return validate_instance(raw);
}

}  // namespace lexfair
