#include "lexfair/reductions.hpp"

#include <algorithm>
#include <istream>
#include <set>
#include <sstream>
#include <string>

namespace lexfair {

namespace {

struct CoverLine {
  int number = 0;
  std::string key;
  std::vector<std::string> payload;
};

std::vector<CoverLine> read_cover_lines(std::istream& in) {
  std::vector<CoverLine> out;
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
    std::istringstream probe(raw);
    std::string token;
    if (!(probe >> token)) continue;
    auto colon = raw.find(':');
    if (colon == std::string::npos)
      throw Error(ErrorCode::ParseError,
                  "line " + std::to_string(number) + ": expected '<directive>:'");
    CoverLine line;
    line.number = number;
    {
      std::istringstream head(raw.substr(0, colon));
      std::string word;
      while (head >> word) {
        if (!line.key.empty())
          throw Error(ErrorCode::ParseError, "line " + std::to_string(number) +
                                                 ": one directive per line");
        line.key = word;
      }
    }
    std::istringstream tail(raw.substr(colon + 1));
    std::string word;
    while (tail >> word) line.payload.push_back(word);
    out.push_back(std::move(line));
  }
  return out;
}

int parse_cover_int(const std::string& text, int line_number) {
  try {
    std::size_t used = 0;
    int value = std::stoi(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return value;
  } catch (const std::exception&) {
    throw Error(ErrorCode::ParseError, "line " + std::to_string(line_number) +
                                           ": '" + text + "' is not an integer");
  }
}

}  // namespace

X3CInstance parse_x3c(std::istream& in) {
  X3CInstance x3c;
  bool saw_universe = false;
  for (const CoverLine& line : read_cover_lines(in)) {
    if (line.key == "universe") {
      if (saw_universe || line.payload.size() != 1)
        throw Error(ErrorCode::ParseError,
                    "line " + std::to_string(line.number) +
                        ": 'universe:' takes one number and appears once");
      x3c.universe_size = parse_cover_int(line.payload[0], line.number);
      saw_universe = true;
    } else if (line.key == "set") {
      if (line.payload.size() != 3)
        throw Error(ErrorCode::ParseError,
                    "line " + std::to_string(line.number) +
                        ": 'set:' takes exactly three elements here");
      std::array<int, 3> subset{};
      for (int i = 0; i < 3; ++i)
        subset[i] = parse_cover_int(line.payload[i], line.number);
      std::sort(subset.begin(), subset.end());
      x3c.subsets.push_back(subset);
    } else {
      throw Error(ErrorCode::ParseError, "line " + std::to_string(line.number) +
                                             ": expected 'universe:' or 'set:'");
    }
  }
  if (!saw_universe)
    throw Error(ErrorCode::ParseError, "missing 'universe:' directive");
  return x3c;
}

void validate_x3c(const X3CInstance& x3c) {
  const int m = x3c.universe_size;
  if (m <= 0 || m % 3 != 0)
    throw Error(ErrorCode::InvalidX3C,
                "universe size must be a positive multiple of 3, got " +
                    std::to_string(m));
  if (x3c.subsets.empty())
    throw Error(ErrorCode::InvalidX3C, "at least one subset is required");
  std::set<std::array<int, 3>> seen;
  std::vector<bool> covered(m, false);
  for (const auto& subset : x3c.subsets) {
    for (int element : subset)
      if (element < 1 || element > m)
        throw Error(ErrorCode::InvalidX3C,
                    "element " + std::to_string(element) + " outside 1.." +
                        std::to_string(m));
    if (subset[0] == subset[1] || subset[1] == subset[2])
      throw Error(ErrorCode::InvalidX3C,
                  "subsets must contain three distinct elements");
    std::array<int, 3> sorted = subset;
    std::sort(sorted.begin(), sorted.end());
    if (!seen.insert(sorted).second)
      throw Error(ErrorCode::InvalidX3C, "duplicate subset");
    for (int element : subset) covered[element - 1] = true;
  }
  for (int element = 1; element <= m; ++element)
    if (!covered[element - 1])
      throw Error(ErrorCode::InvalidX3C, "element " + std::to_string(element) +
                                             " is not covered by any subset");
}

namespace {

std::string chore_copy_id(int element, int copy) {
  return "c" + std::to_string(element) + "_" + std::to_string(copy);
}

}  // namespace

Instance reduce_x3c(const X3CInstance& x3c) {
  validate_x3c(x3c);
  const int m = x3c.universe_size;
  const int n = static_cast<int>(x3c.subsets.size());
  const int k = m / 3;

  RawInstance raw;
  raw.agent_count = 2 * n;
  // 2n chore copies per element, then the k cover goods.
  for (int element = 1; element <= m; ++element)
    for (int copy = 1; copy <= 2 * n; ++copy)
      raw.items.push_back(chore_copy_id(element, copy));
  std::vector<std::string> goods;
  for (int j = 1; j <= k; ++j) goods.push_back("g" + std::to_string(j));
  raw.items.insert(raw.items.end(), goods.begin(), goods.end());

  for (int j = 1; j <= n; ++j) {
    // Both agents of a pair share one ordering: every chore copy of elements
    // outside their subset, then all goods, then their subset's chore copies.
    std::vector<RawOrderingEntry> entries;
    entries.reserve(raw.items.size());
    const auto& subset = x3c.subsets[j - 1];
    auto in_subset = [&](int element) {
      return std::find(subset.begin(), subset.end(), element) != subset.end();
    };
    for (int element = 1; element <= m; ++element)
      if (!in_subset(element))
        for (int copy = 1; copy <= 2 * n; ++copy)
          entries.push_back({chore_copy_id(element, copy), false});
    for (const std::string& good : goods) entries.push_back({good, true});
    for (int element : subset)
      for (int copy = 1; copy <= 2 * n; ++copy)
        entries.push_back({chore_copy_id(element, copy), false});
    raw.orderings.emplace_back(2 * j - 1, entries);
    raw.orderings.emplace_back(2 * j, std::move(entries));
  }
  return validate_instance(raw);
}

Allocation x3c_witness(const X3CInstance& x3c, const std::vector<int>& cover) {
  validate_x3c(x3c);
  const int m = x3c.universe_size;
  const int n = static_cast<int>(x3c.subsets.size());
  const int k = m / 3;

  if (static_cast<int>(cover.size()) != k)
    throw Error(ErrorCode::NotACover,
                "an exact cover must use exactly " + std::to_string(k) +
                    " subsets, got " + std::to_string(cover.size()));
  std::vector<int> sorted = cover;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw Error(ErrorCode::NotACover, "cover lists a subset twice");
  std::vector<bool> covered(m, false);
  for (int index : sorted) {
    if (index < 1 || index > n)
      throw Error(ErrorCode::NotACover, "subset index " + std::to_string(index) +
                                            " outside 1.." + std::to_string(n));
    for (int element : x3c.subsets[index - 1]) {
      if (covered[element - 1])
        throw Error(ErrorCode::NotACover,
                    "element " + std::to_string(element) +
                        " covered twice; the cover is not exact");
      covered[element - 1] = true;
    }
  }
  // k disjoint triples cover 3k = m elements, so coverage is now complete.

  Allocation out(2 * n, 2 * m * n + k);
  for (int j = 1; j <= k; ++j) {
    int index = sorted[j - 1];
    ItemSet& bundle = out.bundle(2 * index);
    bundle.set(2 * m * n + (j - 1));  // good j
    for (int element : x3c.subsets[index - 1])
      for (int copy = 1; copy <= 2 * n; ++copy)
        bundle.set((element - 1) * 2 * n + (copy - 1));
  }
  return out;
}

SetCoverInstance parse_setcover(std::istream& in) {
  SetCoverInstance sc;
  bool saw_universe = false;
  bool saw_budget = false;
  for (const CoverLine& line : read_cover_lines(in)) {
    if (line.key == "universe") {
      if (saw_universe || line.payload.size() != 1)
        throw Error(ErrorCode::ParseError,
                    "line " + std::to_string(line.number) +
                        ": 'universe:' takes one number and appears once");
      sc.universe_size = parse_cover_int(line.payload[0], line.number);
      saw_universe = true;
    } else if (line.key == "k") {
      if (saw_budget || line.payload.size() != 1)
        throw Error(ErrorCode::ParseError,
                    "line " + std::to_string(line.number) +
                        ": 'k:' takes one number and appears once");
      sc.budget = parse_cover_int(line.payload[0], line.number);
      saw_budget = true;
    } else if (line.key == "set") {
      std::vector<int> subset;
      subset.reserve(line.payload.size());
      for (const std::string& token : line.payload)
        subset.push_back(parse_cover_int(token, line.number));
      std::sort(subset.begin(), subset.end());
      sc.subsets.push_back(std::move(subset));
    } else {
      throw Error(ErrorCode::ParseError,
                  "line " + std::to_string(line.number) +
                      ": expected 'universe:', 'k:' or 'set:'");
    }
  }
  if (!saw_universe)
    throw Error(ErrorCode::ParseError, "missing 'universe:' directive");
  if (!saw_budget) throw Error(ErrorCode::ParseError, "missing 'k:' directive");
  return sc;
}

void validate_setcover(const SetCoverInstance& sc) {
  const int m = sc.universe_size;
  if (m <= 0)
    throw Error(ErrorCode::InvalidSetCover,
                "universe size must be positive, got " + std::to_string(m));
  if (sc.budget < 1)
    throw Error(ErrorCode::InvalidSetCover,
                "budget must be at least 1, got " + std::to_string(sc.budget));
  if (sc.subsets.empty())
    throw Error(ErrorCode::InvalidSetCover, "at least one subset is required");
  if (sc.budget > static_cast<int>(sc.subsets.size()))
    throw Error(ErrorCode::InvalidSetCover,
                "budget " + std::to_string(sc.budget) +
                    " exceeds the number of subsets (" +
                    std::to_string(sc.subsets.size()) +
                    "), which the construction requires");
  std::vector<bool> covered(m, false);
  for (const auto& subset : sc.subsets) {
    if (subset.empty())
      throw Error(ErrorCode::InvalidSetCover, "subsets must be non-empty");
    for (std::size_t i = 0; i < subset.size(); ++i) {
      int element = subset[i];
      if (element < 1 || element > m)
        throw Error(ErrorCode::InvalidSetCover,
                    "element " + std::to_string(element) + " outside 1.." +
                        std::to_string(m));
      if (i > 0 && subset[i] == subset[i - 1])
        throw Error(ErrorCode::InvalidSetCover,
                    "subset lists element " + std::to_string(element) + " twice");
      covered[element - 1] = true;
    }
  }
  for (int element = 1; element <= m; ++element)
    if (!covered[element - 1])
      throw Error(ErrorCode::InvalidSetCover,
                  "element " + std::to_string(element) +
                      " is not covered by any subset");
}

int setcover_setter_agent() { return 1; }
int setcover_filler_agent() { return 2; }
int setcover_subset_agent(int subset) { return 2 + subset; }
int setcover_dummy_agent(const SetCoverInstance& sc, int element) {
  return 2 + static_cast<int>(sc.subsets.size()) + element;
}

Instance reduce_setcover(const SetCoverInstance& sc) {
  validate_setcover(sc);
  const int m = sc.universe_size;
  const int n = static_cast<int>(sc.subsets.size());
  const int k = sc.budget;

  auto chore = [](int i) { return "c" + std::to_string(i); };
  auto filler = [](int i) { return "f" + std::to_string(i); };
  auto good = [](int j) { return "g" + std::to_string(j); };

  RawInstance raw;
  raw.agent_count = n + m + 2;
  for (int i = 1; i <= m; ++i) raw.items.push_back(chore(i));
  for (int i = 1; i <= m; ++i) raw.items.push_back(filler(i));
  for (int j = 1; j <= k; ++j) raw.items.push_back(good(j));
  raw.items.push_back("cx");
  raw.items.push_back("gx");

  // Every item is common: the f's, g's and gx are goods for everyone, the
  // c's and cx chores for everyone. Orderings differ per role.
  auto entry = [](const std::string& id, bool is_good) {
    return RawOrderingEntry{id, is_good};
  };

  {  // setter: gx, all element chores, cx, all fillers, the cover goods
    std::vector<RawOrderingEntry> order;
    order.push_back(entry("gx", true));
    for (int i = 1; i <= m; ++i) order.push_back(entry(chore(i), false));
    order.push_back(entry("cx", false));
    for (int i = 1; i <= m; ++i) order.push_back(entry(filler(i), true));
    for (int j = 1; j <= k; ++j) order.push_back(entry(good(j), true));
    raw.orderings.emplace_back(setcover_setter_agent(), std::move(order));
  }
  {  // filler: all fillers, cx, gx, all element chores, the cover goods
    std::vector<RawOrderingEntry> order;
    for (int i = 1; i <= m; ++i) order.push_back(entry(filler(i), true));
    order.push_back(entry("cx", false));
    order.push_back(entry("gx", true));
    for (int i = 1; i <= m; ++i) order.push_back(entry(chore(i), false));
    for (int j = 1; j <= k; ++j) order.push_back(entry(good(j), true));
    raw.orderings.emplace_back(setcover_filler_agent(), std::move(order));
  }
  // Baseline ordering shared by dummies; subset agent j swaps the positions
  // of c_i and f_i for every element i of its subset.
  auto baseline = [&](const std::vector<int>& swap_elements) {
    std::vector<RawOrderingEntry> order;
    auto swapped = [&](int element) {
      return std::find(swap_elements.begin(), swap_elements.end(), element) !=
             swap_elements.end();
    };
    order.push_back(entry("gx", true));
    order.push_back(entry("cx", false));
    for (int i = 1; i <= m; ++i)
      order.push_back(swapped(i) ? entry(filler(i), true)
                                 : entry(chore(i), false));
    for (int j = 1; j <= k; ++j) order.push_back(entry(good(j), true));
    for (int i = 1; i <= m; ++i)
      order.push_back(swapped(i) ? entry(chore(i), false)
                                 : entry(filler(i), true));
    return order;
  };
  for (int j = 1; j <= n; ++j)
    raw.orderings.emplace_back(setcover_subset_agent(j),
                               baseline(sc.subsets[j - 1]));
  for (int d = 1; d <= m; ++d)
    raw.orderings.emplace_back(setcover_dummy_agent(sc, d), baseline({}));
  return validate_instance(raw);
}

Allocation setcover_witness(const SetCoverInstance& sc,
                            const std::vector<int>& cover) {
  validate_setcover(sc);
  const int m = sc.universe_size;
  const int n = static_cast<int>(sc.subsets.size());
  const int k = sc.budget;

  if (cover.empty() || static_cast<int>(cover.size()) > k)
    throw Error(ErrorCode::NotACover,
                "cover must use between 1 and " + std::to_string(k) +
                    " subsets, got " + std::to_string(cover.size()));
  std::vector<int> sorted = cover;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw Error(ErrorCode::NotACover, "cover lists a subset twice");
  std::vector<bool> covered(m, false);
  for (int index : sorted) {
    if (index < 1 || index > n)
      throw Error(ErrorCode::NotACover, "subset index " + std::to_string(index) +
                                            " outside 1.." + std::to_string(n));
    for (int element : sc.subsets[index - 1]) covered[element - 1] = true;
  }
  for (int element = 1; element <= m; ++element)
    if (!covered[element - 1])
      throw Error(ErrorCode::NotACover, "element " + std::to_string(element) +
                                            " is left uncovered");

  // A cover smaller than the budget is padded with the smallest unused
  // subset indices (supersets of covers are covers), so that all k cover
  // goods land with subset agents; padding agents claim no chores.
  for (int index = 1; static_cast<int>(sorted.size()) < k; ++index) {
    if (std::find(sorted.begin(), sorted.end(), index) == sorted.end())
      sorted.push_back(index);
  }
  std::sort(sorted.begin(), sorted.end());

  // Item layout of reduce_setcover: c1..cm, f1..fm, g1..gk, cx, gx.
  const int universe = 2 * m + k + 2;
  auto chore_item = [](int i) { return i - 1; };
  auto filler_item = [&](int i) { return m + i - 1; };
  auto good_item = [&](int j) { return 2 * m + j - 1; };
  const Item cx = 2 * m + k;
  const Item gx = 2 * m + k + 1;

  Allocation out(n + m + 2, universe);
  out.bundle(setcover_setter_agent()).set(gx);
  out.bundle(setcover_setter_agent()).set(cx);
  for (int i = 1; i <= m; ++i)
    out.bundle(setcover_filler_agent()).set(filler_item(i));

  // The j-th cover subset's agent takes good j plus the chores of every
  // element no earlier cover subset contains.
  std::vector<bool> claimed(m, false);
  for (std::size_t j = 0; j < sorted.size(); ++j) {
    ItemSet& bundle = out.bundle(setcover_subset_agent(sorted[j]));
    bundle.set(good_item(static_cast<int>(j) + 1));
    for (int element : sc.subsets[sorted[j] - 1]) {
      if (claimed[element - 1]) continue;
      claimed[element - 1] = true;
      bundle.set(chore_item(element));
    }
  }
  return out;
}

}  // namespace lexfair
