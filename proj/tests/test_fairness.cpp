#include "doctest.h"

#include <vector>

#include "helpers.hpp"
#include "lexfair/fairness.hpp"
#include "lexfair/generators.hpp"
#include "lexfair/model.hpp"
#include "lexfair/prefs.hpp"

using namespace lexfair;

namespace {

struct PairVerdict {
  bool ef = true;
  bool ef1 = true;
  bool efx = true;
};

/// Envy verdicts for one ordered pair straight from the definitions, written
/// against the comparator only — the independent oracle for check_fairness.
PairVerdict reference_pair(const Instance& instance, const Allocation& a,
                           int envious, int envied) {
  PairVerdict v;
  if (!prefers(instance, envious, a.bundle(envied), a.bundle(envious)))
    return v;
  v.ef = false;
  bool some_removal_works = false;
  bool every_removal_works = true;
  bool any_candidate = false;
  for (Item item = 0; item < instance.item_count(); ++item) {
    bool good_of_envied =
        instance.is_good(envious, item) && a.bundle(envied).test(item);
    bool chore_of_own =
        instance.is_chore(envious, item) && a.bundle(envious).test(item);
    if (!good_of_envied && !chore_of_own) continue;
    any_candidate = true;
    ItemSet mine = a.bundle(envious);
    ItemSet theirs = a.bundle(envied);
    if (chore_of_own)
      mine.reset(item);
    else
      theirs.reset(item);
    bool repaired = !prefers(instance, envious, theirs, mine);
    some_removal_works = some_removal_works || repaired;
    every_removal_works = every_removal_works && repaired;
  }
  // Envy guarantees at least one removable good-of-theirs or chore-of-mine.
  REQUIRE(any_candidate);
  v.ef1 = some_removal_works;
  v.efx = every_removal_works;
  return v;
}

bool reference_check(const Instance& instance, const Allocation& a,
                     Property notion) {
  int n = instance.agent_count();
  if (notion == Property::MMS) {
    for (int agent = 1; agent <= n; ++agent)
      if (!weakly_prefers(instance, agent, a.bundle(agent),
                          mms_bundle_bruteforce(instance, agent).bundle))
        return false;
    return true;
  }
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      if (i == j) continue;
      PairVerdict v = reference_pair(instance, a, i, j);
      if (notion == Property::EF && !v.ef) return false;
      if (notion == Property::EF1 && !v.ef1) return false;
      if (notion == Property::EFX && !v.efx) return false;
    }
  return true;
}

}  // namespace

TEST_SUITE("fairness") {

TEST_CASE("the separable instance's reference allocation is envy-free up to any item") {
  Instance instance = fixtures::separable_3x6();
  Allocation allocation =
      fixtures::alloc(instance, {{"o2", "o4"}, {"o1", "o5", "o6"}, {"o3"}});
  CHECK(check_fairness(instance, allocation, Property::EFX).pass);
  CHECK(check_fairness(instance, allocation, Property::EF1).pass);
  // Not fully envy-free, so the EFX pass is not vacuous.
  CHECK_FALSE(check_fairness(instance, allocation, Property::EF).pass);
}

TEST_CASE("identical-preference allocation fails exactly the expected pairs") {
  Instance instance = fixtures::identical_3x4();
  Allocation allocation =
      fixtures::alloc(instance, {{"o1", "o2"}, {}, {"o3", "o4"}});

  Report ef = check_fairness(instance, allocation, Property::EF);
  REQUIRE_FALSE(ef.pass);
  REQUIRE(ef.envy.size() == 3);
  CHECK(ef.envy[0].envious == 1);
  CHECK(ef.envy[0].envied == 2);
  CHECK(ef.envy[1].envious == 1);
  CHECK(ef.envy[1].envied == 3);
  CHECK(ef.envy[2].envious == 3);
  CHECK(ef.envy[2].envied == 2);

  Report ef1 = check_fairness(instance, allocation, Property::EF1);
  REQUIRE_FALSE(ef1.pass);
  REQUIRE(ef1.envy.size() == 1);
  CHECK(ef1.envy[0].envious == 3);
  CHECK(ef1.envy[0].envied == 2);
  CHECK_FALSE(ef1.envy[0].item.has_value());

  Report efx = check_fairness(instance, allocation, Property::EFX);
  REQUIRE_FALSE(efx.pass);
  REQUIRE(efx.envy.size() == 2);
  CHECK(efx.envy[0].envious == 3);
  CHECK(efx.envy[0].envied == 2);
  CHECK(efx.envy[0].item == instance.item("o3"));
  CHECK(efx.envy[1].item == instance.item("o4"));
}

TEST_CASE("maximin verdicts on the three-agent eight-item instance") {
  Instance instance = fixtures::near_identical_3x8();

  Allocation alg2_out =
      fixtures::alloc(instance, {{"o3", "o4", "o6", "o8"}, {"o2", "o7"}, {"o1", "o5"}});
  Report report = check_fairness(instance, alg2_out, Property::MMS);
  REQUIRE_FALSE(report.pass);
  REQUIRE(report.mms.size() == 1);
  CHECK(report.mms[0].agent == 3);
  CHECK(report.mms[0].threshold ==
        fixtures::items(instance, {"o1", "o4", "o6", "o8"}));

  Allocation alg3_out =
      fixtures::alloc(instance, {{"o1", "o4", "o6", "o8"}, {"o7"}, {"o2", "o3", "o5"}});
  CHECK(check_fairness(instance, alg3_out, Property::MMS).pass);
}

TEST_CASE("degenerate and error cases") {
  Instance empty = fixtures::mk("agents: 2\nitems:\nagent 1:\nagent 2:\n");
  Allocation nothing(empty);
  CHECK(check_fairness(empty, nothing, Property::EF).pass);
  CHECK(check_fairness(empty, nothing, Property::MMS).pass);

  Instance instance = fixtures::separable_3x6();
  Allocation partial = fixtures::alloc(instance, {{"o1"}, {}, {}});
  CHECK(fixtures::thrown_code([&] {
          check_fairness(instance, partial, Property::EF1);
        }) == ErrorCode::IncompleteAllocation);
  Allocation wrong(2, 6);
  CHECK(fixtures::thrown_code([&] {
          check_fairness(instance, wrong, Property::EF);
        }) == ErrorCode::AgentMismatch);
  Allocation complete =
      fixtures::alloc(instance, {{"o1", "o2", "o3", "o4", "o5", "o6"}, {}, {}});
  CHECK(fixtures::thrown_code([&] {
          check_fairness(instance, complete, Property::PO);
        }) == ErrorCode::UsageError);
  CHECK(fixtures::thrown_code([&] {
          check_fairness(instance, complete, Property::RM);
        }) == ErrorCode::UsageError);
}

TEST_CASE("closed-form maximin bundles hit the golden values") {
  Instance ex45 = fixtures::near_identical_3x8();
  CHECK(mms_bundle(ex45, 3).bundle ==
        fixtures::items(ex45, {"o1", "o4", "o6", "o8"}));

  Instance ex1 = fixtures::separable_3x6();
  CHECK(mms_bundle(ex1, 1).bundle ==
        fixtures::items(ex1, {"o1", "o4", "o5", "o6"}));

  // Top item a good and fewer goods than agents: empty maximin share.
  // Top item a chore: that chore plus all of the agent's goods.
  Instance duo = fixtures::mk(
      "agents: 2\n"
      "items: o1 o2\n"
      "agent 1: +o1 -o2\n"
      "agent 2: -o2 +o1\n");
  CHECK(mms_bundle(duo, 1).bundle.empty());
  CHECK(mms_bundle(duo, 2).bundle == fixtures::items(duo, {"o1", "o2"}));

  // Top item a good with goods to spare: drop the n-1 most important goods.
  Instance plenty = fixtures::mk(
      "agents: 2\n"
      "items: o1 o2 o3 o4\n"
      "agent 1: +o1 +o2 +o3 -o4\n"
      "agent 2: -o4 +o3 +o2 +o1\n");
  CHECK(mms_bundle(plenty, 1).bundle == fixtures::items(plenty, {"o2", "o3"}));

  // One agent gets everything; no items yields the empty bundle.
  Instance solo = fixtures::mk("agents: 1\nitems: o1 o2\nagent 1: -o1 -o2\n");
  CHECK(mms_bundle(solo, 1).bundle == solo.all_items());
  CHECK(mms_bundle_bruteforce(solo, 1).bundle == solo.all_items());
  Instance bare = fixtures::mk("agents: 2\nitems:\nagent 1:\nagent 2:\n");
  CHECK(mms_bundle(bare, 1).bundle.empty());
}

TEST_CASE("brute-force maximin agrees with the closed form everywhere") {
  GenParams params;
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    params.agents = 2 + static_cast<int>(seed % 2);
    params.items = 3 + static_cast<int>(seed % 4);
    params.seed = seed;
    Instance instance = gen_random(params);
    for (int agent = 1; agent <= instance.agent_count(); ++agent) {
      MmsBundle closed = mms_bundle(instance, agent);
      MmsBundle brute = mms_bundle_bruteforce(instance, agent);
      // The preference order is strict on distinct bundles, so
      // preference-equivalence forces set equality.
      REQUIRE(closed.bundle == brute.bundle);
      CHECK(closed.method == MmsBundle::Method::ClosedForm);
      CHECK(brute.method == MmsBundle::Method::BruteForce);
    }
  }
}

TEST_CASE("brute-force maximin respects the enumeration cap") {
  GenParams params;
  params.agents = 3;
  params.items = 8;
  params.seed = 7;
  Instance instance = gen_random(params);
  CHECK(fixtures::thrown_code([&] {
          mms_bundle_bruteforce(instance, 1, 100);
        }) == ErrorCode::CapExceeded);
}

TEST_CASE("verifier verdicts match the definitional oracle on random pairs") {
  GenParams params;
  for (std::uint64_t seed = 0; seed < 80; ++seed) {
    params.agents = 2 + static_cast<int>(seed % 2);
    params.items = 4 + static_cast<int>(seed % 3);
    params.seed = seed;
    Instance instance = gen_random(params);
    fixtures::TestRng rng(seed * 977 + 13);
    for (int draw = 0; draw < 4; ++draw) {
      Allocation allocation = fixtures::random_complete(instance, rng);
      for (Property notion :
           {Property::EF, Property::EF1, Property::EFX, Property::MMS})
        REQUIRE(check_fairness(instance, allocation, notion).pass ==
                reference_check(instance, allocation, notion));
    }
  }
}

TEST_CASE("envy-freeness implies the relaxations on random pairs") {
  GenParams params;
  int efx_passes = 0;
  for (std::uint64_t seed = 0; seed < 120; ++seed) {
    params.agents = 2 + static_cast<int>(seed % 2);
    params.items = 3 + static_cast<int>(seed % 5);
    params.seed = seed * 31 + 5;
    Instance instance = gen_random(params);
    fixtures::TestRng rng(seed);
    Allocation allocation = fixtures::random_complete(instance, rng);
    bool ef = check_fairness(instance, allocation, Property::EF).pass;
    bool ef1 = check_fairness(instance, allocation, Property::EF1).pass;
    bool efx = check_fairness(instance, allocation, Property::EFX).pass;
    bool mms = check_fairness(instance, allocation, Property::MMS).pass;
    if (efx) {
      ++efx_passes;
      CHECK(ef1);
      CHECK(mms);
    }
    if (ef) CHECK(efx);
  }
  CHECK(efx_passes > 0);  // the implication sample is not vacuous
}

}  // TEST_SUITE
