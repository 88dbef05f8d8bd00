#pragma once

#include "lexfair/model.hpp"

namespace lexfair {

/// Parameters for random instance generation. Reproducible: the stream is
/// driven by splitmix64 with platform-independent bounded draws, so a given
/// (params, seed) always yields the same instance.
struct GenParams {
  int agents = 2;
  int items = 4;
  double good_probability = 0.5;  // per item (objective) or per agent-item
  bool objective = false;         // all agents share one goods set
  bool separable = false;         // each ordering: all chores then all goods or vice versa
  bool require_terrible = false;  // every agent's most important item is a chore
  int common_terrible = 0;        // at least this many chores terrible for everyone
  std::uint64_t seed = 0;
};

/// Items are named o1..om. Sampled goods flags are re-drawn (boundedly) when a
/// constraint demands a chore that sampling failed to produce; throws
/// InfeasibleParams for contradictory parameters and RetriesExhausted when
/// resampling cannot satisfy them.
Instance gen_random(const GenParams& params);

}  // namespace lexfair
