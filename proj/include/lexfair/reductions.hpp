#pragma once

#include <array>
#include <iosfwd>
#include <vector>

#include "lexfair/model.hpp"

namespace lexfair {

/// Exact cover by 3-sets: universe 1..universe_size (a multiple of 3) and a
/// family of 3-element subsets. Text format: `universe: <m>` then one
/// `set: <a> <b> <c>` line per subset, `#` comments.
struct X3CInstance {
  int universe_size = 0;
  std::vector<std::array<int, 3>> subsets;  // each ascending
};

X3CInstance parse_x3c(std::istream& in);
/// Checks ranges, 3 distinct elements per subset, no duplicate subsets, every
/// element covered, universe size a positive multiple of 3. Throws InvalidX3C.
void validate_x3c(const X3CInstance& x3c);

/// Fair-division instance whose envy-free-up-to-any-item allocations encode
/// exact covers: two agents per subset, 2n chore copies per element that
/// everyone must share, and one good per cover slot. The goods can absorb the
/// chores of exactly one subset each, so an EFX allocation exists exactly when
/// an exact cover does.
Instance reduce_x3c(const X3CInstance& x3c);

/// The canonical EFX + PO allocation for a given exact cover (list of 1-based
/// subset indices): the j-th cover subset's second agent receives good j plus
/// every chore copy of that subset's elements; everyone else gets nothing.
/// Throws NotACover unless the indices form an exact cover.
Allocation x3c_witness(const X3CInstance& x3c, const std::vector<int>& cover);

/// Set cover: universe 1..universe_size, arbitrary non-empty subsets, budget
/// k. Text format: `universe: <m>`, `k: <k>`, then `set: ...` lines.
struct SetCoverInstance {
  int universe_size = 0;
  std::vector<std::vector<int>> subsets;  // each ascending
  int budget = 0;
};

SetCoverInstance parse_setcover(std::istream& in);
/// Checks ranges, non-empty subsets with distinct elements, positive budget,
/// and that the subsets jointly cover the universe. Throws InvalidSetCover.
void validate_setcover(const SetCoverInstance& sc);

/// Fair-division instance whose maximin + rank-maximal allocations encode set
/// covers: a setter agent, a filler agent, one agent per subset and one dummy
/// per element; element chores may only go to agents whose subset contains
/// the element, and the k cover goods are the only items able to shield them.
Instance reduce_setcover(const SetCoverInstance& sc);

/// Agent numbering of the reduced instance: 1 = setter, 2 = filler, 2+j =
/// subset agent j, 2+n+d = dummy d.
int setcover_setter_agent();
int setcover_filler_agent();
int setcover_subset_agent(int subset);
int setcover_dummy_agent(const SetCoverInstance& sc, int element);

/// The canonical MMS + RM allocation for a cover of at most `budget` subsets:
/// the setter takes its shield good and chore, the filler takes all filler
/// goods, and the j-th cover subset's agent takes good j plus the chores of
/// the elements it is first (within the cover) to contain. Throws NotACover.
Allocation setcover_witness(const SetCoverInstance& sc,
                            const std::vector<int>& cover);

}  // namespace lexfair
