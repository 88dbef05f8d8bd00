#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "lexfair/model.hpp"

namespace lexfair {

/// Instance text format, one directive per line, `#` starts a comment:
///
///   agents: 3
///   items: o1 o2 o3
///   agent 1: -o1 +o2 -o3
///
/// Every agent line lists all items in decreasing importance; `+` marks a good
/// and `-` (or the typographic minus) a chore.
RawInstance parse_raw_instance(std::istream& in);

/// Parses and validates in one step.
Instance load_instance(std::istream& in);
Instance load_instance_string(std::string_view text);

std::string format_instance(const Instance& instance);

/// Allocation text format: `agent <i>: <id> ...` lines, `#` comments. Agents
/// without a line receive the empty bundle. Unless `allow_partial`, every item
/// must be assigned.
Allocation parse_allocation(std::istream& in, const Instance& instance,
                            bool allow_partial);
Allocation parse_allocation_string(std::string_view text, const Instance& instance,
                                   bool allow_partial);

std::string format_allocation(const Instance& instance,
                              const Allocation& allocation);

/// Renders a bundle as its space-separated item identifiers in canonical order.
std::string format_bundle(const Instance& instance, const ItemSet& bundle);

/// Human-readable verdict plus one line per violation witness.
std::string format_report(const Instance& instance, const Report& report);

}  // namespace lexfair
