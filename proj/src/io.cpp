#include "lexfair/io.hpp"

#include <istream>
#include <sstream>
#include <vector>

namespace lexfair {

namespace {

// One significant line, split at the first ':' into head tokens and payload
// tokens. Comments run from '#' to end of line.
struct Line {
  int number = 0;
  std::vector<std::string> head;
  std::vector<std::string> payload;
};

std::vector<std::string> tokens_of(const std::string& text) {
  std::istringstream stream(text);
  std::vector<std::string> out;
  std::string token;
  while (stream >> token) out.push_back(std::move(token));
  return out;
}

std::vector<Line> read_lines(std::istream& in) {
  std::vector<Line> out;
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
    if (tokens_of(raw).empty()) continue;
    auto colon = raw.find(':');
    if (colon == std::string::npos)
      throw Error(ErrorCode::ParseError,
                  "line " + std::to_string(number) + ": expected '<directive>:'");
    Line line;
    line.number = number;
    line.head = tokens_of(raw.substr(0, colon));
    line.payload = tokens_of(raw.substr(colon + 1));
    out.push_back(std::move(line));
  }
  return out;
}

int parse_int(const std::string& text, int line_number) {
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

// Accepts "+id", "-id" and the typographic minus "−id".
RawOrderingEntry parse_signed_item(const std::string& token, int line_number) {
  static const std::string kMinus = "\xe2\x88\x92";
  RawOrderingEntry entry;
  std::size_t skip = 0;
  if (token.rfind(kMinus, 0) == 0) {
    entry.good = false;
    skip = kMinus.size();
  } else if (token[0] == '-') {
    entry.good = false;
    skip = 1;
  } else if (token[0] == '+') {
    entry.good = true;
    skip = 1;
  } else {
    throw Error(ErrorCode::ParseError,
                "line " + std::to_string(line_number) + ": item '" + token +
                    "' must carry a '+' (good) or '-' (chore) prefix");
  }
  entry.id = token.substr(skip);
  if (entry.id.empty())
    throw Error(ErrorCode::ParseError, "line " + std::to_string(line_number) +
                                           ": sign without an item identifier");
  return entry;
}

}  // namespace

RawInstance parse_raw_instance(std::istream& in) {
  RawInstance raw;
  bool saw_agents = false;
  bool saw_items = false;
  for (const Line& line : read_lines(in)) {
    if (line.head.size() == 1 && line.head[0] == "agents") {
      if (saw_agents)
        throw Error(ErrorCode::ParseError, "line " + std::to_string(line.number) +
                                               ": repeated 'agents:' directive");
      if (line.payload.size() != 1)
        throw Error(ErrorCode::ParseError, "line " + std::to_string(line.number) +
                                               ": 'agents:' takes one number");
      raw.agent_count = parse_int(line.payload[0], line.number);
      saw_agents = true;
    } else if (line.head.size() == 1 && line.head[0] == "items") {
      if (saw_items)
        throw Error(ErrorCode::ParseError, "line " + std::to_string(line.number) +
                                               ": repeated 'items:' directive");
      raw.items = line.payload;
      saw_items = true;
    } else if (line.head.size() == 2 && line.head[0] == "agent") {
      int agent = parse_int(line.head[1], line.number);
      std::vector<RawOrderingEntry> entries;
      entries.reserve(line.payload.size());
      for (const std::string& token : line.payload)
        entries.push_back(parse_signed_item(token, line.number));
      raw.orderings.emplace_back(agent, std::move(entries));
    } else {
      throw Error(ErrorCode::ParseError,
                  "line " + std::to_string(line.number) +
                      ": expected 'agents:', 'items:' or 'agent <i>:'");
    }
  }
  if (!saw_agents)
    throw Error(ErrorCode::ParseError, "missing 'agents:' directive");
  if (!saw_items)
    throw Error(ErrorCode::ParseError, "missing 'items:' directive");
  return raw;
}

Instance load_instance(std::istream& in) {
  return validate_instance(parse_raw_instance(in));
}

Instance load_instance_string(std::string_view text) {
  std::istringstream stream{std::string(text)};
  return load_instance(stream);
}

std::string format_instance(const Instance& instance) {
  std::ostringstream out;
  out << "agents: " << instance.agent_count() << "\n";
  out << "items:";
  for (const std::string& id : instance.item_ids()) out << ' ' << id;
  out << "\n";
  for (int agent = 1; agent <= instance.agent_count(); ++agent) {
    out << "agent " << agent << ":";
    for (Item item : instance.ordering(agent))
      out << ' ' << (instance.is_good(agent, item) ? '+' : '-')
          << instance.item_id(item);
    out << "\n";
  }
  return out.str();
}

Allocation parse_allocation(std::istream& in, const Instance& instance,
                            bool allow_partial) {
  Allocation allocation(instance);
  std::vector<bool> seen(instance.agent_count(), false);
  for (const Line& line : read_lines(in)) {
    if (line.head.size() != 2 || line.head[0] != "agent")
      throw Error(ErrorCode::ParseError, "line " + std::to_string(line.number) +
                                             ": expected 'agent <i>:'");
    int agent = parse_int(line.head[1], line.number);
    if (agent < 1 || agent > instance.agent_count())
      throw Error(ErrorCode::AgentMismatch,
                  "line " + std::to_string(line.number) + ": agent " +
                      std::to_string(agent) + " outside 1.." +
                      std::to_string(instance.agent_count()));
    if (seen[agent - 1])
      throw Error(ErrorCode::ParseError, "line " + std::to_string(line.number) +
                                             ": agent " + std::to_string(agent) +
                                             " listed twice");
    seen[agent - 1] = true;
    for (const std::string& id : line.payload) {
      Item item = instance.item(id);
      if (allocation.bundle(agent).test(item))
        throw Error(ErrorCode::DuplicateItem,
                    "line " + std::to_string(line.number) + ": item " + id +
                        " listed twice for agent " + std::to_string(agent));
      allocation.bundle(agent).set(item);
    }
  }
  validate_allocation(instance, allocation, !allow_partial);
  return allocation;
}

Allocation parse_allocation_string(std::string_view text, const Instance& instance,
                                   bool allow_partial) {
  std::istringstream stream{std::string(text)};
  return parse_allocation(stream, instance, allow_partial);
}

std::string format_allocation(const Instance& instance,
                              const Allocation& allocation) {
  std::ostringstream out;
  for (int agent = 1; agent <= allocation.agent_count(); ++agent) {
    out << "agent " << agent << ":";
    allocation.bundle(agent).for_each(
        [&](Item item) { out << ' ' << instance.item_id(item); });
    out << "\n";
  }
  return out.str();
}

std::string format_bundle(const Instance& instance, const ItemSet& bundle) {
  std::ostringstream out;
  bool first = true;
  bundle.for_each([&](Item item) {
    if (!first) out << ' ';
    out << instance.item_id(item);
    first = false;
  });
  return out.str();
}

std::string format_report(const Instance& instance, const Report& report) {
  std::ostringstream out;
  out << "property: " << property_name(report.property) << "\n";
  out << "result: " << (report.pass ? "pass" : "fail") << "\n";
  for (const EnvyWitness& w : report.envy) {
    out << "agent " << w.envious << " envies agent " << w.envied;
    if (report.property == Property::EF1)
      out << ": no single-item removal resolves the envy";
    else if (w.item)
      out << ": removing " << instance.item_id(*w.item) << " still leaves envy";
    out << "\n";
  }
  for (const MmsWitness& w : report.mms)
    out << "agent " << w.agent << " falls below its maximin bundle {"
        << format_bundle(instance, w.threshold) << "}\n";
  for (const RmWitness& w : report.rm) {
    out << "item " << instance.item_id(w.item);
    if (w.holder == 0)
      out << " is unassigned";
    else
      out << " held by agent " << w.holder;
    out << " but its eligible holders are {";
    for (std::size_t i = 0; i < w.eligible.size(); ++i)
      out << (i ? " " : "") << w.eligible[i];
    out << "}\n";
  }
  if (report.dominator) {
    out << "dominated by:\n";
    out << format_allocation(instance, *report.dominator);
  }
  return out.str();
}

}  // namespace lexfair
