#include "lexfair/cli.hpp"

#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "lexfair/algorithms.hpp"
#include "lexfair/efficiency.hpp"
#include "lexfair/fairness.hpp"
#include "lexfair/generators.hpp"
#include "lexfair/io.hpp"
#include "lexfair/model.hpp"
#include "lexfair/reductions.hpp"
#include "lexfair/search.hpp"

namespace lexfair {

namespace {

Instance load_instance_file(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    throw Error(ErrorCode::UsageError, "cannot open instance file: " + path);
  return load_instance(in);
}

Allocation load_allocation_file(const std::string& path,
                                const Instance& instance, bool allow_partial) {
  std::ifstream in(path);
  if (!in)
    throw Error(ErrorCode::UsageError, "cannot open allocation file: " + path);
  return parse_allocation(in, instance, allow_partial);
}

Property parse_property(const std::string& name) {
  std::optional<Property> property = property_from_name(name);
  if (!property)
    throw Error(ErrorCode::UsageError, "unknown property: " + name);
  return *property;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string part;
  std::istringstream in(text);
  while (std::getline(in, part, sep)) parts.push_back(part);
  return parts;
}

std::vector<int> parse_int_list(const std::string& text,
                                const std::string& what) {
  std::vector<int> values;
  for (const std::string& token : split(text, ',')) {
    try {
      std::size_t used = 0;
      int value = std::stoi(token, &used);
      if (used != token.size()) throw std::invalid_argument(token);
      values.push_back(value);
    } catch (const std::exception&) {
      throw Error(ErrorCode::UsageError,
                  "invalid " + what + " entry: '" + token + "'");
    }
  }
  if (values.empty())
    throw Error(ErrorCode::UsageError, "empty " + what + " list");
  return values;
}

int run_check(const std::string& instance_path,
              const std::string& allocation_path,
              const std::string& property_name, std::uint64_t cap, int jobs,
              bool partial, std::ostream& out) {
  Instance instance = load_instance_file(instance_path);
  Allocation allocation =
      load_allocation_file(allocation_path, instance, partial);
  Property property = parse_property(property_name);

  Report report;
  switch (property) {
    case Property::PO:
      report = check_po_exhaustive(instance, allocation, cap, jobs);
      break;
    case Property::RM:
      report = check_rm(instance, allocation);
      break;
    default:
      report = check_fairness(instance, allocation, property);
      break;
  }
  out << format_report(instance, report);
  return report.pass ? 0 : 1;
}

int run_solve(const std::string& instance_path, const std::string& algorithm,
              bool force, std::ostream& out) {
  if (force && algorithm != "ef1-po")
    throw Error(ErrorCode::UsageError,
                "--force applies only to --algorithm ef1-po");
  Instance instance = load_instance_file(instance_path);
  Allocation allocation;
  if (algorithm == "efx-po")
    allocation = solve_efx_po_separable(instance);
  else if (algorithm == "ef1-po")
    allocation = solve_ef1_po_common_terrible(instance, force);
  else if (algorithm == "mms-po")
    allocation = solve_mms_po(instance);
  else
    throw Error(ErrorCode::UsageError, "unknown algorithm: " + algorithm);
  out << format_allocation(instance, allocation);
  return 0;
}

int run_exists(const std::string& instance_path, const std::string& properties,
               std::uint64_t cap, std::ostream& out) {
  Instance instance = load_instance_file(instance_path);
  PropertyQuery query;
  query.cap = cap;
  for (const std::string& name : split(properties, ','))
    query.properties.push_back(parse_property(name));
  if (query.properties.empty())
    throw Error(ErrorCode::UsageError, "empty property list");

  std::optional<Allocation> witness = exists_allocation(instance, query);
  if (!witness) {
    out << "NONE\n";
    return 1;
  }
  out << format_allocation(instance, *witness);
  return 0;
}

int run_mms(const std::string& instance_path, int agent, bool brute_force,
            std::uint64_t cap, std::ostream& out) {
  Instance instance = load_instance_file(instance_path);
  MmsBundle result = brute_force ? mms_bundle_bruteforce(instance, agent, cap)
                                 : mms_bundle(instance, agent);
  out << format_bundle(instance, result.bundle) << "\n";
  return 0;
}

int run_reduce(const std::string& kind, const std::string& path,
               const std::string& witness, const std::string& witness_out,
               std::ostream& out) {
  if (!witness_out.empty() && witness.empty())
    throw Error(ErrorCode::UsageError, "--witness-out requires --witness");

  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::UsageError, "cannot open file: " + path);

  Instance instance;
  std::optional<Allocation> allocation;
  if (kind == "x3c") {
    X3CInstance x3c = parse_x3c(in);
    validate_x3c(x3c);
    instance = reduce_x3c(x3c);
    if (!witness.empty())
      allocation = x3c_witness(x3c, parse_int_list(witness, "cover"));
  } else {
    SetCoverInstance sc = parse_setcover(in);
    validate_setcover(sc);
    instance = reduce_setcover(sc);
    if (!witness.empty())
      allocation = setcover_witness(sc, parse_int_list(witness, "cover"));
  }

  out << format_instance(instance);
  if (allocation) {
    out << "# witness:\n";
    std::istringstream lines(format_allocation(instance, *allocation));
    std::string line;
    while (std::getline(lines, line)) out << "# " << line << "\n";
    if (!witness_out.empty()) {
      std::ofstream file(witness_out);
      if (!file)
        throw Error(ErrorCode::UsageError,
                    "cannot write witness file: " + witness_out);
      file << format_allocation(instance, *allocation);
    }
  }
  return 0;
}

int run_gen(const GenParams& params, std::ostream& out) {
  out << format_instance(gen_random(params));
  return 0;
}

int run_enumerate_rm(const std::string& instance_path, std::uint64_t cap,
                     std::ostream& out) {
  Instance instance = load_instance_file(instance_path);
  std::uint64_t total = 0;
  enumerate_rm_allocations(instance, cap, [&](const Allocation& allocation) {
    out << format_allocation(instance, allocation) << "\n";
    ++total;
    return true;
  });
  out << "# total: " << total << "\n";
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Fair allocation of indivisible goods and chores under "
               "lexicographic preferences"};
  app.require_subcommand(1);

  // check
  std::string check_instance, check_allocation, check_property;
  std::uint64_t check_cap = kDefaultCap;
  int check_jobs = 1;
  bool check_partial = false;
  CLI::App* check = app.add_subcommand(
      "check", "Verify a property of an allocation");
  check->add_option("instance", check_instance, "Instance file")->required();
  check->add_option("--allocation", check_allocation, "Allocation file")
      ->required();
  check->add_option("--property", check_property, "ef|ef1|efx|mms|po|rm")
      ->required();
  check->add_option("--cap", check_cap, "Enumeration ceiling");
  check->add_option("--jobs", check_jobs, "Worker threads for the po check")
      ->check(CLI::PositiveNumber);
  check->add_flag("--partial", check_partial,
                  "Allow unassigned items (po only)");

  // solve
  std::string solve_instance, solve_algorithm;
  bool solve_force = false;
  CLI::App* solve = app.add_subcommand(
      "solve", "Run one of the constructive algorithms");
  solve->add_option("instance", solve_instance, "Instance file")->required();
  solve->add_option("--algorithm", solve_algorithm, "efx-po|ef1-po|mms-po")
      ->required();
  solve->add_flag("--force", solve_force,
                  "Run ef1-po even with fewer than n-1 common terrible chores");

  // exists
  std::string exists_instance, exists_properties;
  std::uint64_t exists_cap = kDefaultCap;
  CLI::App* exists = app.add_subcommand(
      "exists", "Search for an allocation with the given properties");
  exists->add_option("instance", exists_instance, "Instance file")->required();
  exists->add_option("--properties", exists_properties,
                     "Comma-separated list, e.g. ef1,po")
      ->required();
  exists->add_option("--cap", exists_cap, "Enumeration ceiling");

  // mms
  std::string mms_instance;
  int mms_agent = 0;
  bool mms_brute = false;
  std::uint64_t mms_cap = kDefaultCap;
  CLI::App* mms = app.add_subcommand(
      "mms", "Print an agent's maximin-share bundle");
  mms->add_option("instance", mms_instance, "Instance file")->required();
  mms->add_option("--agent", mms_agent, "Agent number (1-based)")->required();
  mms->add_flag("--brute-force", mms_brute,
                "Enumerate all bundle partitions instead of the closed form");
  mms->add_option("--cap", mms_cap, "Enumeration ceiling");

  // reduce
  std::string reduce_kind, reduce_path, reduce_witness, reduce_witness_out;
  CLI::App* reduce = app.add_subcommand(
      "reduce", "Build the hardness-construction instance for a cover problem");
  reduce->add_option("kind", reduce_kind, "x3c|setcover")
      ->required()
      ->check(CLI::IsMember({"x3c", "setcover"}));
  reduce->add_option("file", reduce_path, "Cover problem file")->required();
  reduce->add_option("--witness", reduce_witness,
                     "Comma-separated subset indices of a cover; appends the "
                     "corresponding allocation as comments");
  reduce->add_option("--witness-out", reduce_witness_out,
                     "Also write the witness allocation to this file");

  // gen
  GenParams params;
  CLI::App* gen = app.add_subcommand(
      "gen", "Generate a random instance");
  gen->add_option("--agents", params.agents, "Number of agents");
  gen->add_option("--items", params.items, "Number of items");
  gen->add_option("--p", params.good_probability,
                  "Probability an item is a good");
  gen->add_option("--seed", params.seed, "64-bit seed");
  gen->add_flag("--objective", params.objective,
                "All agents share one goods set");
  gen->add_flag("--separable", params.separable,
                "Chores and goods form two blocks in every ordering");
  gen->add_flag("--terrible", params.require_terrible,
                "Every agent's most important item is a chore");
  gen->add_option("--common-terrible", params.common_terrible,
                  "Reserve this many chores as everyone's most important "
                  "items");

  // enumerate-rm
  std::string enum_instance;
  std::uint64_t enum_cap = kDefaultCap;
  CLI::App* enumerate = app.add_subcommand(
      "enumerate-rm", "List every rank-maximal allocation");
  enumerate->add_option("instance", enum_instance, "Instance file")->required();
  enumerate->add_option("--cap", enum_cap, "Enumeration ceiling");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);

    if (check->parsed())
      return run_check(check_instance, check_allocation, check_property,
                       check_cap, check_jobs, check_partial, out);
    if (solve->parsed())
      return run_solve(solve_instance, solve_algorithm, solve_force, out);
    if (exists->parsed())
      return run_exists(exists_instance, exists_properties, exists_cap, out);
    if (mms->parsed())
      return run_mms(mms_instance, mms_agent, mms_brute, mms_cap, out);
    if (reduce->parsed())
      return run_reduce(reduce_kind, reduce_path, reduce_witness,
                        reduce_witness_out, out);
    if (gen->parsed()) return run_gen(params, out);
    if (enumerate->parsed()) return run_enumerate_rm(enum_instance, enum_cap, out);
    throw Error(ErrorCode::UsageError, "no subcommand given");
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "UsageError\n" << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << error_code_name(e.code()) << "\n" << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "InternalError\n" << e.what() << "\n";
    return 2;
  }
}

}  // namespace lexfair
