#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "groupbell/errors.hpp"
#include "groupbell/io.hpp"
#include "groupbell/registry.hpp"
#include "groupbell/search.hpp"
#include "groupbell/version.hpp"

using namespace groupbell;
using nlohmann::json;

// exit codes: 0 ok, 1 golden mismatch, 2 usage/schema error,
// 3 degenerate input, 4 no search hits
namespace exit_code {
constexpr int ok = 0;
constexpr int golden_mismatch = 1;
constexpr int usage = 2;
constexpr int degenerate_input = 3;
constexpr int no_hits = 4;
}  // namespace exit_code

namespace {

int cmd_reproduce(const std::string& name, const std::string& format) {
  const ReproduceOutcome outcome = run_reproduce(name);
  if (format == "json") {
    std::cout << outcome.document.dump(2) << "\n";
  } else {
    std::cout << render_table(outcome.document, registry_entry(name));
  }
  if (!outcome.golden_ok) {
    for (const std::string& mismatch : outcome.mismatches)
      std::cerr << "golden mismatch: " << mismatch << "\n";
    return exit_code::golden_mismatch;
  }
  return exit_code::ok;
}

int cmd_analyze(const std::string& path, const std::string& game, const std::string& method,
                const std::string& format) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "error: cannot open '" << path << "'\n";
    return exit_code::usage;
  }
  json spec;
  try {
    spec = json::parse(in);
  } catch (const json::parse_error& e) {
    std::cerr << "error: invalid JSON: " << e.what() << "\n";
    return exit_code::usage;
  }
  const ScenarioInput input = scenario_input_from_json(spec);
  const std::optional<std::string> game_override =
      game.empty() ? std::nullopt : std::optional<std::string>(game);
  const json doc = run_analyze(input, parse_method(method), game_override);
  if (format == "json")
    std::cout << doc.dump(2) << "\n";
  else
    std::cout << render_table(doc, std::nullopt);
  return exit_code::ok;
}

int cmd_search(const std::string& group_spec, const std::string& rep_spec, int parties,
               int orbits, long long trials, std::uint64_t seed, bool exhaustive) {
  const std::string builtin_prefix = "builtin:";
  if (rep_spec.rfind(builtin_prefix, 0) != 0)
    throw Error("--rep expects builtin:<name>");
  const std::string rep_name = rep_spec.substr(builtin_prefix.size());

  SearchConfig config;
  config.rep = builtin_representation(rep_name);
  config.init = builtin_initial_state(rep_name);
  config.parties = parties;
  config.orbits = orbits;
  config.trials = trials;
  config.rng_seed = seed;
  config.exhaustive = exhaustive;

  if (!group_spec.empty()) {
    const auto colon = group_spec.find(':');
    if (colon == std::string::npos) throw Error("--group expects family:n");
    const std::string family = group_spec.substr(0, colon);
    const int n = std::stoi(group_spec.substr(colon + 1));
    const FiniteGroup requested = family == "cyclic"    ? make_cyclic(n)
                                  : family == "dihedral" ? make_dihedral(n)
                                                         : throw Error("unknown group family '" +
                                                                       family + "'");
    if (!requested.same_group_as(config.rep.group))
      throw Error("--group does not match the group of '" + rep_name + "'");
  }

  // hits stream as they are found; the summary repeats them in final order
  const auto hits = random_orbit_search(config, [&](const SearchHit& hit) {
    std::cout << hit_to_json(hit, config.rep.group).dump() << "\n";
  });

  json summary;
  summary["tool"] = {{"name", kToolName}, {"version", kVersion}};
  summary["config"] = {{"representation", rep_name},
                       {"parties", config.parties},
                       {"orbits", config.orbits},
                       {"trials", config.trials},
                       {"rng_seed", config.rng_seed},
                       {"exhaustive", config.exhaustive},
                       {"space_size", search_space_size(config)}};
  json hit_list = json::array();
  for (const SearchHit& hit : hits) hit_list.push_back(hit_to_json(hit, config.rep.group));
  summary["hits"] = std::move(hit_list);
  summary["hit_count"] = hits.size();
  std::cout << summary.dump(2) << "\n";
  return hits.empty() ? exit_code::no_hits : exit_code::ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bell inequalities from finite-group orbits"};
  app.set_version_flag("--version", std::string(kToolName) + " " + kVersion);
  app.require_subcommand(1);

  std::string name, format = "table";
  auto* reproduce = app.add_subcommand("reproduce", "run a built-in scenario and check it");
  std::string registry_help;
  for (const auto& entry : registry_names()) registry_help += entry + " ";
  reproduce->add_option("name", name, "one of: " + registry_help)->required();
  reproduce->add_option("--format", format, "json or table")
      ->check(CLI::IsMember({"json", "table"}));

  std::string path, game, method = "all", a_format = "table";
  auto* analyze = app.add_subcommand("analyze", "analyze a scenario JSON file");
  analyze->add_option("path", path, "scenario JSON file")->required();
  analyze->add_option("--game", game, "derive the nonlocal game")
      ->check(CLI::IsMember({"restricted", "full", "none"}));
  analyze->add_option("--method", method, "quantum method")
      ->check(CLI::IsMember({"dense", "gram", "symmetry", "all"}));
  analyze->add_option("--format", a_format, "json or table")
      ->check(CLI::IsMember({"json", "table"}));

  std::string group_spec, rep_spec;
  int parties = 2, orbits = 2;
  long long trials = 0;
  std::uint64_t seed = 0;
  bool exhaustive = false;
  auto* search = app.add_subcommand("search", "search orbit seeds for violations");
  search->add_option("--group", group_spec, "family:n, e.g. dihedral:3");
  search->add_option("--rep", rep_spec, "builtin:<name>")->required();
  search->add_option("--parties", parties);
  search->add_option("--orbits", orbits);
  search->add_option("--trials", trials);
  search->add_option("--seed", seed, "rng seed");
  search->add_flag("--exhaustive", exhaustive, "sweep the whole seed space");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help / --version
    app.exit(e);
    return exit_code::usage;
  }

  try {
    if (reproduce->parsed()) return cmd_reproduce(name, format);
    if (analyze->parsed()) return cmd_analyze(path, game, method, a_format);
    if (search->parsed())
      return cmd_search(group_spec, rep_spec, parties, orbits, trials, seed, exhaustive);
  } catch (const SchemaError& e) {
    std::cerr << "schema error at " << (e.pointer().empty() ? "/" : e.pointer()) << ": "
              << e.what() << "\n";
    return exit_code::usage;
  } catch (const UnknownScenario& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code::usage;
  } catch (const UnusableInitialState& e) {
    std::cerr << "degenerate input: " << e.what() << "\n";
    return exit_code::degenerate_input;
  } catch (const MultiplicityNotSupported& e) {
    std::cerr << "degenerate input: " << e.what() << "\n";
    return exit_code::degenerate_input;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code::usage;
  }
  return exit_code::usage;
}
