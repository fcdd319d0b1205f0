#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "groupbell/bounds.hpp"
#include "groupbell/games.hpp"
#include "groupbell/registry.hpp"
#include "groupbell/scenario.hpp"
#include "groupbell/search.hpp"

namespace groupbell {

/// Parsed scenario description plus its canonical JSON echo.
struct ScenarioInput {
  FiniteGroup group;
  Representation rep;
  Vector init;
  int parties = 2;
  std::vector<OrbitSeed> seeds;
  std::string game = "none";  // "restricted" | "full" | "none"
  nlohmann::json echo;
};

/// Validates and parses a scenario document. Throws SchemaError with a JSON
/// pointer to the offending field.
ScenarioInput scenario_input_from_json(const nlohmann::json& root);
ScenarioInput scenario_input_from_registry(const RegistryEntry& entry);

nlohmann::json complex_to_json(const Complex& z);
nlohmann::json vector_to_json(const Vector& v);
nlohmann::json scenario_to_json(const BellScenario& scenario);
nlohmann::json certificate_to_json(const BellCertificate& cert, const BellScenario& scenario);
nlohmann::json game_to_json(const NonlocalGame& game, const GameValue& classical,
                            double quantum);
nlohmann::json hit_to_json(const SearchHit& hit, const FiniteGroup& group);

QuantumMethod parse_method(const std::string& name);  // throws Error

/// Full pipeline: classify, build, certify, and (optionally) derive the
/// nonlocal game. Returns the result document.
nlohmann::json run_analyze(const ScenarioInput& input, QuantumMethod method,
                           const std::optional<std::string>& game_override);

struct ReproduceOutcome {
  nlohmann::json document;  // analyze document plus a "golden" section
  bool golden_ok = true;
  std::vector<std::string> mismatches;
};

/// Runs the registry scenario with every method and checks the expected
/// values. Throws UnknownScenario for unknown names.
ReproduceOutcome run_reproduce(const std::string& name);

/// Human-readable rendering of a result document ("table" format). The
/// optional registry entry supplies conventional outcome labels.
std::string render_table(const nlohmann::json& document,
                         const std::optional<RegistryEntry>& entry);

}  // namespace groupbell
