#pragma once

#include <optional>
#include <string>
#include <vector>

#include "groupbell/games.hpp"
#include "groupbell/reptheory.hpp"

namespace groupbell {

struct Rational {
  long long num = 0;
  long long den = 1;
};

/// A built-in scenario with its expected values and closed-form strings.
struct RegistryEntry {
  std::string name;
  std::string rep_name;  // built-in representation
  int parties = 2;
  std::vector<std::vector<std::string>> seed_words;
  QuestionPolicy game_policy = QuestionPolicy::full;

  long long classical_bound = 0;
  double quantum_value = 0.0;
  std::string quantum_closed_form;
  std::optional<Rational> game_classical;
  std::optional<double> game_quantum;
  std::string game_quantum_closed_form;

  /// Outcome relabeling (canonical index -> printed label) per observable,
  /// used when rendering event tables with the conventional basis labels.
  std::vector<std::vector<int>> outcome_relabel;
};

const std::vector<std::string>& registry_names();
const std::vector<std::string>& builtin_representation_names();

/// Throws UnknownScenario / Error for unknown names.
RegistryEntry registry_entry(const std::string& name);
Representation builtin_representation(const std::string& name);
Vector builtin_initial_state(const std::string& name);

}  // namespace groupbell
