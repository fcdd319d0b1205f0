#pragma once

#include <vector>

#include "groupbell/bounds.hpp"
#include "groupbell/scenario.hpp"

namespace groupbell {

enum class QuestionPolicy { restricted, full };

/// Nonlocal game derived from a scenario: the referee draws a question
/// (observable tuple) uniformly, the parties answer with outcomes, and the
/// predicate accepts exactly the scenario's events.
struct NonlocalGame {
  int parties = 0;
  int observables = 0;
  int outcomes = 0;
  QuestionPolicy policy = QuestionPolicy::restricted;
  std::vector<std::vector<int>> questions;              // uniform prior
  std::vector<std::vector<std::vector<int>>> winning;   // per question, sorted answer tuples

  int question_count() const { return static_cast<int>(questions.size()); }
  bool wins(int question_index, const std::vector<int>& answers) const;
};

/// Questions ordered by first appearance over the orbits; the full policy
/// appends the unreached observable tuples in lexicographic order. Throws
/// MultiplicityNotSupported when any coefficient exceeds 1.
NonlocalGame game_from_scenario(const BellScenario& scenario, QuestionPolicy policy);

/// Per-party answer functions f_k : observable -> outcome.
struct Strategy {
  std::vector<std::vector<int>> answer;  // [party][observable]
};

/// Classical game value as the exact rational win_count / question_count.
struct GameValue {
  long long win_count = 0;
  long long question_count = 0;
  Strategy witness;  // lexicographically smallest maximizer
  double value() const {
    return static_cast<double>(win_count) / static_cast<double>(question_count);
  }
};

GameValue classical_game_value(const NonlocalGame& game,
                               long long enumeration_limit = kDefaultEnumerationLimit);

/// (1/|Q|) * sum over winning cells of the product-measurement probability
/// in the shared state.
double quantum_game_value(const NonlocalGame& game, const BellScenario& scenario,
                          const Vector& state);

}  // namespace groupbell
