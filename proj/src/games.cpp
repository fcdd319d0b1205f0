#include "groupbell/games.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "groupbell/errors.hpp"

namespace groupbell {

namespace {

long long power_capped(int base, int exponent, long long cap) {
  long long value = 1;
  for (int i = 0; i < exponent; ++i) {
    if (value > cap / std::max(base, 1)) return cap + 1;
    value *= base;
  }
  return value;
}

int answer_code(const std::vector<int>& answers, int outcomes) {
  int code = 0;
  for (int a : answers) code = code * outcomes + a;
  return code;
}

}  // namespace

bool NonlocalGame::wins(int question_index, const std::vector<int>& answers) const {
  const auto& cells = winning[question_index];
  return std::binary_search(cells.begin(), cells.end(), answers);
}

NonlocalGame game_from_scenario(const BellScenario& scenario, QuestionPolicy policy) {
  for (const auto& [event, coefficient] : scenario.coefficients) {
    (void)event;
    if (coefficient > 1)
      throw MultiplicityNotSupported(
          "game_from_scenario: scenario has event multiplicities > 1");
  }

  NonlocalGame game;
  game.parties = scenario.parties;
  game.observables = scenario.observable_count();
  game.outcomes = scenario.outcome_count();
  game.policy = policy;

  // Questions in order of first appearance over the orbits.
  std::map<std::vector<int>, int> question_index;
  for (const auto& orbit : scenario.orbits) {
    for (const Event& event : orbit.events) {
      std::vector<int> question;
      question.reserve(event.parties.size());
      for (const PartyEvent& pe : event.parties) question.push_back(pe.observable);
      if (question_index.emplace(question, game.questions.size()).second)
        game.questions.push_back(question);
    }
  }
  if (policy == QuestionPolicy::full) {
    std::vector<int> question(game.parties, 0);
    while (true) {
      if (question_index.emplace(question, game.questions.size()).second)
        game.questions.push_back(question);
      int k = game.parties - 1;
      while (k >= 0 && question[k] == game.observables - 1) question[k--] = 0;
      if (k < 0) break;
      ++question[k];
    }
  }

  game.winning.assign(game.questions.size(), {});
  for (const auto& [event, coefficient] : scenario.coefficients) {
    (void)coefficient;
    std::vector<int> question, answers;
    for (const PartyEvent& pe : event.parties) {
      question.push_back(pe.observable);
      answers.push_back(pe.outcome);
    }
    game.winning[question_index.at(question)].push_back(std::move(answers));
  }
  for (auto& cells : game.winning) std::sort(cells.begin(), cells.end());
  return game;
}

GameValue classical_game_value(const NonlocalGame& game, long long enumeration_limit) {
  const int parties = game.parties;
  const int observables = game.observables;
  const int outcomes = game.outcomes;
  const int slots = parties * observables;
  if (power_capped(outcomes, slots, enumeration_limit) > enumeration_limit)
    throw SearchSpaceTooLarge("classical_game_value: strategy space exceeds limit");

  // Winning cells as per-question lookup tables over coded answer tuples.
  const int codes = static_cast<int>(std::pow(outcomes, parties) + 0.5);
  std::vector<std::vector<char>> win_table(game.questions.size(),
                                           std::vector<char>(codes, 0));
  for (std::size_t q = 0; q < game.questions.size(); ++q)
    for (const auto& answers : game.winning[q])
      win_table[q][answer_code(answers, outcomes)] = 1;

  std::vector<int> strategy(slots, 0);
  std::vector<int> best_strategy = strategy;
  long long best = -1;
  while (true) {
    long long wins = 0;
    for (std::size_t q = 0; q < game.questions.size(); ++q) {
      int code = 0;
      for (int k = 0; k < parties; ++k)
        code = code * outcomes + strategy[k * observables + game.questions[q][k]];
      wins += win_table[q][code];
    }
    if (wins > best) {
      best = wins;
      best_strategy = strategy;
    }
    int slot = slots - 1;
    while (slot >= 0 && strategy[slot] == outcomes - 1) strategy[slot--] = 0;
    if (slot < 0) break;
    ++strategy[slot];
  }

  GameValue value;
  value.win_count = best;
  value.question_count = static_cast<long long>(game.questions.size());
  value.witness.answer.assign(parties, std::vector<int>(observables, 0));
  for (int k = 0; k < parties; ++k)
    for (int m = 0; m < observables; ++m)
      value.witness.answer[k][m] = best_strategy[k * observables + m];
  return value;
}

double quantum_game_value(const NonlocalGame& game, const BellScenario& scenario,
                          const Vector& state) {
  if (state.size() != scenario.joint_rep.dim)
    throw DimensionMismatch("quantum_game_value: state dimension mismatch");
  double total = 0.0;
  for (std::size_t q = 0; q < game.questions.size(); ++q) {
    for (const auto& answers : game.winning[q]) {
      std::vector<Vector> factors;
      factors.reserve(game.parties);
      for (int k = 0; k < game.parties; ++k)
        factors.push_back(scenario.local.outcome_state(game.questions[q][k], answers[k]));
      total += std::norm(tensor_all(factors).dot(state));
    }
  }
  return total / static_cast<double>(game.questions.size());
}

}  // namespace groupbell
