#include "groupbell/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "groupbell/errors.hpp"

namespace groupbell {

namespace {

// Classification thresholds: overlaps are read against a loose 1e-6 window,
// then the resulting bases are held to the structural 1e-9 tolerance.
constexpr double kClassifyTol = 1e-6;

}  // namespace

LocalEventSet classify_local_events(const Representation& rep, const Vector& init) {
  if (init.size() != rep.dim)
    throw DimensionMismatch("classify_local_events: initial state dimension mismatch");
  if (std::abs(init.norm() - 1.0) > tol::structural)
    throw Error("classify_local_events: initial state is not normalized");

  LocalEventSet local;
  local.rep = rep;
  local.init_state = init;

  // Orbit states, deduplicated up to global phase in first-appearance order.
  std::vector<int> state_of_element(rep.group.order);
  for (int g = 0; g < rep.group.order; ++g) {
    Vector state = rep.matrix(g) * init;
    int found = -1;
    for (std::size_t k = 0; k < local.states.size(); ++k) {
      if (std::abs(local.states[k].dot(state)) > 1.0 - tol::structural) {
        found = static_cast<int>(k);
        break;
      }
    }
    if (found < 0) {
      found = static_cast<int>(local.states.size());
      local.states.push_back(std::move(state));
    }
    state_of_element[g] = found;
  }

  const int count = static_cast<int>(local.states.size());
  std::vector<std::vector<double>> overlap(count, std::vector<double>(count, 1.0));
  for (int i = 0; i < count; ++i) {
    for (int j = i + 1; j < count; ++j) {
      const double t = std::abs(local.states[i].dot(local.states[j]));
      if (t > 1.0 - kClassifyTol)
        throw UnusableInitialState(
            "classify_local_events: distinct orbit states with |overlap| = " +
            std::to_string(t) + " (neither equal nor distinct)");
      overlap[i][j] = overlap[j][i] = t;
    }
  }

  // Two states share a basis exactly when they are orthogonal. The relation
  // has to partition the states into complete orthonormal bases.
  std::vector<std::vector<int>> orth_set(count);
  for (int i = 0; i < count; ++i) {
    orth_set[i].push_back(i);
    for (int j = 0; j < count; ++j)
      if (j != i && overlap[i][j] < kClassifyTol) orth_set[i].push_back(j);
    std::sort(orth_set[i].begin(), orth_set[i].end());
  }
  for (int i = 0; i < count; ++i)
    for (int j : orth_set[i])
      if (orth_set[j] != orth_set[i])
        throw UnusableInitialState(
            "classify_local_events: orthogonality classes are inconsistent; the initial "
            "state does not induce well-defined measurement bases");

  std::vector<int> basis_of(count, -1);
  std::vector<int> outcome_of(count, -1);
  for (int i = 0; i < count; ++i) {
    if (basis_of[i] >= 0) continue;
    const std::vector<int>& members = orth_set[i];
    if (static_cast<int>(members.size()) != rep.dim)
      throw UnusableInitialState(
          "classify_local_events: basis of size " + std::to_string(members.size()) +
          " in dimension " + std::to_string(rep.dim) + "; bases are incomplete");
    for (int a = 0; a < static_cast<int>(members.size()); ++a) {
      for (int b = a + 1; b < static_cast<int>(members.size()); ++b)
        if (overlap[members[a]][members[b]] > tol::structural)
          throw UnusableInitialState(
              "classify_local_events: same-basis states exceed the orthogonality tolerance");
    }
    const int basis_index = static_cast<int>(local.observables.size());
    for (int o = 0; o < static_cast<int>(members.size()); ++o) {
      basis_of[members[o]] = basis_index;
      outcome_of[members[o]] = o;
    }
    local.observables.push_back(members);
  }

  local.event_of_element.resize(rep.group.order);
  for (int g = 0; g < rep.group.order; ++g) {
    const int state = state_of_element[g];
    local.event_of_element[g] = {basis_of[state], outcome_of[state]};
  }
  return local;
}

Vector BellScenario::event_state(const Event& event) const {
  std::vector<Vector> factors;
  factors.reserve(event.parties.size());
  for (const PartyEvent& pe : event.parties)
    factors.push_back(local.outcome_state(pe.observable, pe.outcome));
  return tensor_all(factors);
}

Vector BellScenario::seed_state(const OrbitSeed& seed) const {
  std::vector<Vector> factors;
  factors.reserve(seed.elements.size());
  for (int g : seed.elements) factors.push_back(local.rep.matrix(g) * local.init_state);
  return tensor_all(factors);
}

BellScenario build_scenario(const LocalEventSet& local, int parties,
                            const std::vector<OrbitSeed>& seeds) {
  if (parties < 1) throw Error("build_scenario: parties must be >= 1");
  if (seeds.empty()) throw Error("build_scenario: at least one orbit seed required");
  const int order = local.rep.group.order;
  for (const OrbitSeed& seed : seeds) {
    if (static_cast<int>(seed.elements.size()) != parties)
      throw Error("build_scenario: seed length does not match party count");
    for (int g : seed.elements)
      if (g < 0 || g >= order) throw Error("build_scenario: seed element out of range");
  }

  BellScenario scenario;
  scenario.local = local;
  scenario.parties = parties;
  scenario.joint_rep = tensor_rep(local.rep, parties);

  for (const OrbitSeed& seed : seeds) {
    BellScenario::Orbit orbit;
    orbit.seed = seed;
    for (int g = 0; g < order; ++g) {
      Event event;
      event.parties.reserve(parties);
      for (int k = 0; k < parties; ++k) {
        const auto& le = local.event_of_element[local.rep.group.multiply(g, seed.elements[k])];
        event.parties.push_back({le.observable, le.outcome});
      }
      scenario.coefficients[event] += 1;
      orbit.events.push_back(std::move(event));
    }
    scenario.orbits.push_back(std::move(orbit));
  }
  return scenario;
}

std::map<Event, double> event_probabilities(const BellScenario& scenario, const Vector& state) {
  if (state.size() != scenario.joint_rep.dim)
    throw DimensionMismatch("event_probabilities: state dimension mismatch");
  std::map<Event, double> probabilities;
  for (const auto& [event, coefficient] : scenario.coefficients) {
    (void)coefficient;
    const Complex amplitude = scenario.event_state(event).dot(state);
    probabilities[event] = std::norm(amplitude);
  }
  return probabilities;
}

}  // namespace groupbell
