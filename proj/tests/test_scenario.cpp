#include <doctest.h>

#include <cmath>
#include <set>

#include "groupbell/errors.hpp"
#include "groupbell/registry.hpp"
#include "groupbell/scenario.hpp"
#include "helpers.hpp"

using namespace groupbell;
using namespace groupbell::testing;

namespace {

OrbitSeed seed_of(const FiniteGroup& group, const std::vector<std::string>& words) {
  OrbitSeed seed;
  for (const auto& word : words) seed.elements.push_back(group.parse_element(word));
  return seed;
}

BellScenario registry_scenario(const std::string& name) {
  const RegistryEntry entry = registry_entry(name);
  const Representation rep = builtin_representation(entry.rep_name);
  const LocalEventSet local = classify_local_events(rep, builtin_initial_state(entry.rep_name));
  std::vector<OrbitSeed> seeds;
  for (const auto& words : entry.seed_words) seeds.push_back(seed_of(rep.group, words));
  return build_scenario(local, entry.parties, seeds);
}

}  // namespace

TEST_SUITE("scenario") {

TEST_CASE("D3 orbit of |+x> splits into three two-outcome bases") {
  const Representation rep = builtin_representation("d3-qubit");
  const LocalEventSet local = classify_local_events(rep, plus_x());
  CHECK(local.states.size() == 6);
  CHECK(local.observable_count() == 3);
  CHECK(local.outcome_count() == 2);
  // event list in group-element order: a0=0, a1=0, a2=0, a0=1, a1=1, a2=1
  const std::vector<std::pair<int, int>> expected = {{0, 0}, {1, 0}, {2, 0},
                                                     {0, 1}, {1, 1}, {2, 1}};
  for (int g = 0; g < 6; ++g) {
    CHECK(local.event_of_element[g].observable == expected[g].first);
    CHECK(local.event_of_element[g].outcome == expected[g].second);
  }
}

TEST_CASE("Z6 qutrit orbit of |0> gives the computational and shifted bases") {
  const Representation rep = builtin_representation("z6-qutrit");
  const LocalEventSet local = classify_local_events(rep, ket(3, 0));
  CHECK(local.states.size() == 6);
  CHECK(local.observable_count() == 2);
  CHECK(local.outcome_count() == 3);
}

TEST_CASE("D6 qutrit orbit of |0> gives four observables") {
  const Representation rep = builtin_representation("d6-qutrit");
  const LocalEventSet local = classify_local_events(rep, ket(3, 0));
  CHECK(local.states.size() == 12);
  CHECK(local.observable_count() == 4);
  CHECK(local.outcome_count() == 3);
}

TEST_CASE("fixed initial states are unusable") {
  const Representation rep = builtin_representation("d6-qutrit");
  // |u0> is invariant, so the orbit cannot span complete bases
  CHECK_THROWS_AS(classify_local_events(rep, fourier3(0)), UnusableInitialState);
}

TEST_CASE("generic initial states without orthogonal partners are unusable") {
  const Representation rep = builtin_representation("z6-qubit");
  Vector skew(2);
  skew << std::cos(0.3), std::sin(0.3);
  CHECK_THROWS_AS(classify_local_events(rep, skew), UnusableInitialState);
}

TEST_CASE("non-normalized initial states are rejected") {
  const Representation rep = builtin_representation("z6-qubit");
  Vector big(2);
  big << 1.0, 1.0;
  CHECK_THROWS_AS(classify_local_events(rep, big), Error);
  CHECK_THROWS_AS(classify_local_events(rep, Vector::Ones(3)), DimensionMismatch);
}

TEST_CASE("three-party scenario has 24 multiplicity-free events") {
  const BellScenario scenario = registry_scenario("three-party-z6");
  CHECK(scenario.coefficients.size() == 24);
  int total = 0;
  for (const auto& [event, coefficient] : scenario.coefficients) {
    (void)event;
    CHECK(coefficient == 1);
    total += coefficient;
  }
  CHECK(total == 4 * 6);
}

TEST_CASE("D6 scenario has 24 multiplicity-free events") {
  const BellScenario scenario = registry_scenario("d6");
  CHECK(scenario.coefficients.size() == 24);
  for (const auto& [event, coefficient] : scenario.coefficients) {
    (void)event;
    CHECK(coefficient == 1);
  }
}

TEST_CASE("diagonal seed orbit is the orbit of the initial product state") {
  const Representation rep = builtin_representation("z6-qubit");
  const LocalEventSet local = classify_local_events(rep, ket(2, 0));
  const BellScenario scenario = build_scenario(local, 2, {seed_of(rep.group, {"e", "e"})});
  CHECK(scenario.orbits.size() == 1);
  CHECK(scenario.orbits[0].events.size() == 6);
  int total = 0;
  for (const auto& [event, coefficient] : scenario.coefficients) {
    (void)event;
    total += coefficient;
  }
  CHECK(total == 6);
}

TEST_CASE("coinciding orbits accumulate integer multiplicities") {
  const Representation rep = builtin_representation("z6-qubit");
  const LocalEventSet local = classify_local_events(rep, ket(2, 0));
  const BellScenario scenario = build_scenario(
      local, 2, {seed_of(rep.group, {"e", "e"}), seed_of(rep.group, {"r", "r"})});
  for (const auto& [event, coefficient] : scenario.coefficients) {
    (void)event;
    CHECK(coefficient == 2);
  }
}

TEST_CASE("left-translated seeds generate identical coefficient maps") {
  TestRng rng(77);
  const BellScenario base = registry_scenario("d6");
  const FiniteGroup& group = base.local.rep.group;
  for (int round = 0; round < 4; ++round) {
    const int shift = rng.uniform_int(group.order);
    std::vector<OrbitSeed> translated;
    for (const auto& orbit : base.orbits) {
      OrbitSeed seed;
      for (int g : orbit.seed.elements) seed.elements.push_back(group.multiply(shift, g));
      translated.push_back(std::move(seed));
    }
    const BellScenario other = build_scenario(base.local, base.parties, translated);
    CHECK(other.coefficients == base.coefficients);
  }
}

TEST_CASE("maximally entangled probabilities for the D3 orbits") {
  const BellScenario scenario = registry_scenario("d3");
  Vector state = (tensor(ket(2, 0), ket(2, 0)) + tensor(ket(2, 1), ket(2, 1))) / std::sqrt(2.0);
  const auto probabilities = event_probabilities(scenario, state);
  for (const Event& event : scenario.orbits[0].events)
    CHECK(probabilities.at(event) == doctest::Approx(0.5).epsilon(1e-9));
  for (const Event& event : scenario.orbits[1].events)
    CHECK(probabilities.at(event) == doctest::Approx(3.0 / 8.0).epsilon(1e-9));
}

TEST_CASE("optimal z6-qubit state makes all twelve probabilities equal") {
  const BellScenario scenario = registry_scenario("z6-qubit");
  const auto probabilities = event_probabilities(scenario, z6_qubit_optimal_state());
  const double expected = (2.0 + std::sqrt(3.0)) / 8.0;
  CHECK(probabilities.size() == 12);
  for (const auto& [event, p] : probabilities) {
    (void)event;
    CHECK(p == doctest::Approx(expected).epsilon(1e-9));
  }
}

TEST_CASE("outcome probabilities sum to one over complete product bases") {
  TestRng rng(123);
  const BellScenario scenario = registry_scenario("d6");
  const Vector state = rng.unit_vector(scenario.joint_rep.dim);
  const int outcomes = scenario.outcome_count();
  for (int ma = 0; ma < scenario.observable_count(); ++ma) {
    for (int mb = 0; mb < scenario.observable_count(); ++mb) {
      double total = 0.0;
      for (int oa = 0; oa < outcomes; ++oa)
        for (int ob = 0; ob < outcomes; ++ob) {
          const Vector product = tensor(scenario.local.outcome_state(ma, oa),
                                        scenario.local.outcome_state(mb, ob));
          total += std::norm(product.dot(state));
        }
      CHECK(total == doctest::Approx(1.0).epsilon(1e-9));
    }
  }
}

TEST_CASE("classification is deterministic across reruns") {
  const Representation rep = builtin_representation("d6-qutrit");
  const LocalEventSet a = classify_local_events(rep, ket(3, 0));
  const LocalEventSet b = classify_local_events(rep, ket(3, 0));
  CHECK(a.observables == b.observables);
  for (int g = 0; g < rep.group.order; ++g) {
    CHECK(a.event_of_element[g].observable == b.event_of_element[g].observable);
    CHECK(a.event_of_element[g].outcome == b.event_of_element[g].outcome);
  }
}

TEST_CASE("probability evaluation rejects mismatched dimensions") {
  const BellScenario scenario = registry_scenario("d3");
  CHECK_THROWS_AS(event_probabilities(scenario, Vector::Ones(3)), DimensionMismatch);
}

TEST_CASE("distinct events map to distinct product states") {
  const BellScenario scenario = registry_scenario("d6");
  std::vector<Vector> states;
  for (const auto& [event, coefficient] : scenario.coefficients) {
    (void)coefficient;
    const Vector state = scenario.event_state(event);
    CHECK(state.norm() == doctest::Approx(1.0).epsilon(1e-9));
    for (const Vector& other : states) CHECK(std::abs(other.dot(state)) < 1.0 - 1e-9);
    states.push_back(state);
  }
}

}  // TEST_SUITE
