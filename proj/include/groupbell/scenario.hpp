#pragma once

#include <compare>
#include <map>
#include <vector>

#include "groupbell/reptheory.hpp"

namespace groupbell {

/// Local orbit of an initial state, classified into measurement bases.
/// states holds the distinct orbit states (deduplicated up to global phase)
/// in order of first appearance; observables groups them into M complete
/// orthonormal bases of K = dim outcomes each.
struct LocalEventSet {
  struct LocalEvent {
    int observable;
    int outcome;
  };

  Representation rep;
  Vector init_state;
  std::vector<Vector> states;
  std::vector<std::vector<int>> observables;  // [m][o] -> state index
  std::vector<LocalEvent> event_of_element;   // per group element

  int observable_count() const { return static_cast<int>(observables.size()); }
  int outcome_count() const {
    return observables.empty() ? 0 : static_cast<int>(observables.front().size());
  }
  const Vector& outcome_state(int observable, int outcome) const {
    return states[observables[observable][outcome]];
  }
};

/// Computes Gamma(g)|init> for all g, deduplicates up to global phase, and
/// partitions the states into orthonormal bases from the 0/1 structure of
/// the overlap table. Throws UnusableInitialState when the overlaps do not
/// induce well-defined complete bases.
LocalEventSet classify_local_events(const Representation& rep, const Vector& init);

struct OrbitSeed {
  std::vector<int> elements;  // one group element per party
  auto operator<=>(const OrbitSeed&) const = default;
};

struct PartyEvent {
  int observable;
  int outcome;
  auto operator<=>(const PartyEvent&) const = default;
};

struct Event {
  std::vector<PartyEvent> parties;
  auto operator<=>(const Event&) const = default;
};

/// A Bell scenario: coefficient map over events generated by group orbits.
struct BellScenario {
  LocalEventSet local;
  int parties = 0;
  Representation joint_rep;  // parties-fold tensor power
  std::map<Event, int> coefficients;

  struct Orbit {
    OrbitSeed seed;
    std::vector<Event> events;  // in group-element order
  };
  std::vector<Orbit> orbits;

  int observable_count() const { return local.observable_count(); }
  int outcome_count() const { return local.outcome_count(); }
  int group_order() const { return local.rep.group.order; }

  /// Product state |psi_{m1,o1}> (x) ... for the event's local outcomes.
  Vector event_state(const Event& event) const;
  /// Product of Gamma(g_k)|init> over the seed's components.
  Vector seed_state(const OrbitSeed& seed) const;
};

/// For each seed (g_1,...,g_N) and each g in G, the event with per-party
/// components event_of_element(g * g_k) receives +1 in the coefficient map.
/// Stabilized or coinciding orbits simply produce coefficients > 1.
BellScenario build_scenario(const LocalEventSet& local, int parties,
                            const std::vector<OrbitSeed>& seeds);

/// p(E) = |<event_state(E)|state>|^2 for every event in the scenario.
std::map<Event, double> event_probabilities(const BellScenario& scenario,
                                            const Vector& state);

}  // namespace groupbell
