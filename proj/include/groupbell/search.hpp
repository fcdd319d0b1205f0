#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "groupbell/bounds.hpp"
#include "groupbell/scenario.hpp"

namespace groupbell {

inline constexpr long long kMaxExhaustiveSpace = 10'000'000;

struct SearchConfig {
  Representation rep;
  Vector init;
  int parties = 2;
  int orbits = 2;
  long long trials = 0;
  std::uint64_t rng_seed = 0;
  bool exhaustive = false;
};

struct SearchHit {
  std::vector<OrbitSeed> seeds;  // canonicalized: first seed starts at e
  long long classical_bound = 0;
  double quantum_value = 0.0;
  double margin = 0.0;
};

/// Size |G|^(orbits * parties) of the seed-tuple space.
long long search_space_size(const SearchConfig& config);

/// Draws seed tuples (per-trial counter-based generator, so identical
/// configs give identical output on any worker count), evaluates the
/// classical bound and the Gram-method quantum value, and collects the
/// violating tuples. Tuples are canonicalized by left translation (first
/// seed starts at the identity) and deduplicated; hits are re-verified with
/// every method before reporting and sorted by margin descending, then by
/// seed order. Exhaustive mode sweeps the whole space instead. on_hit, when
/// given, is invoked for each hit as it is found (evaluation order).
std::vector<SearchHit> random_orbit_search(
    const SearchConfig& config,
    const std::function<void(const SearchHit&)>& on_hit = nullptr);

}  // namespace groupbell
