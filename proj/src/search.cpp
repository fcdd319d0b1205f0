#include "groupbell/search.hpp"

#include <algorithm>
#include <set>

#include "groupbell/errors.hpp"

namespace groupbell {

namespace {

// Counter-based stream: one independent generator per trial, so results do
// not depend on how trials are distributed across workers.
struct SplitMix64 {
  std::uint64_t state;
  std::uint64_t next() {
    state += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }
};

SplitMix64 trial_stream(std::uint64_t seed, std::uint64_t trial) {
  SplitMix64 mixer{seed ^ (0x632BE59BD9B4E019ull * (trial + 1))};
  mixer.next();
  return mixer;
}

int bounded_draw(SplitMix64& stream, int n) {
  const std::uint64_t un = static_cast<std::uint64_t>(n);
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % un;
  std::uint64_t raw;
  do {
    raw = stream.next();
  } while (raw >= limit);
  return static_cast<int>(raw % un);
}

std::vector<int> canonicalize(const FiniteGroup& group, std::vector<int> flat) {
  const int shift = group.inverse(flat.front());
  for (int& g : flat) g = group.multiply(shift, g);
  return flat;
}

std::vector<OrbitSeed> unflatten(const std::vector<int>& flat, int orbits, int parties) {
  std::vector<OrbitSeed> seeds(orbits);
  for (int o = 0; o < orbits; ++o)
    seeds[o].elements.assign(flat.begin() + o * parties, flat.begin() + (o + 1) * parties);
  return seeds;
}

}  // namespace

long long search_space_size(const SearchConfig& config) {
  const int slots = config.orbits * config.parties;
  long long size = 1;
  for (int i = 0; i < slots; ++i) {
    if (size > (1ll << 62) / config.rep.group.order) return -1;  // overflow sentinel
    size *= config.rep.group.order;
  }
  return size;
}

std::vector<SearchHit> random_orbit_search(
    const SearchConfig& config, const std::function<void(const SearchHit&)>& on_hit) {
  if (config.parties < 1 || config.orbits < 1)
    throw Error("random_orbit_search: parties and orbits must be >= 1");
  const LocalEventSet local = classify_local_events(config.rep, config.init);
  const FiniteGroup& group = config.rep.group;
  const int slots = config.orbits * config.parties;

  std::set<std::vector<int>> seen;
  std::vector<std::vector<int>> tuples;
  if (config.exhaustive) {
    const long long space = search_space_size(config);
    if (space < 0 || space > kMaxExhaustiveSpace)
      throw SearchSpaceTooLarge("random_orbit_search: exhaustive space exceeds limit");
    std::vector<int> flat(slots, 0);
    while (true) {
      // only canonical representatives (first slot = e) need evaluation
      if (flat.front() == group.identity && seen.insert(flat).second) tuples.push_back(flat);
      int slot = slots - 1;
      while (slot >= 0 && flat[slot] == group.order - 1) flat[slot--] = 0;
      if (slot < 0) break;
      ++flat[slot];
    }
  } else {
    for (long long trial = 0; trial < config.trials; ++trial) {
      SplitMix64 stream = trial_stream(config.rng_seed, static_cast<std::uint64_t>(trial));
      std::vector<int> flat(slots);
      for (int& g : flat) g = bounded_draw(stream, group.order);
      flat = canonicalize(group, flat);
      if (seen.insert(flat).second) tuples.push_back(std::move(flat));
    }
  }

  std::vector<SearchHit> hits;
  for (const auto& flat : tuples) {
    const std::vector<OrbitSeed> seeds = unflatten(flat, config.orbits, config.parties);
    const BellScenario scenario = build_scenario(local, config.parties, seeds);
    const long long bound = classical_bound(scenario).value;
    const double quantum = gram_eigenpairs(scenario).front().value;
    if (quantum <= static_cast<double>(bound) + 1e-9) continue;

    // re-verify with every method before reporting
    const BellCertificate cert = quantum_maximum(scenario, QuantumMethod::all);
    SearchHit hit;
    hit.seeds = seeds;
    hit.classical_bound = cert.classical_bound;
    hit.quantum_value = cert.quantum_value;
    hit.margin = cert.quantum_value - static_cast<double>(cert.classical_bound);
    if (on_hit) on_hit(hit);
    hits.push_back(std::move(hit));
  }

  std::sort(hits.begin(), hits.end(), [](const SearchHit& a, const SearchHit& b) {
    if (a.margin != b.margin) return a.margin > b.margin;
    return a.seeds < b.seeds;
  });
  return hits;
}

}  // namespace groupbell
