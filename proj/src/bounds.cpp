#include "groupbell/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "groupbell/errors.hpp"

namespace groupbell {

namespace {

// K^slots with an overflow-safe cap.
long long power_capped(int base, int exponent, long long cap) {
  long long value = 1;
  for (int i = 0; i < exponent; ++i) {
    if (value > cap / std::max(base, 1)) return cap + 1;
    value *= base;
  }
  return value;
}

std::vector<EigenPair> lift_block(const Matrix& reduced, const std::vector<Vector>& basis) {
  std::vector<EigenPair> lifted;
  for (const auto& pair : hermitian_eigendecompose(reduced)) {
    Vector v = Vector::Zero(basis.front().size());
    for (std::size_t i = 0; i < basis.size(); ++i) v += pair.vector(static_cast<int>(i)) * basis[i];
    lifted.push_back({pair.value, canonical_phase(std::move(v))});
  }
  return lifted;
}

std::vector<Vector> range_basis(const Matrix& projector) {
  std::vector<Vector> basis;
  for (const auto& pair : hermitian_eigendecompose(projector))
    if (pair.value > 0.5) basis.push_back(pair.vector);
  return basis;
}

void sort_by_value(std::vector<EigenPair>& pairs) {
  std::stable_sort(pairs.begin(), pairs.end(),
                   [](const EigenPair& a, const EigenPair& b) { return a.value > b.value; });
}

}  // namespace

Matrix build_seed_operator(const BellScenario& scenario) {
  const int dim = scenario.joint_rep.dim;
  Matrix seed_op = Matrix::Zero(dim, dim);
  for (const auto& orbit : scenario.orbits) {
    const Vector psi = scenario.seed_state(orbit.seed);
    seed_op += psi * psi.adjoint();
  }
  return seed_op;
}

Matrix build_bell_operator(const BellScenario& scenario) {
  const Matrix seed_op = build_seed_operator(scenario);
  const int dim = scenario.joint_rep.dim;
  Matrix bell = Matrix::Zero(dim, dim);
  for (int g = 0; g < scenario.group_order(); ++g) {
    const Matrix& gamma = scenario.joint_rep.matrix(g);
    bell += gamma * seed_op * gamma.adjoint();
  }
  if (!is_hermitian(bell)) throw Error("build_bell_operator: operator is not Hermitian");
  return bell;
}

ClassicalBoundResult classical_bound(const BellScenario& scenario, long long enumeration_limit) {
  const int parties = scenario.parties;
  const int observables = scenario.observable_count();
  const int outcomes = scenario.outcome_count();
  const int slots = parties * observables;
  if (power_capped(outcomes, slots, enumeration_limit) > enumeration_limit)
    throw SearchSpaceTooLarge("classical_bound: deterministic-assignment space exceeds limit");

  struct FlatEvent {
    int coefficient;
    std::vector<std::pair<int, int>> requirements;  // (slot, outcome)
  };
  std::vector<FlatEvent> events;
  events.reserve(scenario.coefficients.size());
  for (const auto& [event, coefficient] : scenario.coefficients) {
    FlatEvent fe;
    fe.coefficient = coefficient;
    for (int k = 0; k < parties; ++k)
      fe.requirements.emplace_back(k * observables + event.parties[k].observable,
                                   event.parties[k].outcome);
    events.push_back(std::move(fe));
  }

  std::vector<int> assignment(slots, 0);
  std::vector<int> best_assignment = assignment;
  long long best = -1;
  while (true) {
    long long value = 0;
    for (const FlatEvent& fe : events) {
      bool consistent = true;
      for (const auto& [slot, outcome] : fe.requirements)
        if (assignment[slot] != outcome) {
          consistent = false;
          break;
        }
      if (consistent) value += fe.coefficient;
    }
    if (value > best) {  // ascending enumeration keeps the lexicographically smallest witness
      best = value;
      best_assignment = assignment;
    }
    int slot = slots - 1;
    while (slot >= 0 && assignment[slot] == outcomes - 1) assignment[slot--] = 0;
    if (slot < 0) break;
    ++assignment[slot];
  }

  ClassicalBoundResult result;
  result.value = best;
  result.witness.outcome.assign(parties, std::vector<int>(observables, 0));
  for (int k = 0; k < parties; ++k)
    for (int m = 0; m < observables; ++m)
      result.witness.outcome[k][m] = best_assignment[k * observables + m];
  return result;
}

std::vector<EigenPair> dense_eigenpairs(const BellScenario& scenario) {
  return hermitian_eigendecompose(build_bell_operator(scenario));
}

std::vector<EigenPair> gram_eigenpairs(const BellScenario& scenario) {
  std::vector<Vector> orbit_vectors;
  orbit_vectors.reserve(scenario.orbits.size() * scenario.group_order());
  for (const auto& orbit : scenario.orbits) {
    const Vector psi = scenario.seed_state(orbit.seed);
    for (int g = 0; g < scenario.group_order(); ++g)
      orbit_vectors.push_back(scenario.joint_rep.matrix(g) * psi);
  }
  return span_reduced_eigensolve(orbit_vectors);
}

std::vector<AbelianBlock> abelian_block_reduce(const BellScenario& scenario) {
  const FiniteGroup& group = scenario.local.rep.group;
  if (group.family != GroupFamily::cyclic)
    throw NotCyclic("abelian_block_reduce: joint representation is not cyclic");
  const int n = group.order;
  const int dim = scenario.joint_rep.dim;
  const Matrix seed_op = build_seed_operator(scenario);

  std::vector<AbelianBlock> blocks;
  for (int k = 0; k < n; ++k) {
    const Complex label = std::polar(1.0, 2.0 * std::numbers::pi * k / n);
    // Exact eigenspace projector of the generating unitary: the group
    // average of conj(lambda)^m Gamma(r^m).
    Matrix projector = Matrix::Zero(dim, dim);
    Complex phase = 1.0;
    for (int m = 0; m < n; ++m) {
      projector += phase * scenario.joint_rep.matrix(m);
      phase *= std::conj(label);
    }
    projector /= static_cast<double>(n);
    if (std::lround(projector.trace().real()) == 0) continue;

    AbelianBlock block;
    block.label = label;
    block.basis = range_basis(projector);
    block.reduced = static_cast<double>(n) * compress(seed_op, block.basis);
    block.eigenpairs = lift_block(block.reduced, block.basis);
    blocks.push_back(std::move(block));
  }
  return blocks;
}

std::vector<EigenPair> symmetry_eigenpairs(const BellScenario& scenario) {
  const FiniteGroup& group = scenario.local.rep.group;
  std::vector<EigenPair> pairs;
  if (group.family == GroupFamily::cyclic) {
    for (const auto& block : abelian_block_reduce(scenario))
      pairs.insert(pairs.end(), block.eigenpairs.begin(), block.eigenpairs.end());
  } else if (group.family == GroupFamily::dihedral) {
    const CharacterTable ct = character_table_for_family(group);
    const IsotypicDecomposition iso = isotypic_projectors(scenario.joint_rep, ct);
    const Matrix bell = build_bell_operator(scenario);
    for (const auto& component : iso.components) {
      const std::vector<Vector> basis = range_basis(component.projector);
      const std::vector<EigenPair> block = lift_block(compress(bell, basis), basis);
      pairs.insert(pairs.end(), block.begin(), block.end());
    }
  } else {
    throw MethodUnavailable("symmetry_eigenpairs: no character table for this family");
  }
  sort_by_value(pairs);
  return pairs;
}

Matrix top_eigenspace_projector(const std::vector<EigenPair>& pairs, double cluster_tol) {
  if (pairs.empty()) throw Error("top_eigenspace_projector: empty spectrum");
  std::vector<Vector> top;
  for (const auto& pair : pairs)
    if (pair.value > pairs.front().value - cluster_tol) top.push_back(pair.vector);
  return projector_onto(top);
}

BellCertificate quantum_maximum(const BellScenario& scenario, QuantumMethod method) {
  BellCertificate cert;
  const ClassicalBoundResult classical = classical_bound(scenario);
  cert.classical_bound = classical.value;
  cert.classical_witness = classical.witness;

  std::vector<EigenPair> primary;
  const bool all = method == QuantumMethod::all;
  if (all || method == QuantumMethod::dense) {
    primary = dense_eigenpairs(scenario);
    cert.method_values["dense"] = primary.front().value;
  }
  if (all || method == QuantumMethod::gram) {
    auto pairs = gram_eigenpairs(scenario);
    cert.method_values["gram"] = pairs.front().value;
    if (primary.empty()) primary = std::move(pairs);
  }
  if (all || method == QuantumMethod::symmetry) {
    auto pairs = symmetry_eigenpairs(scenario);
    cert.method_values["symmetry"] = pairs.front().value;
    if (primary.empty()) primary = std::move(pairs);
  }

  cert.quantum_value = primary.front().value;
  cert.optimal_state = primary.front().vector;
  cert.optimal_probabilities = event_probabilities(scenario, cert.optimal_state);
  cert.top_eigenspace_dim = 0;
  for (const auto& pair : primary)
    if (pair.value > cert.quantum_value - tol::residual) ++cert.top_eigenspace_dim;

  cert.method_agreement = 0.0;
  for (const auto& [name_a, value_a] : cert.method_values)
    for (const auto& [name_b, value_b] : cert.method_values) {
      (void)name_a;
      (void)name_b;
      cert.method_agreement = std::max(cert.method_agreement, std::abs(value_a - value_b));
    }
  cert.violation = cert.quantum_value > static_cast<double>(cert.classical_bound) + 1e-9;
  return cert;
}

}  // namespace groupbell
