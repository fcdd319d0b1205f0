#pragma once

#include <map>
#include <string>
#include <vector>

#include "groupbell/scenario.hpp"

namespace groupbell {

enum class QuantumMethod { dense, gram, symmetry, all };

/// One outcome per (party, observable); a local deterministic strategy.
struct DeterministicAssignment {
  std::vector<std::vector<int>> outcome;  // [party][observable]
};

struct ClassicalBoundResult {
  long long value = 0;
  DeterministicAssignment witness;  // lexicographically smallest maximizer
};

inline constexpr long long kDefaultEnumerationLimit = 100'000'000;

/// Exhaustive maximum of sum_E coeff(E) [assignment consistent with E] over
/// all K^(N*M) deterministic assignments. Throws SearchSpaceTooLarge beyond
/// the enumeration limit.
ClassicalBoundResult classical_bound(const BellScenario& scenario,
                                     long long enumeration_limit = kDefaultEnumerationLimit);

/// L = sum over seeds of |Psi_seed><Psi_seed|.
Matrix build_seed_operator(const BellScenario& scenario);

/// A = sum_g Gamma(g)^{(x)N} L Gamma(g)^{+(x)N}; Hermitian and PSD.
Matrix build_bell_operator(const BellScenario& scenario);

/// Full spectrum of A by dense eigendecomposition.
std::vector<EigenPair> dense_eigenpairs(const BellScenario& scenario);

/// Nonzero spectrum of A via the Gram reduction over the N_o * |G| orbit
/// vectors Gamma(g)|Psi_seed>.
std::vector<EigenPair> gram_eigenpairs(const BellScenario& scenario);

/// Spectrum of A via symmetry: the eigenspace blocks of the generating
/// unitary for cyclic groups, the isotypic blocks P^(p) A P^(p) otherwise.
/// Throws MethodUnavailable when no character table is implemented.
std::vector<EigenPair> symmetry_eigenpairs(const BellScenario& scenario);

struct AbelianBlock {
  Complex label;                 // eigenvalue of the generating unitary
  std::vector<Vector> basis;     // orthonormal basis of the eigenspace
  Matrix reduced;                // |G| * (basis compression of L)
  std::vector<EigenPair> eigenpairs;  // lifted to the full space
};

/// Blockwise reduction of A over the eigenspaces of B = Gamma_joint(r) for a
/// cyclic group: A = |G| sum_lambda P_lambda L P_lambda. The union of the
/// block spectra equals the spectrum of A. Throws NotCyclic otherwise.
std::vector<AbelianBlock> abelian_block_reduce(const BellScenario& scenario);

struct BellCertificate {
  long long classical_bound = 0;
  DeterministicAssignment classical_witness;
  double quantum_value = 0.0;
  Vector optimal_state;
  std::map<Event, double> optimal_probabilities;
  std::map<std::string, double> method_values;  // methods actually run
  double method_agreement = 0.0;  // max pairwise discrepancy
  bool violation = false;         // quantum_value > classical_bound + 1e-9
  int top_eigenspace_dim = 1;     // degeneracy of the top eigenvalue
};

/// Runs the requested quantum method(s) plus the classical bound and packs
/// the result. With QuantumMethod::all every route runs and the certificate
/// reports their agreement; values are taken from the dense route.
BellCertificate quantum_maximum(const BellScenario& scenario, QuantumMethod method);

/// Sum of |v><v| over the eigenvectors within cluster_tol of the top value.
Matrix top_eigenspace_projector(const std::vector<EigenPair>& pairs,
                                double cluster_tol = tol::residual);

}  // namespace groupbell
