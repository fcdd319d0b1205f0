#pragma once

#include <map>
#include <string>
#include <vector>

#include "groupbell/groups.hpp"
#include "groupbell/linalg.hpp"

namespace groupbell {

/// Unitary matrix representation of a finite group. Every matrix is verified
/// unitary, Gamma(e) = I, and Gamma(g)Gamma(h) = Gamma(gh) for all pairs.
struct Representation {
  FiniteGroup group;
  int dim = 0;
  std::vector<Matrix> matrices;

  const Matrix& matrix(int g) const { return matrices[g]; }
  Complex character(int g) const { return matrices[g].trace(); }
};

/// Builds and verifies a representation from explicit per-element matrices.
Representation make_representation(FiniteGroup group, std::vector<Matrix> matrices);

/// Builds a representation from generator matrices ("r" for cyclic groups,
/// "r" and "s" for dihedral ones) by multiplying along each element's
/// canonical word. Throws NotUnitary for bad generators and RelationViolated
/// (naming the broken relation) when the presentation relations fail.
Representation rep_from_generators(const FiniteGroup& group,
                                   const std::map<std::string, Matrix>& generators);

/// The N-fold tensor power g -> Gamma(g))^{(x) parties}.
Representation tensor_rep(const Representation& rep, int parties);

struct CharacterTable {
  ConjugacyClasses classes;
  std::vector<std::string> irrep_labels;
  std::vector<int> dims;
  std::vector<std::vector<Complex>> table;  // irreps x classes

  int irrep_count() const { return static_cast<int>(dims.size()); }
  Complex character(int irrep, int element) const {
    return table[irrep][classes.class_of[element]];
  }
};

/// Closed-form character tables for the cyclic and dihedral families.
/// Cyclic: chi_j(r^k) = e^{2 pi i jk/n}. Dihedral: the one-dimensional
/// irreps followed by the two-dimensional ones chi_h(r^k) = 2cos(2 pi hk/n).
CharacterTable character_table_for_family(const FiniteGroup& group);

/// Multiplicities n_p = (1/|G|) sum_g chi(g) chi^(p)(g)^*, verified to be
/// nonnegative integers within 1e-9.
std::vector<int> irrep_multiplicities(const Representation& rep, const CharacterTable& ct);

struct IsotypicDecomposition {
  struct Component {
    int irrep;
    Matrix projector;
  };
  std::vector<int> multiplicities;
  std::vector<Component> components;  // one per irrep with n_p > 0
};

/// Character projections P^(p) = (d_p/|G|) sum_g chi^(p)(g)^* Gamma(g).
/// The projectors are verified complete, idempotent, Hermitian, commuting
/// with the representation, and of rank n_p d_p.
IsotypicDecomposition isotypic_projectors(const Representation& rep, const CharacterTable& ct);

}  // namespace groupbell
