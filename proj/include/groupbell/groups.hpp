#pragma once

#include <string>
#include <vector>

namespace groupbell {

enum class GroupFamily { cyclic, dihedral };

/// Abstract finite group given by its Cayley table. Elements are indices in
/// [0, order). Cyclic groups enumerate e, r, ..., r^{n-1}; dihedral groups
/// enumerate r^j for j < n followed by r^j s. Immutable after construction.
struct FiniteGroup {
  GroupFamily family;
  int family_n = 0;  // n of Z_n or D_n
  int order = 0;
  int identity = 0;
  std::vector<int> cayley;  // row-major, cayley[g * order + h] = g * h
  std::vector<int> inverses;
  std::vector<std::string> element_names;  // canonical words r^a s^b

  int multiply(int g, int h) const { return cayley[g * order + h]; }
  int inverse(int g) const { return inverses[g]; }
  const std::string& name(int g) const { return element_names[g]; }
  int element_order(int g) const;

  /// Rotation exponent and reflection flag of the canonical word r^a s^b.
  int rotation_power(int g) const { return g % family_n; }
  bool is_reflection(int g) const { return g >= family_n; }

  /// Parses words like "e", "r", "r^4", "s", "r^2*s" (factors joined by '*').
  int parse_element(const std::string& word) const;

  bool same_group_as(const FiniteGroup& other) const {
    return family == other.family && family_n == other.family_n;
  }
};

FiniteGroup make_cyclic(int n);
FiniteGroup make_dihedral(int n);

struct ConjugacyClasses {
  std::vector<std::vector<int>> classes;  // ordered by smallest member
  std::vector<int> representatives;       // smallest member of each class
  std::vector<int> class_of;              // element index -> class index
};

ConjugacyClasses conjugacy_classes(const FiniteGroup& group);

}  // namespace groupbell
