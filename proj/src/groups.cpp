#include "groupbell/groups.hpp"

#include <algorithm>
#include <set>

#include "groupbell/errors.hpp"

namespace groupbell {

namespace {

std::string power_word(const std::string& symbol, int power) {
  if (power == 0) return "e";
  if (power == 1) return symbol;
  return symbol + "^" + std::to_string(power);
}

std::string dihedral_word(int a, int b) {
  if (b == 0) return power_word("r", a);
  if (a == 0) return "s";
  return power_word("r", a) + "*s";
}

// Latin-square property, identity row/column, inverses, and (for small
// groups) exhaustive associativity.
void validate_table(const FiniteGroup& g) {
  const int n = g.order;
  for (int row = 0; row < n; ++row) {
    std::set<int> seen_row, seen_col;
    for (int col = 0; col < n; ++col) {
      seen_row.insert(g.multiply(row, col));
      seen_col.insert(g.multiply(col, row));
    }
    if (static_cast<int>(seen_row.size()) != n || static_cast<int>(seen_col.size()) != n)
      throw Error("group table is not a Latin square");
  }
  for (int h = 0; h < n; ++h)
    if (g.multiply(g.identity, h) != h || g.multiply(h, g.identity) != h)
      throw Error("identity row/column violated");
  for (int h = 0; h < n; ++h)
    if (g.multiply(h, g.inverse(h)) != g.identity || g.multiply(g.inverse(h), h) != g.identity)
      throw Error("inverse table violated");
  if (n <= 12) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          if (g.multiply(g.multiply(a, b), c) != g.multiply(a, g.multiply(b, c)))
            throw Error("associativity violated");
  }
}

int mod(int a, int n) { return ((a % n) + n) % n; }

}  // namespace

int FiniteGroup::element_order(int g) const {
  int power = g;
  int count = 1;
  while (power != identity) {
    power = multiply(power, g);
    ++count;
  }
  return count;
}

int FiniteGroup::parse_element(const std::string& word) const {
  int result = identity;
  std::size_t pos = 0;
  while (pos <= word.size()) {
    std::size_t next = word.find('*', pos);
    std::string factor = word.substr(pos, next == std::string::npos ? next : next - pos);
    // trim surrounding whitespace
    const auto begin = factor.find_first_not_of(" \t");
    const auto end = factor.find_last_not_of(" \t");
    if (begin == std::string::npos) throw Error("empty factor in element word '" + word + "'");
    factor = factor.substr(begin, end - begin + 1);

    int element;
    if (factor == "e") {
      element = identity;
    } else if (factor == "s") {
      if (family != GroupFamily::dihedral)
        throw Error("element 's' is only defined for dihedral groups");
      element = family_n;  // index of the reflection s
    } else if (factor == "r" || factor.rfind("r^", 0) == 0) {
      int power = 1;
      if (factor.size() > 1) {
        try {
          std::size_t used = 0;
          power = std::stoi(factor.substr(2), &used);
          if (used != factor.size() - 2) throw Error("");
        } catch (...) {
          throw Error("bad rotation power in element word '" + word + "'");
        }
      }
      element = mod(power, family_n);
    } else {
      throw Error("unknown factor '" + factor + "' in element word '" + word + "'");
    }
    result = multiply(result, element);
    if (next == std::string::npos) break;
    pos = next + 1;
  }
  return result;
}

FiniteGroup make_cyclic(int n) {
  if (n < 1) throw Error("make_cyclic: n must be >= 1");
  FiniteGroup g;
  g.family = GroupFamily::cyclic;
  g.family_n = n;
  g.order = n;
  g.identity = 0;
  g.cayley.resize(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) g.cayley[i * n + j] = (i + j) % n;
  g.inverses.resize(n);
  for (int i = 0; i < n; ++i) g.inverses[i] = (n - i) % n;
  for (int i = 0; i < n; ++i) g.element_names.push_back(power_word("r", i));
  validate_table(g);
  return g;
}

FiniteGroup make_dihedral(int n) {
  if (n < 2) throw Error("make_dihedral: n must be >= 2");
  FiniteGroup g;
  g.family = GroupFamily::dihedral;
  g.family_n = n;
  g.order = 2 * n;
  g.identity = 0;
  const int order = g.order;
  g.cayley.resize(static_cast<std::size_t>(order) * order);
  // element index a + n*b stands for r^a s^b;
  // (r^a s^b)(r^c s^d) = r^{a + (-1)^b c} s^{b+d}
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < 2; ++b) {
      for (int c = 0; c < n; ++c) {
        for (int d = 0; d < 2; ++d) {
          const int lhs = a + n * b;
          const int rhs = c + n * d;
          const int rot = mod(a + (b ? -c : c), n);
          const int refl = (b + d) % 2;
          g.cayley[lhs * order + rhs] = rot + n * refl;
        }
      }
    }
  }
  g.inverses.resize(order);
  for (int a = 0; a < n; ++a) {
    g.inverses[a] = (n - a) % n;
    g.inverses[a + n] = a + n;  // reflections are involutions
  }
  for (int a = 0; a < n; ++a) g.element_names.push_back(dihedral_word(a, 0));
  for (int a = 0; a < n; ++a) g.element_names.push_back(dihedral_word(a, 1));
  validate_table(g);
  return g;
}

ConjugacyClasses conjugacy_classes(const FiniteGroup& group) {
  ConjugacyClasses result;
  result.class_of.assign(group.order, -1);
  for (int g = 0; g < group.order; ++g) {
    if (result.class_of[g] >= 0) continue;
    std::set<int> members;
    for (int h = 0; h < group.order; ++h)
      members.insert(group.multiply(group.multiply(h, g), group.inverse(h)));
    const int index = static_cast<int>(result.classes.size());
    std::vector<int> sorted(members.begin(), members.end());
    for (int m : sorted) result.class_of[m] = index;
    result.representatives.push_back(sorted.front());
    result.classes.push_back(std::move(sorted));
  }
  return result;
}

}  // namespace groupbell
