#include "groupbell/registry.hpp"

#include <cmath>
#include <numbers>

#include "groupbell/errors.hpp"

namespace groupbell {

namespace {

constexpr double kPi = std::numbers::pi;

Vector basis_state(int dim, int k) {
  Vector v = Vector::Zero(dim);
  v(k) = 1.0;
  return v;
}

Vector plus_x() {
  Vector v(2);
  v << 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0);
  return v;
}

Vector minus_x() {
  Vector v(2);
  v << 1.0 / std::sqrt(2.0), -1.0 / std::sqrt(2.0);
  return v;
}

// Discrete-Fourier qutrit state (1/sqrt(3)) sum_k e^{2 pi i jk/3} |k>.
Vector fourier3(int j) {
  Vector v(3);
  for (int k = 0; k < 3; ++k) v(k) = std::polar(1.0 / std::sqrt(3.0), 2.0 * kPi * j * k / 3.0);
  return v;
}

Matrix outer(const Vector& a, const Vector& b) { return a * b.adjoint(); }

// Qutrit phase operator with eigenphases (1, e^{-i pi/3}, e^{i pi/3}) on the
// Fourier basis; its square is the cyclic shift |j> -> |j+1>.
Matrix qutrit_phase_unitary() {
  return outer(fourier3(0), fourier3(0)) +
         std::polar(1.0, -kPi / 3.0) * outer(fourier3(1), fourier3(1)) +
         std::polar(1.0, kPi / 3.0) * outer(fourier3(2), fourier3(2));
}

Matrix qutrit_reflection_unitary() {
  return outer(fourier3(0), fourier3(0)) +
         Complex(0.0, 1.0) * (outer(fourier3(1), fourier3(2)) - outer(fourier3(2), fourier3(1)));
}

}  // namespace

const std::vector<std::string>& builtin_representation_names() {
  static const std::vector<std::string> names = {"z4-qubit", "z6-qutrit", "d3-qubit",
                                                 "z6-qubit", "d6-qutrit"};
  return names;
}

Representation builtin_representation(const std::string& name) {
  if (name == "z4-qubit") {
    const Matrix u = outer(plus_x(), plus_x()) + Complex(0.0, -1.0) * outer(minus_x(), minus_x());
    return rep_from_generators(make_cyclic(4), {{"r", u}});
  }
  if (name == "z6-qutrit") {
    return rep_from_generators(make_cyclic(6), {{"r", qutrit_phase_unitary()}});
  }
  if (name == "d3-qubit") {
    const double theta = 2.0 * kPi / 3.0;
    Matrix u(2, 2);
    u << std::cos(theta), -std::sin(theta), std::sin(theta), std::cos(theta);
    Matrix v(2, 2);
    v << 1.0, 0.0, 0.0, -1.0;
    return rep_from_generators(make_dihedral(3), {{"r", u}, {"s", v}});
  }
  if (name == "z6-qubit") {
    const Matrix u =
        outer(plus_x(), plus_x()) + std::polar(1.0, kPi / 3.0) * outer(minus_x(), minus_x());
    return rep_from_generators(make_cyclic(6), {{"r", u}});
  }
  if (name == "d6-qutrit") {
    return rep_from_generators(make_dihedral(6),
                               {{"r", qutrit_phase_unitary()}, {"s", qutrit_reflection_unitary()}});
  }
  throw Error("unknown built-in representation '" + name + "'");
}

Vector builtin_initial_state(const std::string& name) {
  if (name == "z4-qubit" || name == "z6-qubit") return basis_state(2, 0);
  if (name == "z6-qutrit" || name == "d6-qutrit") return basis_state(3, 0);
  if (name == "d3-qubit") return plus_x();
  throw Error("unknown built-in representation '" + name + "'");
}

const std::vector<std::string>& registry_names() {
  static const std::vector<std::string> names = {"intro-z4", "three-party-z6", "d3",
                                                 "z6-qubit", "d6"};
  return names;
}

RegistryEntry registry_entry(const std::string& name) {
  RegistryEntry entry;
  entry.name = name;
  if (name == "intro-z4") {
    entry.rep_name = "z4-qubit";
    entry.parties = 2;
    entry.seed_words = {{"e", "e"}, {"e", "r"}};
    entry.game_policy = QuestionPolicy::full;
    entry.classical_bound = 3;
    entry.quantum_value = 2.0 + std::sqrt(2.0);
    entry.quantum_closed_form = "2+sqrt(2)";
  } else if (name == "three-party-z6") {
    entry.rep_name = "z6-qutrit";
    entry.parties = 3;
    entry.seed_words = {{"e", "r^4", "r^2"}, {"e", "e", "r^3"}, {"e", "r", "e"}, {"r", "r^4", "e"}};
    entry.game_policy = QuestionPolicy::full;
    entry.classical_bound = 2;
    entry.quantum_value = 20.0 / 9.0;
    entry.quantum_closed_form = "20/9";
    entry.game_classical = Rational{2, 8};
    entry.game_quantum = 5.0 / 18.0;
    entry.game_quantum_closed_form = "5/18";
  } else if (name == "d3") {
    entry.rep_name = "d3-qubit";
    entry.parties = 2;
    entry.seed_words = {{"e", "e"}, {"s", "r^2"}};
    entry.game_policy = QuestionPolicy::full;
    entry.classical_bound = 5;
    entry.quantum_value = 21.0 / 4.0;
    entry.quantum_closed_form = "21/4";
    entry.game_classical = Rational{5, 9};
    entry.game_quantum = 7.0 / 12.0;
    entry.game_quantum_closed_form = "7/12";
  } else if (name == "z6-qubit") {
    entry.rep_name = "z6-qubit";
    entry.parties = 2;
    entry.seed_words = {{"e", "e"}, {"e", "r"}};
    entry.game_policy = QuestionPolicy::restricted;
    entry.classical_bound = 5;
    entry.quantum_value = 3.0 + 1.5 * std::sqrt(3.0);
    entry.quantum_closed_form = "3+(3/2)*sqrt(3)";
    entry.game_classical = Rational{5, 6};
    entry.game_quantum = (2.0 + std::sqrt(3.0)) / 4.0;
    entry.game_quantum_closed_form = "(2+sqrt(3))/4";
  } else if (name == "d6") {
    entry.rep_name = "d6-qutrit";
    entry.parties = 2;
    entry.seed_words = {{"r^4", "r^2*s"}, {"e", "r^5*s"}};
    entry.game_policy = QuestionPolicy::restricted;
    entry.classical_bound = 6;
    entry.quantum_value = 20.0 / 3.0;
    entry.quantum_closed_form = "20/3";
    // conventional labels: the reflection bases enumerate as w0, w2, w1
    // (and x0, x2, x1) in group-element order
    entry.outcome_relabel = {{0, 1, 2}, {0, 1, 2}, {0, 2, 1}, {0, 2, 1}};
  } else {
    throw UnknownScenario("unknown scenario '" + name + "'");
  }
  return entry;
}

}  // namespace groupbell
