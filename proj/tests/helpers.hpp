#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <vector>

#include "groupbell/linalg.hpp"

namespace groupbell::testing {

inline constexpr double kPi = std::numbers::pi;

// Deterministic generator for property tests (same stream on every platform).
struct TestRng {
  std::uint64_t state;
  explicit TestRng(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    state += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
  double symmetric() { return 2.0 * uniform() - 1.0; }
  int uniform_int(int n) { return static_cast<int>(next() % static_cast<std::uint64_t>(n)); }

  Vector vector(int dim) {
    Vector v(dim);
    for (int i = 0; i < dim; ++i) v(i) = Complex(symmetric(), symmetric());
    return v;
  }
  Vector unit_vector(int dim) {
    Vector v = vector(dim);
    v.normalize();
    return v;
  }
  Matrix matrix(int dim) {
    Matrix m(dim, dim);
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j) m(i, j) = Complex(symmetric(), symmetric());
    return m;
  }
  Matrix hermitian(int dim) {
    Matrix m = matrix(dim);
    return 0.5 * (m + m.adjoint()).eval();
  }
};

inline Vector ket(int dim, int k) {
  Vector v = Vector::Zero(dim);
  v(k) = 1.0;
  return v;
}

inline Vector plus_x() {
  Vector v(2);
  v << 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0);
  return v;
}

inline Vector minus_x() {
  Vector v(2);
  v << 1.0 / std::sqrt(2.0), -1.0 / std::sqrt(2.0);
  return v;
}

// (1/sqrt(3)) sum_k e^{2 pi i jk/3} |k>
inline Vector fourier3(int j) {
  Vector v(3);
  for (int k = 0; k < 3; ++k) v(k) = std::polar(1.0 / std::sqrt(3.0), 2.0 * kPi * j * k / 3.0);
  return v;
}

// Qutrit unitary with eigenphases (1, e^{-i pi/3}, e^{i pi/3}) on the Fourier
// basis. Its square is the cyclic shift.
inline Matrix qutrit_phase_unitary() {
  Matrix u = Matrix::Zero(3, 3);
  u += fourier3(0) * fourier3(0).adjoint();
  u += std::polar(1.0, -kPi / 3.0) * (fourier3(1) * fourier3(1).adjoint());
  u += std::polar(1.0, kPi / 3.0) * (fourier3(2) * fourier3(2).adjoint());
  return u;
}

inline Matrix qutrit_reflection_unitary() {
  Matrix v = Matrix::Zero(3, 3);
  v += fourier3(0) * fourier3(0).adjoint();
  v += Complex(0, 1) * (fourier3(1) * fourier3(2).adjoint());
  v -= Complex(0, 1) * (fourier3(2) * fourier3(1).adjoint());
  return v;
}

inline Matrix d3_rotation() {
  const double theta = 2.0 * kPi / 3.0;
  Matrix u(2, 2);
  u << std::cos(theta), -std::sin(theta), std::sin(theta), std::cos(theta);
  return u;
}

inline Matrix d3_reflection() {
  Matrix v(2, 2);
  v << 1.0, 0.0, 0.0, -1.0;
  return v;
}

inline double max_abs(const Matrix& m) { return m.cwiseAbs().maxCoeff(); }

// Optimal three-qutrit state of the three-party construction, written out in
// the computational basis.
inline Vector three_party_optimal_state() {
  auto idx = [](int a, int b, int c) { return 9 * a + 3 * b + c; };
  Vector v = Vector::Zero(27);
  const double scale = 1.0 / (30.0 * std::sqrt(3.0));
  auto set3 = [&](double coeff, int a0, int b0, int c0, int a1, int b1, int c1, int a2, int b2,
                  int c2) {
    v(idx(a0, b0, c0)) = coeff * scale;
    v(idx(a1, b1, c1)) = coeff * scale;
    v(idx(a2, b2, c2)) = coeff * scale;
  };
  set3(-10, 0, 0, 0, 1, 1, 1, 2, 2, 2);
  set3(14, 0, 0, 1, 1, 1, 2, 2, 2, 0);
  set3(11, 0, 0, 2, 1, 1, 0, 2, 2, 1);
  set3(-7, 0, 1, 0, 1, 2, 1, 2, 0, 2);
  set3(-1, 0, 1, 1, 0, 2, 2, 1, 0, 0);
  set3(-1, 1, 2, 2, 2, 0, 0, 2, 1, 1);
  set3(-4, 0, 1, 2, 0, 2, 0, 1, 0, 1);
  set3(-4, 1, 2, 0, 2, 0, 1, 2, 1, 2);
  set3(20, 0, 2, 1, 1, 0, 2, 2, 1, 0);
  return v;
}

// Optimal two-qubit state of the z6-qubit construction:
// (1/sqrt(6)) [ (1+e^{i pi/3}) |+x,-x> + sqrt(3) |-x,+x> ].
inline Vector z6_qubit_optimal_state() {
  const Complex c1 = (1.0 + std::polar(1.0, kPi / 3.0)) / std::sqrt(6.0);
  const Complex c2 = std::sqrt(3.0) / std::sqrt(6.0);
  return c1 * tensor(plus_x(), minus_x()) + c2 * tensor(minus_x(), plus_x());
}

}  // namespace groupbell::testing
