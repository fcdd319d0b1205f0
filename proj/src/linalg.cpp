#include "groupbell/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "groupbell/errors.hpp"

namespace groupbell {

namespace {

void check_finite(const Matrix& m, const char* where) {
  if (!m.allFinite()) throw Error(std::string(where) + ": non-finite entries");
}

// Strict-weak order: eigenvalue descending, then entrywise (re, im) of the
// phase-canonicalized eigenvector. Makes repeated runs bit-identical even
// for degenerate eigenvalues.
bool pair_less(const EigenPair& a, const EigenPair& b) {
  if (a.value != b.value) return a.value > b.value;
  for (Eigen::Index i = 0; i < a.vector.size(); ++i) {
    if (a.vector(i).real() != b.vector(i).real())
      return a.vector(i).real() < b.vector(i).real();
    if (a.vector(i).imag() != b.vector(i).imag())
      return a.vector(i).imag() < b.vector(i).imag();
  }
  return false;
}

}  // namespace

Matrix tensor(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

Vector tensor(const Vector& a, const Vector& b) {
  Vector out(a.size() * b.size());
  for (Eigen::Index i = 0; i < a.size(); ++i)
    for (Eigen::Index j = 0; j < b.size(); ++j) out(i * b.size() + j) = a(i) * b(j);
  return out;
}

Matrix tensor_all(const std::vector<Matrix>& factors) {
  if (factors.empty()) throw DimensionMismatch("tensor_all: no factors");
  Matrix out = factors.front();
  for (std::size_t i = 1; i < factors.size(); ++i) out = tensor(out, factors[i]);
  return out;
}

Vector tensor_all(const std::vector<Vector>& factors) {
  if (factors.empty()) throw DimensionMismatch("tensor_all: no factors");
  Vector out = factors.front();
  for (std::size_t i = 1; i < factors.size(); ++i) out = tensor(out, factors[i]);
  return out;
}

bool is_hermitian(const Matrix& m, double tolerance) {
  if (m.rows() != m.cols()) return false;
  return (m - m.adjoint()).cwiseAbs().maxCoeff() <= tolerance;
}

bool is_unitary(const Matrix& m, double tolerance) {
  if (m.rows() != m.cols()) return false;
  Matrix residual = m.adjoint() * m - Matrix::Identity(m.rows(), m.cols());
  return residual.cwiseAbs().maxCoeff() <= tolerance;
}

Vector canonical_phase(Vector v) {
  double max_mag = 0.0;
  for (Eigen::Index i = 0; i < v.size(); ++i) max_mag = std::max(max_mag, std::abs(v(i)));
  if (max_mag < 1e-300) return v;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (std::abs(v(i)) >= max_mag - 1e-12) {
      v *= std::conj(v(i)) / std::abs(v(i));
      break;
    }
  }
  return v;
}

std::vector<EigenPair> hermitian_eigendecompose(const Matrix& m) {
  if (m.rows() != m.cols())
    throw DimensionMismatch("hermitian_eigendecompose: matrix is not square");
  check_finite(m, "hermitian_eigendecompose");
  if (!is_hermitian(m))
    throw NotHermitian("hermitian_eigendecompose: matrix is not Hermitian within 1e-9");

  Eigen::SelfAdjointEigenSolver<Matrix> solver(m);
  if (solver.info() != Eigen::Success)
    throw Error("hermitian_eigendecompose: eigensolver did not converge");

  std::vector<EigenPair> pairs;
  pairs.reserve(static_cast<std::size_t>(m.rows()));
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    pairs.push_back({solver.eigenvalues()(i), canonical_phase(solver.eigenvectors().col(i))});
  std::sort(pairs.begin(), pairs.end(), pair_less);
  return pairs;
}

std::vector<EigenPair> span_reduced_eigensolve(const std::vector<Vector>& vectors) {
  if (vectors.empty()) throw DimensionMismatch("span_reduced_eigensolve: no vectors");
  const Eigen::Index dim = vectors.front().size();
  for (const auto& v : vectors)
    if (v.size() != dim)
      throw DimensionMismatch("span_reduced_eigensolve: vectors of unequal dimension");

  const int k = static_cast<int>(vectors.size());
  Matrix gram(k, k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) gram(i, j) = vectors[i].dot(vectors[j]);

  std::vector<EigenPair> lifted;
  for (const auto& pair : hermitian_eigendecompose(gram)) {
    if (pair.value < tol::rank_cutoff) continue;
    Vector v = Vector::Zero(dim);
    for (int j = 0; j < k; ++j) v += pair.vector(j) * vectors[j];
    v.normalize();
    lifted.push_back({pair.value, canonical_phase(std::move(v))});
  }
  return lifted;
}

Matrix projector_onto(const std::vector<Vector>& vectors) {
  if (vectors.empty()) throw DimensionMismatch("projector_onto: no vectors");
  Matrix p = Matrix::Zero(vectors.front().size(), vectors.front().size());
  for (const auto& v : vectors) p += v * v.adjoint();
  return p;
}

Matrix compress(const Matrix& m, const std::vector<Vector>& basis) {
  if (basis.empty()) throw DimensionMismatch("compress: empty basis");
  const int k = static_cast<int>(basis.size());
  for (const auto& b : basis)
    if (b.size() != m.rows()) throw DimensionMismatch("compress: basis dimension mismatch");
  Matrix out(k, k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) out(i, j) = basis[i].dot(m * basis[j]);
  return out;
}

}  // namespace groupbell
