#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

namespace groupbell {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

// Tolerance policy: structural checks (unitarity, hermiticity, orthonormality)
// at 1e-9, eigen-residuals at 1e-8, rank cutoff at 1e-10. Matrices are small
// (dim <= 32) with entries of magnitude <= 1, so double precision has ample
// headroom.
namespace tol {
inline constexpr double structural = 1e-9;
inline constexpr double residual = 1e-8;
inline constexpr double rank_cutoff = 1e-10;
}  // namespace tol

struct EigenPair {
  double value;
  Vector vector;
};

/// Kronecker product. Dimensions multiply.
Matrix tensor(const Matrix& a, const Matrix& b);
Vector tensor(const Vector& a, const Vector& b);

/// Left-to-right Kronecker fold; the canonical association order.
Matrix tensor_all(const std::vector<Matrix>& factors);
Vector tensor_all(const std::vector<Vector>& factors);

bool is_hermitian(const Matrix& m, double tolerance = tol::structural);
bool is_unitary(const Matrix& m, double tolerance = tol::structural);

/// Fixes the global phase so the largest-magnitude entry is real positive.
/// Ties go to the first entry within 1e-12 of the maximum magnitude.
Vector canonical_phase(Vector v);

/// Eigenpairs of a Hermitian matrix, sorted by eigenvalue descending.
/// Ties are broken by the first differing eigenvector entry, and eigenvector
/// phases are canonicalized, so repeated runs agree bit-for-bit.
/// Throws NotHermitian if the symmetry check fails.
std::vector<EigenPair> hermitian_eigendecompose(const Matrix& m);

/// Nonzero eigenpairs of M = sum_j |mu_j><mu_j|, obtained from the Gram
/// matrix G_kj = <mu_k|mu_j> and lifted back as sum_j c_j |mu_j> (normalized).
/// Eigenvalues below the rank cutoff are discarded.
std::vector<EigenPair> span_reduced_eigensolve(const std::vector<Vector>& vectors);

/// Sum of |v><v| over the given (orthonormal) vectors.
Matrix projector_onto(const std::vector<Vector>& vectors);

/// Compression B_ij = <b_i|M|b_j> of m onto the given basis vectors.
Matrix compress(const Matrix& m, const std::vector<Vector>& basis);

}  // namespace groupbell
