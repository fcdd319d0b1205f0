#include "groupbell/reptheory.hpp"

#include <cmath>
#include <numbers>

#include "groupbell/errors.hpp"

namespace groupbell {

namespace {

constexpr double kPi = std::numbers::pi;

double max_abs(const Matrix& m) { return m.cwiseAbs().maxCoeff(); }

Complex snap_to_integer(Complex z) {
  double re = z.real(), im = z.imag();
  if (std::abs(re - std::round(re)) < 1e-12) re = std::round(re);
  if (std::abs(im - std::round(im)) < 1e-12) im = std::round(im);
  return {re, im};
}

void validate_character_table(const FiniteGroup& group, const CharacterTable& ct) {
  long long dim_sq = 0;
  for (int d : ct.dims) dim_sq += static_cast<long long>(d) * d;
  if (dim_sq != group.order)
    throw Error("character table: sum of squared dimensions != group order");
  const int nc = static_cast<int>(ct.classes.classes.size());
  for (int p = 0; p < ct.irrep_count(); ++p) {
    for (int q = 0; q < ct.irrep_count(); ++q) {
      Complex acc = 0.0;
      for (int c = 0; c < nc; ++c)
        acc += static_cast<double>(ct.classes.classes[c].size()) * ct.table[p][c] *
               std::conj(ct.table[q][c]);
      const Complex expected = (p == q) ? Complex(group.order, 0.0) : Complex(0.0, 0.0);
      if (std::abs(acc - expected) > tol::structural)
        throw Error("character table: row orthogonality violated");
    }
  }
}

}  // namespace

Representation make_representation(FiniteGroup group, std::vector<Matrix> matrices) {
  if (static_cast<int>(matrices.size()) != group.order)
    throw Error("make_representation: one matrix per group element required");
  const Eigen::Index dim = matrices.front().rows();
  for (int g = 0; g < group.order; ++g) {
    const Matrix& m = matrices[g];
    if (m.rows() != dim || m.cols() != dim)
      throw DimensionMismatch("make_representation: matrices of unequal dimension");
    if (!m.allFinite()) throw Error("make_representation: non-finite entries");
    if (!is_unitary(m))
      throw NotUnitary("make_representation: matrix for '" + group.name(g) +
                       "' is not unitary within 1e-9");
  }
  if (max_abs(matrices[group.identity] - Matrix::Identity(dim, dim)) > tol::structural)
    throw Error("make_representation: identity element is not mapped to I");
  for (int g = 0; g < group.order; ++g)
    for (int h = 0; h < group.order; ++h)
      if (max_abs(matrices[g] * matrices[h] - matrices[group.multiply(g, h)]) > tol::structural)
        throw Error("make_representation: homomorphism property violated at (" +
                    group.name(g) + ", " + group.name(h) + ")");

  Representation rep;
  rep.group = std::move(group);
  rep.dim = static_cast<int>(dim);
  rep.matrices = std::move(matrices);
  return rep;
}

Representation rep_from_generators(const FiniteGroup& group,
                                   const std::map<std::string, Matrix>& generators) {
  const bool dihedral = group.family == GroupFamily::dihedral;
  const std::size_t expected = dihedral ? 2 : 1;
  if (generators.size() != expected || !generators.count("r") ||
      (dihedral && !generators.count("s")))
    throw Error(dihedral ? "rep_from_generators: dihedral groups take generators 'r' and 's'"
                         : "rep_from_generators: cyclic groups take generator 'r'");

  const Matrix& r = generators.at("r");
  if (r.rows() != r.cols()) throw DimensionMismatch("rep_from_generators: 'r' is not square");
  if (!is_unitary(r)) throw NotUnitary("rep_from_generators: generator 'r' is not unitary");
  const Eigen::Index dim = r.rows();
  const Matrix identity = Matrix::Identity(dim, dim);

  const int n = group.family_n;
  std::vector<Matrix> rotation_powers(n);
  rotation_powers[0] = identity;
  for (int a = 1; a < n; ++a) rotation_powers[a] = rotation_powers[a - 1] * r;
  if (max_abs(rotation_powers[n - 1] * r - identity) > tol::structural)
    throw RelationViolated("rep_from_generators: relation r^" + std::to_string(n) +
                           " = e violated");

  std::vector<Matrix> matrices;
  if (!dihedral) {
    matrices = rotation_powers;
  } else {
    const Matrix& s = generators.at("s");
    if (s.rows() != dim || s.cols() != dim)
      throw DimensionMismatch("rep_from_generators: 'r' and 's' have different dimensions");
    if (!is_unitary(s)) throw NotUnitary("rep_from_generators: generator 's' is not unitary");
    if (max_abs(s * s - identity) > tol::structural)
      throw RelationViolated("rep_from_generators: relation s^2 = e violated");
    if (max_abs(s * r * s * r - identity) > tol::structural)
      throw RelationViolated("rep_from_generators: relation s*r*s = r^-1 violated");
    matrices.resize(2 * n);
    for (int a = 0; a < n; ++a) {
      matrices[a] = rotation_powers[a];
      matrices[a + n] = rotation_powers[a] * s;
    }
  }
  return make_representation(group, std::move(matrices));
}

Representation tensor_rep(const Representation& rep, int parties) {
  if (parties < 1) throw Error("tensor_rep: parties must be >= 1");
  if (parties == 1) return rep;
  std::vector<Matrix> matrices;
  matrices.reserve(rep.matrices.size());
  for (const Matrix& m : rep.matrices)
    matrices.push_back(tensor_all(std::vector<Matrix>(parties, m)));
  return make_representation(rep.group, std::move(matrices));
}

CharacterTable character_table_for_family(const FiniteGroup& group) {
  CharacterTable ct;
  ct.classes = conjugacy_classes(group);
  const int nc = static_cast<int>(ct.classes.classes.size());

  if (group.family == GroupFamily::cyclic) {
    const int n = group.family_n;
    for (int j = 0; j < n; ++j) {
      ct.irrep_labels.push_back("Gamma^(" + std::to_string(j) + ")");
      ct.dims.push_back(1);
      std::vector<Complex> row(nc);
      for (int c = 0; c < nc; ++c) {
        const int k = ct.classes.representatives[c];
        const double theta = 2.0 * kPi * j * k / n;
        row[c] = snap_to_integer({std::cos(theta), std::sin(theta)});
      }
      ct.table.push_back(std::move(row));
    }
  } else if (group.family == GroupFamily::dihedral) {
    const int n = group.family_n;
    const bool even = n % 2 == 0;
    auto add_row = [&](auto&& character) {
      std::vector<Complex> row(nc);
      for (int c = 0; c < nc; ++c) {
        const int g = ct.classes.representatives[c];
        row[c] = snap_to_integer(character(group.rotation_power(g), group.is_reflection(g)));
      }
      ct.irrep_labels.push_back("Gamma^(" + std::to_string(ct.table.size() + 1) + ")");
      ct.table.push_back(std::move(row));
    };
    // one-dimensional irreps
    ct.dims.push_back(1);
    add_row([](int, bool) { return Complex(1.0, 0.0); });
    ct.dims.push_back(1);
    add_row([](int, bool refl) { return Complex(refl ? -1.0 : 1.0, 0.0); });
    if (even) {
      ct.dims.push_back(1);
      add_row([](int a, bool) { return Complex(a % 2 ? -1.0 : 1.0, 0.0); });
      ct.dims.push_back(1);
      add_row([](int a, bool refl) {
        return Complex((a % 2 ? -1.0 : 1.0) * (refl ? -1.0 : 1.0), 0.0);
      });
    }
    // two-dimensional irreps
    const int two_dim_count = even ? n / 2 - 1 : (n - 1) / 2;
    for (int h = 1; h <= two_dim_count; ++h) {
      ct.dims.push_back(2);
      add_row([h, n](int a, bool refl) {
        if (refl) return Complex(0.0, 0.0);
        return Complex(2.0 * std::cos(2.0 * kPi * h * a / n), 0.0);
      });
    }
  } else {
    throw UnsupportedFamily("character_table_for_family: unsupported group family");
  }

  validate_character_table(group, ct);
  return ct;
}

std::vector<int> irrep_multiplicities(const Representation& rep, const CharacterTable& ct) {
  if (static_cast<int>(ct.classes.class_of.size()) != rep.group.order)
    throw Error("irrep_multiplicities: representation and table have different groups");

  std::vector<int> result;
  for (int p = 0; p < ct.irrep_count(); ++p) {
    Complex acc = 0.0;
    for (int g = 0; g < rep.group.order; ++g)
      acc += rep.character(g) * std::conj(ct.character(p, g));
    acc /= static_cast<double>(rep.group.order);
    const double rounded = std::round(acc.real());
    if (std::abs(acc.imag()) > tol::structural || std::abs(acc.real() - rounded) > tol::structural ||
        rounded < 0.0)
      throw NonIntegerMultiplicity("irrep_multiplicities: multiplicity of " +
                                   ct.irrep_labels[p] + " is not a nonnegative integer");
    result.push_back(static_cast<int>(rounded));
  }
  return result;
}

IsotypicDecomposition isotypic_projectors(const Representation& rep, const CharacterTable& ct) {
  IsotypicDecomposition decomposition;
  decomposition.multiplicities = irrep_multiplicities(rep, ct);

  const Matrix identity = Matrix::Identity(rep.dim, rep.dim);
  Matrix total = Matrix::Zero(rep.dim, rep.dim);
  for (int p = 0; p < ct.irrep_count(); ++p) {
    Matrix projector = Matrix::Zero(rep.dim, rep.dim);
    for (int g = 0; g < rep.group.order; ++g)
      projector += std::conj(ct.character(p, g)) * rep.matrix(g);
    projector *= static_cast<double>(ct.dims[p]) / rep.group.order;
    total += projector;
    if (decomposition.multiplicities[p] == 0) {
      if (max_abs(projector) > tol::structural)
        throw Error("isotypic_projectors: nonzero projector for absent irrep");
      continue;
    }
    if (!is_hermitian(projector) || max_abs(projector * projector - projector) > tol::structural)
      throw Error("isotypic_projectors: projector not idempotent Hermitian");
    for (int g = 0; g < rep.group.order; ++g)
      if (max_abs(projector * rep.matrix(g) - rep.matrix(g) * projector) > tol::structural)
        throw Error("isotypic_projectors: projector does not commute with representation");
    const double rank = projector.trace().real();
    if (std::abs(rank - decomposition.multiplicities[p] * ct.dims[p]) > tol::structural)
      throw Error("isotypic_projectors: projector rank != n_p * d_p");
    decomposition.components.push_back({p, std::move(projector)});
  }
  if (max_abs(total - identity) > tol::structural)
    throw Error("isotypic_projectors: projectors do not sum to the identity");
  return decomposition;
}

}  // namespace groupbell
