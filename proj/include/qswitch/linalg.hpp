#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <vector>

#include <Eigen/Dense>
#include <unsupported/Eigen/KroneckerProduct>

#include "qswitch/errors.hpp"

namespace qswitch {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

inline constexpr Complex kImag{0.0, 1.0};

// Default numeric tolerances. Structural checks (hermiticity, unitarity,
// trace) use 1e-12; eigenvalues of densities may dip slightly negative from
// rounding, so positivity is enforced down to -1e-10; entropy treats
// eigenvalues below 1e-12 as exact zeros.
inline constexpr double kStructureTol = 1e-12;
inline constexpr double kEigenvalueFloor = -1e-10;
inline constexpr double kEntropyCutoff = 1e-12;

// Tolerances are absolute for matrices with entries of magnitude <= 1 and
// scale with the largest entry beyond that.
inline double scaled_tolerance(const ComplexMatrix& m, double tol) {
  const double peak = m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
  return tol * std::max(1.0, peak);
}

inline ComplexMatrix identity(Eigen::Index dim) {
  return ComplexMatrix::Identity(dim, dim);
}

inline ComplexMatrix pauli_x() {
  ComplexMatrix m(2, 2);
  m << 0, 1, 1, 0;
  return m;
}

inline ComplexMatrix pauli_y() {
  ComplexMatrix m(2, 2);
  m << 0, -kImag, kImag, 0;
  return m;
}

inline ComplexMatrix pauli_z() {
  ComplexMatrix m(2, 2);
  m << 1, 0, 0, -1;
  return m;
}

inline bool is_hermitian(const ComplexMatrix& m, double tol = kStructureTol) {
  if (m.rows() != m.cols()) return false;
  return (m - m.adjoint()).cwiseAbs().maxCoeff() <= scaled_tolerance(m, tol);
}

inline bool is_unitary(const ComplexMatrix& m, double tol = kStructureTol) {
  if (m.rows() != m.cols()) return false;
  const ComplexMatrix gram = m.adjoint() * m;
  return (gram - identity(m.rows())).cwiseAbs().maxCoeff() <=
         scaled_tolerance(m, tol);
}

inline bool is_density(const ComplexMatrix& m, double tol = kStructureTol) {
  if (!is_hermitian(m, tol)) return false;
  if (std::abs(m.trace() - Complex{1.0, 0.0}) > tol) return false;
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(m,
                                                      Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) return false;
  return solver.eigenvalues().minCoeff() >= kEigenvalueFloor;
}

inline ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  return Eigen::kroneckerProduct(a, b);
}

inline ComplexMatrix dagger(const ComplexMatrix& m) { return m.adjoint(); }

// Eigendecomposition of a Hermitian matrix: ascending real eigenvalues and a
// matching orthonormal column basis.
struct Spectrum {
  RealVector eigenvalues;
  ComplexMatrix eigenvectors;
};

inline Spectrum eig_hermitian(const ComplexMatrix& h,
                              double tol = kStructureTol) {
  if (!is_hermitian(h, tol)) {
    throw NotHermitian("eig_hermitian: matrix is not Hermitian");
  }
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h);
  if (solver.info() != Eigen::Success) {
    throw Error("eig_hermitian: eigensolver failed to converge");
  }
  return Spectrum{solver.eigenvalues(), solver.eigenvectors()};
}

// exp(-i*s*h) for Hermitian h, assembled from the spectrum rather than a
// Taylor or Pade expansion so it is unitary to rounding by construction.
inline ComplexMatrix exp_minus_i(const ComplexMatrix& h, double s = 1.0) {
  const Spectrum spec = eig_hermitian(h);
  ComplexVector phases(spec.eigenvalues.size());
  for (Eigen::Index k = 0; k < spec.eigenvalues.size(); ++k) {
    phases[k] = std::exp(Complex{0.0, -s * spec.eigenvalues[k]});
  }
  return spec.eigenvectors * phases.asDiagonal() * spec.eigenvectors.adjoint();
}

// Partial trace over the subsystems *not* listed in `keep`. `dims` lists the
// subsystem dimensions with subsystem 0 the most significant index; `keep`
// lists the subsystem indices retained, in ascending order, and the result is
// indexed by those subsystems in the same order.
inline ComplexMatrix partial_trace(const ComplexMatrix& rho,
                                   const std::vector<int>& dims,
                                   const std::vector<int>& keep) {
  if (rho.rows() != rho.cols()) {
    throw DimensionMismatch("partial_trace: matrix is not square");
  }
  Eigen::Index total = 1;
  for (int d : dims) {
    if (d <= 0) throw DimensionMismatch("partial_trace: nonpositive dim");
    total *= d;
  }
  if (total != rho.rows()) {
    throw DimensionMismatch(
        "partial_trace: product of dims does not match matrix size");
  }
  const int n = static_cast<int>(dims.size());
  std::vector<bool> kept(dims.size(), false);
  for (int k : keep) {
    if (k < 0 || k >= n || kept[static_cast<std::size_t>(k)]) {
      throw DimensionMismatch("partial_trace: bad subsystem index in keep");
    }
    kept[static_cast<std::size_t>(k)] = true;
  }
  for (std::size_t k = 1; k < keep.size(); ++k) {
    if (keep[k] <= keep[k - 1]) {
      throw DimensionMismatch("partial_trace: keep must be ascending");
    }
  }

  std::vector<int> traced;
  for (int k = 0; k < n; ++k) {
    if (!kept[static_cast<std::size_t>(k)]) traced.push_back(k);
  }

  // Strides for the flattened multi-index (most significant subsystem first).
  std::vector<Eigen::Index> stride(dims.size(), 1);
  for (int k = n - 2; k >= 0; --k) {
    stride[static_cast<std::size_t>(k)] =
        stride[static_cast<std::size_t>(k + 1)] * dims[static_cast<std::size_t>(k + 1)];
  }

  Eigen::Index dim_keep = 1;
  for (int k : keep) dim_keep *= dims[static_cast<std::size_t>(k)];
  Eigen::Index dim_traced = 1;
  for (int k : traced) dim_traced *= dims[static_cast<std::size_t>(k)];

  // Flat offset contributed by distributing `flat` over the listed subsystems.
  auto offset = [&](const std::vector<int>& subs, Eigen::Index flat) {
    Eigen::Index off = 0;
    for (auto it = subs.rbegin(); it != subs.rend(); ++it) {
      const auto d = dims[static_cast<std::size_t>(*it)];
      off += (flat % d) * stride[static_cast<std::size_t>(*it)];
      flat /= d;
    }
    return off;
  };

  ComplexMatrix out = ComplexMatrix::Zero(dim_keep, dim_keep);
  for (Eigen::Index i = 0; i < dim_keep; ++i) {
    const Eigen::Index row_keep = offset(keep, i);
    for (Eigen::Index j = 0; j < dim_keep; ++j) {
      const Eigen::Index col_keep = offset(keep, j);
      Complex acc{0.0, 0.0};
      for (Eigen::Index m = 0; m < dim_traced; ++m) {
        const Eigen::Index off = offset(traced, m);
        acc += rho(row_keep + off, col_keep + off);
      }
      out(i, j) = acc;
    }
  }
  return out;
}

// Von Neumann entropy in bits. Eigenvalues below the cutoff are treated as
// exact zeros and the result is clamped to be nonnegative.
inline double von_neumann_entropy(const ComplexMatrix& rho) {
  if (!is_density(rho)) {
    throw NotDensity("von_neumann_entropy: input is not a density matrix");
  }
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(rho,
                                                      Eigen::EigenvaluesOnly);
  double entropy = 0.0;
  for (Eigen::Index k = 0; k < solver.eigenvalues().size(); ++k) {
    const double p = solver.eigenvalues()[k];
    if (p > kEntropyCutoff) entropy -= p * std::log2(p);
  }
  return std::max(entropy, 0.0);
}

}  // namespace qswitch
