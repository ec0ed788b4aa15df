#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>
#include <random>

#include "qswitch/linalg.hpp"
#include "qswitch/switch_model.hpp"
#include "test_helpers.hpp"

using namespace qswitch;
using qswitch::testing::max_abs_diff;

namespace {
constexpr double kPi = std::numbers::pi;

ComplexVector basis_vector(int dim, int k) {
  ComplexVector v = ComplexVector::Zero(dim);
  v[k] = 1.0;
  return v;
}
}  // namespace

TEST_CASE("kron basics") {
  REQUIRE(max_abs_diff(kron(identity(2), identity(2)), identity(4)) == 0.0);

  // (sx (x) sy)|01> = -i|10>
  const ComplexMatrix sxy = kron(pauli_x(), pauli_y());
  const ComplexVector mapped = sxy * basis_vector(4, 1);
  REQUIRE(std::abs(mapped[2] - Complex{0.0, -1.0}) <= 1e-15);
  REQUIRE(std::abs(mapped[0]) <= 1e-15);
  REQUIRE(std::abs(mapped[1]) <= 1e-15);
  REQUIRE(std::abs(mapped[3]) <= 1e-15);

  // The antisymmetric exchange couples only |01> and |10>.
  const ComplexMatrix d = sxy - kron(pauli_y(), pauli_x());
  for (int k = 0; k < 4; ++k) {
    REQUIRE(std::abs(d(0, k)) <= 1e-15);
    REQUIRE(std::abs(d(k, 0)) <= 1e-15);
    REQUIRE(std::abs(d(3, k)) <= 1e-15);
    REQUIRE(std::abs(d(k, 3)) <= 1e-15);
  }
  REQUIRE(std::abs(d(1, 2) - Complex{0.0, 2.0}) <= 1e-15);
  REQUIRE(std::abs(d(2, 1) - Complex{0.0, -2.0}) <= 1e-15);
}

TEST_CASE("kron mixed-product property") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    ComplexMatrix a(2, 3), c(3, 2), b(2, 2), d(2, 2);
    for (auto* m : {&b, &d}) {
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) (*m)(i, j) = testing::random_complex(rng);
    }
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 3; ++j) a(i, j) = testing::random_complex(rng);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 2; ++j) c(i, j) = testing::random_complex(rng);
    const ComplexMatrix lhs = kron(a, b) * kron(c, d);
    const ComplexMatrix rhs = kron(ComplexMatrix(a * c), ComplexMatrix(b * d));
    REQUIRE(max_abs_diff(lhs, rhs) <= 1e-10);
  }
}

TEST_CASE("dagger") {
  REQUIRE(max_abs_diff(dagger(identity(3)), identity(3)) == 0.0);

  std::mt19937_64 rng(12);
  ComplexMatrix m(3, 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m(i, j) = testing::random_complex(rng);
  REQUIRE(max_abs_diff(dagger(dagger(m)), m) == 0.0);

  const ComplexMatrix u = u_qs(0.7);
  REQUIRE(max_abs_diff(dagger(u) * u, identity(8)) <= 1e-12);
}

TEST_CASE("structure checks") {
  REQUIRE(is_hermitian(pauli_x()));
  REQUIRE(is_hermitian(pauli_y()));
  REQUIRE(is_unitary(pauli_z()));
  REQUIRE_FALSE(is_density(pauli_x()));  // trace 0
  REQUIRE(is_density(ComplexMatrix(0.5 * identity(2))));

  ComplexMatrix not_square(2, 3);
  not_square.setZero();
  REQUIRE_FALSE(is_hermitian(not_square));
  REQUIRE_FALSE(is_unitary(not_square));

  // Tolerance scales with the largest entry once entries exceed 1.
  ComplexMatrix big(2, 2);
  big << 0.0, 1e6, 1e6 + 5e-7, 0.0;
  REQUIRE(is_hermitian(big));
  ComplexMatrix small_dev(2, 2);
  small_dev << 0.0, 1.0, 1.0 + 5e-7, 0.0;
  REQUIRE_FALSE(is_hermitian(small_dev));
}

TEST_CASE("eig_hermitian spectra") {
  ComplexMatrix d01 = ComplexMatrix::Zero(2, 2);
  d01(1, 1) = 1.0;
  const Spectrum s01 = eig_hermitian(d01);
  REQUIRE(std::abs(s01.eigenvalues[0] - 0.0) <= 1e-14);
  REQUIRE(std::abs(s01.eigenvalues[1] - 1.0) <= 1e-14);

  const Spectrum sx = eig_hermitian(pauli_x());
  REQUIRE(std::abs(sx.eigenvalues[0] + 1.0) <= 1e-14);
  REQUIRE(std::abs(sx.eigenvalues[1] - 1.0) <= 1e-14);

  const Spectrum sqs = eig_hermitian(build_h_qs());
  REQUIRE(std::abs(sqs.eigenvalues[0] + 1.0) <= 1e-14);
  for (int k = 1; k < 7; ++k) REQUIRE(std::abs(sqs.eigenvalues[k]) <= 1e-14);
  REQUIRE(std::abs(sqs.eigenvalues[7] - 1.0) <= 1e-14);
}

TEST_CASE("eig_hermitian reconstruction and errors") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 10; ++trial) {
    const ComplexMatrix h = testing::random_hermitian(rng, 5);
    const Spectrum s = eig_hermitian(h);
    const ComplexMatrix rebuilt =
        s.eigenvectors *
        s.eigenvalues.cast<Complex>().asDiagonal() *
        s.eigenvectors.adjoint();
    REQUIRE(max_abs_diff(rebuilt, h) <= 1e-10);
    REQUIRE(max_abs_diff(s.eigenvectors.adjoint() * s.eigenvectors,
                         identity(5)) <= 1e-10);
    for (Eigen::Index k = 1; k < s.eigenvalues.size(); ++k) {
      REQUIRE(s.eigenvalues[k] >= s.eigenvalues[k - 1]);
    }
  }

  ComplexMatrix skew(2, 2);
  skew << 0.0, 1.0, -1.0, 0.0;
  REQUIRE_THROWS_AS(eig_hermitian(skew), NotHermitian);
}

TEST_CASE("exp_minus_i") {
  const ComplexMatrix h = build_h_qs();
  REQUIRE(max_abs_diff(exp_minus_i(h, 0.0), identity(8)) <= 1e-14);

  // At s = pi/2 the coupled pair swaps up to phase -i.
  const ComplexVector mapped = exp_minus_i(h, kPi / 2.0) * basis_vector(8, 3);
  REQUIRE(std::abs(mapped[5] - Complex{0.0, -1.0}) <= 1e-12);
  for (int k : {0, 1, 2, 3, 4, 6, 7}) REQUIRE(std::abs(mapped[k]) <= 1e-12);

  for (double t : {0.3, 1.1}) {
    REQUIRE(max_abs_diff(exp_minus_i(h, t), u_qs(t)) <= 1e-12);
  }

  REQUIRE_THROWS_AS(exp_minus_i(ComplexMatrix(kImag * identity(2)), 1.0),
                    NotHermitian);
}

TEST_CASE("exp_minus_i group property and unitarity") {
  std::mt19937_64 rng(14);
  std::uniform_real_distribution<double> scalar(-2.0, 2.0);
  for (int trial = 0; trial < 10; ++trial) {
    const ComplexMatrix h = testing::random_hermitian(rng, 4);
    const double s = scalar(rng);
    const double u = scalar(rng);
    REQUIRE(is_unitary(exp_minus_i(h, s), 1e-12));
    REQUIRE(max_abs_diff(exp_minus_i(h, s) * exp_minus_i(h, u),
                         exp_minus_i(h, s + u)) <= 1e-10);
  }
}

TEST_CASE("partial_trace basics") {
  // |01><01| keeping the first qubit.
  const ComplexVector v01 = basis_vector(4, 1);
  const ComplexMatrix rho01 = v01 * v01.adjoint();
  ComplexMatrix expect0 = ComplexMatrix::Zero(2, 2);
  expect0(0, 0) = 1.0;
  REQUIRE(max_abs_diff(partial_trace(rho01, {2, 2}, {0}), expect0) <= 1e-15);

  // Separable |A>|B>|1>: keeping {0,1} recovers the product of marginals.
  std::mt19937_64 rng(15);
  const QubitState a = testing::random_qubit(rng);
  const QubitState b = testing::random_qubit(rng);
  const SwitchRegister reg = prepare_register(a, b, ControlBit::kOne);
  const ComplexMatrix rho = reg.amplitudes * reg.amplitudes.adjoint();
  ComplexVector va(2), vb(2);
  va << a.alpha, a.beta;
  vb << b.alpha, b.beta;
  const ComplexMatrix expect_ab =
      kron(va * va.adjoint(), vb * vb.adjoint());
  REQUIRE(max_abs_diff(partial_trace(rho, {2, 2, 2}, {0, 1}), expect_ab) <=
          1e-12);

  // The control stays |1>, so the evolved reduced state is still pure.
  const SwitchRegister evolved = evolve(reg, kPi / 4.0);
  const ComplexMatrix rho_t =
      evolved.amplitudes * evolved.amplitudes.adjoint();
  const ComplexMatrix reduced = partial_trace(rho_t, {2, 2, 2}, {0, 1});
  REQUIRE(std::abs((reduced * reduced).trace().real() - 1.0) <= 1e-10);
}

TEST_CASE("partial_trace composition and trace preservation") {
  std::mt19937_64 rng(16);
  const ComplexMatrix rho = testing::random_density(rng, 8);
  const ComplexMatrix at_once = partial_trace(rho, {2, 2, 2}, {0});
  const ComplexMatrix two_steps = partial_trace(
      partial_trace(rho, {2, 2, 2}, {0, 1}), {2, 2}, {0});
  REQUIRE(max_abs_diff(at_once, two_steps) <= 1e-12);
  REQUIRE(std::abs(at_once.trace() - rho.trace()) <= 1e-12);
}

TEST_CASE("partial_trace dimension errors") {
  const ComplexMatrix rho = ComplexMatrix::Identity(4, 4) / 4.0;
  REQUIRE_THROWS_AS(partial_trace(rho, {2, 2, 2}, {0}), DimensionMismatch);
  REQUIRE_THROWS_AS(partial_trace(rho, {2, 2}, {2}), DimensionMismatch);
  REQUIRE_THROWS_AS(partial_trace(rho, {2, 2}, {0, 0}), DimensionMismatch);
  ComplexMatrix rect(2, 3);
  rect.setZero();
  REQUIRE_THROWS_AS(partial_trace(rect, {2, 3}, {0}), DimensionMismatch);
}

TEST_CASE("von_neumann_entropy") {
  ComplexMatrix pure = ComplexMatrix::Zero(2, 2);
  pure(0, 0) = 1.0;
  REQUIRE(von_neumann_entropy(pure) == 0.0);

  REQUIRE(std::abs(von_neumann_entropy(ComplexMatrix(0.5 * identity(2))) -
                   1.0) <= 1e-12);

  ComplexMatrix biased = ComplexMatrix::Zero(2, 2);
  biased(0, 0) = 0.9;
  biased(1, 1) = 0.1;
  REQUIRE(std::abs(von_neumann_entropy(biased) - 0.46899559358928117) <=
          1e-12);

  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 10; ++trial) {
    const ComplexVector psi = testing::random_pure_state(rng, 4);
    const ComplexMatrix rho = psi * psi.adjoint();
    REQUIRE(von_neumann_entropy(rho) <= 1e-9);
  }

  REQUIRE_THROWS_AS(von_neumann_entropy(identity(2)), NotDensity);  // trace 2
  ComplexMatrix not_psd(2, 2);
  not_psd << 1.5, 0.0, 0.0, -0.5;
  REQUIRE_THROWS_AS(von_neumann_entropy(not_psd), NotDensity);
}
