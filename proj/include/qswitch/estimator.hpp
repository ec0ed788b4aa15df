#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <stdexcept>
#include <vector>

#include "qswitch/errors.hpp"
#include "qswitch/linalg.hpp"
#include "qswitch/noise_model.hpp"
#include "qswitch/switch_model.hpp"

namespace qswitch {

// Result of one swap-test run. shots = 0 marks an exact evaluation.
struct OverlapEstimate {
  double p0 = 0.0;
  double overlap = 0.0;
  long long shots = 0;
  double std_error = 0.0;
};

// Moments of the evolution at which to estimate the marginal overlap.
struct EstimationSchedule {
  std::vector<double> times{0.0, std::numbers::pi / 6.0,
                            std::numbers::pi / 3.0, std::numbers::pi / 2.0};
  long long shots = 0;
  std::uint64_t seed = 0;
};

namespace detail {

// Uniform double in [0, 1) built from the top 53 bits of the generator
// output. Used instead of a <random> distribution because distribution
// algorithms are not pinned by the standard; this keeps seeded runs
// bit-reproducible across standard libraries.
inline double uniform_unit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Full swap-test circuit on the density-operator level: ancilla Hadamard,
// controlled-SWAP of the two registers, second Hadamard, then the ancilla
// zero-outcome probability.
inline double swap_test_circuit_p0(const ComplexMatrix& rho_a,
                                   const ComplexMatrix& rho_b) {
  const Eigen::Index d = rho_a.rows();
  const Eigen::Index dd = d * d;

  ComplexMatrix hadamard(2, 2);
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  hadamard << inv_sqrt2, inv_sqrt2, inv_sqrt2, -inv_sqrt2;

  ComplexMatrix swap = ComplexMatrix::Zero(dd, dd);
  for (Eigen::Index i = 0; i < d; ++i) {
    for (Eigen::Index j = 0; j < d; ++j) {
      swap(i * d + j, j * d + i) = 1.0;
    }
  }

  ComplexMatrix ancilla0 = ComplexMatrix::Zero(2, 2);
  ancilla0(0, 0) = 1.0;
  ComplexMatrix ancilla1 = ComplexMatrix::Zero(2, 2);
  ancilla1(1, 1) = 1.0;

  const ComplexMatrix h_full = kron(hadamard, identity(dd));
  const ComplexMatrix cswap =
      kron(ancilla0, identity(dd)) + kron(ancilla1, swap);
  const ComplexMatrix u = h_full * cswap * h_full;

  const ComplexMatrix initial = kron(ancilla0, kron(rho_a, rho_b));
  const ComplexMatrix final_state = u * initial * u.adjoint();

  Complex p0{0.0, 0.0};
  for (Eigen::Index k = 0; k < dd; ++k) p0 += final_state(k, k);
  return p0.real();
}

}  // namespace detail

// Exact swap test: p0 = (1 + Tr[rho_a rho_b]) / 2, computed by simulating the
// circuit and cross-checked against the trace formula.
inline OverlapEstimate swap_test_exact(const ComplexMatrix& rho_a,
                                       const ComplexMatrix& rho_b) {
  if (rho_a.rows() != rho_b.rows() || rho_a.cols() != rho_b.cols()) {
    throw DimensionMismatch("swap_test_exact: operands differ in dimension");
  }
  if (!is_density(rho_a) || !is_density(rho_b)) {
    throw NotDensity("swap_test_exact: input is not a density matrix");
  }

  const double p0_circuit = detail::swap_test_circuit_p0(rho_a, rho_b);
  const double trace = (rho_a * rho_b).trace().real();
  const double p0_trace = (1.0 + trace) / 2.0;
  if (std::abs(p0_circuit - p0_trace) > 1e-12) {
    throw Error("swap_test_exact: circuit and trace paths disagree");
  }

  OverlapEstimate est;
  est.p0 = std::clamp(p0_circuit, 0.0, 1.0);
  est.overlap = 2.0 * est.p0 - 1.0;
  est.shots = 0;
  est.std_error = 0.0;
  return est;
}

// Finite-shot swap test: Bernoulli sampling against the exact p0. For a fixed
// seed the result is bit-reproducible (see detail::uniform_unit).
inline OverlapEstimate swap_test_sampled(const ComplexMatrix& rho_a,
                                         const ComplexMatrix& rho_b,
                                         long long shots, std::uint64_t seed) {
  if (shots < 1) {
    throw std::invalid_argument("swap_test_sampled: shots must be >= 1");
  }
  const OverlapEstimate exact = swap_test_exact(rho_a, rho_b);

  std::mt19937_64 rng(seed);
  long long zeros = 0;
  for (long long k = 0; k < shots; ++k) {
    if (detail::uniform_unit(rng) < exact.p0) ++zeros;
  }

  OverlapEstimate est;
  est.p0 = static_cast<double>(zeros) / static_cast<double>(shots);
  est.overlap = 2.0 * est.p0 - 1.0;
  est.shots = shots;
  est.std_error =
      2.0 * std::sqrt(est.p0 * (1.0 - est.p0) / static_cast<double>(shots));
  return est;
}

// Overlap of the single-qubit marginals of the evolved register at time t.
// shots = 0 runs the exact test; otherwise `shots` samples with `seed`.
inline OverlapEstimate estimate_at(const QubitState& a, const QubitState& b,
                                   double t, double dz, long long shots,
                                   std::uint64_t seed) {
  const SwitchRegister reg = prepare_register(a, b, ControlBit::kOne);
  const SwitchRegister evolved =
      dz != 0.0 ? evolve_dm(reg, t, dz) : evolve(reg, t);
  const ComplexMatrix rho =
      evolved.amplitudes * evolved.amplitudes.adjoint();
  const ComplexMatrix rho_a = partial_trace(rho, {2, 2, 2}, {0});
  const ComplexMatrix rho_b = partial_trace(rho, {2, 2, 2}, {1});
  return shots == 0 ? swap_test_exact(rho_a, rho_b)
                    : swap_test_sampled(rho_a, rho_b, shots, seed);
}

// One estimate per schedule time. Sampled runs draw from an independent
// generator per time, seeded with schedule.seed + time index.
inline std::vector<OverlapEstimate> estimate_over_schedule(
    const QubitState& a, const QubitState& b,
    const EstimationSchedule& schedule, double dz = 0.0) {
  if (schedule.times.empty()) {
    throw std::invalid_argument("estimate_over_schedule: empty schedule");
  }
  for (double t : schedule.times) {
    if (!std::isfinite(t)) {
      throw std::invalid_argument("estimate_over_schedule: nonfinite time");
    }
  }
  std::vector<OverlapEstimate> estimates;
  estimates.reserve(schedule.times.size());
  for (std::size_t i = 0; i < schedule.times.size(); ++i) {
    estimates.push_back(estimate_at(a, b, schedule.times[i], dz,
                                    schedule.shots,
                                    schedule.seed + static_cast<std::uint64_t>(i)));
  }
  return estimates;
}

}  // namespace qswitch
