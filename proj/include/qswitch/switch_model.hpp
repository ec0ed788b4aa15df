#pragma once

#include <cmath>
#include <complex>

#include "qswitch/errors.hpp"
#include "qswitch/linalg.hpp"

namespace qswitch {

// Single-qubit pure state alpha|0> + beta|1>.
struct QubitState {
  Complex alpha{1.0, 0.0};
  Complex beta{0.0, 0.0};

  bool is_normalized(double tol = kStructureTol) const {
    return std::abs(std::norm(alpha) + std::norm(beta) - 1.0) <= tol;
  }

  static QubitState zero() { return {1.0, 0.0}; }
  static QubitState one() { return {0.0, 1.0}; }
  static QubitState plus() {
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    return {inv_sqrt2, inv_sqrt2};
  }
  // One-parameter family sin(a)|0> + cos(a)|1>.
  static QubitState from_angle(double a) { return {std::sin(a), std::cos(a)}; }
};

enum class ControlBit { kZero = 0, kOne = 1 };

// Three-qubit register |b_A b_B b_C> with qubit A the most significant bit of
// the amplitude index and the control C the least significant.
struct SwitchRegister {
  Eigen::Matrix<Complex, 8, 1> amplitudes = Eigen::Matrix<Complex, 8, 1>::Zero();
  double time = 0.0;

  bool is_normalized(double tol = kStructureTol) const {
    return std::abs(amplitudes.squaredNorm() - 1.0) <= tol;
  }
};

// Coupling that exchanges |011> and |101>: the only nonzero entries sit at
// (3,5) and (5,3).
inline ComplexMatrix build_h_qs() {
  ComplexMatrix h = ComplexMatrix::Zero(8, 8);
  h(3, 5) = 1.0;
  h(5, 3) = 1.0;
  return h;
}

// exp(-i*t*H) for the exchange coupling, written in closed form: identity
// outside the {|011>, |101>} block, a cosine/sine mix inside it.
inline ComplexMatrix u_qs(double t) {
  ComplexMatrix u = identity(8);
  const Complex c{std::cos(t), 0.0};
  const Complex ms{0.0, -std::sin(t)};
  u(3, 3) = c;
  u(5, 5) = c;
  u(3, 5) = ms;
  u(5, 3) = ms;
  return u;
}

// Phase-adjusted variant whose t = pi/2 point is an exact |011> <-> |101>
// swap with no residual phase.
inline ComplexMatrix u_qs_hat(double t) {
  ComplexMatrix u = identity(8);
  const Complex ic{0.0, std::cos(t)};
  const Complex s{std::sin(t), 0.0};
  u(3, 3) = ic;
  u(5, 5) = ic;
  u(3, 5) = s;
  u(5, 3) = s;
  return u;
}

// Permutation that swaps basis states |011> and |101> outright.
inline ComplexMatrix switch_permutation() {
  ComplexMatrix p = identity(8);
  p(3, 3) = 0.0;
  p(5, 5) = 0.0;
  p(3, 5) = 1.0;
  p(5, 3) = 1.0;
  return p;
}

// Product state |a> x |b> x |control>.
inline SwitchRegister prepare_register(const QubitState& a, const QubitState& b,
                                       ControlBit control) {
  if (!a.is_normalized()) {
    throw NotNormalized("prepare_register: state a is not normalized");
  }
  if (!b.is_normalized()) {
    throw NotNormalized("prepare_register: state b is not normalized");
  }
  SwitchRegister reg;
  const int c = static_cast<int>(control);
  for (int bit_a = 0; bit_a < 2; ++bit_a) {
    for (int bit_b = 0; bit_b < 2; ++bit_b) {
      const Complex amp_a = bit_a ? a.beta : a.alpha;
      const Complex amp_b = bit_b ? b.beta : b.alpha;
      reg.amplitudes[4 * bit_a + 2 * bit_b + c] = amp_a * amp_b;
    }
  }
  return reg;
}

// Applies u_qs(t) and advances the register clock.
inline SwitchRegister evolve(const SwitchRegister& reg, double t) {
  if (!reg.is_normalized()) {
    throw NotNormalized("evolve: register is not normalized");
  }
  SwitchRegister out;
  out.amplitudes = u_qs(t) * reg.amplitudes;
  out.time = reg.time + t;
  return out;
}

// Reduced density matrix of qubits A and B (control traced out), ordered
// |b_A b_B> with A most significant.
inline ComplexMatrix rho_ab(const SwitchRegister& reg) {
  if (!reg.is_normalized()) {
    throw NotNormalized("rho_ab: register is not normalized");
  }
  const ComplexMatrix rho = reg.amplitudes * reg.amplitudes.adjoint();
  return partial_trace(rho, {2, 2, 2}, {0, 1});
}

}  // namespace qswitch
