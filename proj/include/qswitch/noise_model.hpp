#pragma once

#include <cmath>
#include <complex>

#include "qswitch/errors.hpp"
#include "qswitch/linalg.hpp"
#include "qswitch/switch_model.hpp"

namespace qswitch {

// Closed-form coefficients of the noisy evolution restricted to the
// {|011>, |101>} block. omega = sqrt(t^2 + 4 dz^2); xi = cos(omega);
// eta = -(2 dz + i t) sinc(omega); zeta = (2 dz - i t) sinc(omega).
struct NoiseParams {
  double dz = 0.0;
  double t = 0.0;
  double omega = 0.0;
  Complex xi{1.0, 0.0};
  Complex eta{0.0, 0.0};
  Complex zeta{0.0, 0.0};
};

// sin(x)/x with a short series for small x to avoid 0/0.
inline double sinc(double x) {
  if (std::abs(x) < 1e-6) return 1.0 - x * x / 6.0;
  return std::sin(x) / x;
}

inline NoiseParams dm_coefficients(double t, double dz) {
  NoiseParams p;
  p.dz = dz;
  p.t = t;
  p.omega = std::hypot(t, 2.0 * dz);
  if (dz == 0.0) {
    // Noiseless reduction, evaluated directly so that sin(t) is not routed
    // through t * sinc(|t|): the zero-noise coefficients then match the
    // noiseless evolution exactly, not just to within an ulp.
    p.xi = std::cos(t);
    p.eta = Complex{0.0, -std::sin(t)};
    p.zeta = Complex{0.0, -std::sin(t)};
    return p;
  }
  const double s = sinc(p.omega);
  p.xi = std::cos(p.omega);
  p.eta = -Complex{2.0 * dz, t} * s;
  p.zeta = Complex{2.0 * dz, -t} * s;
  return p;
}

// Antisymmetric exchange term dz*(sx (x) sy - sy (x) sx) acting on qubits A,B
// and leaving the control untouched. Couples |01>_AB and |10>_AB with
// entries of magnitude 2*dz.
inline ComplexMatrix build_h_dm(double dz) {
  const ComplexMatrix exchange =
      kron(pauli_x(), pauli_y()) - kron(pauli_y(), pauli_x());
  return dz * kron(exchange, identity(2));
}

// exp(-i*(t*H_qs + H_DM(dz))), assembled from the spectrum of the summed
// generator. This is the oracle route; evolve_dm below is the closed form.
inline ComplexMatrix u_qs_dm(double t, double dz) {
  return exp_minus_i(t * build_h_qs() + build_h_dm(dz), 1.0);
}

// Closed-form action of u_qs_dm on a register. The odd (C=1) sector mixes
// |011> and |101> through xi/eta/zeta; the even (C=0) sector, zero for
// registers prepared with C=1, picks up the corresponding plane rotation of
// |010> and |100> so the closed form tracks the full unitary for any input.
inline SwitchRegister evolve_dm(const SwitchRegister& reg, double t,
                                double dz) {
  if (!reg.is_normalized()) {
    throw NotNormalized("evolve_dm: register is not normalized");
  }
  const NoiseParams p = dm_coefficients(t, dz);
  SwitchRegister out = reg;
  const Complex a3 = reg.amplitudes[3];
  const Complex a5 = reg.amplitudes[5];
  out.amplitudes[3] = p.xi * a3 + p.zeta * a5;
  out.amplitudes[5] = p.eta * a3 + p.xi * a5;
  const Complex a2 = reg.amplitudes[2];
  const Complex a4 = reg.amplitudes[4];
  const double c = std::cos(2.0 * dz);
  const double s = std::sin(2.0 * dz);
  out.amplitudes[2] = c * a2 + s * a4;
  out.amplitudes[4] = -s * a2 + c * a4;
  out.time = reg.time + t;
  return out;
}

}  // namespace qswitch
