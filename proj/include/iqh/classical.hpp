#pragma once

#include <utility>
#include <vector>

#include "iqh/inertia.hpp"
#include "iqh/modes.hpp"

namespace iqh {

/// Positive-frequency amplitudes per slot; the negative-frequency half is
/// implicit through the reality condition a(-k) = a*(k).
struct FieldState {
  ModeSetPtr modes;
  std::vector<Complex> amplitudes;

  FieldState() = default;
  FieldState(ModeSetPtr m, std::vector<Complex> a);

  const Complex& at(int slot) const { return amplitudes[slot]; }
  Complex& at(int slot) { return amplitudes[slot]; }
};

/// Fourier current J~_mu per EM mode.
struct CurrentModes {
  ModeSetPtr modes;
  std::vector<Complex> components;  // 4 per mode

  CurrentModes() = default;
  CurrentModes(ModeSetPtr m, std::vector<Complex> j);
};

/// Mode-space symplectic form: sum_m w i (a*c ad - a*d ac) for the scalar
/// field, -sum_m w i g_{nu rho} (a*c_nu ad_rho - a*d_nu ac_rho) for EM.
/// Antisymmetric, real, exact.
Rational symplectic_eval(const FieldState& c, const FieldState& d);

/// Finite linear combination of mode amplitudes a_s and a_s^*.
struct LinearObservable {
  struct Term {
    int slot{0};
    bool conjugated{false};
    Complex coeff;
  };

  ModeSetPtr modes;
  std::vector<Term> terms;

  static LinearObservable amplitude(ModeSetPtr modes, int slot, Complex coeff = Complex(1));
  static LinearObservable conjugate_amplitude(ModeSetPtr modes, int slot,
                                              Complex coeff = Complex(1));

  LinearObservable& operator+=(const LinearObservable& o);
  friend LinearObservable operator+(LinearObservable a, const LinearObservable& b) {
    return a += b;
  }
};

/// Bracket of two linear observables; bilinear and antisymmetric, built
/// from the per-mode brackets {a_s, a_t^*}.
Complex poisson_bracket(const LinearObservable& f, const LinearObservable& g);

/// (+)-frequency part (plain amplitudes) and (-)-frequency part
/// (conjugated amplitudes); the two sum back to the input.
std::pair<LinearObservable, LinearObservable> frequency_split(const LinearObservable& obs);

/// Hamiltonian flow velocity of time evolution: da_s = -i k0 a_s.
FieldState time_shift_flow(const FieldState& c);

/// Generator of a linear symmetry flow: G = (1/2) omega(c, dc).
Rational generator(const FieldState& c, const FieldState& flow_velocity);

/// P_nu = sum w k_nu a* a (scalar), -sum w k_nu a_rho* a_rho (EM, signed
/// contraction over rho).
std::array<Rational, 4> energy_momentum(const FieldState& c);

struct RadiationResult {
  FieldState field;
  bool lorentz_ok{false};
};

/// Radiated field of a switched current: a_mu = i J~_mu per positive
/// mode. lorentz_ok reports exact per-mode current conservation k.J = 0;
/// the field is returned either way.
RadiationResult radiated_field(const CurrentModes& j);

/// Canonical transverse representative of a Lorentz-condition state:
/// removes the k component in the light-cone frame, exactly. The gauge
/// class is unchanged.
FieldState gauge_project(const FieldState& c);

/// Positive-definite sesquilinear form sum_m w M_{nu rho} a*c_nu ad_rho
/// (plain sums over nu, rho). M must be Hermitian positive-definite.
Complex hilbert_inner(const FieldState& c, const FieldState& d, const HermitianMatrix& m);

/// Largest epsilon with eps (z,z)_2 <= (z,z)_1 and eps (z,z)_1 <= (z,z)_2
/// for all states, from the extreme generalized eigenvalues of (M1, M2).
double inner_equivalence(const HermitianMatrix& m1, const HermitianMatrix& m2);

/// L = (a/2) phidot^2 + b phi phidot - (c/2) phi^2.
struct QuadraticLagrangian1D {
  Rational a;
  Rational b;
  Rational c;
};

struct State1D {
  Rational phi;
  Rational phi_dot;
};

/// omega(c, d) through the canonical momentum p = a phidot + b phi; the
/// b dependence cancels identically.
Rational lagrangian_1d_symplectic(const QuadraticLagrangian1D& lagrangian, const State1D& c,
                                  const State1D& d);

struct ElectrostaticSplit {
  Rational full;
  Rational charges;
  Rational field;
};

/// E_full = (1/2) sum q phi, E_charges = sum q phi, E_field = -(1/2) sum;
/// charges + field = full exactly.
ElectrostaticSplit electrostatic_split(const std::vector<Rational>& charges,
                                       const std::vector<Rational>& potentials);

}  // namespace iqh
