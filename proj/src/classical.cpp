#include "iqh/classical.hpp"

#include <Eigen/Dense>

#include "iqh/errors.hpp"

namespace iqh {

namespace {

void require_same_modes(const ModeSetPtr& a, const ModeSetPtr& b) {
  if (!a || !b || a != b) throw ConfigError("states built on different mode sets");
}

void require_em(const ModeSetPtr& m, const char* what) {
  if (!m || m->kind() != FieldKind::EM4) {
    throw ConfigError(std::string(what) + " needs an EM mode set");
  }
}

// k . a with complex amplitude components, Minkowski signs.
Complex momentum_contraction(const FourVector& k, const Complex* a) {
  Complex sum(0);
  for (int mu = 0; mu < 4; ++mu) {
    Complex term = Complex(k[mu]) * a[mu];
    sum += (metric_sign(mu) > 0) ? term : -term;
  }
  return sum;
}

void require_hermitian_pd(const HermitianMatrix& m, const char* what) {
  if (m.n != 4) throw DomainError(std::string(what) + " needs a 4x4 matrix");
  if (!m.is_hermitian()) throw DomainError(std::string(what) + " matrix is not Hermitian");
  Inertia inertia = hermitian_inertia(m);
  if (inertia.pos != 4) {
    throw DomainError(std::string(what) + " matrix is not positive-definite");
  }
}

}  // namespace

FieldState::FieldState(ModeSetPtr m, std::vector<Complex> a)
    : modes(std::move(m)), amplitudes(std::move(a)) {
  if (!modes) throw ConfigError("field state needs a mode set");
  if (static_cast<int>(amplitudes.size()) != modes->slot_count()) {
    throw DataError("amplitude count does not match the mode set");
  }
}

CurrentModes::CurrentModes(ModeSetPtr m, std::vector<Complex> j)
    : modes(std::move(m)), components(std::move(j)) {
  require_em(modes, "current");
  if (static_cast<int>(components.size()) != modes->slot_count()) {
    throw DataError("current component count does not match the mode set");
  }
}

Rational symplectic_eval(const FieldState& c, const FieldState& d) {
  require_same_modes(c.modes, d.modes);
  const ModeSet& ms = *c.modes;
  Complex sum(0);
  for (int m = 0; m < ms.mode_count(); ++m) {
    Complex per_mode(0);
    for (int comp = 0; comp < ms.components(); ++comp) {
      int s = ms.slot(m, comp);
      Complex wedge = c.at(s).conj() * d.at(s) - d.at(s).conj() * c.at(s);
      if (ms.kind() == FieldKind::Scalar) {
        per_mode += wedge;
      } else {
        // -g_{nu nu} from the EM form's overall sign and the signed
        // contraction combined.
        per_mode += (metric_sign(comp) > 0) ? -wedge : wedge;
      }
    }
    sum += Complex(ms.modes()[m].weight) * per_mode;
  }
  sum *= Complex::i();
  if (sum.im != 0) throw DataError("symplectic form produced a non-real value");
  return sum.re;
}

LinearObservable LinearObservable::amplitude(ModeSetPtr modes, int slot, Complex coeff) {
  LinearObservable o;
  o.modes = std::move(modes);
  o.terms.push_back(Term{slot, false, std::move(coeff)});
  return o;
}

LinearObservable LinearObservable::conjugate_amplitude(ModeSetPtr modes, int slot, Complex coeff) {
  LinearObservable o;
  o.modes = std::move(modes);
  o.terms.push_back(Term{slot, true, std::move(coeff)});
  return o;
}

LinearObservable& LinearObservable::operator+=(const LinearObservable& o) {
  if (!modes) modes = o.modes;
  if (o.modes && modes != o.modes) throw ConfigError("observables on different mode sets");
  terms.insert(terms.end(), o.terms.begin(), o.terms.end());
  return *this;
}

Complex poisson_bracket(const LinearObservable& f, const LinearObservable& g) {
  require_same_modes(f.modes, g.modes);
  const ModeSet& ms = *f.modes;
  Complex sum(0);
  for (const auto& tf : f.terms) {
    for (const auto& tg : g.terms) {
      if (tf.conjugated == tg.conjugated) continue;  // same-frequency brackets vanish
      if (!tf.conjugated) {
        sum += tf.coeff * tg.coeff * amplitude_bracket(ms, tf.slot, tg.slot);
      } else {
        sum -= tf.coeff * tg.coeff * amplitude_bracket(ms, tg.slot, tf.slot);
      }
    }
  }
  return sum;
}

std::pair<LinearObservable, LinearObservable> frequency_split(const LinearObservable& obs) {
  LinearObservable plus, minus;
  plus.modes = obs.modes;
  minus.modes = obs.modes;
  for (const auto& t : obs.terms) {
    (t.conjugated ? minus : plus).terms.push_back(t);
  }
  return {std::move(plus), std::move(minus)};
}

FieldState time_shift_flow(const FieldState& c) {
  FieldState flow = c;
  const ModeSet& ms = *c.modes;
  for (int s = 0; s < ms.slot_count(); ++s) {
    const Rational& k0 = ms.modes()[ms.mode_of(s)].k[0];
    flow.at(s) = Complex(Rational(0), -k0) * c.at(s);
  }
  return flow;
}

Rational generator(const FieldState& c, const FieldState& flow_velocity) {
  return symplectic_eval(c, flow_velocity) / 2;
}

std::array<Rational, 4> energy_momentum(const FieldState& c) {
  const ModeSet& ms = *c.modes;
  std::array<Rational, 4> p{0, 0, 0, 0};
  for (int m = 0; m < ms.mode_count(); ++m) {
    Rational density(0);
    for (int comp = 0; comp < ms.components(); ++comp) {
      Rational abs_sq = c.at(ms.slot(m, comp)).norm_sq();
      if (ms.kind() == FieldKind::Scalar) {
        density += abs_sq;
      } else {
        // -(|a_0|^2 - |a_1|^2 - |a_2|^2 - |a_3|^2)
        density += (metric_sign(comp) > 0) ? -abs_sq : abs_sq;
      }
    }
    density *= ms.modes()[m].weight;
    for (int nu = 0; nu < 4; ++nu) p[nu] += ms.modes()[m].k[nu] * density;
  }
  return p;
}

RadiationResult radiated_field(const CurrentModes& j) {
  require_em(j.modes, "radiated field");
  const ModeSet& ms = *j.modes;
  RadiationResult out;
  out.lorentz_ok = true;
  std::vector<Complex> amps(ms.slot_count());
  for (int m = 0; m < ms.mode_count(); ++m) {
    if (!momentum_contraction(ms.modes()[m].k, &j.components[ms.slot(m, 0)]).is_zero()) {
      out.lorentz_ok = false;
    }
    for (int mu = 0; mu < 4; ++mu) {
      amps[ms.slot(m, mu)] = Complex::i() * j.components[ms.slot(m, mu)];
    }
  }
  out.field = FieldState(j.modes, std::move(amps));
  return out;
}

FieldState gauge_project(const FieldState& c) {
  require_em(c.modes, "gauge projection");
  const ModeSet& ms = *c.modes;
  FieldState out = c;
  for (int m = 0; m < ms.mode_count(); ++m) {
    const FourVector& k = ms.modes()[m].k;
    if (!momentum_contraction(k, &c.amplitudes[ms.slot(m, 0)]).is_zero()) {
      throw PreconditionError("state violates the Lorentz condition k.a = 0");
    }
    // Light-cone frame without transverse vectors: nminus = (k0,-kvec)/k0^2
    // has k.nminus = 2, so the k coefficient is (nminus.a)/2.
    FourVector nminus{k[0], -k[1], -k[2], -k[3]};
    Rational k0_sq = k[0] * k[0];
    for (Rational& x : nminus) x /= k0_sq;
    Complex lambda = momentum_contraction(nminus, &c.amplitudes[ms.slot(m, 0)]) / Complex(2);
    for (int mu = 0; mu < 4; ++mu) {
      out.at(ms.slot(m, mu)) -= lambda * Complex(k[mu]);
    }
  }
  return out;
}

Complex hilbert_inner(const FieldState& c, const FieldState& d, const HermitianMatrix& m) {
  require_same_modes(c.modes, d.modes);
  require_em(c.modes, "Hilbert-type inner product");
  require_hermitian_pd(m, "Hilbert-type inner product");
  const ModeSet& ms = *c.modes;
  Complex sum(0);
  for (int mode = 0; mode < ms.mode_count(); ++mode) {
    Complex per_mode(0);
    for (int nu = 0; nu < 4; ++nu) {
      for (int rho = 0; rho < 4; ++rho) {
        per_mode += m.at(nu, rho) * c.at(ms.slot(mode, nu)).conj() * d.at(ms.slot(mode, rho));
      }
    }
    sum += Complex(ms.modes()[mode].weight) * per_mode;
  }
  return sum;
}

double inner_equivalence(const HermitianMatrix& m1, const HermitianMatrix& m2) {
  require_hermitian_pd(m1, "inner product equivalence");
  require_hermitian_pd(m2, "inner product equivalence");
  Eigen::Matrix4cd a, b;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      a(i, j) = std::complex<double>(to_double(m1.at(i, j).re), to_double(m1.at(i, j).im));
      b(i, j) = std::complex<double>(to_double(m2.at(i, j).re), to_double(m2.at(i, j).im));
    }
  }
  // Weights multiply both forms identically per mode, so the state-wise
  // ratio bounds are the generalized eigenvalue extremes of one block.
  Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::Matrix4cd> solver(a, b);
  double lo = solver.eigenvalues().minCoeff();
  double hi = solver.eigenvalues().maxCoeff();
  return std::min(lo, 1.0 / hi);
}

Rational lagrangian_1d_symplectic(const QuadraticLagrangian1D& lagrangian, const State1D& c,
                                  const State1D& d) {
  if (lagrangian.a == 0) throw DataError("kinetic coefficient a must be nonzero");
  Rational p_c = lagrangian.a * c.phi_dot + lagrangian.b * c.phi;
  Rational p_d = lagrangian.a * d.phi_dot + lagrangian.b * d.phi;
  return p_c * d.phi - p_d * c.phi;
}

ElectrostaticSplit electrostatic_split(const std::vector<Rational>& charges,
                                       const std::vector<Rational>& potentials) {
  if (charges.size() != potentials.size()) {
    throw DataError("charge and potential lists differ in length");
  }
  Rational sum(0);
  for (std::size_t i = 0; i < charges.size(); ++i) sum += charges[i] * potentials[i];
  return ElectrostaticSplit{sum / 2, sum, -sum / 2};
}

}  // namespace iqh
