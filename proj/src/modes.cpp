#include "iqh/modes.hpp"

#include "iqh/errors.hpp"

namespace iqh {

Rational minkowski(const FourVector& a, const FourVector& b) {
  return a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3];
}

ModeSet::ModeSet(FieldKind kind, Rational mass, std::vector<Mode> modes)
    : kind_(kind), mass_(std::move(mass)), modes_(std::move(modes)) {
  if (modes_.empty()) throw DataError("mode set must contain at least one mode");
  if (mass_ < 0) throw DataError("negative mass");
  Rational mass_sq = mass_ * mass_;
  for (const Mode& m : modes_) {
    if (m.k[0] <= 0) throw DataError("mode momentum must have k0 > 0");
    if (minkowski(m.k, m.k) != mass_sq) throw DataError("mode momentum off the mass shell");
    if (m.weight <= 0) throw DataError("mode weight must be positive");
  }
}

std::shared_ptr<const ModeSet> ModeSet::scalar(Rational mass, std::vector<Mode> modes) {
  return std::shared_ptr<const ModeSet>(
      new ModeSet(FieldKind::Scalar, std::move(mass), std::move(modes)));
}

std::shared_ptr<const ModeSet> ModeSet::em(std::vector<Mode> modes) {
  return std::shared_ptr<const ModeSet>(new ModeSet(FieldKind::EM4, Rational(0), std::move(modes)));
}

std::shared_ptr<const ModeSet> ModeSet::oscillator(const Rational& frequency) {
  if (frequency <= 0) throw DataError("oscillator frequency must be positive");
  return scalar(frequency, {Mode{{frequency, 0, 0, 0}, Rational(1)}});
}

std::shared_ptr<const ModeSet> ModeSet::em_single(const FourVector& k) {
  return em({Mode{k, Rational(1)}});
}

std::shared_ptr<const ModeSet> ModeSet::em_stencil() {
  std::vector<Mode> modes;
  for (int axis = 1; axis <= 3; ++axis) {
    for (int sign : {+1, -1}) {
      FourVector k{1, 0, 0, 0};
      k[axis] = sign;
      modes.push_back(Mode{k, Rational(1)});
    }
  }
  return em(std::move(modes));
}

std::shared_ptr<const ModeSet> ModeSet::scalar_demo() {
  std::vector<Mode> modes;
  for (int axis = 1; axis <= 3; ++axis) {
    for (int sign : {+1, -1}) {
      FourVector k{5, 0, 0, 0};
      k[axis] = 4 * sign;
      modes.push_back(Mode{k, Rational(1)});
    }
  }
  return scalar(Rational(3), std::move(modes));
}

Complex amplitude_bracket(const ModeSet& modes, int slot_a, int slot_b_conj) {
  if (modes.kind() == FieldKind::Scalar) {
    return slot_a == slot_b_conj ? Complex(Rational(0), Rational(-1)) : Complex(0);
  }
  if (modes.mode_of(slot_a) != modes.mode_of(slot_b_conj)) return Complex(0);
  int mu = modes.component_of(slot_a);
  int nu = modes.component_of(slot_b_conj);
  if (mu != nu) return Complex(0);
  return Complex(Rational(0), Rational(metric_sign(mu)));
}

std::vector<std::vector<Complex>> bracket_tensor(FieldKind kind) {
  if (kind == FieldKind::Scalar) return {{Complex(-1)}};
  std::vector<std::vector<Complex>> b(4, std::vector<Complex>(4, Complex(0)));
  for (int mu = 0; mu < 4; ++mu) b[mu][mu] = Complex(metric_sign(mu));
  return b;
}

int ModeSet::reversed_slot(int slot) const {
  int mode = mode_of(slot);
  FourVector r = modes_[mode].k;
  for (int i = 1; i <= 3; ++i) r[i] = -r[i];
  for (int m = 0; m < mode_count(); ++m) {
    if (modes_[m].k == r) return this->slot(m, component_of(slot));
  }
  return slot;
}

}  // namespace iqh
