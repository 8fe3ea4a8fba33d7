#pragma once

#include <array>
#include <memory>
#include <vector>

#include "iqh/scalar.hpp"

namespace iqh {

using FourVector = std::array<Rational, 4>;

/// Minkowski product with metric diag(+1,-1,-1,-1).
Rational minkowski(const FourVector& a, const FourVector& b);

/// Metric sign of a single index: +1 for 0, -1 for 1..3.
inline int metric_sign(int mu) { return mu == 0 ? 1 : -1; }

enum class FieldKind { Scalar, EM4 };

/// One discretized mass-shell mode: a momentum with k0 > 0 on the shell
/// k.k = m^2, plus a positive quadrature weight.
struct Mode {
  FourVector k;
  Rational weight;
};

/// Registry of the positive-frequency modes a truncated field lives on.
/// A slot is one amplitude component: mode index times internal index
/// (scalar fields have one component per mode, the EM field has four).
class ModeSet {
 public:
  static std::shared_ptr<const ModeSet> scalar(Rational mass, std::vector<Mode> modes);
  static std::shared_ptr<const ModeSet> em(std::vector<Mode> modes);

  /// Single abstract mode k = (freq, 0, 0, 0): the harmonic oscillator.
  static std::shared_ptr<const ModeSet> oscillator(const Rational& frequency);

  /// One light-like momentum carrying all four polarization components.
  static std::shared_ptr<const ModeSet> em_single(const FourVector& k);

  /// Demo set: six unit-weight light-like momenta on a cubic stencil.
  static std::shared_ptr<const ModeSet> em_stencil();

  /// Demo set: mass 3, six momenta (+-4 along each axis, k0 = 5).
  static std::shared_ptr<const ModeSet> scalar_demo();

  FieldKind kind() const { return kind_; }
  const Rational& mass() const { return mass_; }
  const std::vector<Mode>& modes() const { return modes_; }

  int components() const { return kind_ == FieldKind::EM4 ? 4 : 1; }
  int mode_count() const { return static_cast<int>(modes_.size()); }
  int slot_count() const { return mode_count() * components(); }

  int slot(int mode, int component) const { return mode * components() + component; }
  int mode_of(int slot) const { return slot / components(); }
  int component_of(int slot) const { return slot % components(); }

  /// Slot of the same component at the spatially reversed momentum
  /// (k0, -kvec); the slot itself when that momentum is not in the set.
  int reversed_slot(int slot) const;

 private:
  ModeSet(FieldKind kind, Rational mass, std::vector<Mode> modes);

  FieldKind kind_;
  Rational mass_;
  std::vector<Mode> modes_;
};

using ModeSetPtr = std::shared_ptr<const ModeSet>;

/// Classical Poisson bracket {a_i, a_j^*} of the unit-normalized mode
/// amplitudes: -i delta_ij for scalar modes, +i g_{mu nu} within one EM
/// momentum. Brackets of two unconjugated (or two conjugated) amplitudes
/// vanish.
Complex amplitude_bracket(const ModeSet& modes, int slot_a, int slot_b_conj);

/// The inducing bracket tensor B_ij of the field representation: constant
/// in k for both supported field kinds, -1 for the scalar and g_{mu nu}
/// for the EM field.
std::vector<std::vector<Complex>> bracket_tensor(FieldKind kind);

}  // namespace iqh
