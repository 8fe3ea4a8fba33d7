#pragma once

#include <vector>

#include "iqh/fock.hpp"

namespace iqh {

/// Nonzero momentum on the light cone, k.k = 0 exactly.
struct LightlikeMomentum {
  FourVector k;

  explicit LightlikeMomentum(FourVector momentum);
};

/// Fully symmetric rank-n tensor over 4 indices with exact complex
/// entries, stored by nondecreasing index multisets.
class SymmetricTensor {
 public:
  explicit SymmetricTensor(int rank);

  int rank() const { return rank_; }

  /// Number of independent components: C(rank + 3, 3).
  int dimension() const { return static_cast<int>(components_.size()); }

  /// Component for an arbitrary index tuple (sorted internally).
  const Complex& at(std::vector<int> indices) const;
  void set(std::vector<int> indices, Complex value);

  /// Storage indexed by the lexicographic multiset enumeration.
  const std::vector<Complex>& components() const { return components_; }
  Complex& component(int flat) { return components_[flat]; }
  const std::vector<std::vector<int>>& multisets() const { return multisets_; }

  /// Orderings of the multiset at a flat index: rank! / prod(counts!).
  Rational multiplicity(int flat) const;

  bool is_zero() const;

  SymmetricTensor& operator*=(const Complex& c);
  SymmetricTensor& operator+=(const SymmetricTensor& o);

 private:
  int flat_index(std::vector<int> indices) const;

  int rank_;
  std::vector<std::vector<int>> multisets_;
  std::vector<Complex> components_;
};

/// Nondecreasing tuples of {0,1,2,3} of the given size, lexicographic.
std::vector<std::vector<int>> index_multisets(int rank);

/// Ket T_{mu nu ... rho} a_mu^* a_nu^* ... a_rho^* |0> on the given
/// single-momentum EM mode set.
Ket tensor_ket(const SymmetricTensor& t, const ModeSetPtr& em_modes);

/// Image of the constraint operator k_mu a_mu (Minkowski contraction)
/// acting on the state; lowers the grade by one.
Ket constraint_apply(const Ket& state, const LightlikeMomentum& k, const CommutatorTable& table);

/// Basis of symmetric rank-n tensors with k contracted on any index equal
/// to zero; dimension C(n+2, 2).
std::vector<SymmetricTensor> constrained_basis(int n, const LightlikeMomentum& k);

/// Closed-form squared norm (-1)^n n! T* . T with all contractions
/// Minkowski.
Rational norm_formula(const SymmetricTensor& t);

/// Polarized form of norm_formula: (-1)^n n! conj(T) . U.
Complex tensor_inner(const SymmetricTensor& t, const SymmetricTensor& u);

struct PositivityReport {
  int constrained_dim{0};
  int gauge_dim{0};
  int n_pos{0};
  int n_zero{0};
  int n_neg{0};
  HermitianMatrix gram;
};

/// Inertia of the scalar product restricted to the constrained basis.
PositivityReport positivity_report(int n, const LightlikeMomentum& k,
                                   Execution exec = Execution::Serial);

/// Null directions: symmetrizations of k with constrained rank-(n-1)
/// tensors; empty for n = 0.
std::vector<SymmetricTensor> gauge_basis(int n, const LightlikeMomentum& k);

}  // namespace iqh
