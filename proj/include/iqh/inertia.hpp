#pragma once

#include <vector>

#include "iqh/scalar.hpp"

namespace iqh {

/// Dense complex matrix with exact entries; Hermitian where stated.
struct HermitianMatrix {
  int n{0};
  std::vector<Complex> a;

  HermitianMatrix() = default;
  explicit HermitianMatrix(int size) : n(size), a(static_cast<std::size_t>(size) * size) {}

  Complex& at(int i, int j) { return a[static_cast<std::size_t>(i) * n + j]; }
  const Complex& at(int i, int j) const { return a[static_cast<std::size_t>(i) * n + j]; }

  bool is_hermitian() const;

  friend bool operator==(const HermitianMatrix&, const HermitianMatrix&) = default;
};

struct Inertia {
  int pos{0};
  int neg{0};
  int zero{0};

  friend bool operator==(const Inertia&, const Inertia&) = default;
};

/// Exact inertia by Hermitian congruence elimination with pivoting; zero
/// directions come out exactly zero.
Inertia hermitian_inertia(HermitianMatrix m);

}  // namespace iqh
