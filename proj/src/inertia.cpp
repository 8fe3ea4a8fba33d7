#include "iqh/inertia.hpp"

#include "iqh/errors.hpp"

namespace iqh {

bool HermitianMatrix::is_hermitian() const {
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      if (at(i, j) != at(j, i).conj()) return false;
    }
  }
  return true;
}

Inertia hermitian_inertia(HermitianMatrix m) {
  int n = m.n;
  std::vector<int> active;
  active.reserve(n);
  for (int i = 0; i < n; ++i) active.push_back(i);

  Inertia out;
  while (!active.empty()) {
    // Diagonal pivot if one exists.
    int pivot = -1;
    for (int i : active) {
      if (!m.at(i, i).is_zero()) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) {
      // All diagonal entries vanish; bring a nonzero off-diagonal entry to
      // the diagonal by the congruence e_i -> e_i + e_j (or e_i + i e_j).
      int oi = -1, oj = -1;
      for (std::size_t a = 0; a < active.size() && oi < 0; ++a) {
        for (std::size_t b = a + 1; b < active.size(); ++b) {
          if (!m.at(active[a], active[b]).is_zero()) {
            oi = active[a];
            oj = active[b];
            break;
          }
        }
      }
      if (oi < 0) {
        out.zero += static_cast<int>(active.size());
        break;
      }
      Complex factor = (m.at(oi, oj).re != 0) ? Complex(1) : Complex::i();
      for (int k : active) m.at(oi, k) += factor.conj() * m.at(oj, k);
      for (int k : active) m.at(k, oi) += factor * m.at(k, oj);
      continue;
    }

    const Complex d = m.at(pivot, pivot);
    if (d.im != 0) throw DataError("inertia input is not Hermitian");
    if (d.re > 0) {
      ++out.pos;
    } else {
      ++out.neg;
    }

    std::vector<int> rest;
    rest.reserve(active.size() - 1);
    for (int i : active) {
      if (i != pivot) rest.push_back(i);
    }
    for (int i : rest) {
      Complex f = m.at(i, pivot) / d;
      if (f.is_zero()) continue;
      for (int j : rest) m.at(i, j) -= f * m.at(pivot, j);
      m.at(i, pivot) = Complex(0);
      m.at(pivot, i) = Complex(0);
    }
    active = std::move(rest);
  }
  return out;
}

}  // namespace iqh
