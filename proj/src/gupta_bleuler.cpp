#include "iqh/gupta_bleuler.hpp"

#include <algorithm>

#include "iqh/errors.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace iqh {

LightlikeMomentum::LightlikeMomentum(FourVector momentum) : k(std::move(momentum)) {
  if (minkowski(k, k) != 0) throw DomainError("momentum is not light-like");
  if (k == FourVector{0, 0, 0, 0}) throw DomainError("momentum must be nonzero");
}

std::vector<std::vector<int>> index_multisets(int rank) {
  std::vector<std::vector<int>> out;
  std::vector<int> current;
  auto recurse = [&](auto&& self, int from, int remaining) -> void {
    if (remaining == 0) {
      out.push_back(current);
      return;
    }
    for (int mu = from; mu < 4; ++mu) {
      current.push_back(mu);
      self(self, mu, remaining - 1);
      current.pop_back();
    }
  };
  recurse(recurse, 0, rank);
  return out;
}

SymmetricTensor::SymmetricTensor(int rank) : rank_(rank) {
  if (rank < 0) throw DataError("tensor rank must be non-negative");
  multisets_ = index_multisets(rank);
  components_.assign(multisets_.size(), Complex(0));
}

int SymmetricTensor::flat_index(std::vector<int> indices) const {
  if (static_cast<int>(indices.size()) != rank_) throw DataError("index tuple length mismatch");
  for (int mu : indices) {
    if (mu < 0 || mu > 3) throw DataError("tensor index out of range");
  }
  std::sort(indices.begin(), indices.end());
  auto it = std::lower_bound(multisets_.begin(), multisets_.end(), indices);
  return static_cast<int>(it - multisets_.begin());
}

const Complex& SymmetricTensor::at(std::vector<int> indices) const {
  return components_[flat_index(std::move(indices))];
}

void SymmetricTensor::set(std::vector<int> indices, Complex value) {
  components_[flat_index(std::move(indices))] = std::move(value);
}

Rational SymmetricTensor::multiplicity(int flat) const {
  const std::vector<int>& m = multisets_[flat];
  Rational result = 1;
  for (int i = 2; i <= rank_; ++i) result *= i;
  int counts[4] = {0, 0, 0, 0};
  for (int mu : m) ++counts[mu];
  for (int c : counts) {
    for (int i = 2; i <= c; ++i) result /= i;
  }
  return result;
}

bool SymmetricTensor::is_zero() const {
  return std::all_of(components_.begin(), components_.end(),
                     [](const Complex& c) { return c.is_zero(); });
}

SymmetricTensor& SymmetricTensor::operator*=(const Complex& c) {
  for (Complex& v : components_) v *= c;
  return *this;
}

SymmetricTensor& SymmetricTensor::operator+=(const SymmetricTensor& o) {
  if (o.rank_ != rank_) throw DataError("tensor rank mismatch");
  for (std::size_t i = 0; i < components_.size(); ++i) components_[i] += o.components_[i];
  return *this;
}

Ket tensor_ket(const SymmetricTensor& t, const ModeSetPtr& em_modes) {
  if (!em_modes || em_modes->kind() != FieldKind::EM4 || em_modes->mode_count() != 1) {
    throw ConfigError("tensor kets live on a single-momentum EM mode set");
  }
  Ket::Terms terms;
  for (int f = 0; f < t.dimension(); ++f) {
    Complex c = t.components()[f] * Complex(t.multiplicity(f));
    if (c.is_zero()) continue;
    Word w;
    for (int mu : t.multisets()[f]) w.push_back(create(em_modes->slot(0, mu)));
    terms.emplace(std::move(w), std::move(c));
  }
  return Ket::from_terms(std::move(terms), em_modes);
}

Ket constraint_apply(const Ket& state, const LightlikeMomentum& k, const CommutatorTable& table) {
  const ModeSetPtr& modes = state.modes();
  if (!modes || modes->kind() != FieldKind::EM4 || modes->mode_count() != 1) {
    throw ConfigError("constraint acts on the single-momentum EM field oscillator");
  }
  Phrase op(modes);
  for (int mu = 0; mu < 4; ++mu) {
    Complex coeff = Complex(Rational(metric_sign(mu)) * k.k[mu]);
    if (!coeff.is_zero()) op.add_term(Word{annihilate(modes->slot(0, mu))}, coeff);
  }
  return apply_to_vacuum(mul(op, state.phrase()), table);
}

namespace {

// Exact kernel of the contraction map: rows are the equations
// sum_mu g_mu k_mu T_{(mu, rest)} = 0 over rank-(n-1) multisets `rest`.
std::vector<std::vector<Complex>> contraction_kernel(int n, const FourVector& k) {
  std::vector<std::vector<int>> columns = index_multisets(n);
  int dim = static_cast<int>(columns.size());
  if (n == 0) return {std::vector<Complex>{Complex(1)}};

  SymmetricTensor probe(n);  // for flat index lookups
  std::vector<std::vector<int>> rests = index_multisets(n - 1);
  std::vector<std::vector<Rational>> rows;
  for (const std::vector<int>& rest : rests) {
    std::vector<Rational> row(dim, Rational(0));
    for (int mu = 0; mu < 4; ++mu) {
      if (k[mu] == 0) continue;
      std::vector<int> full = rest;
      full.push_back(mu);
      std::sort(full.begin(), full.end());
      auto it = std::lower_bound(probe.multisets().begin(), probe.multisets().end(), full);
      row[it - probe.multisets().begin()] += Rational(metric_sign(mu)) * k[mu];
    }
    rows.push_back(std::move(row));
  }

  // Row echelon over the rationals, columns in multiset order.
  int nrows = static_cast<int>(rows.size());
  std::vector<int> pivot_col;
  int r = 0;
  for (int c = 0; c < dim && r < nrows; ++c) {
    int sel = -1;
    for (int i = r; i < nrows; ++i) {
      if (rows[i][c] != 0) {
        sel = i;
        break;
      }
    }
    if (sel < 0) continue;
    std::swap(rows[r], rows[sel]);
    Rational inv = rows[r][c];
    for (int j = c; j < dim; ++j) rows[r][j] /= inv;
    for (int i = 0; i < nrows; ++i) {
      if (i == r || rows[i][c] == 0) continue;
      Rational f = rows[i][c];
      for (int j = c; j < dim; ++j) rows[i][j] -= f * rows[r][j];
    }
    pivot_col.push_back(c);
    ++r;
  }

  std::vector<bool> is_pivot(dim, false);
  for (int c : pivot_col) is_pivot[c] = true;

  std::vector<std::vector<Complex>> kernel;
  for (int c = 0; c < dim; ++c) {
    if (is_pivot[c]) continue;
    std::vector<Complex> v(dim, Complex(0));
    v[c] = Complex(1);
    for (int i = 0; i < r; ++i) {
      if (rows[i][c] != 0) v[pivot_col[i]] = Complex(-rows[i][c]);
    }
    kernel.push_back(std::move(v));
  }
  return kernel;
}

}  // namespace

std::vector<SymmetricTensor> constrained_basis(int n, const LightlikeMomentum& k) {
  if (n < 0) throw DataError("tensor rank must be non-negative");
  std::vector<SymmetricTensor> basis;
  for (std::vector<Complex>& v : contraction_kernel(n, k.k)) {
    SymmetricTensor t(n);
    for (int f = 0; f < t.dimension(); ++f) t.component(f) = std::move(v[f]);
    basis.push_back(std::move(t));
  }
  return basis;
}

Complex tensor_inner(const SymmetricTensor& t, const SymmetricTensor& u) {
  if (t.rank() != u.rank()) throw DataError("tensor rank mismatch");
  int n = t.rank();
  Complex sum(0);
  for (int f = 0; f < t.dimension(); ++f) {
    int sign = 1;
    for (int mu : t.multisets()[f]) sign *= metric_sign(mu);
    Complex term = t.components()[f].conj() * u.components()[f] * Complex(t.multiplicity(f));
    sum += (sign > 0) ? term : -term;
  }
  Rational factorial = 1;
  for (int i = 2; i <= n; ++i) factorial *= i;
  if (n % 2 == 1) factorial = -factorial;
  return Complex(factorial) * sum;
}

Rational norm_formula(const SymmetricTensor& t) {
  Complex v = tensor_inner(t, t);
  return v.re;  // imaginary part vanishes identically
}

std::vector<SymmetricTensor> gauge_basis(int n, const LightlikeMomentum& k) {
  if (n < 0) throw DataError("tensor rank must be non-negative");
  std::vector<SymmetricTensor> out;
  if (n == 0) return out;
  for (const SymmetricTensor& s : constrained_basis(n - 1, k)) {
    // sym(k (x) S)_m = sum over positions i of k_{m_i} S_{m \ i}, up to
    // overall scale: each (rest, mu) pair contributes once per occurrence
    // of mu in the target multiset.
    SymmetricTensor g(n);
    for (int f = 0; f < s.dimension(); ++f) {
      if (s.components()[f].is_zero()) continue;
      for (int mu = 0; mu < 4; ++mu) {
        if (k.k[mu] == 0) continue;
        std::vector<int> idx = s.multisets()[f];
        idx.push_back(mu);
        int occurrences = static_cast<int>(std::count(idx.begin(), idx.end(), mu));
        Complex value = g.at(idx) + Complex(Rational(occurrences) * k.k[mu]) * s.components()[f];
        g.set(std::move(idx), std::move(value));
      }
    }
    out.push_back(std::move(g));
  }
  return out;
}

PositivityReport positivity_report(int n, const LightlikeMomentum& k, Execution exec) {
  std::vector<SymmetricTensor> basis = constrained_basis(n, k);
  int dim = static_cast<int>(basis.size());

  HermitianMatrix gram(dim);
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < dim; ++i) {
    for (int j = i; j < dim; ++j) pairs.emplace_back(i, j);
  }
  if (exec == Execution::Parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 8)
    for (std::int64_t p = 0; p < static_cast<std::int64_t>(pairs.size()); ++p) {
      auto [i, j] = pairs[static_cast<std::size_t>(p)];
      gram.at(i, j) = tensor_inner(basis[i], basis[j]);
    }
#else
    exec = Execution::Serial;
#endif
  }
  if (exec == Execution::Serial) {
    for (auto [i, j] : pairs) gram.at(i, j) = tensor_inner(basis[i], basis[j]);
  }
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < i; ++j) gram.at(i, j) = gram.at(j, i).conj();
  }

  Inertia inertia = hermitian_inertia(gram);
  PositivityReport report;
  report.constrained_dim = dim;
  report.gauge_dim = static_cast<int>(gauge_basis(n, k).size());
  report.n_pos = inertia.pos;
  report.n_zero = inertia.zero;
  report.n_neg = inertia.neg;
  report.gram = std::move(gram);
  return report;
}

}  // namespace iqh
