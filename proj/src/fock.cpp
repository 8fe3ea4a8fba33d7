#include "iqh/fock.hpp"

#include <algorithm>

#include "iqh/errors.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace iqh {

namespace {

SlotInvolution reversal_map(const ModeSet& modes) {
  std::vector<std::int32_t> image(modes.slot_count());
  for (int s = 0; s < modes.slot_count(); ++s) image[s] = modes.reversed_slot(s);
  return SlotInvolution(std::move(image));
}

}  // namespace

Quantization build_quantization(const QuantizationChoice& choice) {
  if (!choice.modes) throw ConfigError("quantization needs a mode set");
  const ModeSet& modes = *choice.modes;
  if (choice.system == System::EM4 && modes.kind() != FieldKind::EM4) {
    throw ConfigError("EM4 quantization needs an EM mode set");
  }
  if (choice.system != System::EM4 && modes.kind() != FieldKind::Scalar) {
    throw ConfigError("scalar quantization needs a scalar mode set");
  }

  int n = modes.slot_count();
  CommutatorTable table(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      // Defining relation {a,b}^ = -i [a^,b^]:
      //   variant 1: [a_i^, a_j*^] = i {a_i, a_j^*}
      //   variant 2: the conjugate letters destroy, [a_i*^, a_j^] = i {a_i^*, a_j}
      //              with {a_i^*, a_j} = -{a_j, a_i^*}
      Complex bracket = (choice.variant == Variant::PositiveFrequencyDestroys)
                            ? amplitude_bracket(modes, i, j)
                            : -amplitude_bracket(modes, j, i);
      table.set(i, j, Complex::i() * bracket);
    }
  }
  table.validate();
  return Quantization{choice, std::move(table), reversal_map(modes)};
}

Ket Ket::vacuum(ModeSetPtr modes) {
  Ket k;
  k.modes_ = std::move(modes);
  k.terms_.emplace(Word{}, Complex(1));
  return k;
}

Ket Ket::from_terms(Terms terms, ModeSetPtr modes) {
  Ket k;
  k.modes_ = std::move(modes);
  for (auto& [w, c] : terms) {
    if (c.is_zero()) continue;
    for (const Letter& l : w) {
      if (l.kind != LetterKind::Create) throw ConfigError("ket words must be pure Create");
    }
    if (!std::is_sorted(w.begin(), w.end())) throw ConfigError("ket words must be canonical");
    k.terms_.emplace(w, std::move(c));
  }
  return k;
}

Phrase Ket::phrase() const {
  Phrase p(modes_);
  for (const auto& [w, c] : terms_) p.add_term(w, c);
  return p;
}

Ket& Ket::operator+=(const Ket& o) {
  if (!modes_) modes_ = o.modes_;
  for (const auto& [w, c] : o.terms_) {
    auto [it, inserted] = terms_.emplace(w, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  return *this;
}

Ket& Ket::operator*=(const Complex& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, coeff] : terms_) coeff *= c;
  return *this;
}

Bra Bra::from_terms(Terms terms, ModeSetPtr modes) {
  Bra b;
  b.modes_ = std::move(modes);
  for (auto& [w, c] : terms) {
    if (c.is_zero()) continue;
    for (const Letter& l : w) {
      if (l.kind != LetterKind::Annihilate) throw ConfigError("bra words must be pure Annihilate");
    }
    if (!std::is_sorted(w.begin(), w.end())) throw ConfigError("bra words must be canonical");
    b.terms_.emplace(w, std::move(c));
  }
  return b;
}

Phrase Bra::phrase() const {
  Phrase p(modes_);
  for (const auto& [w, c] : terms_) p.add_term(w, c);
  return p;
}

namespace {

Word flip_kinds(const Word& w) {
  Word out = w;
  for (Letter& l : out) {
    l.kind = (l.kind == LetterKind::Create) ? LetterKind::Annihilate : LetterKind::Create;
  }
  std::sort(out.begin(), out.end());
  return out;
}

Word map_slots(const Word& w, const SlotInvolution& map) {
  Word out = w;
  for (Letter& l : out) l.slot = map(l.slot);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

Bra bra_of(const Ket& k) {
  Bra::Terms terms;
  for (const auto& [w, c] : k.terms()) terms.emplace(flip_kinds(w), c.conj());
  return Bra::from_terms(std::move(terms), k.modes());
}

Ket ket_of(const Bra& b) {
  Ket::Terms terms;
  for (const auto& [w, c] : b.terms()) terms.emplace(flip_kinds(w), c.conj());
  return Ket::from_terms(std::move(terms), nullptr);
}

Bra time_reverse_to_bra(const Ket& k, const SlotInvolution& map) {
  Bra::Terms terms;
  for (const auto& [w, c] : k.terms()) terms.emplace(flip_kinds(map_slots(w, map)), c);
  return Bra::from_terms(std::move(terms), k.modes());
}

Ket time_reverse_to_ket(const Bra& b, const SlotInvolution& map) {
  Ket::Terms terms;
  for (const auto& [w, c] : b.terms()) terms.emplace(flip_kinds(map_slots(w, map)), c);
  return Ket::from_terms(std::move(terms), nullptr);
}

Ket apply_to_vacuum(const Phrase& op, NormalOrderer& orderer) {
  Phrase no = orderer(op);
  Ket::Terms terms;
  for (const auto& [w, c] : no.terms()) {
    bool pure_create = std::all_of(w.begin(), w.end(), [](const Letter& l) {
      return l.kind == LetterKind::Create;
    });
    if (pure_create) terms.emplace(w, c);
  }
  return Ket::from_terms(std::move(terms), op.modes());
}

Ket apply_to_vacuum(const Phrase& op, const CommutatorTable& table) {
  NormalOrderer orderer(table);
  return apply_to_vacuum(op, orderer);
}

Complex inner(const Bra& x, const Ket& y, NormalOrderer& orderer) {
  Phrase product = mul(x.phrase(), y.phrase());
  return orderer(product).coefficient(Word{});
}

Complex inner(const Bra& x, const Ket& y, const CommutatorTable& table) {
  NormalOrderer orderer(table);
  return inner(x, y, orderer);
}

std::map<int, Ket> grade_decompose(const Ket& k) {
  std::map<int, Ket::Terms> buckets;
  for (const auto& [w, c] : k.terms()) buckets[grade(w)].emplace(w, c);
  std::map<int, Ket> out;
  for (auto& [g, terms] : buckets) out.emplace(g, Ket::from_terms(std::move(terms), k.modes()));
  return out;
}

HermitianMatrix gram_matrix(const std::vector<Ket>& basis, const CommutatorTable& table,
                            Execution exec) {
  int n = static_cast<int>(basis.size());
  HermitianMatrix g(n);
  std::vector<Bra> bras(basis.size());
  for (int i = 0; i < n; ++i) bras[i] = bra_of(basis[i]);

  // Upper triangle as a flat list of (i, j) pairs, i <= j.
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(static_cast<std::size_t>(n) * (n + 1) / 2);
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) pairs.emplace_back(i, j);
  }

  if (exec == Execution::Parallel) {
#ifdef _OPENMP
#pragma omp parallel
    {
      NormalOrderer orderer(table);
#pragma omp for schedule(dynamic, 8)
      for (std::int64_t p = 0; p < static_cast<std::int64_t>(pairs.size()); ++p) {
        auto [i, j] = pairs[static_cast<std::size_t>(p)];
        g.at(i, j) = inner(bras[i], basis[j], orderer);
      }
    }
#else
    exec = Execution::Serial;
#endif
  }
  if (exec == Execution::Serial) {
    NormalOrderer orderer(table);
    for (auto [i, j] : pairs) g.at(i, j) = inner(bras[i], basis[j], orderer);
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < i; ++j) g.at(i, j) = g.at(j, i).conj();
  }
  return g;
}

GramReport gram_inertia(const std::vector<Ket>& basis, const CommutatorTable& table,
                        Execution exec) {
  GramReport report;
  report.gram = gram_matrix(basis, table, exec);
  report.inertia = hermitian_inertia(report.gram);
  return report;
}

std::vector<Ket> level_basis(const ModeSetPtr& modes, int n) {
  if (!modes) throw ConfigError("level basis needs a mode set");
  if (n < 0) throw DataError("level must be non-negative");
  std::vector<Ket> basis;
  Word current;
  // Nondecreasing slot tuples in lexicographic order.
  auto recurse = [&](auto&& self, int from, int remaining) -> void {
    if (remaining == 0) {
      Ket::Terms terms;
      terms.emplace(current, Complex(1));
      basis.push_back(Ket::from_terms(std::move(terms), modes));
      return;
    }
    for (int s = from; s < modes->slot_count(); ++s) {
      current.push_back(create(s));
      self(self, s, remaining - 1);
      current.pop_back();
    }
  };
  recurse(recurse, 0, n);
  return basis;
}

}  // namespace iqh
