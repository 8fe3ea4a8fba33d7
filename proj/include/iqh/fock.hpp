#pragma once

#include <map>
#include <vector>

#include "iqh/algebra.hpp"
#include "iqh/inertia.hpp"

namespace iqh {

enum class System { Oscillator, Scalar, EM4 };

/// The two invariant choices of creating/destructing subspaces. Variant 1
/// lets the positive-frequency amplitudes destroy the vacuum; variant 2
/// swaps the roles.
enum class Variant : int { PositiveFrequencyDestroys = 1, NegativeFrequencyDestroys = 2 };

struct QuantizationChoice {
  System system{System::Oscillator};
  Variant variant{Variant::PositiveFrequencyDestroys};
  ModeSetPtr modes;
};

/// Quantum commutator table derived from the classical brackets via
/// {a,b}^ = -i [a^,b^], plus the slot involution time reversal uses.
struct Quantization {
  QuantizationChoice choice;
  CommutatorTable table;
  SlotInvolution time_reversal_map;
};

Quantization build_quantization(const QuantizationChoice& choice);

/// Graded Fock vector: class of an operator modulo the destruction ideal,
/// stored as canonical pure-Create words.
class Ket {
 public:
  using Terms = std::map<Word, Complex>;

  Ket() = default;
  static Ket vacuum(ModeSetPtr modes = nullptr);
  static Ket from_terms(Terms terms, ModeSetPtr modes);

  const Terms& terms() const { return terms_; }
  const ModeSetPtr& modes() const { return modes_; }
  bool is_zero() const { return terms_.empty(); }

  Phrase phrase() const;

  Ket& operator+=(const Ket& o);
  Ket& operator*=(const Complex& c);
  friend Ket operator+(Ket a, const Ket& b) { return a += b; }
  friend Ket operator*(const Complex& c, Ket a) { return a *= c; }
  friend bool operator==(const Ket& a, const Ket& b) { return a.terms_ == b.terms_; }

 private:
  friend class Bra;
  Terms terms_;
  ModeSetPtr modes_;
};

/// Conjugate counterpart of a Ket: canonical pure-Annihilate words.
class Bra {
 public:
  using Terms = std::map<Word, Complex>;

  Bra() = default;
  static Bra from_terms(Terms terms, ModeSetPtr modes);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Phrase phrase() const;

 private:
  Terms terms_;
  ModeSetPtr modes_;
};

/// Conjugation bijection between kets and bras.
Bra bra_of(const Ket& k);
Ket ket_of(const Bra& b);

/// Time reversal maps kets to bras (and back) coefficient-linearly; the
/// slot involution comes from the quantization.
Bra time_reverse_to_bra(const Ket& k, const SlotInvolution& map);
Ket time_reverse_to_ket(const Bra& b, const SlotInvolution& map);

/// Normal-orders op and drops every word containing an Annihilate letter.
Ket apply_to_vacuum(const Phrase& op, const CommutatorTable& table);
Ket apply_to_vacuum(const Phrase& op, NormalOrderer& orderer);

/// Vacuum expectation of the normal-ordered product; the unique scalar
/// product with <0|0> = 1.
Complex inner(const Bra& x, const Ket& y, const CommutatorTable& table);
Complex inner(const Bra& x, const Ket& y, NormalOrderer& orderer);

/// Partition of a ket by word grade; summing the parts reconstructs it.
std::map<int, Ket> grade_decompose(const Ket& k);

enum class Execution { Serial, Parallel };

/// Gram matrix of a ket basis; entries[i][j] = <basis_i | basis_j>. The
/// parallel path splits the (i, j) pairs over OpenMP threads and is
/// bit-identical to the serial one.
HermitianMatrix gram_matrix(const std::vector<Ket>& basis, const CommutatorTable& table,
                            Execution exec = Execution::Serial);

struct GramReport {
  HermitianMatrix gram;
  Inertia inertia;
};

GramReport gram_inertia(const std::vector<Ket>& basis, const CommutatorTable& table,
                        Execution exec = Execution::Serial);

/// All grade-n kets: multisets of Create slots in ascending slot order,
/// enumerated lexicographically.
std::vector<Ket> level_basis(const ModeSetPtr& modes, int n);

}  // namespace iqh
