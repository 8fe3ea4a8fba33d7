#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "iqh/modes.hpp"
#include "iqh/scalar.hpp"

namespace iqh {

enum class LetterKind : std::uint8_t { Create = 0, Annihilate = 1 };

/// One creation or annihilation symbol attached to a mode-set slot.
struct Letter {
  LetterKind kind{LetterKind::Create};
  std::int32_t slot{0};

  friend auto operator<=>(const Letter&, const Letter&) = default;
};

inline Letter create(int slot) { return Letter{LetterKind::Create, slot}; }
inline Letter annihilate(int slot) { return Letter{LetterKind::Annihilate, slot}; }

/// Ordered sequence of letters; the empty word is the multiplicative unit.
using Word = std::vector<Letter>;

/// Particle-number weight: #Create - #Annihilate.
int grade(const Word& w);

/// True when every Create precedes every Annihilate and both runs are
/// sorted ascending by slot.
bool is_normal_word(const Word& w);

std::string to_string(const Word& w);

/// Finite linear combination of words over exact complex scalars, kept
/// canonical: no zero coefficients, no duplicate words. Phrases carry the
/// ModeSet their slots refer to; combining phrases from different mode
/// sets is a configuration error.
class Phrase {
 public:
  using Terms = std::map<Word, Complex>;

  Phrase() = default;
  explicit Phrase(ModeSetPtr modes) : modes_(std::move(modes)) {}

  /// The unit phrase 1 * ()^.
  static Phrase one(ModeSetPtr modes = nullptr);
  static Phrase single(Letter l, ModeSetPtr modes);
  static Phrase from_word(Word w, Complex coeff, ModeSetPtr modes);

  const Terms& terms() const { return terms_; }
  const ModeSetPtr& modes() const { return modes_; }

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// Coefficient of a word (zero when absent).
  Complex coefficient(const Word& w) const;

  void add_term(const Word& w, const Complex& c);

  Phrase& operator+=(const Phrase& o);
  Phrase& operator-=(const Phrase& o);
  Phrase& operator*=(const Complex& c);

  friend Phrase operator+(Phrase a, const Phrase& b) { return a += b; }
  friend Phrase operator-(Phrase a, const Phrase& b) { return a -= b; }
  friend Phrase operator*(Phrase a, const Complex& c) { return a *= c; }
  friend Phrase operator*(const Complex& c, Phrase a) { return a *= c; }
  friend Phrase operator*(const Phrase& a, const Phrase& b) { return mul(a, b); }
  friend bool operator==(const Phrase& a, const Phrase& b) { return a.terms_ == b.terms_; }

  /// Distributed concatenation product.
  friend Phrase mul(const Phrase& p, const Phrase& q);

  /// p + lambda * q.
  friend Phrase add_scaled(const Phrase& p, const Phrase& q, const Complex& lambda);

 private:
  static ModeSetPtr joined_modes(const Phrase& a, const Phrase& b);

  Terms terms_;
  ModeSetPtr modes_;
};

std::string to_string(const Phrase& p);

/// Values of [Annihilate(i), Create(j)]; commutators between letters of
/// equal kind vanish identically, so only the mixed block is stored.
class CommutatorTable {
 public:
  explicit CommutatorTable(int slots);

  int slots() const { return slots_; }
  const Complex& at(int i, int j) const { return entries_[static_cast<std::size_t>(i) * slots_ + j]; }
  void set(int i, int j, Complex value);

  bool is_hermitian() const;

  /// Throws DataError unless C[i][j] == conj(C[j][i]).
  void validate() const;

 private:
  int slots_;
  std::vector<Complex> entries_;
};

/// Slot involution used by time reversal; kinds are always preserved.
class SlotInvolution {
 public:
  static SlotInvolution identity(int slots);
  explicit SlotInvolution(std::vector<std::int32_t> image);

  int slots() const { return static_cast<int>(image_.size()); }
  int operator()(int slot) const { return image_[slot]; }

 private:
  std::vector<std::int32_t> image_;
};

/// Rewriting engine moving every Annihilate right of every Create with
/// [Annihilate(i), Create(j)] = C[i][j]. Recursive with memoization on
/// words; one instance per thread when parallelizing.
class NormalOrderer {
 public:
  explicit NormalOrderer(const CommutatorTable& table) : table_(&table) {}

  Phrase operator()(const Phrase& p);
  const Phrase& word_normal_form(const Word& w);

  const CommutatorTable& table() const { return *table_; }

 private:
  const CommutatorTable* table_;
  std::map<Word, Phrase> memo_;
};

/// One-shot normal ordering; equal to p in the quotient algebra.
Phrase normal_order(const Phrase& p, const CommutatorTable& table);

/// Antilinear involution: reverses words, swaps Create and Annihilate,
/// conjugates coefficients.
Phrase conjugate(const Phrase& p);

/// Coefficient-linear anti-automorphism: maps each letter through the
/// slot involution, then writes the word in reverse order.
Phrase time_reverse(const Phrase& p, const SlotInvolution& map);

}  // namespace iqh
