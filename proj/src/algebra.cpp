#include "iqh/algebra.hpp"

#include <algorithm>
#include <sstream>

#include "iqh/errors.hpp"

namespace iqh {

int grade(const Word& w) {
  int g = 0;
  for (const Letter& l : w) g += (l.kind == LetterKind::Create) ? 1 : -1;
  return g;
}

bool is_normal_word(const Word& w) {
  return std::is_sorted(w.begin(), w.end());
}

std::string to_string(const Word& w) {
  if (w.empty()) return "()";
  std::ostringstream out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out << " ";
    out << (w[i].kind == LetterKind::Create ? "c" : "a") << w[i].slot;
  }
  return out.str();
}

Phrase Phrase::one(ModeSetPtr modes) {
  Phrase p(std::move(modes));
  p.add_term(Word{}, Complex(1));
  return p;
}

Phrase Phrase::single(Letter l, ModeSetPtr modes) {
  return from_word(Word{l}, Complex(1), std::move(modes));
}

Phrase Phrase::from_word(Word w, Complex coeff, ModeSetPtr modes) {
  Phrase p(std::move(modes));
  if (p.modes_) {
    for (const Letter& l : w) {
      if (l.slot < 0 || l.slot >= p.modes_->slot_count()) {
        throw ConfigError("letter slot outside the active mode set");
      }
    }
  }
  p.add_term(w, coeff);
  return p;
}

Complex Phrase::coefficient(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Complex(0) : it->second;
}

void Phrase::add_term(const Word& w, const Complex& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

ModeSetPtr Phrase::joined_modes(const Phrase& a, const Phrase& b) {
  if (a.modes_ && b.modes_ && a.modes_ != b.modes_) {
    throw ConfigError("phrases built on different mode sets");
  }
  return a.modes_ ? a.modes_ : b.modes_;
}

Phrase& Phrase::operator+=(const Phrase& o) {
  modes_ = joined_modes(*this, o);
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

Phrase& Phrase::operator-=(const Phrase& o) {
  modes_ = joined_modes(*this, o);
  for (const auto& [w, c] : o.terms_) add_term(w, -c);
  return *this;
}

Phrase& Phrase::operator*=(const Complex& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, coeff] : terms_) coeff *= c;
  return *this;
}

Phrase mul(const Phrase& p, const Phrase& q) {
  Phrase out(Phrase::joined_modes(p, q));
  for (const auto& [wp, cp] : p.terms_) {
    for (const auto& [wq, cq] : q.terms_) {
      Word w = wp;
      w.insert(w.end(), wq.begin(), wq.end());
      out.add_term(w, cp * cq);
    }
  }
  return out;
}

Phrase add_scaled(const Phrase& p, const Phrase& q, const Complex& lambda) {
  Phrase out = p;
  out.modes_ = Phrase::joined_modes(p, q);
  for (const auto& [w, c] : q.terms_) out.add_term(w, lambda * c);
  return out;
}

std::string to_string(const Phrase& p) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [w, c] : p.terms()) {
    if (!first) out << " + ";
    first = false;
    out << to_string(c) << "*[" << to_string(w) << "]";
  }
  return out.str();
}

CommutatorTable::CommutatorTable(int slots)
    : slots_(slots), entries_(static_cast<std::size_t>(slots) * slots) {
  if (slots <= 0) throw DataError("commutator table needs at least one slot");
}

void CommutatorTable::set(int i, int j, Complex value) {
  entries_[static_cast<std::size_t>(i) * slots_ + j] = std::move(value);
}

bool CommutatorTable::is_hermitian() const {
  for (int i = 0; i < slots_; ++i) {
    for (int j = i; j < slots_; ++j) {
      if (at(i, j) != at(j, i).conj()) return false;
    }
  }
  return true;
}

void CommutatorTable::validate() const {
  if (!is_hermitian()) throw DataError("commutator table is not Hermitian-consistent");
}

SlotInvolution SlotInvolution::identity(int slots) {
  std::vector<std::int32_t> image(slots);
  for (int i = 0; i < slots; ++i) image[i] = i;
  return SlotInvolution(std::move(image));
}

SlotInvolution::SlotInvolution(std::vector<std::int32_t> image) : image_(std::move(image)) {
  int n = static_cast<int>(image_.size());
  for (int i = 0; i < n; ++i) {
    if (image_[i] < 0 || image_[i] >= n || image_[image_[i]] != i) {
      throw ConfigError("letter map is not an involution on the slot range");
    }
  }
}

namespace {

void check_coverage(const Phrase& p, const CommutatorTable& table) {
  for (const auto& [w, c] : p.terms()) {
    for (const Letter& l : w) {
      if (l.slot < 0 || l.slot >= table.slots()) {
        throw ConfigError("commutator table does not cover phrase slots");
      }
    }
  }
}

}  // namespace

const Phrase& NormalOrderer::word_normal_form(const Word& w) {
  auto it = memo_.find(w);
  if (it != memo_.end()) return it->second;

  std::size_t bad = w.size();
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    if (w[i].kind == LetterKind::Annihilate && w[i + 1].kind == LetterKind::Create) {
      bad = i;
      break;
    }
  }

  Phrase result;
  if (bad == w.size()) {
    // Segregated word: same-kind letters commute, so sorting is free.
    Word sorted = w;
    std::sort(sorted.begin(), sorted.end());
    result.add_term(sorted, Complex(1));
  } else {
    Word swapped = w;
    std::swap(swapped[bad], swapped[bad + 1]);
    Word contracted;
    contracted.reserve(w.size() - 2);
    contracted.insert(contracted.end(), w.begin(), w.begin() + bad);
    contracted.insert(contracted.end(), w.begin() + bad + 2, w.end());

    const Complex& c = table_->at(w[bad].slot, w[bad + 1].slot);
    result = word_normal_form(swapped);
    if (!c.is_zero()) {
      Phrase tail = word_normal_form(contracted);
      tail *= c;
      result += tail;
    }
  }
  return memo_.emplace(w, std::move(result)).first->second;
}

Phrase NormalOrderer::operator()(const Phrase& p) {
  check_coverage(p, *table_);
  Phrase out(p.modes());
  for (const auto& [w, c] : p.terms()) {
    for (const auto& [nw, nc] : word_normal_form(w).terms()) out.add_term(nw, c * nc);
  }
  return out;
}

Phrase normal_order(const Phrase& p, const CommutatorTable& table) {
  NormalOrderer orderer(table);
  return orderer(p);
}

Phrase conjugate(const Phrase& p) {
  Phrase out(p.modes());
  for (const auto& [w, c] : p.terms()) {
    Word cw(w.rbegin(), w.rend());
    for (Letter& l : cw) {
      l.kind = (l.kind == LetterKind::Create) ? LetterKind::Annihilate : LetterKind::Create;
    }
    out.add_term(cw, c.conj());
  }
  return out;
}

Phrase time_reverse(const Phrase& p, const SlotInvolution& map) {
  if (p.modes() && map.slots() != p.modes()->slot_count()) {
    throw ConfigError("letter map does not match the phrase mode set");
  }
  Phrase out(p.modes());
  for (const auto& [w, c] : p.terms()) {
    Word tw(w.rbegin(), w.rend());
    for (Letter& l : tw) l.slot = map(l.slot);
    out.add_term(tw, c);
  }
  return out;
}

}  // namespace iqh
