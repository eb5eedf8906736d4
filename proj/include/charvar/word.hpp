#pragma once

#include <string>
#include <vector>

#include "charvar/base.hpp"

namespace charvar {

// One run of a generator: gen index with a nonzero (possibly huge) exponent.
struct Letter {
  int gen = 0;
  Int exp = 0;
  bool operator==(const Letter&) const = default;
};

// Freely reduced word over an indexed generator alphabet. Immutable after
// construction; adjacent letters always have distinct generator indices and
// nonzero exponents.
class Word {
 public:
  Word() = default;

  static Word reduced(std::vector<Letter> raw);
  static Word generator(int gen, Int exp = Int(1));

  const std::vector<Letter>& letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }
  Int unit_length() const;
  int max_gen_index() const;  // -1 for the empty word

  Word inverse() const;
  Word pow(const Int& e) const;
  friend Word operator*(const Word& a, const Word& b);

  bool operator==(const Word&) const = default;
  bool operator<(const Word& other) const;

  // Calls f(gen, sign) once per unit letter, left to right.
  template <class F>
  void for_each_unit(F&& f) const {
    for (const Letter& l : letters_) {
      long e = checked_long(l.exp, "word exponent");
      int sign = e > 0 ? 1 : -1;
      for (long k = 0; k != e; k += sign) f(l.gen, sign);
    }
  }

 private:
  std::vector<Letter> letters_;
};

struct Presentation {
  std::vector<std::string> generators;
  std::vector<Word> relators;

  int ngens() const { return static_cast<int>(generators.size()); }
  int gen_index(const std::string& name) const;  // -1 if absent

  bool operator==(const Presentation&) const = default;
};

// File format: "gens: a, b" then optionally "rels: w1, w2". `#` comments,
// `*` optional, `^` integer exponents, `[x,y]` commutator sugar, parentheses.
Presentation parse_presentation(const std::string& text);
Word parse_word(const std::string& text, const Presentation& p);

std::string print_word(const Word& w, const std::vector<std::string>& names);
std::string print_presentation(const Presentation& p);

// Column vector of exponent sums, one row per generator.
IntVec exponent_vector(const Word& w, Index ngens);

// Applies the endomorphism generator i -> images[i].
Word substitute(const Word& w, const std::vector<Word>& images);

}  // namespace charvar
