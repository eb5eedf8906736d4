#include "charvar/word.hpp"

#include <cctype>
#include <sstream>

namespace charvar {

Word Word::reduced(std::vector<Letter> raw) {
  Word w;
  for (Letter& l : raw) {
    if (l.exp == 0) continue;
    if (!w.letters_.empty() && w.letters_.back().gen == l.gen) {
      w.letters_.back().exp += l.exp;
      if (w.letters_.back().exp == 0) w.letters_.pop_back();
    } else {
      w.letters_.push_back(std::move(l));
    }
  }
  return w;
}

Word Word::generator(int gen, Int exp) {
  Word w;
  if (exp != 0) w.letters_.push_back({gen, std::move(exp)});
  return w;
}

Int Word::unit_length() const {
  Int n = 0;
  for (const Letter& l : letters_) n += abs(l.exp);
  return n;
}

int Word::max_gen_index() const {
  int m = -1;
  for (const Letter& l : letters_) m = std::max(m, l.gen);
  return m;
}

Word Word::inverse() const {
  Word w;
  w.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
    w.letters_.push_back({it->gen, -it->exp});
  return w;
}

Word Word::pow(const Int& e) const {
  if (e == 0 || empty()) return Word();
  if (letters_.size() == 1) {
    Letter l = letters_[0];
    l.exp *= e;
    return Word::generator(l.gen, l.exp);
  }
  long n = checked_long(e, "word power");
  if (n > 65536 || n < -65536) throw Error("word power too large");
  const Word base = n < 0 ? inverse() : *this;
  Word acc;
  for (long i = 0; i < (n < 0 ? -n : n); ++i) acc = acc * base;
  return acc;
}

Word operator*(const Word& a, const Word& b) {
  std::vector<Letter> raw = a.letters_;
  raw.insert(raw.end(), b.letters_.begin(), b.letters_.end());
  return Word::reduced(std::move(raw));
}

bool Word::operator<(const Word& other) const {
  const auto& x = letters_;
  const auto& y = other.letters_;
  for (size_t i = 0; i < x.size() && i < y.size(); ++i) {
    if (x[i].gen != y[i].gen) return x[i].gen < y[i].gen;
    if (x[i].exp != y[i].exp) return x[i].exp < y[i].exp;
  }
  return x.size() < y.size();
}

int Presentation::gen_index(const std::string& name) const {
  for (size_t i = 0; i < generators.size(); ++i)
    if (generators[i] == name) return static_cast<int>(i);
  return -1;
}

IntVec exponent_vector(const Word& w, Index ngens) {
  IntVec v = IntVec::Zero(ngens);
  for (const Letter& l : w.letters()) {
    if (l.gen < 0 || l.gen >= ngens) throw Error("generator index out of range");
    v(l.gen) += l.exp;
  }
  return v;
}

Word substitute(const Word& w, const std::vector<Word>& images) {
  Word out;
  for (const Letter& l : w.letters()) {
    if (l.gen < 0 || static_cast<size_t>(l.gen) >= images.size())
      throw Error("generator index out of range in substitution");
    out = out * images[l.gen].pow(l.exp);
  }
  return out;
}

namespace {

struct Cursor {
  const std::string& text;
  size_t pos = 0;
  int line = 1;
  int col = 1;

  explicit Cursor(const std::string& t) : text(t) {}

  bool done() const { return pos >= text.size(); }
  char peek() const { return done() ? '\0' : text[pos]; }

  char take() {
    char c = text[pos++];
    if (c == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
    return c;
  }

  void skip_space_and_comments(bool stop_at_newline) {
    while (!done()) {
      char c = peek();
      if (c == '#') {
        while (!done() && peek() != '\n') take();
      } else if (c == '\n') {
        if (stop_at_newline) return;
        take();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        take();
      } else {
        return;
      }
    }
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(line, col, msg);
  }
};

bool name_start(char c) { return std::isalpha(static_cast<unsigned char>(c)); }
bool name_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

std::string read_name(Cursor& cur) {
  if (!name_start(cur.peek())) cur.fail("expected a generator name");
  std::string s;
  while (!cur.done() && name_char(cur.peek())) s += cur.take();
  return s;
}

Int read_exponent(Cursor& cur) {
  int eline = cur.line, ecol = cur.col;
  std::string digits;
  if (cur.peek() == '-') digits += cur.take();
  if (!std::isdigit(static_cast<unsigned char>(cur.peek())))
    cur.fail("expected an integer exponent");
  while (!cur.done() && std::isdigit(static_cast<unsigned char>(cur.peek())))
    digits += cur.take();
  Int e(digits);
  if (e == 0) throw ParseError(eline, ecol, "zero exponent");
  return e;
}

Word read_word(Cursor& cur, const Presentation& p);

Word read_atom(Cursor& cur, const Presentation& p) {
  cur.skip_space_and_comments(true);
  char c = cur.peek();
  if (c == '(') {
    cur.take();
    Word w = read_word(cur, p);
    cur.skip_space_and_comments(true);
    if (cur.peek() != ')') cur.fail("expected ')'");
    cur.take();
    return w;
  }
  if (c == '[') {
    cur.take();
    Word x = read_word(cur, p);
    cur.skip_space_and_comments(true);
    if (cur.peek() != ',') cur.fail("expected ',' in commutator");
    cur.take();
    Word y = read_word(cur, p);
    cur.skip_space_and_comments(true);
    if (cur.peek() != ']') cur.fail("expected ']'");
    cur.take();
    return x * y * x.inverse() * y.inverse();
  }
  if (name_start(c)) {
    int nline = cur.line, ncol = cur.col;
    std::string name = read_name(cur);
    int idx = p.gen_index(name);
    if (idx < 0) throw ParseError(nline, ncol, "unknown generator '" + name + "'");
    return Word::generator(idx);
  }
  cur.fail("expected a word");
}

bool at_word_end(Cursor& cur) {
  cur.skip_space_and_comments(true);
  char c = cur.peek();
  return cur.done() || c == '\n' || c == ',' || c == ')' || c == ']';
}

Word read_word(Cursor& cur, const Presentation& p) {
  Word w;
  bool first = true;
  for (;;) {
    cur.skip_space_and_comments(true);
    if (!first) {
      if (at_word_end(cur)) break;
      if (cur.peek() == '*') cur.take();
      cur.skip_space_and_comments(true);
    }
    if (first && at_word_end(cur)) cur.fail("expected a word");
    Word atom = read_atom(cur, p);
    cur.skip_space_and_comments(true);
    if (cur.peek() == '^') {
      cur.take();
      cur.skip_space_and_comments(true);
      atom = atom.pow(read_exponent(cur));
    }
    w = w * atom;
    first = false;
  }
  return w;
}

void expect_keyword(Cursor& cur, const std::string& kw) {
  for (char c : kw) {
    if (cur.peek() != c) cur.fail("expected '" + kw + "'");
    cur.take();
  }
  cur.skip_space_and_comments(true);
  if (cur.peek() != ':') cur.fail("expected ':' after '" + kw + "'");
  cur.take();
}

}  // namespace

Presentation parse_presentation(const std::string& text) {
  Cursor cur(text);
  Presentation p;

  cur.skip_space_and_comments(false);
  expect_keyword(cur, "gens");
  for (;;) {
    cur.skip_space_and_comments(true);
    int nline = cur.line, ncol = cur.col;
    std::string name = read_name(cur);
    if (p.gen_index(name) >= 0)
      throw ParseError(nline, ncol, "duplicate generator '" + name + "'");
    p.generators.push_back(name);
    cur.skip_space_and_comments(true);
    if (cur.peek() == ',') {
      cur.take();
      continue;
    }
    break;
  }
  cur.skip_space_and_comments(true);
  if (!cur.done() && cur.peek() != '\n') cur.fail("unexpected trailing input");

  cur.skip_space_and_comments(false);
  if (cur.done()) return p;

  expect_keyword(cur, "rels");
  cur.skip_space_and_comments(true);
  if (!cur.done() && cur.peek() != '\n') {
    for (;;) {
      int wline = cur.line, wcol = cur.col;
      Word w = read_word(cur, p);
      if (w.empty()) throw ParseError(wline, wcol, "trivial relator");
      p.relators.push_back(w);
      cur.skip_space_and_comments(true);
      if (cur.peek() == ',') {
        cur.take();
        continue;
      }
      break;
    }
  }
  cur.skip_space_and_comments(false);
  if (!cur.done()) cur.fail("unexpected trailing input");
  return p;
}

Word parse_word(const std::string& text, const Presentation& p) {
  Cursor cur(text);
  cur.skip_space_and_comments(false);
  Word w = read_word(cur, p);
  cur.skip_space_and_comments(false);
  if (!cur.done()) cur.fail("unexpected trailing input");
  return w;
}

std::string print_word(const Word& w, const std::vector<std::string>& names) {
  if (w.empty()) return "1";
  std::ostringstream out;
  bool first = true;
  for (const Letter& l : w.letters()) {
    if (!first) out << "*";
    out << names.at(static_cast<size_t>(l.gen));
    if (l.exp != 1) out << "^" << l.exp;
    first = false;
  }
  return out.str();
}

std::string print_presentation(const Presentation& p) {
  std::ostringstream out;
  out << "gens: ";
  for (size_t i = 0; i < p.generators.size(); ++i)
    out << (i ? ", " : "") << p.generators[i];
  out << "\n";
  if (!p.relators.empty()) {
    out << "rels: ";
    for (size_t i = 0; i < p.relators.size(); ++i)
      out << (i ? ", " : "") << print_word(p.relators[i], p.generators);
    out << "\n";
  }
  return out.str();
}

}  // namespace charvar
