#include "akmono/words.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace akmono {

int gen_e(int i) { return 2 * (i - 1); }
int gen_f(int i) { return 2 * (i - 1) + 1; }
int gen_c(int g0) { return 2 * g0; }

std::string gen_name(int id, int g0) {
  if (id == 2 * g0) return "c";
  std::ostringstream os;
  os << (id % 2 == 0 ? 'e' : 'f') << (id / 2 + 1);
  return os.str();
}

Word Word::gen(int id, int exp) {
  Word w;
  int s = exp >= 0 ? id + 1 : -(id + 1);
  for (int i = 0; i < (exp >= 0 ? exp : -exp); ++i) w.ls.push_back(s);
  return w;
}

Word Word::reduced() const {
  Word r;
  for (int x : ls) {
    if (!r.ls.empty() && r.ls.back() == -x)
      r.ls.pop_back();
    else
      r.ls.push_back(x);
  }
  return r;
}

Word Word::operator*(const Word& o) const {
  Word r = *this;
  r.ls.insert(r.ls.end(), o.ls.begin(), o.ls.end());
  return r.reduced();
}

Word Word::inverse() const {
  Word r;
  for (auto it = ls.rbegin(); it != ls.rend(); ++it) r.ls.push_back(-*it);
  return r;
}

Word Word::pow(long k) const {
  Word r;
  Word base = k >= 0 ? *this : inverse();
  for (long i = 0; i < (k >= 0 ? k : -k); ++i) r = r * base;
  return r;
}

std::string Word::str(int g0) const {
  if (ls.empty()) return "1";
  std::ostringstream os;
  for (size_t i = 0; i < ls.size(); ++i) {
    if (i) os << " ";
    int id = std::abs(ls[i]) - 1;
    os << gen_name(id, g0);
    if (ls[i] < 0) os << "^-1";
  }
  return os.str();
}

namespace {

struct Parser {
  const std::string& s;
  int g0;
  size_t pos = 0;

  void skip() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }

  long parse_int() {
    skip();
    size_t start = pos;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (start == pos) throw std::invalid_argument("word parse: expected integer");
    return std::stol(s.substr(start, pos - start));
  }

  Word parse_atom() {
    skip();
    if (pos >= s.size()) throw std::invalid_argument("word parse: unexpected end");
    Word base;
    if (s[pos] == '(') {
      ++pos;
      base = parse_seq();
      skip();
      if (pos >= s.size() || s[pos] != ')')
        throw std::invalid_argument("word parse: missing ')'");
      ++pos;
    } else if (s[pos] == 'c') {
      ++pos;
      base = Word::gen(gen_c(g0));
    } else if (s[pos] == 'e' || s[pos] == 'f') {
      char kind = s[pos];
      ++pos;
      long i = parse_int();
      if (i < 1 || i > g0) throw std::invalid_argument("word parse: handle index out of range");
      base = Word::gen(kind == 'e' ? gen_e(static_cast<int>(i)) : gen_f(static_cast<int>(i)));
    } else {
      throw std::invalid_argument(std::string("word parse: unexpected '") + s[pos] + "'");
    }
    skip();
    if (pos < s.size() && s[pos] == '^') {
      ++pos;
      long e = parse_int();
      base = base.pow(e);
    }
    return base;
  }

  Word parse_seq() {
    Word w;
    while (true) {
      skip();
      if (pos >= s.size() || s[pos] == ')') break;
      w = w * parse_atom();
    }
    return w;
  }
};

}  // namespace

Word parse_word(const std::string& s, int g0) {
  Parser p{s, g0};
  Word w = p.parse_seq();
  p.skip();
  if (p.pos != s.size()) throw std::invalid_argument("word parse: trailing input");
  return w;
}

FreeRingElem FreeRingElem::of(const Word& w, const Rat& c) {
  FreeRingElem e;
  if (c != 0) e.t[w.reduced().ls] = c;
  return e;
}

FreeRingElem FreeRingElem::operator+(const FreeRingElem& o) const {
  FreeRingElem r = *this;
  for (const auto& [w, c] : o.t) {
    auto it = r.t.find(w);
    if (it == r.t.end())
      r.t[w] = c;
    else {
      it->second += c;
      if (it->second == 0) r.t.erase(it);
    }
  }
  return r;
}

FreeRingElem FreeRingElem::operator-(const FreeRingElem& o) const {
  FreeRingElem neg;
  for (const auto& [w, c] : o.t) neg.t[w] = -c;
  return *this + neg;
}

FreeRingElem FreeRingElem::operator*(const FreeRingElem& o) const {
  FreeRingElem r;
  for (const auto& [w1, c1] : t)
    for (const auto& [w2, c2] : o.t) {
      Word w{w1};
      Word v{w2};
      auto key = (w * v).ls;
      auto it = r.t.find(key);
      if (it == r.t.end())
        r.t[key] = c1 * c2;
      else {
        it->second += c1 * c2;
        if (it->second == 0) r.t.erase(it);
      }
    }
  return r;
}

bool FreeRingElem::is_zero() const { return t.empty(); }

FreeRingElem fox_derivative(const Word& w, int gen_id) {
  // walk the reduced word, d(u x)/dx = du/dx + u, d(u x^{-1})/dx = du/dx - u x^{-1}
  FreeRingElem d;
  Word prefix;
  for (int ltr : w.reduced().ls) {
    int id = std::abs(ltr) - 1;
    if (id == gen_id) {
      if (ltr > 0) {
        d = d + FreeRingElem::of(prefix);
      } else {
        Word p = prefix * Word::gen(id, -1);
        d = d - FreeRingElem::of(p);
      }
    }
    prefix.ls.push_back(ltr);
    prefix = prefix.reduced();
  }
  return d;
}

Word surface_relator_word(int g0) {
  Word w;
  for (int i = 1; i <= g0; ++i) {
    Word e = Word::gen(gen_e(i)), f = Word::gen(gen_f(i));
    w = w * e * f * e.inverse() * f.inverse();
  }
  return w * Word::gen(gen_c(g0), -1);
}

}  // namespace akmono
