#pragma once

#include <map>
#include <string>
#include <vector>

#include "akmono/rational.hpp"

namespace akmono {

// Words in the free group on the standard punctured-surface generators
// e_1, f_1, ..., e_g0, f_g0, c.  Generator ids: e_i = 2(i-1), f_i = 2(i-1)+1
// (1-based i), c = 2*g0.  A word stores signed ids: +(id+1) or -(id+1).
struct Word {
  std::vector<int> ls;

  static Word one() { return Word{}; }
  static Word gen(int id, int exp = 1);

  Word operator*(const Word& o) const;
  Word inverse() const;
  Word pow(long k) const;
  Word reduced() const;
  bool operator<(const Word& o) const { return ls < o.ls; }
  bool operator==(const Word& o) const { return ls == o.ls; }
  std::string str(int g0) const;
};

int gen_e(int i);  // 1-based handle index
int gen_f(int i);
int gen_c(int g0);
std::string gen_name(int id, int g0);

// Parses words like "e2 f3^-1 (e1 c)^2"; whitespace-separated atoms,
// parenthesized subwords, integer exponents.
Word parse_word(const std::string& s, int g0);

// Element of the rational free-group ring.
struct FreeRingElem {
  std::map<std::vector<int>, Rat> t;

  static FreeRingElem zero() { return {}; }
  static FreeRingElem of(const Word& w, const Rat& c = Rat(1));
  FreeRingElem operator+(const FreeRingElem& o) const;
  FreeRingElem operator-(const FreeRingElem& o) const;
  FreeRingElem operator*(const FreeRingElem& o) const;
  bool operator==(const FreeRingElem& o) const { return t == o.t; }
  bool is_zero() const;
};

// Fox derivative with respect to generator id: d(uv)/dx = du/dx + u dv/dx,
// dx/dx = 1, d(x^{-1})/dx = -x^{-1}.
FreeRingElem fox_derivative(const Word& w, int gen_id);

// Relator of the one-2-cell presentation: [e1,f1]...[eg,fg] c^{-1}
// (the puncture word c equals the commutator product).
Word surface_relator_word(int g0);

}  // namespace akmono
