#pragma once

#include <gmpxx.h>
#include <string>
#include <vector>

namespace akmono {

using Rat = mpq_class;
using Int = mpz_class;

inline Rat rat(long num, long den = 1) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline bool is_integer(const Rat& x) { return x.get_den() == 1; }

inline std::string rat_str(const Rat& x) { return x.get_str(); }

// Parses "p" or "p/q".
Rat rat_parse(const std::string& s);

using QVec = std::vector<Rat>;

}  // namespace akmono
