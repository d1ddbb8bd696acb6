#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace homcalc {

// Exact rational scalar. mpq_class keeps values canonical (lowest terms,
// positive denominator), which is exactly the invariant we need; no
// floating point anywhere in this library.
using Rational = mpq_class;

// Serialized form is "p" or "p/q".
inline std::string to_string(const Rational& r) { return r.get_str(); }

inline Rational rational_from_string(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  mpq_class r;
  if (r.set_str(s, 10) != 0)
    throw std::invalid_argument("bad rational literal: '" + s + "'");
  if (r.get_den() == 0)
    throw std::invalid_argument("zero denominator in rational literal: '" + s + "'");
  r.canonicalize();
  return r;
}

inline int parity_sign(long e) { return (e % 2 == 0) ? 1 : -1; }

}  // namespace homcalc
