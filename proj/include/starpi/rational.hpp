#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace starpi {

// Every coefficient in the library is an exact rational. Floating point
// never appears anywhere.
using Rational = mpq_class;

// Accepts "p/q" or "n" with optional sign, nothing else. The result is
// canonicalized (lowest terms, positive denominator).
inline Rational rational_from_string(const std::string& text) {
  mpq_class q;
  if (text.empty() || mpq_set_str(q.get_mpq_t(), text.c_str(), 10) != 0)
    throw std::invalid_argument("bad rational literal '" + text + "'");
  if (mpz_sgn(mpq_denref(q.get_mpq_t())) == 0)
    throw std::invalid_argument("zero denominator in rational literal '" + text + "'");
  q.canonicalize();
  return q;
}

// Canonical form: "p/q" when the denominator is not 1, plain "n" otherwise.
inline std::string rational_to_string(const Rational& q) { return q.get_str(); }

}  // namespace starpi
