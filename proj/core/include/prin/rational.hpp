#ifndef PRIN_RATIONAL_HPP
#define PRIN_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

namespace prin {

// Exact rational scalar. mpq_class keeps values canonical (lowest terms,
// positive denominator), which is exactly the invariant we need.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational rat(long n) { return Rational(n); }

inline Rational rat(long n, long d) {
  Rational q(n, d);
  q.canonicalize();
  return q;
}

// Accepts "p" or "p/q" with arbitrary-precision parts.
inline Rational rational_from_string(const std::string& s) {
  Rational q(s);
  q.canonicalize();
  return q;
}

inline std::string rational_to_string(const Rational& q) {
  return q.get_str();
}

inline Rational rational_pow(const Rational& q, unsigned long e) {
  Rational r;
  mpz_pow_ui(r.get_num_mpz_t(), q.get_num_mpz_t(), e);
  mpz_pow_ui(r.get_den_mpz_t(), q.get_den_mpz_t(), e);
  return r;
}

} // namespace prin

#endif
