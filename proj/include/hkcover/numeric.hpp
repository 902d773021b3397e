#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace hk {

// Every invariant in this library is computed exactly; no floating point.
using Integer = mpz_class;
using Rational = mpq_class;

Integer ipow(const Integer& base, unsigned long exponent);
Rational rpow(const Rational& base, long exponent);

/// Throws std::domain_error on a zero denominator.
inline Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw std::domain_error("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline bool is_integral(const Rational& q) { return q.get_den() == 1; }

std::string to_string(const Integer& value);

/// Canonical "p/q" form: lowest terms, q > 0, denominator always written.
std::string to_string(const Rational& value);

/// Accepts "p/q", "p", or a signed decimal integer; throws std::invalid_argument.
Rational parse_rational(std::string_view text);
Integer parse_integer(std::string_view text);

/// True when |value| <= 2^53, i.e. representable exactly as a JSON number.
bool fits_json_number(const Integer& value);

std::int64_t to_int64(const Integer& value);

}  // namespace hk
