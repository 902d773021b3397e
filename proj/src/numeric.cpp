#include "hkcover/numeric.hpp"

#include <cctype>
#include <limits>
#include <stdexcept>

namespace hk {

Integer ipow(const Integer& base, unsigned long exponent) {
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
  return out;
}

Rational rpow(const Rational& base, long exponent) {
  if (exponent >= 0) {
    return make_rational(ipow(base.get_num(), static_cast<unsigned long>(exponent)),
                         ipow(base.get_den(), static_cast<unsigned long>(exponent)));
  }
  if (base == 0) throw std::domain_error("rpow: zero to a negative power");
  const auto e = static_cast<unsigned long>(-exponent);
  return make_rational(ipow(base.get_den(), e), ipow(base.get_num(), e));
}

std::string to_string(const Integer& value) { return value.get_str(10); }

std::string to_string(const Rational& value) {
  Rational q(value);
  q.canonicalize();
  return q.get_num().get_str(10) + "/" + q.get_den().get_str(10);
}

Integer parse_integer(std::string_view text) {
  std::size_t i = 0;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
  if (i == text.size()) throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
  for (std::size_t j = i; j < text.size(); ++j) {
    if (!std::isdigit(static_cast<unsigned char>(text[j]))) {
      throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
    }
  }
  std::string digits(text.front() == '+' ? text.substr(1) : text);
  return Integer(digits, 10);
}

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  Integer num = parse_integer(text.substr(0, slash));
  Integer den = parse_integer(text.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  return make_rational(num, den);
}

bool fits_json_number(const Integer& value) {
  static const Integer limit = ipow(Integer(2), 53);
  return abs(value) <= limit;
}

std::int64_t to_int64(const Integer& value) {
  if (!mpz_fits_slong_p(value.get_mpz_t())) throw std::overflow_error("integer exceeds 64 bits");
  return value.get_si();
}

}  // namespace hk
