#include <doctest.h>

#include <vector>

#include "hkcover/numeric.hpp"
#include "hkcover/polynomial.hpp"

using namespace hk;

TEST_CASE("rationals print in lowest terms with positive denominator") {
  CHECK(to_string(make_rational(Integer(6), Integer(-4))) == "-3/2");
  CHECK(to_string(Rational(36)) == "36/1");
  CHECK(to_string(Rational(0)) == "0/1");
  CHECK(to_string(Integer(-17)) == "-17");
  CHECK_THROWS(make_rational(Integer(1), Integer(0)));
}

TEST_CASE("parse round-trips") {
  CHECK(parse_rational("-20/12") == Rational(-5, 3));
  CHECK(parse_rational("7") == Rational(7));
  CHECK(parse_integer("123456789012345678901234567890") == Integer("123456789012345678901234567890"));
  CHECK_THROWS(parse_integer("12x"));
  CHECK_THROWS(parse_rational("1/0"));
}

TEST_CASE("json safe range is 2^53") {
  const Integer limit = ipow(Integer(2), 53);
  CHECK(fits_json_number(limit));
  CHECK(fits_json_number(-limit));
  CHECK_FALSE(fits_json_number(limit + 1));
  CHECK(to_int64(Integer(-5)) == -5);
  CHECK_THROWS(to_int64(ipow(Integer(10), 30)));
}

TEST_CASE("powers") {
  CHECK(ipow(Integer(3), 0) == 1);
  CHECK(ipow(Integer(-2), 5) == -32);
  CHECK(rpow(Rational(2, 3), -2) == Rational(9, 4));
}

TEST_CASE("polynomial arithmetic and printing") {
  const Polynomial e = Polynomial::variable("e");
  const Polynomial k = Polynomial::variable("k");
  const Polynomial p = Polynomial(2L) * e * k + Polynomial(16L);
  CHECK(p.to_string() == "2*e*k + 16");
  CHECK(p.degree() == 2);
  CHECK((p - p).is_zero());
  CHECK((e + k).pow(2) == e * e + Polynomial(2L) * e * k + k * k);
  CHECK(p.evaluate({{"e", Rational(2)}, {"k", Rational(5)}}) == 36);
  CHECK_THROWS(p.evaluate({{"e", Rational(2)}}));
  CHECK(p.substitute("e", k + Polynomial(1L)) == Polynomial(2L) * k * k + Polynomial(2L) * k + Polynomial(16L));
  CHECK(Polynomial(Rational(3, 4)).constant_value() == Rational(3, 4));
  CHECK_FALSE(e.constant_value().has_value());
}

TEST_CASE("sign proofs by shifting to the lower bounds") {
  const Polynomial e = Polynomial::variable("e");
  const Polynomial k = Polynomial::variable("k");
  const std::vector<VariableBound> bounds{{"e", 2}, {"k", 5}};

  // (e+1)k + 8 with e >= 2, k >= 5
  const SignProof ok = prove_sign((e + Polynomial(1L)) * k + Polynomial(8L), SignClaim::positive, bounds);
  CHECK(ok.verified);
  CHECK(ok.shifted.to_string() == "e*k + 5*e + 3*k + 23");

  // k - 2e has no certificate of this shape, and is in fact negative at e = 3, k = 5
  CHECK_FALSE(prove_sign(k - Polynomial(2L) * e, SignClaim::nonnegative, bounds).verified);

  // k - 5 is nonnegative but not positive
  CHECK(prove_sign(k - Polynomial(5L), SignClaim::nonnegative, bounds).verified);
  CHECK_FALSE(prove_sign(k - Polynomial(5L), SignClaim::positive, bounds).verified);

  // unbounded variable
  CHECK_FALSE(prove_sign(Polynomial::variable("t") + Polynomial(1L), SignClaim::positive, bounds).verified);
}

TEST_CASE("property: polynomial evaluation is a ring homomorphism") {
  const Polynomial x = Polynomial::variable("x");
  const Polynomial y = Polynomial::variable("y");
  const Polynomial p = x * x - Polynomial(Rational(3, 2)) * x * y + Polynomial(7L);
  const Polynomial q = y.pow(3) - x + Polynomial(Rational(-1, 5));
  for (int xi = -3; xi <= 3; ++xi) {
    for (int yi = -3; yi <= 3; ++yi) {
      const std::map<std::string, Rational> at{{"x", Rational(xi)}, {"y", Rational(yi, 2)}};
      CHECK((p * q).evaluate(at) == p.evaluate(at) * q.evaluate(at));
      CHECK((p - q).evaluate(at) == p.evaluate(at) - q.evaluate(at));
    }
  }
}
