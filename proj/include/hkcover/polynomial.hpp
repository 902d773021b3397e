#pragma once

// Sparse multivariate polynomials over Q, just enough to replay the nonexistence
// derivations symbolically. Sign claims are checked on coefficients after shifting
// every variable to its lower bound.

#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>

#include "hkcover/numeric.hpp"

namespace hk {

class Polynomial {
 public:
  /// Variable name -> exponent (> 0). The empty monomial is the constant term.
  using Monomial = std::map<std::string, unsigned>;

  Polynomial() = default;
  Polynomial(long constant);  // NOLINT(google-explicit-constructor)
  Polynomial(const Rational& constant);  // NOLINT(google-explicit-constructor)

  static Polynomial variable(const std::string& name);

  const std::map<Monomial, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::optional<Rational> constant_value() const;
  Rational coefficient(const Monomial& m) const;
  std::set<std::string> variables() const;
  unsigned degree() const;

  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Polynomial& rhs);

  friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
  friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }
  friend Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs);
  friend Polynomial operator-(const Polynomial& p) { return Polynomial(0L) - p; }
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  Polynomial pow(unsigned exponent) const;
  Polynomial substitute(const std::string& var, const Polynomial& value) const;
  Polynomial substitute(const std::map<std::string, Polynomial>& values) const;
  /// Throws std::invalid_argument if a variable is left unassigned.
  Rational evaluate(const std::map<std::string, Rational>& values) const;

  /// Terms ordered by descending total degree, e.g. "2*e*k + 2*k + 16".
  std::string to_string() const;

 private:
  void add_term(const Monomial& m, const Rational& c);
  std::map<Monomial, Rational> terms_;
};

struct VariableBound {
  std::string name;
  Rational lower;
};

enum class SignClaim { positive, nonnegative };

struct SignProof {
  bool verified = false;
  /// The polynomial after x -> lower + x for every bounded x.
  Polynomial shifted;
  std::string detail;
};

/// Sufficient test: after shifting each variable to its lower bound, every coefficient
/// is >= 0 (and the constant term is > 0 for a positivity claim). Every variable of p
/// must have a bound.
SignProof prove_sign(const Polynomial& p, SignClaim claim, std::span<const VariableBound> bounds);

}  // namespace hk
