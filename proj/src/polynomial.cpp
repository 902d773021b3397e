#include "hkcover/polynomial.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace hk {

Polynomial::Polynomial(long constant) : Polynomial(Rational(constant)) {}

Polynomial::Polynomial(const Rational& constant) {
  if (constant != 0) terms_.emplace(Monomial{}, constant);
}

Polynomial Polynomial::variable(const std::string& name) {
  Polynomial p;
  p.terms_.emplace(Monomial{{name, 1}}, Rational(1));
  return p;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

std::optional<Rational> Polynomial::constant_value() const {
  if (terms_.empty()) return Rational(0);
  if (terms_.size() == 1 && terms_.begin()->first.empty()) return terms_.begin()->second;
  return std::nullopt;
}

Rational Polynomial::coefficient(const Monomial& m) const {
  const auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::set<std::string> Polynomial::variables() const {
  std::set<std::string> out;
  for (const auto& term : terms_) {
    for (const auto& factor : term.first) out.insert(factor.first);
  }
  return out;
}

namespace {

unsigned total_degree(const Polynomial::Monomial& m) {
  unsigned d = 0;
  for (const auto& f : m) d += f.second;
  return d;
}

}  // namespace

unsigned Polynomial::degree() const {
  unsigned d = 0;
  for (const auto& term : terms_) d = std::max(d, total_degree(term.first));
  return d;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  for (const auto& [m, c] : rhs.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
  return *this;
}

Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs) {
  Polynomial out;
  for (const auto& [ma, ca] : lhs.terms_) {
    for (const auto& [mb, cb] : rhs.terms_) {
      Polynomial::Monomial m = ma;
      for (const auto& [var, exp] : mb) m[var] += exp;
      out.add_term(m, ca * cb);
    }
  }
  return out;
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs) { return *this = *this * rhs; }

Polynomial Polynomial::pow(unsigned exponent) const {
  Polynomial out(1L);
  for (unsigned i = 0; i < exponent; ++i) out *= *this;
  return out;
}

Polynomial Polynomial::substitute(const std::string& var, const Polynomial& value) const {
  return substitute(std::map<std::string, Polynomial>{{var, value}});
}

Polynomial Polynomial::substitute(const std::map<std::string, Polynomial>& values) const {
  Polynomial out;
  for (const auto& [m, c] : terms_) {
    Polynomial term(c);
    Monomial kept;
    for (const auto& [var, exp] : m) {
      const auto it = values.find(var);
      if (it == values.end()) {
        kept.emplace(var, exp);
      } else {
        term *= it->second.pow(exp);
      }
    }
    if (!kept.empty()) {
      Polynomial mono;
      mono.terms_.emplace(kept, Rational(1));
      term *= mono;
    }
    out += term;
  }
  return out;
}

Rational Polynomial::evaluate(const std::map<std::string, Rational>& values) const {
  Rational sum;
  for (const auto& [m, c] : terms_) {
    Rational term = c;
    for (const auto& [var, exp] : m) {
      const auto it = values.find(var);
      if (it == values.end()) throw std::invalid_argument("no value for variable '" + var + "'");
      term *= rpow(it->second, static_cast<long>(exp));
    }
    sum += term;
  }
  return sum;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<Monomial, Rational>> ordered(terms_.begin(), terms_.end());
  std::stable_sort(ordered.begin(), ordered.end(), [](const auto& x, const auto& y) {
    return total_degree(x.first) > total_degree(y.first);
  });
  std::string out;
  bool first = true;
  for (const auto& [m, c] : ordered) {
    const bool negative = c < 0;
    const Rational mag = abs(c);
    if (first) {
      out += negative ? "-" : "";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    std::string factors;
    for (const auto& [var, exp] : m) {
      if (!factors.empty()) factors += "*";
      factors += var;
      if (exp > 1) factors += "^" + std::to_string(exp);
    }
    const std::string coeff = is_integral(mag) ? hk::to_string(mag.get_num()) : "(" + hk::to_string(mag) + ")";
    if (factors.empty()) {
      out += coeff;
    } else if (mag == 1) {
      out += factors;
    } else {
      out += coeff + "*" + factors;
    }
  }
  return out;
}

SignProof prove_sign(const Polynomial& p, SignClaim claim, std::span<const VariableBound> bounds) {
  SignProof proof;
  std::map<std::string, Polynomial> shift;
  for (const auto& b : bounds) shift.emplace(b.name, Polynomial(b.lower) + Polynomial::variable(b.name));
  for (const auto& var : p.variables()) {
    if (!shift.contains(var)) {
      proof.detail = "variable '" + var + "' has no lower bound";
      return proof;
    }
  }
  proof.shifted = p.substitute(shift);
  for (const auto& [m, c] : proof.shifted.terms()) {
    if (c < 0) {
      proof.detail = "negative coefficient after shifting to lower bounds: " + proof.shifted.to_string();
      return proof;
    }
  }
  const Rational constant = proof.shifted.coefficient({});
  if (claim == SignClaim::positive && constant <= 0) {
    proof.detail = "constant term after shifting is not positive: " + proof.shifted.to_string();
    return proof;
  }
  proof.verified = true;
  proof.detail = "shifted to lower bounds: " + proof.shifted.to_string() +
                 (claim == SignClaim::positive ? " (all coefficients >= 0, constant > 0)" : " (all coefficients >= 0)");
  return proof;
}

}  // namespace hk
