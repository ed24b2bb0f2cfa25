#pragma once

#include "rational.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace qflag {

// Integer Laurent polynomial in q. Zero coefficients are never stored, so the
// representation is unique and operator== is mathematical equality.
class LaurentPoly {
public:
  using Terms = std::map<long, Integer>;

  LaurentPoly() = default;
  LaurentPoly(long constant);  // NOLINT: implicit integer promotion is intended
  static LaurentPoly monomial(long exponent, const Integer& coefficient = 1);
  static LaurentPoly from_terms(const std::vector<std::pair<long, Integer>>& terms);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Integer coefficient(long exponent) const;
  // Lowest / highest exponent; both throw DomainError on the zero polynomial.
  long min_exponent() const;
  long max_exponent() const;
  Integer leading_coefficient() const { return terms_.empty() ? Integer(0) : terms_.rbegin()->second; }

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(LaurentPoly a, const LaurentPoly& b) { return a *= b; }
  LaurentPoly operator-() const;
  bool operator==(const LaurentPoly& o) const { return terms_ == o.terms_; }

  // Multiply by q^k.
  LaurentPoly shifted(long k) const;
  // q -> q^{-1}
  LaurentPoly reflected() const;
  bool is_palindromic() const { return *this == reflected(); }
  // Divide every coefficient by an integer that must divide all of them.
  LaurentPoly divided_by(const Integer& z) const;
  // gcd of the coefficients (0 for the zero polynomial).
  Integer content() const;

  // Exact quotient; throws DomainError when the divisor does not divide.
  LaurentPoly divide_exact(const LaurentPoly& divisor) const;

  Rational evaluate(const Rational& q) const;
  double evaluate(double q) const;

  std::string to_string() const;

private:
  void add_term(long exponent, const Integer& c);
  Terms terms_;
};

// Quotient of two Laurent polynomials, kept in lowest terms: numerator and
// denominator share no non-unit factor, the denominator has lowest exponent 0
// and positive leading coefficient. Equal rational functions therefore have
// identical representations.
class RationalFunction {
public:
  RationalFunction() : num_(0), den_(1) {}
  RationalFunction(LaurentPoly num, LaurentPoly den);
  RationalFunction(const LaurentPoly& p) : RationalFunction(p, LaurentPoly(1)) {}  // NOLINT

  const LaurentPoly& numerator() const { return num_; }
  const LaurentPoly& denominator() const { return den_; }

  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
  bool operator==(const RationalFunction& o) const { return num_ == o.num_ && den_ == o.den_; }

  Rational evaluate(const Rational& q) const;
  double evaluate(double q) const;
  std::string to_string() const;

private:
  LaurentPoly num_;
  LaurentPoly den_;
};

// Greatest common divisor of two Laurent polynomials, as a primitive integer
// polynomial with lowest exponent 0 and positive leading coefficient.
LaurentPoly polynomial_gcd(const LaurentPoly& a, const LaurentPoly& b);

}  // namespace qflag
