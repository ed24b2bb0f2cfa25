#include "laurent.hpp"

#include "error.hpp"

#include <cmath>
#include <sstream>

namespace qflag {

LaurentPoly::LaurentPoly(long constant) {
  if (constant != 0) terms_.emplace(0, constant);
}

LaurentPoly LaurentPoly::monomial(long exponent, const Integer& coefficient) {
  LaurentPoly p;
  p.add_term(exponent, coefficient);
  return p;
}

LaurentPoly LaurentPoly::from_terms(const std::vector<std::pair<long, Integer>>& terms) {
  LaurentPoly p;
  for (const auto& [e, c] : terms) p.add_term(e, c);
  return p;
}

void LaurentPoly::add_term(long exponent, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponent, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Integer LaurentPoly::coefficient(long exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Integer(0) : it->second;
}

long LaurentPoly::min_exponent() const {
  if (terms_.empty()) throw DomainError("zero polynomial has no lowest exponent");
  return terms_.begin()->first;
}

long LaurentPoly::max_exponent() const {
  if (terms_.empty()) throw DomainError("zero polynomial has no highest exponent");
  return terms_.rbegin()->first;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
  LaurentPoly out;
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) out.add_term(e1 + e2, c1 * c2);
  *this = std::move(out);
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

LaurentPoly LaurentPoly::shifted(long k) const {
  LaurentPoly out;
  for (const auto& [e, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), e + k, c);
  return out;
}

LaurentPoly LaurentPoly::reflected() const {
  LaurentPoly out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(-e, c);
  return out;
}

LaurentPoly LaurentPoly::divided_by(const Integer& z) const {
  if (z == 0) throw DomainError("division of a polynomial by zero");
  LaurentPoly out;
  for (const auto& [e, c] : terms_) {
    if (!mpz_divisible_p(c.get_mpz_t(), z.get_mpz_t()))
      throw DomainError("coefficient " + c.get_str() + " not divisible by " + z.get_str());
    out.terms_.emplace(e, Integer(c / z));
  }
  return out;
}

Integer LaurentPoly::content() const {
  Integer g = 0;
  for (const auto& [e, c] : terms_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

LaurentPoly LaurentPoly::divide_exact(const LaurentPoly& divisor) const {
  if (divisor.is_zero()) throw DomainError("division by the zero polynomial");
  if (is_zero()) return {};
  const long dmin = divisor.min_exponent();
  const long dmax = divisor.max_exponent();
  const Integer& lead = divisor.terms_.rbegin()->second;
  LaurentPoly rem = *this;
  LaurentPoly quot;
  while (!rem.is_zero() && rem.max_exponent() - rem.min_exponent() >= dmax - dmin) {
    const long e = rem.max_exponent();
    const Integer& c = rem.terms_.rbegin()->second;
    if (!mpz_divisible_p(c.get_mpz_t(), lead.get_mpz_t()))
      throw DomainError("inexact Laurent division: " + to_string() + " / " + divisor.to_string());
    const Integer factor = c / lead;
    const long shift = e - dmax;
    quot.add_term(shift, factor);
    for (const auto& [de, dc] : divisor.terms_) rem.add_term(de + shift, -factor * dc);
  }
  if (!rem.is_zero())
    throw DomainError("inexact Laurent division: " + to_string() + " / " + divisor.to_string());
  return quot;
}

Rational LaurentPoly::evaluate(const Rational& q) const {
  if (q == 0 && !terms_.empty() && terms_.begin()->first < 0)
    throw DomainError("negative power of q evaluated at q = 0");
  Rational sum = 0;
  for (const auto& [e, c] : terms_) sum += Rational(c) * pow(q, e);
  return sum;
}

double LaurentPoly::evaluate(double q) const {
  double sum = 0.0;
  for (const auto& [e, c] : terms_) sum += c.get_d() * std::pow(q, static_cast<double>(e));
  return sum;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Integer mag = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << '*';
    os << 'q';
    if (e != 1) os << '^' << e;
  }
  return os.str();
}

// ---------------------------------------------------------------- gcd

namespace {

using Dense = std::vector<Rational>;  // index = exponent after shifting to 0

Dense to_dense(const LaurentPoly& p) {
  const long lo = p.min_exponent();
  Dense d(static_cast<std::size_t>(p.max_exponent() - lo + 1), 0);
  for (const auto& [e, c] : p.terms()) d[static_cast<std::size_t>(e - lo)] = c;
  return d;
}

void trim(Dense& d) {
  while (!d.empty() && d.back() == 0) d.pop_back();
}

Dense remainder(Dense a, const Dense& b) {
  const Rational& lead = b.back();
  while (a.size() >= b.size()) {
    const Rational f = a.back() / lead;
    const std::size_t off = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[off + i] -= f * b[i];
    a.pop_back();
    trim(a);
  }
  return a;
}

LaurentPoly primitive_from_dense(const Dense& d) {
  Integer den_lcm = 1;
  for (const auto& x : d) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), x.get_den().get_mpz_t());
  LaurentPoly p;
  for (std::size_t i = 0; i < d.size(); ++i) {
    const Rational scaled = d[i] * Rational(den_lcm);
    p += LaurentPoly::monomial(static_cast<long>(i), scaled.get_num());
  }
  p = p.divided_by(p.content());
  if (p.leading_coefficient() < 0) p = -p;
  return p.shifted(-p.min_exponent());
}

}  // namespace

LaurentPoly polynomial_gcd(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() && b.is_zero()) throw DomainError("gcd of two zero polynomials");
  if (a.is_zero()) return primitive_from_dense(to_dense(b));
  if (b.is_zero()) return primitive_from_dense(to_dense(a));
  Dense x = to_dense(a);
  Dense y = to_dense(b);
  while (!y.empty()) {
    Dense r = remainder(x, y);
    x = std::move(y);
    y = std::move(r);
  }
  return primitive_from_dense(x);
}

// ---------------------------------------------------------------- RationalFunction

RationalFunction::RationalFunction(LaurentPoly num, LaurentPoly den) {
  if (den.is_zero()) throw DomainError("rational function with zero denominator");
  if (num.is_zero()) {
    num_ = LaurentPoly(0);
    den_ = LaurentPoly(1);
    return;
  }
  const LaurentPoly g = polynomial_gcd(num, den);
  num = num.divide_exact(g);
  den = den.divide_exact(g);
  Integer c = 0;
  const Integer cn = num.content();
  const Integer cd = den.content();
  mpz_gcd(c.get_mpz_t(), cn.get_mpz_t(), cd.get_mpz_t());
  num = num.divided_by(c);
  den = den.divided_by(c);
  if (den.leading_coefficient() < 0) {
    num = -num;
    den = -den;
  }
  const long shift = -den.min_exponent();
  num_ = num.shifted(shift);
  den_ = den.shifted(shift);
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  return {a.num_ * b.num_, a.den_ * b.den_};
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
  if (b.num_.is_zero()) throw DomainError("division by the zero rational function");
  return {a.num_ * b.den_, a.den_ * b.num_};
}

Rational RationalFunction::evaluate(const Rational& q) const {
  const Rational d = den_.evaluate(q);
  if (d == 0) throw DomainError("rational function has a pole at q = " + q.get_str());
  return num_.evaluate(q) / d;
}

double RationalFunction::evaluate(double q) const { return num_.evaluate(q) / den_.evaluate(q); }

std::string RationalFunction::to_string() const {
  return "(" + num_.to_string() + ") / (" + den_.to_string() + ")";
}

}  // namespace qflag
