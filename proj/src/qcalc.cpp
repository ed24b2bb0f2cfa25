#include "qcalc.hpp"

#include "error.hpp"

#include <cmath>
#include <map>

namespace qflag {

LaurentPoly q_integer(long n) {
  if (n == 0) return {};
  if (n < 0) return -q_integer(-n);
  LaurentPoly p;
  for (long e = -(n - 1); e <= n - 1; e += 2) p += LaurentPoly::monomial(e);
  return p;
}

LaurentPoly q_pochhammer(long a_exp, long t_exp, long m) {
  if (t_exp <= 0) throw DomainError("q-Pochhammer step exponent must be positive");
  if (m < 0) throw DomainError("q-Pochhammer length must be non-negative");
  LaurentPoly p(1);
  for (long j = 0; j < m; ++j) p *= LaurentPoly(1) - LaurentPoly::monomial(a_exp + j * t_exp);
  return p;
}

long rho_exponent(const RootSystem& rs, const Weight& mu) {
  return require_integer(2 * rs.inner_product(mu, rs.weyl_vector()), "2(mu, rho)").get_si();
}

LaurentPoly quantum_dim_product(const RootSystem& rs, const Weight& lambda) {
  require_dominant(rs, lambda);
  const Weight rho = rs.weyl_vector();
  LaurentPoly num(1);
  LaurentPoly den(1);
  for (const auto& alpha : rs.positive_roots()) {
    const long top = require_integer(rs.inner_product(lambda + rho, alpha), "(lambda+rho, alpha)").get_si();
    const long bottom = require_integer(rs.inner_product(rho, alpha), "(rho, alpha)").get_si();
    if (top <= 0 || bottom <= 0) throw DomainError("non-positive root pairing in quantum dimension");
    num *= q_integer(top);
    den *= q_integer(bottom);
  }
  return num.divide_exact(den);
}

LaurentPoly quantum_dim_weight_sum(const RootSystem& rs, const Weight& lambda, const WeightTable& table) {
  if (table.highest != lambda)
    throw DomainError("weight table has highest weight " + to_string(table.highest) + ", expected " + to_string(lambda));
  LaurentPoly p;
  for (const auto& [mu, m] : table.entries) p += LaurentPoly::monomial(rho_exponent(rs, mu), Integer(static_cast<long>(m)));
  return p;
}

std::vector<ExponentMultiplicity> f_matrix_exponents(const RootSystem& rs, const WeightTable& table) {
  std::map<long, std::int64_t> merged;
  for (const auto& [mu, m] : table.entries) merged[rho_exponent(rs, mu)] += m;
  std::vector<ExponentMultiplicity> out;
  for (const auto& [e, m] : merged) out.push_back({e, m});
  return out;
}

ExponentPair one_param_exponents(const RootSystem& rs, const Weight& mu, const Weight& nu) {
  return {rho_exponent(rs, mu + nu), rho_exponent(rs, mu - nu)};
}

std::complex<double> torus_character(std::span<const std::complex<double>> t, const Weight& mu) {
  if (t.size() != mu.coords.size()) throw InvalidArgument("torus element and weight have different ranks");
  std::complex<double> out(1.0, 0.0);
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (std::abs(std::abs(t[i]) - 1.0) > 1e-12) throw DomainError("torus coordinate does not have unit modulus");
    // Integer powers of unit complex numbers, by repeated multiplication so
    // that t = 1 or t = i stays exact.
    std::complex<double> base = mu.coords[i] >= 0 ? t[i] : std::conj(t[i]);
    std::int64_t e = mu.coords[i] >= 0 ? mu.coords[i] : -mu.coords[i];
    std::complex<double> acc(1.0, 0.0);
    while (e > 0) {
      if (e & 1) acc *= base;
      base *= base;
      e >>= 1;
    }
    out *= acc;
  }
  return out;
}

double to_double(const QValue& q) {
  return std::holds_alternative<double>(q) ? std::get<double>(q) : std::get<Rational>(q).get_d();
}

void check_q(const QValue& q, bool allow_outside) {
  bool positive = false;
  bool below_one = false;
  if (const auto* r = std::get_if<Rational>(&q)) {
    positive = *r > 0;
    below_one = *r < 1;
  } else {
    const double d = std::get<double>(q);
    if (!std::isfinite(d)) throw DomainError("q must be finite");
    positive = d > 0;
    below_one = d < 1;
  }
  if (!positive) throw DomainError("q must be positive");
  if (!below_one && !allow_outside) throw DomainError("q must lie in (0,1); pass the override to evaluate elsewhere");
}

Scalar eval_laurent(const LaurentPoly& p, const QValue& q, bool allow_outside) {
  check_q(q, allow_outside);
  if (const auto* r = std::get_if<Rational>(&q)) return p.evaluate(*r);
  return p.evaluate(std::get<double>(q));
}

Scalar eval_rational_function(const RationalFunction& f, const QValue& q, bool allow_outside) {
  check_q(q, allow_outside);
  if (const auto* r = std::get_if<Rational>(&q)) return f.evaluate(*r);
  return f.evaluate(std::get<double>(q));
}

}  // namespace qflag
