#pragma once

// Exact q-arithmetic: q-integers, q-Pochhammer symbols, quantum dimensions,
// Woronowicz-character exponents, torus characters and evaluation at q.

#include "laurent.hpp"
#include "repdata.hpp"
#include "rootsys.hpp"

#include <complex>
#include <span>
#include <variant>
#include <vector>

namespace qflag {

// [n]_q = (q^{-n} - q^n) / (q^{-1} - q)
LaurentPoly q_integer(long n);

// prod_{j=0}^{m-1} (1 - q^{a_exp + j t_exp})
LaurentPoly q_pochhammer(long a_exp, long t_exp, long m);

// 2(mu, rho) as an integer.
long rho_exponent(const RootSystem& rs, const Weight& mu);

// prod_{alpha>0} [(lambda+rho, alpha)]_q / [(rho, alpha)]_q
LaurentPoly quantum_dim_product(const RootSystem& rs, const Weight& lambda);

// sum_mu dim L(lambda)_mu q^{2(mu, rho)}
LaurentPoly quantum_dim_weight_sum(const RootSystem& rs, const Weight& lambda, const WeightTable& table);

struct ExponentMultiplicity {
  long exponent;
  std::int64_t multiplicity;
  bool operator==(const ExponentMultiplicity&) const = default;
};

// Diagonal of F_lambda: q^{2(mu, rho)} with the multiplicity of mu, merged by
// exponent and sorted ascending.
std::vector<ExponentMultiplicity> f_matrix_exponents(const RootSystem& rs, const WeightTable& table);

struct ExponentPair {
  long modular;  // 2(mu + nu, rho)
  long scaling;  // 2(mu - nu, rho)
  bool operator==(const ExponentPair&) const = default;
};

ExponentPair one_param_exponents(const RootSystem& rs, const Weight& mu, const Weight& nu);

// <t, mu> = prod_i t_i^{mu(h_i)}; every |t_i| must be 1 within 1e-12.
std::complex<double> torus_character(std::span<const std::complex<double>> t, const Weight& mu);

// A value of the deformation parameter: exact rational or floating point.
using QValue = std::variant<Rational, double>;

// Throws DomainError unless 0 < q < 1 (or q > 0 when allow_outside is set).
void check_q(const QValue& q, bool allow_outside = false);

using Scalar = std::variant<Rational, double>;
Scalar eval_laurent(const LaurentPoly& p, const QValue& q, bool allow_outside = false);
Scalar eval_rational_function(const RationalFunction& f, const QValue& q, bool allow_outside = false);
double to_double(const QValue& q);

}  // namespace qflag
