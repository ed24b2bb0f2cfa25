#pragma once

// Closed-subgroup invariant of SU_q(2) product-type actions.
//
// All logarithms are exact: a positive rational raised to a rational power is
// stored as sum_p r_p log p over primes p. Logs of distinct primes are
// linearly independent over Q, so subgroup questions in R reduce to lattice
// computations in Q^{primes}.

#include "rational.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace qflag {

class ExactLog {
public:
  using Exponents = std::map<Integer, Rational>;  // prime -> coefficient

  ExactLog() = default;
  // log(base^exponent); base must be a positive rational.
  static ExactLog of(const Rational& base, const Rational& exponent = 1);

  const Exponents& exponents() const { return exponents_; }
  bool is_zero() const { return exponents_.empty(); }

  ExactLog& operator+=(const ExactLog& o);
  ExactLog& operator-=(const ExactLog& o);
  friend ExactLog operator+(ExactLog a, const ExactLog& b) { return a += b; }
  friend ExactLog operator-(ExactLog a, const ExactLog& b) { return a -= b; }
  friend ExactLog operator*(const Rational& s, const ExactLog& a);
  ExactLog operator-() const;
  bool operator==(const ExactLog&) const = default;

  // Exact sign of the real number sum_p r_p log p.
  int sign() const;
  double to_double() const;
  // e.g. "log(2) - 1/2*log(3)"
  std::string to_string() const;

private:
  void add(const Integer& prime, const Rational& coeff);
  Exponents exponents_;
};

// Prime factorization of a positive integer (trial division followed by a
// probable-prime test on the cofactor). Throws DomainError if a cofactor
// cannot be split.
std::map<Integer, long> factorize(const Integer& n);

ExactLog exact_log(const Rational& base, const Rational& exponent);

struct Generator {
  ExactLog first;
  long second = 0;
  bool operator==(const Generator&) const = default;
};

enum class KernelKind { trivial, cyclic, dense_line };

struct CanonicalSubgroup {
  long step = 0;              // second-coordinate projection is step * Z
  KernelKind kernel = KernelKind::trivial;
  ExactLog kernel_generator;  // cyclic only; normalized to a negative real value
  std::optional<ExactLog> coset;  // first coordinate over `step`, reduced modulo the kernel
  bool operator==(const CanonicalSubgroup&) const = default;
};

CanonicalSubgroup canonicalize(const std::vector<Generator>& generators);
bool subgroup_equal(const CanonicalSubgroup& a, const CanonicalSubgroup& b);

// G_{lambda, mu} = Z(log lambda, 0) + Z(log mu, 1)
std::vector<Generator> powers_pair_generators(const ExactLog& log_lambda, const ExactLog& log_mu);

// ---------------------------------------------------------------- actions

struct ActionBlock {
  Rational spin;  // in (1/2) Z+
  Rational c_base = 1;
  Rational c_exponent = 1;
  ExactLog log_c() const { return exact_log(c_base, c_exponent); }
  bool integer_spin() const { return mpz_divisible_p(spin.get_num_mpz_t(), spin.get_den_mpz_t()) != 0; }
};

struct ActionSpec {
  Rational q;
  std::vector<ActionBlock> blocks;
};

// Throws DomainError unless q in (0,1), spins are half-integers >= 0, and both
// an integer-spin and a half-odd-integer-spin block are present.
void validate(const ActionSpec& spec);

// Weights c with the first integer-spin block scaled to 1 (the density is
// only defined up to a positive scalar).
std::vector<ExactLog> normalized_weights(const ActionSpec& spec);

// (log c_e, 0) per integer-spin block; (2 log c_o, 0), (log(c_o q), 1) per
// half-odd-integer-spin block.
std::vector<Generator> invariant_group(const ActionSpec& spec);

// All (log(c q^l), l), l = 2nu, 2nu-2, ..., -2nu, over every block.
std::vector<Generator> invariant_group_full(const ActionSpec& spec);

enum class Verdict { TypeII1_PowersFlow, TypeIIIlambda, TypeIII1_Unique, OutsidePaperClassification };
enum class ModuleKind { q, sqrt_lambda_q };

std::string to_string(Verdict v);
std::string to_string(ModuleKind m);
std::string to_string(KernelKind k);

struct ClassificationResult {
  Verdict verdict = Verdict::OutsidePaperClassification;
  CanonicalSubgroup invariant;
  std::vector<Generator> generators;
  std::optional<ExactLog> log_lambda;  // TypeIIIlambda only
  std::optional<ModuleKind> module;    // TypeIIIlambda only
};

ClassificationResult classify_action(const ActionSpec& spec);

}  // namespace qflag
