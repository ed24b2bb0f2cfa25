#include "classify.hpp"

#include "error.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace qflag {

// ---------------------------------------------------------------- ExactLog

std::map<Integer, long> factorize(const Integer& n) {
  if (n <= 0) throw DomainError("can only factor positive integers");
  std::map<Integer, long> out;
  Integer rest = n;
  for (unsigned long p = 2; p <= 1000000UL; p += (p == 2 ? 1 : 2)) {
    if (Integer(p) * Integer(p) > rest) break;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
      ++out[Integer(p)];
      rest /= p;
    }
  }
  if (rest > 1) {
    if (mpz_probab_prime_p(rest.get_mpz_t(), 40) == 0)
      throw DomainError("cannot factor " + n.get_str() + ": composite cofactor " + rest.get_str() + " beyond trial division");
    ++out[rest];
  }
  return out;
}

void ExactLog::add(const Integer& prime, const Rational& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = exponents_.try_emplace(prime, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) exponents_.erase(it);
  }
}

ExactLog ExactLog::of(const Rational& base, const Rational& exponent) {
  if (base <= 0) throw DomainError("logarithm of a non-positive number: " + base.get_str());
  ExactLog out;
  if (exponent == 0) return out;
  for (const auto& [p, e] : factorize(base.get_num())) out.add(p, exponent * Rational(e));
  for (const auto& [p, e] : factorize(base.get_den())) out.add(p, -exponent * Rational(e));
  return out;
}

ExactLog exact_log(const Rational& base, const Rational& exponent) { return ExactLog::of(base, exponent); }

ExactLog& ExactLog::operator+=(const ExactLog& o) {
  for (const auto& [p, r] : o.exponents_) add(p, r);
  return *this;
}

ExactLog& ExactLog::operator-=(const ExactLog& o) {
  for (const auto& [p, r] : o.exponents_) add(p, -r);
  return *this;
}

ExactLog operator*(const Rational& s, const ExactLog& a) {
  ExactLog out;
  if (s == 0) return out;
  for (const auto& [p, r] : a.exponents_) out.exponents_.emplace(p, s * r);
  return out;
}

ExactLog ExactLog::operator-() const { return Rational(-1) * *this; }

int ExactLog::sign() const {
  if (exponents_.empty()) return 0;
  Integer den_lcm = 1;
  for (const auto& [p, r] : exponents_) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), r.get_den().get_mpz_t());
  Integer up = 1;
  Integer down = 1;
  for (const auto& [p, r] : exponents_) {
    const Integer e = r.get_num() * (den_lcm / r.get_den());
    if (!e.fits_ulong_p() && !Integer(-e).fits_ulong_p()) throw DomainError("exponent too large for exact sign");
    Integer power;
    mpz_pow_ui(power.get_mpz_t(), p.get_mpz_t(), Integer(abs(e)).get_ui());
    (e > 0 ? up : down) *= power;
  }
  return up > down ? 1 : (up < down ? -1 : 0);
}

double ExactLog::to_double() const {
  double s = 0.0;
  for (const auto& [p, r] : exponents_) s += r.get_d() * std::log(p.get_d());
  return s;
}

std::string ExactLog::to_string() const {
  if (exponents_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [p, r] : exponents_) {
    const Rational mag = abs(r);
    if (first) {
      if (r < 0) os << '-';
    } else {
      os << (r < 0 ? " - " : " + ");
    }
    first = false;
    if (mag != 1) os << mag.get_str() << '*';
    os << "log(" << p.get_str() << ')';
  }
  return os.str();
}

// ---------------------------------------------------------------- lattice helpers

namespace {

// Dimension of the Q-span of the vectors.
std::size_t rational_rank(const std::vector<ExactLog>& vecs) {
  std::vector<Integer> primes;
  for (const auto& v : vecs)
    for (const auto& [p, r] : v.exponents()) primes.push_back(p);
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());

  std::vector<std::vector<Rational>> rows;
  for (const auto& v : vecs) {
    std::vector<Rational> row(primes.size(), 0);
    for (const auto& [p, r] : v.exponents())
      row[static_cast<std::size_t>(std::lower_bound(primes.begin(), primes.end(), p) - primes.begin())] = r;
    rows.push_back(std::move(row));
  }
  std::size_t rank = 0;
  for (std::size_t col = 0; col < primes.size() && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[rank]);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (rows[r][col] == 0) continue;
      const Rational f = rows[r][col] / rows[rank][col];
      for (std::size_t c = col; c < primes.size(); ++c) rows[r][c] -= f * rows[rank][c];
    }
    ++rank;
  }
  return rank;
}

Rational rational_gcd(const Rational& a, const Rational& b) {
  Integer num, den;
  const Integer x = a.get_num() * b.get_den();
  const Integer y = b.get_num() * a.get_den();
  mpz_gcd(num.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
  den = a.get_den() * b.get_den();
  Rational g(num, den);
  g.canonicalize();
  return g;
}

// x reduced modulo Z g: the representative whose coefficient ratio at the
// first prime of g lies in [0, 1).
ExactLog reduce_modulo(const ExactLog& x, const ExactLog& g) {
  const auto& [p, gp] = *g.exponents().begin();
  auto it = x.exponents().find(p);
  const Rational xp = it == x.exponents().end() ? Rational(0) : it->second;
  const Rational t = xp / gp;
  Integer n;
  mpz_fdiv_q(n.get_mpz_t(), t.get_num().get_mpz_t(), t.get_den().get_mpz_t());
  return x - Rational(n) * g;
}

}  // namespace

CanonicalSubgroup canonicalize(const std::vector<Generator>& generators) {
  std::optional<Generator> pivot;
  std::vector<ExactLog> kernel;
  for (const auto& g : generators) {
    if (g.second == 0) {
      if (!g.first.is_zero()) kernel.push_back(g.first);
      continue;
    }
    Generator cur = g;
    if (!pivot) {
      pivot = cur;
      continue;
    }
    // Unimodular Euclid steps on the second coordinates; the pair keeps
    // generating the same subgroup.
    Generator a = *pivot;
    while (cur.second != 0) {
      const long t = a.second / cur.second;
      a.first -= Rational(t) * cur.first;
      a.second -= t * cur.second;
      std::swap(a, cur);
    }
    pivot = a;
    if (!cur.first.is_zero()) kernel.push_back(cur.first);
  }
  if (pivot && pivot->second < 0) {
    pivot->first = -pivot->first;
    pivot->second = -pivot->second;
  }

  CanonicalSubgroup out;
  out.step = pivot ? pivot->second : 0;
  const std::size_t rank = rational_rank(kernel);
  if (rank == 0) {
    out.kernel = KernelKind::trivial;
  } else if (rank == 1) {
    out.kernel = KernelKind::cyclic;
    const ExactLog& dir = kernel.front();
    const auto& [p, dp] = *dir.exponents().begin();
    Rational g = 0;
    for (const auto& k : kernel) {
      auto it = k.exponents().find(p);
      const Rational ratio = (it == k.exponents().end() ? Rational(0) : it->second) / dp;
      g = (g == 0) ? Rational(abs(ratio)) : rational_gcd(g, ratio);
    }
    out.kernel_generator = g * dir;
    if (out.kernel_generator.sign() > 0) out.kernel_generator = -out.kernel_generator;
  } else {
    out.kernel = KernelKind::dense_line;
  }
  if (pivot) {
    switch (out.kernel) {
      case KernelKind::trivial: out.coset = pivot->first; break;
      case KernelKind::cyclic: out.coset = reduce_modulo(pivot->first, out.kernel_generator); break;
      case KernelKind::dense_line: out.coset = ExactLog(); break;
    }
  }
  return out;
}

bool subgroup_equal(const CanonicalSubgroup& a, const CanonicalSubgroup& b) { return a == b; }

std::vector<Generator> powers_pair_generators(const ExactLog& log_lambda, const ExactLog& log_mu) {
  return {{log_lambda, 0}, {log_mu, 1}};
}

// ---------------------------------------------------------------- actions

void validate(const ActionSpec& spec) {
  if (!(spec.q > 0 && spec.q < 1)) throw DomainError("action q must be a rational in (0,1), got " + spec.q.get_str());
  bool has_integer = false;
  bool has_half = false;
  for (const auto& b : spec.blocks) {
    if (b.spin < 0 || Rational(2 * b.spin).get_den() != 1)
      throw DomainError("spin must lie in (1/2)Z+, got " + b.spin.get_str());
    if (b.c_base <= 0) throw DomainError("density weight base must be positive, got " + b.c_base.get_str());
    (b.integer_spin() ? has_integer : has_half) = true;
  }
  if (!has_integer || !has_half)
    throw DomainError("faithfulness needs at least one integer-spin and one half-odd-integer-spin block");
}

std::vector<ExactLog> normalized_weights(const ActionSpec& spec) {
  validate(spec);
  ExactLog reference;
  for (const auto& b : spec.blocks) {
    if (b.integer_spin()) {
      reference = b.log_c();
      break;
    }
  }
  std::vector<ExactLog> out;
  for (const auto& b : spec.blocks) out.push_back(b.log_c() - reference);
  return out;
}

std::vector<Generator> invariant_group(const ActionSpec& spec) {
  const auto weights = normalized_weights(spec);
  const ExactLog log_q = exact_log(spec.q, 1);
  std::vector<Generator> out;
  for (std::size_t i = 0; i < spec.blocks.size(); ++i) {
    if (spec.blocks[i].integer_spin()) {
      out.push_back({weights[i], 0});
    } else {
      out.push_back({Rational(2) * weights[i], 0});
      out.push_back({weights[i] + log_q, 1});
    }
  }
  return out;
}

std::vector<Generator> invariant_group_full(const ActionSpec& spec) {
  const auto weights = normalized_weights(spec);
  const ExactLog log_q = exact_log(spec.q, 1);
  std::vector<Generator> out;
  for (std::size_t i = 0; i < spec.blocks.size(); ++i) {
    const long two_nu = require_integer(2 * spec.blocks[i].spin, "2 spin").get_si();
    for (long l = two_nu; l >= -two_nu; l -= 2) out.push_back({weights[i] + Rational(l) * log_q, l});
  }
  return out;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::TypeII1_PowersFlow: return "TypeII1_PowersFlow";
    case Verdict::TypeIIIlambda: return "TypeIIIlambda";
    case Verdict::TypeIII1_Unique: return "TypeIII1_Unique";
    case Verdict::OutsidePaperClassification: return "OutsidePaperClassification";
  }
  return "?";
}

std::string to_string(ModuleKind m) { return m == ModuleKind::q ? "q" : "sqrt_lambda_q"; }

std::string to_string(KernelKind k) {
  switch (k) {
    case KernelKind::trivial: return "trivial";
    case KernelKind::cyclic: return "cyclic";
    case KernelKind::dense_line: return "dense_line";
  }
  return "?";
}

ClassificationResult classify_action(const ActionSpec& spec) {
  ClassificationResult result;
  result.generators = invariant_group(spec);
  result.invariant = canonicalize(result.generators);
  const CanonicalSubgroup& g = result.invariant;
  const ExactLog log_q = exact_log(spec.q, 1);

  if (g.kernel == KernelKind::dense_line) {
    result.verdict = Verdict::TypeIII1_Unique;
  } else if (g.step == 1 && g.kernel == KernelKind::trivial && g.coset && *g.coset == log_q) {
    result.verdict = Verdict::TypeII1_PowersFlow;
  } else if (g.step == 1 && g.kernel == KernelKind::cyclic && g.coset) {
    const ExactLog& lam = g.kernel_generator;
    if (*g.coset == reduce_modulo(log_q, lam)) {
      result.verdict = Verdict::TypeIIIlambda;
      result.module = ModuleKind::q;
    } else if (*g.coset == reduce_modulo(log_q + Rational(1, 2) * lam, lam)) {
      result.verdict = Verdict::TypeIIIlambda;
      result.module = ModuleKind::sqrt_lambda_q;
    }
    if (result.module) result.log_lambda = lam;
  }
  return result;
}

}  // namespace qflag
