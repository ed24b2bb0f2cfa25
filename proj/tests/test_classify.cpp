#include "classify.hpp"
#include "error.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace qflag;

namespace {

Rational R(long num, long den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

ExactLog L(long num, long den = 1, long enum_ = 1, long eden = 1) {
  return ExactLog::of(Rational(num, den), Rational(enum_, eden));
}

ActionBlock block(const char* spin, Rational base, Rational exp = 1) {
  ActionBlock b;
  b.spin = Rational(spin);
  b.c_base = base;
  b.c_exponent = exp;
  return b;
}

// Membership oracle for a subgroup of R x Z given by generators, numerically:
// search small integer combinations.
bool reachable(const std::vector<Generator>& gens, double x, long s, int bound, double eps) {
  std::vector<int> k(gens.size(), -bound);
  for (;;) {
    double first = 0;
    long second = 0;
    for (std::size_t i = 0; i < gens.size(); ++i) {
      first += k[i] * gens[i].first.to_double();
      second += k[i] * gens[i].second;
    }
    if (second == s && std::abs(first - x) < eps) return true;
    std::size_t i = 0;
    while (i < k.size() && ++k[i] > bound) k[i++] = -bound;
    if (i == k.size()) return false;
  }
}

}  // namespace

TEST_CASE("exact logarithms") {
  CHECK(L(1).is_zero());
  CHECK(ExactLog::of(Rational(7, 3), 0).is_zero());
  CHECK(L(4, 1, 1, 2).exponents() == ExactLog::Exponents{{Integer(2), Rational(1)}});
  CHECK(L(6).exponents() == ExactLog::Exponents{{Integer(2), Rational(1)}, {Integer(3), Rational(1)}});
  CHECK(L(1, 2) == -L(2));
  CHECK(L(6) == L(2) + L(3));
  CHECK(Rational(3) * L(2) == L(8));
  CHECK(L(1, 2).sign() < 0);
  CHECK(L(9, 8).sign() > 0);
  CHECK((L(3) - Rational(3, 2) * L(2)).sign() > 0);  // 9 > 8
  CHECK((L(2) - Rational(1, 2) * L(3)).sign() > 0);  // 4 > 3
  CHECK(L(12).to_double() == doctest::Approx(std::log(12.0)));
  CHECK(L(1, 18).to_string() == "-log(2) - 2*log(3)");
  CHECK(factorize(Integer(360)) == std::map<Integer, long>{{Integer(2), 3}, {Integer(3), 2}, {Integer(5), 1}});
  CHECK_THROWS_AS(ExactLog::of(Rational(0)), DomainError);
  CHECK_THROWS_AS(ExactLog::of(Rational(-2)), DomainError);
}

TEST_CASE("canonical forms") {
  const auto lq = L(1, 2);
  const auto g = canonicalize({{lq, 1}});
  CHECK(g.step == 1);
  CHECK(g.kernel == KernelKind::trivial);
  CHECK(g.coset == lq);

  const auto pair = canonicalize(powers_pair_generators(L(1, 4), L(1, 2)));
  CHECK(pair.step == 1);
  CHECK(pair.kernel == KernelKind::cyclic);
  CHECK(pair.kernel_generator == L(1, 4));
  CHECK(pair.coset == L(1, 2));

  const auto dense = canonicalize({{L(2), 0}, {L(3), 0}});
  CHECK(dense.step == 0);
  CHECK(dense.kernel == KernelKind::dense_line);
  CHECK_FALSE(dense.coset);

  // step 2 from (a, 2) and (b, 4)
  const auto even = canonicalize({{L(2), 2}, {L(3), 4}});
  CHECK(even.step == 2);
  CHECK(even.kernel == KernelKind::cyclic);

  CHECK(canonicalize({}).step == 0);
  CHECK(canonicalize({}).kernel == KernelKind::trivial);
}

TEST_CASE("subgroup equality") {
  const auto lam = L(1, 5), mu = L(2, 7);
  CHECK(subgroup_equal(canonicalize(powers_pair_generators(lam, mu)), canonicalize(powers_pair_generators(lam, lam + mu))));
  CHECK(subgroup_equal(canonicalize(powers_pair_generators(lam, mu)), canonicalize(powers_pair_generators(-lam, mu - lam))));
  CHECK_FALSE(subgroup_equal(canonicalize({{L(1, 3), 1}}), canonicalize({{L(1, 9), 1}})));
  CHECK_FALSE(subgroup_equal(canonicalize(powers_pair_generators(L(1, 4), L(1, 2))), canonicalize(powers_pair_generators(L(1, 2), L(1, 2)))));
  // a duplicate generator changes nothing
  auto gens = powers_pair_generators(lam, mu);
  const auto before = canonicalize(gens);
  gens.push_back(gens[1]);
  gens.push_back({Rational(3) * lam, 0});
  CHECK(canonicalize(gens) == before);
}

TEST_CASE("random pairs: G(lambda, mu) == G(lambda, lambda mu)") {
  std::mt19937 rng(2024);
  std::uniform_int_distribution<long> num(1, 30), den(1, 30), power(-3, 3);
  for (int trial = 0; trial < 50; ++trial) {
    const auto lam = L(num(rng), den(rng));
    const auto mu = L(num(rng), den(rng));
    const long k = power(rng);
    const auto a = canonicalize(powers_pair_generators(lam, mu));
    const auto b = canonicalize(powers_pair_generators(lam, Rational(k) * lam + mu));
    CAPTURE(lam.to_string());
    CAPTURE(mu.to_string());
    CHECK(subgroup_equal(a, b));
    // the canonical generators lie in the group and generate it back
    if (a.kernel != KernelKind::dense_line) {
      std::vector<Generator> back{{*a.coset, a.step}};
      if (a.kernel == KernelKind::cyclic) back.push_back({a.kernel_generator, 0});
      CHECK(canonicalize(back) == a);
      const auto orig = powers_pair_generators(lam, mu);
      CHECK(reachable(orig, a.coset->to_double(), a.step, 4, 1e-9));
      for (const auto& g : orig) CHECK(reachable(back, g.first.to_double(), g.second, 40, 1e-9));
    }
  }
}

TEST_CASE("dense kernel is an epsilon-net") {
  const std::vector<Generator> gens{{L(2), 0}, {L(3), 0}};
  REQUIRE(canonicalize(gens).kernel == KernelKind::dense_line);
  const double l2 = std::log(2.0), l3 = std::log(3.0);
  for (double t = -1; t <= 1; t += 0.125) {
    double best = 1e9;
    for (long a = -60; a <= 60; ++a) {
      const double b = std::round((t - a * l2) / l3);
      best = std::min(best, std::abs(a * l2 + b * l3 - t));
    }
    CHECK(best < 0.02);
  }
}

TEST_CASE("action specs") {
  ActionSpec spec{Rational(1, 2), {block("0", 1), block("1/2", 1)}};
  CHECK_NOTHROW(validate(spec));
  const auto r = classify_action(spec);
  CHECK(r.verdict == Verdict::TypeII1_PowersFlow);
  CHECK(r.invariant.coset == L(1, 2));
  const auto gens = invariant_group(spec);
  REQUIRE(gens.size() == 3);
  CHECK(gens[0] == Generator{ExactLog(), 0});
  CHECK(gens[2] == Generator{L(1, 2), 1});

  // scaling every weight by a common factor is invisible
  ActionSpec scaled{Rational(1, 2), {block("0", 5), block("1/2", 5)}};
  CHECK(classify_action(scaled).invariant == r.invariant);

  ActionSpec none{Rational(1, 2), {block("0", 1)}};
  CHECK_THROWS_AS(validate(none), DomainError);
  ActionSpec halves{Rational(1, 2), {block("1/2", 1), block("3/2", 1)}};
  CHECK_THROWS_AS(validate(halves), DomainError);
  ActionSpec bad_base{Rational(1, 2), {block("0", 0), block("1/2", 1)}};
  CHECK_THROWS_AS(validate(bad_base), DomainError);
  ActionSpec bad_spin{Rational(1, 2), {block("0", 1), block("1/3", 1)}};
  CHECK_THROWS_AS(validate(bad_spin), DomainError);
  ActionSpec bad_q{Rational(3, 2), {block("0", 1), block("1/2", 1)}};
  CHECK_THROWS_AS(validate(bad_q), DomainError);
}

TEST_CASE("type III_lambda: both modules") {
  const Rational q(1, 3), lambda(1, 4);
  for (const auto& [eps, module] : {std::pair{Rational(0), ModuleKind::q}, std::pair{Rational(1, 2), ModuleKind::sqrt_lambda_q}}) {
    ActionSpec spec{q, {block("0", 1), block("0", lambda), block("1/2", lambda, eps)}};
    const auto r = classify_action(spec);
    CHECK(r.verdict == Verdict::TypeIIIlambda);
    REQUIRE(r.module);
    CHECK(*r.module == module);
    REQUIRE(r.log_lambda);
    CHECK(*r.log_lambda == L(1, 4));
    CHECK(r.invariant.kernel == KernelKind::cyclic);
  }
}

TEST_CASE("full and reduced generator sets give the same group") {
  std::mt19937 rng(77);
  std::uniform_int_distribution<long> num(1, 12), spin2(0, 5);
  for (int trial = 0; trial < 40; ++trial) {
    ActionSpec spec;
    spec.q = Rational(1, 2 + static_cast<long>(trial % 5));
    spec.blocks.push_back(block("0", 1));
    spec.blocks.push_back(block("1/2", R(num(rng), num(rng))));
    for (int k = 0; k < 2; ++k) {
      ActionBlock b;
      b.spin = R(spin2(rng), 2);
      b.c_base = R(num(rng), num(rng));
      spec.blocks.push_back(b);
    }
    CHECK(canonicalize(invariant_group(spec)) == canonicalize(invariant_group_full(spec)));
    const auto r = classify_action(spec);
    CHECK(r.verdict != Verdict::OutsidePaperClassification);
  }
}

TEST_CASE("dense invariant gives III_1") {
  ActionSpec spec{Rational(1, 2), {block("0", 1), block("1", 2), block("2", 3), block("1/2", 1)}};
  const auto r = classify_action(spec);
  CHECK(r.verdict == Verdict::TypeIII1_Unique);
  CHECK(r.invariant.kernel == KernelKind::dense_line);
  CHECK_FALSE(r.module);
}
