#include "oracles.hpp"

#include "error.hpp"
#include "soibelman.hpp"

#include <doctest.h>

#include <cstdlib>

using namespace qflag;

namespace {

Weight w(std::initializer_list<std::int64_t> c) { return Weight(std::vector<std::int64_t>(c)); }

std::vector<Weight> regular_box(int rank, int bound) {
  std::vector<Weight> out;
  Weight x(std::vector<std::int64_t>(static_cast<std::size_t>(rank), 1));
  for (;;) {
    out.push_back(x);
    int i = 0;
    while (i < rank && ++x.coords[static_cast<std::size_t>(i)] > bound) x.coords[static_cast<std::size_t>(i++)] = 1;
    if (i == rank) break;
  }
  return out;
}

// (lambda, beta_l) with beta_l = s_ik ... s_i(l+1) alpha_il, via the oracle's matrices and form.
std::vector<long> oracle_exponents(const RootSystem& rs, const Weight& lambda, const WeylWord& word) {
  const auto series = static_cast<char>(rs.type().series);
  const auto a = oracle::cartan(series, rs.rank());
  const auto g = oracle::gram(a, oracle::symmetrizers(series, rs.rank()));
  std::vector<long> out;
  for (std::size_t l = 0; l < word.length(); ++l) {
    oracle::Vec beta = oracle::simple_root(a, word.letters[l]);
    for (std::size_t m = l + 1; m < word.length(); ++m) beta = oracle::apply(oracle::reflection(a, word.letters[m]), beta);
    out.push_back(std::lround(oracle::inner(g, lambda.coords, beta)));
  }
  return out;
}

// Brute-force max over the truncated grid of q^{ms} - q^{ns}.
double oracle_gap(const std::vector<long>& e, int trunc, double q, long m, long n) {
  std::vector<int> k(e.size(), 0);
  double best = 0;
  for (;;) {
    long s = 0;
    for (std::size_t i = 0; i < e.size(); ++i) s += e[i] * k[i];
    best = std::max(best, std::pow(q, static_cast<double>(m * s)) - std::pow(q, static_cast<double>(n * s)));
    std::size_t i = 0;
    while (i < k.size() && ++k[i] >= trunc) k[i++] = 0;
    if (i == k.size()) break;
  }
  return best;
}

}  // namespace

TEST_CASE("SU_q(2) generator matrices") {
  const double q = 0.5;
  const auto g = su2_generators(q, 8);
  for (int k = 0; k < 8; ++k) {
    CHECK(g.u.matrix(k, k) == doctest::Approx(std::pow(q, k)));
    CHECK(g.v.matrix(k, k) == doctest::Approx(-std::pow(q, k + 1)));
  }
  CHECK(g.x.matrix(1, 0) == doctest::Approx(std::sqrt(1 - q * q)));
  for (char c : {'x', 'u', 'v', 'y'}) {
    const auto gen = c == 'x' ? Su2Generator::x : c == 'u' ? Su2Generator::u : c == 'v' ? Su2Generator::v : Su2Generator::y;
    CHECK((su2_generator(gen, q, 8).matrix - oracle::su2(c, q, 8)).cwiseAbs().maxCoeff() == 0.0);
  }
  CHECK((g.y.matrix - g.x.matrix.transpose()).cwiseAbs().maxCoeff() == 0.0);
  CHECK_THROWS_AS(su2_generator(Su2Generator::x, 1.5, 8), DomainError);
  CHECK_THROWS_AS(su2_generator(Su2Generator::x, 0.5, 1), DomainError);
}

TEST_CASE("shift identities and unitarity on interior vectors") {
  for (double q : {0.2, 0.5, 0.9}) {
    const int n = 32;
    const auto g = su2_generators(q, n);
    const Eigen::MatrixXd xxs = g.x.matrix * g.x.matrix.transpose();
    const Eigen::MatrixXd xsx = g.x.matrix.transpose() * g.x.matrix;
    const Eigen::MatrixXd uus = g.u.matrix * g.u.matrix.transpose();
    const Eigen::MatrixXd vsv = g.v.matrix.transpose() * g.v.matrix;
    for (int k = 0; k < n - 1; ++k) {
      CHECK(xxs(k, k) == doctest::Approx(1 - std::pow(q, 2 * k)));
      CHECK(xsx(k, k) == doctest::Approx(1 - std::pow(q, 2 * k + 2)));
      CHECK(xxs(k, k) + uus(k, k) == doctest::Approx(1.0));
      CHECK(xsx(k, k) + vsv(k, k) == doctest::Approx(1.0));
    }
    CHECK(su2_shift_identity_violation(q, n) < 1e-12);
  }
}

TEST_CASE("diagonal model exponents") {
  const RootSystem a1(LieType::parse("A1"));
  const auto m1 = diagonal_model(a1, w({1}), WeylWord{{1}}, Rational(1, 2), 16);
  CHECK(m1.exponents == std::vector<long>{1});
  CHECK(m1.regular);

  const RootSystem a2(LieType::parse("A2"));
  const auto m2 = diagonal_model(a2, a2.weyl_vector(), WeylWord{{1, 2, 1}}, Rational(1, 2));
  CHECK(m2.exponents == std::vector<long>{1, 2, 1});
  const auto m0 = diagonal_model(a2, w({0, 0}), WeylWord{{1, 2, 1}}, Rational(1, 2));
  CHECK(m0.exponents == std::vector<long>{0, 0, 0});
  CHECK_FALSE(m0.regular);

  for (const char* name : {"A2", "A3", "B2", "G2", "C3", "B3"}) {
    const RootSystem rs(LieType::parse(name));
    for (const auto& lambda : regular_box(rs.rank(), 2)) {
      const auto model = diagonal_model(rs, lambda, rs.w0_word(), Rational(1, 2));
      CAPTURE(name);
      CHECK(model.exponents == oracle_exponents(rs, lambda, rs.w0_word()));
      for (std::size_t l = 0; l < model.factors(); ++l) {
        CHECK(model.exponents[l] > 0);
        CHECK(model.exponents[l] == model.coroot_exponents[l] * rs.symmetrizers()[static_cast<std::size_t>(rs.w0_word().letters[l] - 1)]);
      }
    }
  }
}

TEST_CASE("diagonal model preconditions") {
  const RootSystem a2(LieType::parse("A2"));
  CHECK_THROWS_AS(diagonal_model(a2, w({1, 1}), WeylWord{{1, 1}}, Rational(1, 2)), DomainError);
  CHECK_THROWS_AS(diagonal_model(a2, w({-1, 1}), a2.w0_word(), Rational(1, 2)), DomainError);
  CHECK_THROWS_AS(diagonal_model(a2, w({1, 1}), a2.w0_word(), Rational(2)), DomainError);
  const auto singular = diagonal_model(a2, w({1, 0}), a2.w0_word(), Rational(1, 2));
  CHECK_THROWS_AS(power_norm_gap(singular, 1, 2), DomainError);
  CHECK_THROWS_AS(projection_gap(singular, 1), DomainError);
  const auto regular = diagonal_model(a2, w({1, 1}), a2.w0_word(), Rational(1, 2));
  CHECK_THROWS_AS(power_norm_gap(regular, 3, 2), DomainError);
}

TEST_CASE("norm gaps") {
  const RootSystem a1(LieType::parse("A1"));
  const auto m1 = diagonal_model(a1, w({1}), WeylWord{{1}}, Rational(1, 2));
  CHECK(power_norm_gap(m1, 1, 2) == doctest::Approx(0.25));
  CHECK(power_norm_gap(m1, 3, 3) == 0.0);
  CHECK(projection_gap(m1, 3) == doctest::Approx(0.125));

  for (const char* name : {"A2", "B2", "G2"}) {
    const RootSystem rs(LieType::parse(name));
    for (const auto& lambda : regular_box(rs.rank(), 2)) {
      for (double q : {0.5, 0.9}) {
        const int trunc = rs.type().series == Series::G ? 4 : 6;
        const auto model = diagonal_model(rs, lambda, rs.w0_word(), q, trunc);
        for (long m = 1; m <= 8; ++m) {
          for (long n = m; n <= 8; ++n) {
            const double gap = power_norm_gap(model, m, n);
            CHECK(gap == doctest::Approx(oracle_gap(model.exponents, trunc, q, m, n)).epsilon(1e-12));
            CHECK(gap <= std::pow(q, static_cast<double>(m)));
          }
          CHECK(projection_gap(model, m) <= std::pow(q, static_cast<double>(m)));
          CHECK(projection_gap(model, m) >= power_norm_gap(model, m, 8));
        }
      }
    }
  }
}

TEST_CASE("spectrum multiplicities are lattice counts") {
  const RootSystem a1(LieType::parse("A1"));
  const auto s1 = spectrum(diagonal_model(a1, w({1}), WeylWord{{1}}, Rational(1, 2)), 1.0 / 1024);
  CHECK(s1.size() == 11);
  for (std::size_t k = 0; k < s1.size(); ++k) {
    CHECK(s1[k].exponent == static_cast<long>(k));
    CHECK(s1[k].multiplicity == 1);
  }

  const RootSystem a2(LieType::parse("A2"));
  const auto m2 = diagonal_model(a2, a2.weyl_vector(), a2.w0_word(), Rational(1, 2));
  CHECK(lattice_counts(m2, 2)[2] == 4);

  for (const char* name : {"A2", "A3", "B2", "G2"}) {
    const RootSystem rs(LieType::parse(name));
    for (const auto& lambda : regular_box(rs.rank(), 2)) {
      const auto model = diagonal_model(rs, lambda, rs.w0_word(), Rational(1, 2));
      const auto counts = lattice_counts(model, 12);
      for (long s = 0; s <= 12; ++s) CHECK(counts[static_cast<std::size_t>(s)] == oracle::lattice_count(model.exponents, s));
      CHECK(counts[0] == 1);
      const auto spec = spectrum(model, std::pow(0.5, 12));
      for (const auto& e : spec) {
        CHECK(e.multiplicity == counts[static_cast<std::size_t>(e.exponent)]);
        CHECK(e.value == doctest::Approx(std::pow(0.5, e.exponent)));
      }
      const auto units = unit_eigenvectors(model);
      REQUIRE(units.size() == 1);
      CHECK(units[0] == std::vector<int>(model.factors(), 0));
    }
  }
  const auto singular = diagonal_model(a2, w({1, 0}), a2.w0_word(), Rational(1, 2), 4);
  CHECK(unit_eigenvectors(singular).size() > 1);
}

TEST_CASE("commutation with |a_Lambda| on SU_q(2)") {
  for (long c : {0L, 1L, 2L, 3L}) {
    const double q = 0.5;
    const int n = 32;
    const auto report = commutation_check(q, n, c);
    CHECK(report.max_violation < 1e-12);
    CHECK(report.ux_violation < 1e-12);
    // oracle: the exponent e with g |a| = q^e |a| g on interior columns, found by search
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
    for (int k = 0; k < n; ++k) a(k, k) = std::pow(q, static_cast<double>(c * k));
    for (const auto& entry : report.entries) {
      const Eigen::MatrixXd g = oracle::su2(generator_letter(entry.generator), q, n);
      long found = 99;
      for (long e = -4; e <= 4; ++e) {
        const Eigen::MatrixXd diff = g * a - std::pow(q, static_cast<double>(e)) * a * g;
        if (diff.leftCols(n - 1).cwiseAbs().maxCoeff() < 1e-12) {
          found = e;
          break;
        }
      }
      if (c == 0) CHECK(entry.exponent == 0);
      else CHECK(entry.exponent == found);
    }
  }
  const auto r = commutation_check(0.5, 32, 1);
  std::map<char, long> exps;
  for (const auto& e : r.entries) exps[generator_letter(e.generator)] = e.exponent;
  CHECK(exps == std::map<char, long>{{'x', -1}, {'u', 0}, {'v', 0}, {'y', 1}});
}

TEST_CASE("truncation policy") {
  CHECK(truncation_tolerance(0.5, 32) == 1e-12);
  CHECK(truncation_tolerance(0.9, 32) == doctest::Approx(10 * std::pow(0.9, 64)));
  unsetenv("QFLAG_TRUNC_N");
  CHECK(default_truncation() == kDefaultTruncation);
  setenv("QFLAG_TRUNC_N", "48", 1);
  CHECK(default_truncation() == 48);
  setenv("QFLAG_TRUNC_N", "junk", 1);
  CHECK(default_truncation() == kDefaultTruncation);
  unsetenv("QFLAG_TRUNC_N");
}
