#include "oracles.hpp"

#include "error.hpp"
#include "haar.hpp"
#include "repdata.hpp"

#include <doctest.h>

#include <random>

using namespace qflag;

namespace {

Weight w(std::initializer_list<std::int64_t> c) { return Weight(std::vector<std::int64_t>(c)); }

LaurentPoly P(std::initializer_list<std::pair<long, long>> terms) {
  std::vector<std::pair<long, Integer>> t;
  for (const auto& [e, c] : terms) t.emplace_back(e, Integer(c));
  return LaurentPoly::from_terms(t);
}

std::vector<Weight> box(int rank, int bound) {
  std::vector<Weight> out;
  Weight x = Weight::zero(rank);
  for (;;) {
    out.push_back(x);
    int i = 0;
    while (i < rank && ++x.coords[static_cast<std::size_t>(i)] > bound) x.coords[static_cast<std::size_t>(i++)] = 0;
    if (i == rank) break;
  }
  return out;
}

struct OracleData {
  oracle::WeylGroup group;
  Eigen::MatrixXd gram;
  std::set<oracle::Vec> roots;
  explicit OracleData(const RootSystem& rs)
      : group(oracle::cartan(static_cast<char>(rs.type().series), rs.rank())),
        gram(oracle::gram(group.cartan, oracle::symmetrizers(static_cast<char>(rs.type().series), rs.rank()))),
        roots(oracle::positive_roots(group)) {}
};

}  // namespace

TEST_CASE("h(p0)") {
  CHECK(haar_p0(RootSystem(LieType::parse("A1"))) == P({{0, 1}, {2, -1}}));
  CHECK(haar_p0(RootSystem(LieType::parse("A2"))) == P({{0, 1}, {2, -1}}) * P({{0, 1}, {2, -1}}) * P({{0, 1}, {4, -1}}));
  for (int n = 2; n <= 5; ++n) {
    LaurentPoly expected(1);
    for (int j = 1; j < n; ++j) expected *= q_pochhammer(2, 2, j);
    CHECK(haar_p0(RootSystem(LieType::make('A', n - 1))) == expected);
  }
  for (const char* name : {"A1", "A2", "A3", "B2", "G2", "C3", "F4"}) {
    const RootSystem rs(LieType::parse(name));
    const OracleData o(rs);
    const oracle::Vec rho(static_cast<std::size_t>(rs.rank()), 1);
    const double q = 0.61;
    double expected = 1;
    for (const auto& alpha : o.roots) expected *= 1 - std::pow(q, 2 * oracle::inner(o.gram, alpha, rho));
    CAPTURE(name);
    const auto p = haar_p0(rs);
    CHECK(p.evaluate(q) == doctest::Approx(expected).epsilon(1e-12));
    CHECK(p.evaluate(Rational(0)) == 1);
  }
}

TEST_CASE("h(|a_lambda|^2) by both formulas") {
  const RootSystem a1(LieType::parse("A1"));
  const auto zero = haar_a_lambda_sq(a1, w({0}));
  CHECK(zero.equal);
  CHECK(zero.via_product == RationalFunction(LaurentPoly(1)));
  const auto h = haar_a_lambda_sq(a1, w({1}));
  CHECK(h.equal);
  CHECK(h.via_product == RationalFunction(LaurentPoly(1), P({{0, 1}, {2, 1}})));
  CHECK(h.via_product.evaluate(Rational(1, 2)) == Rational(4, 5));

  for (const char* name : {"A1", "A2", "A3", "B2", "G2"}) {
    const RootSystem rs(LieType::parse(name));
    const OracleData o(rs);
    const oracle::Vec rho(static_cast<std::size_t>(rs.rank()), 1);
    for (const auto& lambda : box(rs.rank(), 2)) {
      CAPTURE(name);
      CAPTURE(to_string(lambda));
      const auto r = haar_a_lambda_sq(rs, lambda);
      CHECK(r.equal);
      CHECK(r.via_product == r.via_orthogonality);
      const double q = 0.45;
      oracle::Vec lr = lambda.coords;
      for (auto& x : lr) ++x;
      double dens = haar_p0(rs).evaluate(q);
      for (const auto& alpha : o.roots) dens /= 1 - std::pow(q, 2 * oracle::inner(o.gram, lr, alpha));
      const double ortho = 1 / (oracle::qdim_ratio(o.group, o.gram, lambda.coords, q) * std::pow(q, 2 * oracle::inner(o.gram, lambda.coords, rho)));
      CHECK(r.via_product.evaluate(q) == doctest::Approx(dens).epsilon(1e-10));
      CHECK(r.via_orthogonality.evaluate(q) == doctest::Approx(ortho).epsilon(1e-10));
    }
  }
  CHECK_THROWS_AS(haar_a_lambda_sq(a1, w({-1})), DomainError);
}

TEST_CASE("diagonal masses") {
  const RootSystem a1(LieType::parse("A1"));
  for (long m = 0; m < 5; ++m) {
    const std::vector<long> idx{m};
    CHECK(haar_diag_mass(a1, idx) == P({{2 * m, 1}, {2 * m + 2, -1}}));
  }
  const RootSystem b2(LieType::parse("B2"));
  const std::vector<long> zeros(4, 0);
  CHECK(haar_diag_mass(b2, zeros) == haar_p0(b2));
  const std::vector<long> short_m{1, 2};
  CHECK_THROWS_AS(haar_diag_mass(b2, short_m), DomainError);
  const std::vector<long> negative{0, -1, 0, 0};
  CHECK_THROWS_AS(haar_diag_mass(b2, negative), DomainError);

  const auto datum = haar_datum(b2, Rational(1, 2));
  std::mt19937 rng(1);
  std::uniform_int_distribution<long> idx(0, 5);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<long> m(4);
    for (auto& x : m) x = idx(rng);
    long shift = 0;
    for (std::size_t l = 0; l < 4; ++l) shift += m[l] * datum.density_exponents[l];
    CHECK(haar_diag_mass(b2, m) == haar_p0(b2).shifted(shift));
  }
}

TEST_CASE("grid sums: brute force, factorized and closed form") {
  for (const char* name : {"A1", "A2", "B2"}) {
    const RootSystem rs(LieType::parse(name));
    const auto datum = haar_datum(rs, Rational(1, 2));
    for (double q : {0.5, 0.9}) {
      for (int n : {4, 9, 32}) {
        double closed = 1;
        for (long c : datum.density_exponents) closed *= 1 - std::pow(q, static_cast<double>(c * n));
        CHECK(diag_mass_grid_sum(rs, q, n) == doctest::Approx(closed).epsilon(1e-12));
        CHECK(diag_mass_grid_sum_factorized(rs, q, n) == doctest::Approx(closed).epsilon(1e-12));
        const double k = static_cast<double>(rs.positive_roots().size());
        CHECK(std::abs(diag_mass_grid_sum(rs, q, n) - 1) <= k * std::pow(q, 2.0 * n) + 1e-12);
      }
    }
  }
  CHECK_THROWS_AS(diag_mass_grid_sum(RootSystem(LieType::parse("F4")), 0.5, 32), DomainError);
}

TEST_CASE("exact grid total equals the sum of the masses") {
  for (const char* name : {"A1", "A2", "B2"}) {
    const RootSystem rs(LieType::parse(name));
    const std::size_t k = rs.positive_roots().size();
    for (int n : {1, 3, 5}) {
      LaurentPoly direct;
      std::vector<long> m(k, 0);
      for (;;) {
        direct += haar_diag_mass(rs, m);
        std::size_t i = 0;
        while (i < k && ++m[i] >= n) m[i++] = 0;
        if (i == k) break;
      }
      CAPTURE(name);
      CHECK(diag_mass_grid_total(rs, n) == direct);
    }
    // 1 - total = 1 - prod(1 - q^{c N}) exactly
    const auto datum = haar_datum(rs, Rational(1, 2));
    LaurentPoly closed(1);
    for (long c : datum.density_exponents) closed *= LaurentPoly(1) - LaurentPoly::monomial(c * 7, Integer(1));
    CHECK(diag_mass_grid_total(rs, 7) == closed);
  }
}

TEST_CASE("SU_q(2) words") {
  const auto word = parse_su2_word("x x*");
  REQUIRE(word.size() == 2);
  CHECK(word[0] == Su2Letter{Su2Generator::x, false});
  CHECK(word[1] == Su2Letter{Su2Generator::x, true});
  const auto compact = parse_su2_word("u*u");
  REQUIRE(compact.size() == 2);
  CHECK(compact[0] == Su2Letter{Su2Generator::u, true});
  CHECK(compact[1] == Su2Letter{Su2Generator::u, false});
  CHECK(parse_su2_word("").empty());
  CHECK(format_su2_word(compact) == "u* u");
  CHECK(parse_su2_word(format_su2_word(word)) == word);
  CHECK_THROWS_AS(parse_su2_word("x z"), InvalidArgument);
  CHECK_THROWS_AS(parse_su2_word("*x"), InvalidArgument);
}

TEST_CASE("SU_q(2) Haar values") {
  for (double q : {1.0 / 3.0, 0.5, 0.8}) {
    const int n = 64;
    const double tol = std::max(1e-12, 10 * std::pow(q, 2.0 * n));
    CHECK(su2_haar_eval("", q, n).value == doctest::Approx(1.0).epsilon(tol));
    CHECK(su2_haar_eval("x", q, n).value == 0.0);
    CHECK(su2_haar_eval("x x*", q, n).value == doctest::Approx(q * q / (1 + q * q)).epsilon(tol));
    CHECK(su2_haar_eval("u* u", q, n).value == doctest::Approx(1 / (1 + q * q)).epsilon(tol));
    CHECK(su2_haar_eval("u u*", q, n).value == doctest::Approx(1 / (1 + q * q)).epsilon(tol));
    CHECK(su2_haar_eval("x* x", q, n).value == doctest::Approx(1 / (1 + q * q)).epsilon(tol));
    CHECK(su2_haar_eval("v v*", q, n).value == doctest::Approx(q * q / (1 + q * q)).epsilon(tol));
    CHECK(su2_haar_eval("x u*", q, n).value == 0.0);
    CHECK(su2_haar_eval("x* x", q, n).weight == 0);
    CHECK(su2_haar_eval("x u", q, n).weight == 2);
  }
  CHECK_THROWS_AS(su2_haar_eval("x", 0.5, 4), DomainError);
  CHECK_THROWS_AS(su2_haar_eval("x", 1.0, 16), DomainError);
}

TEST_CASE("SU_q(2) Haar values match the plain trace oracle on random words") {
  std::mt19937 rng(21);
  std::uniform_int_distribution<int> len(0, 6), letter(0, 3), adj(0, 1);
  const char letters[] = {'x', 'u', 'v', 'y'};
  const Su2Generator gens[] = {Su2Generator::x, Su2Generator::u, Su2Generator::v, Su2Generator::y};
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<Su2Letter> word;
    std::vector<std::pair<char, bool>> plain;
    for (int k = len(rng); k > 0; --k) {
      const int g = letter(rng);
      const bool a = adj(rng) == 1;
      word.push_back({gens[g], a});
      plain.emplace_back(letters[g], a);
    }
    const double q = 0.6;
    const auto v = su2_haar_eval(word, q, 48);
    CAPTURE(format_su2_word(word));
    CHECK(v.value == doctest::Approx(oracle::su2_haar(plain, q, 48)).epsilon(1e-12));
    CHECK(v.tail_bound <= std::pow(q, 2 * 48) * std::pow(2.0, static_cast<double>(word.size())) + 1e-300);
  }
}

TEST_CASE("SU_q(2) orthogonality relations") {
  for (double q : {1.0 / 3.0, 0.5, 0.8}) {
    const auto report = su2_orthogonality_suite(q, 64);
    CHECK(report.entries.size() == 32);
    CHECK(report.max_deviation < 1e-10);
    // independent prediction: generator positions x=(1,1), u=(1,2), v=(2,1), y=(2,2), F = diag(q, 1/q)
    const std::map<char, std::pair<int, int>> pos{{'x', {1, 1}}, {'u', {1, 2}}, {'v', {2, 1}}, {'y', {2, 2}}};
    const double f[3] = {0, q, 1 / q};
    const double dim = q + 1 / q;
    for (const auto& e : report.entries) {
      const auto letters = parse_su2_word(e.word);
      REQUIRE(letters.size() == 2);
      const auto [i, j] = pos.at(generator_letter(letters[0].generator));
      const auto [k, l] = pos.at(generator_letter(letters[1].generator));
      double predicted = 0;
      if (!letters[0].adjoint && letters[1].adjoint) predicted = i == k && l == j ? f[l] / dim : 0.0;
      else predicted = j == l && k == i ? 1 / (f[k] * dim) : 0.0;
      CAPTURE(e.word);
      CHECK(e.predicted == doctest::Approx(predicted).epsilon(1e-14));
      CHECK(std::abs(e.computed - predicted) < 1e-10);
    }
  }
}
