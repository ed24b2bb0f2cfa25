#include "selftest.hpp"

#include "classify.hpp"
#include "haar.hpp"
#include "qcalc.hpp"
#include "repdata.hpp"
#include "rootsys.hpp"
#include "soibelman.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <set>
#include <sstream>

namespace qflag {

int SelftestReport::passed() const {
  return static_cast<int>(std::count_if(checks.begin(), checks.end(), [](const auto& c) { return c.passed; }));
}

int SelftestReport::failed() const { return static_cast<int>(checks.size()) - passed(); }

namespace {

std::vector<LieType> small_types() {
  return {LieType::parse("A1"), LieType::parse("A2"), LieType::parse("A3"), LieType::parse("B2"), LieType::parse("G2")};
}

std::vector<LieType> types_up_to_rank4() {
  std::vector<LieType> out;
  for (int n = 1; n <= 4; ++n) out.push_back(LieType::make('A', n));
  for (int n = 2; n <= 4; ++n) out.push_back(LieType::make('B', n));
  for (int n = 2; n <= 4; ++n) out.push_back(LieType::make('C', n));
  for (int n = 3; n <= 4; ++n) out.push_back(LieType::make('D', n));
  out.push_back(LieType::make('F', 4));
  out.push_back(LieType::make('G', 2));
  return out;
}

// Dominant weights with every coordinate in 0..bound.
std::vector<Weight> dominant_box(int rank, int bound) {
  std::vector<Weight> out;
  Weight w = Weight::zero(rank);
  for (;;) {
    out.push_back(w);
    int i = 0;
    while (i < rank && ++w.coords[static_cast<std::size_t>(i)] > bound) w.coords[static_cast<std::size_t>(i++)] = 0;
    if (i == rank) break;
  }
  return out;
}

void run(SelftestReport& report, const std::string& name, const std::function<std::string()>& body) {
  SelftestCheck c{name, false, {}};
  try {
    c.detail = body();
    c.passed = c.detail.empty();
  } catch (const std::exception& e) {
    c.detail = std::string("exception: ") + e.what();
  }
  report.checks.push_back(std::move(c));
}

}  // namespace

SelftestReport run_selftest() {
  SelftestReport report;

  run(report, "root systems: |positive roots| = l(w0), orbit agreement, w0 rho = -rho", [] {
    std::ostringstream err;
    for (const auto& t : types_up_to_rank4()) {
      const RootSystem rs(t);
      const auto word_roots = rs.positive_roots();
      std::set<Weight> a(word_roots.begin(), word_roots.end());
      const auto orbit = positive_roots_by_orbit(rs);
      std::set<Weight> b(orbit.begin(), orbit.end());
      if (word_roots.size() != rs.w0_word().length() || a.size() != word_roots.size()) err << t.name() << ": count; ";
      if (a != b) err << t.name() << ": orbit mismatch; ";
      if (rs.weyl_apply(rs.w0_word(), rs.weyl_vector()) != -rs.weyl_vector()) err << t.name() << ": w0 rho; ";
      Weight twice_rho = Weight::zero(rs.rank());
      for (const auto& beta : word_roots) twice_rho += beta;
      if (twice_rho != 2 * rs.weyl_vector()) err << t.name() << ": 2 rho; ";
    }
    return err.str();
  });

  run(report, "quantum dimension: product = weight sum = character, palindromic, q=1 gives classical", [] {
    std::ostringstream err;
    for (const auto& t : small_types()) {
      const RootSystem rs(t);
      for (const auto& lambda : dominant_box(rs.rank(), 2)) {
        const auto table = weight_table(rs, lambda);
        const auto p = quantum_dim_product(rs, lambda);
        const auto s = quantum_dim_weight_sum(rs, lambda, table);
        const auto c = qdim_via_character(rs, lambda);
        const Integer dim = classical_dim(rs, lambda);
        if (!(p == s && s == c)) err << t.name() << to_string(lambda) << ": routes differ; ";
        if (!p.is_palindromic()) err << t.name() << to_string(lambda) << ": not palindromic; ";
        if (p.evaluate(Rational(1)) != Rational(dim) || table.dimension() != dim) err << t.name() << to_string(lambda) << ": q=1; ";
      }
    }
    return err.str();
  });

  run(report, "weight tables are W-invariant", [] {
    std::ostringstream err;
    for (const auto& t : small_types()) {
      const RootSystem rs(t);
      for (const auto& lambda : dominant_box(rs.rank(), 2)) {
        const auto table = weight_table(rs, lambda);
        for (const auto& [mu, m] : table.entries)
          for (int i = 1; i <= rs.rank(); ++i)
            if (table.multiplicity(rs.simple_reflection(i, mu)) != m) err << t.name() << to_string(mu) << "; ";
      }
    }
    return err.str();
  });

  run(report, "Haar atom equals (q^2;q^2)_1...(q^2;q^2)_{n-1} on SU_q(n)", [] {
    std::ostringstream err;
    for (int n = 2; n <= 4; ++n) {
      LaurentPoly expected(1);
      for (int j = 1; j < n; ++j) expected *= q_pochhammer(2, 2, j);
      if (haar_p0(RootSystem(LieType::make('A', n - 1))) != expected) err << "n=" << n << "; ";
    }
    return err.str();
  });

  run(report, "h(|a_lambda|^2): density formula = orthogonality formula", [] {
    std::ostringstream err;
    for (const auto& t : small_types()) {
      const RootSystem rs(t);
      for (const auto& lambda : dominant_box(rs.rank(), 2))
        if (!haar_a_lambda_sq(rs, lambda).equal) err << t.name() << to_string(lambda) << "; ";
    }
    return err.str();
  });

  run(report, "diagonal masses sum to 1 on the truncated grid", [] {
    std::ostringstream err;
    for (const char* name : {"A1", "A2", "B2"}) {
      const RootSystem rs(LieType::parse(name));
      for (double q : {0.5, 0.9}) {
        const int n = kDefaultTruncation;
        const double sum = diag_mass_grid_sum(rs, q, n);
        const double tol = static_cast<double>(rs.positive_roots().size()) * std::pow(q, 2.0 * n) + 1e-12;
        if (std::abs(sum - 1.0) > tol) err << name << " q=" << q << " sum=" << sum << "; ";
      }
    }
    return err.str();
  });

  run(report, "diagonal models: ||a^m - a^n|| <= q^m and simple eigenvalue 1", [] {
    std::ostringstream err;
    for (const auto& t : small_types()) {
      const RootSystem rs(t);
      for (const auto& lambda : dominant_box(rs.rank(), 2)) {
        if (!classify_weight(rs, lambda).regular) continue;
        const DiagonalModel model = diagonal_model(rs, lambda, rs.w0_word(), Rational(1, 2), 12);
        for (long m = 1; m <= 8; ++m)
          for (long n = m; n <= 8; ++n)
            if (power_norm_gap(model, m, n) > std::pow(0.5, static_cast<double>(m))) err << t.name() << to_string(lambda) << "; ";
        if (lattice_counts(model, 0).at(0) != 1) err << t.name() << to_string(lambda) << ": unit multiplicity; ";
      }
    }
    return err.str();
  });

  run(report, "SU_q(2) orthogonality relations", [] {
    std::ostringstream err;
    for (double q : {1.0 / 3.0, 0.5, 0.8}) {
      const auto r = su2_orthogonality_suite(q, 64);
      if (r.max_deviation > 1e-10) err << "q=" << q << " deviation " << r.max_deviation << "; ";
    }
    return err.str();
  });

  run(report, "SU_q(2) commutation with |a_Lambda|", [] {
    std::ostringstream err;
    for (long c : {0L, 1L, 2L}) {
      const auto r = commutation_check(0.5, kDefaultTruncation, c);
      if (r.max_violation > 1e-12) err << "Lambda=" << c << " violation " << r.max_violation << "; ";
    }
    return err.str();
  });

  run(report, "classifier reproduces the worked SU_q(2) examples", [] {
    std::ostringstream err;
    ActionSpec ii1{Rational(1, 2), {{Rational(0), 1, 1}, {Rational(1, 2), 1, 1}}};
    if (classify_action(ii1).verdict != Verdict::TypeII1_PowersFlow) err << "type II1 example; ";
    const Rational lambda(1, 4), q(1, 3);
    for (const Rational& eps : {Rational(0), Rational(1, 2)}) {
      ActionSpec spec{q, {{Rational(0), 1, 1}, {Rational(0), lambda, 1}, {Rational(1, 2), lambda, eps}}};
      const auto result = classify_action(spec);
      const auto expected = canonicalize(powers_pair_generators(exact_log(lambda, 1), exact_log(lambda, eps) + exact_log(q, 1)));
      if (!subgroup_equal(result.invariant, expected)) err << "G_{lambda, lambda^eps q} eps=" << eps.get_str() << "; ";
      const ModuleKind want = eps == 0 ? ModuleKind::q : ModuleKind::sqrt_lambda_q;
      if (result.verdict != Verdict::TypeIIIlambda || result.module != want) err << "module eps=" << eps.get_str() << "; ";
    }
    ActionSpec dense{Rational(1, 2), {{Rational(0), 1, 1}, {Rational(1), 2, 1}, {Rational(2), 3, 1}, {Rational(1, 2), 1, 1}}};
    if (classify_action(dense).verdict != Verdict::TypeIII1_Unique) err << "dense example; ";
    return err.str();
  });

  return report;
}

}  // namespace qflag
