#include "soibelman.hpp"

#include "error.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numeric>

namespace qflag {

int default_truncation() {
  if (const char* env = std::getenv("QFLAG_TRUNC_N")) {
    char* end = nullptr;
    const long n = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && n >= 2 && n <= 1 << 16) return static_cast<int>(n);
  }
  return kDefaultTruncation;
}

double truncation_tolerance(double q, int trunc) {
  return std::max(1e-12, 10.0 * std::pow(q, 2.0 * trunc));
}

char generator_letter(Su2Generator g) {
  switch (g) {
    case Su2Generator::x: return 'x';
    case Su2Generator::u: return 'u';
    case Su2Generator::v: return 'v';
    case Su2Generator::y: return 'y';
  }
  return '?';
}

// ---------------------------------------------------------------- SU_q(2)

Su2Operator Su2Operator::adjoint() const {
  std::string l = label.size() == 1 ? label + "*" : "(" + label + ")*";
  return {matrix.transpose(), trunc, std::move(l)};
}

Su2Operator operator*(const Su2Operator& a, const Su2Operator& b) {
  if (a.trunc != b.trunc) throw InvalidArgument("operators with different truncations");
  return {a.matrix * b.matrix, a.trunc, a.label + " " + b.label};
}

const Su2Operator& Su2Generators::operator[](Su2Generator g) const {
  switch (g) {
    case Su2Generator::x: return x;
    case Su2Generator::u: return u;
    case Su2Generator::v: return v;
    case Su2Generator::y: return y;
  }
  throw InvalidArgument("unknown generator");
}

Su2Operator su2_generator(Su2Generator g, double q, int trunc) {
  if (!(q > 0.0 && q < 1.0)) throw DomainError("SU_q(2) generators need 0 < q < 1");
  if (trunc < 2) throw DomainError("truncation must be at least 2");
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(trunc, trunc);
  for (int k = 0; k < trunc; ++k) {
    const double dk = static_cast<double>(k);
    switch (g) {
      case Su2Generator::x:
        if (k + 1 < trunc) m(k + 1, k) = std::sqrt(1.0 - std::pow(q, 2.0 * dk + 2.0));
        break;
      case Su2Generator::u:
        m(k, k) = std::pow(q, dk);
        break;
      case Su2Generator::v:
        m(k, k) = -std::pow(q, dk + 1.0);
        break;
      case Su2Generator::y:
        if (k >= 1) m(k - 1, k) = std::sqrt(1.0 - std::pow(q, 2.0 * dk));
        break;
    }
  }
  return {std::move(m), trunc, std::string(1, generator_letter(g))};
}

Su2Generators su2_generators(double q, int trunc) {
  return {su2_generator(Su2Generator::x, q, trunc), su2_generator(Su2Generator::u, q, trunc),
          su2_generator(Su2Generator::v, q, trunc), su2_generator(Su2Generator::y, q, trunc)};
}

// ---------------------------------------------------------------- diagonal model

DiagonalModel diagonal_model(const RootSystem& rs, const Weight& lambda, const WeylWord& word, const QValue& q,
                             int trunc) {
  const WeightClass cls = classify_weight(rs, lambda);
  if (!cls.dominant) throw DomainError("diagonal model needs a dominant weight, got " + to_string(lambda));
  if (!is_reduced(rs, word)) throw DomainError("word is not a reduced expression");
  check_q(q);
  if (trunc < 1) throw DomainError("truncation must be positive");

  DiagonalModel model;
  model.lambda = lambda;
  model.word = word;
  model.trunc = trunc;
  model.q = q;
  model.regular = cls.regular;
  const auto betas = positive_roots(rs, word);
  for (std::size_t l = 0; l < betas.size(); ++l) {
    const long pairing = require_integer(rs.inner_product(lambda, betas[l]), "(lambda, beta)").get_si();
    const int d = rs.symmetrizers()[static_cast<std::size_t>(word.letters[l] - 1)];
    if (pairing % d != 0) throw DomainError("coroot pairing is not integral");
    model.exponents.push_back(pairing);
    model.coroot_exponents.push_back(pairing / d);
  }
  return model;
}

namespace {

void require_regular(const DiagonalModel& model) {
  if (!model.regular) throw DomainError("norm bounds need a regular weight, got " + to_string(model.lambda));
}

std::vector<bool> achievable_sums(const DiagonalModel& model) {
  long total = 0;
  for (long e : model.exponents) total += e * (model.trunc - 1);
  std::vector<bool> reach(static_cast<std::size_t>(total + 1), false);
  reach[0] = true;
  long reached = 0;
  for (long e : model.exponents) {
    if (e == 0) continue;
    std::vector<bool> next(reach.size(), false);
    for (long s = 0; s <= reached; ++s) {
      if (!reach[static_cast<std::size_t>(s)]) continue;
      for (long k = 0; k < model.trunc; ++k) next[static_cast<std::size_t>(s + k * e)] = true;
    }
    reached += e * (model.trunc - 1);
    reach = std::move(next);
  }
  return reach;
}

}  // namespace

double power_norm_gap(const DiagonalModel& model, long m, long n) {
  require_regular(model);
  if (m < 0 || n < m) throw DomainError("power_norm_gap needs 0 <= m <= n");
  const double q = to_double(model.q);
  const auto reach = achievable_sums(model);
  double best = 0.0;
  for (std::size_t s = 1; s < reach.size(); ++s) {
    if (!reach[s]) continue;
    const double ds = static_cast<double>(s);
    best = std::max(best, std::pow(q, ds * static_cast<double>(m)) - std::pow(q, ds * static_cast<double>(n)));
  }
  return best;
}

double projection_gap(const DiagonalModel& model, long m) {
  require_regular(model);
  if (m < 0) throw DomainError("projection_gap needs m >= 0");
  const auto reach = achievable_sums(model);
  for (std::size_t s = 1; s < reach.size(); ++s)
    if (reach[s]) return std::pow(to_double(model.q), static_cast<double>(s) * static_cast<double>(m));
  return 0.0;
}

std::vector<Integer> lattice_counts(const DiagonalModel& model, long max_exponent) {
  if (max_exponent < 0) return {};
  std::vector<Integer> counts(static_cast<std::size_t>(max_exponent + 1), 0);
  counts[0] = 1;
  for (long e : model.exponents) {
    std::vector<Integer> next(counts.size(), 0);
    for (long s = 0; s <= max_exponent; ++s) {
      if (counts[static_cast<std::size_t>(s)] == 0) continue;
      for (long k = 0; k < model.trunc; ++k) {
        const long t = s + k * e;
        if (t > max_exponent) break;
        next[static_cast<std::size_t>(t)] += counts[static_cast<std::size_t>(s)];
      }
    }
    counts = std::move(next);
  }
  return counts;
}

std::vector<SpectrumEntry> spectrum_up_to(const DiagonalModel& model, long max_exponent) {
  const double q = to_double(model.q);
  const auto counts = lattice_counts(model, max_exponent);
  std::vector<SpectrumEntry> out;
  for (std::size_t s = 0; s < counts.size(); ++s) {
    if (counts[s] == 0) continue;
    out.push_back({static_cast<long>(s), std::pow(q, static_cast<double>(s)), counts[s]});
  }
  return out;
}

std::vector<SpectrumEntry> spectrum(const DiagonalModel& model, double value_cutoff) {
  if (!(value_cutoff > 0.0)) throw DomainError("spectrum cutoff must be positive");
  const double q = to_double(model.q);
  long max_exponent = 0;
  long total = 0;
  for (long e : model.exponents) total += e * (model.trunc - 1);
  while (max_exponent < total && std::pow(q, static_cast<double>(max_exponent + 1)) >= value_cutoff * (1.0 - 1e-12))
    ++max_exponent;
  return spectrum_up_to(model, max_exponent);
}

std::vector<std::vector<int>> unit_eigenvectors(const DiagonalModel& model, std::size_t limit) {
  // Eigenvalue 1 needs k_l = 0 wherever exponent_l > 0; the other factors are free.
  std::vector<std::size_t> free_axes;
  for (std::size_t l = 0; l < model.exponents.size(); ++l)
    if (model.exponents[l] == 0) free_axes.push_back(l);
  std::vector<std::vector<int>> out;
  std::vector<int> current(model.exponents.size(), 0);
  for (;;) {
    if (out.size() >= limit) break;
    out.push_back(current);
    std::size_t a = 0;
    while (a < free_axes.size()) {
      int& k = current[free_axes[a]];
      if (++k < model.trunc) break;
      k = 0;
      ++a;
    }
    if (a == free_axes.size()) break;
  }
  return out;
}

// ---------------------------------------------------------------- commutation

namespace {

double max_column_norm(const Eigen::MatrixXd& m, int columns) {
  double best = 0.0;
  for (int j = 0; j < columns; ++j) best = std::max(best, m.col(j).norm());
  return best;
}

}  // namespace

CommutationReport commutation_check(double q, int trunc, long lambda_coord) {
  if (trunc < 4) throw DomainError("commutation check needs N >= 4");
  if (lambda_coord < 0) throw DomainError("Lambda must be dominant");
  const RootSystem a1(LieType{Series::A, 1});
  const Weight top = a1.fundamental_weight(1);
  const Weight bottom = a1.simple_reflection(1, top);
  const Weight big_lambda = lambda_coord * top;
  const Su2Generators gens = su2_generators(q, trunc);

  Eigen::MatrixXd abs_a = Eigen::MatrixXd::Zero(trunc, trunc);
  for (int k = 0; k < trunc; ++k) abs_a(k, k) = std::pow(q, static_cast<double>(lambda_coord * k));

  struct RowCol {
    Su2Generator g;
    Weight mu, nu;
  };
  const std::array<RowCol, 4> cases{{{Su2Generator::x, top, top},
                                     {Su2Generator::u, top, bottom},
                                     {Su2Generator::v, bottom, top},
                                     {Su2Generator::y, bottom, bottom}}};

  CommutationReport report;
  report.lambda_coord = lambda_coord;
  const int interior = trunc - 1;
  for (const auto& c : cases) {
    const Weight w0nu = a1.weyl_apply(a1.w0_word(), c.nu);
    const long e = require_integer(a1.inner_product(big_lambda, -c.mu + w0nu), "commutation exponent").get_si();
    const Eigen::MatrixXd& op = gens[c.g].matrix;
    const Eigen::MatrixXd diff = op * abs_a - std::pow(q, static_cast<double>(e)) * abs_a * op;
    const double viol = max_column_norm(diff, interior);
    report.entries.push_back({c.g, e, viol});
    report.max_violation = std::max(report.max_violation, viol);
  }
  const Eigen::MatrixXd ux = gens.u.matrix * gens.x.matrix - q * gens.x.matrix * gens.u.matrix;
  report.ux_violation = max_column_norm(ux, interior);
  report.max_violation = std::max(report.max_violation, report.ux_violation);
  return report;
}

double su2_shift_identity_violation(double q, int trunc) {
  const Su2Operator x = su2_generator(Su2Generator::x, q, trunc);
  const Eigen::MatrixXd xxs = x.matrix * x.matrix.transpose();
  const Eigen::MatrixXd xsx = x.matrix.transpose() * x.matrix;
  double worst = 0.0;
  for (int k = 0; k < trunc - 1; ++k) {
    Eigen::VectorXd e1 = Eigen::VectorXd::Zero(trunc);
    Eigen::VectorXd e2 = Eigen::VectorXd::Zero(trunc);
    e1(k) = 1.0 - std::pow(q, 2.0 * k);
    e2(k) = 1.0 - std::pow(q, 2.0 * k + 2.0);
    worst = std::max(worst, (xxs.col(k) - e1).norm());
    worst = std::max(worst, (xsx.col(k) - e2).norm());
  }
  return worst;
}

}  // namespace qflag
