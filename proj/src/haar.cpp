#include "haar.hpp"

#include "error.hpp"

#include <array>
#include <cctype>
#include <cmath>
#include <functional>
#include <map>

namespace qflag {

LaurentPoly haar_p0(const RootSystem& rs) {
  LaurentPoly p(1);
  for (const auto& alpha : rs.positive_roots()) p *= LaurentPoly(1) - LaurentPoly::monomial(rho_exponent(rs, alpha));
  return p;
}

HaarDatum haar_datum(const RootSystem& rs, const QValue& q) {
  check_q(q);
  HaarDatum d{rs.type(), q, haar_p0(rs), {}};
  for (const auto& beta : rs.positive_roots()) d.density_exponents.push_back(rho_exponent(rs, beta));
  return d;
}

HaarALambda haar_a_lambda_sq(const RootSystem& rs, const Weight& lambda) {
  require_dominant(rs, lambda);
  const Weight shifted = lambda + rs.weyl_vector();
  LaurentPoly factors(1);
  for (const auto& alpha : rs.positive_roots())
    factors *= LaurentPoly(1) - LaurentPoly::monomial(2 * require_integer(rs.inner_product(shifted, alpha), "(lambda+rho, alpha)").get_si());
  HaarALambda out;
  out.via_product = RationalFunction(haar_p0(rs), factors);
  out.via_orthogonality = RationalFunction(LaurentPoly::monomial(-rho_exponent(rs, lambda)), quantum_dim_product(rs, lambda));
  out.equal = out.via_product == out.via_orthogonality;
  return out;
}

LaurentPoly haar_diag_mass(const RootSystem& rs, std::span<const long> m) {
  const auto roots = rs.positive_roots();
  if (m.size() != roots.size())
    throw DomainError("diagonal index has " + std::to_string(m.size()) + " entries, expected l(w0) = " +
                      std::to_string(roots.size()));
  long exponent = 0;
  for (std::size_t l = 0; l < m.size(); ++l) {
    if (m[l] < 0) throw DomainError("diagonal projection indices must be non-negative");
    exponent += m[l] * rho_exponent(rs, roots[l]);
  }
  return haar_p0(rs).shifted(exponent);
}

LaurentPoly diag_mass_grid_total(const RootSystem& rs, int trunc) {
  if (trunc < 1) throw DomainError("truncation must be positive");
  std::vector<long> steps;
  for (const auto& beta : rs.positive_roots()) steps.push_back(rho_exponent(rs, beta));
  const double grid = std::pow(static_cast<double>(trunc), static_cast<double>(steps.size()));
  if (grid > 5e8) throw DomainError("grid too large for explicit enumeration; use the factorized sum");
  std::map<long, long> counts;
  std::vector<long> m(steps.size(), 0);
  long shift = 0;
  for (;;) {
    ++counts[shift];
    std::size_t i = 0;
    for (; i < m.size(); ++i) {
      if (++m[i] < trunc) {
        shift += steps[i];
        break;
      }
      shift -= (trunc - 1) * steps[i];
      m[i] = 0;
    }
    if (i == m.size()) break;
  }
  LaurentPoly shifts;
  for (const auto& [e, c] : counts) shifts += LaurentPoly::monomial(e, Integer(c));
  return haar_p0(rs) * shifts;
}

double diag_mass_grid_sum(const RootSystem& rs, double q, int trunc) {
  check_q(q);
  std::vector<double> ratios;
  for (const auto& beta : rs.positive_roots()) ratios.push_back(std::pow(q, static_cast<double>(rho_exponent(rs, beta))));
  const double grid = std::pow(static_cast<double>(trunc), static_cast<double>(ratios.size()));
  if (grid > 5e8) throw DomainError("grid too large for explicit enumeration; use the factorized sum");
  const double atom = haar_p0(rs).evaluate(q);
  double total = 0.0;
  std::function<void(std::size_t, double)> walk = [&](std::size_t axis, double mass) {
    if (axis == ratios.size()) {
      total += mass;
      return;
    }
    double m = mass;
    for (int k = 0; k < trunc; ++k) {
      walk(axis + 1, m);
      m *= ratios[axis];
    }
  };
  walk(0, atom);
  return total;
}

double diag_mass_grid_sum_factorized(const RootSystem& rs, double q, int trunc) {
  check_q(q);
  double total = haar_p0(rs).evaluate(q);
  for (const auto& beta : rs.positive_roots()) {
    const double r = std::pow(q, static_cast<double>(rho_exponent(rs, beta)));
    total *= (1.0 - std::pow(r, trunc)) / (1.0 - r);
  }
  return total;
}

// ---------------------------------------------------------------- words

std::vector<Su2Letter> parse_su2_word(std::string_view text) {
  std::vector<Su2Letter> out;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    Su2Letter letter{};
    switch (c) {
      case 'x': letter.generator = Su2Generator::x; break;
      case 'u': letter.generator = Su2Generator::u; break;
      case 'v': letter.generator = Su2Generator::v; break;
      case 'y': letter.generator = Su2Generator::y; break;
      default: throw InvalidArgument(std::string("unexpected character '") + c + "' in SU_q(2) word");
    }
    if (i + 1 < text.size() && text[i + 1] == '*') {
      letter.adjoint = true;
      ++i;
    }
    out.push_back(letter);
  }
  return out;
}

std::string format_su2_word(std::span<const Su2Letter> word) {
  std::string s;
  for (const auto& l : word) {
    if (!s.empty()) s += ' ';
    s += generator_letter(l.generator);
    if (l.adjoint) s += '*';
  }
  return s;
}

// ---------------------------------------------------------------- graded algebra

GradedSu2Element GradedSu2Element::identity(int dim) {
  GradedSu2Element e;
  e.dim_ = dim;
  e.components_.emplace(0, Eigen::MatrixXd::Identity(dim, dim));
  return e;
}

GradedSu2Element GradedSu2Element::generator(Su2Letter letter, double q, int dim) {
  const int weight = (letter.generator == Su2Generator::x || letter.generator == Su2Generator::u) ? 1 : -1;
  GradedSu2Element e;
  e.dim_ = dim;
  Su2Operator op = su2_generator(letter.generator, q, dim);
  e.components_.emplace(letter.adjoint ? -weight : weight,
                        letter.adjoint ? Eigen::MatrixXd(op.matrix.transpose()) : std::move(op.matrix));
  return e;
}

GradedSu2Element GradedSu2Element::adjoint() const {
  GradedSu2Element e;
  e.dim_ = dim_;
  for (const auto& [w, m] : components_) e.components_.emplace(-w, m.transpose());
  return e;
}

Eigen::MatrixXd GradedSu2Element::weight_zero() const {
  auto it = components_.find(0);
  return it == components_.end() ? Eigen::MatrixXd::Zero(dim_, dim_) : it->second;
}

GradedSu2Element operator*(const GradedSu2Element& a, const GradedSu2Element& b) {
  if (a.dim_ != b.dim_) throw InvalidArgument("graded elements with different truncations");
  GradedSu2Element out;
  out.dim_ = a.dim_;
  for (const auto& [wa, ma] : a.components_) {
    for (const auto& [wb, mb] : b.components_) {
      auto [it, inserted] = out.components_.try_emplace(wa + wb, ma * mb);
      if (!inserted) it->second += ma * mb;
    }
  }
  return out;
}

GradedSu2Element operator+(const GradedSu2Element& a, const GradedSu2Element& b) {
  if (a.dim_ != b.dim_) throw InvalidArgument("graded elements with different truncations");
  GradedSu2Element out = a;
  for (const auto& [w, m] : b.components_) {
    auto [it, inserted] = out.components_.try_emplace(w, m);
    if (!inserted) it->second += m;
  }
  return out;
}

TruncatedValue su2_haar_eval(std::span<const Su2Letter> word, double q, int trunc) {
  if (!(q > 0.0 && q < 1.0)) throw DomainError("q must lie in (0,1)");
  if (trunc < 8) throw DomainError("SU_q(2) Haar evaluation needs N >= 8");
  // Each letter moves an index by at most one, so padding by the word length
  // keeps every diagonal entry k < N exact.
  const int dim = trunc + static_cast<int>(word.size());
  GradedSu2Element prod = GradedSu2Element::identity(dim);
  int weight = 0;
  for (const auto& letter : word) {
    prod = prod * GradedSu2Element::generator(letter, q, dim);
    const int w = (letter.generator == Su2Generator::x || letter.generator == Su2Generator::u) ? 1 : -1;
    weight += letter.adjoint ? -w : w;
  }
  TruncatedValue out;
  out.weight = weight;
  if (weight != 0) return out;
  const Eigen::MatrixXd diag = prod.weight_zero();
  const double atom = 1.0 - q * q;
  double sum = 0.0;
  double density = 1.0;
  for (int k = 0; k < trunc; ++k) {
    sum += density * diag(k, k);
    density *= q * q;
  }
  out.value = atom * sum;
  // Generators have norm <= 1, so |E(word)_kk| <= 1 on the omitted tail.
  out.tail_bound = std::pow(q, 2.0 * trunc);
  return out;
}

TruncatedValue su2_haar_eval(std::string_view word, double q, int trunc) {
  const auto letters = parse_su2_word(word);
  return su2_haar_eval(std::span<const Su2Letter>(letters), q, trunc);
}

OrthogonalityReport su2_orthogonality_suite(double q, int trunc) {
  const RootSystem a1(LieType{Series::A, 1});
  const Weight top = a1.fundamental_weight(1);
  const std::array<Weight, 2> basis{top, a1.simple_reflection(1, top)};
  std::array<double, 2> f{};
  for (std::size_t i = 0; i < 2; ++i) f[i] = std::pow(q, static_cast<double>(rho_exponent(a1, basis[i])));
  const double dim_q = quantum_dim_product(a1, top).evaluate(q);

  struct Entry {
    Su2Generator g;
    std::size_t row, col;
  };
  const std::array<Entry, 4> gens{{{Su2Generator::x, 0, 0}, {Su2Generator::u, 0, 1}, {Su2Generator::v, 1, 0}, {Su2Generator::y, 1, 1}}};

  OrthogonalityReport report;
  report.q = q;
  report.trunc = trunc;
  auto record = [&](std::vector<Su2Letter> word, double predicted) {
    const double computed = su2_haar_eval(std::span<const Su2Letter>(word), q, trunc).value;
    const double dev = std::abs(computed - predicted);
    report.entries.push_back({format_su2_word(word), computed, predicted, dev});
    report.max_deviation = std::max(report.max_deviation, dev);
  };
  // h(v_ij v_kl^*) = dim_q^{-1} F_{lj} delta_ik; F is diagonal.
  for (const auto& a : gens)
    for (const auto& b : gens)
      record({{a.g, false}, {b.g, true}}, (a.row == b.row && a.col == b.col) ? f[a.col] / dim_q : 0.0);
  // h(v_ij^* v_kl) = dim_q^{-1} (F^{-1})_{ki} delta_jl.
  for (const auto& a : gens)
    for (const auto& b : gens)
      record({{a.g, true}, {b.g, false}}, (a.col == b.col && a.row == b.row) ? 1.0 / (f[a.row] * dim_q) : 0.0);
  return report;
}

}  // namespace qflag
