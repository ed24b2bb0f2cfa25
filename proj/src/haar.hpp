#pragma once

// Haar state on C(G_q): the atom h(p_0), h(|a_lambda|^2) by the density
// formula and by the orthogonality relations, masses of diagonal minimal
// projections, and a truncated evaluator for words in the SU_q(2) generators.

#include "laurent.hpp"
#include "qcalc.hpp"
#include "rootsys.hpp"
#include "soibelman.hpp"

#include <Eigen/Dense>

#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qflag {

// prod_{alpha>0} (1 - q^{2(alpha, rho)})
LaurentPoly haar_p0(const RootSystem& rs);

struct HaarDatum {
  LieType type;
  QValue q;
  LaurentPoly h_p0;
  // 2 (rho, beta_l): diagonal model of |a_rho|^2 along the cached w0 word.
  std::vector<long> density_exponents;
};

HaarDatum haar_datum(const RootSystem& rs, const QValue& q);

struct HaarALambda {
  RationalFunction via_product;        // h(p_0) prod (1 - q^{2(lambda+rho, alpha)})^{-1}
  RationalFunction via_orthogonality;  // q^{-2(lambda, rho)} / dim_q L(lambda)
  bool equal = false;
};

HaarALambda haar_a_lambda_sq(const RootSystem& rs, const Weight& lambda);

// h(p_{m_1} (x) ... (x) p_{m_k}) = h(p_0) prod_l q^{2 m_l (rho, beta_l)}
LaurentPoly haar_diag_mass(const RootSystem& rs, std::span<const long> m);

// Sum of the diagonal masses over {0..N-1}^k by explicit enumeration.
double diag_mass_grid_sum(const RootSystem& rs, double q, int trunc);
// The same sum as a product of truncated geometric series.
double diag_mass_grid_sum_factorized(const RootSystem& rs, double q, int trunc);
// Exact grid sum as a polynomial: enumerates the grid, counting points per
// q-shift, then multiplies by h(p0).
LaurentPoly diag_mass_grid_total(const RootSystem& rs, int trunc);

// ---------------------------------------------------------------- SU_q(2)

struct Su2Letter {
  Su2Generator generator;
  bool adjoint = false;
  bool operator==(const Su2Letter&) const = default;
};

// Parses words like "x x*", "u*u", "y v* x". Throws InvalidArgument.
std::vector<Su2Letter> parse_su2_word(std::string_view text);
std::string format_su2_word(std::span<const Su2Letter> word);

// Element of C(SU_q(2)) graded by the left torus weight (units of omega_1):
// x, u carry +1, v, y carry -1 and the adjoint negates the weight.
class GradedSu2Element {
public:
  GradedSu2Element() = default;
  static GradedSu2Element identity(int dim);
  static GradedSu2Element generator(Su2Letter letter, double q, int dim);

  const std::map<int, Eigen::MatrixXd>& components() const { return components_; }
  int dim() const { return dim_; }

  GradedSu2Element adjoint() const;
  // Exact torus average: the weight-0 component.
  Eigen::MatrixXd weight_zero() const;

  friend GradedSu2Element operator*(const GradedSu2Element& a, const GradedSu2Element& b);
  friend GradedSu2Element operator+(const GradedSu2Element& a, const GradedSu2Element& b);

private:
  int dim_ = 0;
  std::map<int, Eigen::MatrixXd> components_;
};

struct TruncatedValue {
  double value = 0.0;
  double tail_bound = 0.0;
  int weight = 0;
};

// h(word) = (1 - q^2) sum_{k<N} q^{2k} E(word)_{kk}; exactly 0 for nonzero weight.
TruncatedValue su2_haar_eval(std::span<const Su2Letter> word, double q, int trunc);
TruncatedValue su2_haar_eval(std::string_view word, double q, int trunc);

struct OrthogonalityEntry {
  std::string word;
  double computed;
  double predicted;
  double deviation;
};

struct OrthogonalityReport {
  double q = 0.0;
  int trunc = 0;
  std::vector<OrthogonalityEntry> entries;  // 16 pairs g1 g2*, then 16 pairs g1* g2
  double max_deviation = 0.0;
};

OrthogonalityReport su2_orthogonality_suite(double q, int trunc);

}  // namespace qflag
