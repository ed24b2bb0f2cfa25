#pragma once

// Truncated operator models on span{e_0, ..., e_{N-1}} of l^2(Z+):
//   * the four generators x, u, v, y of C(SU_q(2)) in the Soibel'man
//     representation, and
//   * the diagonal model of |a_lambda| on (C^N)^{(x)k}, stored as an exponent
//     vector (k_1..k_k) -> q^{sum_l exponent_l k_l}, never materialized.

#include "qcalc.hpp"
#include "rootsys.hpp"

#include <Eigen/Dense>

#include <array>
#include <string>
#include <vector>

namespace qflag {

constexpr int kDefaultTruncation = 32;

// Default truncation, overridden by the QFLAG_TRUNC_N environment variable.
int default_truncation();

// max(1e-12, 10 q^{2N})
double truncation_tolerance(double q, int trunc);

enum class Su2Generator { x, u, v, y };

char generator_letter(Su2Generator g);

struct Su2Operator {
  Eigen::MatrixXd matrix;
  int trunc = 0;
  std::string label;

  Su2Operator adjoint() const;
  friend Su2Operator operator*(const Su2Operator& a, const Su2Operator& b);
};

struct Su2Generators {
  Su2Operator x, u, v, y;
  const Su2Operator& operator[](Su2Generator g) const;
};

Su2Operator su2_generator(Su2Generator g, double q, int trunc);
Su2Generators su2_generators(double q, int trunc);

struct DiagonalModel {
  Weight lambda;
  WeylWord word;
  // q-exponent per unit of k_l: (lambda, beta_l) = d_{i_l} e_l.
  std::vector<long> exponents;
  // e_l = (s_{i_{l+1}} ... s_{i_k} lambda)(h_{i_l})
  std::vector<long> coroot_exponents;
  int trunc = kDefaultTruncation;
  QValue q = 0.5;
  bool regular = false;

  std::size_t factors() const { return exponents.size(); }
};

// Throws DomainError for non-dominant lambda or a non-reduced word.
DiagonalModel diagonal_model(const RootSystem& rs, const Weight& lambda, const WeylWord& word, const QValue& q,
                             int trunc = kDefaultTruncation);

// sup over the truncated grid of |q^{m s} - q^{n s}|, s = sum_l exponent_l k_l.
double power_norm_gap(const DiagonalModel& model, long m, long n);

// || |a|^m - p_0 || on the truncated grid.
double projection_gap(const DiagonalModel& model, long m);

struct SpectrumEntry {
  long exponent;  // eigenvalue q^exponent
  double value;
  Integer multiplicity;
};

// Counts of grid points with sum_l exponent_l k_l = s for s = 0..max_exponent.
std::vector<Integer> lattice_counts(const DiagonalModel& model, long max_exponent);

std::vector<SpectrumEntry> spectrum_up_to(const DiagonalModel& model, long max_exponent);
// Eigenvalues q^s >= value_cutoff (with 1e-12 relative slack).
std::vector<SpectrumEntry> spectrum(const DiagonalModel& model, double value_cutoff);

// Grid points (k_1..k_k) carrying eigenvalue 1.
std::vector<std::vector<int>> unit_eigenvectors(const DiagonalModel& model, std::size_t limit = 16);

struct CommutationEntry {
  Su2Generator generator;
  long exponent;  // (Lambda, -mu + w0 nu)
  double violation;
};

struct CommutationReport {
  long lambda_coord = 1;
  std::vector<CommutationEntry> entries;
  double ux_violation = 0.0;  // u x - q x u
  double max_violation = 0.0;
};

// C |a_Lambda| = q^{(Lambda, -mu + w0 nu)} |a_Lambda| C for C in {x,u,v,y} with
// Lambda = lambda_coord * omega_1 in SU_q(2), checked on e_j for j < N-1.
CommutationReport commutation_check(double q, int trunc, long lambda_coord = 1);

// xx* e_k = (1 - q^{2k}) e_k and x*x e_k = (1 - q^{2k+2}) e_k on interior vectors.
double su2_shift_identity_violation(double q, int trunc);

}  // namespace qflag
