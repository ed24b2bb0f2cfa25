#pragma once

#include "laurent.hpp"
#include "rootsys.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace qflag {

// Weight multiplicities dim L(lambda)_mu of the irreducible module with
// dominant highest weight lambda. Every weight with positive multiplicity is
// listed; absent weights have multiplicity zero.
struct WeightTable {
  Weight highest;
  std::map<Weight, std::int64_t> entries;

  std::int64_t multiplicity(const Weight& mu) const;
  Integer dimension() const;
};

// Dominant mu <= lambda, ordered by increasing depth below lambda.
std::vector<Weight> dominant_weights_below(const RootSystem& rs, const Weight& lambda);

// Freudenthal recursion on the dominant weights, extended to the full
// weight set by W-invariance. Throws DomainError for non-dominant lambda.
WeightTable weight_table(const RootSystem& rs, const Weight& lambda);

// prod_{alpha > 0} (lambda + rho, alpha) / (rho, alpha)
Integer classical_dim(const RootSystem& rs, const Weight& lambda);

// Weyl character formula with e(mu) -> q^{2(mu, rho)}:
//   sum_w (-1)^{l(w)} q^{2(w(lambda+rho) - rho, rho)} / prod_{alpha>0} (1 - q^{-2(alpha, rho)})
LaurentPoly qdim_via_character(const RootSystem& rs, const Weight& lambda);

void require_dominant(const RootSystem& rs, const Weight& lambda);

}  // namespace qflag
