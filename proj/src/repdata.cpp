#include "repdata.hpp"

#include "error.hpp"

#include <algorithm>
#include <set>

namespace qflag {

namespace {

long exponent_2_rho(const RootSystem& rs, const Weight& mu) {
  const Rational e = 2 * rs.inner_product(mu, rs.weyl_vector());
  return require_integer(e, "2(mu, rho)").get_si();
}

Integer depth_below(const RootSystem& rs, const Weight& lambda, const Weight& mu) {
  Rational h = 0;
  for (const auto& c : rs.root_coordinates(lambda - mu)) h += c;
  return require_integer(h, "height");
}

}  // namespace

void require_dominant(const RootSystem& rs, const Weight& lambda) {
  if (!classify_weight(rs, lambda).dominant)
    throw DomainError("weight " + to_string(lambda) + " is not dominant");
}

std::int64_t WeightTable::multiplicity(const Weight& mu) const {
  auto it = entries.find(mu);
  return it == entries.end() ? 0 : it->second;
}

Integer WeightTable::dimension() const {
  Integer sum = 0;
  for (const auto& [mu, m] : entries) sum += Integer(static_cast<long>(m));
  return sum;
}

std::vector<Weight> dominant_weights_below(const RootSystem& rs, const Weight& lambda) {
  require_dominant(rs, lambda);
  std::set<Weight> seen{lambda};
  std::vector<Weight> order{lambda};
  for (std::size_t head = 0; head < order.size(); ++head) {
    for (const auto& alpha : rs.positive_roots()) {
      Weight next = order[head] - alpha;
      if (!classify_weight(rs, next).dominant) continue;
      if (seen.insert(next).second) order.push_back(std::move(next));
    }
  }
  std::vector<std::pair<Integer, Weight>> keyed;
  keyed.reserve(order.size());
  for (auto& mu : order) keyed.emplace_back(depth_below(rs, lambda, mu), std::move(mu));
  std::stable_sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Weight> out;
  out.reserve(keyed.size());
  for (auto& [d, mu] : keyed) out.push_back(std::move(mu));
  return out;
}

WeightTable weight_table(const RootSystem& rs, const Weight& lambda) {
  const std::vector<Weight> dominant = dominant_weights_below(rs, lambda);
  const Weight rho = rs.weyl_vector();
  const Rational top = rs.inner_product(lambda + rho, lambda + rho);

  std::map<Weight, std::int64_t> dom_mult;
  dom_mult[lambda] = 1;
  auto lookup = [&](const Weight& w) -> std::int64_t {
    auto it = dom_mult.find(dominant_conjugate(rs, w));
    return it == dom_mult.end() ? 0 : it->second;
  };

  for (std::size_t idx = 1; idx < dominant.size(); ++idx) {
    const Weight& mu = dominant[idx];
    Rational sum = 0;
    for (const auto& alpha : rs.positive_roots()) {
      Weight shifted = mu + alpha;
      for (;;) {
        const std::int64_t m = lookup(shifted);
        if (m == 0) break;
        sum += Rational(static_cast<long>(m)) * rs.inner_product(shifted, alpha);
        shifted += alpha;
      }
    }
    const Rational denom = top - rs.inner_product(mu + rho, mu + rho);
    if (denom <= 0) throw DomainError("Freudenthal denominator vanished at " + to_string(mu));
    const Rational m = 2 * sum / denom;
    dom_mult[mu] = require_integer(m, "Freudenthal multiplicity").get_si();
  }

  WeightTable table;
  table.highest = lambda;
  for (const auto& [mu, m] : dom_mult) {
    if (m == 0) continue;
    for (auto& w : weyl_orbit(rs, mu)) table.entries.emplace(std::move(w), m);
  }
  return table;
}

Integer classical_dim(const RootSystem& rs, const Weight& lambda) {
  require_dominant(rs, lambda);
  const Weight rho = rs.weyl_vector();
  Rational prod = 1;
  for (const auto& alpha : rs.positive_roots()) prod *= rs.inner_product(lambda + rho, alpha) / rs.inner_product(rho, alpha);
  return require_integer(prod, "Weyl dimension");
}

LaurentPoly qdim_via_character(const RootSystem& rs, const Weight& lambda) {
  require_dominant(rs, lambda);
  const Weight rho = rs.weyl_vector();
  const Weight start = lambda + rho;

  // lambda + rho is regular, so its orbit is in bijection with W and the
  // breadth-first distance from start equals l(w).
  std::map<Weight, int> depth{{start, 0}};
  std::vector<Weight> frontier{start};
  LaurentPoly numerator;
  while (!frontier.empty()) {
    std::vector<Weight> next;
    for (const auto& v : frontier) {
      const int d = depth[v];
      numerator += LaurentPoly::monomial(exponent_2_rho(rs, v - rho), d % 2 == 0 ? 1 : -1);
      for (int i = 1; i <= rs.rank(); ++i) {
        Weight w = rs.simple_reflection(i, v);
        if (depth.emplace(w, d + 1).second) next.push_back(std::move(w));
      }
    }
    frontier = std::move(next);
  }

  LaurentPoly denominator(1);
  for (const auto& alpha : rs.positive_roots())
    denominator *= LaurentPoly(1) - LaurentPoly::monomial(-exponent_2_rho(rs, alpha));
  return numerator.divide_exact(denominator);
}

}  // namespace qflag
