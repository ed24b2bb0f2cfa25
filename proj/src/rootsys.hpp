#pragma once

// Finite-type root data in the fundamental-weight basis.
//
// Conventions:
//  * Cartan matrices follow Bourbaki numbering, a_ij = alpha_j(h_i). The simple
//    root alpha_j therefore has fundamental-weight coordinates equal to the
//    j-th column of the Cartan matrix.
//  * Simple-reflection indices are 1-based throughout the public surface.
//  * A WeylWord [i1, ..., ik] denotes the group element s_i1 s_i2 ... s_ik;
//    applying it to a weight applies s_ik first.
//  * The invariant form is normalized so that the shortest simple root has
//    (alpha, alpha) = 2; every pairing is an exact rational.

#include "rational.hpp"

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace qflag {

enum class Series : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

struct LieType {
  Series series = Series::A;
  int rank = 1;

  // "A2", "G2", ... ; throws InvalidArgument on malformed text and
  // DomainError on a rank the series does not admit.
  static LieType parse(std::string_view text);
  static LieType make(char series, int rank);
  std::string name() const;
  bool operator==(const LieType&) const = default;
};

// Throws DomainError unless the rank is admissible for the series.
void validate(const LieType& type);

struct Weight {
  std::vector<std::int64_t> coords;

  Weight() = default;
  explicit Weight(std::vector<std::int64_t> c) : coords(std::move(c)) {}
  static Weight zero(int rank) { return Weight(std::vector<std::int64_t>(static_cast<std::size_t>(rank), 0)); }

  int rank() const { return static_cast<int>(coords.size()); }
  bool is_zero() const;

  Weight& operator+=(const Weight& o);
  Weight& operator-=(const Weight& o);
  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  friend Weight operator-(Weight a);
  friend Weight operator*(std::int64_t s, Weight a);
  auto operator<=>(const Weight&) const = default;
};

std::string to_string(const Weight& w);

struct WeylWord {
  std::vector<int> letters;
  std::size_t length() const { return letters.size(); }
  WeylWord reversed() const { return WeylWord{{letters.rbegin(), letters.rend()}}; }
  bool operator==(const WeylWord&) const = default;
};

struct WeightClass {
  bool dominant = false;
  bool regular = false;
};

using IntMatrix = std::vector<std::vector<int>>;
using RationalMatrix = std::vector<std::vector<Rational>>;

class RootSystem {
public:
  explicit RootSystem(LieType type);

  const LieType& type() const { return type_; }
  int rank() const { return type_.rank; }
  const IntMatrix& cartan() const { return cartan_; }
  std::span<const int> symmetrizers() const { return symmetrizers_; }
  // (omega_i, omega_j)
  const RationalMatrix& gram() const { return gram_; }
  const RationalMatrix& cartan_inverse() const { return cartan_inverse_; }
  const WeylWord& w0_word() const { return w0_word_; }
  // beta_l = s_ik ... s_i(l+1) alpha_il for the cached reduced word of w0.
  std::span<const Weight> positive_roots() const { return positive_roots_; }

  Weight simple_root(int i) const;
  Weight fundamental_weight(int i) const;
  Weight weyl_vector() const { return Weight(std::vector<std::int64_t>(static_cast<std::size_t>(rank()), 1)); }

  Rational inner_product(const Weight& a, const Weight& b) const;
  Weight simple_reflection(int i, const Weight& w) const;
  Weight weyl_apply(const WeylWord& word, const Weight& w) const;

  // Coefficients of w in the simple-root basis.
  std::vector<Rational> root_coordinates(const Weight& w) const;
  // w is a nonzero non-negative integer combination of simple roots.
  bool in_positive_cone(const Weight& w) const;
  // mu <= lambda in the dominance order (lambda - mu in Q+ or zero).
  bool dominance_leq(const Weight& mu, const Weight& lambda) const;

  void check_weight(const Weight& w) const;

private:
  void check_index(int i) const;

  LieType type_;
  IntMatrix cartan_;
  std::vector<int> symmetrizers_;
  RationalMatrix cartan_inverse_;
  RationalMatrix gram_;
  WeylWord w0_word_;
  std::vector<Weight> positive_roots_;
};

RootSystem build_root_system(const LieType& type);

// Bourbaki Cartan matrix of the given type.
IntMatrix cartan_matrix(const LieType& type);

// Smallest positive integers with d_i a_ij = d_j a_ji and min d_i = 1.
std::vector<int> symmetrizers(const IntMatrix& cartan);

// Greedy descent from rho to -rho; the returned word is reduced for w0.
WeylWord longest_element(const RootSystem& rs);

// beta_l = s_ik ... s_i(l+1) alpha_il for a given word; positive roots when the
// word is a reduced expression of w0.
std::vector<Weight> positive_roots(const RootSystem& rs, const WeylWord& w0);

// W-orbits of the simple roots intersected with Q+.
std::vector<Weight> positive_roots_by_orbit(const RootSystem& rs);

// Every root beta_l of the word lies in Q+.
bool is_reduced(const RootSystem& rs, const WeylWord& word);

WeightClass classify_weight(const RootSystem& rs, const Weight& w);

// The unique dominant weight in the W-orbit of w.
Weight dominant_conjugate(const RootSystem& rs, const Weight& w);

// Full W-orbit of w by breadth-first closure under simple reflections.
std::vector<Weight> weyl_orbit(const RootSystem& rs, const Weight& w);

}  // namespace qflag
