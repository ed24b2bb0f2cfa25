#include "rootsys.hpp"

#include "error.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>

namespace qflag {

// ---------------------------------------------------------------- LieType

LieType LieType::make(char series, int rank) {
  const char s = static_cast<char>(std::toupper(static_cast<unsigned char>(series)));
  if (std::string_view("ABCDEFG").find(s) == std::string_view::npos)
    throw InvalidArgument(std::string("unknown Lie series '") + series + "'");
  LieType t{static_cast<Series>(s), rank};
  validate(t);
  return t;
}

LieType LieType::parse(std::string_view text) {
  if (text.size() < 2) throw InvalidArgument("malformed Lie type '" + std::string(text) + "'");
  int rank = 0;
  for (char c : text.substr(1)) {
    if (c < '0' || c > '9') throw InvalidArgument("malformed Lie type '" + std::string(text) + "'");
    rank = rank * 10 + (c - '0');
    if (rank > 1000) throw DomainError("rank too large in '" + std::string(text) + "'");
  }
  return make(text.front(), rank);
}

std::string LieType::name() const { return std::string(1, static_cast<char>(series)) + std::to_string(rank); }

void validate(const LieType& t) {
  const int n = t.rank;
  bool ok = false;
  switch (t.series) {
    case Series::A: ok = n >= 1; break;
    case Series::B:
    case Series::C: ok = n >= 2; break;
    case Series::D: ok = n >= 3; break;
    case Series::E: ok = n >= 6 && n <= 8; break;
    case Series::F: ok = n == 4; break;
    case Series::G: ok = n == 2; break;
  }
  if (!ok) throw DomainError("invalid rank " + std::to_string(n) + " for series " + std::string(1, static_cast<char>(t.series)));
}

// ---------------------------------------------------------------- Weight

bool Weight::is_zero() const {
  return std::all_of(coords.begin(), coords.end(), [](std::int64_t c) { return c == 0; });
}

Weight& Weight::operator+=(const Weight& o) {
  if (o.coords.size() != coords.size()) throw InvalidArgument("weight rank mismatch");
  for (std::size_t i = 0; i < coords.size(); ++i) coords[i] += o.coords[i];
  return *this;
}

Weight& Weight::operator-=(const Weight& o) {
  if (o.coords.size() != coords.size()) throw InvalidArgument("weight rank mismatch");
  for (std::size_t i = 0; i < coords.size(); ++i) coords[i] -= o.coords[i];
  return *this;
}

Weight operator-(Weight a) {
  for (auto& c : a.coords) c = -c;
  return a;
}

Weight operator*(std::int64_t s, Weight a) {
  for (auto& c : a.coords) c *= s;
  return a;
}

std::string to_string(const Weight& w) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < w.coords.size(); ++i) os << (i ? "," : "") << w.coords[i];
  os << ')';
  return os.str();
}

// ---------------------------------------------------------------- helpers

std::vector<int> symmetrizers(const IntMatrix& a) {
  const std::size_t n = a.size();
  std::vector<Rational> d(n, 0);
  d[0] = 1;
  // The diagram of an irreducible Cartan matrix is connected.
  std::deque<std::size_t> queue{0};
  while (!queue.empty()) {
    const std::size_t i = queue.front();
    queue.pop_front();
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j || a[i][j] == 0) continue;
      if (a[j][i] == 0) throw DomainError("Cartan matrix is not symmetrizable");
      const Rational dj = d[i] * a[i][j] / a[j][i];
      if (d[j] == 0) {
        d[j] = dj;
        queue.push_back(j);
      } else if (d[j] != dj) {
        throw DomainError("Cartan matrix is not symmetrizable");
      }
    }
  }
  Integer den_lcm = 1;
  for (const auto& x : d) {
    if (x == 0) throw DomainError("Cartan matrix is not irreducible");
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), x.get_den().get_mpz_t());
  }
  std::vector<Integer> ints;
  for (const auto& x : d) ints.push_back(x.get_num() * (den_lcm / x.get_den()));
  Integer g = 0;
  for (const auto& z : ints) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z.get_mpz_t());
  std::vector<int> out;
  for (const auto& z : ints) out.push_back(static_cast<int>(Integer(z / g).get_si()));
  return out;
}

namespace {

RationalMatrix invert(const IntMatrix& a) {
  const std::size_t n = a.size();
  RationalMatrix m(n, std::vector<Rational>(2 * n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m[i][j] = a[i][j];
    m[i][n + i] = 1;
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m[pivot][col] == 0) ++pivot;
    if (pivot == n) throw DomainError("singular Cartan matrix");
    std::swap(m[pivot], m[col]);
    const Rational inv = 1 / m[col][col];
    for (auto& x : m[col]) x *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || m[r][col] == 0) continue;
      const Rational f = m[r][col];
      for (std::size_t c = 0; c < 2 * n; ++c) m[r][c] -= f * m[col][c];
    }
  }
  RationalMatrix out(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out[i][j] = m[i][n + j];
  return out;
}

}  // namespace

// ---------------------------------------------------------------- RootSystem

RootSystem::RootSystem(LieType type) : type_(type) {
  validate(type_);
  cartan_ = cartan_matrix(type_);
  symmetrizers_ = qflag::symmetrizers(cartan_);
  cartan_inverse_ = invert(cartan_);
  const auto n = static_cast<std::size_t>(rank());
  gram_.assign(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) gram_[i][j] = symmetrizers_[i] * cartan_inverse_[i][j];
  w0_word_ = longest_element(*this);
  positive_roots_ = qflag::positive_roots(*this, w0_word_);
}

RootSystem build_root_system(const LieType& type) { return RootSystem(type); }

void RootSystem::check_index(int i) const {
  if (i < 1 || i > rank())
    throw DomainError("simple reflection index " + std::to_string(i) + " out of range 1.." + std::to_string(rank()));
}

void RootSystem::check_weight(const Weight& w) const {
  if (w.rank() != rank())
    throw InvalidArgument("weight " + to_string(w) + " has " + std::to_string(w.rank()) + " coordinates, expected " +
                          std::to_string(rank()));
}

Weight RootSystem::simple_root(int i) const {
  check_index(i);
  Weight w = Weight::zero(rank());
  for (int k = 0; k < rank(); ++k) w.coords[static_cast<std::size_t>(k)] = cartan_[static_cast<std::size_t>(k)][static_cast<std::size_t>(i - 1)];
  return w;
}

Weight RootSystem::fundamental_weight(int i) const {
  check_index(i);
  Weight w = Weight::zero(rank());
  w.coords[static_cast<std::size_t>(i - 1)] = 1;
  return w;
}

Rational RootSystem::inner_product(const Weight& a, const Weight& b) const {
  check_weight(a);
  check_weight(b);
  Rational sum = 0;
  const auto n = static_cast<std::size_t>(rank());
  for (std::size_t i = 0; i < n; ++i) {
    if (a.coords[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (b.coords[j] == 0) continue;
      sum += gram_[i][j] * Rational(static_cast<long>(a.coords[i] * b.coords[j]));
    }
  }
  return sum;
}

Weight RootSystem::simple_reflection(int i, const Weight& w) const {
  check_index(i);
  check_weight(w);
  const std::int64_t c = w.coords[static_cast<std::size_t>(i - 1)];
  if (c == 0) return w;
  Weight out = w;
  for (int k = 0; k < rank(); ++k)
    out.coords[static_cast<std::size_t>(k)] -= c * cartan_[static_cast<std::size_t>(k)][static_cast<std::size_t>(i - 1)];
  return out;
}

Weight RootSystem::weyl_apply(const WeylWord& word, const Weight& w) const {
  Weight out = w;
  for (auto it = word.letters.rbegin(); it != word.letters.rend(); ++it) out = simple_reflection(*it, out);
  return out;
}

std::vector<Rational> RootSystem::root_coordinates(const Weight& w) const {
  check_weight(w);
  const auto n = static_cast<std::size_t>(rank());
  std::vector<Rational> c(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) c[i] += cartan_inverse_[i][j] * Rational(static_cast<long>(w.coords[j]));
  return c;
}

bool RootSystem::in_positive_cone(const Weight& w) const {
  if (w.is_zero()) return false;
  for (const auto& c : root_coordinates(w))
    if (c < 0 || c.get_den() != 1) return false;
  return true;
}

bool RootSystem::dominance_leq(const Weight& mu, const Weight& lambda) const {
  const Weight diff = lambda - mu;
  return diff.is_zero() || in_positive_cone(diff);
}

// ---------------------------------------------------------------- free operations

WeylWord longest_element(const RootSystem& rs) {
  const Weight rho = rs.weyl_vector();
  const Weight target = -rho;
  Weight current = rho;
  WeylWord recorded;
  while (current != target) {
    int chosen = 0;
    for (int i = 1; i <= rs.rank(); ++i) {
      if (current.coords[static_cast<std::size_t>(i - 1)] > 0) {
        chosen = i;
        break;
      }
    }
    if (chosen == 0) throw DomainError("longest element descent stalled");
    current = rs.simple_reflection(chosen, current);
    recorded.letters.push_back(chosen);
  }
  return recorded.reversed();
}

std::vector<Weight> positive_roots(const RootSystem& rs, const WeylWord& w0) {
  std::vector<Weight> out;
  const auto k = w0.letters.size();
  out.reserve(k);
  for (std::size_t l = 0; l < k; ++l) {
    Weight beta = rs.simple_root(w0.letters[l]);
    // s_ik ... s_i(l+1): apply s_i(l+1) first.
    for (std::size_t m = l + 1; m < k; ++m) beta = rs.simple_reflection(w0.letters[m], beta);
    out.push_back(std::move(beta));
  }
  return out;
}

std::vector<Weight> weyl_orbit(const RootSystem& rs, const Weight& w) {
  rs.check_weight(w);
  std::set<Weight> seen{w};
  std::vector<Weight> order{w};
  for (std::size_t head = 0; head < order.size(); ++head) {
    for (int i = 1; i <= rs.rank(); ++i) {
      Weight next = rs.simple_reflection(i, order[head]);
      if (seen.insert(next).second) order.push_back(std::move(next));
    }
  }
  return order;
}

std::vector<Weight> positive_roots_by_orbit(const RootSystem& rs) {
  std::set<Weight> roots;
  for (int i = 1; i <= rs.rank(); ++i)
    for (auto& r : weyl_orbit(rs, rs.simple_root(i)))
      if (rs.in_positive_cone(r)) roots.insert(r);
  return {roots.begin(), roots.end()};
}

bool is_reduced(const RootSystem& rs, const WeylWord& word) {
  for (int letter : word.letters)
    if (letter < 1 || letter > rs.rank()) return false;
  for (const auto& beta : positive_roots(rs, word))
    if (!rs.in_positive_cone(beta)) return false;
  return true;
}

WeightClass classify_weight(const RootSystem& rs, const Weight& w) {
  rs.check_weight(w);
  WeightClass c;
  c.dominant = std::all_of(w.coords.begin(), w.coords.end(), [](std::int64_t x) { return x >= 0; });
  c.regular = std::all_of(w.coords.begin(), w.coords.end(), [](std::int64_t x) { return x > 0; });
  return c;
}

Weight dominant_conjugate(const RootSystem& rs, const Weight& w) {
  rs.check_weight(w);
  Weight cur = w;
  for (;;) {
    int neg = 0;
    for (int i = 1; i <= rs.rank(); ++i) {
      if (cur.coords[static_cast<std::size_t>(i - 1)] < 0) {
        neg = i;
        break;
      }
    }
    if (neg == 0) return cur;
    cur = rs.simple_reflection(neg, cur);
  }
}

}  // namespace qflag
