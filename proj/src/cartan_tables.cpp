// Bourbaki-numbered Dynkin diagrams.
//
//   A_n  1 - 2 - ... - n
//   B_n  1 - 2 - ... - (n-1) => n          alpha_n short
//   C_n  1 - 2 - ... - (n-1) <= n          alpha_n long
//   D_n  1 - 2 - ... - (n-2) - (n-1), (n-2) - n
//   E_n  1 - 3 - 4 - 5 - ... - n, 2 - 4
//   F_4  1 - 2 => 3 - 4                    alpha_1, alpha_2 long
//   G_2  1 <= 2                            alpha_2 long
//
// For a bond of multiplicity m between a long root i and a short root j,
// a_ij = -1 and a_ji = -m.

#include "error.hpp"
#include "rootsys.hpp"

namespace qflag {

namespace {

struct Bond {
  int long_end;   // 1-based
  int short_end;  // 1-based
  int multiplicity;
};

std::vector<Bond> bonds(const LieType& t) {
  const int n = t.rank;
  std::vector<Bond> out;
  auto chain = [&](int from, int to) {
    for (int i = from; i < to; ++i) out.push_back({i, i + 1, 1});
  };
  switch (t.series) {
    case Series::A:
      chain(1, n);
      break;
    case Series::B:
      chain(1, n - 1);
      out.push_back({n - 1, n, 2});
      break;
    case Series::C:
      chain(1, n - 1);
      out.push_back({n, n - 1, 2});
      break;
    case Series::D:
      chain(1, n - 1);
      out.push_back({n - 2, n, 1});
      break;
    case Series::E:
      out.push_back({1, 3, 1});
      out.push_back({2, 4, 1});
      chain(3, n);
      break;
    case Series::F:
      out.push_back({1, 2, 1});
      out.push_back({2, 3, 2});
      out.push_back({3, 4, 1});
      break;
    case Series::G:
      out.push_back({2, 1, 3});
      break;
  }
  return out;
}

}  // namespace

IntMatrix cartan_matrix(const LieType& type) {
  validate(type);
  const auto n = static_cast<std::size_t>(type.rank);
  IntMatrix a(n, std::vector<int>(n, 0));
  for (std::size_t i = 0; i < n; ++i) a[i][i] = 2;
  for (const Bond& b : bonds(type)) {
    const auto l = static_cast<std::size_t>(b.long_end - 1);
    const auto s = static_cast<std::size_t>(b.short_end - 1);
    a[l][s] = -1;
    a[s][l] = -b.multiplicity;
  }
  return a;
}

}  // namespace qflag
