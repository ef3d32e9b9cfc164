#include <doctest.h>

#include <set>
#include <vector>

#include "gramclass/error.hpp"
#include "gramclass/exactmat.hpp"
#include "gramclass/partition.hpp"
#include "gramclass/quiver.hpp"
#include "gramclass/standard.hpp"
#include "helpers.hpp"

using namespace gramclass;

namespace {

// v_t = m - (pi_1 + ... + pi_t), with v_0 = m and v_len = 0.
std::vector<int> cuts(const Partition& pi) {
  std::vector<int> v{pi.sum()};
  int acc = pi.sum();
  for (int part : pi.parts) v.push_back(acc -= part);
  return v;
}

IntVector unit(int n, int i) {  // e_i, 1-based
  IntVector e(size_t(n), Int(0));
  e[size_t(i) - 1] = 1;
  return e;
}

IntVector minus(const IntVector& a) {
  IntVector r = a;
  for (Int& v : r) v = -v;
  return r;
}

IntVector plus(const IntVector& a, const IntVector& b) {
  IntVector r = a;
  for (size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

// Closed-form incidence matrix of the standard quiver, assembled column by
// column from the linear-quiver part, the joint arrows and the degenerate
// tail.
IntMatrix incidence_oracle(const Partition& pi, int d) {
  const int m = pi.sum();
  const int ell = pi.length();
  const std::vector<int> v = cuts(pi);
  std::vector<IntVector> cols;
  for (int t = 1; t <= m - 1; ++t)
    cols.push_back(plus(unit(m, t), minus(unit(m, t + 1))));
  std::vector<IntVector> x;  // x_t = e_{v_{t-1}} - e_{v_t}
  for (int t = 1; t <= ell - 1; ++t)
    x.push_back(plus(unit(m, v[size_t(t) - 1]), minus(unit(m, v[size_t(t)]))));
  for (const IntVector& xt : x) cols.push_back(xt);
  IntVector base = ell == 1 ? plus(unit(m, m - 1), minus(unit(m, m))) : x.back();
  for (int t = 1; t <= 2 * d; ++t)
    cols.push_back(t % 2 == 1 ? minus(base) : base);
  return IntMatrix::from_columns(m, cols);
}

// Closed-form incidence matrix of the inverse of the standard quiver,
// assembled row by row.
IntMatrix inverse_incidence_oracle(const Partition& pi, int d) {
  const int m = pi.sum();
  const int ell = pi.length();
  const std::vector<int> v = cuts(pi);
  const int n = m + ell + 2 * d - 2;
  IntMatrix r(m, n);
  for (int j = 0; j < n; ++j) r.at(0, j) = 1;  // row 1 is all ones
  if (ell == 1) {
    for (int row = 2; row < m; ++row) r.at(row - 1, row - 2) = -1;
    for (int j = 0; j < n; ++j)
      r.at(m - 1, j) = (j == m - 2 || j >= m - 1) ? -1 : 0;
    return r;
  }
  std::set<int> special;  // rows v_t + 1 for t = 1..ell-1
  for (int t = 1; t <= ell - 1; ++t) special.insert(v[size_t(t)] + 1);
  for (int row = 2; row <= m; ++row) {
    if (special.count(row)) continue;
    r.at(row - 1, row - 2) = -1;
  }
  for (int t = 1; t <= ell - 1; ++t) {
    int row = v[size_t(t)] + 1;
    // z_t = e_{v_t} + e_{m-1+t}
    r.at(row - 1, v[size_t(t)] - 1) = -1;
    r.at(row - 1, m - 1 + t - 1) = -1;
    if (t == ell - 1)
      for (int j = m + ell - 1; j <= n; ++j) r.at(row - 1, j - 1) = -1;
  }
  return r;
}

std::vector<Partition> partitions_up_to(int mmax) {
  std::vector<Partition> out;
  for (int m = 2; m <= mmax; ++m)
    for (const Partition& p : partitions_all(m)) out.push_back(p);
  return out;
}

}  // namespace

TEST_CASE("standard quivers of the running examples") {
  CHECK(standard_quiver(Partition{3}, 1, StandardVariant::A) ==
        Quiver{3, {{1, 2}, {2, 3}, {3, 2}, {2, 3}}});
  CHECK(standard_quiver(Partition{1, 1, 1}, 0, StandardVariant::A) ==
        Quiver{3, {{1, 2}, {2, 3}, {3, 2}, {2, 1}}});
  CHECK(standard_quiver(Partition{3}, 1, StandardVariant::Star) ==
        Quiver{3, {{1, 2}, {1, 3}, {1, 3}, {1, 3}}});
  CHECK(standard_quiver(Partition{1, 1, 1}, 0, StandardVariant::Star) ==
        Quiver{3, {{1, 2}, {1, 3}, {1, 3}, {1, 2}}});
  CHECK(standard_quiver(Partition{3, 2}, 1, StandardVariant::A) ==
        Quiver{5, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 2}, {2, 5}, {5, 2}}});
  CHECK(standard_quiver(Partition{3, 2}, 1, StandardVariant::Star) ==
        Quiver{5, {{1, 2}, {1, 3}, {1, 4}, {1, 5}, {1, 3}, {1, 3}, {1, 3}}});
}

TEST_CASE("standard quiver shape validation") {
  CHECK_FAILS_WITH(Errc::InvalidShape,
                   standard_quiver(Partition{1}, 0, StandardVariant::A));
  CHECK_FAILS_WITH(Errc::InvalidShape,
                   standard_quiver(Partition{1, 2}, 0, StandardVariant::A));
  CHECK_FAILS_WITH(Errc::InvalidShape,
                   standard_quiver(Partition{3}, -1, StandardVariant::A));
}

TEST_CASE("kronecker quivers") {
  CHECK(kronecker(2, false) == Quiver{2, {{1, 2}, {1, 2}}});
  CHECK(kronecker(5, true) ==
        Quiver{2, {{1, 2}, {2, 1}, {1, 2}, {2, 1}, {1, 2}}});
  CHECK_FAILS_WITH(Errc::InvalidShape, kronecker(0, false));
}

TEST_CASE("kronecker quivers are the two-vertex standard quivers") {
  for (int d = 0; d <= 3; ++d) {
    CHECK(kronecker(2 * d + 2, true) ==
          standard_quiver(Partition{1, 1}, d, StandardVariant::A));
    CHECK(kronecker(2 * d + 1, true) ==
          standard_quiver(Partition{2}, d, StandardVariant::A));
    CHECK(kronecker(2 * d + 2, false) ==
          standard_quiver(Partition{1, 1}, d, StandardVariant::Star));
    CHECK(kronecker(2 * d + 1, false) ==
          standard_quiver(Partition{2}, d, StandardVariant::Star));
  }
  for (int n = 1; n <= 6; ++n)
    CHECK(inverse_quiver(kronecker(n, false)) == kronecker(n, true));
}

TEST_CASE("star variant is the inverse of the standard quiver") {
  for (const Partition& pi : partitions_up_to(7))
    for (int d = 0; d <= 2; ++d)
      CHECK(inverse_quiver(standard_quiver(pi, d, StandardVariant::A)) ==
            standard_quiver(pi, d, StandardVariant::Star));
}

TEST_CASE("incidence of standard quivers matches the closed form") {
  for (const Partition& pi : partitions_up_to(7))
    for (int d = 0; d <= 2; ++d) {
      Quiver q = standard_quiver(pi, d, StandardVariant::A);
      CHECK(incidence(q) == incidence_oracle(pi, d));
      CHECK(incidence(inverse_quiver(q)) == inverse_incidence_oracle(pi, d));
    }
}

TEST_CASE("xi of a standard quiver follows the cut formula") {
  for (const Partition& pi : partitions_up_to(7))
    for (int d = 0; d <= 2; ++d) {
      Quiver q = standard_quiver(pi, d, StandardVariant::A);
      XiResult x = xi_and_cycle_type(q);
      CHECK(x.cycle_type == pi);
      std::vector<int> v = cuts(pi);
      for (int vert = 1; vert <= q.m(); ++vert) {
        int expected = vert + 1;
        for (int t = 0; t < pi.length(); ++t)
          if (v[size_t(t)] == vert) expected = v[size_t(t) + 1] + 1;
        CHECK(x.xi.apply(vert) == expected);
      }
    }
}

TEST_CASE("standard kernels of the running examples") {
  StandardKernel k1 = standard_kernel(Partition{3}, 1);
  CHECK(k1.split == 2);
  CHECK(k1.K == IntMatrix{{0, 0}, {1, 0}, {1, -1}, {0, -1}});
  StandardKernel k0 = standard_kernel(Partition{1, 1, 1}, 0);
  CHECK(k0.split == 0);
  CHECK(k0.K == IntMatrix{{1, 0}, {0, 1}, {0, 1}, {1, 0}});
}

TEST_CASE("standard kernel pairs hyperbolically") {
  for (const Partition& pi : partitions_up_to(8))
    for (int d = 0; d <= 3; ++d) {
      Quiver q = standard_quiver(pi, d, StandardVariant::A);
      GramPair g = gram(q);
      StandardKernel sk = standard_kernel(pi, d);
      const int c = q.n() - q.m() + 1;
      CHECK(sk.K.rows() == q.n());
      CHECK(sk.K.cols() == c);
      CHECK(sk.split == 2 * d);
      CHECK((g.G * sk.K).is_zero());
      CHECK(sk.K.transposed() * g.Ghat * sk.K == pure_w(c, d));
      // Saturation: the columns generate the full integer kernel lattice.
      IntMatrix any = kernel_basis(incidence(q));
      for (int j = 0; j < any.cols(); ++j)
        CHECK(in_column_lattice(sk.K, any.col(j)));
      for (int j = 0; j < sk.K.cols(); ++j)
        CHECK(in_column_lattice(any, sk.K.col(j)));
    }
}

TEST_CASE("standard parameters recovered from standard quivers") {
  for (const Partition& pi : partitions_up_to(7))
    for (int d = 0; d <= 2; ++d) {
      StandardParams p = standard_for(standard_quiver(pi, d, StandardVariant::A));
      CHECK(p.pi == pi);
      CHECK(p.d == d);
    }
  StandardParams p1 = standard_for(Quiver{3, {{3, 1}, {2, 3}, {1, 2}, {3, 1}}});
  CHECK(p1.pi == Partition{3});
  CHECK(p1.d == 1);
  StandardParams p0 = standard_for(Quiver{3, {{3, 1}, {2, 3}, {3, 1}, {1, 2}}});
  CHECK(p0.pi == Partition{1, 1, 1});
  CHECK(p0.d == 0);
  StandardParams pk = standard_for(kronecker(4, false));
  CHECK(pk.pi == Partition{1, 1});
  CHECK(pk.d == 1);
}

TEST_CASE("partitions with permitted length") {
  std::vector<Partition> a = partitions_part1(3, 2);
  REQUIRE(a.size() == 2);
  CHECK(a[0] == Partition{3});
  CHECK(a[1] == Partition{1, 1, 1});
  std::vector<Partition> b = partitions_part1(5, 1);
  REQUIRE(b.size() == 2);
  CHECK(b[0] == Partition{4, 1});
  CHECK(b[1] == Partition{3, 2});
  std::vector<Partition> c = partitions_part1(2, 0);
  REQUIRE(c.size() == 1);
  CHECK(c[0] == Partition{2});
}

TEST_CASE("class counts") {
  CHECK(count_classes(4, 2) == 2);
  CHECK(count_classes(10, 1) == 5);
  for (int n = 1; n <= 20; ++n) CHECK(count_classes(n, 0) == 1);
  for (int n = 3; n <= 20; ++n) {
    CHECK(count_classes(n, 1) == n / 2);
    if (n >= 3)
      CHECK(count_classes(n, 2) == ((n - 1) * (n - 1) + 15) / 12);
  }
  for (int n = 1; n <= 14; ++n)
    for (int c = 0; c <= 4 && c <= n - 1; ++c)
      CHECK(count_classes(n, c) ==
            (long long)partitions_part1(n - c + 1, c).size());
  CHECK_FAILS_WITH(Errc::InvalidShape, count_classes(0, 0));
  CHECK_FAILS_WITH(Errc::InvalidShape, count_classes(3, 3));
  CHECK_FAILS_WITH(Errc::InvalidShape, count_classes(3, -1));
}
