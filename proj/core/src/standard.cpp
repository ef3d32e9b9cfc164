#include "gramclass/standard.hpp"

#include <algorithm>

#include "gramclass/error.hpp"

namespace gramclass {

namespace {

// v_t = m - (pi_1 + ... + pi_t); v_0 = m, v_len = 0.
std::vector<int> block_cuts(const Partition& pi) {
  std::vector<int> v;
  v.reserve(pi.parts.size() + 1);
  int cur = pi.sum();
  v.push_back(cur);
  for (int part : pi.parts) {
    cur -= part;
    v.push_back(cur);
  }
  return v;
}

}  // namespace

Quiver standard_quiver(const Partition& pi, int d, StandardVariant variant) {
  check(pi.valid(), Errc::InvalidShape, "partition parts must be positive and non-increasing");
  const int m = pi.sum();
  const int len = pi.length();
  check(m >= 2, Errc::InvalidShape, "partition must sum to at least 2");
  check(d >= 0, Errc::InvalidShape, "degeneracy degree must be non-negative");
  const std::vector<int> v = block_cuts(pi);

  Quiver q;
  q.vertices = m;
  q.arrows.reserve(size_t(m + len + 2 * d - 2));
  if (variant == StandardVariant::A) {
    for (int t = 1; t <= m - 1; ++t) q.arrows.push_back({t, t + 1});
    for (int t = 1; t <= len - 1; ++t)
      q.arrows.push_back({v[size_t(t) - 1], v[size_t(t)]});
    std::pair<int, int> alpha =
        len == 1 ? std::pair{m - 1, m} : std::pair{v[size_t(len) - 2], v[size_t(len) - 1]};
    for (int t = 1; t <= 2 * d; ++t)
      q.arrows.push_back(t % 2 == 1 ? std::pair{alpha.second, alpha.first} : alpha);
  } else {
    for (int t = 1; t <= m - 1; ++t) q.arrows.push_back({1, t + 1});
    for (int t = 1; t <= len - 1; ++t) q.arrows.push_back({1, v[size_t(t)] + 1});
    std::pair<int, int> alpha = len == 1 ? std::pair{1, m} : std::pair{1, v[size_t(len) - 1] + 1};
    for (int t = 1; t <= 2 * d; ++t) q.arrows.push_back(alpha);
  }
  return q;
}

Quiver kronecker(int n, bool inverse) {
  check(n >= 1, Errc::InvalidShape, "need at least one arrow");
  Quiver q;
  q.vertices = 2;
  q.arrows.reserve(size_t(n));
  for (int k = 1; k <= n; ++k) {
    if (!inverse || k % 2 == 1) q.arrows.push_back({1, 2});
    else q.arrows.push_back({2, 1});
  }
  return q;
}

StandardKernel standard_kernel(const Partition& pi, int d) {
  Quiver q = standard_quiver(pi, d, StandardVariant::A);
  const int n = q.n();
  const int c = n - q.m() + 1;

  std::vector<IntVector> cols;
  cols.reserve(size_t(c));
  if (d > 0) {
    // Hyperbolic part: the paired kernel vectors of the Kronecker quiver on
    // 2d + 1 arrows, embedded in the last 2d + 1 arrow coordinates.
    const int kn = 2 * d + 1;
    const int off = n - kn;  // 0-based offset of Kronecker coordinate 1
    std::vector<IntVector> b(size_t(kn), IntVector(size_t(n), Int(0)));
    for (int t = 1; t <= kn - 1; ++t) {
      b[size_t(t)][size_t(off + t - 1)] = 1;
      b[size_t(t)][size_t(off + t)] = 1;
    }
    IntVector odd_acc(size_t(n), Int(0));
    for (int t = 1; t <= 2 * d; ++t) {
      if (t % 2 == 1) {
        for (int j = 0; j < n; ++j) odd_acc[size_t(j)] += b[size_t(t)][size_t(j)];
        cols.push_back(odd_acc);
      } else {
        IntVector neg(size_t(n), Int(0));
        for (int j = 0; j < n; ++j) neg[size_t(j)] = -b[size_t(t)][size_t(j)];
        cols.push_back(std::move(neg));
      }
    }
  }

  // Null part: beta vectors of the standard quiver, minus the dropped orbit
  // (the first orbit of minimal size in the deterministic orbit order).
  std::vector<IntVector> betas = beta_vectors(q);
  XiResult xr = xi_and_cycle_type(q);
  size_t drop = 0;
  for (size_t i = 1; i < xr.orbits.size(); ++i)
    if (xr.orbits[i].size() < xr.orbits[drop].size()) drop = i;
  for (size_t i = 0; i < betas.size(); ++i)
    if (i != drop) cols.push_back(betas[i]);

  check(int(cols.size()) == c, Errc::Internal, "kernel completion has the wrong column count");
  StandardKernel sk;
  sk.K = IntMatrix::from_columns(n, cols);
  sk.split = 2 * d;
  return sk;
}

StandardParams standard_for(const Quiver& q) {
  XiResult xr = xi_and_cycle_type(q);
  const int c = q.n() - q.m() + 1;
  const int two_d = c + 1 - xr.cycle_type.length();
  check(two_d >= 0 && two_d % 2 == 0, Errc::Internal,
        "corank and cycle type length have incompatible parity");
  return {xr.cycle_type, two_d / 2};
}

std::vector<Partition> partitions_part1(int m, int c) {
  std::vector<Partition> out;
  for (Partition& p : partitions_all(m)) {
    int gap = c - (p.length() - 1);
    if (gap >= 0 && gap % 2 == 0) out.push_back(std::move(p));
  }
  return out;
}

long long count_classes(int n, int c) {
  check(n >= 1, Errc::InvalidShape, "need at least one variable");
  check(c >= 0 && c <= n - 1, Errc::InvalidShape, "corank must lie in [0, n-1]");
  const int m = n - c + 1;
  // exact[k][j]: partitions of j into exactly k parts.
  std::vector<std::vector<long long>> exact(size_t(c) + 2,
                                            std::vector<long long>(size_t(m) + 1, 0));
  exact[0][0] = 1;
  for (int k = 1; k <= c + 1; ++k)
    for (int j = 1; j <= m; ++j) {
      exact[size_t(k)][size_t(j)] = exact[size_t(k) - 1][size_t(j) - 1];
      if (j >= k) exact[size_t(k)][size_t(j)] += exact[size_t(k)][size_t(j) - size_t(k)];
    }
  long long total = 0;
  for (int d = 0; 2 * d <= c; ++d) total += exact[size_t(c + 1 - 2 * d)][size_t(m)];
  return total;
}

}  // namespace gramclass
