#include "gramclass/unitform.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <queue>
#include <sstream>

#include "gramclass/error.hpp"

namespace gramclass {

void validate(const UnitForm& q) {
  check(q.n >= 1, Errc::NotUnitForm, "form needs at least one variable");
  check(q.upper.rows() == q.n && q.upper.cols() == q.n, Errc::NotUnitForm,
        "upper matrix size does not match n");
  for (int i = 0; i < q.n; ++i) {
    check(q.upper.at(i, i) == 1, Errc::NotUnitForm, "diagonal entries must be 1");
    for (int j = 0; j < i; ++j)
      check(q.upper.at(i, j) == 0, Errc::NotUnitForm, "matrix must be upper triangular");
  }
}

bool is_connected(const UnitForm& q) {
  IntMatrix g = q.sym();
  std::vector<char> seen(size_t(q.n), 0);
  std::queue<int> bfs;
  bfs.push(0);
  seen[0] = 1;
  int reached = 1;
  while (!bfs.empty()) {
    int v = bfs.front();
    bfs.pop();
    for (int u = 0; u < q.n; ++u)
      if (u != v && !seen[size_t(u)] && g.at(v, u) != 0) {
        seen[size_t(u)] = 1;
        ++reached;
        bfs.push(u);
      }
  }
  return reached == q.n;
}

UnitForm from_quiver(const Quiver& q) {
  validate(q);
  return UnitForm{q.n(), gram(q).Ghat};
}

Quiver realize_as_quiver(const UnitForm& q) {
  validate(q);
  IntMatrix G = q.sym();
  const int n = q.n;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j)
        check(G.at(i, j) >= -2 && G.at(i, j) <= 2, Errc::NotTypeA,
              "off-diagonal symmetric Gram entries must lie in [-2, 2]");
  PsdRank pr = psd_rank(G);
  check(pr.is_psd, Errc::NotTypeA, "form is not positive semidefinite");
  const int m = pr.rank + 1;
  std::vector<std::vector<long long>> g(size_t(n), std::vector<long long>(size_t(n), 0LL));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) g[size_t(i)][size_t(j)] = G.at(i, j).convert_to<long long>();
  std::vector<int> src(size_t(n), 0), tgt(size_t(n), 0);

  auto leaf_connected = [&]() {
    std::vector<char> seen(size_t(m) + 1, 0);
    std::queue<int> bfs;
    bfs.push(1);
    seen[1] = 1;
    int reached = 1;
    while (!bfs.empty()) {
      int v = bfs.front();
      bfs.pop();
      for (int a = 0; a < n; ++a) {
        int other = -1;
        if (src[size_t(a)] == v) other = tgt[size_t(a)];
        else if (tgt[size_t(a)] == v) other = src[size_t(a)];
        if (other != -1 && !seen[size_t(other)]) {
          seen[size_t(other)] = 1;
          ++reached;
          bfs.push(other);
        }
      }
    }
    return reached == m;
  };

  // Backtracking over arrow endpoints; new vertex labels appear in increasing
  // order, which prunes relabel-equivalent assignments.
  std::function<bool(int, int)> dfs = [&](int pos, int used) -> bool {
    if (pos == n) return used == m && leaf_connected();
    if (used + 2 * (n - pos) < m) return false;
    for (int s = 1; s <= std::min(used + 1, m); ++s) {
      int tmax = std::min(std::max(used, s) + 1, m);
      for (int t = 1; t <= tmax; ++t) {
        if (t == s) continue;
        bool ok = true;
        for (int j = 0; j < pos && ok; ++j) {
          long long dotv = (s == src[size_t(j)] ? 1 : 0) - (s == tgt[size_t(j)] ? 1 : 0) -
                           (t == src[size_t(j)] ? 1 : 0) + (t == tgt[size_t(j)] ? 1 : 0);
          if (dotv != g[size_t(pos)][size_t(j)]) ok = false;
        }
        if (!ok) continue;
        src[size_t(pos)] = s;
        tgt[size_t(pos)] = t;
        if (dfs(pos + 1, std::max({used, s, t}))) return true;
      }
    }
    return false;
  };

  check(dfs(0, 0), Errc::NotTypeA, "no connected quiver realizes this form");
  Quiver out;
  out.vertices = m;
  out.arrows.reserve(size_t(n));
  for (int a = 0; a < n; ++a) out.arrows.push_back({src[size_t(a)], tgt[size_t(a)]});
  return out;
}

CoxeterData coxeter(const UnitForm& q) {
  validate(q);
  IntMatrix phi = -(q.upper.transposed() * inverse_unimodular(q.upper));
  PolyZ poly = char_poly(phi);
  return {phi, poly};
}

RadicalProfile radical_profile(const UnitForm& q) {
  validate(q);
  IntMatrix G = q.sym();
  check(psd_rank(G).is_psd, Errc::NotNonNegative, "form is not positive semidefinite");
  IntMatrix K0 = kernel_basis(G);
  IntMatrix W0 = K0.transposed() * q.upper * K0;
  SkewNormalForm snf = skew_normal_form(W0);
  RadicalProfile rp;
  rp.K = K0 * snf.P;
  rp.W = rp.K.transposed() * q.upper * rp.K;
  rp.corank = rp.K.cols();
  rp.degeneracy = int(snf.d.size());
  rp.reduced_corank = rp.corank - 2 * rp.degeneracy;
  rp.K_re = rp.K.block(0, 2 * rp.degeneracy, rp.K.rows(), rp.reduced_corank);
  return rp;
}

CoxeterNumbers coxeter_numbers(const Partition& pi, int c) {
  (void)c;  // determined by pi alone; kept for signature symmetry
  CoxeterNumbers out;
  out.h_finite = pi.length() == 1;
  if (out.h_finite) out.h = pi.parts[0];
  out.h_re = pi.lcm();
  return out;
}

Classification classify(const UnitForm& q) {
  validate(q);
  check(is_connected(q), Errc::NotConnected, "form is not connected");
  RadicalProfile rp = radical_profile(q);
  Quiver Q = realize_as_quiver(q);
  XiResult xr = xi_and_cycle_type(Q);
  CoxeterData cox = coxeter(q);

  Classification cls;
  cls.n = q.n;
  cls.corank = rp.corank;
  cls.dynkin_rank = q.n - rp.corank;
  cls.cycle_type = xr.cycle_type;
  cls.degeneracy = rp.degeneracy;
  cls.reduced_corank = rp.reduced_corank;
  cls.coxeter_polynomial = cox.phi_poly;
  cls.numbers = coxeter_numbers(xr.cycle_type, rp.corank);

  const int c = rp.corank;
  const int m = Q.m();
  std::ostringstream fact;
  if (c == 0) {
    fact << "(nu^" << m << "-1)/(nu-1)";
  } else {
    int e = c - 1;
    for (int part : xr.cycle_type.parts)
      if (part == 1) ++e;
    bool first = true;
    if (e == 1) {
      fact << "(nu-1)";
      first = false;
    } else if (e > 1) {
      fact << "(nu-1)^" << e;
      first = false;
    }
    for (int part : xr.cycle_type.parts) {
      if (part < 2) continue;
      if (!first) fact << ' ';
      fact << "(nu^" << part << "-1)";
      first = false;
    }
  }
  cls.factorization = fact.str();

  // Exact cross-multiplied validation of the factored Coxeter polynomial:
  // (nu-1) * phi_poly == (nu-1)^c * prod_t (nu^{pi_t} - 1).
  PolyZ lhs = PolyZ::nu_minus_one_pow(1) * cox.phi_poly;
  PolyZ rhs = PolyZ::nu_minus_one_pow(c);
  for (int part : xr.cycle_type.parts) rhs = rhs * PolyZ::nu_pow_minus_one(part);
  check(lhs == rhs, Errc::Internal, "Coxeter polynomial factorization mismatch");
  return cls;
}

}  // namespace gramclass
