#include "gramclass/exactmat.hpp"

#include <algorithm>
#include <vector>

#include "gramclass/error.hpp"

namespace gramclass {

namespace {

Int iabs(const Int& a) { return a < 0 ? Int(-a) : a; }

}  // namespace

HnfResult hnf(const IntMatrix& m) {
  const int rows = m.rows(), cols = m.cols();
  IntMatrix h = m;
  IntMatrix u = IntMatrix::identity(cols);
  int c = 0;  // next pivot column
  for (int r = 0; r < rows && c < cols; ++r) {
    // Reduce row r over columns >= c to a single nonzero entry at column c.
    while (true) {
      int best = -1;
      for (int j = c; j < cols; ++j) {
        if (h.at(r, j) == 0) continue;
        if (best == -1 || iabs(h.at(r, j)) < iabs(h.at(r, best))) best = j;
      }
      if (best == -1) break;  // row r is zero on columns >= c
      if (best != c) {
        h.swap_cols(c, best);
        u.swap_cols(c, best);
      }
      bool leftover = false;
      for (int j = c + 1; j < cols; ++j) {
        if (h.at(r, j) == 0) continue;
        Int q = h.at(r, j) / h.at(r, c);  // truncated quotient
        if (q != 0) {
          h.add_col(j, c, -q);
          u.add_col(j, c, -q);
        }
        if (h.at(r, j) != 0) leftover = true;
      }
      if (!leftover) break;  // gcd reached; pivot final for this row
    }
    if (h.at(r, c) != 0) {
      if (h.at(r, c) < 0) {
        h.negate_col(c);
        u.negate_col(c);
      }
      // Entries left of the pivot in its row reduced into [0, pivot).
      for (int j = 0; j < c; ++j) {
        Int q = floor_div(h.at(r, j), h.at(r, c));
        if (q != 0) {
          h.add_col(j, c, -q);
          u.add_col(j, c, -q);
        }
      }
      ++c;
    }
  }
  return {h, u};
}

IntMatrix kernel_basis(const IntMatrix& m) {
  HnfResult r = hnf(m);
  int nonzero = 0;
  for (int j = 0; j < r.H.cols(); ++j) {
    bool zero = true;
    for (int i = 0; i < r.H.rows() && zero; ++i)
      if (r.H.at(i, j) != 0) zero = false;
    if (!zero) ++nonzero;
  }
  return r.U.block(0, nonzero, r.U.rows(), r.U.cols() - nonzero);
}

int rank(const IntMatrix& m) {
  HnfResult r = hnf(m);
  int nonzero = 0;
  for (int j = 0; j < r.H.cols(); ++j) {
    bool zero = true;
    for (int i = 0; i < r.H.rows() && zero; ++i)
      if (r.H.at(i, j) != 0) zero = false;
    if (!zero) ++nonzero;
  }
  return nonzero;
}

IntMatrix solve_exact(const IntMatrix& a, const IntMatrix& b) {
  check(a.rows() == b.rows(), Errc::ShapeMismatch, "solve: row count mismatch");
  const int rows = a.rows(), acols = a.cols(), bcols = b.cols();
  if (acols == 0) {
    check(b.is_zero(), Errc::NoSolution, "inconsistent system: zero map cannot reach a nonzero target");
    return IntMatrix(0, bcols);
  }
  std::vector<std::vector<Rat>> t(size_t(rows), std::vector<Rat>(size_t(acols + bcols)));
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < acols; ++j) t[size_t(i)][size_t(j)] = Rat(a.at(i, j));
    for (int j = 0; j < bcols; ++j) t[size_t(i)][size_t(acols + j)] = Rat(b.at(i, j));
  }
  int piv = 0;
  for (int col = 0; col < acols; ++col) {
    int sel = -1;
    for (int r = piv; r < rows; ++r)
      if (t[size_t(r)][size_t(col)] != 0) {
        sel = r;
        break;
      }
    check(sel != -1, Errc::Underdetermined, "matrix does not have full column rank");
    std::swap(t[size_t(sel)], t[size_t(piv)]);
    Rat d = t[size_t(piv)][size_t(col)];
    for (int j = col; j < acols + bcols; ++j) t[size_t(piv)][size_t(j)] /= d;
    for (int r = 0; r < rows; ++r) {
      if (r == piv) continue;
      Rat f = t[size_t(r)][size_t(col)];
      if (f == 0) continue;
      for (int j = col; j < acols + bcols; ++j)
        t[size_t(r)][size_t(j)] -= f * t[size_t(piv)][size_t(j)];
    }
    ++piv;
  }
  for (int r = piv; r < rows; ++r)
    for (int j = 0; j < bcols; ++j)
      check(t[size_t(r)][size_t(acols + j)] == 0, Errc::NoSolution, "inconsistent linear system");
  IntMatrix x(acols, bcols);
  for (int i = 0; i < acols; ++i)
    for (int j = 0; j < bcols; ++j) {
      const Rat& v = t[size_t(i)][size_t(acols + j)];
      check(denominator(v) == 1, Errc::NonIntegerSolution, "unique rational solution is not integral");
      x.at(i, j) = numerator(v);
    }
  return x;
}

PolyZ char_poly(const IntMatrix& m) {
  check(m.is_square(), Errc::NotSquare, "characteristic polynomial requires a square matrix");
  const int n = m.rows();
  if (n == 0) return PolyZ::one();
  // Berkowitz iteration: c holds char-poly coefficients of the leading r x r
  // principal block, highest degree first.
  std::vector<Int> c = {Int(1), -m.at(0, 0)};
  for (int r = 1; r < n; ++r) {
    std::vector<Int> q(size_t(r) + 1);
    q[0] = m.at(r, r);
    IntVector s(size_t(r), Int(0));
    IntVector rv(size_t(r), Int(0));
    for (int i = 0; i < r; ++i) {
      s[size_t(i)] = m.at(i, r);
      rv[size_t(i)] = m.at(r, i);
    }
    IntVector cur = s;
    for (int k = 1; k <= r; ++k) {
      Int val = 0;
      for (int i = 0; i < r; ++i) val += rv[size_t(i)] * cur[size_t(i)];
      q[size_t(k)] = val;
      if (k < r) {
        IntVector next(size_t(r), Int(0));
        for (int i = 0; i < r; ++i) {
          Int acc = 0;
          for (int j = 0; j < r; ++j) acc += m.at(i, j) * cur[size_t(j)];
          next[size_t(i)] = acc;
        }
        cur = std::move(next);
      }
    }
    std::vector<Int> nc(size_t(r) + 2);
    for (int i = 0; i <= r + 1; ++i) {
      Int acc = (i <= r) ? c[size_t(i)] : Int(0);
      int kmax = std::min(i - 1, r);
      for (int k = 0; k <= kmax; ++k) acc -= q[size_t(k)] * c[size_t(i - 1 - k)];
      nc[size_t(i)] = acc;
    }
    c = std::move(nc);
  }
  std::vector<Int> lowest_first(c.rbegin(), c.rend());
  return PolyZ(std::move(lowest_first));
}

SkewNormalForm skew_normal_form(const IntMatrix& z) {
  check(z.is_square(), Errc::NotSquare, "skew normal form requires a square matrix");
  check(z.is_skew_symmetric(), Errc::NotSkewSymmetric, "matrix is not skew-symmetric");
  const int n = z.rows();
  IntMatrix w = z;
  IntMatrix p = IntMatrix::identity(n);
  auto do_swap = [&](int a, int b) {
    if (a == b) return;
    w.swap_cols(a, b);
    w.swap_rows(a, b);
    p.swap_cols(a, b);
  };
  auto do_add = [&](int dst, int src, const Int& f) {
    w.add_col(dst, src, f);
    w.add_row(dst, src, f);
    p.add_col(dst, src, f);
  };
  std::vector<Int> d;
  int b = 0;
  while (b + 1 < n) {
    // Locate the entry of minimal absolute value in the trailing block.
    int bi = -1, bj = -1;
    for (int i = b; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        if (w.at(i, j) == 0) continue;
        if (bi == -1 || iabs(w.at(i, j)) < iabs(w.at(bi, bj))) {
          bi = i;
          bj = j;
        }
      }
    if (bi == -1) break;  // trailing block is zero
    if (bi != b) do_swap(bi, b);
    if (bj != b + 1) do_swap(bj, b + 1);
    if (w.at(b, b + 1) < 0) do_swap(b, b + 1);
    const Int pivot = w.at(b, b + 1);
    // Clear rows b and b+1 beyond the pivot pair; the two updates do not
    // interfere because the diagonal of a skew matrix is zero.
    bool leftover = false;
    for (int j = b + 2; j < n; ++j) {
      if (w.at(b, j) != 0) {
        Int q = w.at(b, j) / pivot;
        if (q != 0) do_add(j, b + 1, -q);
        if (w.at(b, j) != 0) leftover = true;
      }
      if (w.at(b + 1, j) != 0) {
        Int q = w.at(b + 1, j) / pivot;
        if (q != 0) do_add(j, b, q);
        if (w.at(b + 1, j) != 0) leftover = true;
      }
    }
    if (leftover) continue;  // a smaller entry appeared; redo pivot search
    // Divisibility: the pivot must divide the trailing block entries.
    bool divisible = true;
    for (int i = b + 2; i < n && divisible; ++i)
      for (int j = i + 1; j < n && divisible; ++j)
        if (w.at(i, j) % pivot != 0) {
          do_add(b, i, Int(1));  // pulls the offending row into row b
          divisible = false;
        }
    if (!divisible) continue;
    d.push_back(pivot);
    b += 2;
  }
  return {p, d};
}

namespace {

// Rational symmetric elimination deciding x^T S x >= 0 for all rational x.
bool is_psd(const IntMatrix& s) {
  const int n = s.rows();
  std::vector<std::vector<Rat>> a(size_t(n), std::vector<Rat>(size_t(n), Rat(0)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[size_t(i)][size_t(j)] = Rat(s.at(i, j));
  int r = 0;
  while (r < n) {
    int piv = -1;
    for (int i = r; i < n; ++i)
      if (a[size_t(i)][size_t(i)] != 0) {
        piv = i;
        break;
      }
    if (piv == -1) {
      // Zero diagonal on the trailing block: psd iff the block vanishes.
      for (int i = r; i < n; ++i)
        for (int j = r; j < n; ++j)
          if (a[size_t(i)][size_t(j)] != 0) return false;
      return true;
    }
    if (a[size_t(piv)][size_t(piv)] < 0) return false;
    if (piv != r) {
      std::swap(a[size_t(piv)], a[size_t(r)]);
      for (int i = 0; i < n; ++i) std::swap(a[size_t(i)][size_t(piv)], a[size_t(i)][size_t(r)]);
    }
    const Rat d = a[size_t(r)][size_t(r)];
    for (int i = r + 1; i < n; ++i) {
      const Rat f = a[size_t(i)][size_t(r)] / d;
      if (f == 0) continue;
      for (int j = r + 1; j < n; ++j) a[size_t(i)][size_t(j)] -= f * a[size_t(r)][size_t(j)];
    }
    ++r;
  }
  return true;
}

}  // namespace

PsdRank psd_rank(const IntMatrix& s) {
  check(s.is_square(), Errc::NotSquare, "psd test requires a square matrix");
  check(s.is_symmetric(), Errc::NotSymmetric, "psd test requires a symmetric matrix");
  return {is_psd(s), rank(s)};
}

Int det(const IntMatrix& m) {
  check(m.is_square(), Errc::NotSquare, "determinant requires a square matrix");
  const int n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Int prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a.at(k, k) == 0) {
      int piv = -1;
      for (int i = k + 1; i < n; ++i)
        if (a.at(i, k) != 0) {
          piv = i;
          break;
        }
      if (piv == -1) return 0;
      a.swap_rows(k, piv);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j)
        a.at(i, j) = (a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j)) / prev;
      a.at(i, k) = 0;
    }
    prev = a.at(k, k);
  }
  return sign == 1 ? a.at(n - 1, n - 1) : Int(-a.at(n - 1, n - 1));
}

IntMatrix inverse_unimodular(const IntMatrix& m) {
  check(m.is_square(), Errc::NotSquare, "inverse requires a square matrix");
  return solve_exact(m, IntMatrix::identity(m.rows()));
}

bool in_column_lattice(const IntMatrix& m, const IntVector& v) {
  check(int(v.size()) == m.rows(), Errc::ShapeMismatch, "vector length mismatch");
  HnfResult r = hnf(m);
  IntVector w = v;
  int row = 0;
  for (int j = 0; j < r.H.cols(); ++j) {
    int p = -1;
    for (int i = 0; i < r.H.rows(); ++i)
      if (r.H.at(i, j) != 0) {
        p = i;
        break;
      }
    if (p == -1) break;  // zero columns are rightmost
    for (; row < p; ++row)
      if (w[size_t(row)] != 0) return false;
    if (w[size_t(p)] % r.H.at(p, j) != 0) return false;
    Int q = w[size_t(p)] / r.H.at(p, j);
    if (q != 0)
      for (int i = p; i < r.H.rows(); ++i) w[size_t(i)] -= q * r.H.at(i, j);
    row = p + 1;
  }
  for (; row < int(w.size()); ++row)
    if (w[size_t(row)] != 0) return false;
  return true;
}

}  // namespace gramclass
