#include "gramclass/congruence.hpp"

#include <algorithm>
#include <utility>

#include "gramclass/error.hpp"

namespace gramclass {

namespace {

// Returns s >= 0 with W == ((+)_{i<s/2} W1) (+) 0, or -1 when W has no such
// shape, where W1 = [[0,1],[-1,0]].
int pure_prefix(const IntMatrix& w) {
  if (!w.is_square()) return -1;
  const int c = w.rows();
  int s = 0;
  while (s + 1 < c && w.at(s, s + 1) == 1) s += 2;
  IntMatrix expected(c, c);
  for (int k = 0; k + 1 < s; k += 2) {
    expected.at(k, k + 1) = 1;
    expected.at(k + 1, k) = -1;
  }
  return w == expected ? s : -1;
}

bool is_solver_error(const Error& err) {
  return err.kind() == Errc::NoSolution || err.kind() == Errc::NonIntegerSolution ||
         err.kind() == Errc::Underdetermined;
}

// First orbit of minimal size in the deterministic (size desc, min asc) order.
size_t dropped_orbit(const std::vector<std::vector<int>>& orbits) {
  size_t drop = 0;
  for (size_t i = 1; i < orbits.size(); ++i)
    if (orbits[i].size() < orbits[drop].size()) drop = i;
  return drop;
}

}  // namespace

IntMatrix star(const IntMatrix& B, const IntMatrix& ghat_source,
               const IntMatrix& ghat_target) {
  check(ghat_source.is_square() && ghat_target.is_square() &&
            B.rows() == ghat_source.rows() && B.cols() == ghat_target.rows(),
        Errc::ShapeMismatch, "adjoint shape mismatch");
  return inverse_unimodular(ghat_target) * B.transposed() * ghat_source;
}

PseudoMorphism build_pseudo_morphism(const Quiver& src, const Quiver& tgt) {
  validate(src);
  validate(tgt);
  StandardParams sp = standard_for(tgt);
  check(tgt == standard_quiver(sp.pi, sp.d, StandardVariant::A), Errc::ShapeMismatch,
        "target must be a standard quiver");
  const int m = src.m();
  const int n = src.n();
  check(m == sp.pi.sum() && n == tgt.n(), Errc::ShapeMismatch,
        "source and target shapes are incompatible");
  const int len = sp.pi.length();

  std::vector<int> v;
  v.push_back(m);
  for (int part : sp.pi.parts) v.push_back(v.back() - part);

  std::vector<IntVector> a(size_t(m) + 1);
  for (int vert = 1; vert <= m; ++vert)
    a[size_t(vert)] = incidence_vector(structural_walk(src, vert, WalkDir::Descending), n);
  std::vector<IntVector> dvec(size_t(len), IntVector{});
  for (int s = 1; s <= len - 1; ++s)
    dvec[size_t(s)] =
        incidence_vector(connecting_walk(src, v[size_t(s)], v[size_t(s)] + 1), n);

  std::vector<IntVector> cols;
  cols.reserve(size_t(n));
  // Non-cut descending columns interleaved with the connecting columns, walked
  // block by block from the deepest cut upward.
  for (int t = 1; t <= len; ++t) {
    for (int vert = v[size_t(len - t + 1)] + 1; vert <= v[size_t(len - t)] - 1; ++vert)
      cols.push_back(a[size_t(vert)]);
    if (t < len) cols.push_back(dvec[size_t(len - t)]);
  }
  std::vector<IntVector> y(size_t(len), IntVector{});
  for (int t = 1; t <= len - 1; ++t) {
    IntVector yt = a[size_t(v[size_t(t) - 1])];
    for (int j = 0; j < n; ++j) yt[size_t(j)] -= dvec[size_t(t)][size_t(j)];
    y[size_t(t)] = yt;
    cols.push_back(std::move(yt));
  }
  const IntVector& base = len == 1 ? a[size_t(m) - 1] : y[size_t(len) - 1];
  for (int k = 1; k <= sp.d; ++k) {
    IntVector neg(size_t(n), Int(0));
    for (int j = 0; j < n; ++j) neg[size_t(j)] = -base[size_t(j)];
    cols.push_back(std::move(neg));
    cols.push_back(base);
  }
  check(int(cols.size()) == n, Errc::Internal, "pseudo-morphism column count mismatch");

  PseudoMorphism pm{src, tgt, IntMatrix::from_columns(n, cols)};
  check(incidence(src) * pm.B == incidence(tgt), Errc::Internal,
        "pseudo-morphism does not transport the incidence matrix");
  check(incidence(inverse_quiver(tgt)) * pm.B.transposed() == incidence(inverse_quiver(src)),
        Errc::Internal, "pseudo-morphism does not transport the inverse incidence matrix");
  return pm;
}

Permutation conjugating_permutation(const Permutation& a, const Permutation& b) {
  check(a.size() == b.size(), Errc::ShapeMismatch, "permutation sizes differ");
  check(a.cycle_type() == b.cycle_type(), Errc::CycleTypeMismatch, "cycle types differ");
  auto ca = a.cycles();
  auto cb = b.cycles();
  Permutation rho;
  rho.img.assign(a.img.size(), 0);
  for (size_t i = 0; i < ca.size(); ++i)
    for (size_t j = 0; j < ca[i].size(); ++j) rho.img[size_t(ca[i][j]) - 1] = cb[i][j];
  return rho;
}

IntMatrix upsilon(const IntMatrix& Z, const IntMatrix& K, const IntMatrix& ghat) {
  const int n = K.rows();
  const int c = K.cols();
  check(Z.rows() == c && Z.cols() == c && ghat.rows() == n && ghat.cols() == n,
        Errc::ShapeMismatch, "endomorphism shape mismatch");
  return IntMatrix::identity(n) + K * Z * (ghat * K).transposed();
}

IntMatrix xi_of_endo(const IntMatrix& E, const IntMatrix& K, const IntMatrix& ghat) {
  const int n = K.rows();
  check(E.rows() == n && E.cols() == n && ghat.rows() == n && ghat.cols() == n,
        Errc::ShapeMismatch, "endomorphism shape mismatch");
  try {
    IntMatrix S = solve_exact(K, E - IntMatrix::identity(n));
    IntMatrix Zt = solve_exact(ghat * K, S.transposed());
    return Zt.transposed();
  } catch (const Error& err) {
    if (is_solver_error(err))
      fail(Errc::NotPseudoEndo, "endomorphism does not factor through the kernel");
    throw;
  }
}

IntMatrix circ_w(const IntMatrix& Z, const IntMatrix& Zp, const IntMatrix& W) {
  const int c = Z.rows();
  check(Z.is_square() && Zp.rows() == c && Zp.cols() == c && W.rows() == c && W.cols() == c,
        Errc::ShapeMismatch, "twisted composition shape mismatch");
  return Z + Zp - Z * W * Zp;
}

IntMatrix correct_invertibility(const IntMatrix& B, const IntMatrix& K,
                                const IntMatrix& Kv, const IntMatrix& ghat_t) {
  const int n = Kv.rows();
  const int c = Kv.cols();
  check(B.rows() == K.rows() && B.cols() == n && K.cols() == c && ghat_t.rows() == n &&
            ghat_t.cols() == n,
        Errc::ShapeMismatch, "invertibility correction shape mismatch");
  IntMatrix GKv = ghat_t * Kv;
  IntMatrix Wv = Kv.transposed() * GKv;
  const int s = rank(Wv);
  check(s % 2 == 0, Errc::Internal, "skew pairing has odd rank");
  IntMatrix Wp = Wv.block(0, 0, s, s);
  Int dw = det(Wp);
  check(dw == 1 || dw == -1, Errc::NotPure, "leading pairing block is not unimodular");
  check(Wv.block(0, s, s, c - s).is_zero() && Wv.block(s, 0, c - s, s).is_zero() &&
            Wv.block(s, s, c - s, c - s).is_zero(),
        Errc::Internal, "pairing is not split into an invertible block plus zero");
  IntMatrix L;
  try {
    L = solve_exact(K, B * Kv);
  } catch (const Error& err) {
    if (is_solver_error(err))
      fail(Errc::NoL, "B Kv does not factor integrally through the source kernel");
    throw;
  }
  check(L.block(0, s, s, c - s).is_zero(), Errc::Internal,
        "kernel factor has a nonzero upper-right block");
  IntMatrix Wp_inv = inverse_unimodular(Wp);
  IntMatrix Y(c, c);
  Y.set_block(0, 0, (L.block(0, 0, s, s) - IntMatrix::identity(s)) * Wp_inv);
  Y.set_block(s, 0, L.block(s, 0, c - s, s) * Wp_inv);
  return K * Y * GKv.transposed();
}

IntMatrix skew_factor_a(const IntMatrix& Z, const IntMatrix& W) {
  check(Z.is_square() && W.is_square() && Z.rows() == W.rows(), Errc::ShapeMismatch,
        "factorization shape mismatch");
  const int c = Z.rows();
  check(pure_prefix(W) == c, Errc::WNotInvertibleNormal,
        "W must be an invertible skew normal form");
  check(Z.is_skew_symmetric(), Errc::NotSkew, "Z must be skew-symmetric");
  SkewNormalForm snf = skew_normal_form(Z);
  IntMatrix S(c, c);
  for (int i = 0; 2 * i < c; ++i) {
    S.at(2 * i, 2 * i) = 1;
    if (size_t(i) < snf.d.size()) S.at(2 * i + 1, 2 * i + 1) = snf.d[size_t(i)];
  }
  return S * inverse_unimodular(snf.P);
}

IntMatrix skew_decompose_b(const IntMatrix& Z, const IntMatrix& W) {
  check(Z.is_square() && W.is_square() && Z.rows() == W.rows(), Errc::ShapeMismatch,
        "decomposition shape mismatch");
  check(Z.is_skew_symmetric(), Errc::NotSkew, "Z must be skew-symmetric");
  const int c = Z.rows();
  const int s = pure_prefix(W);
  check(s >= 0, Errc::NotPureNormalForm, "W is not a pure skew normal form");
  if (Z.is_zero()) return IntMatrix(c, c);
  if (s == c) return skew_factor_a(Z + W, W) - W;
  IntMatrix W1 = W.block(0, 0, s, s);
  IntMatrix Y(c, c);
  Y.set_block(0, 0, skew_factor_a(Z.block(0, 0, s, s) + W1, W1) - W1);
  Y.set_block(s, 0, Z.block(s, 0, c - s, s));
  for (int i = s; i < c; ++i)
    for (int j = s; j < i; ++j) Y.at(i, j) = Z.at(i, j);
  return Y;
}

IntMatrix correct_to_strong(const IntMatrix& B, const IntMatrix& Kv,
                            const IntMatrix& ghat_s, const IntMatrix& ghat_t) {
  const int n = Kv.rows();
  check(B.rows() == n && B.cols() == n, Errc::ShapeMismatch,
        "strongness correction shape mismatch");
  IntMatrix Bs = star(B, ghat_s, ghat_t);
  IntMatrix Bvec = Bs * B;
  IntMatrix Z = xi_of_endo(inverse_unimodular(Bvec), Kv, ghat_t);
  IntMatrix GKv = ghat_t * Kv;
  IntMatrix Wv = Kv.transposed() * GKv;
  SkewNormalForm snf = skew_normal_form(Wv);
  for (const Int& dv : snf.d)
    check(dv == 1, Errc::NotPure, "pairing has a non-unit elementary divisor");
  IntMatrix R = snf.P;
  IntMatrix Rinv = inverse_unimodular(R);
  IntMatrix Wt = R.transposed() * Wv * R;
  IntMatrix Zt = Rinv * Z * Rinv.transposed();
  IntMatrix Y = R * skew_decompose_b(Zt, Wt) * R.transposed();
  return IntMatrix::identity(n) - Kv * Y.transposed() * GKv.transposed();
}

IntMatrix source_kernel_completion(const Quiver& q, int d) {
  validate(q);
  const int n = q.n();
  const int c = n - q.m() + 1;
  IntMatrix Kany = kernel_basis(incidence(q));
  check(Kany.cols() == c, Errc::Internal, "kernel rank mismatch");
  std::vector<IntVector> betas = beta_vectors(q);
  XiResult xr = xi_and_cycle_type(q);
  size_t drop = dropped_orbit(xr.orbits);
  std::vector<IntVector> kept;
  for (size_t i = 0; i < betas.size(); ++i)
    if (i != drop) kept.push_back(betas[i]);
  const int k = int(kept.size());
  check(k == c - 2 * d, Errc::Internal, "orbit count does not match the degeneracy");
  IntMatrix Kre = IntMatrix::from_columns(n, kept);
  IntMatrix X;
  try {
    X = solve_exact(Kany, Kre);
  } catch (const Error& err) {
    if (is_solver_error(err))
      fail(Errc::Internal, "orbit vectors do not lie in the kernel lattice");
    throw;
  }
  if (k == c) {
    Int dx = det(X);
    check(dx == 1 || dx == -1, Errc::Internal, "orbit vectors do not form a kernel basis");
    return Kany * X;
  }
  HnfResult h = hnf(X.transposed());
  IntMatrix T = h.H.block(0, 0, k, k);
  Int dt = det(T);
  check(dt == 1 || dt == -1, Errc::Internal, "orbit sublattice is not saturated");
  // U with last k columns equal to X and |det U| = 1, via the column
  // transform V from the Hermite form of X^T: solve V^T U = E.
  IntMatrix E(c, c);
  E.set_block(0, 2 * d, T.transposed());
  E.set_block(k, 0, IntMatrix::identity(2 * d));
  IntMatrix U = solve_exact(h.U.transposed(), E);
  return Kany * U;
}

CongruenceCertificate congruence_to_standard(const Quiver& q) {
  validate(q);
  check(q.m() >= 2, Errc::InvalidShape, "need at least two vertices");
  StandardParams sp = standard_for(q);
  Quiver tgt = standard_quiver(sp.pi, sp.d, StandardVariant::A);
  Permutation rho =
      conjugating_permutation(xi_and_cycle_type(q).xi, xi_and_cycle_type(tgt).xi);
  Quiver qt = transform(q, rho, false);
  check(coxeter_laplacian(qt) == coxeter_laplacian(tgt), Errc::LaplacianMismatch,
        "relabeled source and standard target have different Coxeter-Laplacians");
  PseudoMorphism pm = build_pseudo_morphism(qt, tgt);
  IntMatrix K = source_kernel_completion(qt, sp.d);
  StandardKernel sk = standard_kernel(sp.pi, sp.d);
  IntMatrix ghat_s = gram(qt).Ghat;
  IntMatrix ghat_t = gram(tgt).Ghat;
  IntMatrix B2 = pm.B + correct_invertibility(pm.B, K, sk.K, ghat_t);
  IntMatrix C = correct_to_strong(B2, sk.K, ghat_s, ghat_t);
  IntMatrix B = B2 * C;

  check(incidence(qt) * B == incidence(tgt), Errc::Internal,
        "congruence matrix does not transport the incidence matrix");
  check(B.transposed() * ghat_s * B == ghat_t, Errc::Internal,
        "congruence matrix is not a strong congruence");
  Int dB = det(B);
  check(dB == 1 || dB == -1, Errc::Internal, "congruence matrix is not unimodular");

  CongruenceCertificate cert;
  cert.rho = rho;
  cert.B = B;
  cert.source = qt;
  cert.target = tgt;
  cert.target_partition = sp.pi;
  cert.degeneracy = sp.d;
  cert.verified = true;
  return cert;
}

CongruenceCertificate congruence_forms(const UnitForm& q) {
  validate(q);
  check(is_connected(q), Errc::NotConnected, "form is not connected");
  check(psd_rank(q.sym()).is_psd, Errc::NotNonNegative, "form is not positive semidefinite");
  return congruence_to_standard(realize_as_quiver(q));
}

BetweenResult congruence_between(const UnitForm& q, const UnitForm& qp) {
  validate(q);
  validate(qp);
  check(q.n == qp.n, Errc::NotWeaklyCongruent, "forms have different numbers of variables");
  check(rank(q.sym()) == rank(qp.sym()), Errc::NotWeaklyCongruent,
        "forms have different coranks");
  CongruenceCertificate a = congruence_forms(q);
  CongruenceCertificate b = congruence_forms(qp);
  check(a.target_partition == b.target_partition, Errc::DifferentCoxeterPolynomial,
        "cycle types differ");
  IntMatrix B = a.B * inverse_unimodular(b.B);
  check(B.transposed() * q.upper * B == qp.upper, Errc::Internal,
        "combined congruence failed verification");
  return {B, a.target_partition, a.degeneracy};
}

IntMatrix triangular_flip(const UnitForm& q) {
  validate(q);
  UnitForm qd{q.n, inverse_unimodular(q.upper)};
  IntMatrix D = congruence_between(q, qd).B;
  IntMatrix C = D * q.upper;
  check(C.transposed() * q.upper * C == q.upper.transposed(), Errc::Internal,
        "triangular flip failed verification");
  return C;
}

VerifyReport verify(const IntMatrix& B, const UnitForm& q, const UnitForm& qp) {
  validate(q);
  validate(qp);
  check(q.n == qp.n && B.rows() == q.n && B.cols() == q.n, Errc::ShapeMismatch,
        "matrix shape does not match the forms");
  VerifyReport r;
  IntMatrix Gq = q.sym();
  IntMatrix Gp = qp.sym();
  r.weak = B.transposed() * Gq * B == Gp;
  r.strong = B.transposed() * q.upper * B == qp.upper;
  r.determinant = det(B);
  r.unimodular = r.determinant == 1 || r.determinant == -1;
  PsdRank pr = psd_rank(Gq);
  if (pr.is_psd && q.n - pr.rank <= 1) {
    IntMatrix BsB = inverse_unimodular(qp.upper) * B.transposed() * q.upper * B;
    r.corank_le1_shortcut = r.weak && Gp * BsB == Gp;
  }
  return r;
}

}  // namespace gramclass
