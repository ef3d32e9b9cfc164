#pragma once

#include <vector>

#include "gramclass/int_matrix.hpp"
#include "gramclass/poly.hpp"

namespace gramclass {

struct HnfResult {
  IntMatrix H;  // column-style Hermite normal form, zero columns at the right
  IntMatrix U;  // unimodular with M * U = H
};

// Column-style Hermite normal form: pivots positive, entries left of a pivot
// reduced into [0, pivot), deterministic pivot selection.
HnfResult hnf(const IntMatrix& m);

// Z-basis of the integer kernel lattice {x : M x = 0}; the basis is saturated
// (every integer kernel vector is an integer combination of the columns).
IntMatrix kernel_basis(const IntMatrix& m);

// Rank over the rationals.
int rank(const IntMatrix& m);

// Exact solve A X = B for integer X. A must have full column rank
// (Underdetermined otherwise); NoSolution when no rational solution exists,
// NonIntegerSolution when the unique rational solution is not integral.
IntMatrix solve_exact(const IntMatrix& a, const IntMatrix& b);

// Characteristic polynomial det(nu I - M), computed division-free.
PolyZ char_poly(const IntMatrix& m);

struct SkewNormalForm {
  IntMatrix P;         // unimodular; P^T Z P = d1*W1 (+) ... (+) dr*W1 (+) 0
  std::vector<Int> d;  // positive, divisibility-sorted: d[t] | d[t+1]
};

// Skew normal form of a skew-symmetric integer matrix under unimodular
// congruence, with W1 = [[0,1],[-1,0]].
SkewNormalForm skew_normal_form(const IntMatrix& z);

struct PsdRank {
  bool is_psd;
  int rank;
};

// Positive semidefiniteness (x^T S x >= 0 for all rational x) and rational
// rank of a symmetric matrix.
PsdRank psd_rank(const IntMatrix& s);

// Determinant (fraction-free elimination).
Int det(const IntMatrix& m);

// Inverse of a Z-invertible matrix. Propagates solver errors when the
// argument is singular or the inverse is not integral.
IntMatrix inverse_unimodular(const IntMatrix& m);

// Whether v lies in the lattice generated by the columns of M.
bool in_column_lattice(const IntMatrix& m, const IntVector& v);

}  // namespace gramclass
