#pragma once

#include <optional>
#include <string>

#include "gramclass/exactmat.hpp"
#include "gramclass/partition.hpp"
#include "gramclass/quiver.hpp"

namespace gramclass {

// Unit quadratic form, encoded by its upper-triangular Gram matrix with unit
// diagonal: q(x) = x^T upper x.
struct UnitForm {
  int n = 0;
  IntMatrix upper;

  IntMatrix sym() const { return upper + upper.transposed(); }
  bool operator==(const UnitForm&) const = default;
};

// NotUnitForm unless upper is square of size n, upper triangular, with all
// diagonal entries 1.
void validate(const UnitForm& q);

// Whether the graph on variables with edges {i,j : G[i][j] != 0} is connected.
bool is_connected(const UnitForm& q);

UnitForm from_quiver(const Quiver& q);

// Connected loop-less quiver Q with q_Q = q (entrywise equality of the
// upper-triangular Gram matrices), found by backtracking over arrow endpoint
// pairs with vertex labels introduced in appearance order. NotTypeA when the
// exhaustive search proves no realization exists.
Quiver realize_as_quiver(const UnitForm& q);

struct CoxeterData {
  IntMatrix phi;   // -Ghat^T Ghat^{-1}
  PolyZ phi_poly;  // characteristic polynomial of phi
};

CoxeterData coxeter(const UnitForm& q);

struct RadicalProfile {
  int corank = 0;
  int reduced_corank = 0;
  int degeneracy = 0;
  IntMatrix K;     // kernel basis of G_q, normalized so W is in skew normal form
  IntMatrix K_re;  // trailing columns of K spanning the kernel of W
  IntMatrix W;     // K^T Ghat K, exactly (+)_t d_t W1 (+) 0
};

// NotNonNegative when q is not positive semidefinite.
RadicalProfile radical_profile(const UnitForm& q);

struct CoxeterNumbers {
  bool h_finite = false;
  long long h = 0;     // meaningful only when h_finite
  long long h_re = 0;  // lcm of the parts
};

CoxeterNumbers coxeter_numbers(const Partition& pi, int c);

struct Classification {
  int n = 0;
  int corank = 0;
  int dynkin_rank = 0;  // the r of Dynkin type A_r
  Partition cycle_type;
  int degeneracy = 0;
  int reduced_corank = 0;
  PolyZ coxeter_polynomial;
  std::string factorization;  // e.g. "(nu-1) (nu^3-1)"
  CoxeterNumbers numbers;
};

// Full report for a connected non-negative unit form of Dynkin type A; the
// factored Coxeter polynomial is validated exactly before returning.
Classification classify(const UnitForm& q);

}  // namespace gramclass
