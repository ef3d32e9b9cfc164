#pragma once

#include <vector>

#include "gramclass/int_matrix.hpp"
#include "gramclass/partition.hpp"
#include "gramclass/quiver.hpp"

namespace gramclass {

enum class StandardVariant { A, Star };

// Canonical representative quiver for partition pi of m >= 2 and degeneracy
// degree d >= 0. InvalidShape when pi is not a valid partition, sum < 2, or
// d < 0.
Quiver standard_quiver(const Partition& pi, int d, StandardVariant variant);

// Kronecker quiver with n parallel arrows between vertices 1 and 2; inverse
// orientation alternates arrow directions starting backward.
Quiver kronecker(int n, bool inverse);

struct StandardKernel {
  IntMatrix K;  // n x c kernel basis of the standard quiver's Gram matrix
  int split = 0;  // first `split` columns pair into hyperbolic blocks
};

// Kernel basis K = [K'|K''] with K^T Ghat K = ((+)_{t=1}^d W1) (+) 0 exactly.
StandardKernel standard_kernel(const Partition& pi, int d);

struct StandardParams {
  Partition pi;
  int d = 0;
};

// The (pi, d) the classification pipeline would assign to this quiver.
StandardParams standard_for(const Quiver& q);

// Partitions pi of m with c - (len(pi) - 1) a non-negative even number.
std::vector<Partition> partitions_part1(int m, int c);

// Number of strong congruence classes of connected non-negative unit forms
// of Dynkin type A in n variables with corank c.
long long count_classes(int n, int c);

}  // namespace gramclass
