#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "gramclass/exactmat.hpp"
#include "gramclass/int_matrix.hpp"
#include "gramclass/partition.hpp"

namespace gramclass {

// Connected loop-less quiver. Vertices are 1..vertices; arrows are an ordered
// sequence of (source, target) pairs and arrow order is significant.
struct Quiver {
  int vertices = 0;
  std::vector<std::pair<int, int>> arrows;

  int m() const { return vertices; }
  int n() const { return int(arrows.size()); }
  bool operator==(const Quiver&) const = default;
};

// Confirms the quiver is loop-less and connected with valid vertex ids.
void validate(const Quiver& q);

// Column i is e_{s(i)} - e_{t(i)}.
IntMatrix incidence(const Quiver& q);

struct GramPair {
  IntMatrix G;     // symmetric Gram matrix I(Q)^T I(Q)
  IntMatrix Ghat;  // upper triangular, unit diagonal, Ghat + Ghat^T = G
};

GramPair gram(const Quiver& q);

// Walk: start vertex plus steps (arrow id, sign); sign +1 traverses the arrow
// from source to target, -1 the other way.
struct Walk {
  int start = 0;
  std::vector<std::pair<int, int>> steps;

  int length() const { return int(steps.size()); }
  int target(const Quiver& q) const;
  Walk reversed(const Quiver& q) const;  // reverse order, flip signs
  std::string str() const;               // e.g. "4^-1 2^-1"; "(trivial)" when empty
  bool operator==(const Walk&) const = default;
};

// Checks step chaining; InvalidWalk / InvalidVertex otherwise.
void validate_walk(const Quiver& q, const Walk& w);

enum class WalkDir { Descending, Ascending };

// Maximal structural walk with the given source. Descending: start with the
// largest-index arrow incident to v oriented leaving v, then repeatedly take
// the largest-index incident arrow strictly smaller than the previous one,
// always leaving the current vertex. Ascending is the mirror image.
Walk structural_walk(const Quiver& q, int v, WalkDir dir);

struct Permutation {
  // img[i] is the image of vertex i+1 (1-based values).
  std::vector<int> img;

  static Permutation identity(int m);
  int size() const { return int(img.size()); }
  int apply(int v) const { return img[v - 1]; }
  Permutation inverse() const;
  Permutation compose(const Permutation& rhs) const;  // (*this) after rhs
  // Cycles sorted by (length desc, min element asc), each listed from its
  // minimal element.
  std::vector<std::vector<int>> cycles() const;
  Partition cycle_type() const;
  // P(rho) with P e_j = e_{rho(j)}.
  IntMatrix matrix() const;
  bool operator==(const Permutation&) const = default;
};

struct XiResult {
  Permutation xi;                        // v -> target of the descending structural walk
  Partition cycle_type;                  // orbit sizes, non-increasing
  std::vector<std::vector<int>> orbits;  // ordered (size desc, min member asc)
};

XiResult xi_and_cycle_type(const Quiver& q);

// Id - I(Q) Ghat^{-1} I(Q)^T; always a permutation matrix, equal to P(xi).
IntMatrix coxeter_laplacian(const Quiver& q);

// Quiver with incidence I(Q) Ghat^{-1}, built combinatorially from the
// descending structural walks.
Quiver inverse_quiver(const Quiver& q);

// Relabel vertices by rho; if flip, additionally reverse every arrow.
Quiver transform(const Quiver& q, const Permutation& rho, bool flip);

// Sum of sign * e_{arrow} over the steps, as a vector in Z^n.
IntVector incidence_vector(const Walk& w, int n);

// Deterministic walk from u to v: breadth-first search, ties broken by
// smallest arrow index with forward orientation preferred.
Walk connecting_walk(const Quiver& q, int u, int v);

// One vector per xi-orbit (deterministic orbit order): -I(Q†)^T 1_{orbit}.
std::vector<IntVector> beta_vectors(const Quiver& q);

// Seed-deterministic connected loop-less quiver: random spanning tree plus
// n - m + 1 extra arrows with random orientations.
Quiver random_quiver(int m, int n, std::uint64_t seed);

}  // namespace gramclass
