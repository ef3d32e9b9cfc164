#pragma once

#include <random>
#include <string>

#include "gramclass/error.hpp"
#include "gramclass/int_matrix.hpp"

// Path of a file in the fixtures/ directory of the source tree.
inline std::string fixture(const std::string& name) {
  return std::string(GRAMCLASS_FIXTURES_DIR) + "/" + name;
}

// Uniform integer in [lo, hi] from a seeded engine.
inline int rand_in(std::mt19937_64& rng, int lo, int hi) {
  return lo + int(rng() % std::uint64_t(hi - lo + 1));
}

// Random matrix with entries in [-bound, bound].
inline gramclass::IntMatrix random_matrix(std::mt19937_64& rng, int rows,
                                          int cols, int bound) {
  gramclass::IntMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m.at(i, j) = rand_in(rng, -bound, bound);
  return m;
}

// Random skew-symmetric matrix with entries in [-bound, bound].
inline gramclass::IntMatrix random_skew(std::mt19937_64& rng, int n,
                                        int bound) {
  gramclass::IntMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      m.at(i, j) = rand_in(rng, -bound, bound);
      m.at(j, i) = -m.at(i, j);
    }
  return m;
}

// Random unimodular matrix: a product of elementary column operations applied
// to the identity.
inline gramclass::IntMatrix random_unimodular(std::mt19937_64& rng, int n,
                                              int ops) {
  gramclass::IntMatrix u = gramclass::IntMatrix::identity(n);
  for (int k = 0; k < ops; ++k) {
    int a = rand_in(rng, 0, n - 1);
    int b = rand_in(rng, 0, n - 1);
    switch (rand_in(rng, 0, 2)) {
      case 0:
        if (a != b) u.add_col(b, a, gramclass::Int(rand_in(rng, -2, 2)));
        break;
      case 1:
        u.swap_cols(a, b);
        break;
      default:
        u.negate_col(a);
        break;
    }
  }
  return u;
}

// The W1 = [[0,1],[-1,0]] building block and its direct sums.
inline gramclass::IntMatrix w1_block() {
  return gramclass::IntMatrix{{0, 1}, {-1, 0}};
}

// (+)_{i=1}^r (d_i W1) (+) 0 of total size c; d empty means all ones.
inline gramclass::IntMatrix pure_w(int c, int r,
                                   const std::vector<long long>& d = {}) {
  gramclass::IntMatrix w(c, c);
  for (int i = 0; i < r; ++i) {
    long long di = d.empty() ? 1 : d[size_t(i)];
    w.at(2 * i, 2 * i + 1) = di;
    w.at(2 * i + 1, 2 * i) = -di;
  }
  return w;
}

// Expects fn() to throw gramclass::Error with the given kind.
#define CHECK_FAILS_WITH(kind_, expr_)                  \
  do {                                                  \
    bool threw_ = false;                                \
    try {                                               \
      (void)(expr_);                                    \
    } catch (const gramclass::Error& e_) {              \
      threw_ = true;                                    \
      CHECK(e_.kind() == (kind_));                      \
    }                                                   \
    CHECK_MESSAGE(threw_, "expected error " #kind_);    \
  } while (0)
