#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gramclass/numbers.hpp"

namespace gramclass {

// Univariate polynomial over the integers in the indeterminate "nu".
// Coefficients are stored lowest degree first and kept normalized: the
// leading coefficient is nonzero unless the polynomial is zero (empty).
class PolyZ {
 public:
  PolyZ() = default;
  explicit PolyZ(std::vector<Int> coeffs);

  static PolyZ zero() { return PolyZ(); }
  static PolyZ one();
  static PolyZ constant(const Int& value);
  // nu^k - 1 (k >= 1).
  static PolyZ nu_pow_minus_one(int k);
  // (nu - 1)^k (k >= 0).
  static PolyZ nu_minus_one_pow(int k);

  const std::vector<Int>& coeffs() const { return c_; }
  int degree() const { return int(c_.size()) - 1; }  // -1 for the zero polynomial
  bool is_zero() const { return c_.empty(); }
  Int coeff(int k) const;

  bool operator==(const PolyZ&) const = default;
  PolyZ operator+(const PolyZ& rhs) const;
  PolyZ operator-(const PolyZ& rhs) const;
  PolyZ operator*(const PolyZ& rhs) const;

  // Exact division; nullopt when rhs does not divide this over Z[nu].
  std::optional<PolyZ> try_divide(const PolyZ& rhs) const;
  // Largest k with (nu - 1)^k dividing this polynomial (0 for the zero poly).
  int multiplicity_of_one() const;

  Int eval(const Int& x) const;
  std::string str() const;

 private:
  std::vector<Int> c_;
  void normalize();
};

}  // namespace gramclass
