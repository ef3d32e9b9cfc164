#include <doctest.h>

#include "gramclass/poly.hpp"

using namespace gramclass;

TEST_CASE("polynomial constructors and normalization") {
  CHECK(PolyZ::zero().is_zero());
  CHECK(PolyZ::zero().degree() == -1);
  CHECK(PolyZ({0, 0, 0}).is_zero());
  CHECK(PolyZ::one().degree() == 0);
  CHECK(PolyZ::constant(-5).coeff(0) == -5);
  CHECK(PolyZ::constant(0).is_zero());
  CHECK(PolyZ::nu_pow_minus_one(3) == PolyZ({-1, 0, 0, 1}));
  CHECK(PolyZ::nu_minus_one_pow(0) == PolyZ::one());
  CHECK(PolyZ::nu_minus_one_pow(2) == PolyZ({1, -2, 1}));
  CHECK(PolyZ::nu_minus_one_pow(4) == PolyZ({1, -4, 6, -4, 1}));
}

TEST_CASE("polynomial arithmetic") {
  PolyZ a({1, 2});      // 1 + 2 nu
  PolyZ b({-1, 0, 1});  // nu^2 - 1
  CHECK(a + b == PolyZ({0, 2, 1}));
  CHECK(a - a == PolyZ::zero());
  CHECK(a * b == PolyZ({-1, -2, 1, 2}));
  CHECK(b * PolyZ::zero() == PolyZ::zero());
  // (nu-1)(nu^3-1) = nu^4 - nu^3 - nu + 1
  CHECK(PolyZ({-1, 1}) * PolyZ::nu_pow_minus_one(3) ==
        PolyZ({1, -1, 0, -1, 1}));
  // Cancellation of leading terms renormalizes the degree.
  CHECK((PolyZ({0, 0, 1}) - PolyZ({1, 0, 1})).degree() == 0);
}

TEST_CASE("exact division") {
  PolyZ num = PolyZ::nu_pow_minus_one(2);
  auto q = num.try_divide(PolyZ({-1, 1}));
  REQUIRE(q.has_value());
  CHECK(*q == PolyZ({1, 1}));  // nu + 1
  CHECK_FALSE(PolyZ({1, 0, 1}).try_divide(PolyZ({-1, 1})).has_value());
  CHECK_FALSE(PolyZ({1}).try_divide(PolyZ({2})).has_value());
  // nu^6 - 1 = (nu^2 - 1)(nu^4 + nu^2 + 1)
  auto q6 = PolyZ::nu_pow_minus_one(6).try_divide(PolyZ::nu_pow_minus_one(2));
  REQUIRE(q6.has_value());
  CHECK(*q6 == PolyZ({1, 0, 1, 0, 1}));
}

TEST_CASE("multiplicity of the root 1") {
  CHECK(PolyZ::zero().multiplicity_of_one() == 0);
  CHECK(PolyZ::one().multiplicity_of_one() == 0);
  CHECK(PolyZ::nu_minus_one_pow(4).multiplicity_of_one() == 4);
  // (nu-1)(nu^3-1) = (nu-1)^2 (nu^2+nu+1)
  PolyZ phi = PolyZ({-1, 1}) * PolyZ::nu_pow_minus_one(3);
  CHECK(phi.multiplicity_of_one() == 2);
  CHECK(PolyZ::nu_pow_minus_one(5).multiplicity_of_one() == 1);
}

TEST_CASE("polynomial evaluation") {
  PolyZ phi({1, -1, 0, -1, 1});  // nu^4 - nu^3 - nu + 1
  CHECK(phi.eval(1) == 0);
  CHECK(phi.eval(2) == 7);
  CHECK(phi.eval(-1) == 4);
  CHECK(PolyZ::zero().eval(10) == 0);
}

TEST_CASE("polynomial rendering") {
  CHECK(PolyZ::zero().str() == "0");
  CHECK(PolyZ::constant(-5).str() == "-5");
  CHECK(PolyZ({1, -1, 0, -1, 1}).str() == "nu^4 - nu^3 - nu + 1");
  CHECK(PolyZ::nu_pow_minus_one(3).str() == "nu^3 - 1");
  CHECK(PolyZ({0, 1}).str() == "nu");
  CHECK(PolyZ({0, -2}).str() == "-2*nu");
  CHECK(PolyZ({3, 0, 2}).str() == "2*nu^2 + 3");
}
