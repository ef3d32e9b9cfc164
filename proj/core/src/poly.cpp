#include "gramclass/poly.hpp"

#include <algorithm>
#include <sstream>

#include "gramclass/error.hpp"

namespace gramclass {

PolyZ::PolyZ(std::vector<Int> coeffs) : c_(std::move(coeffs)) { normalize(); }

void PolyZ::normalize() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

PolyZ PolyZ::one() { return PolyZ(std::vector<Int>{Int(1)}); }

PolyZ PolyZ::constant(const Int& value) { return PolyZ(std::vector<Int>{value}); }

PolyZ PolyZ::nu_pow_minus_one(int k) {
  check(k >= 1, Errc::InvalidShape, "nu^k - 1 requires k >= 1");
  std::vector<Int> c(size_t(k) + 1);
  c[0] = -1;
  c[size_t(k)] = 1;
  return PolyZ(std::move(c));
}

PolyZ PolyZ::nu_minus_one_pow(int k) {
  check(k >= 0, Errc::InvalidShape, "(nu - 1)^k requires k >= 0");
  PolyZ result = one();
  PolyZ base(std::vector<Int>{Int(-1), Int(1)});
  for (int i = 0; i < k; ++i) result = result * base;
  return result;
}

Int PolyZ::coeff(int k) const {
  if (k < 0 || k >= int(c_.size())) return 0;
  return c_[size_t(k)];
}

PolyZ PolyZ::operator+(const PolyZ& rhs) const {
  std::vector<Int> c(std::max(c_.size(), rhs.c_.size()));
  for (size_t i = 0; i < c.size(); ++i) {
    if (i < c_.size()) c[i] += c_[i];
    if (i < rhs.c_.size()) c[i] += rhs.c_[i];
  }
  return PolyZ(std::move(c));
}

PolyZ PolyZ::operator-(const PolyZ& rhs) const {
  std::vector<Int> c(std::max(c_.size(), rhs.c_.size()));
  for (size_t i = 0; i < c.size(); ++i) {
    if (i < c_.size()) c[i] += c_[i];
    if (i < rhs.c_.size()) c[i] -= rhs.c_[i];
  }
  return PolyZ(std::move(c));
}

PolyZ PolyZ::operator*(const PolyZ& rhs) const {
  if (is_zero() || rhs.is_zero()) return zero();
  std::vector<Int> c(c_.size() + rhs.c_.size() - 1);
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (size_t j = 0; j < rhs.c_.size(); ++j) c[i + j] += c_[i] * rhs.c_[j];
  }
  return PolyZ(std::move(c));
}

std::optional<PolyZ> PolyZ::try_divide(const PolyZ& rhs) const {
  if (rhs.is_zero()) return std::nullopt;
  if (is_zero()) return zero();
  int dd = rhs.degree();
  if (degree() < dd) return std::nullopt;
  std::vector<Int> rem = c_;
  std::vector<Int> quot(size_t(degree() - dd) + 1);
  const Int& lead = rhs.c_.back();
  for (int k = degree() - dd; k >= 0; --k) {
    const Int& top = rem[size_t(k + dd)];
    if (top == 0) continue;
    if (top % lead != 0) return std::nullopt;
    Int q = top / lead;
    quot[size_t(k)] = q;
    for (int i = 0; i <= dd; ++i) rem[size_t(k + i)] -= q * rhs.c_[size_t(i)];
  }
  for (const Int& r : rem)
    if (r != 0) return std::nullopt;
  return PolyZ(std::move(quot));
}

int PolyZ::multiplicity_of_one() const {
  if (is_zero()) return 0;
  int mult = 0;
  PolyZ cur = *this;
  PolyZ factor(std::vector<Int>{Int(-1), Int(1)});
  while (true) {
    auto next = cur.try_divide(factor);
    if (!next) break;
    cur = *next;
    ++mult;
  }
  return mult;
}

Int PolyZ::eval(const Int& x) const {
  Int acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::string PolyZ::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const Int& a = c_[size_t(k)];
    if (a == 0) continue;
    Int mag = a < 0 ? Int(-a) : a;
    if (first) {
      if (a < 0) os << '-';
      first = false;
    } else {
      os << (a < 0 ? " - " : " + ");
    }
    bool with_coeff = (mag != 1) || k == 0;
    if (with_coeff) os << mag;
    if (k > 0) {
      if (with_coeff) os << '*';
      os << "nu";
      if (k > 1) os << '^' << k;
    }
  }
  return os.str();
}

}  // namespace gramclass
