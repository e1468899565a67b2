#pragma once

// Dense univariate polynomials over an exact field (Rational or
// GaussianRational). Coefficients are stored by ascending degree and the
// vector is always trimmed, so the zero polynomial is the empty vector and
// degree() == size() - 1.

#include <algorithm>
#include <concepts>
#include <initializer_list>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "genherm/rational.hpp"

namespace genherm {

template <class T>
concept ExactScalar = requires(const T& a, const T& b) {
  { a + b } -> std::convertible_to<T>;
  { a - b } -> std::convertible_to<T>;
  { a * b } -> std::convertible_to<T>;
  { a / b } -> std::convertible_to<T>;
  { is_zero(a) } -> std::convertible_to<bool>;
  { to_string(a) } -> std::convertible_to<std::string>;
  T(1);
};

template <ExactScalar T>
class DensePoly {
 public:
  using value_type = T;

  DensePoly() = default;
  DensePoly(T constant) {  // NOLINT: constants embed into the ring
    if (!::genherm::is_zero(constant)) c_.push_back(std::move(constant));
  }
  template <std::integral I>
  DensePoly(I constant) : DensePoly(T(constant)) {}  // NOLINT
  explicit DensePoly(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }
  DensePoly(std::initializer_list<T> coeffs) : c_(coeffs) { trim(); }

  static DensePoly monomial(T coeff, std::size_t k) {
    if (::genherm::is_zero(coeff)) return {};
    std::vector<T> c(k + 1, T(0));
    c[k] = std::move(coeff);
    return DensePoly(std::move(c));
  }
  static DensePoly variable() { return monomial(T(1), 1); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  std::span<const T> coefficients() const { return c_; }

  T coeff(std::size_t k) const { return k < c_.size() ? c_[k] : T(0); }
  const T& leading() const {
    if (c_.empty()) throw std::domain_error("leading coefficient of the zero polynomial");
    return c_.back();
  }

  /// Horner evaluation at any point type U into which T embeds.
  template <class U = T>
  U operator()(const U& x) const {
    U acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + U(*it);
    return acc;
  }

  DensePoly& operator+=(const DensePoly& rhs) {
    if (rhs.c_.size() > c_.size()) c_.resize(rhs.c_.size(), T(0));
    for (std::size_t i = 0; i < rhs.c_.size(); ++i) c_[i] += rhs.c_[i];
    trim();
    return *this;
  }
  DensePoly& operator-=(const DensePoly& rhs) {
    if (rhs.c_.size() > c_.size()) c_.resize(rhs.c_.size(), T(0));
    for (std::size_t i = 0; i < rhs.c_.size(); ++i) c_[i] -= rhs.c_[i];
    trim();
    return *this;
  }
  DensePoly& operator*=(const DensePoly& rhs) { return *this = *this * rhs; }
  DensePoly& operator*=(const T& scalar) {
    if (::genherm::is_zero(scalar)) {
      c_.clear();
      return *this;
    }
    for (auto& c : c_) c *= scalar;
    return *this;
  }
  DensePoly& operator/=(const T& scalar) {
    for (auto& c : c_) c /= scalar;
    return *this;
  }

  friend DensePoly operator+(DensePoly a, const DensePoly& b) { return a += b; }
  friend DensePoly operator-(DensePoly a, const DensePoly& b) { return a -= b; }
  friend DensePoly operator*(const DensePoly& a, const DensePoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<T> out(a.c_.size() + b.c_.size() - 1, T(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (::genherm::is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    }
    return DensePoly(std::move(out));
  }
  friend DensePoly operator*(DensePoly a, const T& s) { return a *= s; }
  friend DensePoly operator*(const T& s, DensePoly a) { return a *= s; }
  friend DensePoly operator/(DensePoly a, const T& s) { return a /= s; }
  DensePoly operator-() const {
    DensePoly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
  }

  friend bool operator==(const DensePoly&, const DensePoly&) = default;

 private:
  void trim() {
    while (!c_.empty() && ::genherm::is_zero(c_.back())) c_.pop_back();
  }

  std::vector<T> c_;
};

template <ExactScalar T>
bool is_zero(const DensePoly<T>& p) {
  return p.is_zero();
}

using RatPoly = DensePoly<Rational>;
using GaussPoly = DensePoly<GaussianRational>;

template <ExactScalar T>
DensePoly<T> pow(const DensePoly<T>& p, int e) {
  if (e < 0) throw std::invalid_argument("negative polynomial power");
  DensePoly<T> result(T(1));
  for (int i = 0; i < e; ++i) result = result * p;
  return result;
}

template <ExactScalar T>
DensePoly<T> derivative(const DensePoly<T>& p) {
  if (p.degree() < 1) return {};
  std::vector<T> out;
  out.reserve(static_cast<std::size_t>(p.degree()));
  for (int k = 1; k <= p.degree(); ++k) out.push_back(p.coefficients()[k] * T(k));
  return DensePoly<T>(std::move(out));
}

/// Euclidean division a = q*b + r with deg r < deg b.
template <ExactScalar T>
std::pair<DensePoly<T>, DensePoly<T>> divmod(const DensePoly<T>& a, const DensePoly<T>& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  if (a.degree() < b.degree()) return {DensePoly<T>{}, a};
  std::vector<T> rem(a.coefficients().begin(), a.coefficients().end());
  std::vector<T> quot(static_cast<std::size_t>(a.degree() - b.degree() + 1), T(0));
  const T& lead = b.leading();
  const auto bc = b.coefficients();
  for (int k = a.degree() - b.degree(); k >= 0; --k) {
    const T factor = rem[static_cast<std::size_t>(k + b.degree())] / lead;
    quot[static_cast<std::size_t>(k)] = factor;
    if (is_zero(factor)) continue;
    for (int j = 0; j <= b.degree(); ++j) rem[static_cast<std::size_t>(k + j)] -= factor * bc[j];
  }
  return {DensePoly<T>(std::move(quot)), DensePoly<T>(std::move(rem))};
}

template <ExactScalar T>
DensePoly<T> monic(const DensePoly<T>& p) {
  if (p.is_zero()) return p;
  return p / p.leading();
}

/// Monic greatest common divisor; gcd(0, 0) = 0.
template <ExactScalar T>
DensePoly<T> gcd(DensePoly<T> a, DensePoly<T> b) {
  while (!b.is_zero()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

/// p(a*X + b), expanded. The point type U may be wider than T.
template <ExactScalar U, ExactScalar T>
DensePoly<U> compose_affine(const DensePoly<T>& p, const U& a, const U& b) {
  const DensePoly<U> lin{b, a};
  DensePoly<U> acc;
  const auto c = p.coefficients();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * lin + DensePoly<U>(U(*it));
  return acc;
}

/// p(X + b)
template <ExactScalar T>
DensePoly<T> shift(const DensePoly<T>& p, const T& b) {
  return compose_affine<T>(p, T(1), b);
}

/// p(q(X))
template <ExactScalar T>
DensePoly<T> compose(const DensePoly<T>& p, const DensePoly<T>& q) {
  DensePoly<T> acc;
  const auto c = p.coefficients();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * q + DensePoly<T>(*it);
  return acc;
}

/// Re-expresses the coefficients in a wider scalar type.
template <ExactScalar U, ExactScalar T>
DensePoly<U> lift(const DensePoly<T>& p) {
  std::vector<U> out;
  out.reserve(p.coefficients().size());
  for (const auto& c : p.coefficients()) out.emplace_back(c);
  return DensePoly<U>(std::move(out));
}

/// Descending-degree rendering with exact coefficients, e.g. "4/3*s^2 - 4/3*s + 1".
template <ExactScalar T>
std::string to_string(const DensePoly<T>& p, std::string_view var = "x") {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = p.degree(); k >= 0; --k) {
    const T& c = p.coefficients()[static_cast<std::size_t>(k)];
    if (is_zero(c)) continue;
    std::string cs = to_string(c);
    const bool compound = cs.find_first_of("+-", 1) != std::string::npos;
    bool negative = !compound && cs.front() == '-';
    if (negative) cs.erase(0, 1);
    if (compound) cs = "(" + cs + ")";
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    if (k == 0) {
      os << cs;
      continue;
    }
    if (cs != "1") os << cs << "*";
    os << var;
    if (k > 1) os << "^" << k;
  }
  return os.str();
}

template <ExactScalar T>
std::ostream& operator<<(std::ostream& os, const DensePoly<T>& p) {
  return os << to_string(p);
}

/// Rising factorial of a polynomial argument: b(b+1)...(b+n-1).
inline RatPoly pochhammer(const RatPoly& b, int n) {
  RatPoly result(Rational(1));
  for (int i = 0; i < n; ++i) result = result * (b + RatPoly(Rational(i)));
  return result;
}

}  // namespace genherm
