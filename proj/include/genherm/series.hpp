#pragma once

// Truncated formal power series in one variable whose coefficients are
// polynomials in a second variable. Every product discards terms beyond the
// order, so all identities hold modulo t^(order+1).

#include <vector>

#include "genherm/poly.hpp"
#include "genherm/rational.hpp"

namespace genherm {

class TruncatedSeries {
 public:
  using Coeff = RatPoly;

  explicit TruncatedSeries(int order);
  TruncatedSeries(int order, std::vector<Coeff> coeffs);

  static TruncatedSeries constant(int order, Coeff c);
  /// c * t^k
  static TruncatedSeries monomial(int order, Coeff c, int k);

  int order() const { return order_; }
  const Coeff& operator[](int k) const { return c_.at(static_cast<std::size_t>(k)); }
  const std::vector<Coeff>& coefficients() const { return c_; }

  TruncatedSeries truncated(int order) const;

  TruncatedSeries& operator+=(const TruncatedSeries& rhs);
  TruncatedSeries& operator-=(const TruncatedSeries& rhs);
  TruncatedSeries& operator*=(const Coeff& s);

  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator*(TruncatedSeries a, const Coeff& s) { return a *= s; }
  friend TruncatedSeries operator*(const Coeff& s, TruncatedSeries a) { return a *= s; }

  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

 private:
  int order_;
  std::vector<Coeff> c_;  // exactly order_ + 1 entries
};

/// (1 + u)^r truncated at `order`, with u(0) = 0. The exponent may be a
/// polynomial in the coefficient variable (e.g. affine in s).
TruncatedSeries series_binomial_pow(const TruncatedSeries& u, const RatPoly& r, int order);
TruncatedSeries series_binomial_pow(const TruncatedSeries& u, const Rational& r, int order);

/// exp(f) for f(0) = 0, via n*E_n = sum_k k*f_k*E_{n-k}.
TruncatedSeries series_exp(const TruncatedSeries& f);

/// 1/f for f(0) a nonzero constant.
TruncatedSeries series_inverse(const TruncatedSeries& f);

}  // namespace genherm
