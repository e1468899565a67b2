#pragma once

// Exact rational and Gaussian-rational scalars.
//
// Rational is a thin value type over GMP's mpq_class. Every operation leaves
// the value in lowest terms with a positive denominator; division by zero
// raises std::domain_error instead of trapping inside GMP.

#include <compare>
#include <concepts>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace genherm {

class Rational {
 public:
  Rational() = default;

  template <std::integral I>
  Rational(I value) : v_(static_cast<long>(value)) {}  // NOLINT: implicit by design of a scalar

  Rational(const mpz_class& num, const mpz_class& den);
  explicit Rational(const mpz_class& integer) : v_(integer) {}

  /// Parses "p", "-p" or "p/q" (optionally signed). Decimal notation is rejected.
  static Rational parse(std::string_view text);

  const mpz_class& num() const { return v_.get_num(); }
  const mpz_class& den() const { return v_.get_den(); }
  const mpq_class& mpq() const { return v_; }

  int sign() const { return sgn(v_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return v_.get_den() == 1; }

  Rational abs() const;
  Rational inverse() const;
  mpz_class floor() const;
  double to_double() const { return v_.get_d(); }

  /// "p/q", or "p" when the denominator is one.
  std::string str() const;

  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const;

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& q);

inline bool is_zero(const Rational& q) { return q.is_zero(); }
inline std::string to_string(const Rational& q) { return q.str(); }

/// q^e for any integer e; negative powers of zero throw.
Rational pow(const Rational& q, int e);

/// Rising factorial (a)_n = a(a+1)...(a+n-1); (a)_0 = 1.
Rational pochhammer(const Rational& a, int n);

Rational factorial(int n);

/// Binomial coefficient with arbitrary rational top and integer bottom k >= 0.
Rational binomial(const Rational& top, int k);

/// Gamma(a)/Gamma(b) when a - b is an integer, reduced via the shift rule.
Rational gamma_ratio(const Rational& a, const Rational& b);

/// Number with a rational real and imaginary part.
class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(Rational re) : re_(std::move(re)) {}  // NOLINT: real embedding
  template <std::integral I>
  GaussianRational(I re) : re_(re) {}  // NOLINT
  GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

  static GaussianRational i() { return {Rational(0), Rational(1)}; }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  GaussianRational conj() const { return {re_, -im_}; }
  Rational norm() const { return re_ * re_ + im_ * im_; }
  GaussianRational inverse() const;

  std::string str() const;

  GaussianRational& operator+=(const GaussianRational& rhs);
  GaussianRational& operator-=(const GaussianRational& rhs);
  GaussianRational& operator*=(const GaussianRational& rhs);
  GaussianRational& operator/=(const GaussianRational& rhs);

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  GaussianRational operator-() const { return {-re_, -im_}; }

  friend bool operator==(const GaussianRational&, const GaussianRational&) = default;

 private:
  Rational re_;
  Rational im_;
};

std::ostream& operator<<(std::ostream& os, const GaussianRational& z);

inline bool is_zero(const GaussianRational& z) { return z.is_zero(); }
inline std::string to_string(const GaussianRational& z) { return z.str(); }

GaussianRational pow(const GaussianRational& z, int e);

}  // namespace genherm
