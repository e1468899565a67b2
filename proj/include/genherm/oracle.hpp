#pragma once

// Multiprecision floating-point oracles. Nothing in the exact pipeline
// depends on this module; it only cross-validates closed forms.

#include <mpfr.h>

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "genherm/critline.hpp"
#include "genherm/mellin.hpp"
#include "genherm/rational.hpp"
#include "genherm/report.hpp"

namespace genherm {

class BigFloat {
 public:
  explicit BigFloat(mpfr_prec_t bits);
  BigFloat(const Rational& q, mpfr_prec_t bits);
  BigFloat(long v, mpfr_prec_t bits);
  BigFloat(const BigFloat& other);
  BigFloat(BigFloat&& other) noexcept;
  BigFloat& operator=(const BigFloat& other);
  BigFloat& operator=(BigFloat&& other) noexcept;
  ~BigFloat();

  mpfr_prec_t precision() const { return mpfr_get_prec(v_); }
  mpfr_srcptr get() const { return v_; }
  mpfr_ptr get() { return v_; }

  static BigFloat pi(mpfr_prec_t bits);
  static BigFloat euler_gamma(mpfr_prec_t bits);

  BigFloat& operator+=(const BigFloat& rhs);
  BigFloat& operator-=(const BigFloat& rhs);
  BigFloat& operator*=(const BigFloat& rhs);
  BigFloat& operator/=(const BigFloat& rhs);
  friend BigFloat operator+(BigFloat a, const BigFloat& b) { return a += b; }
  friend BigFloat operator-(BigFloat a, const BigFloat& b) { return a -= b; }
  friend BigFloat operator*(BigFloat a, const BigFloat& b) { return a *= b; }
  friend BigFloat operator/(BigFloat a, const BigFloat& b) { return a /= b; }
  BigFloat operator-() const;

  friend bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
  friend bool operator>(const BigFloat& a, const BigFloat& b) { return b < a; }
  friend bool operator<=(const BigFloat& a, const BigFloat& b) { return mpfr_lessequal_p(a.v_, b.v_) != 0; }

  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  bool is_finite() const { return mpfr_number_p(v_) != 0; }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  /// Scientific notation with `digits` significant digits.
  std::string str(int digits = 20) const;

 private:
  mpfr_t v_;
};

BigFloat abs(const BigFloat& x);
BigFloat exp(const BigFloat& x);
BigFloat log(const BigFloat& x);
BigFloat sqrt(const BigFloat& x);
BigFloat sinh(const BigFloat& x);
BigFloat cosh(const BigFloat& x);
BigFloat gamma(const BigFloat& x);
/// 2^x
BigFloat exp2(const BigFloat& x);
/// x^y for x > 0
BigFloat pow(const BigFloat& x, const BigFloat& y);
BigFloat max(const BigFloat& a, const BigFloat& b);

/// Horner evaluation of a rational polynomial.
BigFloat evaluate(const RatPoly& p, const BigFloat& x);

/// c 2^((mu+s+k)/2) Gamma((mu+s+delta)/2) P(s) at a real point.
BigFloat evaluate(const GammaExpr& e, const BigFloat& s);
/// Same at a rational point, with c P(s) computed exactly (so exact zeros stay zero).
BigFloat evaluate(const GammaExpr& e, const Rational& s, mpfr_prec_t bits);

struct QuadratureResult {
  BigFloat value{64};
  BigFloat error_estimate{64};  // difference between the last two levels
  BigFloat l1_norm{64};         // integral of |integrand|, for scaling absolute errors
  int nodes_used = 0;
  int levels = 0;
};

/// int_0^inf f(x) dx for f decaying at least like a power at 0 and like a
/// Gaussian at infinity, by the exp-sinh substitution x = exp(pi/2 sinh t).
/// Halves the step until two levels agree to roughly `bits` bits.
QuadratureResult integrate_half_line(const std::function<BigFloat(const BigFloat&)>& f, mpfr_prec_t bits,
                                     int max_level = 12);

/// int_0^inf x^(s+mu-1) H_m^mu(x) e^(-x^2/2) dx; requires s + mu > 0 and mu > -1/2.
QuadratureResult quad_mellin(int m, const Rational& mu, const Rational& s, mpfr_prec_t bits);

/// quad_mellin against the closed form at s in {1/2, 1, 3/2, 3} (s + mu > 0),
/// relative to |closed form|, or to the integral of |f| where the closed form vanishes.
Report quadrature_suite(int m_max, std::span<const Rational> mu_grid, mpfr_prec_t bits, double tolerance = 1e-10);

/// Partial sums through n = N of
///   even: sum (-1)^n / (4^n n n!) H_{2n}^{1/2}(x)      -> -2 ln x - gamma
///   odd:  sum (-1)^n / (2^(2n+1) n n!) H_{2n+1}^{-1/2}(x) -> -x (2 ln x + gamma)
/// Each term reduces to L_n(x^2)/n (times x), evaluated exactly in integers.
BigFloat log_series_partial(const Rational& x, int N, mpfr_prec_t bits, bool odd = false);
/// All partial sums for n = 1..N.
std::vector<BigFloat> log_series_partials(const Rational& x, int N, mpfr_prec_t bits, bool odd = false);
BigFloat log_series_target(const Rational& x, mpfr_prec_t bits, bool odd = false);

/// Each certified root rounded half away from zero to `digits` decimals.
std::vector<std::string> decimal_roots(const CriticalLineCertificate& cert, int digits);

/// Rational q rounded half away from zero to `digits` decimals, never "-0".
std::string round_decimal(const Rational& q, int digits);

}  // namespace genherm
