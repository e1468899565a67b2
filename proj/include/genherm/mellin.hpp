#pragma once

// Exact Mellin transforms of x^mu e^(-x^2/2) H_m^mu(x) and their polynomial
// factors. Every transform is held as
//   c * 2^((mu+s+k)/2) * Gamma((mu+s+delta)/2) * P(s)
// and compared after canonicalization, so identities between transforms
// reduce to polynomial equality in s.

#include <span>
#include <stdexcept>
#include <string>

#include "genherm/poly.hpp"
#include "genherm/rational.hpp"
#include "genherm/report.hpp"

namespace genherm {

/// Raised when two transforms with different (mu, k mod 2, delta mod 2) are
/// combined. Every identity in scope shares one canonical class, so this
/// always indicates a bug in how an expression was assembled.
class GammaParityMismatch : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class GammaExpr {
 public:
  /// delta must be nonnegative.
  GammaExpr(Rational mu, Rational c, int k, int delta, RatPoly p);
  static GammaExpr zero(Rational mu);

  const Rational& mu() const { return mu_; }
  const Rational& c() const { return c_; }
  int k() const { return k_; }
  int delta() const { return delta_; }
  const RatPoly& poly() const { return p_; }
  bool is_zero() const { return c_.is_zero() || p_.is_zero(); }

  /// k in {0,1}, delta in {0,1}, c folded into P (c = 1); zero is (0, 0, P = 0).
  GammaExpr canonical() const;

  /// s -> s + j for j >= -delta.
  GammaExpr shifted(int j) const;
  /// s -> s + extra, read as a transform with parameter mu + extra.
  GammaExpr reweighted(const Rational& extra) const;

  GammaExpr& operator*=(const Rational& s);
  GammaExpr& operator*=(const RatPoly& f);

  friend GammaExpr operator+(const GammaExpr& a, const GammaExpr& b);
  friend GammaExpr operator-(const GammaExpr& a, const GammaExpr& b);
  friend GammaExpr operator*(GammaExpr a, const Rational& s) { return a *= s; }
  friend GammaExpr operator*(const Rational& s, GammaExpr a) { return a *= s; }
  friend GammaExpr operator*(GammaExpr a, const RatPoly& f) { return a *= f; }
  friend GammaExpr operator*(const RatPoly& f, GammaExpr a) { return a *= f; }
  /// Equality of canonical forms.
  friend bool operator==(const GammaExpr& a, const GammaExpr& b);

  std::string str() const;

 private:
  Rational mu_;
  Rational c_;
  int k_;
  int delta_;
  RatPoly p_;
};

/// sum_{j<=n} (-n)_j (b)_j / (c)_j z^j / j!, b a polynomial in s.
RatPoly hyp2f1_terminating(int n, const RatPoly& b, const Rational& c, const Rational& z);
Rational hyp2f1_terminating(int n, const Rational& b, const Rational& c, const Rational& z);

/// Closed form of M_m^mu(s) = int_0^inf x^(s-1) H_m^mu(x) x^mu e^(-x^2/2) dx.
GammaExpr mellin_transform(int m, const Rational& mu);

/// Same integral for an arbitrary even or odd polynomial in place of H_m^mu,
/// assembled monomial by monomial from the Gaussian moments.
GammaExpr mellin_of_polynomial(const RatPoly& f, const Rational& mu);

struct PolyFactor {
  int m = 0;
  Rational mu;
  RatPoly phat;    // 2F1(-[m/2], (mu+s+eps)/2; mu+1/2+eps; 2)
  RatPoly pscaled;  // (mu+1/2+eps)_{[m/2]} * phat

  int degree() const { return phat.degree(); }
  int parity() const { return m % 2; }
};

PolyFactor poly_factor(int m, const Rational& mu);

/// phat(s) - (-1)^[m/2] phat(1-s) == 0.
bool functional_equation_check(int m, const Rational& mu);
Report functional_equation_suite(int m_max, std::span<const Rational> mu_grid);

/// Index recursions between transforms of consecutive index:
///   M_{2m+1}(s) = 2 M_{2m}(s+1) - 4m M_{2m-1}(s)
///   M_{2m+2}(s) = 2 M_{2m+1}(s+1) - 2(2m+2mu+1) M_{2m}(s)
Report recursion_check(int m_max, const Rational& mu);

/// Coefficients of the generating function of the transforms, split into
/// the Gamma((mu+s)/2) and Gamma((mu+s+1)/2) parts:
///   2^((mu+s)/2-1) (1+4t^2)^((s-mu-1)/2) (1-4t^2)^(-(mu+s)/2)
///   t 2^((mu+s+1)/2) (1+4t^2)^((s-mu-2)/2) (1-4t^2)^(-(mu+s+1)/2)
/// against M_n(s)/[n/2]!.
Report genfn_transform_check(const Rational& mu, int order);

/// (mu+1/2)_m P_{2n}(-2m-mu) = (mu+1/2)_n P_{2m}(-2n-mu) and
/// (mu+3/2)_m P_{2n+1}(-2m-mu-1) = (mu+3/2)_n P_{2m+1}(-2n-mu-1), P = pscaled.
Report reciprocity_check(int n_max, int m_max, const Rational& mu);

/// Transform-level, factor-level and shifted-factor difference equations.
Report difference_equation_check(int m, const Rational& mu);

/// 2F1(-n,b;c;2) against its 2F1(...;1/2) form (cross-multiplied) and the
/// Pfaff reflection b -> c-b, for both parity families.
Report pfaff_half_check(int n_max, const Rational& mu);

/// M_n^mu(s) = sum_j C([n/2],j) (-4)^j (mu)_j M_{n-2j}^0(s+mu), plus the
/// closed form against the monomial-moment assembly.
Report hermite_reduction_check(int n_max, std::span<const Rational> mu_grid);

}  // namespace genherm
