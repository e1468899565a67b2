#pragma once

// Laguerre, Hermite and generalized Hermite polynomials H_n^mu, plus exact
// checks of their polynomial-level identities.
//
// Normalization: H_n^mu has leading coefficient 2^n and reduces to the
// classical Hermite polynomial at mu = 0. Even and odd indices are tied to
// Laguerre polynomials by
//   H_{2n}^mu(x)   = (-1)^n 4^n n! L_n^{mu-1/2}(x^2)
//   H_{2n+1}^mu(x) = (-1)^n 2^{2n+1} n! x L_n^{mu+1/2}(x^2).

#include <span>
#include <string>
#include <vector>

#include "genherm/poly.hpp"
#include "genherm/rational.hpp"
#include "genherm/report.hpp"

namespace genherm {

/// Index/parameter pair with mu > -1/2 enforced at construction.
class GenHermiteSpec {
 public:
  GenHermiteSpec(int n, Rational mu);

  int n() const { return n_; }
  const Rational& mu() const { return mu_; }
  /// 0 for even n, 1 for odd n.
  int parity() const { return n_ % 2; }
  /// Recurrence shift: 0 for even n, 2*mu for odd n.
  Rational theta() const { return parity() == 0 ? Rational(0) : mu_ * 2; }

 private:
  int n_;
  Rational mu_;
};

enum class HermiteMethod { laguerre, recurrence, f20 };

/// L_n^alpha via its explicit binomial coefficients; defined for every rational alpha.
RatPoly laguerre(int n, const Rational& alpha);

RatPoly gen_hermite(const GenHermiteSpec& spec, HermiteMethod method = HermiteMethod::laguerre);

/// Same polynomial without the mu > -1/2 restriction. Identities that shift
/// mu out of the orthogonality range still hold as polynomial identities.
RatPoly gen_hermite_poly(int n, const Rational& mu, HermiteMethod method = HermiteMethod::laguerre);

/// Classical Hermite polynomial (mu = 0).
RatPoly hermite(int n);

/// H_{2n}^mu(x) = E(x^2) and H_{2n+1}^mu(x) = x O(x^2); returns E or O as a
/// polynomial in the squared variable.
RatPoly hermite_in_square(int n, const Rational& mu);

/// x^2 y'' + 2x(mu - x^2) y' + (2n x^2 - theta_n) y for y = H_n^mu; identically zero.
RatPoly ode_residual(const GenHermiteSpec& spec);

/// Expands (1 + 2xw + 4w^2)(1 + 4w^2)^(-mu-3/2) exp(4x^2w^2/(1+4w^2)) to order
/// `order` in w and compares each coefficient with H_n^mu(x)/[n/2]!.
Report genfun_check(const Rational& mu, int order);

/// Normalized even moments nu_k = (mu+1/2)_k of the weight |x|^(2mu) e^(-x^2).
class MomentFunctional {
 public:
  explicit MomentFunctional(Rational mu) : mu_(std::move(mu)) {}

  const Rational& mu() const { return mu_; }
  Rational moment(int k) const { return pochhammer(mu_ + Rational(1, 2), k); }
  /// Integral of f against the weight, divided by Gamma(mu + 1/2).
  Rational integrate(const RatPoly& f) const;

 private:
  Rational mu_;
};

/// Normalized integral of H_m^mu H_n^mu against |x|^(2mu) e^(-x^2).
Rational orthogonality_integral(int m, int n, const Rational& mu);
/// 2^(2n) [n/2]! (mu+1/2)_{[(n+1)/2]}, the normalized squared norm.
Rational orthogonality_norm(int n, const Rational& mu);
Report orthogonality_check(int n_max, std::span<const Rational> mu_grid);

/// Terminating 2F0 form (2x)^n 2F0(-[n/2], -[n/2]-mu+(-1)^n/2; ; -1/x^2) against the recurrence.
Report f20_form_check(int n_max, std::span<const Rational> mu_grid);

/// Method agreement, parity, leading coefficient, mu = 0 reduction and ODE residual.
Report construction_check(int n_max, std::span<const Rational> mu_grid);

/// Beta-integral (Koshlyakov-type) raising of mu, summation identities,
/// conversions to and from classical Hermite polynomials, convolution sums,
/// and the generating-function / multiplication identities in the parameter.
Report identity_suite(std::span<const Rational> mu_grid, int n_max, int order);

}  // namespace genherm
