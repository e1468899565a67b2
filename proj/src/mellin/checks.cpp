#include <string>

#include "genherm/mellin.hpp"
#include "genherm/orthopoly.hpp"
#include "genherm/series.hpp"

namespace genherm {

namespace {

const Rational kHalf(1, 2);

std::string params(const char* key, int v, const Rational& mu) { return std::string(key) + "=" + std::to_string(v) + " mu=" + mu.str(); }

std::string diff_str(const GammaExpr& a, const GammaExpr& b) {
  const GammaExpr ca = a.canonical();
  const GammaExpr cb = b.canonical();
  return ca.str() + " vs " + cb.str();
}

// Affine polynomial a + b*s.
RatPoly lin(const Rational& a, const Rational& b = Rational(1)) { return RatPoly{a, b}; }

}  // namespace

Report recursion_check(int m_max, const Rational& mu) {
  Report report("mellin.recursion");
  for (int m = 0; 2 * m + 1 <= m_max; ++m) {
    GammaExpr rhs = mellin_transform(2 * m, mu).shifted(1) * Rational(2);
    if (m >= 1) rhs = rhs - mellin_transform(2 * m - 1, mu) * Rational(4 * m);
    const GammaExpr lhs = mellin_transform(2 * m + 1, mu);
    report.check("recursion.odd", params("m", m, mu), lhs == rhs, diff_str(lhs, rhs));
  }
  for (int m = 0; 2 * m + 2 <= m_max; ++m) {
    const GammaExpr rhs = mellin_transform(2 * m + 1, mu).shifted(1) * Rational(2) -
                          mellin_transform(2 * m, mu) * (Rational(2) * (Rational(2 * m + 1) + mu * 2));
    const GammaExpr lhs = mellin_transform(2 * m + 2, mu);
    report.check("recursion.even", params("m", m, mu), lhs == rhs, diff_str(lhs, rhs));
  }
  return report;
}

Report genfn_transform_check(const Rational& mu, int order) {
  Report report("mellin.genfn");
  const auto four_t2 = TruncatedSeries::monomial(order, RatPoly(Rational(4)), 2);
  const auto minus_four_t2 = TruncatedSeries::monomial(order, RatPoly(Rational(-4)), 2);
  // exponents affine in s
  const TruncatedSeries even = series_binomial_pow(four_t2, lin((-mu - 1) / 2, kHalf), order) *
                               series_binomial_pow(minus_four_t2, lin(-mu / 2, -kHalf), order);
  const TruncatedSeries odd = series_binomial_pow(four_t2, lin((-mu - 2) / 2, kHalf), order) *
                              series_binomial_pow(minus_four_t2, lin((-mu - 1) / 2, -kHalf), order);
  for (int n = 0; n <= order; ++n) {
    const int h = n / 2;
    const GammaExpr expected = mellin_transform(n, mu) * factorial(h).inverse();
    // the odd part carries an explicit factor t, so t^n reads coefficient n-1 of the series
    const GammaExpr got = n % 2 == 0 ? GammaExpr(mu, Rational(1), -2, 0, even[n])
                                     : GammaExpr(mu, Rational(1), 1, 1, odd[n - 1]);
    const bool stray_zero = n % 2 == 0 ? (n == 0 || odd[n - 1].is_zero()) : even[n].is_zero();
    report.check("genfn_transform", params("n", n, mu), got == expected && stray_zero, diff_str(got, expected));
  }
  return report;
}

Report reciprocity_check(int n_max, int m_max, const Rational& mu) {
  Report report("mellin.reciprocity");
  for (int eps = 0; eps <= 1; ++eps) {
    const Rational a = mu + kHalf + Rational(eps);
    for (int n = 0; n <= n_max; ++n) {
      const RatPoly pn = poly_factor(2 * n + eps, mu).pscaled;
      for (int m = 0; m <= m_max; ++m) {
        const RatPoly pm = poly_factor(2 * m + eps, mu).pscaled;
        const Rational lhs = pochhammer(a, m) * pn(Rational(-2 * m - eps) - mu);
        const Rational rhs = pochhammer(a, n) * pm(Rational(-2 * n - eps) - mu);
        report.check(eps == 0 ? "reciprocity.even" : "reciprocity.odd",
                     "n=" + std::to_string(n) + " m=" + std::to_string(m) + " mu=" + mu.str(), lhs == rhs,
                     lhs.str() + " vs " + rhs.str());
      }
    }
  }
  return report;
}

Report difference_equation_check(int m, const Rational& mu) {
  Report report("mellin.difference");
  const std::string p = params("m", m, mu);
  const bool even = m % 2 == 0;
  const Rational c0 = (Rational(m) + mu) * 2 + 1;
  const RatPoly s = RatPoly::variable();

  // Transform level, written with shifts s+2, s+4 so no Gamma offset goes negative.
  const GammaExpr M = mellin_transform(m, mu);
  const RatPoly bracket = s * (s + RatPoly(Rational(1))) + RatPoly(even ? (1 - mu) * mu : -(1 + mu) * mu);
  const GammaExpr transform = M.shifted(2) * c0 - M.shifted(4) + M * bracket;
  report.check("difference.transform", p, transform.is_zero(), transform.canonical().str());

  // Factor level.
  const RatPoly ph = poly_factor(m, mu).phat;
  const RatPoly up = shift(ph, Rational(2));
  const RatPoly down = shift(ph, Rational(-2));
  RatPoly factor;
  if (even) {
    factor = lin(mu - 2) * ph * c0 - lin(mu) * lin(mu - 2) * up + (lin(-2) * lin(-1) + RatPoly((1 - mu) * mu)) * down;
  } else {
    factor = lin(mu - 1) * ph * c0 - lin(mu + 1) * lin(mu - 1) * up + (lin(-2) * lin(-1) - RatPoly((1 + mu) * mu)) * down;
  }
  report.check(even ? "difference.factor.even" : "difference.factor.odd", p, factor.is_zero(), to_string(factor, "s"));

  // Shifted factor q(s) = phat(s + 1/2).
  const RatPoly q = shift(ph, kHalf);
  const RatPoly q_up = shift(q, Rational(2));
  const RatPoly q_down = shift(q, Rational(-2));
  const Rational off = even ? kHalf : Rational(3, 2);
  RatPoly shifted;
  if (even) {
    shifted = lin(mu - Rational(3, 2)) * q * c0 - lin(mu + kHalf) * lin(mu - Rational(3, 2)) * q_up +
              (lin(-Rational(3, 2)) * lin(-kHalf) + RatPoly((1 - mu) * mu)) * q_down;
  } else {
    shifted = lin(mu - kHalf) * q * c0 - lin(mu + Rational(3, 2)) * lin(mu - kHalf) * q_up +
              (lin(-Rational(3, 2)) * lin(-kHalf) - RatPoly((1 + mu) * mu)) * q_down;
  }
  report.check(even ? "difference.shifted.even" : "difference.shifted.odd", p, shifted.is_zero(), to_string(shifted, "s"));

  // At a root r of q: (r+mu+off) q(r+2) = (r-mu-off) q(r-2), i.e. q divides the combination.
  const RatPoly relation = lin(mu + off) * q_up - lin(-mu - off) * q_down;
  const bool divisible = q.degree() == 0 || divmod(relation, q).second.is_zero();
  report.check("difference.root_relation", p, divisible && relation == q * c0, to_string(relation - q * c0, "s"));
  return report;
}

Report pfaff_half_check(int n_max, const Rational& mu) {
  Report report("mellin.pfaff");
  for (int eps = 0; eps <= 1; ++eps) {
    const RatPoly b = lin((mu + Rational(eps)) / 2, kHalf);
    const Rational c = mu + kHalf + Rational(eps);
    for (int n = 0; n <= n_max; ++n) {
      const std::string p = "n=" + std::to_string(n) + " eps=" + std::to_string(eps) + " mu=" + mu.str();
      const RatPoly f = hyp2f1_terminating(n, b, c, Rational(2));

      // 2F1(-n,b;c;2) = (-2)^n (b)_n/(c)_n 2F1(-n, 1-c-n; 1-b-n; 1/2), times D = (1-b-n)_n.
      const RatPoly base = RatPoly(Rational(1 - n)) - b;
      auto tail = [&](int from) {
        RatPoly prod(Rational(1));
        for (int i = from; i < n; ++i) prod *= base + RatPoly(Rational(i));
        return prod;
      };
      RatPoly numer;
      Rational w(1);  // (-n)_j (1-c-n)_j (1/2)^j / j!
      for (int j = 0; j <= n; ++j) {
        if (j > 0) w = w * Rational(j - 1 - n) * (Rational(1 - n + j - 1) - c) / (Rational(2) * j);
        numer += tail(j) * w;
      }
      const RatPoly lhs = f * tail(0) * pochhammer(c, n);
      const RatPoly rhs = pochhammer(b, n) * numer * pow(Rational(-2), n);
      report.check("pfaff.half_argument", p, lhs == rhs, to_string(lhs - rhs, "s"));

      // Pfaff with z = 2: (1-z)^n 2F1(-n, c-b; c; 2).
      const RatPoly reflected = hyp2f1_terminating(n, RatPoly(c) - b, c, Rational(2)) * pow(Rational(-1), n);
      report.check("pfaff.reflection", p, reflected == f, to_string(reflected - f, "s"));
    }
  }
  return report;
}

Report hermite_reduction_check(int n_max, std::span<const Rational> mu_grid) {
  Report report("mellin.hermite_reduction");
  for (const auto& mu : mu_grid) {
    for (int n = 0; n <= n_max; ++n) {
      const std::string p = params("n", n, mu);
      const GammaExpr lhs = mellin_transform(n, mu);
      const int h = n / 2;
      GammaExpr rhs = GammaExpr::zero(mu);
      for (int j = 0; j <= h; ++j) {
        const Rational w = binomial(Rational(h), j) * pow(Rational(-4), j) * pochhammer(mu, j);
        rhs = rhs + mellin_transform(n - 2 * j, Rational(0)).reweighted(mu) * w;
      }
      report.check("hermite_reduction", p, lhs == rhs, diff_str(lhs, rhs));
      const GammaExpr moments = mellin_of_polynomial(gen_hermite_poly(n, mu), mu);
      report.check("closed_form_vs_moments", p, lhs == moments, diff_str(lhs, moments));
    }
  }
  return report;
}

}  // namespace genherm
