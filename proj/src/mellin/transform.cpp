#include <stdexcept>
#include <string>

#include "genherm/mellin.hpp"

namespace genherm {

namespace {

const Rational kHalf(1, 2);

}  // namespace

RatPoly hyp2f1_terminating(int n, const RatPoly& b, const Rational& c, const Rational& z) {
  if (n < 0) throw std::invalid_argument("terminating 2F1 needs a nonnegative degree");
  RatPoly sum(Rational(1));
  RatPoly b_rising(Rational(1));
  Rational scalar(1);  // (-n)_j / (c)_j z^j / j!
  for (int j = 1; j <= n; ++j) {
    const Rational denom = (c + Rational(j - 1)) * j;
    if (denom.is_zero()) throw std::domain_error("2F1 lower parameter hits a nonpositive integer");
    scalar = scalar * (Rational(j - 1 - n)) * z / denom;
    b_rising *= b + RatPoly(Rational(j - 1));
    sum += b_rising * scalar;
  }
  return sum;
}

Rational hyp2f1_terminating(int n, const Rational& b, const Rational& c, const Rational& z) {
  return hyp2f1_terminating(n, RatPoly(b), c, z).coeff(0);
}

PolyFactor poly_factor(int m, const Rational& mu) {
  if (m < 0) throw std::invalid_argument("transform index must be nonnegative");
  if (mu <= -kHalf) throw std::invalid_argument("parameter must exceed -1/2, got " + mu.str());
  const int h = m / 2;
  const int eps = m % 2;
  const Rational c = mu + kHalf + Rational(eps);
  PolyFactor f;
  f.m = m;
  f.mu = mu;
  f.phat = hyp2f1_terminating(h, RatPoly{(mu + Rational(eps)) / 2, kHalf}, c, Rational(2));
  f.pscaled = f.phat * pochhammer(c, h);
  return f;
}

GammaExpr mellin_transform(int m, const Rational& mu) {
  const PolyFactor f = poly_factor(m, mu);
  const int h = m / 2;
  Rational c = pow(Rational(-4), h);
  if (m % 2 == 0) {
    c *= pochhammer(mu + kHalf, h);
    return GammaExpr(mu, c, -2, 0, f.phat);
  }
  c *= pochhammer(mu + Rational(3, 2), h);
  return GammaExpr(mu, c, 1, 1, f.phat);
}

GammaExpr mellin_of_polynomial(const RatPoly& f, const Rational& mu) {
  // int_0^inf x^(s+mu+j-1) e^(-x^2/2) dx = 2^((mu+s+j)/2 - 1) Gamma((mu+s+j)/2)
  GammaExpr total = GammaExpr::zero(mu);
  for (int j = 0; j <= f.degree(); ++j) {
    const Rational& fj = f.coefficients()[static_cast<std::size_t>(j)];
    if (fj.is_zero()) continue;
    total = total + GammaExpr(mu, fj, j - 2, j, RatPoly(Rational(1)));
  }
  return total;
}

bool functional_equation_check(int m, const Rational& mu) {
  const RatPoly p = poly_factor(m, mu).phat;
  const RatPoly reflected = compose_affine<Rational>(p, Rational(-1), Rational(1));
  return (m / 2) % 2 == 0 ? p == reflected : p == -reflected;
}

Report functional_equation_suite(int m_max, std::span<const Rational> mu_grid) {
  Report report("mellin.functional_equation");
  for (const auto& mu : mu_grid) {
    for (int m = 0; m <= m_max; ++m) {
      const PolyFactor f = poly_factor(m, mu);
      const RatPoly reflected = compose_affine<Rational>(f.phat, Rational(-1), Rational(1));
      const RatPoly diff = (m / 2) % 2 == 0 ? f.phat - reflected : f.phat + reflected;
      const std::string p = "m=" + std::to_string(m) + " mu=" + mu.str();
      report.check("functional_equation", p, diff.is_zero(), to_string(diff, "s"));
      const Rational lead = ((m / 2) % 2 == 0 ? Rational(1) : Rational(-1)) / pochhammer(mu + kHalf + Rational(m % 2), m / 2);
      report.check("factor_shape", p, f.degree() == m / 2 && f.phat.leading() == lead,
                   "degree " + std::to_string(f.degree()) + ", leading " + f.phat.leading().str());
    }
  }
  return report;
}

}  // namespace genherm
