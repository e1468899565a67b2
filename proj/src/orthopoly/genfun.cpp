#include <string>

#include "genherm/orthopoly.hpp"
#include "genherm/series.hpp"

namespace genherm {

Report genfun_check(const Rational& mu, int order) {
  Report report("orthopoly.genfun");
  const RatPoly x = RatPoly::variable();
  const auto four_w2 = TruncatedSeries::monomial(order, RatPoly(Rational(4)), 2);

  TruncatedSeries prefactor(order, {RatPoly(Rational(1)), x * Rational(2), RatPoly(Rational(4))});
  const TruncatedSeries power = series_binomial_pow(four_w2, -mu - Rational(3, 2), order);
  const TruncatedSeries inner =
      TruncatedSeries::monomial(order, x * x * Rational(4), 2) * series_binomial_pow(four_w2, Rational(-1), order);
  const TruncatedSeries lhs = prefactor * power * series_exp(inner);

  for (int n = 0; n <= order; ++n) {
    const RatPoly expected = gen_hermite_poly(n, mu) / factorial(n / 2);
    report.check("genfun", "n=" + std::to_string(n) + " mu=" + mu.str(), lhs[n] == expected,
                 to_string(lhs[n] - expected));
  }
  return report;
}

}  // namespace genherm
