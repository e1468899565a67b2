#include <string>

#include "genherm/orthopoly.hpp"

namespace genherm {

Rational MomentFunctional::integrate(const RatPoly& f) const {
  // Odd powers integrate to zero against the even weight.
  Rational total(0);
  for (int k = 0; 2 * k <= f.degree(); ++k) total += f.coeff(static_cast<std::size_t>(2 * k)) * moment(k);
  return total;
}

Rational orthogonality_integral(int m, int n, const Rational& mu) {
  return MomentFunctional(mu).integrate(gen_hermite(GenHermiteSpec(m, mu)) * gen_hermite(GenHermiteSpec(n, mu)));
}

Rational orthogonality_norm(int n, const Rational& mu) {
  return pow(Rational(2), 2 * n) * factorial(n / 2) * pochhammer(mu + Rational(1, 2), (n + 1) / 2);
}

Report orthogonality_check(int n_max, std::span<const Rational> mu_grid) {
  Report report("orthopoly.orthogonality");
  for (const auto& mu : mu_grid) {
    for (int m = 0; m <= n_max; ++m) {
      for (int n = m; n <= n_max; ++n) {
        const Rational value = orthogonality_integral(m, n, mu);
        const std::string p = "m=" + std::to_string(m) + " n=" + std::to_string(n) + " mu=" + mu.str();
        if (m != n) {
          report.check("orthogonality.off_diagonal", p, value.is_zero(), value.str());
        } else {
          const Rational norm = orthogonality_norm(n, mu);
          report.check("orthogonality.norm", p, value == norm && value.sign() > 0,
                       value.str() + " vs " + norm.str());
        }
      }
    }
  }
  return report;
}

}  // namespace genherm
