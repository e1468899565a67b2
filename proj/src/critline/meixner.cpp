#include <string>

#include "genherm/critline.hpp"
#include "genherm/mellin.hpp"

namespace genherm {

GaussPoly meixner_pollaczek_line(int n, const Rational& lambda) {
  // x = i(1/4 - s/2); at phi = pi/2: (k+1) P_{k+1} = 2x P_k - (k + 2 lambda - 1) P_{k-1}
  const GaussianRational i = GaussianRational::i();
  const GaussPoly x{i * GaussianRational(Rational(1, 4)), i * GaussianRational(Rational(-1, 2))};
  GaussPoly prev(GaussianRational(1));
  if (n == 0) return prev;
  GaussPoly cur = x * GaussianRational(2);
  for (int k = 1; k < n; ++k) {
    GaussPoly next = (x * GaussianRational(2) * cur - prev * GaussianRational(Rational(k - 1) + lambda * 2)) /
                     GaussianRational(Rational(k + 1));
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

bool meixner_pollaczek_check(int n, int eps, const Rational& mu) {
  const Rational lambda = (mu + Rational(eps)) / 2 + Rational(1, 4);
  const GaussPoly recurrence = meixner_pollaczek_line(n, lambda);
  const Rational scale = pochhammer(mu + Rational(1, 2) + Rational(eps), n) / factorial(n);
  const GaussPoly expected =
      lift<GaussianRational>(poly_factor(2 * n + eps, mu).phat) * (pow(GaussianRational::i(), n) * GaussianRational(scale));
  return recurrence == expected;
}

Report meixner_pollaczek_suite(int n_max, std::span<const Rational> mu_grid) {
  Report report("critline.meixner_pollaczek");
  for (const auto& mu : mu_grid) {
    for (int eps = 0; eps <= 1; ++eps) {
      for (int n = 0; n <= n_max; ++n) {
        report.check("meixner_pollaczek",
                     "n=" + std::to_string(n) + " eps=" + std::to_string(eps) + " mu=" + mu.str(),
                     meixner_pollaczek_check(n, eps, mu), "recurrence and 2F1 expansion differ");
      }
    }
  }
  return report;
}

}  // namespace genherm
