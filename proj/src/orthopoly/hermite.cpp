#include <stdexcept>
#include <string>

#include "genherm/orthopoly.hpp"

namespace genherm {

namespace {

const Rational kHalf(1, 2);

// p(X) -> p(x^2), optionally times x.
RatPoly from_square(const RatPoly& p, bool times_x) {
  std::vector<Rational> out(static_cast<std::size_t>(2 * (p.degree() + 1)), Rational(0));
  for (int j = 0; j <= p.degree(); ++j) out[static_cast<std::size_t>(2 * j + (times_x ? 1 : 0))] = p.coeff(static_cast<std::size_t>(j));
  return RatPoly(std::move(out));
}

RatPoly by_recurrence(int n, const Rational& mu) {
  const RatPoly two_x = RatPoly::monomial(Rational(2), 1);
  RatPoly prev(Rational(1));
  if (n == 0) return prev;
  RatPoly cur = two_x;
  for (int k = 1; k < n; ++k) {
    const Rational theta = (k % 2 == 1) ? mu * 2 : Rational(0);
    RatPoly next = two_x * cur - prev * (Rational(2) * (Rational(k) + theta));
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

RatPoly by_f20(int n, const Rational& mu) {
  const int h = n / 2;
  const Rational b = Rational(-h) - mu + (n % 2 == 0 ? kHalf : -kHalf);
  const Rational two_n = pow(Rational(2), n);
  std::vector<Rational> c(static_cast<std::size_t>(n + 1), Rational(0));
  for (int j = 0; j <= h; ++j) {
    // (-h)_j (b)_j / j! * (-1)^j, times (2x)^n x^(-2j)
    Rational term = pochhammer(Rational(-h), j) * pochhammer(b, j) / factorial(j);
    if (j % 2 == 1) term = -term;
    c[static_cast<std::size_t>(n - 2 * j)] = term * two_n;
  }
  return RatPoly(std::move(c));
}

std::string params(int n, const Rational& mu) { return "n=" + std::to_string(n) + " mu=" + mu.str(); }

}  // namespace

GenHermiteSpec::GenHermiteSpec(int n, Rational mu) : n_(n), mu_(std::move(mu)) {
  if (n < 0) throw std::invalid_argument("generalized Hermite index must be nonnegative");
  if (mu_ <= -kHalf) throw std::invalid_argument("generalized Hermite parameter must exceed -1/2, got " + mu_.str());
}

RatPoly laguerre(int n, const Rational& alpha) {
  if (n < 0) throw std::invalid_argument("Laguerre degree must be nonnegative");
  // coefficient of x^j: (-1)^j / j! * binom(n + alpha, n - j)
  std::vector<Rational> c;
  c.reserve(static_cast<std::size_t>(n + 1));
  for (int j = 0; j <= n; ++j) {
    Rational v = pochhammer(alpha + Rational(j + 1), n - j) / (factorial(n - j) * factorial(j));
    if (j % 2 == 1) v = -v;
    c.push_back(std::move(v));
  }
  return RatPoly(std::move(c));
}

RatPoly hermite_in_square(int n, const Rational& mu) {
  if (n < 0) throw std::invalid_argument("generalized Hermite index must be nonnegative");
  const int h = n / 2;
  const bool odd = n % 2 == 1;
  Rational scale = pow(Rational(4), h) * factorial(h);
  if (odd) scale *= 2;
  if (h % 2 == 1) scale = -scale;
  return laguerre(h, odd ? mu + kHalf : mu - kHalf) * scale;
}

RatPoly gen_hermite_poly(int n, const Rational& mu, HermiteMethod method) {
  if (n < 0) throw std::invalid_argument("generalized Hermite index must be nonnegative");
  switch (method) {
    case HermiteMethod::laguerre:
      return from_square(hermite_in_square(n, mu), n % 2 == 1);
    case HermiteMethod::recurrence:
      return by_recurrence(n, mu);
    case HermiteMethod::f20:
      return by_f20(n, mu);
  }
  throw std::invalid_argument("unknown construction method");
}

RatPoly gen_hermite(const GenHermiteSpec& spec, HermiteMethod method) {
  return gen_hermite_poly(spec.n(), spec.mu(), method);
}

RatPoly hermite(int n) { return gen_hermite_poly(n, Rational(0), HermiteMethod::recurrence); }

RatPoly ode_residual(const GenHermiteSpec& spec) {
  const RatPoly y = gen_hermite(spec);
  const RatPoly x = RatPoly::variable();
  const RatPoly x2 = x * x;
  const RatPoly dy = derivative(y);
  const RatPoly d2y = derivative(dy);
  return x2 * d2y + x * (RatPoly(spec.mu()) - x2) * dy * Rational(2) +
         (x2 * Rational(2 * spec.n()) - RatPoly(spec.theta())) * y;
}

Report f20_form_check(int n_max, std::span<const Rational> mu_grid) {
  Report report("orthopoly.f20");
  for (const auto& mu : mu_grid) {
    for (int n = 0; n <= n_max; ++n) {
      const RatPoly f20 = gen_hermite_poly(n, mu, HermiteMethod::f20);
      const RatPoly rec = gen_hermite_poly(n, mu, HermiteMethod::recurrence);
      report.check("f20_form", params(n, mu), f20 == rec, to_string(f20 - rec));
    }
  }
  return report;
}

Report construction_check(int n_max, std::span<const Rational> mu_grid) {
  Report report("orthopoly.construction");
  for (const auto& mu : mu_grid) {
    for (int n = 0; n <= n_max; ++n) {
      const std::string p = params(n, mu);
      const RatPoly lag = gen_hermite_poly(n, mu, HermiteMethod::laguerre);
      const RatPoly rec = gen_hermite_poly(n, mu, HermiteMethod::recurrence);
      const RatPoly f20 = gen_hermite_poly(n, mu, HermiteMethod::f20);
      report.check("method_agreement.laguerre_recurrence", p, lag == rec, to_string(lag - rec));
      report.check("method_agreement.f20_recurrence", p, f20 == rec, to_string(f20 - rec));

      bool parity_ok = true;
      for (int k = 0; k <= rec.degree(); ++k) {
        if ((k - n) % 2 != 0 && !rec.coeff(static_cast<std::size_t>(k)).is_zero()) parity_ok = false;
      }
      report.check("parity", p, parity_ok, to_string(rec));
      report.check("leading_coefficient", p, rec.degree() == n && rec.leading() == pow(Rational(2), n),
                   to_string(rec));
      if (mu > -kHalf) {
        const RatPoly res = ode_residual(GenHermiteSpec(n, mu));
        report.check("ode_residual", p, res.is_zero(), to_string(res));
      }
    }
  }
  // mu = 0 is the classical Hermite family, H_{k+1} = 2x H_k - 2k H_{k-1}.
  RatPoly prev(Rational(1));
  RatPoly cur = RatPoly::monomial(Rational(2), 1);
  for (int n = 0; n <= n_max; ++n) {
    const RatPoly expected = n == 0 ? prev : cur;
    const RatPoly got = gen_hermite_poly(n, Rational(0));
    report.check("classical_reduction", "n=" + std::to_string(n), got == expected, to_string(got - expected));
    if (n >= 1) {
      RatPoly next = RatPoly::monomial(Rational(2), 1) * cur - prev * Rational(2 * n);
      prev = std::move(cur);
      cur = std::move(next);
    }
  }
  return report;
}

}  // namespace genherm
