#include <stdexcept>

#include "genherm/oracle.hpp"
#include "genherm/orthopoly.hpp"

namespace genherm {

namespace {

struct LevelSum {
  BigFloat sum;
  BigFloat l1;
  int nodes = 0;
};

// Sum of f(x(t)) x'(t) over t = start + j*stride, j = 0, 1, ..., walking
// away from 0 in direction `dir` until the terms are negligible.
void walk(const std::function<BigFloat(const BigFloat&)>& f, const BigFloat& start, const BigFloat& stride, int dir,
          mpfr_prec_t wp, const BigFloat& tiny, LevelSum& acc) {
  const BigFloat half_pi = BigFloat::pi(wp) / BigFloat(2L, wp);
  const BigFloat t_min(3L, wp);
  const BigFloat t_max(24L, wp);
  BigFloat t = start;
  for (;;) {
    const BigFloat u = half_pi * sinh(t);
    const BigFloat x = exp(u);
    const BigFloat term = f(x) * half_pi * cosh(t) * x;
    if (!term.is_finite()) throw std::runtime_error("integrand is not finite at t = " + t.str(8));
    acc.sum += term;
    acc.l1 += abs(term);
    ++acc.nodes;
    const BigFloat at = abs(t);
    if (t_max < at) break;
    if (t_min < at && abs(term) <= tiny * acc.l1) break;
    if (dir > 0) {
      t += stride;
    } else {
      t -= stride;
    }
  }
}

}  // namespace

QuadratureResult integrate_half_line(const std::function<BigFloat(const BigFloat&)>& f, mpfr_prec_t bits,
                                     int max_level) {
  const mpfr_prec_t wp = bits + 32;
  BigFloat tiny(1L, wp);
  mpfr_mul_2si(tiny.get(), tiny.get(), -static_cast<long>(bits) - 24, MPFR_RNDN);
  BigFloat tol(1L, wp);
  mpfr_mul_2si(tol.get(), tol.get(), -static_cast<long>(bits) + 16, MPFR_RNDN);

  QuadratureResult out;
  BigFloat prev_sum(wp);
  BigFloat prev_l1(wp);
  int nodes = 0;
  for (int level = 0; level <= max_level; ++level) {
    BigFloat h(1L, wp);
    mpfr_mul_2si(h.get(), h.get(), -level, MPFR_RNDN);
    LevelSum acc{BigFloat(wp), BigFloat(wp), 0};
    if (level == 0) {
      walk(f, BigFloat(0L, wp), h, 1, wp, tiny, acc);
      walk(f, -h, h, -1, wp, tiny, acc);
    } else {
      const BigFloat stride = h * BigFloat(2L, wp);
      walk(f, h, stride, 1, wp, tiny, acc);
      walk(f, -h, stride, -1, wp, tiny, acc);
    }
    nodes += acc.nodes;
    const BigFloat sum = level == 0 ? acc.sum * h : prev_sum / BigFloat(2L, wp) + acc.sum * h;
    const BigFloat l1 = level == 0 ? acc.l1 * h : prev_l1 / BigFloat(2L, wp) + acc.l1 * h;
    if (level > 0) {
      const BigFloat diff = abs(sum - prev_sum);
      out.value = sum;
      out.error_estimate = diff;
      out.l1_norm = l1;
      out.nodes_used = nodes;
      out.levels = level;
      if (level >= 3 && diff <= tol * l1) return out;
    }
    prev_sum = sum;
    prev_l1 = l1;
  }
  throw std::runtime_error("quadrature did not converge within " + std::to_string(max_level) + " levels");
}

QuadratureResult quad_mellin(int m, const Rational& mu, const Rational& s, mpfr_prec_t bits) {
  if (bits < 128) throw std::invalid_argument("oracle precision must be at least 128 bits");
  if (mu <= Rational(-1, 2)) throw std::invalid_argument("parameter must exceed -1/2");
  if ((s + mu).sign() <= 0) throw std::domain_error("integral diverges at 0 unless s + mu > 0");
  const mpfr_prec_t wp = bits + 32;
  const RatPoly h = gen_hermite(GenHermiteSpec(m, mu));
  const BigFloat a(s + mu - 1, wp);
  const BigFloat half(Rational(1, 2), wp);
  auto f = [&](const BigFloat& x) { return pow(x, a) * evaluate(h, x) * exp(-(x * x * half)); };
  return integrate_half_line(f, bits);
}

Report quadrature_suite(int m_max, std::span<const Rational> mu_grid, mpfr_prec_t bits, double tolerance) {
  Report report("oracle.quadrature");
  const Rational points[] = {Rational(1, 2), Rational(1), Rational(3, 2), Rational(3)};
  for (const auto& mu : mu_grid) {
    for (int m = 0; m <= m_max; ++m) {
      const GammaExpr closed = mellin_transform(m, mu);
      for (const auto& s : points) {
        const std::string p = "m=" + std::to_string(m) + " mu=" + mu.str() + " s=" + s.str();
        if ((s + mu).sign() <= 0) {
          report.skip("quadrature.closed_form", p, "s + mu <= 0");
          continue;
        }
        const QuadratureResult r = quad_mellin(m, mu, s, bits);
        const BigFloat exact = evaluate(closed, s, bits + 32);
        // an exact zero has no relative scale; fall back to the integral of |f|
        const BigFloat scale = exact.is_zero() ? r.l1_norm : abs(exact);
        const BigFloat err = abs(r.value - exact) / scale;
        report.check("quadrature.closed_form", p, err.to_double() < tolerance,
                     "relative error " + err.str(6) + ", quadrature " + r.value.str(30) + ", closed form " +
                         exact.str(30));
      }
    }
  }
  return report;
}

}  // namespace genherm
