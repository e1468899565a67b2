#include <functional>
#include <initializer_list>
#include <sstream>
#include <string>

#include "genherm/multipoly.hpp"
#include "genherm/orthopoly.hpp"
#include "genherm/series.hpp"

namespace genherm {

namespace {

const Rational kHalf(1, 2);

// Parameter rendering for check records.
struct Params {
  std::ostringstream os;
  template <class V>
  Params& operator()(const char* key, const V& v) {
    if (os.tellp() > 0) os << ' ';
    os << key << '=' << v;
    return *this;
  }
  std::string str() const { return os.str(); }
};

bool all_legal(std::initializer_list<Rational> superscripts) {
  for (const auto& s : superscripts) {
    if (s <= -kHalf) return false;
  }
  return true;
}

Rational signed_unit(int k) { return k % 2 == 0 ? Rational(1) : Rational(-1); }

// E_n^mu or O_n^mu: H_{2n}^mu(x) = E(x^2), H_{2n+1}^mu(x) = x O(x^2).
RatPoly even_part(int n, const Rational& mu) { return hermite_in_square(2 * n, mu); }
RatPoly odd_part(int n, const Rational& mu) { return hermite_in_square(2 * n + 1, mu); }

// ---------------------------------------------------------------------------
// Raising mu by a Beta integral. With H_m^mu(x) = sum_j h_j x^j, the
// t-form integrates t^(mu-1/2+eps/2+j/2)(1-t)^(beta-1) and the u-form
// integrates 2 u^(2mu+eps+j)(1-u^2)^(beta-1); both reduce to
// Gamma(A+beta)Gamma(p) / (Gamma(A)Gamma(p+beta)) with integer A - p.

RatPoly beta_raise(int m, const Rational& mu, const Rational& beta, bool u_form) {
  const int eps = m % 2;
  const Rational a_top = Rational(m + eps + 1, 2) + mu;
  const RatPoly h = gen_hermite_poly(m, mu);
  std::vector<Rational> out(static_cast<std::size_t>(m + 1), Rational(0));
  for (int j = eps; j <= m; j += 2) {
    // Beta(p, beta) = integral; p from the exponent of the chosen form.
    const Rational p = u_form ? (mu * 2 + Rational(eps + j) + 1) / 2 : mu - kHalf + Rational(eps + j, 2) + 1;
    const Rational factor = gamma_ratio(a_top + beta, p + beta) * gamma_ratio(p, a_top);
    out[static_cast<std::size_t>(j)] = h.coeff(static_cast<std::size_t>(j)) * factor;
  }
  return RatPoly(std::move(out));
}

void check_beta_raise(Report& report, std::span<const Rational> grid, int n_max) {
  const Rational betas[] = {kHalf, Rational(1), Rational(7, 3)};
  for (const auto& mu : grid) {
    for (const auto& beta : betas) {
      for (int m = 0; m <= n_max; ++m) {
        const std::string p = Params()("m", m)("mu", mu)("beta", beta).str();
        if (!(mu > -kHalf) || beta.sign() <= 0) {
          report.skip("beta_raise", p, "integral diverges: needs mu > -1/2 and beta > 0");
          continue;
        }
        const RatPoly lhs = gen_hermite_poly(m, mu + beta);
        const RatPoly t_form = beta_raise(m, mu, beta, false);
        const RatPoly u_form = beta_raise(m, mu, beta, true);
        report.check("beta_raise.t_form", p, lhs == t_form, to_string(lhs - t_form));
        report.check("beta_raise.u_form", p, lhs == u_form, to_string(lhs - u_form));
      }
    }
  }
}

// ---------------------------------------------------------------------------
// Partial sums in the index raising mu by one.

void check_index_sums(Report& report, std::span<const Rational> grid, int n_max) {
  for (const auto& mu : grid) {
    RatPoly even_sum;
    RatPoly odd_sum;
    for (int n = 0; 2 * n <= n_max; ++n) {
      const Rational w = signed_unit(n) / (pow(Rational(4), n) * factorial(n));
      const std::string p = Params()("n", n)("mu", mu).str();

      even_sum += gen_hermite_poly(2 * n, mu + kHalf) * w;
      const RatPoly even_rhs = gen_hermite_poly(2 * n, mu + Rational(3, 2)) * w;
      if (all_legal({mu + kHalf, mu + Rational(3, 2)})) {
        report.check("index_sum.even", p, even_sum == even_rhs, to_string(even_sum - even_rhs));
      } else {
        report.skip("index_sum.even", p, "superscript <= -1/2");
      }

      if (2 * n + 1 > n_max) continue;
      odd_sum += gen_hermite_poly(2 * n + 1, mu - kHalf) * w;
      const RatPoly odd_rhs = gen_hermite_poly(2 * n + 1, mu + kHalf) * w;
      if (all_legal({mu - kHalf, mu + kHalf})) {
        report.check("index_sum.odd", p, odd_sum == odd_rhs, to_string(odd_sum - odd_rhs));
      } else {
        report.skip("index_sum.odd", p, "superscript <= -1/2");
      }
    }
  }
}

// ---------------------------------------------------------------------------
// Conversion between H_n^mu and classical H_n.

void check_classical_conversion(Report& report, std::span<const Rational> grid, int n_max) {
  for (const auto& mu : grid) {
    for (int n = 0; n <= n_max; ++n) {
      const int h = n / 2;
      const std::string p = Params()("n", n)("mu", mu).str();
      // H_n^mu = sum_j C(h,j)(-4)^j (mu)_j H_{n-2j}, and the inverse with (-mu)_j.
      RatPoly to_general;
      RatPoly to_classical;
      for (int j = 0; j <= h; ++j) {
        const Rational c = binomial(Rational(h), j) * pow(Rational(-4), j);
        to_general += hermite(n - 2 * j) * (c * pochhammer(mu, j));
        to_classical += gen_hermite_poly(n - 2 * j, mu) * (c * pochhammer(-mu, j));
      }
      const RatPoly general = gen_hermite_poly(n, mu);
      const RatPoly classical = hermite(n);
      const char* parity = n % 2 == 0 ? "even" : "odd";
      report.check(std::string("classical_to_general.") + parity, p, to_general == general,
                   to_string(to_general - general));
      report.check(std::string("general_to_classical.") + parity, p, to_classical == classical,
                   to_string(to_classical - classical));
    }
  }
}

// ---------------------------------------------------------------------------
// Convolution sums. Arguments sqrt(x^2 + y^2) are removed by writing each
// polynomial in the squared variables X = x^2, Y = y^2 (and dividing odd
// members by their argument).

MultiPoly in_var(const RatPoly& p, int nvars, int index) { return substitute(p, MultiPoly::variable(nvars, index)); }

MultiPoly in_sum(const RatPoly& p, int nvars) {
  MultiPoly s(nvars);
  for (int i = 0; i < nvars; ++i) s += MultiPoly::variable(nvars, i);
  return substitute(p, s);
}

void for_each_composition(int n, int parts, const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> c(static_cast<std::size_t>(parts), 0);
  std::function<void(int, int)> rec = [&](int idx, int remaining) {
    if (idx == parts - 1) {
      c[static_cast<std::size_t>(idx)] = remaining;
      fn(c);
      return;
    }
    for (int v = 0; v <= remaining; ++v) {
      c[static_cast<std::size_t>(idx)] = v;
      rec(idx + 1, remaining - v);
    }
  };
  rec(0, n);
}

void check_convolutions(Report& report, std::span<const Rational> grid, int n_max) {
  const std::vector<std::string> xy{"X", "Y"};
  // Two-variable addition formulas.
  for (const auto& alpha : grid) {
    for (const auto& beta : grid) {
      for (int n = 0; 2 * n <= n_max; ++n) {
        const std::string p = Params()("n", n)("alpha", alpha)("beta", beta).str();
        if (!all_legal({alpha, beta})) {
          report.skip("convolution.even", p, "superscript <= -1/2");
          continue;
        }
        const MultiPoly lhs = in_sum(even_part(n, alpha + beta + kHalf), 2);
        MultiPoly rhs(2);
        for (int k = 0; k <= n; ++k) {
          rhs += in_var(even_part(n - k, alpha), 2, 0) * in_var(even_part(k, beta), 2, 1) * binomial(Rational(n), k);
        }
        report.check("convolution.even", p, lhs == rhs, (lhs - rhs).str(xy));

        if (2 * n + 1 > n_max) continue;
        // Divided by xy on both sides.
        const MultiPoly lhs_odd = in_sum(odd_part(n, alpha + beta + Rational(3, 2)), 2);
        MultiPoly rhs_odd(2);
        for (int k = 0; k <= n; ++k) {
          rhs_odd += in_var(odd_part(n - k, alpha), 2, 0) * in_var(odd_part(k, beta), 2, 1) *
                     (binomial(Rational(n), k) / 2);
        }
        report.check("convolution.odd", p, lhs_odd == rhs_odd, (lhs_odd - rhs_odd).str(xy));
      }
    }
  }

  // Finite sums with integer k >= 1, multiplied through by Y^(k+1).
  for (const auto& alpha : grid) {
    for (int k = 1; k <= 3; ++k) {
      MultiPoly y_pow(2, Rational(1));
      for (int i = 0; i <= k; ++i) y_pow = y_pow * MultiPoly::variable(2, 1);
      for (int n = 2; 2 * (n - 1) <= n_max; ++n) {
        const std::string p = Params()("n", n)("k", k)("alpha", alpha).str();
        if (!all_legal({alpha})) {
          report.skip("finite_sum.even", p, "superscript <= -1/2");
          continue;
        }
        MultiPoly lhs(2);
        for (int j = 1; j <= n - 1; ++j) {
          lhs += in_var(even_part(j - 1, alpha), 2, 0) * in_var(even_part(n - j - 1, Rational(k) + Rational(3, 2)), 2, 1) *
                 binomial(Rational(n - 1), j - 1);
        }
        lhs = lhs * y_pow;
        MultiPoly bracket(2);
        MultiPoly y_term(2, Rational(1));
        for (int l = 0; l <= k; ++l) {
          const MultiPoly w = y_term * factorial(l).inverse();
          bracket += w * in_var(even_part(n - 1, alpha), 2, 0);
          bracket -= w * in_sum(even_part(n - 1, alpha + Rational(l)), 2);
          y_term = y_term * MultiPoly::variable(2, 1);
        }
        const MultiPoly rhs = bracket * (-factorial(k) / 4);
        report.check("finite_sum.even", p, lhs == rhs, (lhs - rhs).str(xy));

        if (2 * n - 1 > n_max) continue;
        MultiPoly lhs_odd(2);
        for (int j = 1; j <= n - 1; ++j) {
          lhs_odd += in_var(odd_part(j - 1, alpha), 2, 0) * in_var(odd_part(n - j - 1, Rational(k) + kHalf), 2, 1) *
                     (binomial(Rational(n - 1), j - 1) * 2);
        }
        lhs_odd = lhs_odd * y_pow;
        MultiPoly bracket_odd(2);
        y_term = MultiPoly(2, Rational(1));
        for (int l = 0; l <= k; ++l) {
          const MultiPoly w = y_term * factorial(l).inverse();
          bracket_odd += w * in_var(odd_part(n - 1, alpha), 2, 0);
          bracket_odd -= w * in_sum(odd_part(n - 1, alpha + Rational(l)), 2);
          y_term = y_term * MultiPoly::variable(2, 1);
        }
        const MultiPoly rhs_odd = bracket_odd * (-factorial(k));
        report.check("finite_sum.odd", p, lhs_odd == rhs_odd, (lhs_odd - rhs_odd).str(xy));
      }
    }
  }

  // k-fold sums. The right-hand superscripts run over the grid; the
  // left-hand superscript is sum(alpha_r) + k - 1/2 (even) and
  // sum(alpha_r) + k - 3/2 (odd), which is what the Laguerre k-fold addition
  // formula L^{sum a_r + k - 1}(sum x_r) = sum prod L^{a_r}_{i_r}(x_r) gives.
  const std::size_t g = grid.size();
  for (int k = 2; k <= 3; ++k) {
    for (std::size_t start = 0; start < g; ++start) {
      std::vector<Rational> sup(static_cast<std::size_t>(k));
      for (int r = 0; r < k; ++r) sup[static_cast<std::size_t>(r)] = grid[(start + static_cast<std::size_t>(r)) % g];
      Rational sum_even(0);
      Rational sum_odd(0);
      std::ostringstream tag;
      for (int r = 0; r < k; ++r) {
        sum_even += sup[static_cast<std::size_t>(r)] - kHalf;  // alpha_r with superscript alpha_r + 1/2
        sum_odd += sup[static_cast<std::size_t>(r)] + kHalf;   // alpha_r with superscript alpha_r - 1/2
        tag << (r ? "," : "") << sup[static_cast<std::size_t>(r)];
      }
      for (int n = 0; 2 * n <= n_max; ++n) {
        const std::string p = Params()("n", n)("k", k)("rhs_mu", tag.str()).str();
        const Rational lhs_even_mu = sum_even + Rational(k) - kHalf;
        MultiPoly rhs(k);
        for_each_composition(n, k, [&](const std::vector<int>& idx) {
          MultiPoly term(k, Rational(1));
          for (int r = 0; r < k; ++r) {
            term = term * in_var(even_part(idx[static_cast<std::size_t>(r)], sup[static_cast<std::size_t>(r)]), k, r) *
                   factorial(idx[static_cast<std::size_t>(r)]).inverse();
          }
          rhs += term;
        });
        rhs = rhs * factorial(n);
        const MultiPoly lhs = in_sum(even_part(n, lhs_even_mu), k);
        if (all_legal({lhs_even_mu})) {
          report.check("multi_convolution.even", p, lhs == rhs, (lhs - rhs).str());
        } else {
          report.skip("multi_convolution.even", p, "superscript <= -1/2");
        }

        if (2 * n + 1 > n_max) continue;
        const Rational lhs_odd_mu = sum_odd + Rational(k) - Rational(3, 2);
        MultiPoly rhs_odd(k);
        for_each_composition(n, k, [&](const std::vector<int>& idx) {
          MultiPoly term(k, Rational(1));
          for (int r = 0; r < k; ++r) {
            term = term * in_var(odd_part(idx[static_cast<std::size_t>(r)], sup[static_cast<std::size_t>(r)]), k, r) *
                   factorial(idx[static_cast<std::size_t>(r)]).inverse();
          }
          rhs_odd += term;
        });
        rhs_odd = rhs_odd * (factorial(n) / pow(Rational(2), k - 1));
        const MultiPoly lhs_odd = in_sum(odd_part(n, lhs_odd_mu), k);
        report.check("multi_convolution.odd", p, lhs_odd == rhs_odd, (lhs_odd - rhs_odd).str());
      }
    }
  }
}

// ---------------------------------------------------------------------------
// Parameter-side generating functions, expansion in sqrt(x^2+y^2), and the
// multiplication formula in the argument.

std::string first_mismatch(const TruncatedSeries& a, const TruncatedSeries& b, const char* var) {
  for (int k = 0; k <= std::min(a.order(), b.order()); ++k) {
    if (a[k] != b[k]) return std::string("coefficient of ") + var + "^" + std::to_string(k) + ": " + to_string(a[k] - b[k]);
  }
  return {};
}

void check_parameter_series(Report& report, std::span<const Rational> grid, int n_max, int order) {
  const RatPoly x = RatPoly::variable();
  const RatPoly x2 = x * x;
  const auto t = TruncatedSeries::monomial(order, RatPoly(Rational(1)), 1);
  const TruncatedSeries exp_minus_x2t = series_exp(TruncatedSeries::monomial(order, -x2, 1));
  const TruncatedSeries exp_t = series_exp(t);

  for (const auto& alpha : grid) {
    const std::string p = Params()("alpha", alpha)("order", order).str();

    // sum_m (-1)^m/(4^m m!) H_{2m}^{alpha-m+1/2}(x) t^m = (1+t)^alpha e^{-x^2 t}, odd analogue times 2x.
    std::vector<RatPoly> even_c;
    std::vector<RatPoly> odd_c;
    for (int m = 0; m <= order; ++m) {
      const Rational w = signed_unit(m) / (pow(Rational(4), m) * factorial(m));
      even_c.push_back(gen_hermite_poly(2 * m, alpha - Rational(m) + kHalf) * w);
      odd_c.push_back(gen_hermite_poly(2 * m + 1, alpha - Rational(m) - kHalf) * w);
    }
    const TruncatedSeries rhs_a = series_binomial_pow(t, alpha, order) * exp_minus_x2t;
    const TruncatedSeries lhs_a(order, even_c);
    const TruncatedSeries lhs_a_odd(order, odd_c);
    report.check("parameter_genfun.even", p, lhs_a == rhs_a, first_mismatch(lhs_a, rhs_a, "t"));
    const TruncatedSeries rhs_a_odd = rhs_a * (x * Rational(2));
    report.check("parameter_genfun.odd", p, lhs_a_odd == rhs_a_odd, first_mismatch(lhs_a_odd, rhs_a_odd, "t"));

    // sum_m t^m/(alpha+1)_m * L_m^alpha(x^2) = e^t 0F1(; alpha+1; -x^2 t).
    if (!pochhammer(alpha + 1, order).is_zero()) {
      std::vector<RatPoly> f01;
      std::vector<RatPoly> c_even;
      std::vector<RatPoly> c_odd;
      for (int m = 0; m <= order; ++m) {
        const Rational poch = pochhammer(alpha + 1, m);
        f01.push_back(RatPoly::monomial(signed_unit(m) / (poch * factorial(m)), static_cast<std::size_t>(2 * m)));
        c_even.push_back(gen_hermite_poly(2 * m, alpha + kHalf) *
                         (signed_unit(m) / (poch * pow(Rational(4), m) * factorial(m))));
        c_odd.push_back(gen_hermite_poly(2 * m + 1, alpha - kHalf) *
                        (signed_unit(m) / (poch * pow(Rational(2), 2 * m + 1) * factorial(m))));
      }
      const TruncatedSeries rhs_c = exp_t * TruncatedSeries(order, f01);
      const TruncatedSeries lhs_c(order, c_even);
      const TruncatedSeries lhs_c_odd(order, c_odd);
      report.check("bessel_series.even", p, lhs_c == rhs_c, first_mismatch(lhs_c, rhs_c, "t"));
      const TruncatedSeries rhs_c_odd = rhs_c * x;
      report.check("bessel_series.odd", p, lhs_c_odd == rhs_c_odd, first_mismatch(lhs_c_odd, rhs_c_odd, "t"));
    } else {
      report.skip("bessel_series", p, "(alpha+1)_m vanishes");
    }

    // Expansion in Y = y^2, truncated at Y^order (y^(2*order)):
    // H_{2n}^alpha(sqrt(x^2+Y)) = e^Y sum_k (-Y)^k/k! H_{2n}^{alpha+k}(x), and
    // x/sqrt(x^2+Y) H_{2n+1}^alpha(sqrt(x^2+Y)) = e^Y sum_k (-Y)^k/k! H_{2n+1}^{alpha+k}(x).
    const TruncatedSeries x2_plus_y(order, {x2, RatPoly(Rational(1))});
    for (int n = 0; 2 * n <= n_max; ++n) {
      const std::string pn = Params()("n", n)("alpha", alpha)("order", order).str();
      auto horner = [&](const RatPoly& poly, const RatPoly& scale) {
        TruncatedSeries acc(order);
        const auto c = poly.coefficients();
        for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x2_plus_y + TruncatedSeries::constant(order, RatPoly(*it));
        return acc * scale;
      };
      std::vector<RatPoly> sum_even;
      std::vector<RatPoly> sum_odd;
      for (int k = 0; k <= order; ++k) {
        const Rational w = signed_unit(k) / factorial(k);
        sum_even.push_back(gen_hermite_poly(2 * n, alpha + Rational(k)) * w);
        sum_odd.push_back(gen_hermite_poly(2 * n + 1, alpha + Rational(k)) * w);
      }
      const TruncatedSeries lhs_even = horner(even_part(n, alpha), RatPoly(Rational(1)));
      const TruncatedSeries rhs_even = exp_t * TruncatedSeries(order, sum_even);
      report.check("radial_shift.even", pn, lhs_even == rhs_even, first_mismatch(lhs_even, rhs_even, "Y"));
      if (2 * n + 1 > n_max) continue;
      const TruncatedSeries lhs_odd = horner(odd_part(n, alpha), x);
      const TruncatedSeries rhs_odd = exp_t * TruncatedSeries(order, sum_odd);
      report.check("radial_shift.odd", pn, lhs_odd == rhs_odd, first_mismatch(lhs_odd, rhs_odd, "Y"));
    }
  }

  // Multiplication formula: L_m^beta(tau^2 X) in terms of L_n^beta(X), with
  // the coefficient binom(beta+m, m-n) = (beta+n+1)_{m-n}/(m-n)!.
  const Rational taus[] = {Rational(0), Rational(1, 3), kHalf, Rational(1), Rational(3, 2), Rational(-2)};
  for (const auto& beta : grid) {
    for (const auto& tau : taus) {
      const Rational tau2 = tau * tau;
      for (int m = 0; 2 * m <= n_max; ++m) {
        const std::string p = Params()("m", m)("beta", beta)("tau", tau).str();
        auto coefficient = [&](int n) {
          return pochhammer(beta + Rational(n + 1), m - n) / factorial(m - n) * pow(tau2, n) *
                 pow(Rational(1) - tau2, m - n);
        };
        const Rational w_even = signed_unit(m) / (pow(Rational(4), m) * factorial(m));
        const RatPoly lhs_even = compose_affine<Rational>(gen_hermite_poly(2 * m, beta + kHalf), tau, Rational(0)) * w_even;
        RatPoly rhs_even;
        const int n_top = tau.is_zero() ? 0 : m;  // only n = 0 survives at tau = 0
        for (int n = 0; n <= n_top; ++n) {
          rhs_even += gen_hermite_poly(2 * n, beta + kHalf) *
                      (signed_unit(n) / (pow(Rational(4), n) * factorial(n)) * coefficient(n));
        }
        report.check("multiplication.even", p, lhs_even == rhs_even, to_string(lhs_even - rhs_even));

        if (2 * m + 1 > n_max) continue;
        // (1/tau) H_{2m+1}(tau x): scale x^j by tau^(j-1); defined at tau = 0.
        const RatPoly h_odd = gen_hermite_poly(2 * m + 1, beta - kHalf);
        std::vector<Rational> scaled;
        for (int j = 0; j <= h_odd.degree(); ++j) {
          const Rational c = h_odd.coeff(static_cast<std::size_t>(j));
          scaled.push_back(c.is_zero() ? Rational(0) : c * pow(tau, j - 1));
        }
        const Rational w_odd = signed_unit(m) / (pow(Rational(2), 2 * m + 1) * factorial(m));
        const RatPoly lhs_odd = RatPoly(std::move(scaled)) * w_odd;
        RatPoly rhs_odd;
        for (int n = 0; n <= n_top; ++n) {
          rhs_odd += gen_hermite_poly(2 * n + 1, beta - kHalf) *
                     (signed_unit(n) / (pow(Rational(2), 2 * n + 1) * factorial(n)) * coefficient(n));
        }
        report.check("multiplication.odd", p, lhs_odd == rhs_odd, to_string(lhs_odd - rhs_odd));
      }
    }
  }
}

}  // namespace

Report identity_suite(std::span<const Rational> mu_grid, int n_max, int order) {
  Report report("orthopoly.identities");
  check_beta_raise(report, mu_grid, n_max);
  check_index_sums(report, mu_grid, n_max);
  check_classical_conversion(report, mu_grid, n_max);
  check_convolutions(report, mu_grid, n_max);
  check_parameter_series(report, mu_grid, n_max, order);
  return report;
}

}  // namespace genherm
