#include <gmpxx.h>

#include <algorithm>
#include <stdexcept>

#include "genherm/oracle.hpp"

namespace genherm {

std::vector<BigFloat> log_series_partials(const Rational& x, int N, mpfr_prec_t bits, bool odd) {
  if (x.sign() <= 0) throw std::domain_error("the series needs x > 0");
  const mpfr_prec_t wp = bits + 32;
  // X = x^2 = p/q; A_n = n! q^n L_n(X) is an integer and
  // A_{n+1} = ((2n+1)q - p) A_n - n^2 q^2 A_{n-1}.
  const Rational X = x * x;
  const mpz_class p = X.num();
  const mpz_class q = X.den();
  mpz_class a_prev = 1;
  mpz_class a_cur = q - p;
  mpz_class denom = q;  // n! q^n
  const BigFloat xf(x, wp);
  std::vector<BigFloat> out;
  out.reserve(static_cast<std::size_t>(std::max(N, 0)));
  BigFloat sum(wp);
  BigFloat num_f(wp);
  BigFloat den_f(wp);
  for (int n = 1; n <= N; ++n) {
    mpfr_set_z(num_f.get(), a_cur.get_mpz_t(), MPFR_RNDN);
    mpfr_set_z(den_f.get(), denom.get_mpz_t(), MPFR_RNDN);
    BigFloat term = num_f / den_f;
    mpfr_div_si(term.get(), term.get(), n, MPFR_RNDN);
    sum += term;
    out.push_back(odd ? sum * xf : sum);
    const mpz_class next = (mpz_class(2 * n + 1) * q - p) * a_cur - mpz_class(n) * n * q * q * a_prev;
    a_prev = std::move(a_cur);
    a_cur = next;
    denom *= q * (n + 1);
  }
  return out;
}

BigFloat log_series_partial(const Rational& x, int N, mpfr_prec_t bits, bool odd) {
  if (N < 1) return BigFloat(bits + 32);
  return log_series_partials(x, N, bits, odd).back();
}

BigFloat log_series_target(const Rational& x, mpfr_prec_t bits, bool odd) {
  const mpfr_prec_t wp = bits + 32;
  const BigFloat xf(x, wp);
  const BigFloat base = -(BigFloat(2L, wp) * log(xf) + BigFloat::euler_gamma(wp));
  return odd ? xf * base : base;
}

}  // namespace genherm
