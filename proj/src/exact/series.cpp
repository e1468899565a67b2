#include "genherm/series.hpp"

#include <algorithm>
#include <stdexcept>

namespace genherm {

TruncatedSeries::TruncatedSeries(int order) : order_(order), c_(static_cast<std::size_t>(order + 1)) {
  if (order < 0) throw std::invalid_argument("negative series order");
}

TruncatedSeries::TruncatedSeries(int order, std::vector<Coeff> coeffs) : TruncatedSeries(order) {
  const std::size_t n = std::min(coeffs.size(), c_.size());
  for (std::size_t k = 0; k < n; ++k) c_[k] = std::move(coeffs[k]);
}

TruncatedSeries TruncatedSeries::constant(int order, Coeff c) { return monomial(order, std::move(c), 0); }

TruncatedSeries TruncatedSeries::monomial(int order, Coeff c, int k) {
  TruncatedSeries s(order);
  if (k >= 0 && k <= order) s.c_[static_cast<std::size_t>(k)] = std::move(c);
  return s;
}

TruncatedSeries TruncatedSeries::truncated(int order) const {
  return TruncatedSeries(order, std::vector<Coeff>(c_.begin(), c_.begin() + std::min<std::ptrdiff_t>(order + 1, order_ + 1)));
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& rhs) {
  if (rhs.order_ < order_) *this = truncated(rhs.order_);
  for (int k = 0; k <= order_; ++k) c_[static_cast<std::size_t>(k)] += rhs[k];
  return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& rhs) {
  if (rhs.order_ < order_) *this = truncated(rhs.order_);
  for (int k = 0; k <= order_; ++k) c_[static_cast<std::size_t>(k)] -= rhs[k];
  return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(const Coeff& s) {
  for (auto& c : c_) c = c * s;
  return *this;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  const int order = std::min(a.order_, b.order_);
  TruncatedSeries out(order);
  for (int i = 0; i <= order; ++i) {
    if (a[i].is_zero()) continue;
    for (int j = 0; i + j <= order; ++j) {
      if (b[j].is_zero()) continue;
      out.c_[static_cast<std::size_t>(i + j)] += a[i] * b[j];
    }
  }
  return out;
}

TruncatedSeries series_binomial_pow(const TruncatedSeries& u, const RatPoly& r, int order) {
  if (!u[0].is_zero()) throw std::invalid_argument("binomial series needs a zero constant term");
  const TruncatedSeries base = u.truncated(order);
  TruncatedSeries result = TruncatedSeries::constant(order, RatPoly(Rational(1)));
  TruncatedSeries power = result;
  RatPoly binom(Rational(1));
  // u^j starts at t^j, so j <= order suffices.
  for (int j = 1; j <= order; ++j) {
    binom = binom * (r - RatPoly(Rational(j - 1))) / Rational(j);
    power = power * base;
    result += power * binom;
  }
  return result;
}

TruncatedSeries series_binomial_pow(const TruncatedSeries& u, const Rational& r, int order) {
  return series_binomial_pow(u, RatPoly(r), order);
}

TruncatedSeries series_exp(const TruncatedSeries& f) {
  if (!f[0].is_zero()) throw std::invalid_argument("series_exp needs a zero constant term");
  const int order = f.order();
  std::vector<RatPoly> e(static_cast<std::size_t>(order + 1));
  e[0] = RatPoly(Rational(1));
  for (int n = 1; n <= order; ++n) {
    RatPoly acc;
    for (int k = 1; k <= n; ++k) {
      if (f[k].is_zero()) continue;
      acc += f[k] * e[static_cast<std::size_t>(n - k)] * Rational(k);
    }
    e[static_cast<std::size_t>(n)] = acc / Rational(n);
  }
  return TruncatedSeries(order, std::move(e));
}

TruncatedSeries series_inverse(const TruncatedSeries& f) {
  if (f[0].degree() != 0) throw std::invalid_argument("series_inverse needs a nonzero constant leading term");
  const Rational inv0 = f[0].leading().inverse();
  const int order = f.order();
  std::vector<RatPoly> g(static_cast<std::size_t>(order + 1));
  g[0] = RatPoly(inv0);
  for (int n = 1; n <= order; ++n) {
    RatPoly acc;
    for (int k = 1; k <= n; ++k) acc += f[k] * g[static_cast<std::size_t>(n - k)];
    g[static_cast<std::size_t>(n)] = -(acc * inv0);
  }
  return TruncatedSeries(order, std::move(g));
}

}  // namespace genherm
