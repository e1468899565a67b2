#include <stdexcept>

#include "genherm/oracle.hpp"

namespace genherm {

BigFloat::BigFloat(mpfr_prec_t bits) {
  mpfr_init2(v_, bits);
  mpfr_set_zero(v_, 1);
}

BigFloat::BigFloat(const Rational& q, mpfr_prec_t bits) {
  mpfr_init2(v_, bits);
  mpfr_set_q(v_, q.mpq().get_mpq_t(), MPFR_RNDN);
}

BigFloat::BigFloat(long v, mpfr_prec_t bits) {
  mpfr_init2(v_, bits);
  mpfr_set_si(v_, v, MPFR_RNDN);
}

BigFloat::BigFloat(const BigFloat& other) {
  mpfr_init2(v_, other.precision());
  mpfr_set(v_, other.v_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& other) noexcept {
  mpfr_init2(v_, other.precision());
  mpfr_swap(v_, other.v_);
}

BigFloat& BigFloat::operator=(const BigFloat& other) {
  if (this != &other) {
    mpfr_set_prec(v_, other.precision());
    mpfr_set(v_, other.v_, MPFR_RNDN);
  }
  return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& other) noexcept {
  mpfr_swap(v_, other.v_);
  return *this;
}

BigFloat::~BigFloat() { mpfr_clear(v_); }

BigFloat BigFloat::pi(mpfr_prec_t bits) {
  BigFloat r(bits);
  mpfr_const_pi(r.v_, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::euler_gamma(mpfr_prec_t bits) {
  BigFloat r(bits);
  mpfr_const_euler(r.v_, MPFR_RNDN);
  return r;
}

BigFloat& BigFloat::operator+=(const BigFloat& rhs) {
  mpfr_add(v_, v_, rhs.v_, MPFR_RNDN);
  return *this;
}
BigFloat& BigFloat::operator-=(const BigFloat& rhs) {
  mpfr_sub(v_, v_, rhs.v_, MPFR_RNDN);
  return *this;
}
BigFloat& BigFloat::operator*=(const BigFloat& rhs) {
  mpfr_mul(v_, v_, rhs.v_, MPFR_RNDN);
  return *this;
}
BigFloat& BigFloat::operator/=(const BigFloat& rhs) {
  mpfr_div(v_, v_, rhs.v_, MPFR_RNDN);
  return *this;
}

BigFloat BigFloat::operator-() const {
  BigFloat r(*this);
  mpfr_neg(r.v_, r.v_, MPFR_RNDN);
  return r;
}

std::string BigFloat::str(int digits) const {
  char* buf = nullptr;
  if (mpfr_asprintf(&buf, "%.*Re", digits - 1, v_) < 0) throw std::runtime_error("mpfr formatting failed");
  std::string out(buf);
  mpfr_free_str(buf);
  return out;
}

namespace {

template <class Op>
BigFloat unary(const BigFloat& x, Op op) {
  BigFloat r(x.precision());
  op(r.get(), x.get(), MPFR_RNDN);
  return r;
}

}  // namespace

BigFloat abs(const BigFloat& x) { return unary(x, mpfr_abs); }
BigFloat exp(const BigFloat& x) { return unary(x, mpfr_exp); }
BigFloat log(const BigFloat& x) { return unary(x, mpfr_log); }
BigFloat sqrt(const BigFloat& x) { return unary(x, mpfr_sqrt); }
BigFloat sinh(const BigFloat& x) { return unary(x, mpfr_sinh); }
BigFloat cosh(const BigFloat& x) { return unary(x, mpfr_cosh); }
BigFloat gamma(const BigFloat& x) { return unary(x, mpfr_gamma); }
BigFloat exp2(const BigFloat& x) { return unary(x, mpfr_exp2); }

BigFloat pow(const BigFloat& x, const BigFloat& y) {
  BigFloat r(x.precision());
  mpfr_pow(r.get(), x.get(), y.get(), MPFR_RNDN);
  return r;
}

BigFloat max(const BigFloat& a, const BigFloat& b) { return a < b ? b : a; }

BigFloat evaluate(const RatPoly& p, const BigFloat& x) {
  BigFloat acc(x.precision());
  const auto c = p.coefficients();
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    acc *= x;
    acc += BigFloat(*it, x.precision());
  }
  return acc;
}

BigFloat evaluate(const GammaExpr& e, const BigFloat& s) {
  const mpfr_prec_t bits = s.precision();
  const BigFloat two(2L, bits);
  const BigFloat mu(e.mu(), bits);
  const BigFloat power = exp2((mu + s + BigFloat(static_cast<long>(e.k()), bits)) / two);
  const BigFloat g = gamma((mu + s + BigFloat(static_cast<long>(e.delta()), bits)) / two);
  return BigFloat(e.c(), bits) * power * g * evaluate(e.poly(), s);
}

BigFloat evaluate(const GammaExpr& e, const Rational& s, mpfr_prec_t bits) {
  const Rational factor = e.c() * e.poly()(s);
  if (factor.is_zero()) return BigFloat(0L, bits);
  const BigFloat two(2L, bits);
  const BigFloat power = exp2(BigFloat(e.mu() + s + Rational(e.k()), bits) / two);
  const BigFloat g = gamma(BigFloat(e.mu() + s + Rational(e.delta()), bits) / two);
  return BigFloat(factor, bits) * power * g;
}

}  // namespace genherm
