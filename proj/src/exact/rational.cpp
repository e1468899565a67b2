#include "genherm/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace genherm {

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

mpz_class parse_integer(std::string_view s) {
  if (!s.empty() && s[0] == '+') s.remove_prefix(1);
  return mpz_class(std::string(s), 10);
}

}  // namespace

Rational::Rational(const mpz_class& num, const mpz_class& den) : v_(num, den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den[0] == '-' || den[0] == '+') {
    throw std::invalid_argument("not an exact rational literal: '" + std::string(text) + "'");
  }
  const mpz_class d = parse_integer(den);
  if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  return Rational(parse_integer(num), d);
}

Rational Rational::abs() const {
  Rational r;
  r.v_ = ::abs(v_);
  return r;
}

Rational Rational::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  Rational r;
  mpq_inv(r.v_.get_mpq_t(), v_.get_mpq_t());
  return r;
}

mpz_class Rational::floor() const {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
  return q;
}

std::string Rational::str() const {
  if (is_integer()) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rational& Rational::operator+=(const Rational& rhs) {
  v_ += rhs.v_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  v_ -= rhs.v_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  v_ *= rhs.v_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw std::domain_error("rational division by zero");
  v_ /= rhs.v_;
  return *this;
}

Rational Rational::operator-() const {
  Rational r;
  r.v_ = -v_;
  return r;
}

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.str(); }

Rational pow(const Rational& q, int e) {
  if (e < 0) return pow(q.inverse(), -e);
  Rational result(1);
  Rational base = q;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

Rational pochhammer(const Rational& a, int n) {
  if (n < 0) throw std::invalid_argument("pochhammer with negative length");
  Rational result(1);
  Rational term = a;
  for (int i = 0; i < n; ++i) {
    result *= term;
    if (result.is_zero()) break;
    term += 1;
  }
  return result;
}

Rational factorial(int n) {
  if (n < 0) throw std::invalid_argument("factorial of a negative integer");
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return Rational(f);
}

Rational binomial(const Rational& top, int k) {
  if (k < 0) return Rational(0);
  Rational result(1);
  for (int i = 0; i < k; ++i) result *= (top - i);
  return result / factorial(k);
}

Rational gamma_ratio(const Rational& a, const Rational& b) {
  const Rational diff = a - b;
  if (!diff.is_integer()) throw std::invalid_argument("gamma_ratio needs an integer argument difference");
  const long shift = diff.num().get_si();
  // Gamma(b + n) / Gamma(b) = (b)_n
  if (shift >= 0) return pochhammer(b, static_cast<int>(shift));
  return pochhammer(a, static_cast<int>(-shift)).inverse();
}

GaussianRational GaussianRational::inverse() const {
  const Rational n = norm();
  if (n.is_zero()) throw std::domain_error("Gaussian rational division by zero");
  return {re_ / n, -im_ / n};
}

std::string GaussianRational::str() const {
  if (im_.is_zero()) return re_.str();
  const std::string imag = im_ == Rational(1) ? "i" : (im_ == Rational(-1) ? "-i" : im_.str() + "i");
  if (re_.is_zero()) return imag;
  return re_.str() + (im_.sign() > 0 ? "+" : "") + imag;
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& rhs) {
  re_ += rhs.re_;
  im_ += rhs.im_;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& rhs) {
  re_ -= rhs.re_;
  im_ -= rhs.im_;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& rhs) {
  Rational re = re_ * rhs.re_ - im_ * rhs.im_;
  Rational im = re_ * rhs.im_ + im_ * rhs.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& rhs) { return *this *= rhs.inverse(); }

std::ostream& operator<<(std::ostream& os, const GaussianRational& z) { return os << z.str(); }

GaussianRational pow(const GaussianRational& z, int e) {
  if (e < 0) return pow(z.inverse(), -e);
  GaussianRational result(1);
  for (int i = 0; i < e; ++i) result *= z;
  return result;
}

}  // namespace genherm
