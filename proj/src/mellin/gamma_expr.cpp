#include <sstream>
#include <stdexcept>

#include "genherm/mellin.hpp"

namespace genherm {

namespace {

int floor_div2(int k) { return k >= 0 ? k / 2 : -((1 - k) / 2); }

}  // namespace

GammaExpr::GammaExpr(Rational mu, Rational c, int k, int delta, RatPoly p)
    : mu_(std::move(mu)), c_(std::move(c)), k_(k), delta_(delta), p_(std::move(p)) {
  if (delta_ < 0) throw std::invalid_argument("Gamma offset must be nonnegative");
}

GammaExpr GammaExpr::zero(Rational mu) { return GammaExpr(std::move(mu), Rational(0), 0, 0, RatPoly()); }

GammaExpr GammaExpr::canonical() const {
  if (is_zero()) return zero(mu_);
  // 2^((mu+s+k)/2) = 2^(floor(k/2)) 2^((mu+s+k mod 2)/2)
  const int half = floor_div2(k_);
  RatPoly p = p_ * (c_ * pow(Rational(2), half));
  // Gamma(z+1) = z Gamma(z) with z = (mu+s+d-2)/2
  int d = delta_;
  while (d >= 2) {
    d -= 2;
    p *= RatPoly{(mu_ + Rational(d)) / 2, Rational(1, 2)};
  }
  return GammaExpr(mu_, Rational(1), k_ - 2 * half, d, std::move(p));
}

GammaExpr GammaExpr::shifted(int j) const {
  if (delta_ + j < 0) throw std::invalid_argument("shift would need Gamma at a negative offset");
  return GammaExpr(mu_, c_, k_ + j, delta_ + j, shift(p_, Rational(j)));
}

GammaExpr GammaExpr::reweighted(const Rational& extra) const {
  return GammaExpr(mu_ + extra, c_, k_, delta_, shift(p_, extra));
}

GammaExpr& GammaExpr::operator*=(const Rational& s) {
  c_ *= s;
  return *this;
}

GammaExpr& GammaExpr::operator*=(const RatPoly& f) {
  p_ *= f;
  return *this;
}

GammaExpr operator+(const GammaExpr& a, const GammaExpr& b) {
  const GammaExpr ca = a.canonical();
  const GammaExpr cb = b.canonical();
  if (ca.mu_ != cb.mu_) throw GammaParityMismatch("transforms with different mu: " + ca.mu_.str() + " vs " + cb.mu_.str());
  if (ca.is_zero()) return cb;
  if (cb.is_zero()) return ca;
  if (ca.k_ != cb.k_ || ca.delta_ != cb.delta_) {
    throw GammaParityMismatch("canonical classes differ: (k,delta)=(" + std::to_string(ca.k_) + "," +
                              std::to_string(ca.delta_) + ") vs (" + std::to_string(cb.k_) + "," +
                              std::to_string(cb.delta_) + ")");
  }
  return GammaExpr(ca.mu_, Rational(1), ca.k_, ca.delta_, ca.p_ + cb.p_).canonical();
}

GammaExpr operator-(const GammaExpr& a, const GammaExpr& b) { return a + b * Rational(-1); }

bool operator==(const GammaExpr& a, const GammaExpr& b) {
  const GammaExpr ca = a.canonical();
  const GammaExpr cb = b.canonical();
  return ca.mu_ == cb.mu_ && ca.k_ == cb.k_ && ca.delta_ == cb.delta_ && ca.p_ == cb.p_;
}

std::string GammaExpr::str() const {
  std::ostringstream os;
  os << c_ << " * 2^((" << mu_ << "+s" << (k_ >= 0 ? "+" : "") << k_ << ")/2) * Gamma((" << mu_ << "+s+" << delta_
     << ")/2) * [" << to_string(p_, "s") << "]";
  return os.str();
}

}  // namespace genherm
