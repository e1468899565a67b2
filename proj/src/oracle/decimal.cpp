#include <gmpxx.h>

#include "genherm/oracle.hpp"

namespace genherm {

std::string round_decimal(const Rational& q, int digits) {
  const mpz_class scale = [&] {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), 10, static_cast<unsigned long>(digits));
    return r;
  }();
  const Rational scaled = q.abs() * Rational(scale);
  const mpz_class n = (scaled + Rational(1, 2)).floor();
  std::string body = n.get_str();
  if (static_cast<int>(body.size()) <= digits) body.insert(0, static_cast<std::size_t>(digits + 1) - body.size(), '0');
  std::string out = body.substr(0, body.size() - static_cast<std::size_t>(digits));
  if (digits > 0) out += "." + body.substr(body.size() - static_cast<std::size_t>(digits));
  if (q.sign() < 0 && n != 0) out.insert(0, "-");
  return out;
}

std::vector<std::string> decimal_roots(const CriticalLineCertificate& cert, int digits) {
  if (digits < 1) throw std::invalid_argument("digits must be at least 1");
  mpz_class ten_pow;
  mpz_ui_pow_ui(ten_pow.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  const Rational unit = Rational(1) / Rational(ten_pow);
  std::vector<std::string> out;
  for (const auto& start : cert.roots) {
    const RootInterval iv = refine_root(cert.g, start, unit / 4);
    // rounding cells are separated by (k + 1/2) unit; at most one lies in [lo, hi]
    const mpz_class k = (iv.lo / unit - Rational(1, 2)).floor();
    std::optional<Rational> boundary;
    for (int d = 0; d <= 1; ++d) {
      const Rational b = (Rational(k + d) + Rational(1, 2)) * unit;
      if (iv.lo <= b && b <= iv.hi) boundary = b;
    }
    if (!boundary) {
      out.push_back(round_decimal(iv.hi, digits));
      continue;
    }
    const Rational gb = cert.g(*boundary);
    if (gb.is_zero()) {
      out.push_back(round_decimal(*boundary, digits));
    } else if (cert.g(iv.lo).sign() * gb.sign() < 0) {
      out.push_back(round_decimal(iv.lo, digits));
    } else {
      out.push_back(round_decimal(iv.hi, digits));
    }
  }
  return out;
}

}  // namespace genherm
