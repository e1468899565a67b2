#include "render.hpp"

#include <gmpxx.h>

namespace genherm::app {

Json coefficient_array(const RatPoly& p) {
  Json a = Json::array();
  for (const auto& c : p.coefficients()) a.push_back(c.str());
  return a;
}

std::string csv_field(std::string_view s) {
  if (s.find_first_of(",\"\n") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

std::string half_s_plus(const Rational& offset) {
  if (offset.is_zero()) return "s/2";
  return offset.sign() > 0 ? "s/2+" + offset.str() : "s/2" + offset.str();
}

std::string factored(const RatPoly& p, std::string_view var) {
  if (p.is_zero()) return "0";
  mpz_class num_gcd = 0;
  mpz_class den_lcm = 1;
  int sign = 0;
  for (const auto& c : p.coefficients()) {
    if (c.is_zero()) continue;
    if (sign == 0) sign = c.sign();
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.num().get_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.den().get_mpz_t());
  }
  const Rational content = Rational(num_gcd, den_lcm) * Rational(sign);
  if (p.degree() == 0) return content.str();
  std::string body;
  for (int k = 0; k <= p.degree(); ++k) {
    const Rational c = p.coeff(k) / content;
    if (c.is_zero()) continue;
    const mpz_class mag = abs(c.num());
    std::string term;
    if (k == 0 || mag != 1) term = mag.get_str();
    if (k > 0) term += var;
    if (k > 1) term += "^" + std::to_string(k);
    if (body.empty()) {
      body = (c.sign() < 0 ? "-" : "") + term;
    } else {
      body += (c.sign() < 0 ? " - " : " + ") + term;
    }
  }
  return "(" + content.str() + ")(" + body + ")";
}

}  // namespace genherm::app
