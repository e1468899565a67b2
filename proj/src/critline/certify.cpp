#include <string>

#include "genherm/critline.hpp"
#include "genherm/mellin.hpp"

namespace genherm {

const char* to_string(LineKind k) { return k == LineKind::real ? "real" : "imaginary"; }

LinePoly line_polynomial(int m, const Rational& mu) {
  const RatPoly phat = poly_factor(m, mu).phat;
  const GaussPoly on_line =
      compose_affine<GaussianRational>(phat, GaussianRational::i(), GaussianRational(Rational(1, 2)));
  std::vector<Rational> re;
  std::vector<Rational> im;
  bool re_zero = true;
  bool im_zero = true;
  for (const auto& c : on_line.coefficients()) {
    re.push_back(c.re());
    im.push_back(c.im());
    re_zero = re_zero && c.re().is_zero();
    im_zero = im_zero && c.im().is_zero();
  }
  LinePoly out;
  out.m = m;
  out.mu = mu;
  if (im_zero) {
    out.kind = LineKind::real;
    out.g = RatPoly(std::move(re));
  } else if (re_zero) {
    out.kind = LineKind::imaginary;
    out.g = RatPoly(std::move(im));
  } else {
    throw FunctionalEquationViolation("phat(1/2+it) is neither real nor imaginary for m=" + std::to_string(m) +
                                      " mu=" + mu.str());
  }
  return out;
}

CriticalLineCertificate certify(int m, const Rational& mu) {
  const LinePoly line = line_polynomial(m, mu);
  CriticalLineCertificate cert;
  cert.m = m;
  cert.mu = mu;
  cert.g = line.g;
  cert.kind = line.kind;
  cert.degree = line.g.degree();
  cert.squarefree = is_squarefree(line.g);
  cert.real_root_count = sturm_count(line.g, std::nullopt, std::nullopt);
  if (cert.squarefree) cert.roots = isolate_real_roots(line.g);
  cert.all_on_line = cert.squarefree && cert.degree == m / 2 && cert.real_root_count == m / 2;
  return cert;
}

Report certify_suite(int m_max, std::span<const Rational> mu_grid) {
  Report report("critline.certify");
  for (const auto& mu : mu_grid) {
    for (int m = 0; m <= m_max; ++m) {
      const std::string p = "m=" + std::to_string(m) + " mu=" + mu.str();
      const CriticalLineCertificate cert = certify(m, mu);
      const int h = m / 2;
      report.check("critical_line.root_count", p, cert.real_root_count == h,
                   std::to_string(cert.real_root_count) + " real roots, expected " + std::to_string(h));
      report.check("critical_line.simple", p, cert.squarefree, "gcd(g, g') nonconstant for g = " + to_string(cert.g, "t"));
      report.check("critical_line.degree", p, cert.degree == h, "degree " + std::to_string(cert.degree));

      const RatPoly mirrored = compose_affine<Rational>(cert.g, Rational(-1), Rational(0));
      report.check("critical_line.symmetric", p, mirrored == cert.g || mirrored == -cert.g, to_string(cert.g, "t"));
      const bool zero_root = cert.g.coeff(0).is_zero();
      report.check("critical_line.zero_root", p, zero_root == (h % 2 == 1),
                   std::string("t=0 ") + (zero_root ? "is" : "is not") + " a root");
      const bool kind_ok = (cert.kind == LineKind::imaginary) == (h % 2 == 1);
      report.check("critical_line.kind", p, kind_ok, to_string(cert.kind));
    }
  }
  return report;
}

}  // namespace genherm
