#include "genherm/app.hpp"
#include "genherm/critline.hpp"
#include "genherm/oracle.hpp"
#include "render.hpp"

namespace genherm::app {

namespace {

bool symmetric(const RatPoly& g) {
  const RatPoly mirrored = compose_affine<Rational>(g, Rational(-1), Rational(0));
  return mirrored == g || mirrored == -g;
}

std::string on_line(const std::string& t) {
  if (t.front() == '-') return "1/2 - " + t.substr(1) + "i";
  return "1/2 + " + t + "i";
}

}  // namespace

int cmd_zeros(int n, const Rational& mu, const RunConfig& config, std::ostream& out) {
  if (n < 0) throw UsageError("--n must be >= 0");
  if (mu <= Rational(-1, 2)) throw UsageError("--mu: " + mu.str() + " is not above -1/2");
  const CriticalLineCertificate cert = certify(n, mu);
  const std::vector<std::string> all_t =
      cert.squarefree ? decimal_roots(cert, config.root_digits) : std::vector<std::string>{};
  std::vector<std::string> zeros_t;
  for (const auto& t : all_t) {
    if (t.front() != '-') zeros_t.push_back(t);
  }

  switch (config.output_format) {
    case Format::json: {
      Json j;
      j["n"] = n;
      j["mu"] = mu.str();
      j["degree"] = poly_factor(n, mu).degree();
      j["certified"] = cert.all_on_line;
      j["kind"] = to_string(cert.kind);
      j["symmetric"] = symmetric(cert.g);
      j["digits"] = config.root_digits;
      j["line_polynomial"] = coefficient_array(cert.g);
      j["sturm_count"] = cert.real_root_count;
      j["squarefree"] = cert.squarefree;
      Json intervals = Json::array();
      for (const auto& iv : cert.roots) intervals.push_back({iv.lo.str(), iv.hi.str()});
      j["intervals"] = intervals;
      j["zeros_t"] = zeros_t;
      j["all_t"] = all_t;
      Json zs = Json::array();
      for (const auto& t : all_t) zs.push_back(on_line(t));
      j["zeros_s"] = zs;
      out << j.dump(2) << "\n";
      break;
    }
    case Format::csv:
      out << "n,mu,t,digits\n";
      for (const auto& t : all_t) out << n << "," << csv_field(mu.str()) << "," << t << "," << config.root_digits << "\n";
      break;
    case Format::human:
      out << "p_" << n << "^{" << mu.str() << "}: degree " << cert.degree << ", " << cert.real_root_count
          << " real roots of g(t) (" << to_string(cert.kind) << " on the line), "
          << (cert.all_on_line ? "certified" : "NOT certified") << "\n";
      out << "g(t) = " << to_string(cert.g, "t") << "\n";
      for (const auto& t : all_t) out << "  s = " << on_line(t) << "\n";
      break;
  }
  if (!cert.all_on_line) return exit_verification;
  return exit_ok;
}

}  // namespace genherm::app
