#include "genherm/app.hpp"
#include "genherm/mellin.hpp"
#include "render.hpp"

namespace genherm::app {

int cmd_transform(int n, const Rational& mu, const RunConfig& config, std::ostream& out) {
  if (n < 0) throw UsageError("--n must be >= 0");
  if (mu <= Rational(-1, 2)) throw UsageError("--mu: " + mu.str() + " is not above -1/2");
  const GammaExpr m = mellin_transform(n, mu);
  const PolyFactor f = poly_factor(n, mu);
  const GammaExpr canon = m.canonical();
  const Rational two_offset = (mu + Rational(m.k())) / 2;
  const Rational gamma_offset = (mu + Rational(m.delta())) / 2;

  switch (config.output_format) {
    case Format::json: {
      Json j;
      j["n"] = n;
      j["mu"] = mu.str();
      j["parity"] = f.parity();
      j["degree"] = f.degree();
      j["constant"] = m.c().str();
      j["two_power_offset"] = m.k();
      j["two_power_exponent"] = {{"s", "1/2"}, {"constant", two_offset.str()}};
      j["gamma_offset"] = m.delta();
      j["gamma_argument"] = {{"s", "1/2"}, {"constant", gamma_offset.str()}};
      j["phat"] = {{"coefficients", coefficient_array(f.phat)}, {"rendered", to_string(f.phat, "s")}};
      j["pscaled"] = {{"coefficients", coefficient_array(f.pscaled)}, {"rendered", to_string(f.pscaled, "s")}};
      j["canonical"] = {{"k", canon.k()}, {"delta", canon.delta()}, {"coefficients", coefficient_array(canon.poly())}};
      out << j.dump(2) << "\n";
      break;
    }
    case Format::csv:
      out << "n,mu,constant,two_power_offset,gamma_offset,phat,pscaled\n";
      out << n << "," << csv_field(mu.str()) << "," << csv_field(m.c().str()) << "," << m.k() << "," << m.delta() << ","
          << csv_field(to_string(f.phat, "s")) << "," << csv_field(to_string(f.pscaled, "s")) << "\n";
      break;
    case Format::human: {
      std::string head;
      if (m.c() != Rational(1)) head = m.c().str() + "·";
      out << "M_" << n << "^{" << mu.str() << "}(s) = " << head << "2^{" << half_s_plus(two_offset) << "}·Γ("
          << half_s_plus(gamma_offset) << ")·[" << to_string(f.phat, "s") << "]\n";
      out << "constant:  " << m.c().str() << "\n";
      out << "2-power:   2^{(s+mu" << (m.k() < 0 ? "" : "+") << m.k() << ")/2}\n";
      out << "gamma:     Γ((s+mu" << (m.delta() == 0 ? "" : "+" + std::to_string(m.delta())) << ")/2)\n";
      out << "phat:      " << to_string(f.phat, "s") << " = " << factored(f.phat, "s") << "\n";
      out << "pscaled:   " << to_string(f.pscaled, "s") << " = " << factored(f.pscaled, "s") << "\n";
      break;
    }
  }
  return exit_ok;
}

}  // namespace genherm::app
