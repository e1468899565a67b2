#include <doctest.h>

#include <vector>

#include "genherm/mellin.hpp"
#include "genherm/orthopoly.hpp"
#include "genherm/series.hpp"

using namespace genherm;

namespace {

Rational q(long p, long d = 1) { return Rational(p, d); }
RatPoly rp(std::initializer_list<Rational> c) { return RatPoly(std::vector<Rational>(c)); }

const std::vector<Rational> kGrid{q(-1, 4), q(0), q(1, 3), q(1, 2), q(1), q(7, 2)};

void require_clean(const Report& r) {
  for (const auto& rec : r.records()) {
    INFO(rec.id << " " << rec.params << " " << rec.witness);
    CHECK(rec.outcome == Outcome::pass);
  }
  CHECK(!r.records().empty());
}

}  // namespace

TEST_CASE("terminating 2F1 examples") {
  const Rational mu = q(2, 7);
  CHECK(hyp2f1_terminating(0, rp({q(3), q(5)}), q(1, 2), q(2)) == rp({1}));
  CHECK(hyp2f1_terminating(1, rp({mu / 2, q(1, 2)}), mu + q(1, 2), q(2)) == rp({q(1, 2), -1}) / (mu + q(1, 2)));
  CHECK(hyp2f1_terminating(2, rp({0, q(1, 2)}), q(1, 2), q(2)) == rp({1, q(-4, 3), q(4, 3)}));
  CHECK(hyp2f1_terminating(3, q(-1), q(1), q(1, 2)) == q(5, 2));
  CHECK_THROWS_AS(hyp2f1_terminating(2, rp({1}), q(-1), q(2)), std::domain_error);
}

TEST_CASE("gamma expression canonical form") {
  const GammaExpr e(q(1, 3), q(3), 5, 4, rp({1, 1}));
  const GammaExpr c = e.canonical();
  CHECK(c.k() == 1);
  CHECK(c.delta() == 0);
  CHECK(c.c() == 1);
  CHECK(c.canonical().str() == c.str());
  CHECK(e == c);
  // Gamma(z+1) = z Gamma(z): delta = 2 against delta = 0 with the factor (mu+s)/2
  const GammaExpr two(q(0), q(1), 0, 2, rp({1}));
  const GammaExpr zero_with_factor(q(0), q(1), 0, 0, rp({0, q(1, 2)}));
  CHECK(two == zero_with_factor);
  CHECK(GammaExpr::zero(q(1)).canonical().k() == 0);
  CHECK(GammaExpr(q(1), q(0), 3, 3, rp({1})) == GammaExpr::zero(q(1)));
  CHECK_THROWS_AS(GammaExpr(q(0), q(1), 0, -1, rp({1})), std::invalid_argument);
  CHECK_THROWS_AS(GammaExpr(q(0), q(1), 0, 0, rp({1})).shifted(-1), std::invalid_argument);
  CHECK_THROWS_AS(GammaExpr(q(0), q(1), 0, 0, rp({1})) + GammaExpr(q(0), q(1), 1, 1, rp({1})), GammaParityMismatch);
  CHECK_THROWS_AS(GammaExpr(q(0), q(1), 0, 0, rp({1})) + GammaExpr(q(1), q(1), 0, 0, rp({1})), GammaParityMismatch);

  const GammaExpr a = mellin_transform(4, q(1, 3));
  const GammaExpr b = mellin_transform(2, q(1, 3));
  const GammaExpr d = mellin_transform(0, q(1, 3)) * rp({q(1), q(-3)});
  CHECK((a + b) + d == a + (b + d));
  CHECK(a - a == GammaExpr::zero(q(1, 3)));
}

TEST_CASE("closed-form transforms") {
  const Rational mu = q(1, 3);
  const GammaExpr m0 = mellin_transform(0, mu);
  CHECK(m0 == GammaExpr(mu, q(1), -2, 0, rp({1})));
  const GammaExpr m1 = mellin_transform(1, mu);
  CHECK(m1 == GammaExpr(mu, q(1), 1, 1, rp({1})));
  // direct moment assembly of 2x
  CHECK(m1 == mellin_of_polynomial(rp({0, 2}), mu));
  for (const auto& g : kGrid) {
    for (int m = 0; m <= 24; ++m) CHECK(mellin_transform(m, g) == mellin_of_polynomial(gen_hermite_poly(m, g), g));
  }
  CHECK_THROWS(mellin_transform(2, q(-1, 2)));
}

TEST_CASE("polynomial factors") {
  const Rational mu = q(1, 3);
  CHECK(poly_factor(0, mu).phat == rp({1}));
  CHECK(poly_factor(1, mu).phat == rp({1}));
  const auto f2 = poly_factor(2, mu);
  CHECK(f2.phat == rp({q(1, 2), -1}) / (mu + q(1, 2)));
  CHECK(f2.phat(q(1, 2)) == 0);
  CHECK(poly_factor(4, q(0)).phat == rp({1, q(-4, 3), q(4, 3)}));
  CHECK(poly_factor(4, q(0)).pscaled == rp({1, q(-4, 3), q(4, 3)}) * q(3, 4));
  CHECK(functional_equation_check(2, mu));
  CHECK(functional_equation_check(4, q(0)));
  CHECK(functional_equation_check(9, q(7, 2)));
  require_clean(functional_equation_suite(24, kGrid));
}

TEST_CASE("index recursions") {
  for (const auto& mu : kGrid) require_clean(recursion_check(24, mu));
}

TEST_CASE("the recursion coefficient with an extra factor m fails away from m = 1") {
  const Rational mu = q(1, 3);
  for (int m : {0, 2, 3}) {
    const GammaExpr printed = mellin_transform(2 * m + 1, mu).shifted(1) * q(2) -
                              mellin_transform(2 * m, mu) * (q(2) * (q(2 * m + 1) + mu * 2) * m);
    CHECK_FALSE(printed == mellin_transform(2 * m + 2, mu));
  }
}

TEST_CASE("transform generating function") {
  require_clean(genfn_transform_check(q(1, 2), 10));
  for (const auto& mu : kGrid) require_clean(genfn_transform_check(mu, 12));
}

TEST_CASE("transform generating function with exponent s/2-1 fails") {
  // (1+4t^2)^(s/2-1) in place of (1+4t^2)^((s-mu-1)/2) for the even part
  const Rational mu = q(1, 2);
  const int order = 4;
  const auto four_t2 = TruncatedSeries::monomial(order, RatPoly(q(4)), 2);
  const auto minus_four_t2 = TruncatedSeries::monomial(order, RatPoly(q(-4)), 2);
  const auto even = series_binomial_pow(four_t2, rp({-1, q(1, 2)}), order) *
                    series_binomial_pow(minus_four_t2, rp({-mu / 2, q(-1, 2)}), order);
  CHECK_FALSE(GammaExpr(mu, q(1), -2, 0, even[2]) == mellin_transform(2, mu));
}

TEST_CASE("reciprocity") {
  const Rational mu = q(1, 3);
  CHECK(poly_factor(2, mu).pscaled(-mu) == mu + q(1, 2));
  for (const auto& g : kGrid) require_clean(reciprocity_check(12, 12, g));
}

TEST_CASE("difference equations") {
  // the worked example at m = 2, mu = 0
  const RatPoly s = RatPoly::variable();
  const RatPoly p = rp({1, -2});
  const RatPoly lhs = q(5) * (s - 2) * p - s * (s - 2) * shift(p, q(2)) + (s - 2) * (s - 1) * shift(p, q(-2));
  CHECK(lhs.is_zero());
  for (const auto& mu : kGrid) {
    for (int m = 0; m <= 24; ++m) require_clean(difference_equation_check(m, mu));
  }
}

TEST_CASE("odd difference equation with constant 2(m+mu)-1 fails") {
  const Rational mu = q(7, 2);
  const int m = 5;
  const RatPoly s = RatPoly::variable();
  const RatPoly p = poly_factor(m, mu).phat;
  const RatPoly printed = (s + (mu - 1)) * p * ((q(m) + mu) * 2 - 1) -
                          (s + (mu + 1)) * (s + (mu - 1)) * shift(p, q(2)) +
                          ((s - 2) * (s - 1) - RatPoly((1 + mu) * mu)) * shift(p, q(-2));
  CHECK_FALSE(printed.is_zero());
}

TEST_CASE("pfaff and half-argument forms") {
  for (const auto& mu : kGrid) require_clean(pfaff_half_check(12, mu));
}

TEST_CASE("reduction to classical transforms") {
  require_clean(hermite_reduction_check(24, kGrid));
  // without the s -> s+mu reweighting the n = 2 reduction is not even expressible
  const Rational mu = q(1, 2);
  CHECK_THROWS_AS(mellin_transform(2, mu) - mellin_transform(2, q(0)), GammaParityMismatch);
}
