#include <doctest.h>

#include <vector>

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
    CHECK(rec.outcome != Outcome::fail);
  }
  CHECK(r.count(Outcome::pass) > 0);
}

}  // namespace

TEST_CASE("laguerre examples") {
  CHECK(laguerre(0, q(5, 3)) == rp({1}));
  const Rational a = q(2, 7);
  CHECK(laguerre(1, a) == rp({1 + a, -1}));
  CHECK(laguerre(2, q(0)) == rp({1, -2, q(1, 2)}));
  for (int n = 0; n < 8; ++n) CHECK(laguerre(n, q(1, 3)).leading() == (n % 2 ? -1 : 1) * factorial(n).inverse());
  // (n+1)L_{n+1} = (2n+1+a-x)L_n - (n+a)L_{n-1}
  for (int n = 1; n < 10; ++n) {
    const auto lhs = laguerre(n + 1, a) * q(n + 1);
    const auto rhs = rp({2 * n + 1 + a, -1}) * laguerre(n, a) - laguerre(n - 1, a) * (n + a);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("generalized hermite examples") {
  const Rational mu = q(1, 3);
  CHECK(gen_hermite(GenHermiteSpec(0, mu)) == rp({1}));
  CHECK(gen_hermite(GenHermiteSpec(1, mu)) == rp({0, 2}));
  CHECK(gen_hermite(GenHermiteSpec(2, mu)) == rp({-2 * (1 + 2 * mu), 0, 4}));
  CHECK(gen_hermite(GenHermiteSpec(2, q(0))) == rp({-2, 0, 4}));
  CHECK(hermite(3) == rp({0, -12, 0, 8}));
  CHECK_THROWS_AS(GenHermiteSpec(2, q(-1, 2)), std::invalid_argument);
  CHECK_THROWS_AS(GenHermiteSpec(-1, q(0)), std::invalid_argument);
  CHECK(GenHermiteSpec(5, mu).theta() == q(2, 3));
  CHECK(GenHermiteSpec(4, mu).theta() == 0);
}

TEST_CASE("methods agree") {
  for (const auto& mu : kGrid) {
    for (int n = 0; n <= 24; ++n) {
      const auto lag = gen_hermite_poly(n, mu, HermiteMethod::laguerre);
      CHECK(lag == gen_hermite_poly(n, mu, HermiteMethod::recurrence));
      CHECK(lag == gen_hermite_poly(n, mu, HermiteMethod::f20));
    }
  }
}

TEST_CASE("ode residual vanishes") {
  CHECK(ode_residual(GenHermiteSpec(0, q(0))).is_zero());
  CHECK(ode_residual(GenHermiteSpec(2, q(1, 3))).is_zero());
  CHECK(ode_residual(GenHermiteSpec(7, q(7, 2))).is_zero());
}

TEST_CASE("construction and f20 reports") {
  require_clean(construction_check(24, kGrid));
  require_clean(f20_form_check(24, kGrid));
}

TEST_CASE("generating function") {
  const Report r = genfun_check(q(1, 2), 12);
  require_clean(r);
  CHECK(r.count(Outcome::pass) == 13);
  for (const auto& mu : kGrid) require_clean(genfun_check(mu, 12));
}

TEST_CASE("generating function with the sign-flipped exponent fails") {
  // (1+4w^2)^(-mu+3/2) in place of (1+4w^2)^(-mu-3/2) already disagrees at w^2.
  const Rational mu = q(1, 3);
  const int order = 4;
  const RatPoly x = RatPoly::variable();
  const auto four_w2 = TruncatedSeries::monomial(order, RatPoly(q(4)), 2);
  const TruncatedSeries pre(order, {RatPoly(q(1)), x * q(2), RatPoly(q(4))});
  const auto inner = TruncatedSeries::monomial(order, x * x * q(4), 2) * series_binomial_pow(four_w2, q(-1), order);
  const auto flipped = pre * series_binomial_pow(four_w2, -mu + q(3, 2), order) * series_exp(inner);
  CHECK(flipped[2] != gen_hermite_poly(2, mu));
}

TEST_CASE("orthogonality") {
  for (const auto& mu : kGrid) {
    CHECK(orthogonality_integral(0, 0, mu) == 1);
    CHECK(orthogonality_integral(1, 2, mu) == 0);
  }
  // [4x^2 - 4]^2 at mu = 1/2: 16 nu_2 - 32 nu_1 + 16 with nu_k = (1)_k
  CHECK(orthogonality_integral(2, 2, q(1, 2)) == 16 * 2 - 32 * 1 + 16);
  CHECK(orthogonality_norm(2, q(1, 2)) == 16);
  require_clean(orthogonality_check(10, kGrid));
  // A bare [n/2] in place of [n/2]! would vanish at n = 0, 1 and differ at n = 6.
  for (const auto& mu : kGrid) {
    CHECK(orthogonality_integral(6, 6, mu) != pow(q(2), 12) * 3 * pochhammer(mu + q(1, 2), 3));
  }
}

TEST_CASE("identity suite") {
  const Report r = identity_suite(kGrid, 10, 12);
  require_clean(r);
  CHECK(r.count(Outcome::pass) > 500);
}

TEST_CASE("identity examples") {
  const Rational mu = q(2, 5);
  // H_2 - 4 mu H_0 = H_2^mu
  CHECK(hermite(2) - hermite(0) * (4 * mu) == gen_hermite_poly(2, mu));
  // H_2^{1/2}(sqrt(x^2+y^2)) in X = x^2 equals 4X - 4, and H_2^0 contributes 4X - 2 on each side
  CHECK(hermite_in_square(2, q(1, 2)) == rp({-4, 4}));
  CHECK(hermite_in_square(2, q(0)) == rp({-2, 4}));
}
