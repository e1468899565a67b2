#include <doctest.h>

#include <random>

#include "genherm/multipoly.hpp"
#include "genherm/poly.hpp"
#include "genherm/rational.hpp"
#include "genherm/series.hpp"
#include "genherm/sturm.hpp"

using namespace genherm;

namespace {

Rational q(long p, long d = 1) { return Rational(p, d); }

RatPoly rp(std::initializer_list<Rational> c) { return RatPoly(std::vector<Rational>(c)); }

struct Gen {
  std::mt19937 rng{20261015};
  Rational rational() {
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 7);
    return q(num(rng), den(rng));
  }
  RatPoly poly(int max_deg) {
    std::uniform_int_distribution<int> deg(0, max_deg);
    std::vector<Rational> c;
    for (int i = 0, d = deg(rng); i <= d; ++i) c.push_back(rational());
    return RatPoly(std::move(c));
  }
  GaussianRational gaussian() { return {rational(), rational()}; }
};

}  // namespace

TEST_CASE("rational normalization and parsing") {
  CHECK(Rational(6, -4) == q(-3, 2));
  CHECK(Rational(6, -4).den() == 2);
  CHECK(Rational::parse("-1/4") == q(-1, 4));
  CHECK(Rational::parse("7") == q(7));
  CHECK(Rational::parse("10/4").str() == "5/2");
  CHECK_THROWS_AS(Rational::parse("0.5"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1/0"), std::exception);
  CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
  CHECK_THROWS(q(1) / q(0));
}

TEST_CASE("pochhammer examples") {
  CHECK(pochhammer(q(1, 2), 0) == 1);
  CHECK(pochhammer(q(1, 2), 2) == q(3, 4));
  CHECK(pochhammer(q(-3), 5) == 0);
  CHECK(factorial(6) == 720);
  CHECK(binomial(q(5), 2) == 10);
  CHECK(binomial(q(1, 2), 2) == q(-1, 8));
  CHECK(gamma_ratio(q(7, 2), q(3, 2)) == q(15, 4));
  CHECK(gamma_ratio(q(3, 2), q(7, 2)) == q(4, 15));
}

TEST_CASE("field axioms on random rationals and gaussian rationals") {
  Gen g;
  for (int i = 0; i < 200; ++i) {
    const auto a = g.rational(), b = g.rational(), c = g.rational();
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + 0 == a);
    CHECK(a * 1 == a);
    if (!a.is_zero()) CHECK(a * a.inverse() == 1);

    const auto x = g.gaussian(), y = g.gaussian(), z = g.gaussian();
    CHECK((x * y) * z == x * (y * z));
    CHECK(x * (y + z) == x * y + x * z);
    CHECK(x.conj().conj() == x);
    if (!x.is_zero()) CHECK(x * x.inverse() == GaussianRational(1));
  }
  CHECK_THROWS(GaussianRational().inverse());
  CHECK_THROWS(GaussianRational(1) / GaussianRational());
  CHECK(GaussianRational::i() * GaussianRational::i() == GaussianRational(-1));
}

TEST_CASE("polynomial ring axioms and division") {
  Gen g;
  for (int i = 0; i < 100; ++i) {
    const auto a = g.poly(5), b = g.poly(5), c = g.poly(5);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * RatPoly(q(1)) == a);
    CHECK(a - a == RatPoly());
    if (!b.is_zero()) {
      const auto [qq, r] = divmod(a, b);
      CHECK(qq * b + r == a);
      CHECK(r.degree() < b.degree());
    }
  }
  CHECK(RatPoly().degree() == -1);
  CHECK_THROWS(divmod(rp({1}), RatPoly()));
}

TEST_CASE("gcd divides both and is divisible by common factors") {
  Gen g;
  for (int i = 0; i < 60; ++i) {
    const auto common = g.poly(2);
    const auto a = common * g.poly(3);
    const auto b = common * g.poly(3);
    if (a.is_zero() || b.is_zero()) continue;
    const auto d = gcd(a, b);
    CHECK(divmod(a, d).second.is_zero());
    CHECK(divmod(b, d).second.is_zero());
    if (!common.is_zero()) CHECK(divmod(d, common).second.is_zero());
  }
}

TEST_CASE("affine composition examples") {
  const RatPoly X = RatPoly::variable();
  CHECK(compose_affine<Rational>(X, q(-1), q(1)) == rp({1, -1}));
  CHECK(compose_affine<Rational>(X * X, q(1), q(2)) == rp({4, 4, 1}));
  const RatPoly p = rp({1, -2});
  const GaussPoly lifted = compose_affine<GaussianRational>(p, GaussianRational::i(), GaussianRational(q(1, 2)));
  CHECK(lifted == GaussPoly(std::vector<GaussianRational>{GaussianRational(0), GaussianRational(q(0), q(-2))}));
  CHECK(to_string(rp({1, q(-4, 3), q(4, 3)}), "s") == "4/3*s^2 - 4/3*s + 1");
}

TEST_CASE("sturm count examples") {
  const RatPoly g4 = rp({q(2, 3), 0, q(-4, 3)});
  CHECK(sturm_count(g4, std::nullopt, std::nullopt) == 2);
  CHECK(sturm_count(rp({1, 0, 1}), std::nullopt, std::nullopt) == 0);
  CHECK(sturm_count(rp({0, 1}), q(-1), q(1)) == 1);
  CHECK(sturm_count(g4, q(0), q(1)) == 1);
  CHECK_THROWS(sturm_count(RatPoly(), std::nullopt, std::nullopt));
}

TEST_CASE("sturm count matches sign scan on planted roots") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> deg(1, 6);
  std::uniform_int_distribution<int> num(-12, 12);
  for (int trial = 0; trial < 80; ++trial) {
    std::vector<Rational> roots;
    RatPoly p(q(1));
    const int d = deg(rng);
    for (int i = 0; i < d; ++i) {
      const Rational r = q(num(rng), 4);
      roots.push_back(r);
      p *= rp({-r, 1});
    }
    if (trial % 3 == 0) p *= rp({1, 0, 1});  // non-real pair
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    // scan a grid finer than the root spacing 1/4, offset to avoid hitting roots
    const RatPoly sf = squarefree_part(p);
    int scanned = 0;
    Rational prev_x = q(-4) - q(1, 16);
    int prev_sign = sf(prev_x).sign();
    for (int i = 1; i <= 8 * 16 + 1; ++i) {
      const Rational x = prev_x + q(1, 8);
      const int s = sf(x).sign();
      if (s != prev_sign) ++scanned;
      prev_sign = s;
      prev_x = x;
    }
    CHECK(sturm_count(p, std::nullopt, std::nullopt) == scanned);
    CHECK(static_cast<int>(roots.size()) == scanned);
  }
}

TEST_CASE("isolation examples") {
  const auto two = isolate_real_roots(rp({q(2, 3), 0, q(-4, 3)}));
  REQUIRE(two.size() == 2);
  CHECK(two[0].hi <= q(0));
  CHECK(two[1].lo >= q(0));
  const RatPoly g4 = rp({q(2, 3), 0, q(-4, 3)});
  const auto left = refine_root(g4, two[0], q(1, 4));
  const auto right = refine_root(g4, two[1], q(1, 4));
  CHECK(left.lo >= q(-1));
  CHECK(left.hi <= q(0));
  CHECK(right.lo >= q(0));
  CHECK(right.hi <= q(1));
  const auto one = isolate_real_roots(rp({0, 1}));
  REQUIRE(one.size() == 1);
  CHECK(one[0].contains(q(0)));
  CHECK(isolate_real_roots(rp({1, 0, 1})).empty());
  CHECK_THROWS(isolate_real_roots(rp({1, 2, 1})));
}

TEST_CASE("refinement keeps the root") {
  const RatPoly g4 = rp({q(2, 3), 0, q(-4, 3)});
  const Rational eps = pow(q(10), -12);
  const auto iv = refine_root(g4, RootInterval{q(0), q(1)}, eps);
  CHECK(iv.width() <= eps);
  // 1/sqrt(2) lies in (lo, hi] iff lo^2 < 1/2 <= hi^2
  CHECK(iv.lo * iv.lo < q(1, 2));
  CHECK(iv.hi * iv.hi >= q(1, 2));

  const auto third = refine_root(rp({q(-1, 3), 1}), RootInterval{q(0), q(1)}, q(1, 100));
  CHECK(third.contains(q(1, 3)));
  CHECK(third.width() <= q(1, 100));

  const RatPoly cube = rp({-2, 0, 0, 1});
  RootInterval step{q(1), q(2)};
  while (step.width() > pow(q(10), -6)) {
    step = bisect_root(cube, step);
    CHECK(cube(step.lo).sign() * cube(step.hi).sign() < 0);
  }
  CHECK(step.lo.to_double() < 1.2599211);
  CHECK(step.hi.to_double() > 1.2599209);
}

TEST_CASE("binomial series examples and inverse property") {
  const int n = 4;
  const auto four_t2 = TruncatedSeries::monomial(n, RatPoly(q(4)), 2);
  const auto geo = series_binomial_pow(four_t2, q(-1), n);
  CHECK(geo == TruncatedSeries(n, {RatPoly(q(1)), RatPoly(), RatPoly(q(-4)), RatPoly(), RatPoly(q(16))}));
  const auto root = series_binomial_pow(TruncatedSeries::monomial(n, RatPoly(q(-4)), 2), q(1, 2), n);
  CHECK(root == TruncatedSeries(n, {RatPoly(q(1)), RatPoly(), RatPoly(q(-2)), RatPoly(), RatPoly(q(-2))}));
  CHECK(series_binomial_pow(TruncatedSeries(n), q(5, 7), n) == TruncatedSeries::constant(n, RatPoly(q(1))));
  CHECK_THROWS(series_binomial_pow(TruncatedSeries::constant(n, RatPoly(q(1))), q(2), n));

  Gen g;
  const int order = 8;
  for (int i = 0; i < 10; ++i) {
    std::vector<RatPoly> c{RatPoly()};
    for (int k = 1; k <= order; ++k) c.push_back(g.poly(2));
    const TruncatedSeries u(order, c);
    const Rational r = g.rational();
    CHECK(series_binomial_pow(u, r, order) * series_binomial_pow(u, -r, order) ==
          TruncatedSeries::constant(order, RatPoly(q(1))));
    // symbolic exponent r(s) = s + r
    const RatPoly rs = rp({r, 1});
    CHECK(series_binomial_pow(u, rs, order) * series_binomial_pow(u, -rs, order) ==
          TruncatedSeries::constant(order, RatPoly(q(1))));
  }
}

TEST_CASE("series exp and inverse") {
  const int order = 6;
  const auto t = TruncatedSeries::monomial(order, RatPoly(q(1)), 1);
  const auto e = series_exp(t);
  for (int k = 0; k <= order; ++k) CHECK(e[k] == RatPoly(factorial(k).inverse()));
  CHECK(series_exp(t) * series_exp(TruncatedSeries::monomial(order, RatPoly(q(-1)), 1)) ==
        TruncatedSeries::constant(order, RatPoly(q(1))));
  const auto one_plus_t = TruncatedSeries::constant(order, RatPoly(q(1))) + t;
  CHECK(series_inverse(one_plus_t) * one_plus_t == TruncatedSeries::constant(order, RatPoly(q(1))));
}

TEST_CASE("multivariate substitution") {
  const MultiPoly x = MultiPoly::variable(2, 0), y = MultiPoly::variable(2, 1);
  const MultiPoly s = substitute(rp({-1, 0, 1}), x + y);
  CHECK(s == x * x + y * y + x * y * q(2) - MultiPoly(2, q(1)));
  CHECK((x - x).is_zero());
}
