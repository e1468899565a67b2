#pragma once

// Sparse multivariate polynomials with rational coefficients in a fixed
// number of variables. Only ring operations and substitution of a univariate
// polynomial are provided; there is no multivariate division or gcd.

#include <map>
#include <string>
#include <vector>

#include "genherm/poly.hpp"
#include "genherm/rational.hpp"

namespace genherm {

class MultiPoly {
 public:
  using Exponents = std::vector<int>;

  explicit MultiPoly(int nvars) : nvars_(nvars) {}
  MultiPoly(int nvars, const Rational& constant);

  static MultiPoly variable(int nvars, int index);

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Exponents, Rational>& terms() const { return terms_; }

  void add_term(const Exponents& exps, const Rational& coeff);

  MultiPoly& operator+=(const MultiPoly& rhs);
  MultiPoly& operator-=(const MultiPoly& rhs);
  MultiPoly& operator*=(const Rational& s);

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(MultiPoly a, const Rational& s) { return a *= s; }
  friend MultiPoly operator*(const Rational& s, MultiPoly a) { return a *= s; }

  friend bool operator==(const MultiPoly&, const MultiPoly&) = default;

  /// Renders with variables named by `names` (defaults to x0, x1, ...).
  std::string str(const std::vector<std::string>& names = {}) const;

 private:
  int nvars_;
  std::map<Exponents, Rational> terms_;
};

/// p(arg) for a univariate p and multivariate argument.
MultiPoly substitute(const RatPoly& p, const MultiPoly& arg);

}  // namespace genherm
