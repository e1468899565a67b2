#pragma once

// Exact certification that the polynomial factors vanish only on Re s = 1/2.
// phat(1/2 + it) is either real or purely imaginary for real t; the surviving
// part g(t) has only real, simple roots, counted by a Sturm sequence.

#include <span>
#include <stdexcept>
#include <vector>

#include "genherm/poly.hpp"
#include "genherm/rational.hpp"
#include "genherm/report.hpp"
#include "genherm/sturm.hpp"

namespace genherm {

class FunctionalEquationViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class RefinementBudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class LineKind { real, imaginary };

const char* to_string(LineKind k);

struct LinePoly {
  int m = 0;
  Rational mu;
  RatPoly g;  // phat(1/2+it) = g(t) or i*g(t)
  LineKind kind = LineKind::real;
};

/// Throws FunctionalEquationViolation when neither part of phat(1/2+it) vanishes.
LinePoly line_polynomial(int m, const Rational& mu);

struct CriticalLineCertificate {
  int m = 0;
  Rational mu;
  RatPoly g;
  LineKind kind = LineKind::real;
  int degree = 0;
  int real_root_count = 0;
  bool squarefree = false;
  std::vector<RootInterval> roots;
  bool all_on_line = false;
};

CriticalLineCertificate certify(int m, const Rational& mu);

/// Root count, simplicity, degree, t -> -t symmetry and the root at t = 0.
Report certify_suite(int m_max, std::span<const Rational> mu_grid);

/// Whether the roots of the degree-n and degree-(n+1) line polynomials of one
/// parity family (indices 2n+eps and 2n+2+eps) strictly alternate.
bool interlacing_check(int n, int eps, const Rational& mu, int budget = 64);

/// Alternation between consecutive Mellin indices m and m+1, which mixes the
/// two families. Measured for the record only.
bool mixed_parity_interlacing(int m, const Rational& mu, int budget = 64);

/// Pairs (n, n+1) for n = 0..max_degree in both families.
Report interlacing_suite(int max_degree, std::span<const Rational> mu_grid);

/// P_n^lambda(i(1/4 - s/2); pi/2) from the three-term recurrence, as a
/// polynomial in s.
GaussPoly meixner_pollaczek_line(int n, const Rational& lambda);

/// Recurrence-built P_n with lambda = (mu+eps)/2 + 1/4 against
/// ((mu+1/2+eps)_n / n!) i^n phat_{2n+eps}(s).
bool meixner_pollaczek_check(int n, int eps, const Rational& mu);
Report meixner_pollaczek_suite(int n_max, std::span<const Rational> mu_grid);

}  // namespace genherm
