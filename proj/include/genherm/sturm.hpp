#pragma once

// Real-root counting and isolation for rational polynomials, using
// canonical Sturm sequences evaluated with exact arithmetic.

#include <optional>
#include <stdexcept>
#include <vector>

#include "genherm/poly.hpp"
#include "genherm/rational.hpp"

namespace genherm {

/// Open-closed bracket (lo, hi] holding exactly one simple real root.
/// Neither endpoint is a root, so the polynomial changes sign across it.
struct RootInterval {
  Rational lo;
  Rational hi;

  Rational width() const { return hi - lo; }
  bool contains(const Rational& x) const { return lo < x && x <= hi; }
  friend bool operator==(const RootInterval&, const RootInterval&) = default;
};

/// Endpoint of a counting range; std::nullopt stands for -inf (as lo) or +inf (as hi).
using Endpoint = std::optional<Rational>;

/// p0 = p, p1 = p', p_{k+1} = -rem(p_{k-1}, p_k), stopping before the zero remainder.
std::vector<RatPoly> sturm_sequence(const RatPoly& p);

/// Sign variations of the sequence at a point, zeros skipped.
int sign_variations(const std::vector<RatPoly>& seq, const Rational& x);
/// Sign variations at -inf (positive == false) or +inf.
int sign_variations_at_infinity(const std::vector<RatPoly>& seq, bool positive);

RatPoly squarefree_part(const RatPoly& p);
bool is_squarefree(const RatPoly& p);

/// Number of distinct real roots of p in (lo, hi].
int sturm_count(const RatPoly& p, const Endpoint& lo, const Endpoint& hi);

/// 1 + max |c_i / c_deg|; every root has absolute value strictly below it.
Rational cauchy_bound(const RatPoly& p);

/// Sorted, disjoint isolating intervals for all real roots of a squarefree p.
std::vector<RootInterval> isolate_real_roots(const RatPoly& p);

/// Bisects until the width is at most eps, keeping the bracket certified.
RootInterval refine_root(const RatPoly& p, const RootInterval& iv, const Rational& eps);

/// One bisection step: the half that still brackets the root. If the midpoint
/// is itself the root, a symmetric bracket of a quarter of the width is returned.
RootInterval bisect_root(const RatPoly& p, const RootInterval& iv);

}  // namespace genherm
