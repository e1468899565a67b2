#include "genherm/sturm.hpp"

#include <algorithm>

namespace genherm {

namespace {

int sign_of(const Rational& q) { return q.sign(); }

int count_variations(const std::vector<int>& signs) {
  int variations = 0;
  int last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++variations;
    last = s;
  }
  return variations;
}

void isolate_in(const RatPoly& p, const std::vector<RatPoly>& seq, const Rational& lo, const Rational& hi,
                int count, std::vector<RootInterval>& out) {
  if (count == 0) return;
  if (count == 1) {
    out.push_back({lo, hi});
    return;
  }
  Rational mid = (lo + hi) / 2;
  if (p(mid).is_zero()) {
    // Carve a small bracket around the exact root so no endpoint is a root.
    Rational radius = (hi - lo) / 4;
    while (true) {
      const Rational a = mid - radius;
      const Rational b = mid + radius;
      if (!p(a).is_zero() && !p(b).is_zero() &&
          sign_variations(seq, a) - sign_variations(seq, b) == 1) {
        const int left = sign_variations(seq, lo) - sign_variations(seq, a);
        const int right = sign_variations(seq, b) - sign_variations(seq, hi);
        isolate_in(p, seq, lo, a, left, out);
        out.push_back({a, b});
        isolate_in(p, seq, b, hi, right, out);
        return;
      }
      radius /= 2;
    }
  }
  const int vm = sign_variations(seq, mid);
  isolate_in(p, seq, lo, mid, sign_variations(seq, lo) - vm, out);
  isolate_in(p, seq, mid, hi, vm - sign_variations(seq, hi), out);
}

}  // namespace

std::vector<RatPoly> sturm_sequence(const RatPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("Sturm sequence of the zero polynomial");
  std::vector<RatPoly> seq{p};
  RatPoly d = derivative(p);
  if (d.is_zero()) return seq;
  seq.push_back(d);
  while (true) {
    RatPoly r = divmod(seq[seq.size() - 2], seq.back()).second;
    if (r.is_zero()) break;
    seq.push_back(-r);
  }
  return seq;
}

int sign_variations(const std::vector<RatPoly>& seq, const Rational& x) {
  std::vector<int> signs;
  signs.reserve(seq.size());
  for (const auto& q : seq) signs.push_back(sign_of(q(x)));
  return count_variations(signs);
}

int sign_variations_at_infinity(const std::vector<RatPoly>& seq, bool positive) {
  std::vector<int> signs;
  signs.reserve(seq.size());
  for (const auto& q : seq) {
    int s = sign_of(q.leading());
    if (!positive && (q.degree() % 2 == 1)) s = -s;
    signs.push_back(s);
  }
  return count_variations(signs);
}

RatPoly squarefree_part(const RatPoly& p) {
  if (p.degree() < 1) return p;
  const RatPoly g = gcd(p, derivative(p));
  return divmod(p, g).first;
}

bool is_squarefree(const RatPoly& p) {
  if (p.degree() < 1) return true;
  return gcd(p, derivative(p)).degree() == 0;
}

int sturm_count(const RatPoly& p, const Endpoint& lo, const Endpoint& hi) {
  if (p.is_zero()) throw std::invalid_argument("sturm_count of the zero polynomial");
  const auto seq = sturm_sequence(squarefree_part(p));
  const int v_lo = lo ? sign_variations(seq, *lo) : sign_variations_at_infinity(seq, false);
  const int v_hi = hi ? sign_variations(seq, *hi) : sign_variations_at_infinity(seq, true);
  return std::max(0, v_lo - v_hi);
}

Rational cauchy_bound(const RatPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("Cauchy bound of the zero polynomial");
  Rational m(0);
  const Rational& lead = p.leading();
  for (int k = 0; k < p.degree(); ++k) m = std::max(m, (p.coefficients()[static_cast<std::size_t>(k)] / lead).abs());
  return m + 1;
}

std::vector<RootInterval> isolate_real_roots(const RatPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("root isolation of the zero polynomial");
  if (!is_squarefree(p)) throw std::invalid_argument("root isolation needs a squarefree polynomial");
  std::vector<RootInterval> out;
  if (p.degree() < 1) return out;
  const auto seq = sturm_sequence(p);
  const Rational bound = cauchy_bound(p);
  const Rational lo = -bound;
  const int total = sign_variations(seq, lo) - sign_variations(seq, bound);
  isolate_in(p, seq, lo, bound, total, out);
  return out;
}

RootInterval bisect_root(const RatPoly& p, const RootInterval& iv) {
  const Rational mid = (iv.lo + iv.hi) / 2;
  const int s_mid = p(mid).sign();
  if (s_mid == 0) {
    const Rational r = iv.width() / 8;
    return {mid - r, mid + r};
  }
  if (s_mid == p(iv.lo).sign()) return {mid, iv.hi};
  return {iv.lo, mid};
}

RootInterval refine_root(const RatPoly& p, const RootInterval& iv, const Rational& eps) {
  if (eps.sign() <= 0) throw std::invalid_argument("refinement tolerance must be positive");
  RootInterval cur = iv;
  while (cur.width() > eps) cur = bisect_root(p, cur);
  return cur;
}

}  // namespace genherm
