#include <algorithm>
#include <string>

#include "genherm/critline.hpp"
#include "genherm/mellin.hpp"

namespace genherm {

namespace {

struct Tagged {
  RootInterval iv;
  int source;
};

bool overlap(const RootInterval& a, const RootInterval& b) { return a.lo < b.hi && b.lo < a.hi; }

// Refines both root sets until no interval of one meets an interval of the
// other, then returns all of them sorted and tagged 0 (first) or 1 (second).
std::vector<Tagged> separate(const RatPoly& ga, const RatPoly& gb, int budget) {
  std::vector<RootInterval> a = isolate_real_roots(ga);
  std::vector<RootInterval> b = isolate_real_roots(gb);
  for (int round = 0;; ++round) {
    std::vector<bool> hit_a(a.size(), false);
    std::vector<bool> hit_b(b.size(), false);
    bool any = false;
    for (std::size_t i = 0; i < a.size(); ++i) {
      for (std::size_t j = 0; j < b.size(); ++j) {
        if (overlap(a[i], b[j])) {
          hit_a[i] = hit_b[j] = true;
          any = true;
        }
      }
    }
    if (!any) break;
    if (round >= budget) {
      throw RefinementBudgetExceeded("root intervals still overlap after " + std::to_string(budget) + " refinements");
    }
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (hit_a[i]) a[i] = bisect_root(ga, a[i]);
    }
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (hit_b[j]) b[j] = bisect_root(gb, b[j]);
    }
  }
  std::vector<Tagged> all;
  for (const auto& iv : a) all.push_back({iv, 0});
  for (const auto& iv : b) all.push_back({iv, 1});
  std::sort(all.begin(), all.end(), [](const Tagged& x, const Tagged& y) { return x.iv.lo < y.iv.lo; });
  return all;
}

bool alternates(const std::vector<Tagged>& all) {
  for (std::size_t i = 1; i < all.size(); ++i) {
    if (all[i].source == all[i - 1].source) return false;
  }
  return true;
}

bool share_root(const RatPoly& a, const RatPoly& b) { return gcd(a, b).degree() > 0; }

}  // namespace

bool interlacing_check(int n, int eps, const Rational& mu, int budget) {
  const RatPoly lower = line_polynomial(2 * n + eps, mu).g;
  const RatPoly upper = line_polynomial(2 * n + 2 + eps, mu).g;
  if (lower.degree() != n || upper.degree() != n + 1) return false;
  if (share_root(lower, upper)) return false;
  const auto all = separate(lower, upper, budget);
  // n+1 roots of the upper polynomial enclose the n roots of the lower one
  return static_cast<int>(all.size()) == 2 * n + 1 && alternates(all) && (all.empty() || all.front().source == 1);
}

bool mixed_parity_interlacing(int m, const Rational& mu, int budget) {
  const RatPoly a = line_polynomial(m, mu).g;
  const RatPoly b = line_polynomial(m + 1, mu).g;
  if (share_root(a, b)) return false;
  return alternates(separate(a, b, budget));
}

Report interlacing_suite(int max_degree, std::span<const Rational> mu_grid) {
  Report report("critline.interlacing");
  for (const auto& mu : mu_grid) {
    for (int eps = 0; eps <= 1; ++eps) {
      for (int n = 0; n <= max_degree; ++n) {
        const std::string p = "n=" + std::to_string(n) + " eps=" + std::to_string(eps) + " mu=" + mu.str();
        try {
          report.check("interlacing", p, interlacing_check(n, eps, mu),
                       "roots of indices " + std::to_string(2 * n + eps) + " and " + std::to_string(2 * n + 2 + eps) +
                           " do not alternate");
        } catch (const RefinementBudgetExceeded& e) {
          report.check("interlacing", p, false, std::string("refinement budget exhausted: ") + e.what());
        }
      }
    }
  }
  return report;
}

}  // namespace genherm
