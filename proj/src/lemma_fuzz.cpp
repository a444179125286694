#include <algorithm>
#include <cmath>
#include <random>

#include "angres/geometry.hpp"

namespace angres {

LemmaFuzzSummary lemma_fuzz(std::size_t n, std::uint64_t seed, double identity_tol) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::exponential_distribution<double> expo(1.0);
  LemmaFuzzSummary out;
  while (out.cases < n) {
    const Point a(unit(rng), unit(rng));
    const Point b(unit(rng), unit(rng));
    const Point c(unit(rng), unit(rng));
    if (orientation(a, b, c) == 0) continue;
    // Uniform point in the triangle via normalized exponential weights.
    const double wa = expo(rng), wb = expo(rng), wc = expo(rng);
    const double total = wa + wb + wc;
    const Point d = (wa * a + wb * b + wc * c) / total;
    // Interior test exactly in double; angles in extended precision, since a
    // sliver triangle loses ~eps/angle of relative accuracy in each tiny angle.
    LemmaAngles<long double> t;
    try {
      lemma_angles(a, b, c, d);
      t = lemma_angles<long double>(a.cast<long double>(), b.cast<long double>(),
                                    c.cast<long double>(), d.cast<long double>());
    } catch (const DegenerateInput&) {
      continue;
    }
    const auto check = lemma_bound_check(t);
    if (!check.applicable) continue;
    ++out.cases;
    if (check.holds) ++out.holds;
    out.worst_ratio = std::max(out.worst_ratio, static_cast<double>(check.lhs / check.rhs));
    const double err = static_cast<double>(std::abs(sine_product(t) - 1.0L));
    out.worst_identity_error = std::max(out.worst_identity_error, err);
    if (err <= identity_tol) ++out.identity_ok;
  }
  return out;
}

}  // namespace angres
