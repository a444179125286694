#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <numbers>
#include <type_traits>

#include <Eigen/Core>

#include "angres/errors.hpp"
#include "angres/predicates.hpp"

namespace angres {

template <typename Scalar>
using Point2 = Eigen::Matrix<Scalar, 2, 1>;
using Point = Point2<double>;

template <typename Derived, typename Other>
typename Derived::Scalar cross2(const Eigen::MatrixBase<Derived>& a,
                                const Eigen::MatrixBase<Other>& b) {
  return a.x() * b.y() - a.y() * b.x();
}

/// Orientation sign of (a, b, c); exact for double, plain evaluation otherwise.
template <typename Scalar>
int orientation(const Point2<Scalar>& a, const Point2<Scalar>& b, const Point2<Scalar>& c) {
  if constexpr (std::is_same_v<Scalar, double>) {
    return orient2d(a, b, c);
  } else {
    const Scalar det = cross2(b - a, c - a);
    return (det > Scalar(0)) - (det < Scalar(0));
  }
}

/// Non-reflex angle between rays b->a and b->c, in [0, pi].
template <typename Scalar>
Scalar angle_at(const Point2<Scalar>& a, const Point2<Scalar>& b, const Point2<Scalar>& c) {
  using std::abs;
  using std::atan2;
  const Point2<Scalar> u = a - b;
  const Point2<Scalar> v = c - b;
  if (u.isZero(0) || v.isZero(0)) throw DegenerateInput("angle_at: coincident points");
  return atan2(abs(cross2(u, v)), u.dot(v));
}

/// Sub-angles of triangle ABC cut by the cevians through an interior point D.
/// Index 1 is the part adjacent to the next vertex in the cycle A->B->C->A:
/// alpha1 = BAD, beta1 = CBD, gamma1 = ACD; index 2 is the complement.
template <typename Scalar>
struct LemmaAngles {
  Scalar alpha1, alpha2, beta1, beta2, gamma1, gamma2;
};

template <typename Scalar>
LemmaAngles<Scalar> lemma_angles(const Point2<Scalar>& a, const Point2<Scalar>& b,
                                 const Point2<Scalar>& c, const Point2<Scalar>& d) {
  const int s = orientation(a, b, c);
  if (s == 0) throw DegenerateInput("lemma_angles: degenerate triangle");
  if (orientation(a, b, d) != s || orientation(b, c, d) != s || orientation(c, a, d) != s)
    throw DegenerateInput("lemma_angles: D is not strictly inside ABC");
  return {angle_at(b, a, d), angle_at(d, a, c), angle_at(c, b, d),
          angle_at(d, b, a), angle_at(a, c, d), angle_at(d, c, b)};
}

template <typename Scalar>
struct LemmaCheck {
  bool applicable = false;
  Scalar lhs{};
  Scalar rhs{};
  bool holds = false;
};

/// min{beta2/beta1, gamma2/gamma1} <= (pi^2/4) sqrt(alpha1/alpha2), applicable
/// when the angle at A is at most pi/2 and alpha2 >= alpha1.
template <typename Scalar>
LemmaCheck<Scalar> lemma_bound_check(const LemmaAngles<Scalar>& t) {
  using std::min;
  using std::sqrt;
  LemmaCheck<Scalar> out;
  const Scalar pi = std::numbers::pi_v<Scalar>;
  out.applicable = t.alpha1 + t.alpha2 <= pi / 2 && t.alpha2 >= t.alpha1;
  if (!out.applicable) return out;
  out.lhs = min(t.beta2 / t.beta1, t.gamma2 / t.gamma1);
  out.rhs = pi * pi / 4 * sqrt(t.alpha1 / t.alpha2);
  out.holds = out.lhs <= out.rhs;
  return out;
}

/// (sin a2 / sin a1)(sin b2 / sin b1)(sin g2 / sin g1); 1 for any interior point.
template <typename Scalar>
Scalar sine_product(const LemmaAngles<Scalar>& t) {
  using std::sin;
  const Scalar s[6] = {sin(t.alpha1), sin(t.alpha2), sin(t.beta1),
                       sin(t.beta2),  sin(t.gamma1), sin(t.gamma2)};
  for (const Scalar& v : s)
    if (v == Scalar(0)) throw DegenerateInput("sine_product: zero sine");
  return (s[1] / s[0]) * (s[3] / s[2]) * (s[5] / s[4]);
}

struct LemmaFuzzSummary {
  std::size_t cases = 0;              // applicable instances checked
  std::size_t holds = 0;
  std::size_t identity_ok = 0;        // sine product within tolerance
  double worst_ratio = 0.0;           // max lhs / rhs
  double worst_identity_error = 0.0;  // max |sine_product - 1|
};

/// Seeded random triangles with angle BAC <= pi/2 and interior D with
/// alpha2 >= alpha1, rejection-sampled until `n` applicable instances.
LemmaFuzzSummary lemma_fuzz(std::size_t n, std::uint64_t seed, double identity_tol = 1e-9);

}  // namespace angres
