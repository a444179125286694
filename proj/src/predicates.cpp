#include "angres/predicates.hpp"

#include <cmath>
#include <limits>
#include <vector>

namespace angres {
namespace {

// Expansion arithmetic after Shewchuk: an expansion is a sum of doubles with
// nonoverlapping components stored in increasing magnitude.
using Expansion = std::vector<double>;

inline void two_sum(double a, double b, double& x, double& y) {
  x = a + b;
  const double bv = x - a;
  const double av = x - bv;
  y = (a - av) + (b - bv);
}

inline void two_product(double a, double b, double& x, double& y) {
  x = a * b;
  y = std::fma(a, b, -x);
}

Expansion grow(const Expansion& e, double b) {
  Expansion h;
  h.reserve(e.size() + 1);
  double q = b;
  for (double ei : e) {
    double sum, err;
    two_sum(q, ei, sum, err);
    if (err != 0.0) h.push_back(err);
    q = sum;
  }
  if (q != 0.0 || h.empty()) h.push_back(q);
  return h;
}

Expansion sum(const Expansion& e, const Expansion& f) {
  Expansion h = e;
  for (double fi : f) h = grow(h, fi);
  return h;
}

Expansion scale(const Expansion& e, double b) {
  Expansion h{0.0};
  for (double ei : e) {
    double hi, lo;
    two_product(ei, b, hi, lo);
    h = grow(h, lo);
    h = grow(h, hi);
  }
  return h;
}

Expansion product(const Expansion& e, const Expansion& f) {
  Expansion h{0.0};
  for (double fi : f) h = sum(h, scale(e, fi));
  return h;
}

Expansion difference(double a, double b) {
  double x, y;
  two_sum(a, -b, x, y);
  return y != 0.0 ? Expansion{y, x} : Expansion{x};
}

int sign(const Expansion& e) {
  for (auto it = e.rbegin(); it != e.rend(); ++it) {
    if (*it > 0.0) return 1;
    if (*it < 0.0) return -1;
  }
  return 0;
}

int orient2d_exact(const Eigen::Vector2d& a, const Eigen::Vector2d& b, const Eigen::Vector2d& c) {
  const Expansion left = product(difference(a.x(), c.x()), difference(b.y(), c.y()));
  const Expansion right = product(difference(a.y(), c.y()), difference(b.x(), c.x()));
  Expansion neg_right(right.size());
  for (std::size_t i = 0; i < right.size(); ++i) neg_right[i] = -right[i];
  return sign(sum(left, neg_right));
}

// Coordinate-wise closed interval test along one axis: is m between p and q.
inline bool between(double p, double m, double q) {
  return (p <= m && m <= q) || (q <= m && m <= p);
}

bool on_segment(const Eigen::Vector2d& p, const Eigen::Vector2d& m, const Eigen::Vector2d& q) {
  return between(p.x(), m.x(), q.x()) && between(p.y(), m.y(), q.y());
}

inline int axis_sign(double v, double origin) { return (v > origin) - (v < origin); }

}  // namespace

int orient2d(const Eigen::Vector2d& a, const Eigen::Vector2d& b, const Eigen::Vector2d& c) {
  constexpr double eps = std::numeric_limits<double>::epsilon() / 2;
  constexpr double errbound = (3.0 + 16.0 * eps) * eps;
  const double detleft = (a.x() - c.x()) * (b.y() - c.y());
  const double detright = (a.y() - c.y()) * (b.x() - c.x());
  const double det = detleft - detright;
  const double bound = errbound * (std::abs(detleft) + std::abs(detright));
  if (std::isfinite(det) && std::abs(det) > bound) return det > 0 ? 1 : -1;
  return orient2d_exact(a, b, c);
}

bool segments_intersect(const Eigen::Vector2d& p1, const Eigen::Vector2d& p2,
                        const Eigen::Vector2d& q1, const Eigen::Vector2d& q2) {
  const int d1 = orient2d(q1, q2, p1);
  const int d2 = orient2d(q1, q2, p2);
  const int d3 = orient2d(p1, p2, q1);
  const int d4 = orient2d(p1, p2, q2);
  if (d1 * d2 < 0 && d3 * d4 < 0) return true;
  if (d1 == 0 && on_segment(q1, p1, q2)) return true;
  if (d2 == 0 && on_segment(q1, p2, q2)) return true;
  if (d3 == 0 && on_segment(p1, q1, p2)) return true;
  if (d4 == 0 && on_segment(p1, q2, p2)) return true;
  return false;
}

bool adjacent_segments_overlap(const Eigen::Vector2d& s, const Eigen::Vector2d& a,
                               const Eigen::Vector2d& b) {
  if (orient2d(s, a, b) != 0) return false;
  return axis_sign(a.x(), s.x()) == axis_sign(b.x(), s.x()) &&
         axis_sign(a.y(), s.y()) == axis_sign(b.y(), s.y());
}

}  // namespace angres
