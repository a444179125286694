#pragma once

#include <Eigen/Core>

namespace angres {

/// Sign of the orientation determinant of (a, b, c): +1 counterclockwise,
/// -1 clockwise, 0 collinear. Exact for all finite double inputs (filtered
/// floating-point evaluation with an expansion-arithmetic fallback).
int orient2d(const Eigen::Vector2d& a, const Eigen::Vector2d& b, const Eigen::Vector2d& c);

/// True iff the closed segments [p1,p2] and [q1,q2] share at least one point.
bool segments_intersect(const Eigen::Vector2d& p1, const Eigen::Vector2d& p2,
                        const Eigen::Vector2d& q1, const Eigen::Vector2d& q2);

/// Two segments sharing the endpoint `s` and ending at `a` and `b` overlap
/// beyond `s` (collinear and pointing the same way).
bool adjacent_segments_overlap(const Eigen::Vector2d& s, const Eigen::Vector2d& a,
                               const Eigen::Vector2d& b);

}  // namespace angres
