#include "angres/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>

#include "angres/errors.hpp"
#include "angres/geometry.hpp"
#include "angres/predicates.hpp"

namespace angres {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

std::string edge_text(Vertex a, Vertex b) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

// Clockwise angle swept from direction a to direction b, in [0, 2pi).
double clockwise_angle(const Point& a, const Point& b) {
  const double cr = cross2(b, a);
  const double dt = a.dot(b);
  double t = std::atan2(cr, dt);
  if (t < 0.0 || (t == 0.0 && dt < 0.0)) t += kTwoPi;
  return t;
}

struct Around {
  std::vector<Vertex> order;
  std::vector<double> angles;
};

Around around_vertex(const LabeledGraph& graph, const Drawing& drawing, Vertex v) {
  const auto& nb = graph.neighbors(v);
  Around out;
  if (nb.empty()) return out;
  const Point p = drawing.col(v);
  std::vector<std::pair<double, Vertex>> polar;
  polar.reserve(nb.size());
  for (Vertex u : nb) {
    const Point dir = drawing.col(u) - p;
    if (dir.isZero(0)) throw DegenerateInput("zero-length edge " + edge_text(v, u));
    polar.emplace_back(std::atan2(dir.y(), dir.x()), u);
  }
  std::sort(polar.begin(), polar.end(), [](const auto& x, const auto& y) {
    return x.first != y.first ? x.first > y.first : x.second < y.second;
  });
  const auto first = std::min_element(polar.begin(), polar.end(), [](const auto& x, const auto& y) {
    return x.second < y.second;
  });
  std::rotate(polar.begin(), first, polar.end());
  for (const auto& pu : polar) out.order.push_back(pu.second);
  if (out.order.size() < 2) return out;
  const std::size_t k = out.order.size();
  out.angles.resize(k);
  for (std::size_t i = 0; i < k; ++i) {
    const Point a = drawing.col(out.order[i]) - p;
    const Point b = drawing.col(out.order[(i + 1) % k]) - p;
    out.angles[i] = clockwise_angle(a, b);
  }
  return out;
}

bool cyclic_match(const Face& a, const Face& b) {
  if (a.size() != b.size() || a.empty()) return false;
  auto it = std::find(b.begin(), b.end(), a.front());
  if (it == b.end()) return false;
  const std::size_t off = static_cast<std::size_t>(it - b.begin());
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[(i + off) % b.size()]) return false;
  return true;
}

int face_orientation(const Face& f, const Drawing& drawing) {
  if (f.size() == 3) return orient2d(drawing.col(f[0]), drawing.col(f[1]), drawing.col(f[2]));
  double area = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) {
    const Point p = drawing.col(f[i]);
    const Point q = drawing.col(f[(i + 1) % f.size()]);
    area += cross2(p, q);
  }
  return (area > 0) - (area < 0);
}

struct Segment {
  Vertex a, b;
  double xmin, xmax, ymin, ymax;
};

}  // namespace

ValidationReport check_planarity(const LabeledGraph& graph, const Drawing& drawing) {
  ValidationReport report;
  const int n = graph.vertex_count();
  if (drawing.cols() != n) {
    report.violations.push_back({ViolationKind::size_mismatch, {},
                                 "drawing has " + std::to_string(drawing.cols()) +
                                     " points for " + std::to_string(n) + " vertices"});
    return report;
  }
  if (!drawing.allFinite()) {
    report.violations.push_back({ViolationKind::size_mismatch, {}, "non-finite coordinate"});
    return report;
  }
  std::vector<Vertex> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](Vertex x, Vertex y) {
    return drawing(0, x) != drawing(0, y) ? drawing(0, x) < drawing(0, y)
                                          : drawing(1, x) < drawing(1, y);
  });
  for (int i = 1; i < n; ++i)
    if (drawing.col(idx[i]) == drawing.col(idx[i - 1]))
      report.violations.push_back({ViolationKind::coincident_points, {idx[i - 1], idx[i]},
                                   "vertices " + std::to_string(idx[i - 1]) + " and " +
                                       std::to_string(idx[i]) + " coincide"});
  if (!report.ok()) return report;

  std::vector<Segment> segs;
  segs.reserve(graph.edge_count());
  for (const auto& [a, b] : graph.edges()) {
    segs.push_back({a, b, std::min(drawing(0, a), drawing(0, b)),
                    std::max(drawing(0, a), drawing(0, b)),
                    std::min(drawing(1, a), drawing(1, b)),
                    std::max(drawing(1, a), drawing(1, b))});
  }
  std::sort(segs.begin(), segs.end(),
            [](const Segment& x, const Segment& y) { return x.xmin < y.xmin; });
  std::vector<const Segment*> active;
  for (const Segment& s : segs) {
    std::erase_if(active, [&](const Segment* t) { return t->xmax < s.xmin; });
    for (const Segment* t : active) {
      if (t->ymax < s.ymin || s.ymax < t->ymin) continue;
      Vertex shared = -1, sa = -1, ta = -1;
      if (s.a == t->a || s.a == t->b) shared = s.a;
      if (s.b == t->a || s.b == t->b) shared = s.b;
      bool bad;
      if (shared >= 0) {
        sa = s.a == shared ? s.b : s.a;
        ta = t->a == shared ? t->b : t->a;
        bad = adjacent_segments_overlap(drawing.col(shared), drawing.col(sa), drawing.col(ta));
      } else {
        bad = segments_intersect(drawing.col(s.a), drawing.col(s.b), drawing.col(t->a),
                                 drawing.col(t->b));
      }
      if (bad)
        report.violations.push_back({ViolationKind::crossing, {s.a, s.b, t->a, t->b},
                                     "edges " + edge_text(s.a, s.b) + " and " +
                                         edge_text(t->a, t->b) + " intersect"});
    }
    active.push_back(&s);
  }
  return report;
}

ValidationReport validate_drawing(const LabeledGraph& graph, const Embedding& embedding,
                                  const Drawing& drawing) {
  ValidationReport report = check_planarity(graph, drawing);
  for (const auto& v : report.violations)
    if (v.kind == ViolationKind::size_mismatch || v.kind == ViolationKind::coincident_points)
      return report;

  std::vector<Face> faces;
  try {
    faces = trace_faces(graph, embedding.rotation);
  } catch (const StructuralError& e) {
    report.violations.push_back({ViolationKind::rotation_mismatch, {}, e.what()});
    return report;
  }
  bool outer_seen = false;
  for (const Face& f : faces) {
    const bool is_outer = cyclic_match(f, embedding.outer);
    outer_seen = outer_seen || is_outer;
    const int want = is_outer ? -1 : 1;
    if (face_orientation(f, drawing) != want)
      report.violations.push_back({ViolationKind::flipped_face, f,
                                   is_outer ? "outer face is not clockwise"
                                            : "inner face is not counterclockwise"});
  }
  if (!outer_seen)
    report.violations.push_back(
        {ViolationKind::rotation_mismatch, embedding.outer, "outer face is not a traced face"});

  for (Vertex v = 0; v < graph.vertex_count(); ++v) {
    const auto& ring = embedding.rotation[v];
    if (ring.size() < 3) continue;
    const Point p = drawing.col(v);
    double total = 0.0;
    bool zero = false;
    for (std::size_t i = 0; i < ring.size(); ++i) {
      const double t = clockwise_angle(drawing.col(ring[i]) - p,
                                       drawing.col(ring[(i + 1) % ring.size()]) - p);
      zero = zero || t == 0.0;
      total += t;
    }
    if (zero || std::abs(total - kTwoPi) > std::numbers::pi)
      report.violations.push_back({ViolationKind::rotation_mismatch, {v},
                                   "clockwise order at vertex " + std::to_string(v) +
                                       " differs from the rotation"});
  }
  return report;
}

bool faces_oriented(const LabeledGraph& graph, const Embedding& embedding, const Drawing& drawing) {
  for (const Face& f : trace_faces(graph, embedding.rotation)) {
    const int want = cyclic_match(f, embedding.outer) ? -1 : 1;
    if (face_orientation(f, drawing) != want) return false;
  }
  return true;
}

AngleReport angular_resolution(const LabeledGraph& graph, const Drawing& drawing) {
  if (drawing.cols() != graph.vertex_count())
    throw DegenerateInput("drawing does not cover every vertex");
  AngleReport report;
  const int n = graph.vertex_count();
  report.order.resize(n);
  report.angles.resize(n);
  report.resolution = std::numeric_limits<double>::infinity();
  for (Vertex v = 0; v < n; ++v) {
    Around a = around_vertex(graph, drawing, v);
    for (std::size_t i = 0; i < a.angles.size(); ++i) {
      if (a.angles[i] < report.resolution) {
        report.resolution = a.angles[i];
        report.witness = {v, a.order[i], a.order[(i + 1) % a.order.size()]};
      }
    }
    report.order[v] = std::move(a.order);
    report.angles[v] = std::move(a.angles);
  }
  return report;
}

FrameProfile frame_profile(const LabeledGraph& graph, const FrameRoles& roles,
                           const Drawing& drawing) {
  const int depth = roles.depth();
  if (depth < 1 || static_cast<int>(roles.v.size()) != depth)
    throw StructuralError("frame_profile: malformed frame roles");
  const Around a = around_vertex(graph, drawing, roles.root);
  const std::size_t k = a.order.size();
  std::vector<std::size_t> pos(graph.vertex_count(), k);
  for (std::size_t i = 0; i < k; ++i) pos[a.order[i]] = i;
  for (Vertex x : {roles.u.back(), roles.v.back(), roles.u.front(), roles.v.front()})
    if (pos[x] == k) throw StructuralError("frame_profile: chain vertex not adjacent to the root");

  auto clockwise = [&](Vertex from, Vertex to) {
    double s = 0.0;
    for (std::size_t i = pos[from]; i != pos[to]; i = (i + 1) % k) s += a.angles[i];
    return s;
  };
  auto counter = [&](Vertex from, Vertex to) {
    double s = 0.0;
    for (std::size_t i = pos[from]; i != pos[to]; i = (i + k - 1) % k) s += a.angles[(i + k - 1) % k];
    return s;
  };
  // Sweep through the inside of the frame: from u_D towards v_D passing u_1.
  bool use_clockwise;
  if (depth >= 2) {
    use_clockwise = false;
    for (std::size_t i = pos[roles.u.back()]; i != pos[roles.v.back()]; i = (i + 1) % k)
      if (a.order[i] == roles.u.front()) use_clockwise = true;
  } else {
    use_clockwise = clockwise(roles.u[0], roles.v[0]) <= counter(roles.u[0], roles.v[0]);
  }
  auto sweep = [&](Vertex from, Vertex to) {
    return use_clockwise ? clockwise(from, to) : counter(from, to);
  };

  FrameProfile p;
  p.depth = depth;
  for (int kk = 2; kk <= depth; ++kk) {
    const double a1 = sweep(roles.v[kk - 2], roles.v[kk - 1]);
    const double a2 = sweep(roles.u[kk - 1], roles.v[kk - 2]);
    const double a3 = kk == 2 ? 0.0 : sweep(roles.v[0], roles.v[kk - 2]);
    p.alpha1.push_back(a1);
    p.alpha2.push_back(a2);
    p.alpha3.push_back(a3);
    p.ratio.push_back(a3 / a1);
  }
  p.apex_v = depth >= 2 ? sweep(roles.v[0], roles.v.back()) : 0.0;
  p.apex_uv = sweep(roles.u.back(), roles.v.back());
  return p;
}

FrameProfile frame_profile(const LabeledGraph& graph, const Drawing& drawing) {
  auto roles = frame_roles(graph);
  if (!roles) throw StructuralError("frame_profile: graph carries no frame roles");
  return frame_profile(graph, *roles, drawing);
}

double telescoping_product(const FrameProfile& profile) {
  double prod = 1.0;
  for (int k = 3; k <= profile.depth; ++k) {
    const double r = profile.ratio[k - 2];
    prod *= r / (1.0 + r);
  }
  return prod;
}

ClaimQuantities claim_quantities(const FrameProfile& profile) {
  const int d = profile.depth;
  if (d < 2) throw ParameterError("claim_quantities needs a frame of depth >= 2");
  ClaimQuantities q;
  const int lo = std::max(2, (d + 1) / 2);
  // Angles within 1e-12 rad of the minimum count as tied; the smallest k wins.
  double least = profile.alpha1[lo - 2];
  for (int k = lo + 1; k <= d; ++k) least = std::min(least, profile.alpha1[k - 2]);
  q.j = lo;
  while (profile.alpha1[q.j - 2] > least + 1e-12) ++q.j;
  q.alpha1_prime = profile.alpha1[q.j - 2];
  q.alpha2_prime = profile.alpha2[q.j - 2];
  q.averaging_bound_holds = q.alpha1_prime <= 2.0 / (d + 2) * profile.apex_uv + 1e-9;
  return q;
}

ClaimQuantities claim_quantities(const LabeledGraph& graph, const Drawing& drawing) {
  return claim_quantities(frame_profile(graph, drawing));
}

}  // namespace angres
