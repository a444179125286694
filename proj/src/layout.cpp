#include "angres/layout.hpp"

#include <cmath>
#include <map>
#include <numeric>
#include <stdexcept>

#include <Eigen/Dense>

#include "angres/errors.hpp"
#include "angres/geometry.hpp"

namespace angres {

void validate_config(const LayoutConfig& config) {
  if (!(config.apex_angle > 0.0 && config.apex_angle < std::numbers::pi))
    throw ParameterError("apex angle must lie in (0, pi)");
  if (!(config.ring_ratio > 1.0)) throw ParameterError("ring ratio must exceed 1");
}

std::array<Point, 3> pinned_triangle() {
  const double pi = std::numbers::pi;
  std::array<Point, 3> t;
  for (int i = 0; i < 3; ++i) {
    const double phi = pi / 2 + i * 2 * pi / 3;
    t[i] = Point(std::cos(phi), std::sin(phi));
  }
  return t;
}

Drawing layout_frame_fan(int d, const LayoutConfig& config) {
  if (d < 1) throw ParameterError("d must be >= 1");
  validate_config(config);
  Drawing out(2, 2 * d + 1);
  out.col(0).setZero();
  // Rays bisect 2d equal sectors of the central two thirds of the apex. With
  // the full apex the angle at u_2 facing the first rung binds at d = 2.
  const double used = config.apex_angle / 3;
  for (int k = 1; k <= d; ++k) {
    const double phi = (2.0 * k - 1.0) / (2.0 * d) * used;
    const double r = std::pow(config.ring_ratio, k);
    out.col(k) = r * Point(std::cos(std::numbers::pi / 2 + phi), std::sin(std::numbers::pi / 2 + phi));
    out.col(d + k) = r * Point(std::cos(std::numbers::pi / 2 - phi), std::sin(std::numbers::pi / 2 - phi));
  }
  return out;
}

namespace {

// A drawing under construction plus the counterclockwise boundary of its outer
// triangle (vertex indices).
struct Canvas {
  std::vector<Point> points;
  std::array<Vertex, 3> boundary{};
};

// Affine map sending (p0, p1, p2) to (q0, q1, q2).
struct Affine {
  Eigen::Matrix2d linear;
  Point offset;
  Point operator()(const Point& p) const { return linear * p + offset; }
};

Affine affine_between(const std::array<Point, 3>& from, const std::array<Point, 3>& to) {
  Eigen::Matrix2d src, dst;
  src << from[1] - from[0], from[2] - from[0];
  dst << to[1] - to[0], to[2] - to[0];
  Affine a;
  a.linear = dst * src.inverse();
  a.offset = to[0] - a.linear * from[0];
  return a;
}

// Frame of depth D filling the triangle w=(0,0), v_D, u_D.
Canvas fan_in_triangle(int depth, const LayoutConfig& config) {
  Canvas c;
  c.points.resize(2 * depth + 1);
  c.points[0].setZero();
  const double half = config.apex_angle / 2;
  const double pi = std::numbers::pi;
  for (int k = 1; k <= depth; ++k) {
    const double phi = (k - 0.5) / (depth - 0.5) * half;
    const double r = std::pow(config.ring_ratio, static_cast<double>(k - depth) / depth);
    c.points[k] = r * Point(std::cos(pi / 2 + phi), std::sin(pi / 2 + phi));
    c.points[depth + k] = r * Point(std::cos(pi / 2 - phi), std::sin(pi / 2 - phi));
  }
  c.boundary = {0, 2 * depth, depth};  // (w, v_D, u_D) counterclockwise
  return c;
}

// Mirrors insert_copy: copy root -> root_target, the copy's next boundary
// vertex counterclockwise -> the face's next vertex counterclockwise.
void append_copy(std::vector<Point>& host, const std::array<Vertex, 3>& face, Vertex root_target,
                 const Canvas& copy, Vertex copy_root) {
  std::array<Vertex, 3> f = face;
  if (orientation(host[f[0]], host[f[1]], host[f[2]]) < 0) std::swap(f[1], f[2]);
  while (f[0] != root_target) std::rotate(f.begin(), f.begin() + 1, f.end());
  std::array<Vertex, 3> b = copy.boundary;
  while (b[0] != copy_root) std::rotate(b.begin(), b.begin() + 1, b.end());
  const Affine map = affine_between({copy.points[b[0]], copy.points[b[1]], copy.points[b[2]]},
                                    {host[f[0]], host[f[1]], host[f[2]]});
  for (Vertex v = 0; v < static_cast<Vertex>(copy.points.size()); ++v)
    if (v != b[0] && v != b[1] && v != b[2]) host.push_back(map(copy.points[v]));
}

// Reflection across the y axis; boundary order reversed to stay counterclockwise.
Canvas mirrored(Canvas c) {
  for (Point& p : c.points) p.x() = -p.x();
  std::swap(c.boundary[1], c.boundary[2]);
  return c;
}

Canvas structured_G(int c, int d, const LayoutConfig& config) {
  const int depth = d + 1;
  Canvas g = fan_in_triangle(depth, config);
  if (c == 1) return g;
  const Canvas sub = structured_G(c - 1, d, config);
  const Canvas flipped = mirrored(sub);  // as in build_G
  auto u = [](int k) { return k; };
  auto v = [depth](int k) { return depth + k; };
  for (int k = 1; k <= d - 1; ++k) {
    append_copy(g.points, {0, v(k), v(k + 1)}, v(k + 1), flipped, 0);
    append_copy(g.points, {v(k + 1), u(k + 1), v(k)}, u(k + 1), sub, 0);
  }
  return g;
}

Canvas k4_canvas() {
  Canvas c;
  const auto t = pinned_triangle();
  c.points = {t[0], t[1], t[2], (t[0] + t[1] + t[2]) / 3.0};
  c.boundary = {0, 1, 2};
  return c;
}

Canvas structured_H(int c, int d, const LayoutConfig& config) {
  const Canvas g = structured_G(c, d, config);
  Canvas h = k4_canvas();
  append_copy(h.points, {0, 2, 3}, 2, g, 0);
  append_copy(h.points, {0, 1, 3}, 0, g, 0);
  append_copy(h.points, {1, 2, 3}, 1, g, 0);
  return h;
}

Canvas structured_Htilde(int c, int d, const LayoutConfig& config) {
  const Canvas h = structured_H(c, d, config);
  Canvas ht = k4_canvas();
  const std::array<std::array<Vertex, 3>, 3> faces{{{0, 1, 3}, {1, 2, 3}, {2, 0, 3}}};
  for (const auto& f : faces) append_copy(ht.points, f, *std::min_element(f.begin(), f.end()), h, 0);
  return ht;
}

Drawing to_drawing(const std::vector<Point>& pts) {
  Drawing out(2, static_cast<Eigen::Index>(pts.size()));
  for (std::size_t i = 0; i < pts.size(); ++i) out.col(static_cast<Eigen::Index>(i)) = pts[i];
  return out;
}

}  // namespace

Drawing layout_structured(const FamilySpec& spec, const LayoutConfig& config) {
  validate_config(config);
  if (spec.d < 1 || (spec.family != Family::frame && spec.c < 1))
    throw ParameterError("c and d must be >= 1");
  switch (spec.family) {
    case Family::frame: {
      const Canvas f = fan_in_triangle(spec.d, config);
      const auto t = pinned_triangle();
      const Affine map = affine_between({f.points[0], f.points[2 * spec.d], f.points[spec.d]},
                                        {t[0], t[1], t[2]});
      std::vector<Point> pts;
      for (const Point& p : f.points) pts.push_back(map(p));
      return to_drawing(pts);
    }
    case Family::G: {
      const Canvas g = structured_G(spec.c, spec.d, config);
      const auto t = pinned_triangle();
      const Affine map = affine_between(
          {g.points[g.boundary[0]], g.points[g.boundary[1]], g.points[g.boundary[2]]},
          {t[0], t[1], t[2]});
      std::vector<Point> pts;
      for (const Point& p : g.points) pts.push_back(map(p));
      return to_drawing(pts);
    }
    case Family::H: return to_drawing(structured_H(spec.c, spec.d, config).points);
    case Family::Htilde: return to_drawing(structured_Htilde(spec.c, spec.d, config).points);
  }
  throw ParameterError("unknown family");
}

Drawing layout_htilde1(int d, const LayoutConfig& config) {
  return layout_structured({Family::Htilde, 1, d}, config);
}

Drawing layout_seed_any(const LabeledGraph& graph, const BuildSequence& sequence,
                        SeedPlacement placement) {
  const int n = graph.vertex_count();
  if (static_cast<int>(sequence.steps.size()) != n - 3)
    throw StructuralError("build sequence does not cover the graph");

  // Face tree: face 0 is the base; each insertion splits one face into three.
  // Faces are keyed by sorted vertex triple (unique among inner faces).
  auto key = [](std::array<Vertex, 3> f) {
    std::sort(f.begin(), f.end());
    return f;
  };
  std::map<std::array<Vertex, 3>, int> live{{key(sequence.base), 0}};
  std::vector<std::array<int, 3>> children(1, {-1, -1, -1});  // child opposite face corner i
  std::vector<int> split_face(sequence.steps.size());
  for (std::size_t s = 0; s < sequence.steps.size(); ++s) {
    const auto& step = sequence.steps[s];
    auto it = live.find(key(step.face));
    if (it == live.end()) throw StructuralError("build sequence inserts into a non-face");
    const int f = it->second;
    live.erase(it);
    split_face[s] = f;
    const auto [a, b, c] = step.face;
    const Vertex v = step.vertex;
    const std::array<std::array<Vertex, 3>, 3> parts{{{v, b, c}, {a, v, c}, {a, b, v}}};
    for (int i = 0; i < 3; ++i) {
      const int id = static_cast<int>(children.size());
      children.push_back({-1, -1, -1});
      children[f][i] = id;
      live.emplace(key(parts[i]), id);
    }
  }
  // Leaves (final faces) below each face node.
  std::vector<double> leaves(children.size(), 1.0);
  for (int f = static_cast<int>(children.size()) - 1; f >= 0; --f)
    if (children[f][0] >= 0)
      leaves[f] = leaves[children[f][0]] + leaves[children[f][1]] + leaves[children[f][2]];

  std::vector<Point> pts(n, Point::Zero());
  const auto tri = pinned_triangle();
  for (int i = 0; i < 3; ++i) pts[sequence.base[i]] = tri[i];
  for (std::size_t s = 0; s < sequence.steps.size(); ++s) {
    const auto& step = sequence.steps[s];
    const int f = split_face[s];
    std::array<double, 3> lambda{1.0 / 3, 1.0 / 3, 1.0 / 3};
    if (placement == SeedPlacement::balanced)
      for (int i = 0; i < 3; ++i) lambda[i] = leaves[children[f][i]] / leaves[f];
    pts[step.vertex] = lambda[0] * pts[step.face[0]] + lambda[1] * pts[step.face[1]] +
                       lambda[2] * pts[step.face[2]];
  }
  std::vector<Vertex> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  auto less = [&](Vertex x, Vertex y) {
    return pts[x].x() != pts[y].x() ? pts[x].x() < pts[y].x() : pts[x].y() < pts[y].y();
  };
  std::sort(idx.begin(), idx.end(), less);
  for (int i = 1; i < n; ++i)
    if (pts[idx[i]] == pts[idx[i - 1]])
      throw std::logic_error("layout_seed_any: vertices " + std::to_string(idx[i - 1]) + " and " +
                             std::to_string(idx[i]) + " coincide");
  return to_drawing(pts);
}

}  // namespace angres
