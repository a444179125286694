#include <doctest.h>

#include <numbers>

#include "angres/errors.hpp"
#include "angres/layout.hpp"
#include "support.hpp"

using namespace angres;
using namespace support;
using std::numbers::pi;

namespace {

Drawing equilateral() {
  Drawing d(2, 3);
  const auto p = pinned_triangle();
  // frame(1): outer face (w, u1, v1) traced clockwise, so w, v1, u1 is counterclockwise.
  d.col(0) = p[0];
  d.col(2) = p[1];
  d.col(1) = p[2];
  return d;
}

Drawing k4_drawing() {
  Drawing d(2, 4);
  d.leftCols(3) = equilateral();
  d.col(3) = d.leftCols(3).rowwise().mean();
  return d;
}

// Equiangular frame drawing: ray k at angle k * delta from u_d's ray, on one circle.
Drawing equiangular_frame(int d, double delta) {
  Drawing p(2, 2 * d + 1);
  p.col(0).setZero();
  // Rays from v_d (index 0 in angle order) through v_1, u_1, ..., u_d.
  auto put = [&](Vertex v, int slot, double r) {
    const double t = slot * delta;
    p.col(v) << r * std::cos(t), r * std::sin(t);
  };
  for (int k = 1; k <= d; ++k) {
    put(d + k, d - k, 1.0 + k);
    put(k, d + k - 1, 1.0 + k);
  }
  return p;
}

}  // namespace

TEST_CASE("validation") {
  auto t = triangle();
  CHECK(validate_drawing(t.graph, t.embedding, equilateral()).ok());
  Drawing mirrored = equilateral();
  mirrored.row(0) *= -1;
  CHECK_FALSE(validate_drawing(t.graph, t.embedding, mirrored).ok());
  CHECK(check_planarity(t.graph, mirrored).ok());

  auto g = k4();
  Drawing d = k4_drawing();
  CHECK(validate_drawing(g.graph, g.embedding, d).ok());
  d.col(3) = Point(3, 3);
  const auto report = validate_drawing(g.graph, g.embedding, d);
  REQUIRE_FALSE(report.ok());
  bool flipped = false;
  for (const auto& v : report.violations) flipped = flipped || v.kind == ViolationKind::flipped_face;
  CHECK(flipped);

  Drawing coincident = k4_drawing();
  coincident.col(3) = coincident.col(0);
  CHECK_FALSE(check_planarity(g.graph, coincident).ok());

  Drawing short_drawing(2, 3);
  CHECK_FALSE(validate_drawing(g.graph, g.embedding, short_drawing).ok());
}

TEST_CASE("validation agrees with brute force on the fan layout") {
  auto f4 = build_frame(4);
  const Drawing d = layout_frame_fan(4);
  CHECK(validate_drawing(f4.graph, f4.embedding, d).ok());
  CHECK_FALSE(naive_has_crossing(f4.graph, d));

  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 200; ++trial) {
    const Drawing j = jittered(d, f4.graph, 1.5, rng());
    CHECK(check_planarity(f4.graph, j).ok() == !naive_has_crossing(f4.graph, j));
  }
}

TEST_CASE("touching segments count as crossings") {
  LabeledGraph g(4);
  g.add_edge(0, 1);
  g.add_edge(2, 3);
  Drawing d(2, 4);
  d << 0, 2, 1, 1,
       0, 0, 0, 1;
  CHECK_FALSE(check_planarity(g, d).ok());
  LabeledGraph path(3);
  path.add_edge(0, 1);
  path.add_edge(0, 2);
  Drawing overlap(2, 3);
  overlap << 0, 2, 1,
             0, 0, 0;
  CHECK_FALSE(check_planarity(path, overlap).ok());
}

TEST_CASE("angular resolution") {
  auto t = triangle();
  CHECK(angular_resolution(t.graph, equilateral()).resolution == doctest::Approx(pi / 3));
  Drawing right(2, 3);
  right << 0, 1, 0,
           0, 0, 1;
  CHECK(angular_resolution(t.graph, right).resolution == doctest::Approx(pi / 4));

  auto g = k4();
  const auto r = angular_resolution(g.graph, k4_drawing());
  CHECK(r.resolution == doctest::Approx(pi / 6));
  CHECK(r.witness.vertex == 0);

  Drawing zero = equilateral();
  zero.col(1) = zero.col(0);
  CHECK_THROWS_AS(angular_resolution(t.graph, zero), DegenerateInput);

  for (int d : {2, 5, 8}) {
    auto f = build_frame(d);
    const Drawing p = layout_frame_fan(d);
    CHECK(angular_resolution(f.graph, p).resolution == doctest::Approx(naive_resolution(f.graph, p)));
    CHECK(angular_resolution(f.graph, p).resolution <= 2 * pi / max_degree(f.graph));
  }
}

TEST_CASE("angle sums and similarity invariance on valid drawings") {
  std::vector<std::pair<EmbeddedGraph, Drawing>> cases;
  cases.emplace_back(build_frame(6), layout_frame_fan(6));
  cases.emplace_back(build_Htilde(1, 3), layout_htilde1(3));
  const FamilySpec g{Family::G, 2, 3};
  cases.emplace_back(build_family(g), layout_structured(g));
  for (auto& [eg, d] : cases) {
    REQUIRE(validate_drawing(eg.graph, eg.embedding, d).ok());
    const auto r = angular_resolution(eg.graph, d);
    std::set<Vertex> outer(eg.embedding.outer.begin(), eg.embedding.outer.end());
    for (Vertex v = 0; v < eg.graph.vertex_count(); ++v) {
      double sum = 0;
      for (double a : r.angles[v]) sum += a;
      CHECK(std::abs(sum - 2 * pi) < 1e-9);
    }
    for (const auto& f : trace_faces(eg.graph, eg.embedding.rotation)) {
      std::set<Vertex> s(f.begin(), f.end());
      if (s == outer) continue;
      const double total = angle_at<double>(d.col(f[2]), d.col(f[0]), d.col(f[1])) +
                           angle_at<double>(d.col(f[0]), d.col(f[1]), d.col(f[2])) +
                           angle_at<double>(d.col(f[1]), d.col(f[2]), d.col(f[0]));
      CHECK(std::abs(total - pi) < 1e-9);
    }
    Eigen::Matrix2d rot;
    rot << std::cos(0.7), -std::sin(0.7), std::sin(0.7), std::cos(0.7);
    Drawing moved = (3.5 * rot * d).colwise() + Eigen::Vector2d(-2, 9);
    CHECK(std::abs(angular_resolution(eg.graph, moved).resolution - r.resolution) < 1e-9);
    CHECK(r.resolution <= 2 * pi / max_degree(eg.graph));
  }
}

TEST_CASE("frame profile on an equiangular fan") {
  const double delta = 0.05;
  for (int d : {3, 5, 8}) {
    auto f = build_frame(d);
    const Drawing p = equiangular_frame(d, delta);
    REQUIRE(validate_drawing(f.graph, f.embedding, p).ok());
    const auto prof = frame_profile(f.graph, p);
    CHECK(prof.depth == d);
    for (int k = 2; k <= d; ++k) {
      CHECK(prof.alpha1[k - 2] == doctest::Approx(delta));
      CHECK(prof.ratio[k - 2] == doctest::Approx(k - 2));
    }
    CHECK(prof.apex_v == doctest::Approx((d - 1) * delta));
    CHECK(prof.apex_uv == doctest::Approx((2 * d - 1) * delta));
    CHECK(telescoping_product(prof) == doctest::Approx(1.0 / (d - 1)));
    const auto q = claim_quantities(prof);
    CHECK(q.j == std::max(2, (d + 1) / 2));
    CHECK(q.averaging_bound_holds);
  }
  auto f5 = build_frame(5);
  CHECK(telescoping_product(frame_profile(f5.graph, equiangular_frame(5, delta))) ==
        doctest::Approx(0.25));
}

TEST_CASE("frame profile identities on jittered drawings") {
  for (int d : {4, 8}) {
    auto f = build_frame(d);
    const Drawing base = layout_frame_fan(d);
    std::mt19937_64 rng(d);
    int valid = 0;
    for (int trial = 0; trial < 50; ++trial) {
      const Drawing p = jittered(base, f.graph, trial % 2 ? 0.01 : 0.03, rng());
      if (!validate_drawing(f.graph, f.embedding, p).ok()) continue;
      ++valid;
      const auto prof = frame_profile(f.graph, p);
      for (int k = 2; k < d; ++k)
        CHECK(std::abs(prof.alpha3[k - 1] - (prof.alpha3[k - 2] + prof.alpha1[k - 2])) < 1e-9);
      CHECK(std::abs(telescoping_product(prof) - prof.alpha1[0] / prof.apex_v) < 1e-9);
      CHECK(claim_quantities(prof).averaging_bound_holds);
    }
    CHECK(valid > 10);
  }
}

TEST_CASE("claim picks a small angle in range") {
  auto f = build_frame(8);
  // Squeeze the wedge between v_5 and v_6.
  std::vector<double> slots{0, 1, 2, 3, 3.1, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14};
  Drawing p(2, 17);
  p.col(0).setZero();
  const double delta = 0.05;
  for (int k = 1; k <= 8; ++k) {
    const double tv = slots[8 - k] * delta, tu = slots[7 + k] * delta;
    p.col(8 + k) << (1.0 + k) * std::cos(tv), (1.0 + k) * std::sin(tv);
    p.col(k) << (1.0 + k) * std::cos(tu), (1.0 + k) * std::sin(tu);
  }
  REQUIRE(validate_drawing(f.graph, f.embedding, p).ok());
  const auto q = claim_quantities(f.graph, p);
  CHECK(q.j == 5);
  CHECK(q.alpha1_prime == doctest::Approx(0.1 * delta));
  CHECK(q.averaging_bound_holds);
}

TEST_CASE("profile errors") {
  LabeledGraph unlabeled(4);
  for (int a = 0; a < 4; ++a)
    for (int b = a + 1; b < 4; ++b) unlabeled.add_edge(a, b);
  CHECK_THROWS_AS(frame_profile(unlabeled, k4_drawing()), StructuralError);
  auto f1 = build_frame(1);
  CHECK_THROWS_AS(claim_quantities(frame_profile(f1.graph, equilateral())), ParameterError);
}
