#include <doctest.h>

#include <numbers>

#include "angres/errors.hpp"
#include "angres/layout.hpp"
#include "calibration.hpp"
#include "support.hpp"

using namespace angres;
using namespace support;
using std::numbers::pi;

TEST_CASE("config checks") {
  CHECK_THROWS_AS(layout_frame_fan(0), ParameterError);
  CHECK_THROWS_AS(layout_frame_fan(3, {.apex_angle = 0.0}), ParameterError);
  CHECK_THROWS_AS(layout_frame_fan(3, {.apex_angle = pi}), ParameterError);
  CHECK_THROWS_AS(layout_frame_fan(3, {.ring_ratio = 1.0}), ParameterError);
  CHECK_THROWS_AS(layout_htilde1(0), ParameterError);
}

TEST_CASE("fan layout") {
  auto f1 = build_frame(1);
  const Drawing t = layout_frame_fan(1);
  CHECK(validate_drawing(f1.graph, f1.embedding, t).ok());
  CHECK(angular_resolution(f1.graph, t).resolution >= calibration::kappa_fan);
  CHECK(t.col(0).isZero());

  for (int d = 1; d <= 128; ++d) {
    CAPTURE(d);
    auto f = build_frame(d);
    const Drawing p = layout_frame_fan(d);
    REQUIRE(validate_drawing(f.graph, f.embedding, p).ok());
    const double r = angular_resolution(f.graph, p).resolution;
    CHECK(r * d >= calibration::kappa_fan);
    CHECK(r <= 2 * pi / (2 * d));
    CHECK(p.col(d).norm() == doctest::Approx(std::pow(2.0, d)));
  }
  auto r8 = angular_resolution(build_frame(8).graph, layout_frame_fan(8)).resolution * 8;
  auto r16 = angular_resolution(build_frame(16).graph, layout_frame_fan(16)).resolution * 16;
  CHECK(std::abs(r16 - r8) / r8 < 0.25);
  CHECK(r8 <= 2 * pi * 8 / 16);
}

TEST_CASE("fan layout with other parameters stays valid") {
  for (double apex : {0.3, 1.0, 2.0})
    for (double ratio : {1.3, 2.0, 3.0}) {
      auto f = build_frame(10);
      CHECK(validate_drawing(f.graph, f.embedding, layout_frame_fan(10, {apex, ratio})).ok());
    }
}

TEST_CASE("H~(1) layout") {
  auto g2 = build_Htilde(1, 2);
  const Drawing p2 = layout_htilde1(2);
  CHECK(p2.cols() == 43);
  CHECK(validate_drawing(g2.graph, g2.embedding, p2).ok());
  CHECK_FALSE(naive_has_crossing(g2.graph, p2));

  const Vertex t1 = *g2.graph.find("t1"), t2 = *g2.graph.find("t2"), t3 = *g2.graph.find("t3"),
               t4 = *g2.graph.find("t4");
  CHECK((p2.col(t1) - p2.col(t2)).norm() == doctest::Approx((p2.col(t2) - p2.col(t3)).norm()));
  CHECK((p2.col(t1) - p2.col(t3)).norm() == doctest::Approx((p2.col(t2) - p2.col(t3)).norm()));
  CHECK((p2.col(t4) - (p2.col(t1) + p2.col(t2) + p2.col(t3)) / 3).norm() < 1e-12);

  std::vector<double> scaled;
  for (int d = 1; d <= 16; ++d) {
    auto g = build_Htilde(1, d);
    const Drawing p = layout_htilde1(d);
    REQUIRE(validate_drawing(g.graph, g.embedding, p).ok());
    const double r = angular_resolution(g.graph, p).resolution;
    CHECK(r * d >= calibration::kappa_htilde1);
    CHECK(r <= 2 * pi / (2 * d));
    if (d == 2 || d == 4 || d == 8 || d == 16) scaled.push_back(r * d);
  }
  CHECK(*std::max_element(scaled.begin(), scaled.end()) <= 2 * *std::min_element(scaled.begin(), scaled.end()));
}

TEST_CASE("structured layouts of every family validate") {
  for (Family f : {Family::frame, Family::G, Family::H, Family::Htilde})
    for (int c = 1; c <= 3; ++c)
      for (int d : {1, 2, 3, 5}) {
        const FamilySpec spec{f, c, d};
        if (f == Family::Htilde && c == 3 && d == 5) continue;
        auto g = build_family(spec);
        CHECK(validate_drawing(g.graph, g.embedding, layout_structured(spec)).ok());
      }
}

TEST_CASE("seed drawings") {
  SUBCASE("K4 centroid") {
    auto g = k4();
    const auto seq = verify_planar_3tree(g.graph, interior_orientation(g.embedding.outer));
    for (SeedPlacement placement : {SeedPlacement::balanced, SeedPlacement::centroid}) {
      const Drawing p = layout_seed_any(g.graph, seq, placement);
      CHECK((p.col(3) - (p.col(0) + p.col(1) + p.col(2)) / 3).norm() < 1e-15);
      CHECK(validate_drawing(g.graph, g.embedding, p).ok());
    }
  }
  SUBCASE("centroid placement is literal centroid replay") {
    auto g = build_G(2, 2);
    const auto seq = verify_planar_3tree(g.graph, interior_orientation(g.embedding.outer));
    const Drawing p = layout_seed_any(g.graph, seq, SeedPlacement::centroid);
    for (const auto& s : seq.steps) {
      const Point c = (p.col(s.face[0]) + p.col(s.face[1]) + p.col(s.face[2])) / 3;
      CHECK((p.col(s.vertex) - c).norm() < 1e-15);
    }
    CHECK(validate_drawing(g.graph, g.embedding, p).ok());
  }
  SUBCASE("H~(2,4) and other family graphs") {
    for (auto spec : {FamilySpec{Family::Htilde, 2, 4}, FamilySpec{Family::Htilde, 1, 16},
                      FamilySpec{Family::G, 3, 4}, FamilySpec{Family::frame, 1, 40}}) {
      auto g = build_family(spec);
      const auto seq = verify_planar_3tree(g.graph, interior_orientation(g.embedding.outer));
      const Drawing p = layout_seed_any(g.graph, seq);
      CHECK(validate_drawing(g.graph, g.embedding, p).ok());
      const Drawing again = layout_seed_any(g.graph, seq);
      CHECK(p == again);
    }
  }
  SUBCASE("base lands on the pinned triangle") {
    auto g = build_H(1, 3);
    const auto seq = verify_planar_3tree(g.graph, interior_orientation(g.embedding.outer));
    const Drawing p = layout_seed_any(g.graph, seq);
    const auto pin = pinned_triangle();
    for (int i = 0; i < 3; ++i) CHECK((p.col(seq.base[i]) - pin[i]).norm() == 0.0);
    CHECK(orient2d(pin[0], pin[1], pin[2]) == 1);
    for (const Point& q : pin) CHECK(q.norm() == doctest::Approx(1.0));
  }
}
