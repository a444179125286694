#include <doctest.h>

#include "angres/errors.hpp"
#include "support.hpp"

using namespace angres;
using namespace support;

TEST_CASE("edge set semantics and labels") {
  LabeledGraph g(3);
  CHECK(g.add_edge(0, 1));
  CHECK_FALSE(g.add_edge(1, 0));
  CHECK(g.edge_count() == 1);
  CHECK_THROWS_AS(g.add_edge(2, 2), StructuralError);
  CHECK_THROWS_AS(g.add_edge(0, 3), StructuralError);
  g.set_label(0, "w");
  CHECK_THROWS(g.set_label(1, "w"));
  CHECK(g.find("w") == 0);
  CHECK_FALSE(g.find("u1"));
  g.add_edge(2, 0);
  CHECK(g.edges() == std::vector<Edge>{{0, 1}, {0, 2}});
}

TEST_CASE("max degree") {
  CHECK(max_degree(LabeledGraph(4)) == 0);
  CHECK(max_degree(triangle().graph) == 2);
  CHECK(max_degree(build_frame(3).graph) == 6);
  CHECK(max_degree(build_G(2, 2).graph) <= 4 * 2 + 13);
}

TEST_CASE("face tracing") {
  SUBCASE("triangle, either rotation") {
    auto t = triangle();
    for (int flip = 0; flip < 2; ++flip) {
      auto faces = trace_faces(t.graph, t.embedding.rotation);
      CHECK(faces.size() == 2);
      for (const auto& f : faces) CHECK(f.size() == 3);
      for (auto& r : t.embedding.rotation) std::reverse(r.begin(), r.end());
    }
  }
  SUBCASE("K4") {
    auto g = k4();
    auto faces = trace_faces(g.graph, g.embedding.rotation);
    CHECK(faces.size() == 4);
    for (const auto& f : faces) CHECK(f.size() == 3);
  }
  SUBCASE("F_3 by Euler") {
    auto f3 = build_frame(3);
    const int v = f3.graph.vertex_count(), e = f3.graph.edge_count();
    CHECK(v == 7);
    CHECK(e == 15);
    auto faces = trace_faces(f3.graph, f3.embedding.rotation);
    CHECK(static_cast<int>(faces.size()) == 2 - v + e);
    for (const auto& f : faces) CHECK(f.size() == 3);
  }
  SUBCASE("every directed edge once") {
    auto g = build_Htilde(1, 2);
    std::set<std::pair<int, int>> seen;
    for (const auto& f : trace_faces(g.graph, g.embedding.rotation))
      for (std::size_t i = 0; i < f.size(); ++i)
        CHECK(seen.insert({f[i], f[(i + 1) % f.size()]}).second);
    CHECK(seen.size() == 2 * static_cast<std::size_t>(g.graph.edge_count()));
  }
  SUBCASE("inconsistent rotation names the vertex") {
    auto g = k4();
    g.embedding.rotation[2].pop_back();
    try {
      trace_faces(g.graph, g.embedding.rotation);
      FAIL("expected a structural error");
    } catch (const StructuralError& e) {
      CHECK(std::string(e.what()).find('2') != std::string::npos);
    }
  }
}

TEST_CASE("planar 3-tree verification") {
  SUBCASE("K4 needs one insertion") {
    auto seq = verify_planar_3tree(k4().graph);
    CHECK(seq.steps.size() == 1);
  }
  SUBCASE("pendant vertex") {
    LabeledGraph g(4);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(0, 2);
    g.add_edge(2, 3);
    try {
      verify_planar_3tree(g);
      FAIL("expected failure");
    } catch (const StructuralError& e) {
      CHECK(std::string(e.what()).find("not a 3-tree") != std::string::npos);
    }
  }
  SUBCASE("octahedron is maximal planar but no 3-tree") {
    LabeledGraph g(6);
    for (int a = 0; a < 6; ++a)
      for (int b = a + 1; b < 6; ++b)
        if (b != a + 3) g.add_edge(a, b);
    CHECK(g.edge_count() == 12);
    CHECK_THROWS_WITH_AS(verify_planar_3tree(g), doctest::Contains("not a 3-tree"), StructuralError);
  }
  SUBCASE("stacking four vertices on one triangle is a 3-tree but not planar") {
    LabeledGraph g(7);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(0, 2);
    for (int v = 3; v < 7; ++v)
      for (int c = 0; c < 3; ++c) g.add_edge(v, c);
    CHECK_THROWS_WITH_AS(verify_planar_3tree(g), doctest::Contains("not planar"), StructuralError);
  }
  SUBCASE("H~(1,2) has 40 insertions; naive elimination agrees") {
    auto g = build_Htilde(1, 2);
    CHECK(g.graph.vertex_count() == 43);
    CHECK(verify_planar_3tree(g.graph).steps.size() == 40);
    CHECK(naive_elimination_length(g.graph) == 40);
  }
  SUBCASE("replay reproduces the edge set and the embedding") {
    for (auto spec : {FamilySpec{Family::frame, 1, 5}, FamilySpec{Family::G, 2, 3},
                      FamilySpec{Family::H, 1, 4}, FamilySpec{Family::Htilde, 2, 2}}) {
      auto g = build_family(spec);
      auto seq = verify_planar_3tree(g.graph, interior_orientation(g.embedding.outer));
      auto r = replay(seq, g.graph.vertex_count());
      CHECK(edge_set(r.graph) == edge_set(g.graph));
      CHECK(same_rotation(r.embedding.rotation, g.embedding.rotation));
      auto unprotected = verify_planar_3tree(g.graph);
      CHECK(edge_set(replay(unprotected, g.graph.vertex_count()).graph) == edge_set(g.graph));
    }
  }
  SUBCASE("each insertion lands on an existing triangle") {
    auto g = build_G(2, 3);
    auto seq = verify_planar_3tree(g.graph);
    LabeledGraph partial(g.graph.vertex_count());
    partial.add_edge(seq.base[0], seq.base[1]);
    partial.add_edge(seq.base[1], seq.base[2]);
    partial.add_edge(seq.base[0], seq.base[2]);
    for (const auto& s : seq.steps) {
      const auto [a, b, c] = s.face;
      CHECK(partial.has_edge(a, b));
      CHECK(partial.has_edge(b, c));
      CHECK(partial.has_edge(a, c));
      CHECK(partial.degree(s.vertex) == 0);
      for (Vertex x : s.face) partial.add_edge(s.vertex, x);
    }
  }
}

TEST_CASE("rotation helpers") {
  auto g = k4();
  CHECK(find_triangular_face(g.embedding.rotation, 0, 1, 3));
  CHECK(find_inner_face(g.embedding, 0, 1, 2) == std::nullopt);
  const Vertex a = g.embedding.rotation[3][0];
  CHECK(rotation_successor(g.embedding.rotation, 3, a) == g.embedding.rotation[3][1]);
  CHECK_FALSE(rotation_successor(g.embedding.rotation, 0, 0));
  auto rotated = g.embedding.rotation;
  std::rotate(rotated[3].begin(), rotated[3].begin() + 1, rotated[3].end());
  CHECK(same_rotation(rotated, g.embedding.rotation));
  std::reverse(rotated[3].begin(), rotated[3].end());
  CHECK_FALSE(same_rotation(rotated, g.embedding.rotation));
}
