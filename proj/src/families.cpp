#include "angres/families.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "angres/errors.hpp"

namespace angres {

std::string_view family_name(Family f) {
  switch (f) {
    case Family::frame: return "frame";
    case Family::G: return "g";
    case Family::H: return "h";
    case Family::Htilde: return "htilde";
  }
  return "?";
}

Family parse_family(std::string_view name) {
  if (name == "frame") return Family::frame;
  if (name == "g" || name == "G") return Family::G;
  if (name == "h" || name == "H") return Family::H;
  if (name == "htilde" || name == "Htilde") return Family::Htilde;
  throw ParameterError("unknown family '" + std::string(name) + "'");
}

std::optional<FrameRoles> frame_roles(const LabeledGraph& graph) {
  FrameRoles roles;
  auto w = graph.find("w");
  if (!w) return std::nullopt;
  roles.root = *w;
  for (int k = 1;; ++k) {
    auto u = graph.find("u" + std::to_string(k));
    auto v = graph.find("v" + std::to_string(k));
    if (!u && !v) break;
    if (!u || !v) return std::nullopt;
    roles.u.push_back(*u);
    roles.v.push_back(*v);
  }
  if (roles.u.empty()) return std::nullopt;
  return roles;
}

namespace {

void require_positive(int value, const char* name) {
  if (value < 1) throw ParameterError(std::string(name) + " must be >= 1, got " + std::to_string(value));
}

std::array<Vertex, 3> inner_face(const EmbeddedGraph& g, Vertex a, Vertex b, Vertex c) {
  auto f = find_inner_face(g.embedding, a, b, c);
  if (!f)
    throw StructuralError("(" + std::to_string(a) + "," + std::to_string(b) + "," +
                          std::to_string(c) + ") is not an inner triangular face");
  return *f;
}

// Triangle (a, b, c) with counterclockwise interior; outer face traced (a, c, b).
EmbeddedGraph triangle(int vertex_count, Vertex a, Vertex b, Vertex c) {
  EmbeddedGraph g{LabeledGraph(vertex_count), Embedding{Rotation(vertex_count), {a, c, b}}};
  g.graph.add_edge(a, b);
  g.graph.add_edge(b, c);
  g.graph.add_edge(a, c);
  g.embedding.rotation[a] = {c, b};
  g.embedding.rotation[b] = {a, c};
  g.embedding.rotation[c] = {b, a};
  return g;
}

std::array<Vertex, 3> starting_at(const std::array<Vertex, 3>& f, Vertex v) {
  for (int i = 0; i < 3; ++i)
    if (f[i] == v) return {f[i], f[(i + 1) % 3], f[(i + 2) % 3]};
  throw StructuralError("vertex " + std::to_string(v) + " is not on the face");
}

// Same graph, reflected embedding: every rotation and the outer trace reversed.
EmbeddedGraph mirrored(EmbeddedGraph g) {
  for (auto& r : g.embedding.rotation) std::reverse(r.begin(), r.end());
  std::reverse(g.embedding.outer.begin(), g.embedding.outer.end());
  return g;
}

}  // namespace

EmbeddedGraph build_frame(int d) {
  require_positive(d, "d");
  const Vertex w = 0;
  auto u = [](int k) { return k; };
  auto v = [d](int k) { return d + k; };
  EmbeddedGraph g = triangle(2 * d + 1, w, v(d), u(d));
  // Outside in: v_{k-1} splits (w, u_k, v_k), then u_{k-1} splits (w, u_k, v_{k-1}).
  for (int k = d; k >= 2; --k) {
    insert_into_face(g, v(k - 1), inner_face(g, w, u(k), v(k)));
    insert_into_face(g, u(k - 1), inner_face(g, w, u(k), v(k - 1)));
  }
  g.graph.set_label(w, "w");
  for (int k = 1; k <= d; ++k) {
    g.graph.set_label(u(k), "u" + std::to_string(k));
    g.graph.set_label(v(k), "v" + std::to_string(k));
  }
  return g;
}

void insert_copy(EmbeddedGraph& host, const std::array<Vertex, 3>& face, const EmbeddedGraph& copy,
                 Vertex copy_root, Vertex root_target, std::string_view label_prefix) {
  if (std::find(face.begin(), face.end(), root_target) == face.end())
    throw StructuralError("insert_copy: root target " + std::to_string(root_target) +
                          " is not on the face");
  const auto hf = starting_at(inner_face(host, face[0], face[1], face[2]), root_target);

  const Face& outer = copy.embedding.outer;
  if (outer.size() != 3) throw StructuralError("insert_copy: copy outer face is not a triangle");
  std::array<Vertex, 3> co{outer[0], outer[1], outer[2]};
  const auto traced = starting_at(co, copy_root);  // (root, p, q), clockwise
  // Counterclockwise boundary is (root, q, p); map onto (x, y, z).
  const int n = copy.graph.vertex_count();
  std::vector<Vertex> map(n, -1);
  map[traced[0]] = hf[0];
  map[traced[2]] = hf[1];
  map[traced[1]] = hf[2];
  for (Vertex cv = 0; cv < n; ++cv)
    if (map[cv] < 0) map[cv] = host.graph.add_vertex();
  auto& rot = host.embedding.rotation;
  rot.resize(host.graph.vertex_count());

  const auto& crot = copy.embedding.rotation;
  for (int i = 0; i < 3; ++i) {
    const Vertex corner = traced[i];
    const Vertex prev = traced[(i + 2) % 3];
    const Vertex next = traced[(i + 1) % 3];
    const auto& ring = crot[corner];
    const auto start = std::find(ring.begin(), ring.end(), next) - ring.begin();
    std::vector<Vertex> interior;
    for (std::size_t j = 1; j < ring.size(); ++j) {
      const Vertex nb = ring[(start + j) % ring.size()];
      if (nb == prev) break;
      interior.push_back(map[nb]);
    }
    auto& hring = rot[map[corner]];
    auto at = std::find(hring.begin(), hring.end(), map[next]);
    if (at == hring.end() ||
        *(std::next(at) == hring.end() ? hring.begin() : std::next(at)) != map[prev])
      throw StructuralError("insert_copy: rotation splice mismatch at host vertex " +
                            std::to_string(map[corner]));
    hring.insert(std::next(at), interior.begin(), interior.end());
  }
  for (Vertex cv = 0; cv < n; ++cv) {
    if (cv == traced[0] || cv == traced[1] || cv == traced[2]) continue;
    auto& r = rot[map[cv]];
    r.reserve(crot[cv].size());
    for (Vertex nb : crot[cv]) r.push_back(map[nb]);
  }
  for (const auto& [a, b] : copy.graph.edges()) host.graph.add_edge(map[a], map[b]);
  if (!label_prefix.empty()) {
    for (const auto& [cv, name] : copy.graph.labels()) {
      if (cv == traced[0] || cv == traced[1] || cv == traced[2]) continue;
      host.graph.set_label(map[cv], std::string(label_prefix) + name);
    }
  }
}

EmbeddedGraph build_G(int c, int d) {
  require_positive(c, "c");
  require_positive(d, "d");
  const int depth = d + 1;
  EmbeddedGraph g = build_frame(depth);
  if (c == 1) return g;
  const EmbeddedGraph sub = build_G(c - 1, d);
  // Copies beside w are reflected so that w meets their v-corner (degree 3)
  // rather than their u-corner; this keeps w near 3d instead of 4d.
  const EmbeddedGraph flipped = mirrored(sub);
  const Vertex sub_root = *sub.graph.find("w");
  const Vertex w = 0;
  auto u = [](int k) { return k; };
  auto v = [depth](int k) { return depth + k; };
  for (int k = 1; k <= d - 1; ++k) {
    insert_copy(g, {w, v(k), v(k + 1)}, flipped, sub_root, v(k + 1), "a" + std::to_string(k) + ".");
    insert_copy(g, {v(k + 1), u(k + 1), v(k)}, sub, sub_root, u(k + 1),
                "b" + std::to_string(k) + ".");
  }
  return g;
}

EmbeddedGraph build_H(int c, int d) {
  const EmbeddedGraph gc = build_G(c, d);
  const Vertex root = *gc.graph.find("w");
  const Vertex s1 = 0, s2 = 1, s3 = 2, s4 = 3;
  EmbeddedGraph h = triangle(4, s1, s2, s3);
  insert_into_face(h, s4, inner_face(h, s1, s2, s3));
  for (int i = 0; i < 4; ++i) h.graph.set_label(i, "s" + std::to_string(i + 1));
  insert_copy(h, {s1, s3, s4}, gc, root, s3, "g1.");
  insert_copy(h, {s1, s2, s4}, gc, root, s1, "g2.");
  insert_copy(h, {s2, s3, s4}, gc, root, s2, "g3.");
  return h;
}

EmbeddedGraph build_Htilde(int c, int d) {
  const EmbeddedGraph hc = build_H(c, d);
  const Vertex s1 = *hc.graph.find("s1");
  const Vertex t1 = 0, t2 = 1, t3 = 2, t4 = 3;
  EmbeddedGraph ht = triangle(4, t1, t2, t3);
  insert_into_face(ht, t4, inner_face(ht, t1, t2, t3));
  for (int i = 0; i < 4; ++i) ht.graph.set_label(i, "t" + std::to_string(i + 1));
  const std::array<std::array<Vertex, 3>, 3> faces{{{t1, t2, t4}, {t2, t3, t4}, {t3, t1, t4}}};
  for (int i = 0; i < 3; ++i) {
    const auto& f = faces[i];
    insert_copy(ht, f, hc, s1, *std::min_element(f.begin(), f.end()),
                "h" + std::to_string(i + 1) + ".");
  }
  return ht;
}

EmbeddedGraph build_family(const FamilySpec& spec) {
  switch (spec.family) {
    case Family::frame: return build_frame(spec.d);
    case Family::G: return build_G(spec.c, spec.d);
    case Family::H: return build_H(spec.c, spec.d);
    case Family::Htilde: return build_Htilde(spec.c, spec.d);
  }
  throw ParameterError("unknown family");
}

long long g_vertex_count(int c, int d) {
  require_positive(c, "c");
  require_positive(d, "d");
  const long long base = 2LL * d + 3;
  return c == 1 ? base : base + 2LL * (d - 1) * (g_vertex_count(c - 1, d) - 3);
}

EpsilonMapping epsilon_to_c(double epsilon) {
  if (!(epsilon > 0.0)) throw ParameterError("epsilon must be positive");
  // Equivalent to c = max(2, 2 - floor(log_3(2 eps))) but decided on the
  // exponent itself, so exponent <= eps holds bit-for-bit.
  EpsilonMapping m;
  double power = 1.0;  // 3^(c-2)
  while (1.0 / (2.0 * power) > epsilon && m.c < 1000) {
    ++m.c;
    power *= 3.0;
  }
  m.exponent = 1.0 / (2.0 * power);
  return m;
}

}  // namespace angres
