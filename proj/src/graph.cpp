#include "angres/graph.hpp"

#include <algorithm>
#include <cstdint>
#include <unordered_map>

#include "angres/errors.hpp"

namespace angres {

LabeledGraph::LabeledGraph(int vertex_count) {
  if (vertex_count < 0) throw ParameterError("negative vertex count");
  adjacency_.resize(vertex_count);
}

Vertex LabeledGraph::add_vertex() {
  adjacency_.emplace_back();
  return vertex_count() - 1;
}

bool LabeledGraph::add_edge(Vertex a, Vertex b) {
  if (a < 0 || b < 0 || a >= vertex_count() || b >= vertex_count())
    throw StructuralError("edge endpoint out of range: " + std::to_string(a) + " " +
                          std::to_string(b));
  if (a == b) throw StructuralError("self-loop at vertex " + std::to_string(a));
  if (has_edge(a, b)) return false;
  adjacency_[a].push_back(b);
  adjacency_[b].push_back(a);
  ++edge_count_;
  return true;
}

bool LabeledGraph::has_edge(Vertex a, Vertex b) const {
  const auto& na = adjacency_[a].size() <= adjacency_[b].size() ? adjacency_[a] : adjacency_[b];
  const Vertex other = &na == &adjacency_[a] ? b : a;
  return std::find(na.begin(), na.end(), other) != na.end();
}

std::vector<Edge> LabeledGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex v = 0; v < vertex_count(); ++v)
    for (Vertex u : adjacency_[v])
      if (v < u) out.emplace_back(v, u);
  std::sort(out.begin(), out.end());
  return out;
}

void LabeledGraph::set_label(Vertex v, std::string name) {
  if (v < 0 || v >= vertex_count())
    throw StructuralError("label on missing vertex " + std::to_string(v));
  if (auto it = by_label_.find(name); it != by_label_.end() && it->second != v)
    throw StructuralError("duplicate label '" + name + "'");
  if (auto old = labels_.find(v); old != labels_.end()) by_label_.erase(old->second);
  by_label_[name] = v;
  labels_[v] = std::move(name);
}

std::optional<Vertex> LabeledGraph::find(std::string_view name) const {
  if (auto it = by_label_.find(std::string(name)); it != by_label_.end()) return it->second;
  return std::nullopt;
}

int max_degree(const LabeledGraph& graph) {
  int best = 0;
  for (Vertex v = 0; v < graph.vertex_count(); ++v) best = std::max(best, graph.degree(v));
  return best;
}

void check_rotation(const LabeledGraph& graph, const Rotation& rotation) {
  if (static_cast<int>(rotation.size()) != graph.vertex_count())
    throw StructuralError("rotation covers " + std::to_string(rotation.size()) +
                          " vertices, graph has " + std::to_string(graph.vertex_count()));
  for (Vertex v = 0; v < graph.vertex_count(); ++v) {
    std::vector<Vertex> a = rotation[v];
    std::vector<Vertex> b = graph.neighbors(v);
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b)
      throw StructuralError("rotation at vertex " + std::to_string(v) +
                            " does not match its incident edges");
  }
}

namespace {

std::uint64_t key(Vertex a, Vertex b) {
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(a)) << 32) |
         static_cast<std::uint32_t>(b);
}

bool cyclic_equal(const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
  if (a.size() != b.size()) return false;
  if (a.empty()) return true;
  auto it = std::find(b.begin(), b.end(), a.front());
  if (it == b.end()) return false;
  const std::size_t off = static_cast<std::size_t>(it - b.begin());
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[(i + off) % b.size()]) return false;
  return true;
}

void insert_after(std::vector<Vertex>& ring, Vertex after, Vertex v) {
  auto it = std::find(ring.begin(), ring.end(), after);
  ring.insert(it + 1, v);
}

}  // namespace

std::vector<Face> trace_faces(const LabeledGraph& graph, const Rotation& rotation) {
  check_rotation(graph, rotation);
  std::unordered_map<std::uint64_t, int> position;  // (v, u) -> index of u in rotation[v]
  position.reserve(2 * static_cast<std::size_t>(graph.edge_count()));
  for (Vertex v = 0; v < graph.vertex_count(); ++v)
    for (int i = 0; i < static_cast<int>(rotation[v].size()); ++i)
      position[key(v, rotation[v][i])] = i;

  std::unordered_map<std::uint64_t, bool> used;
  used.reserve(position.size());
  std::vector<Face> faces;
  for (Vertex s = 0; s < graph.vertex_count(); ++s) {
    for (Vertex t : rotation[s]) {
      if (used[key(s, t)]) continue;
      Face face;
      Vertex u = s, v = t;
      while (!used[key(u, v)]) {
        used[key(u, v)] = true;
        face.push_back(u);
        const auto& ring = rotation[v];
        const int i = position.at(key(v, u));
        const Vertex w = ring[(i + 1) % ring.size()];
        u = v;
        v = w;
      }
      if (u != s || v != t)
        throw StructuralError("face walk from vertex " + std::to_string(s) + " does not close");
      faces.push_back(std::move(face));
    }
  }
  return faces;
}

std::optional<Vertex> rotation_successor(const Rotation& rotation, Vertex around, Vertex v) {
  const auto& ring = rotation[around];
  auto it = std::find(ring.begin(), ring.end(), v);
  if (it == ring.end()) return std::nullopt;
  ++it;
  return it == ring.end() ? ring.front() : *it;
}

namespace {

bool is_traced_triangle(const Rotation& rotation, Vertex a, Vertex b, Vertex c) {
  return rotation_successor(rotation, b, a) == c && rotation_successor(rotation, c, b) == a &&
         rotation_successor(rotation, a, c) == b;
}

bool is_outer(const Face& outer, const std::array<Vertex, 3>& f) {
  return cyclic_equal(outer, std::vector<Vertex>(f.begin(), f.end()));
}

// Inner faces first; the outer face only if nothing else matches.
std::optional<std::array<Vertex, 3>> locate_face(const Embedding& emb, Vertex a, Vertex b,
                                                 Vertex c, bool allow_outer) {
  std::optional<std::array<Vertex, 3>> outer_match;
  for (const auto& f : {std::array<Vertex, 3>{a, b, c}, std::array<Vertex, 3>{a, c, b}}) {
    if (!is_traced_triangle(emb.rotation, f[0], f[1], f[2])) continue;
    if (!is_outer(emb.outer, f)) return f;
    outer_match = f;
  }
  return allow_outer ? outer_match : std::nullopt;
}

}  // namespace

std::optional<std::array<Vertex, 3>> find_triangular_face(const Rotation& rotation, Vertex a,
                                                          Vertex b, Vertex c) {
  if (is_traced_triangle(rotation, a, b, c)) return std::array<Vertex, 3>{a, b, c};
  if (is_traced_triangle(rotation, a, c, b)) return std::array<Vertex, 3>{a, c, b};
  return std::nullopt;
}

std::optional<std::array<Vertex, 3>> find_inner_face(const Embedding& embedding, Vertex a,
                                                     Vertex b, Vertex c) {
  return locate_face(embedding, a, b, c, false);
}

void insert_into_face(EmbeddedGraph& host, Vertex v, const std::array<Vertex, 3>& f) {
  auto& rot = host.embedding.rotation;
  if (static_cast<int>(rot.size()) < host.graph.vertex_count())
    rot.resize(host.graph.vertex_count());
  const auto [a, b, c] = f;
  if (!is_traced_triangle(rot, a, b, c))
    throw StructuralError("insert_into_face: (" + std::to_string(a) + "," + std::to_string(b) +
                          "," + std::to_string(c) + ") is not a face");
  if (!rot[v].empty()) throw StructuralError("insert_into_face: vertex already placed");
  insert_after(rot[b], a, v);
  insert_after(rot[c], b, v);
  insert_after(rot[a], c, v);
  rot[v] = {c, b, a};
  host.graph.add_edge(v, a);
  host.graph.add_edge(v, b);
  host.graph.add_edge(v, c);
}

namespace {

struct Elimination {
  std::array<Vertex, 3> remaining{};
  std::vector<Insertion> removed;  // in removal order
};

Elimination eliminate(const LabeledGraph& graph, const std::vector<bool>& keep) {
  const int n = graph.vertex_count();
  std::vector<std::vector<Vertex>> adj(n);
  for (Vertex v = 0; v < n; ++v) adj[v] = graph.neighbors(v);
  std::vector<bool> alive(n, true);
  auto linked = [&](Vertex x, Vertex y) {
    return std::find(adj[x].begin(), adj[x].end(), y) != adj[x].end();
  };
  auto eligible = [&](Vertex v) {
    if (!alive[v] || keep[v] || adj[v].size() != 3) return false;
    const auto& nb = adj[v];
    return linked(nb[0], nb[1]) && linked(nb[1], nb[2]) && linked(nb[0], nb[2]);
  };

  Elimination out;
  std::vector<Vertex> stack(n);
  for (Vertex v = 0; v < n; ++v) stack[v] = v;
  int left = n;
  while (left > 3 && !stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    if (!eligible(v)) continue;
    const auto nb = adj[v];
    out.removed.push_back({v, {nb[0], nb[1], nb[2]}});
    alive[v] = false;
    --left;
    for (Vertex u : nb) {
      adj[u].erase(std::find(adj[u].begin(), adj[u].end(), v));
      stack.push_back(u);
    }
    adj[v].clear();
  }
  if (left > 3) {
    int min_deg = n, stuck = -1;
    for (Vertex v = 0; v < n; ++v)
      if (alive[v] && !keep[v] && static_cast<int>(adj[v].size()) < min_deg) {
        min_deg = static_cast<int>(adj[v].size());
        stuck = v;
      }
    throw StructuralError("not a 3-tree: stuck with " + std::to_string(left) +
                          " vertices left, no simplicial degree-3 vertex (vertex " +
                          std::to_string(stuck) + " has degree " + std::to_string(min_deg) + ")");
  }
  int k = 0;
  for (Vertex v = 0; v < n; ++v)
    if (alive[v]) out.remaining[k++] = v;
  const auto& r = out.remaining;
  if (!(linked(r[0], r[1]) && linked(r[1], r[2]) && linked(r[0], r[2])))
    throw StructuralError("not a 3-tree: remaining vertices do not form a triangle");
  return out;
}

EmbeddedGraph replay_impl(const BuildSequence& seq, int n, bool permissive) {
  EmbeddedGraph out{LabeledGraph(n), Embedding{Rotation(n), {}}};
  const auto [a, b, c] = seq.base;
  out.graph.add_edge(a, b);
  out.graph.add_edge(b, c);
  out.graph.add_edge(a, c);
  out.embedding.rotation[a] = {c, b};
  out.embedding.rotation[b] = {a, c};
  out.embedding.rotation[c] = {b, a};
  out.embedding.outer = {a, c, b};
  for (const auto& step : seq.steps) {
    const auto [x, y, z] = step.face;
    auto face = locate_face(out.embedding, x, y, z, permissive);
    if (!face) {
      if (locate_face(out.embedding, x, y, z, true))
        throw StructuralError("not planar: base triangle is not a face (insertion of vertex " +
                              std::to_string(step.vertex) + " needs the outer face)");
      throw StructuralError("not planar: triangle (" + std::to_string(x) + "," +
                            std::to_string(y) + "," + std::to_string(z) +
                            ") is not a face when inserting vertex " +
                            std::to_string(step.vertex));
    }
    const bool into_outer = is_outer(out.embedding.outer, *face);
    insert_into_face(out, step.vertex, *face);
    if (into_outer) out.embedding.outer = {(*face)[0], (*face)[1], step.vertex};
  }
  return out;
}

BuildSequence sequence_from(const Elimination& e, std::array<Vertex, 3> base) {
  BuildSequence seq;
  seq.base = base;
  seq.steps.assign(e.removed.rbegin(), e.removed.rend());
  return seq;
}

}  // namespace

BuildSequence verify_planar_3tree(const LabeledGraph& graph,
                                  std::optional<std::array<Vertex, 3>> base) {
  const int n = graph.vertex_count();
  if (n < 3) throw StructuralError("not a 3-tree: fewer than 3 vertices");
  std::vector<bool> keep(n, false);
  if (!base) {
    // First pass finds some elimination; its replay yields a face to anchor on.
    const Elimination first = eliminate(graph, keep);
    const EmbeddedGraph trial = replay_impl(sequence_from(first, first.remaining), n, true);
    base = interior_orientation(trial.embedding.outer);
  }
  for (Vertex v : *base) {
    if (v < 0 || v >= n) throw StructuralError("base vertex out of range");
    keep[v] = true;
  }
  const auto [a, b, c] = *base;
  if (!(graph.has_edge(a, b) && graph.has_edge(b, c) && graph.has_edge(a, c)))
    throw StructuralError("not a 3-tree: base is not a triangle of the graph");
  const Elimination elim = eliminate(graph, keep);
  BuildSequence seq = sequence_from(elim, *base);
  const EmbeddedGraph rebuilt = replay_impl(seq, n, false);
  if (rebuilt.graph.edge_count() != graph.edge_count())
    throw StructuralError("not a 3-tree: edge count mismatch after replay");
  return seq;
}

EmbeddedGraph replay(const BuildSequence& sequence, int vertex_count) {
  return replay_impl(sequence, vertex_count, false);
}

bool same_rotation(const Rotation& a, const Rotation& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t v = 0; v < a.size(); ++v)
    if (!cyclic_equal(a[v], b[v])) return false;
  return true;
}

std::array<Vertex, 3> interior_orientation(const Face& outer) {
  if (outer.size() != 3) throw StructuralError("outer face is not a triangle");
  return {outer[0], outer[2], outer[1]};
}

}  // namespace angres
