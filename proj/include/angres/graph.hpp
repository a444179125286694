#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace angres {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;  // always first < second
using Face = std::vector<Vertex>;        // cyclic vertex sequence
using Rotation = std::vector<std::vector<Vertex>>;  // clockwise neighbor order per vertex

/// Simple undirected graph on dense vertex indices with optional role labels.
/// Edges have set semantics: inserting an existing edge is a no-op.
class LabeledGraph {
 public:
  LabeledGraph() = default;
  explicit LabeledGraph(int vertex_count);

  int vertex_count() const { return static_cast<int>(adjacency_.size()); }
  int edge_count() const { return edge_count_; }

  Vertex add_vertex();
  /// Returns false when the edge already exists. Self-loops and out-of-range
  /// endpoints throw StructuralError.
  bool add_edge(Vertex a, Vertex b);
  bool has_edge(Vertex a, Vertex b) const;
  int degree(Vertex v) const { return static_cast<int>(adjacency_[v].size()); }
  const std::vector<Vertex>& neighbors(Vertex v) const { return adjacency_[v]; }

  /// Lexicographically sorted edge list.
  std::vector<Edge> edges() const;

  void set_label(Vertex v, std::string name);
  std::optional<Vertex> find(std::string_view name) const;
  const std::map<Vertex, std::string>& labels() const { return labels_; }

  friend bool operator==(const LabeledGraph& a, const LabeledGraph& b) {
    return a.vertex_count() == b.vertex_count() && a.edges() == b.edges() &&
           a.labels_ == b.labels_;
  }

 private:
  std::vector<std::vector<Vertex>> adjacency_;  // insertion order, not sorted
  int edge_count_ = 0;
  std::map<Vertex, std::string> labels_;
  std::unordered_map<std::string, Vertex> by_label_;
};

/// Rotation system plus a designated outer face. Faces are traced so that
/// bounded faces come out counterclockwise and the outer face clockwise.
struct Embedding {
  Rotation rotation;
  Face outer;

  friend bool operator==(const Embedding&, const Embedding&) = default;
};

/// A graph with its (fixed) embedding.
struct EmbeddedGraph {
  LabeledGraph graph;
  Embedding embedding;
};

struct Insertion {
  Vertex vertex;
  std::array<Vertex, 3> face;
};

/// Construction certificate of a planar 3-tree: start from `base` (drawn with
/// counterclockwise interior orientation base[0], base[1], base[2]) and insert
/// each vertex into the listed triangle.
struct BuildSequence {
  std::array<Vertex, 3> base{};
  std::vector<Insertion> steps;
};

int max_degree(const LabeledGraph& graph);

/// Checks that `rotation` lists exactly the incident edges of every vertex.
/// Throws StructuralError naming the first offending vertex.
void check_rotation(const LabeledGraph& graph, const Rotation& rotation);

/// Face walk of the rotation system. Every directed edge lies on exactly one
/// returned face. Throws StructuralError if the rotation does not match the graph.
std::vector<Face> trace_faces(const LabeledGraph& graph, const Rotation& rotation);

/// The vertex following `v` clockwise around `around`, or nullopt if `v` is
/// not a neighbor in the rotation.
std::optional<Vertex> rotation_successor(const Rotation& rotation, Vertex around, Vertex v);

/// If {a, b, c} bounds a face, returns it in traced orientation starting at a.
std::optional<std::array<Vertex, 3>> find_triangular_face(const Rotation& rotation, Vertex a,
                                                          Vertex b, Vertex c);

/// Like find_triangular_face, but never returns the embedding's outer face.
std::optional<std::array<Vertex, 3>> find_inner_face(const Embedding& embedding, Vertex a,
                                                     Vertex b, Vertex c);

/// Adds `v` (a fresh isolated vertex) inside the face traced as (a, b, c),
/// joining it to all three corners and updating the rotation system.
void insert_into_face(EmbeddedGraph& host, Vertex v, const std::array<Vertex, 3>& traced_face);

/// Simplicial elimination of degree-3 vertices; the planarity half is checked
/// by replaying the sequence into a rotation system. When `base` is given it
/// must bound a face and is kept until the end. Throws StructuralError with
/// "not a 3-tree" or "not planar" in the message.
BuildSequence verify_planar_3tree(const LabeledGraph& graph,
                                  std::optional<std::array<Vertex, 3>> base = std::nullopt);

/// Rebuilds the graph and its embedding from a build sequence. The outer face
/// is (base[0], base[2], base[1]).
EmbeddedGraph replay(const BuildSequence& sequence, int vertex_count);

/// Cyclic-rotation equality of two rotation systems.
bool same_rotation(const Rotation& a, const Rotation& b);

/// Outer face of `embedding` reversed, i.e. the base triangle a build
/// sequence needs to reproduce this embedding.
std::array<Vertex, 3> interior_orientation(const Face& outer);

}  // namespace angres
