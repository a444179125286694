#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "angres/graph.hpp"

namespace angres {

enum class Family { frame, G, H, Htilde };

/// CLI-facing names: frame, g, h, htilde.
std::string_view family_name(Family f);
Family parse_family(std::string_view name);

struct FamilySpec {
  Family family = Family::frame;
  int c = 1;  // ignored for frames
  int d = 1;
};

/// Root and chain indices of a frame graph. u[k-1] is u_k.
struct FrameRoles {
  Vertex root = -1;
  std::vector<Vertex> u;
  std::vector<Vertex> v;

  int depth() const { return static_cast<int>(u.size()); }
};

/// Reads the unprefixed labels "w", "u1".."uD", "v1".."vD"; nullopt when any is missing.
std::optional<FrameRoles> frame_roles(const LabeledGraph& graph);

/// The d-frame graph with its nested-triangle embedding, outer face (w, u_d, v_d).
/// Vertex indices: w = 0, u_k = k, v_k = d + k.
EmbeddedGraph build_frame(int d);

/// Glues `copy` into the triangular face {a, b, c} of `host`, identifying the
/// copy's outer triangle with the face. `copy_root` goes to `root_target`; the
/// copy corner following the root counterclockwise on the copy's boundary goes
/// to the face vertex following `root_target` counterclockwise. Interior copy
/// vertices are appended in copy order; their labels get `label_prefix`
/// (dropped when the prefix is empty).
void insert_copy(EmbeddedGraph& host, const std::array<Vertex, 3>& face, const EmbeddedGraph& copy,
                 Vertex copy_root, Vertex root_target, std::string_view label_prefix = {});

/// G^(c)_d: the (d+1)-frame, recursively filled with copies of G^(c-1)_d.
EmbeddedGraph build_G(int c, int d);

/// H^(c)_d: K4 on s1..s4 with a copy of G^(c)_d in each inner face; outer face s1 s2 s3.
EmbeddedGraph build_H(int c, int d);

/// H~^(c)_d: K4 on t1..t4 with a copy of H^(c)_d in each inner face.
EmbeddedGraph build_Htilde(int c, int d);

EmbeddedGraph build_family(const FamilySpec& spec);

/// Vertex count of G^(c)_d from the recurrence N(1,d) = 2d+3,
/// N(c,d) = (2d+3) + 2(d-1)(N(c-1,d) - 3).
long long g_vertex_count(int c, int d);

struct EpsilonMapping {
  int c = 2;
  double exponent = 0.5;  // 1 / (2 * 3^(c-2))
};

/// Smallest c >= 2 whose exponent 1/(2*3^(c-2)) does not exceed epsilon,
/// i.e. c = max(2, 2 - floor(log_3(2*epsilon))).
EpsilonMapping epsilon_to_c(double epsilon);

}  // namespace angres
