#pragma once

#include <string>
#include <vector>

#include <Eigen/Core>

#include "angres/families.hpp"
#include "angres/graph.hpp"

namespace angres {

/// Column v holds the position of vertex v.
using Drawing = Eigen::Matrix2Xd;

enum class ViolationKind { size_mismatch, coincident_points, crossing, flipped_face, rotation_mismatch };

struct Violation {
  ViolationKind kind;
  std::vector<Vertex> where;  // offending vertices (edge endpoints, face cycle, ...)
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

/// Straight-line planarity only: distinct points, no crossing or touching of
/// non-adjacent edges, no overlap of adjacent edges. Exact predicates.
ValidationReport check_planarity(const LabeledGraph& graph, const Drawing& drawing);

/// Planarity plus realization of the embedding: bounded faces counterclockwise,
/// outer face clockwise, clockwise neighbor order matching the rotation.
ValidationReport validate_drawing(const LabeledGraph& graph, const Embedding& embedding,
                                  const Drawing& drawing);

/// All faces positively oriented (outer negatively), exact; cheap O(F) gate
/// for triangulated drawings.
bool faces_oriented(const LabeledGraph& graph, const Embedding& embedding, const Drawing& drawing);

struct AngleWitness {
  Vertex vertex = -1;
  Vertex from = -1;  // the angle sweeps clockwise from `from` to `to`
  Vertex to = -1;
};

struct AngleReport {
  /// Neighbors of each vertex in realized clockwise order, starting at the
  /// smallest neighbor index.
  std::vector<std::vector<Vertex>> order;
  /// angles[v][i]: clockwise angle from order[v][i] to order[v][i+1] (cyclic).
  std::vector<std::vector<double>> angles;
  double resolution = 0.0;
  AngleWitness witness;
};

/// Consecutive angles around every vertex of degree >= 2 and their minimum.
/// Ties resolve to the smallest vertex, then the earliest position in order.
/// Throws DegenerateInput on a zero-length edge.
AngleReport angular_resolution(const LabeledGraph& graph, const Drawing& drawing);

/// Composite angles at the root of a frame, each a sum of consecutive angles.
/// Index i of alpha1/alpha2/alpha3/ratio corresponds to k = i + 2.
struct FrameProfile {
  int depth = 0;
  std::vector<double> alpha1;  // v_{k-1} w v_k
  std::vector<double> alpha2;  // u_k w v_{k-1}
  std::vector<double> alpha3;  // v_1 w v_{k-1}
  std::vector<double> ratio;   // alpha3 / alpha1
  double apex_v = 0.0;         // v_1 w v_D
  double apex_uv = 0.0;        // u_D w v_D
};

FrameProfile frame_profile(const LabeledGraph& graph, const FrameRoles& roles,
                           const Drawing& drawing);
/// Roles read from the graph's labels; throws StructuralError when missing.
FrameProfile frame_profile(const LabeledGraph& graph, const Drawing& drawing);

/// prod_{k=3}^{D} r_k / (1 + r_k); equals alpha_{2,1} / apex_v.
double telescoping_product(const FrameProfile& profile);

struct ClaimQuantities {
  int j = 0;
  double alpha1_prime = 0.0;
  double alpha2_prime = 0.0;
  bool averaging_bound_holds = false;  // alpha1' <= 2/(D+2) * apex_uv (+1e-9)
};

/// j = argmin_{k = max(2, ceil(D/2)) .. D} alpha_{k,1}, smallest k on ties
/// (values within 1e-12 of the minimum).
ClaimQuantities claim_quantities(const FrameProfile& profile);
ClaimQuantities claim_quantities(const LabeledGraph& graph, const Drawing& drawing);

}  // namespace angres
