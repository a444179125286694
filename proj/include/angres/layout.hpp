#pragma once

#include <array>
#include <cstdint>
#include <numbers>

#include "angres/families.hpp"
#include "angres/geometry.hpp"
#include "angres/graph.hpp"
#include "angres/metrics.hpp"

namespace angres {

struct LayoutConfig {
  double apex_angle = std::numbers::pi / 3;  // total angle allotted at a root
  double ring_ratio = 2.0;                   // radial growth per frame ring
  std::uint64_t seed = 0;                    // reserved for jittered variants
};

void validate_config(const LayoutConfig& config);

/// F_d with w at the origin and the rings opening upwards: u_k and v_k sit at
/// angles +-(2k-1)/(2d) * apex/3 from the vertical, radius ring_ratio^k, so
/// consecutive rays from w are apex/(3d) apart.
Drawing layout_frame_fan(int d, const LayoutConfig& config = {});

/// Drawing of any family graph (frame, G, H, H~) that mirrors its recursive
/// construction: every frame is a fan filling its host triangle exactly
/// (outermost rays on the triangle sides, ring k at radius
/// ring_ratio^((k-D)/D) relative to the corners), placed by an affine map;
/// K4 hubs sit at the centroid. Vertex indices match build_family(spec).
Drawing layout_structured(const FamilySpec& spec, const LayoutConfig& config = {});

/// H~^(1)_d drawn by layout_structured: equilateral t1 t2 t3, t4 at the centroid.
Drawing layout_htilde1(int d, const LayoutConfig& config = {});

enum class SeedPlacement {
  balanced,  // barycentric weights proportional to the faces each sub-triangle ends up with
  centroid,  // plain centroid insertion
};

/// Replays the build sequence inside the unit-circumradius equilateral triangle
/// (base[0], base[1], base[2] counterclockwise). Throws std::logic_error if two
/// points coincide (double precision exhausted).
Drawing layout_seed_any(const LabeledGraph& graph, const BuildSequence& sequence,
                        SeedPlacement placement = SeedPlacement::balanced);

/// Counterclockwise equilateral triangle of circumradius 1 centred at the origin.
std::array<Point, 3> pinned_triangle();

}  // namespace angres
