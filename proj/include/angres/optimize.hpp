#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "angres/families.hpp"
#include "angres/graph.hpp"
#include "angres/layout.hpp"
#include "angres/metrics.hpp"

namespace angres {

struct OptimizeConfig {
  int restarts = 16;
  int max_iters = 5000;          // per restart, summed over all stages
  std::uint64_t seed = 42;
  int stages = 6;                // sharpness / penalty continuation steps
  double sharpness_initial = 16.0;  // soft-min beta = sharpness / current min angle
  double sharpness_growth = 2.0;
  double penalty_initial = 1.0;
  double penalty_growth = 10.0;
  double tolerance = 1e-8;       // relative objective change that ends a stage
  double jitter = 0.05;          // seed displacement, fraction of nearest-neighbor distance
  std::array<Point, 3> pin = pinned_triangle();
  int threads = 0;               // 0: hardware concurrency
};

void validate_config(const OptimizeConfig& config);

/// Soft-min of all inner-face corner angles minus a face-orientation penalty,
/// as a function of the flattened coordinates x = (x0, y0, x1, y1, ...).
/// Corner angles are signed, so a flipped face contributes negative angles.
/// Gradient entries of pinned vertices are zero.
class SoftMinObjective {
 public:
  SoftMinObjective(const LabeledGraph& graph, const Embedding& embedding);

  void set_sharpness(double beta) { beta_ = beta; }
  void set_penalty(double weight, double margin, double area_scale);
  void pin(const std::vector<Vertex>& vertices);

  double beta() const { return beta_; }
  int corner_count() const { return 3 * static_cast<int>(faces_.size()); }

  /// Objective value; `grad` (resized as needed) receives its gradient and
  /// `flipped` the number of inner faces with non-positive area.
  double evaluate(const Eigen::VectorXd& x, Eigen::VectorXd* grad, int* flipped = nullptr) const;
  double min_angle(const Eigen::VectorXd& x) const;
  /// Number of inner faces with non-positive signed area (floating point).
  int flipped_faces(const Eigen::VectorXd& x) const;
  const std::vector<std::array<Vertex, 3>>& faces() const { return faces_; }

 private:
  std::vector<std::array<Vertex, 3>> faces_;  // counterclockwise inner faces
  std::vector<char> pinned_;
  double beta_ = 10.0;
  double penalty_ = 0.0;
  double margin_ = 0.0;
  double area_scale_ = 1.0;
};

Eigen::VectorXd flatten(const Drawing& drawing);
Drawing unflatten(const Eigen::VectorXd& x);

struct RestartTrace {
  double objective = 0.0;  // final soft-min value
  double resolution = 0.0; // best measured resolution of the restart (0 when invalid)
  int iterations = 0;
  bool valid = false;
};

struct OptimizeResult {
  Drawing best;
  double resolution = 0.0;
  int best_restart = -1;
  std::vector<RestartTrace> traces;
  std::uint64_t seed = 0;
};

/// No restart produced a valid drawing.
struct OptimizationFailure : std::runtime_error {
  OptimizationFailure(const std::string& what, std::vector<RestartTrace> traces)
      : std::runtime_error(what), traces(std::move(traces)) {}
  std::vector<RestartTrace> traces;
};

/// Seed drawing for one restart: balanced build-sequence replay on the pinned
/// triangle plus jitter drawn from (seed, restart). Restart 0 is not jittered.
Drawing restart_seed(const LabeledGraph& graph, const Embedding& embedding,
                     const OptimizeConfig& config, int restart);

/// Maximizes the angular resolution of a maximal planar 3-tree drawing with
/// the given embedding and its outer face pinned. Deterministic in
/// (graph, embedding, config); restarts may run concurrently.
OptimizeResult maximize_resolution(const LabeledGraph& graph, const Embedding& embedding,
                                   const OptimizeConfig& config);

struct SweepRecord {
  FamilySpec spec;
  int vertices = 0;
  int edges = 0;
  int max_degree = 0;
  double best_resolution = 0.0;
  int restarts = 0;
  int valid_restarts = 0;
  std::uint64_t seed = 0;
  double runtime_s = 0.0;
};

/// Builds, optimizes and records each spec in input order. A row whose
/// optimization fails keeps best_resolution = 0 and valid_restarts = 0.
std::vector<SweepRecord> sweep(const std::vector<FamilySpec>& specs, const OptimizeConfig& config,
                               bool record_runtime = true);

/// Header: family,c,d,vertices,edges,max_degree,best_resolution,restarts,valid_restarts,seed,runtime_s
std::string sweep_csv(const std::vector<SweepRecord>& records);
std::vector<SweepRecord> parse_sweep_csv(const std::string& text);

/// Lines `<family> <c> <d>[,<d>...]`; `#` starts a comment. Frames ignore c.
std::vector<FamilySpec> parse_sweep_spec(const std::string& text);

struct ExponentFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r2 = 0.0;
};

/// Least squares of log(best_resolution) against log(d) over rows matching
/// (family, c). Throws ParameterError with fewer than 3 rows or a
/// non-positive resolution.
ExponentFit fit_exponent(const std::vector<SweepRecord>& records, Family family, int c);

}  // namespace angres
