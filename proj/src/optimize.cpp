#include "angres/optimize.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <deque>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>
#include <thread>

#include <Eigen/LU>
#include <Eigen/QR>

#include "angres/errors.hpp"
#include "angres/geometry.hpp"
#include "angres/predicates.hpp"

namespace angres {

void validate_config(const OptimizeConfig& config) {
  if (config.restarts < 1) throw ParameterError("restarts must be at least 1");
  if (config.max_iters < 1) throw ParameterError("max_iters must be at least 1");
  if (config.stages < 1) throw ParameterError("stages must be at least 1");
  if (!(config.tolerance > 0.0)) throw ParameterError("tolerance must be positive");
  if (!(config.sharpness_initial > 0.0) || !(config.sharpness_growth >= 1.0))
    throw ParameterError("sharpness schedule must start positive and not shrink");
  if (!(config.penalty_initial > 0.0) || !(config.penalty_growth >= 1.0))
    throw ParameterError("penalty schedule must start positive and not shrink");
  if (!(config.jitter >= 0.0) || !(config.jitter < 0.5))
    throw ParameterError("jitter must lie in [0, 0.5)");
  if (config.threads < 0) throw ParameterError("threads must be non-negative");
  const auto& p = config.pin;
  if (orient2d(p[0], p[1], p[2]) <= 0)
    throw ParameterError("pinned triangle must be non-degenerate and counterclockwise");
}

SoftMinObjective::SoftMinObjective(const LabeledGraph& graph, const Embedding& embedding)
    : pinned_(graph.vertex_count(), 0) {
  for (const Face& f : trace_faces(graph, embedding.rotation)) {
    if (f.size() != 3) throw StructuralError("embedding has a non-triangular face");
    std::array<Vertex, 3> t{f[0], f[1], f[2]};
    std::array<Vertex, 3> sorted = t;
    std::array<Vertex, 3> outer{};
    if (embedding.outer.size() == 3) std::copy_n(embedding.outer.begin(), 3, outer.begin());
    std::sort(sorted.begin(), sorted.end());
    std::sort(outer.begin(), outer.end());
    if (sorted == outer) {
      // Outer face: only skipped when it is traced the same way round.
      const auto& o = embedding.outer;
      bool same = false;
      for (int s = 0; s < 3; ++s)
        same = same || (t[0] == o[s] && t[1] == o[(s + 1) % 3] && t[2] == o[(s + 2) % 3]);
      if (same) continue;
    }
    faces_.push_back(t);
  }
}

void SoftMinObjective::set_penalty(double weight, double margin, double area_scale) {
  penalty_ = weight;
  margin_ = margin;
  area_scale_ = area_scale;
}

void SoftMinObjective::pin(const std::vector<Vertex>& vertices) {
  for (Vertex v : vertices) pinned_.at(v) = 1;
}

double SoftMinObjective::evaluate(const Eigen::VectorXd& x, Eigen::VectorXd* grad, int* flipped) const {
  // Corners whose weight exp(-beta (theta - min)) is below e^-60 are dropped;
  // a cheap sine bound finds them without calling atan2.
  constexpr double kCut = 60.0;
  struct Corner {
    Vertex p, n, q;
    double weight, gux, guy, gvx, gvy;
  };
  const std::size_t nf = faces_.size();
  thread_local std::vector<double> areas;
  thread_local std::vector<Corner> active;
  areas.resize(nf);
  active.clear();
  if (flipped) *flipped = 0;
  if (grad) grad->setZero(x.size());
  if (nf == 0) return 0.0;

  auto edges = [&](std::size_t f, double* ex, double* ey, double* ee) {
    const auto& t = faces_[f];
    for (int i = 0; i < 3; ++i) {
      const Vertex a = t[i], b = t[(i + 1) % 3];
      ex[i] = x[2 * b] - x[2 * a];
      ey[i] = x[2 * b + 1] - x[2 * a + 1];
      ee[i] = ex[i] * ex[i] + ey[i] * ey[i];
    }
    return ex[0] * ey[1] - ey[0] * ex[1];
  };

  // Pass 1: an upper estimate of the smallest angle.
  double estimate = std::numeric_limits<double>::infinity();
  double min_s2 = std::numeric_limits<double>::infinity();
  for (std::size_t f = 0; f < nf; ++f) {
    double ex[3], ey[3], ee[3];
    const double a2 = edges(f, ex, ey, ee);
    areas[f] = 0.5 * a2;
    if (!(a2 > 0.0)) {
      if (flipped) ++*flipped;
      for (int i = 0; i < 3; ++i) {
        const int k = (i + 2) % 3;
        estimate = std::min(estimate, std::atan2(a2, -(ex[i] * ex[k] + ey[i] * ey[k])));
      }
      continue;
    }
    for (int i = 0; i < 3; ++i) {
      const int k = (i + 2) % 3;
      if (-(ex[i] * ex[k] + ey[i] * ey[k]) > 0.0) min_s2 = std::min(min_s2, a2 * a2 / (ee[i] * ee[k]));
    }
  }
  if (min_s2 <= 1.0) estimate = std::min(estimate, std::asin(std::sqrt(min_s2)));
  const double cut = estimate + kCut / beta_;
  const double s2_cut = cut < std::numbers::pi / 2 ? std::pow(std::sin(cut), 2) : 2.0;

  // Pass 2: exact angles of the corners that can matter.
  double tmin = std::numeric_limits<double>::infinity();
  for (std::size_t f = 0; f < nf; ++f) {
    double ex[3], ey[3], ee[3];
    const double a2 = edges(f, ex, ey, ee);
    const auto& t = faces_[f];
    for (int i = 0; i < 3; ++i) {
      const int k = (i + 2) % 3;  // edge k ends at corner i, so v = -e[k]
      const double vx = -ex[k], vy = -ey[k];
      const double dot = ex[i] * vx + ey[i] * vy;
      if (a2 > 0.0 && s2_cut <= 1.0 && (dot <= 0.0 || a2 * a2 / (ee[i] * ee[k]) > s2_cut)) continue;
      Corner c{t[i], t[(i + 1) % 3], t[k], std::atan2(a2, dot), ey[i] / ee[i], -ex[i] / ee[i],
               -vy / ee[k], vx / ee[k]};
      tmin = std::min(tmin, c.weight);
      active.push_back(c);
    }
  }

  double z = 0.0;
  for (Corner& c : active) {
    c.weight = std::exp(-beta_ * (c.weight - tmin));
    z += c.weight;
  }
  double value = tmin - std::log(z) / beta_;

  for (std::size_t f = 0; f < nf; ++f) {
    const double short_by = (margin_ - areas[f]) / area_scale_;
    if (short_by <= 0.0) continue;
    value -= penalty_ * short_by * short_by;
    if (!grad) continue;
    const auto& t = faces_[f];
    const double ax = x[2 * t[0]], ay = x[2 * t[0] + 1];
    const double bx = x[2 * t[1]], by = x[2 * t[1] + 1];
    const double cx = x[2 * t[2]], cy = x[2 * t[2] + 1];
    const double k = penalty_ * short_by / area_scale_;
    auto& g = *grad;
    g[2 * t[0]] += k * (by - cy);
    g[2 * t[0] + 1] += k * (cx - bx);
    g[2 * t[1]] += k * (cy - ay);
    g[2 * t[1] + 1] += k * (ax - cx);
    g[2 * t[2]] += k * (ay - by);
    g[2 * t[2] + 1] += k * (bx - ax);
  }

  if (grad) {
    auto& g = *grad;
    const double inv_z = 1.0 / z;
    for (const Corner& c : active) {
      const double w = c.weight * inv_z;
      if (w == 0.0) continue;
      g[2 * c.n] += w * c.gux;
      g[2 * c.n + 1] += w * c.guy;
      g[2 * c.q] += w * c.gvx;
      g[2 * c.q + 1] += w * c.gvy;
      g[2 * c.p] -= w * (c.gux + c.gvx);
      g[2 * c.p + 1] -= w * (c.guy + c.gvy);
    }
    for (std::size_t v = 0; v < pinned_.size(); ++v)
      if (pinned_[v]) g[2 * v] = g[2 * v + 1] = 0.0;
  }
  return value;
}

namespace {

inline double corner_angle(double px, double py, double nx, double ny, double qx, double qy) {
  const double ux = nx - px, uy = ny - py;
  const double vx = qx - px, vy = qy - py;
  return std::atan2(ux * vy - uy * vx, ux * vx + uy * vy);
}

}  // namespace

double SoftMinObjective::min_angle(const Eigen::VectorXd& x) const {
  double tmin = std::numeric_limits<double>::infinity();
  for (const auto& t : faces_)
    for (int i = 0; i < 3; ++i) {
      const Vertex p = t[i], n = t[(i + 1) % 3], q = t[(i + 2) % 3];
      tmin = std::min(tmin, corner_angle(x[2 * p], x[2 * p + 1], x[2 * n], x[2 * n + 1], x[2 * q],
                                         x[2 * q + 1]));
    }
  return tmin;
}

int SoftMinObjective::flipped_faces(const Eigen::VectorXd& x) const {
  int flipped = 0;
  for (const auto& t : faces_) {
    const double ax = x[2 * t[0]], ay = x[2 * t[0] + 1];
    const double c = (x[2 * t[1]] - ax) * (x[2 * t[2] + 1] - ay) -
                     (x[2 * t[1] + 1] - ay) * (x[2 * t[2]] - ax);
    if (!(c > 0.0)) ++flipped;
  }
  return flipped;
}

Eigen::VectorXd flatten(const Drawing& drawing) {
  return Eigen::Map<const Eigen::VectorXd>(drawing.data(), drawing.size());
}

Drawing unflatten(const Eigen::VectorXd& x) {
  return Eigen::Map<const Drawing>(x.data(), 2, x.size() / 2);
}

namespace {

struct Prepared {
  BuildSequence sequence;
  std::array<Vertex, 3> base{};
};

Prepared prepare(const LabeledGraph& graph, const Embedding& embedding) {
  const int n = graph.vertex_count();
  check_rotation(graph, embedding.rotation);
  if (n < 3 || graph.edge_count() != 3 * n - 6)
    throw StructuralError("optimizer needs a maximal planar graph");
  if (embedding.outer.size() != 3) throw StructuralError("outer face must be a triangle");
  Prepared p;
  p.base = interior_orientation(embedding.outer);
  p.sequence = verify_planar_3tree(graph, p.base);
  if (!same_rotation(replay(p.sequence, n).embedding.rotation, embedding.rotation))
    throw StructuralError("embedding is not the planar embedding with this outer face");
  return p;
}

// Affine map taking the standard pinned triangle onto config.pin.
Drawing to_pin(const Drawing& standard, const std::array<Point, 3>& pin) {
  const auto s = pinned_triangle();
  Eigen::Matrix2d src, dst;
  src << s[1] - s[0], s[2] - s[0];
  dst << pin[1] - pin[0], pin[2] - pin[0];
  const Eigen::Matrix2d m = dst * src.inverse();
  Drawing out = m * (standard.colwise() - s[0]);
  out.colwise() += pin[0];
  return out;
}

Drawing seed_from(const LabeledGraph& graph, const Prepared& prep, const OptimizeConfig& config,
                  int restart) {
  Drawing d = to_pin(layout_seed_any(graph, prep.sequence), config.pin);
  for (int i = 0; i < 3; ++i) d.col(prep.base[i]) = config.pin[i];
  if (config.jitter == 0.0 || restart == 0) return d;

  const int n = graph.vertex_count();
  std::seed_seq seq{static_cast<std::uint32_t>(config.seed), static_cast<std::uint32_t>(config.seed >> 32),
                    static_cast<std::uint32_t>(restart)};
  std::mt19937_64 rng(seq);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  Drawing shift = Drawing::Zero(2, n);
  for (Vertex v = 0; v < n; ++v) {
    double r = std::numeric_limits<double>::infinity();
    for (Vertex u : graph.neighbors(v)) r = std::min(r, (d.col(u) - d.col(v)).norm());
    double sx, sy;
    do {
      sx = unit(rng);
      sy = unit(rng);
    } while (sx * sx + sy * sy > 1.0);
    shift(0, v) = config.jitter * r * sx;
    shift(1, v) = config.jitter * r * sy;
  }
  for (int i = 0; i < 3; ++i) shift.col(prep.base[i]).setZero();

  // Shrink the displacement until every face keeps its orientation.
  Embedding emb = replay(prep.sequence, n).embedding;
  for (int attempt = 0; attempt < 40; ++attempt) {
    Drawing trial = d + shift;
    if (faces_oriented(graph, emb, trial)) return trial;
    shift *= 0.5;
  }
  return d;
}

struct RestartOutcome {
  RestartTrace trace;
  Drawing drawing;
};

// Minimizes f = -objective with L-BFGS; once the iterate has no flipped faces,
// steps that would flip a face are rejected.
class Ascent {
 public:
  Ascent(SoftMinObjective& objective, const OptimizeConfig& config)
      : obj_(objective), config_(config) {}

  int run(Eigen::VectorXd& x, int budget) {
    constexpr int memory = 10;
    std::deque<Eigen::VectorXd> s_hist, y_hist;
    std::deque<double> rho_hist;
    Eigen::VectorXd g(x.size()), g_new(x.size()), dir(x.size()), x_new(x.size());
    int flipped = 0;
    double f = -obj_.evaluate(x, &g, &flipped);
    g = -g;
    bool feasible = flipped == 0;
    const double min_edge = min_edge_length(x);
    int it = 0;
    for (; it < budget; ++it) {
      if (g.lpNorm<Eigen::Infinity>() == 0.0) break;
      // Two-loop recursion.
      dir = -g;
      std::vector<double> alpha(s_hist.size());
      for (int i = static_cast<int>(s_hist.size()) - 1; i >= 0; --i) {
        alpha[i] = rho_hist[i] * s_hist[i].dot(dir);
        dir -= alpha[i] * y_hist[i];
      }
      double step = 1.0;
      if (!s_hist.empty()) {
        dir *= s_hist.back().dot(y_hist.back()) / y_hist.back().squaredNorm();
      } else {
        step = 1e-2 * min_edge / g.lpNorm<Eigen::Infinity>();
      }
      for (std::size_t i = 0; i < s_hist.size(); ++i) {
        const double b = rho_hist[i] * y_hist[i].dot(dir);
        dir += (alpha[i] - b) * s_hist[i];
      }
      double slope = g.dot(dir);
      if (!(slope < 0.0)) {
        s_hist.clear();
        y_hist.clear();
        rho_hist.clear();
        dir = -g;
        slope = g.dot(dir);
        step = 1e-2 * min_edge / g.lpNorm<Eigen::Infinity>();
      }

      bool accepted = false;
      double f_new = f;
      for (int bt = 0; bt < 60; ++bt, step *= 0.5) {
        x_new = x + step * dir;
        f_new = -obj_.evaluate(x_new, &g_new, &flipped);
        if (feasible && flipped != 0) continue;
        if (std::isfinite(f_new) && f_new <= f + 1e-4 * step * slope) {
          accepted = true;
          break;
        }
      }
      if (!accepted) {
        if (s_hist.empty()) break;
        s_hist.clear();
        y_hist.clear();
        rho_hist.clear();
        continue;
      }
      g_new = -g_new;
      Eigen::VectorXd s = x_new - x;
      Eigen::VectorXd y = g_new - g;
      const double sy = s.dot(y);
      if (sy > 1e-300) {
        if (static_cast<int>(s_hist.size()) == memory) {
          s_hist.pop_front();
          y_hist.pop_front();
          rho_hist.pop_front();
        }
        s_hist.push_back(std::move(s));
        y_hist.push_back(std::move(y));
        rho_hist.push_back(1.0 / sy);
      }
      const double change = std::abs(f - f_new);
      x.swap(x_new);
      g.swap(g_new);
      f = f_new;
      feasible = feasible || flipped == 0;
      if (change <= config_.tolerance * std::abs(f)) {
        ++it;
        break;
      }
    }
    return it;
  }

 private:
  double min_edge_length(const Eigen::VectorXd& x) const {
    double m = std::numeric_limits<double>::infinity();
    for (const auto& t : obj_.faces())
      for (int i = 0; i < 3; ++i) {
        const Vertex a = t[i], b = t[(i + 1) % 3];
        m = std::min(m, std::hypot(x[2 * a] - x[2 * b], x[2 * a + 1] - x[2 * b + 1]));
      }
    return m;
  }

  SoftMinObjective& obj_;
  const OptimizeConfig& config_;
};

RestartOutcome run_restart(const LabeledGraph& graph, const Embedding& embedding,
                           const Prepared& prep, const OptimizeConfig& config, int restart) {
  RestartOutcome out;
  Drawing seed = seed_from(graph, prep, config, restart);
  Eigen::VectorXd x = flatten(seed);
  SoftMinObjective obj(graph, embedding);
  obj.pin({prep.base[0], prep.base[1], prep.base[2]});
  const double total_area =
      0.5 * cross2(Point(config.pin[1] - config.pin[0]), Point(config.pin[2] - config.pin[0]));
  const double area_scale = total_area / std::max<std::size_t>(1, obj.faces().size());
  const double margin = 1e-12 * total_area;

  // The restart reports the best valid drawing among its seed and the end of
  // every stage, so it never ends below where it started.
  auto consider = [&](const Eigen::VectorXd& at) {
    Drawing d = unflatten(at);
    for (int i = 0; i < 3; ++i) d.col(prep.base[i]) = config.pin[i];
    if (!d.allFinite() || !faces_oriented(graph, embedding, d)) return;
    const double r = angular_resolution(graph, d).resolution;
    if (!out.trace.valid || r > out.trace.resolution) {
      out.trace.valid = true;
      out.trace.resolution = r;
      out.drawing = std::move(d);
    }
  };
  consider(x);

  Ascent ascent(obj, config);
  const int per_stage = std::max(1, config.max_iters / config.stages);
  double sharp = config.sharpness_initial;
  double penalty = config.penalty_initial;
  for (int stage = 0; stage < config.stages; ++stage) {
    const double current = std::abs(obj.min_angle(x));
    obj.set_sharpness(sharp / std::max(current, 1e-6));
    obj.set_penalty(penalty, margin, area_scale);
    out.trace.iterations += ascent.run(x, std::min(per_stage, config.max_iters - out.trace.iterations));
    consider(x);
    if (out.trace.iterations >= config.max_iters) break;
    sharp *= config.sharpness_growth;
    penalty *= config.penalty_growth;
  }
  out.trace.objective = obj.evaluate(x, nullptr);
  return out;
}

}  // namespace

Drawing restart_seed(const LabeledGraph& graph, const Embedding& embedding,
                     const OptimizeConfig& config, int restart) {
  validate_config(config);
  return seed_from(graph, prepare(graph, embedding), config, restart);
}

OptimizeResult maximize_resolution(const LabeledGraph& graph, const Embedding& embedding,
                                   const OptimizeConfig& config) {
  validate_config(config);
  const Prepared prep = prepare(graph, embedding);

  std::vector<RestartOutcome> outcomes(config.restarts);
  unsigned workers = config.threads > 0 ? static_cast<unsigned>(config.threads)
                                        : std::max(1u, std::thread::hardware_concurrency());
  workers = std::min<unsigned>(workers, static_cast<unsigned>(config.restarts));
  if (workers <= 1) {
    for (int r = 0; r < config.restarts; ++r)
      outcomes[r] = run_restart(graph, embedding, prep, config, r);
  } else {
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(workers);
    for (unsigned w = 0; w < workers; ++w)
      pool.emplace_back([&, w] {
        try {
          for (int r = static_cast<int>(w); r < config.restarts; r += static_cast<int>(workers))
            outcomes[r] = run_restart(graph, embedding, prep, config, r);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    for (auto& t : pool) t.join();
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);
  }

  OptimizeResult result;
  result.seed = config.seed;
  for (const auto& o : outcomes) result.traces.push_back(o.trace);

  std::vector<int> order(config.restarts);
  for (int r = 0; r < config.restarts; ++r) order[r] = r;
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return result.traces[a].valid && (!result.traces[b].valid ||
                                      result.traces[a].resolution > result.traces[b].resolution);
  });
  for (int r : order) {
    if (!result.traces[r].valid) break;
    if (!validate_drawing(graph, embedding, outcomes[r].drawing).ok()) {
      result.traces[r].valid = false;
      result.traces[r].resolution = 0.0;
      continue;
    }
    result.best = outcomes[r].drawing;
    result.resolution = result.traces[r].resolution;
    result.best_restart = r;
    return result;
  }
  throw OptimizationFailure("no restart produced a valid drawing", result.traces);
}

std::vector<SweepRecord> sweep(const std::vector<FamilySpec>& specs, const OptimizeConfig& config,
                               bool record_runtime) {
  validate_config(config);
  std::vector<SweepRecord> rows;
  for (const FamilySpec& spec : specs) {
    const auto start = std::chrono::steady_clock::now();
    const EmbeddedGraph eg = build_family(spec);
    SweepRecord row;
    row.spec = spec;
    if (spec.family == Family::frame) row.spec.c = 0;
    row.vertices = eg.graph.vertex_count();
    row.edges = eg.graph.edge_count();
    row.max_degree = max_degree(eg.graph);
    row.restarts = config.restarts;
    row.seed = config.seed;
    try {
      const OptimizeResult r = maximize_resolution(eg.graph, eg.embedding, config);
      row.best_resolution = r.resolution;
      row.valid_restarts = static_cast<int>(
          std::count_if(r.traces.begin(), r.traces.end(), [](const RestartTrace& t) { return t.valid; }));
    } catch (const OptimizationFailure&) {
      row.best_resolution = 0.0;
      row.valid_restarts = 0;
    }
    if (record_runtime)
      row.runtime_s =
          std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    rows.push_back(row);
  }
  return rows;
}

namespace {
constexpr const char* kHeader =
    "family,c,d,vertices,edges,max_degree,best_resolution,restarts,valid_restarts,seed,runtime_s";
}

std::string sweep_csv(const std::vector<SweepRecord>& records) {
  std::string out = std::string(kHeader) + "\n";
  char buf[512];
  for (const auto& r : records) {
    std::snprintf(buf, sizeof buf, "%s,%d,%d,%d,%d,%d,%.17g,%d,%d,%llu,%.3f\n",
                  std::string(family_name(r.spec.family)).c_str(), r.spec.c, r.spec.d, r.vertices,
                  r.edges, r.max_degree, r.best_resolution, r.restarts, r.valid_restarts,
                  static_cast<unsigned long long>(r.seed), r.runtime_s);
    out += buf;
  }
  return out;
}

std::vector<SweepRecord> parse_sweep_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line != kHeader) throw ParseError("sweep CSV: unexpected header");
  std::vector<SweepRecord> rows;
  int lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::vector<std::string> cells;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    if (cells.size() != 11)
      throw ParseError("sweep CSV line " + std::to_string(lineno) + ": expected 11 fields");
    try {
      SweepRecord r;
      r.spec.family = parse_family(cells[0]);
      r.spec.c = std::stoi(cells[1]);
      r.spec.d = std::stoi(cells[2]);
      r.vertices = std::stoi(cells[3]);
      r.edges = std::stoi(cells[4]);
      r.max_degree = std::stoi(cells[5]);
      r.best_resolution = std::stod(cells[6]);
      r.restarts = std::stoi(cells[7]);
      r.valid_restarts = std::stoi(cells[8]);
      r.seed = std::stoull(cells[9]);
      r.runtime_s = std::stod(cells[10]);
      rows.push_back(r);
    } catch (const std::logic_error&) {
      throw ParseError("sweep CSV line " + std::to_string(lineno) + ": malformed field");
    }
  }
  return rows;
}

std::vector<FamilySpec> parse_sweep_spec(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<FamilySpec> specs;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string fam, ds;
    int c = 0;
    if (!(ls >> fam)) continue;
    const auto where = "sweep spec line " + std::to_string(lineno);
    if (!(ls >> c >> ds)) throw ParseError(where + ": expected <family> <c> <d>[,<d>...]");
    std::string extra;
    if (ls >> extra) throw ParseError(where + ": trailing text");
    Family family;
    try {
      family = parse_family(fam);
    } catch (const std::exception&) {
      throw ParseError(where + ": unknown family '" + fam + "'");
    }
    std::istringstream dl(ds);
    std::string item;
    while (std::getline(dl, item, ',')) {
      std::size_t used = 0;
      int d = 0;
      try {
        d = std::stoi(item, &used);
      } catch (const std::logic_error&) {
        used = 0;
      }
      if (used == 0 || used != item.size()) throw ParseError(where + ": bad d value '" + item + "'");
      specs.push_back({family, c, d});
    }
  }
  return specs;
}

ExponentFit fit_exponent(const std::vector<SweepRecord>& records, Family family, int c) {
  std::vector<double> xs, ys;
  for (const auto& r : records) {
    if (r.spec.family != family || (family != Family::frame && r.spec.c != c)) continue;
    if (!(r.best_resolution > 0.0) || r.spec.d < 1)
      throw ParameterError("fit_exponent: resolutions and d must be positive");
    xs.push_back(std::log(static_cast<double>(r.spec.d)));
    ys.push_back(std::log(r.best_resolution));
  }
  if (xs.size() < 3) throw ParameterError("fit_exponent: need at least 3 matching records");
  Eigen::MatrixXd a(xs.size(), 2);
  Eigen::VectorXd b(ys.size());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    a(i, 0) = xs[i];
    a(i, 1) = 1.0;
    b[i] = ys[i];
  }
  const Eigen::Vector2d coef = a.colPivHouseholderQr().solve(b);
  const Eigen::VectorXd resid = b - a * coef;
  const double ss_tot = (b.array() - b.mean()).square().sum();
  ExponentFit fit;
  fit.slope = coef[0];
  fit.intercept = coef[1];
  fit.r2 = ss_tot > 0.0 ? 1.0 - resid.squaredNorm() / ss_tot : 1.0;
  if (!std::isfinite(fit.slope)) throw ParameterError("fit_exponent: all d values coincide");
  return fit;
}

}  // namespace angres
