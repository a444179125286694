#include "angres/cli.hpp"

#include <cstdio>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "angres/errors.hpp"
#include "angres/families.hpp"
#include "angres/geometry.hpp"
#include "angres/io.hpp"
#include "angres/layout.hpp"
#include "angres/metrics.hpp"
#include "angres/optimize.hpp"
#include "angres/svg.hpp"

namespace angres {

namespace {

// Validation or measurement failed on otherwise well-formed input.
struct Failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string num(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void print_config(const std::string& line) { std::cerr << "config: angres " << line << "\n"; }

std::filesystem::path embedding_path(std::filesystem::path graph_path) {
  return graph_path.replace_extension(".emb");
}

void require_valid(const ValidationReport& report) {
  if (!report.ok()) throw Failure("invalid drawing: " + report.violations.front().message);
}

struct Options {
  std::string family = "frame";
  int c = 1;
  int d = 1;
  std::string out;
  std::string graph_file, drawing_file, embedding_file, spec_file, csv_file;
  double apex = LayoutConfig{}.apex_angle;
  double ratio = LayoutConfig{}.ring_ratio;
  bool structured = false;
  OptimizeConfig opt;
  bool no_runtime = false;
  std::size_t n = 100000;
  std::uint64_t seed = 42;
};

int gen(const Options& o) {
  const FamilySpec spec{parse_family(o.family), o.c, o.d};
  print_config("gen --family " + o.family + " --c " + std::to_string(o.c) + " --d " +
               std::to_string(o.d) + " -o " + o.out);
  const EmbeddedGraph eg = build_family(spec);
  write_text_atomic(o.out, format_graph(eg.graph));
  write_text_atomic(embedding_path(o.out), format_embedding(eg.embedding));
  std::cout << "vertices " << eg.graph.vertex_count() << "\nedges " << eg.graph.edge_count()
            << "\nmax_degree " << max_degree(eg.graph) << "\n";
  return 0;
}

int layout(const Options& o) {
  const FamilySpec spec{parse_family(o.family), o.c, o.d};
  print_config("layout --family " + o.family + " --c " + std::to_string(o.c) + " --d " +
               std::to_string(o.d) + " --apex " + num(o.apex) + " --ratio " + num(o.ratio) +
               (o.structured ? " --structured" : "") + " -o " + o.out);
  LayoutConfig cfg;
  cfg.apex_angle = o.apex;
  cfg.ring_ratio = o.ratio;
  const EmbeddedGraph eg = build_family(spec);
  const Drawing d = spec.family == Family::frame && !o.structured ? layout_frame_fan(spec.d, cfg)
                                                                  : layout_structured(spec, cfg);
  require_valid(validate_drawing(eg.graph, eg.embedding, d));
  write_text_atomic(o.out, format_drawing(d));
  std::cout << "resolution " << num(angular_resolution(eg.graph, d).resolution) << "\n";
  return 0;
}

int measure(const Options& o) {
  print_config("measure " + o.graph_file + " " + o.drawing_file +
               (o.embedding_file.empty() ? "" : " --emb " + o.embedding_file));
  const LabeledGraph g = parse_graph(read_text(o.graph_file));
  const Drawing d = parse_drawing(read_text(o.drawing_file));
  if (d.cols() != g.vertex_count()) throw Failure("drawing does not cover every vertex");
  if (o.embedding_file.empty())
    require_valid(check_planarity(g, d));
  else
    require_valid(validate_drawing(g, parse_embedding(read_text(o.embedding_file)), d));
  const AngleReport r = angular_resolution(g, d);
  std::cout << "resolution " << num(r.resolution) << "\n";
  std::cout << "witness " << r.witness.vertex << " " << r.witness.from << " " << r.witness.to << "\n";
  if (auto roles = frame_roles(g); roles && roles->depth() >= 2) {
    const FrameProfile p = frame_profile(g, *roles, d);
    std::cout << "k alpha1 alpha2 alpha3 ratio\n";
    for (std::size_t i = 0; i < p.alpha1.size(); ++i)
      std::cout << i + 2 << " " << num(p.alpha1[i]) << " " << num(p.alpha2[i]) << " "
                << num(p.alpha3[i]) << " " << num(p.ratio[i]) << "\n";
    std::cout << "apex_v " << num(p.apex_v) << "\napex_uv " << num(p.apex_uv) << "\n";
    std::cout << "telescoping " << num(telescoping_product(p)) << "\n";
    const ClaimQuantities q = claim_quantities(p);
    std::cout << "claim j " << q.j << " alpha1' " << num(q.alpha1_prime) << " alpha2' "
              << num(q.alpha2_prime) << " bound " << (q.averaging_bound_holds ? "holds" : "fails")
              << "\n";
  }
  return 0;
}

std::string optimizer_flags(const OptimizeConfig& c) {
  return " --restarts " + std::to_string(c.restarts) + " --seed " + std::to_string(c.seed) +
         " --max-iter " + std::to_string(c.max_iters) + " --threads " + std::to_string(c.threads);
}

int optimize(const Options& o) {
  print_config("optimize " + o.graph_file + " " + o.embedding_file + optimizer_flags(o.opt) + " -o " + o.out);
  const LabeledGraph g = parse_graph(read_text(o.graph_file));
  const Embedding emb = parse_embedding(read_text(o.embedding_file));
  OptimizeResult r;
  try {
    r = maximize_resolution(g, emb, o.opt);
  } catch (const OptimizationFailure& e) {
    throw Failure(e.what());
  }
  write_text_atomic(o.out, format_drawing(r.best));
  std::cout << "resolution " << num(r.resolution) << "\nbest_restart " << r.best_restart << "\n";
  std::cout << "restart objective resolution iterations valid\n";
  for (std::size_t i = 0; i < r.traces.size(); ++i) {
    const auto& t = r.traces[i];
    std::cout << i << " " << num(t.objective) << " " << num(t.resolution) << " " << t.iterations
              << " " << (t.valid ? 1 : 0) << "\n";
  }
  return 0;
}

int run_sweep(const Options& o) {
  print_config("sweep --spec " + o.spec_file + optimizer_flags(o.opt) +
               (o.no_runtime ? " --no-runtime" : "") + " -o " + o.out);
  const auto specs = parse_sweep_spec(read_text(o.spec_file));
  const auto rows = sweep(specs, o.opt, !o.no_runtime);
  write_text_atomic(o.out, sweep_csv(rows));
  int failed = 0;
  for (const auto& r : rows) failed += r.valid_restarts == 0;
  std::cout << rows.size() << " rows, " << failed << " failed\n";
  return failed ? 1 : 0;
}

int fuzz(const Options& o) {
  print_config("lemma-fuzz --n " + std::to_string(o.n) + " --seed " + std::to_string(o.seed));
  const LemmaFuzzSummary s = lemma_fuzz(o.n, o.seed);
  std::cout << s.holds << "/" << s.cases << " hold\n";
  std::cout << "identity " << s.identity_ok << "/" << s.cases << " within 1e-9\n";
  std::cout << "worst_ratio " << num(s.worst_ratio) << "\n";
  std::cout << "worst_identity_error " << num(s.worst_identity_error) << "\n";
  return s.holds == s.cases && s.identity_ok == s.cases ? 0 : 1;
}

int fit(const Options& o) {
  print_config("fit --csv " + o.csv_file + " --family " + o.family + " --c " + std::to_string(o.c));
  const auto rows = parse_sweep_csv(read_text(o.csv_file));
  const ExponentFit f = fit_exponent(rows, parse_family(o.family), o.c);
  std::cout << num(f.slope) << " " << num(f.intercept) << " " << num(f.r2) << "\n";
  return 0;
}

int svg(const Options& o) {
  print_config("export-svg " + o.graph_file + " " + o.drawing_file +
               (o.embedding_file.empty() ? "" : " --emb " + o.embedding_file) + " -o " + o.out);
  const LabeledGraph g = parse_graph(read_text(o.graph_file));
  const Drawing d = parse_drawing(read_text(o.drawing_file));
  std::string doc;
  try {
    if (o.embedding_file.empty()) {
      doc = export_svg(g, d);
    } else {
      const Embedding emb = parse_embedding(read_text(o.embedding_file));
      doc = export_svg(g, d, {}, &emb);
    }
  } catch (const DegenerateInput& e) {
    throw Failure(e.what());
  }
  write_text_atomic(o.out, doc);
  return 0;
}

}  // namespace

int run(int argc, char** argv) {
  CLI::App app{"Angular resolution of planar 3-tree drawings"};
  app.require_subcommand(1);
  Options o;

  auto family_flags = [&](CLI::App* s) {
    s->add_option("--family", o.family, "frame, g, h or htilde");
    s->add_option("--c", o.c, "recursion depth (ignored for frames)");
    s->add_option("--d", o.d, "frame depth parameter");
  };
  auto optimizer_options = [&](CLI::App* s) {
    s->add_option("--restarts", o.opt.restarts);
    s->add_option("--seed", o.opt.seed);
    s->add_option("--max-iter", o.opt.max_iters);
    s->add_option("--threads", o.opt.threads, "0 uses every hardware thread");
  };

  auto* gen_cmd = app.add_subcommand("gen", "build a family graph and its embedding (<out>.emb)");
  family_flags(gen_cmd);
  gen_cmd->add_option("-o,--output", o.out)->required();

  auto* layout_cmd = app.add_subcommand("layout", "structured drawing of a family graph");
  family_flags(layout_cmd);
  layout_cmd->add_option("--apex", o.apex, "apex angle at each frame root (radians)");
  layout_cmd->add_option("--ratio", o.ratio, "radial growth between frame rings");
  layout_cmd->add_flag("--structured", o.structured, "draw frames inside the pinned triangle");
  layout_cmd->add_option("-o,--output", o.out)->required();

  auto* measure_cmd = app.add_subcommand("measure", "angular resolution of a drawing");
  measure_cmd->add_option("graph", o.graph_file)->required();
  measure_cmd->add_option("drawing", o.drawing_file)->required();
  measure_cmd->add_option("--emb", o.embedding_file, "also check the drawing realizes this embedding");

  auto* opt_cmd = app.add_subcommand("optimize", "maximize angular resolution for a fixed embedding");
  opt_cmd->add_option("graph", o.graph_file)->required();
  opt_cmd->add_option("embedding", o.embedding_file)->required();
  optimizer_options(opt_cmd);
  opt_cmd->add_option("-o,--output", o.out)->required();

  auto* sweep_cmd = app.add_subcommand("sweep", "optimize a list of family instances into a CSV");
  sweep_cmd->add_option("--spec", o.spec_file, "lines '<family> <c> <d>[,<d>...]'")->required();
  optimizer_options(sweep_cmd);
  sweep_cmd->add_flag("--no-runtime", o.no_runtime, "write runtime_s as 0 for byte-stable output");
  sweep_cmd->add_option("-o,--output", o.out)->required();

  auto* fuzz_cmd = app.add_subcommand("lemma-fuzz", "random check of the triangle lemma");
  fuzz_cmd->add_option("--n", o.n);
  fuzz_cmd->add_option("--seed", o.seed);

  auto* fit_cmd = app.add_subcommand("fit", "log-log slope of a sweep CSV");
  fit_cmd->add_option("--csv", o.csv_file)->required();
  fit_cmd->add_option("--family", o.family);
  fit_cmd->add_option("--c", o.c);

  auto* svg_cmd = app.add_subcommand("export-svg", "render a drawing");
  svg_cmd->add_option("graph", o.graph_file)->required();
  svg_cmd->add_option("drawing", o.drawing_file)->required();
  svg_cmd->add_option("--emb", o.embedding_file);
  svg_cmd->add_option("-o,--output", o.out)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (gen_cmd->parsed()) return gen(o);
    if (layout_cmd->parsed()) return layout(o);
    if (measure_cmd->parsed()) return measure(o);
    if (opt_cmd->parsed()) return optimize(o);
    if (sweep_cmd->parsed()) return run_sweep(o);
    if (fuzz_cmd->parsed()) return fuzz(o);
    if (fit_cmd->parsed()) return fit(o);
    if (svg_cmd->parsed()) return svg(o);
  } catch (const ParameterError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace angres
