// Prints min over d of resolution * d for the fan layout of F_d and the
// structured layout of H~^(1)_d, plus the largest change of resolution * d
// between consecutive doublings. The frozen constants in tests/calibration.hpp
// are these minima rounded down.
#include <algorithm>
#include <cstdio>

#include "angres/families.hpp"
#include "angres/layout.hpp"
#include "angres/metrics.hpp"

using namespace angres;

namespace {

template <typename Build, typename Draw>
void report(const char* name, int max_d, Build build, Draw draw) {
  double kappa = 1e300, worst_jump = 0;
  for (int d = 1; d <= max_d; ++d) {
    const EmbeddedGraph g = build(d);
    const Drawing p = draw(d);
    if (!validate_drawing(g.graph, g.embedding, p).ok()) {
      std::printf("%s: d=%d invalid\n", name, d);
      continue;
    }
    const double x = angular_resolution(g.graph, p).resolution * d;
    kappa = std::min(kappa, x);
    if (2 * d <= max_d) {
      const EmbeddedGraph g2 = build(2 * d);
      const double y = angular_resolution(g2.graph, draw(2 * d)).resolution * 2 * d;
      worst_jump = std::max(worst_jump, std::abs(y - x) / x);
    }
  }
  std::printf("%s: kappa %.6f  worst doubling change %.4f\n", name, kappa, worst_jump);
}

}  // namespace

int main(int argc, char** argv) {
  const int max_d = argc > 1 ? std::atoi(argv[1]) : 128;
  report("fan", max_d, [](int d) { return build_frame(d); }, [](int d) { return layout_frame_fan(d); });
  report("htilde1", std::min(max_d, 64), [](int d) { return build_Htilde(1, d); },
         [](int d) { return layout_htilde1(d); });
  return 0;
}
