#pragma once

namespace angres {

/// Entry point of the `angres` tool. Returns 0 on success, 1 when validation
/// or measurement fails, 2 on usage errors.
int run(int argc, char** argv);

}  // namespace angres
