#ifndef FW_PLOT_HPP
#define FW_PLOT_HPP

#include <string>

#include "fw/artifact.hpp"

namespace fw {

// Emit a standalone SVG line chart for one artifact. Kinds:
//   norms              L2 and Linf norms against t
//   slopes             min/max slope m1, m2 against t
//   envelope           sampled 1/M(t) overlaid on the line 1/M(0) + (3/2) t
//   profile_snapshots  u(x) at up to six snapshot times (needs keep_snapshots)
// Unknown kinds throw std::invalid_argument.
void plot_artifact(const RunArtifact& artifact, const std::string& kind,
                   const std::string& path);

}  // namespace fw

#endif
