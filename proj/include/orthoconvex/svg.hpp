#pragma once

#include <optional>
#include <string>
#include <vector>

#include "orthoconvex/scene.hpp"

namespace oc {

struct RenderSpec {
  int width = 640;
  int height = 0;  // 0: follow the viewport aspect ratio
  std::optional<AxisRect> viewport;
  std::vector<std::string> layers;
};

/// SVG document for the named layers. Staircase lines carry their exact core
/// vertices in a data-vertices attribute ("x,y x,y ...").
/// Throws Error(UnknownObject) for missing layers and
/// Error(PreconditionViolated) for a degenerate viewport.
std::string render_svg(const Scene& scene, const RenderSpec& spec);

}  // namespace oc
