#pragma once

#include <optional>
#include <string>

#include "latpack/coloring.hpp"

namespace latpack {

enum class ImageFormat { Svg, Ppm };

ImageFormat parse_format(std::string_view text);

struct Rgb {
  int r = 0, g = 0, b = 0;
};

// Deterministic fill for a 0-based color index.
Rgb palette(int index);

// One cell per vertex of `window` (default: the period's fundamental box),
// b increasing upwards. The SVG carries a legend, the PPM lists it in
// header comments.
std::string render_svg(const PeriodicColoring& coloring, const std::optional<Window>& window = std::nullopt);
std::string render_ppm(const PeriodicColoring& coloring, const std::optional<Window>& window = std::nullopt,
                       int scale = 4);

// Throws std::runtime_error when the path cannot be written.
void render(const PeriodicColoring& coloring, const std::string& path, ImageFormat format,
            const std::optional<Window>& window = std::nullopt);

}  // namespace latpack
