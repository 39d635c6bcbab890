#include "latpack/render.hpp"

#include <algorithm>
#include <fstream>
#include <iterator>
#include <sstream>
#include <stdexcept>

namespace latpack {

namespace {

constexpr Rgb kBase[] = {
    {230, 25, 75},  {60, 180, 75},   {255, 225, 25}, {0, 130, 200},   {245, 130, 48}, {145, 30, 180},
    {70, 240, 240}, {240, 50, 230},  {210, 245, 60}, {250, 190, 212}, {0, 128, 128},  {220, 190, 255},
    {170, 110, 40}, {255, 250, 200}, {128, 0, 0},    {170, 255, 195}, {128, 128, 0},  {255, 215, 180},
    {0, 0, 128},    {128, 128, 128},
};

Window default_window(const PeriodicColoring& c) {
  return Window(0, c.period.a() - 1, 0, c.period.c() - 1);
}

std::string hex_color(Rgb c) {
  static const char* digits = "0123456789abcdef";
  std::string s = "#";
  for (int v : {c.r, c.g, c.b}) {
    s += digits[v / 16];
    s += digits[v % 16];
  }
  return s;
}

}  // namespace

ImageFormat parse_format(std::string_view text) {
  if (text == "svg") return ImageFormat::Svg;
  if (text == "ppm") return ImageFormat::Ppm;
  throw std::invalid_argument("unknown image format '" + std::string(text) + "' (expected svg or ppm)");
}

Rgb palette(int index) {
  constexpr int n = static_cast<int>(std::size(kBase));
  if (index < n) return kBase[index];
  // Beyond the base set: spread with a fixed integer hash.
  unsigned h = static_cast<unsigned>(index) * 2654435761u;
  return {static_cast<int>(40 + (h >> 8) % 200), static_cast<int>(40 + (h >> 16) % 200),
          static_cast<int>(40 + (h >> 24) % 200)};
}

std::string render_svg(const PeriodicColoring& coloring, const std::optional<Window>& window) {
  const Window w = window.value_or(default_window(coloring));
  constexpr Int cell = 12;
  const Int legend_w = 110;
  const Int width = w.width() * cell + legend_w;
  const Int rows = static_cast<Int>(coloring.color_count());
  const Int height = std::max(w.height() * cell, rows * 16 + 16);
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
      << "\" shape-rendering=\"crispEdges\">\n";
  out << "<title>" << name(coloring.kind) << " coloring, " << coloring.color_count() << " colors, period "
      << coloring.period.str() << "</title>\n";
  for (Int b = w.b_max; b >= w.b_min; --b) {
    for (Int a = w.a_min; a <= w.a_max; ++a) {
      const int c = coloring.color_at({a, b});
      out << "<rect x=\"" << (a - w.a_min) * cell << "\" y=\"" << (w.b_max - b) * cell << "\" width=\"" << cell
          << "\" height=\"" << cell << "\" fill=\"" << hex_color(palette(c)) << "\"/>\n";
    }
  }
  const Int lx = w.width() * cell + 10;
  for (Int i = 0; i < rows; ++i) {
    const auto id = coloring.color(static_cast<int>(i));
    out << "<rect x=\"" << lx << "\" y=\"" << 8 + 16 * i << "\" width=\"12\" height=\"12\" fill=\""
        << hex_color(palette(static_cast<int>(i))) << "\"/>";
    out << "<text x=\"" << lx + 18 << "\" y=\"" << 18 + 16 * i << "\" font-family=\"monospace\" font-size=\"11\">"
        << id.index << ": " << id.value << "</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

std::string render_ppm(const PeriodicColoring& coloring, const std::optional<Window>& window, int scale) {
  if (scale < 1) throw std::invalid_argument("scale must be positive");
  const Window w = window.value_or(default_window(coloring));
  std::ostringstream out;
  out << "P3\n";
  out << "# " << name(coloring.kind) << " coloring, period " << coloring.period.str() << "\n";
  for (std::size_t i = 0; i < coloring.color_count(); ++i) {
    const auto id = coloring.color(static_cast<int>(i));
    const Rgb c = palette(static_cast<int>(i));
    out << "# color " << id.index << " value " << id.value << " rgb " << c.r << " " << c.g << " " << c.b << "\n";
  }
  out << w.width() * scale << " " << w.height() * scale << "\n255\n";
  for (Int b = w.b_max; b >= w.b_min; --b) {
    std::ostringstream line;
    for (Int a = w.a_min; a <= w.a_max; ++a) {
      const Rgb c = palette(coloring.color_at({a, b}));
      for (int s = 0; s < scale; ++s) line << c.r << " " << c.g << " " << c.b << " ";
    }
    std::string row = line.str();
    row.pop_back();
    for (int s = 0; s < scale; ++s) out << row << "\n";
  }
  return out.str();
}

void render(const PeriodicColoring& coloring, const std::string& path, ImageFormat format,
            const std::optional<Window>& window) {
  const std::string body = format == ImageFormat::Svg ? render_svg(coloring, window) : render_ppm(coloring, window);
  std::ofstream file(path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot write " + path);
  file << body;
  file.close();
  if (!file) throw std::runtime_error("cannot write " + path);
}

}  // namespace latpack
