#include "latpack/coloring.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <thread>

namespace latpack {

PeriodicColoring canonical_coloring(LatticeKind kind, const Sublattice& period, const std::vector<Int>& values,
                                    const std::vector<int>& cells) {
  std::vector<bool> used(values.size(), false);
  for (int c : cells) used[static_cast<std::size_t>(c)] = true;
  std::vector<int> order;
  for (std::size_t i = 0; i < values.size(); ++i)
    if (used[i]) order.push_back(static_cast<int>(i));
  std::stable_sort(order.begin(), order.end(), [&](int x, int y) { return values[x] < values[y]; });
  std::vector<int> remap(values.size(), -1);
  PeriodicColoring out;
  out.kind = kind;
  out.period = period;
  for (std::size_t i = 0; i < order.size(); ++i) {
    remap[static_cast<std::size_t>(order[i])] = static_cast<int>(i);
    out.values.push_back(values[static_cast<std::size_t>(order[i])]);
  }
  out.cells.reserve(cells.size());
  for (int c : cells) out.cells.push_back(remap[static_cast<std::size_t>(c)]);
  return out;
}

std::string ColoringReport::text() const {
  std::ostringstream out;
  out << (ok ? "OK" : "FAIL") << " (" << vertices_scanned << " vertices scanned)\n";
  for (const auto& i : issues) out << "  issue: " << i << "\n";
  return out.str();
}

namespace {

// Nonzero offsets within distance r of a vertex of the given type, sorted.
std::vector<Vertex> ball_offsets(LatticeKind kind, Int r, int type) {
  Vertex ref = type == 1 ? Vertex{0, 0} : Vertex{1, 0};
  std::vector<Vertex> out;
  for (Vertex v : ball(kind, ref, r))
    if (v != ref) out.push_back(v - ref);
  return out;
}

struct Violation {
  Int cell;
  Vertex u, w;
};

}  // namespace

ColoringReport verify_packing_classes(const PeriodicColoring& col, int jobs) {
  ColoringReport report;
  std::map<std::pair<Int, int>, std::vector<Vertex>> offsets;
  for (Int v : col.values)
    for (int t = 0; t < (col.kind == LatticeKind::Hex ? 2 : 1); ++t)
      if (!offsets.count({v, t})) offsets[{v, t}] = ball_offsets(col.kind, v, t);
  const Int n = static_cast<Int>(col.cells.size());
  auto scan = [&](Int lo, Int hi) -> std::optional<Violation> {
    for (Int i = lo; i < hi; ++i) {
      Vertex u = col.period.cell_vertex(i);
      int c = col.cells[static_cast<std::size_t>(i)];
      int t = col.kind == LatticeKind::Hex ? vertex_type(u) : 0;
      for (Vertex d : offsets.at({col.values[static_cast<std::size_t>(c)], t}))
        if (col.color_at(u + d) == c) return Violation{i, u, u + d};
    }
    return std::nullopt;
  };
  Int chunks = std::max<Int>(1, std::min<Int>(jobs, n / 256));
  std::vector<std::optional<Violation>> found(static_cast<std::size_t>(chunks));
  if (chunks == 1) {
    found[0] = scan(0, n);
  } else {
    std::vector<std::thread> pool;
    for (Int c = 0; c < chunks; ++c)
      pool.emplace_back([&, c] { found[static_cast<std::size_t>(c)] = scan(n * c / chunks, n * (c + 1) / chunks); });
    for (auto& t : pool) t.join();
  }
  report.vertices_scanned = n;
  for (const auto& f : found) {
    if (!f) continue;
    report.ok = false;
    report.violation = std::make_pair(f->u, f->w);
    int c = col.color_at(f->u);
    report.issues.push_back("color " + std::to_string(c + 1) + " (value " +
                            std::to_string(col.values[static_cast<std::size_t>(c)]) + ") appears at " + to_string(f->u) +
                            " and " + to_string(f->w) + ", distance " +
                            std::to_string(distance(col.kind, f->u, f->w)));
    break;
  }
  return report;
}

ColoringReport verify_s_coloring(const PeriodicColoring& col, const SequenceSpec& spec, int jobs) {
  ColoringReport report = verify_packing_classes(col, jobs);
  auto len = spec.length();
  if (len && static_cast<Int>(col.values.size()) > *len) {
    report.ok = false;
    report.issues.push_back("coloring uses " + std::to_string(col.values.size()) + " colors but the sequence has " +
                            std::to_string(*len));
    return report;
  }
  std::vector<Int> sorted = col.values;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    Int s = spec.at(static_cast<Int>(i) + 1);
    if (sorted[i] < s) {
      report.ok = false;
      report.issues.push_back("color " + std::to_string(i + 1) + " has value " + std::to_string(sorted[i]) +
                              " below s_" + std::to_string(i + 1) + " = " + std::to_string(s));
      break;
    }
  }
  return report;
}

std::map<Int, Int> color_census(const PeriodicColoring& col) {
  std::map<Int, Int> out;
  for (Int v : col.values) ++out[v];
  return out;
}

std::string export_coloring(const PeriodicColoring& col) {
  std::ostringstream out;
  out << "lattice " << name(col.kind) << "\n";
  out << "period " << to_string(col.period.basis1()) << " " << to_string(col.period.basis2()) << "\n";
  out << "colors " << col.values.size() << "\n";
  for (std::size_t i = 0; i < col.values.size(); ++i) out << "color " << i + 1 << " value " << col.values[i] << "\n";
  out << "domain " << col.period.a() << " " << col.period.c() << "\n";
  for (Int b = 0; b < col.period.c(); ++b) {
    for (Int a = 0; a < col.period.a(); ++a) {
      if (a) out << " ";
      out << col.cells[static_cast<std::size_t>(a + col.period.a() * b)] + 1;
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace latpack
