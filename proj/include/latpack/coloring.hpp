#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "latpack/density.hpp"
#include "latpack/lattice.hpp"
#include "latpack/sublattice.hpp"

namespace latpack {

struct ColorId {
  int index = 0;  // 1-based
  Int value = 0;
};

// Coloring invariant under translation by `period`; cells indexes the
// fundamental box [0,a) x [0,c) of the period lattice.
struct PeriodicColoring {
  LatticeKind kind = LatticeKind::Square;
  Sublattice period;
  std::vector<Int> values;  // color index (0-based) -> value, nondecreasing
  std::vector<int> cells;   // fundamental cell -> color index

  int color_at(Vertex v) const { return cells[static_cast<std::size_t>(period.cell_index(v))]; }
  Int value_at(Vertex v) const { return values[static_cast<std::size_t>(color_at(v))]; }
  std::size_t color_count() const { return values.size(); }
  ColorId color(int index0) const { return {index0 + 1, values[static_cast<std::size_t>(index0)]}; }
};

// Reorders colors by (value, creation order) and drops unused colors.
PeriodicColoring canonical_coloring(LatticeKind kind, const Sublattice& period, const std::vector<Int>& values,
                                    const std::vector<int>& cells);

struct ColoringReport {
  bool ok = true;
  std::vector<std::string> issues;
  std::optional<std::pair<Vertex, Vertex>> violation;
  Int vertices_scanned = 0;
  std::string text() const;
};

// Ball scan around every fundamental-domain vertex plus the check that the
// sorted color values dominate the sequence.
ColoringReport verify_s_coloring(const PeriodicColoring& coloring, const SequenceSpec& spec, int jobs = 1);

// Checks only that each color class is a packing of its own value.
ColoringReport verify_packing_classes(const PeriodicColoring& coloring, int jobs = 1);

std::map<Int, Int> color_census(const PeriodicColoring& coloring);

// Period vectors, color table and one line per fundamental-domain row.
std::string export_coloring(const PeriodicColoring& coloring);

}  // namespace latpack
