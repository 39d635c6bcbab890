#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "latpack/coloring.hpp"

namespace latpack {

// 24x24 toroidal grid on the square lattice. Line i of the file (0-based)
// is row b = i, column j is a = j.
struct PatternGrid {
  static constexpr int kSize = 24;
  static constexpr int kMaxValue = 17;
  std::vector<int> cells;  // cells[a + 24*b]

  int at(Int a, Int b) const {
    return cells[static_cast<std::size_t>(floor_mod(a, kSize) + kSize * floor_mod(b, kSize))];
  }
};

class PatternError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

PatternGrid parse_pattern(std::string_view text);
PatternGrid load_pattern(const std::string& path);
std::string default_pattern_path();
std::string sha256_hex(std::string_view bytes);
// SHA-256 of the shipped data file.
extern const char* const kPatternSha256;

// Colors 1..17 with value = color.
PeriodicColoring pattern_coloring(const PatternGrid& grid);

// Pairwise check on the torus, distance = min over the nine period shifts.
ColoringReport verify_pattern_torus(const PatternGrid& grid);

struct DerivationStep {
  std::string claim;
  bool ok = false;
  std::string detail;
};

class DerivationError : public std::runtime_error {
 public:
  DerivationError(const std::string& claim, const std::string& detail)
      : std::runtime_error("claim failed: " + claim + " (" + detail + ")"), claim_(claim) {}
  const std::string& claim() const { return claim_; }

 private:
  std::string claim_;
};

struct Derived33 {
  PeriodicColoring coloring;
  std::vector<DerivationStep> steps;
};

// Splits and recolors the classes of the pattern into a (3,3) coloring.
// Throws DerivationError naming the first intermediate claim that fails.
Derived33 derive_33_coloring(const PatternGrid& grid, int jobs = 1);

}  // namespace latpack
