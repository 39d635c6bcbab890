#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "latpack/density.hpp"
#include "latpack/plans.hpp"

namespace latpack {

class CorollaryInapplicable : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// One step a_{i-1} -> a_i: s_{a_i} <= slope*k - 1 and a_i - a_{i-1} >= pieces*k^2.
struct CorollaryStep {
  Int a = 0;
  Int k = 0;
  int option = 0;  // 0 or 1, index into the lattice's two alternatives
  Int pieces = 0;  // number of packings produced by the split
  Int radius = 0;  // radius of those packings
};

struct CorollaryWitness {
  LatticeKind kind = LatticeKind::Hex;
  std::vector<Int> prefix;
  std::vector<CorollaryStep> steps;
  Int bound = 0;

  std::vector<Int> a() const;
  std::vector<Int> k() const;
  std::string text() const;
};

// Minimal a_r, then lexicographically smallest (k_1..k_r). Throws
// CorollaryInapplicable when s_1 is not the required first value.
std::optional<CorollaryWitness> corollary_bound(LatticeKind kind, const std::vector<Int>& prefix);

// Coloring plan realising a witness: one base coset gets s_1, each further
// coset is split into `pieces` packings colored by the next prefix values.
ColoringPlan witness_plan(const CorollaryWitness& witness);

// Closed forms for the number of colors of a distance-d coloring.
Int distance_chromatic_n(LatticeKind kind, Int d);

struct DiagonalCheck {
  LatticeKind kind;
  Int d = 0;
  Int formula = 0;
  Int table = 0;
  bool flagged = false;  // formula disagrees with the table
};

// Formula values against the bold exact values of the tables.
std::vector<DiagonalCheck> diagonal_checks();

enum class CellKind { Exact, Range, Infinite, Unknown };

struct TableValue {
  CellKind kind = CellKind::Unknown;
  Int lower = 0;
  std::optional<Int> upper;  // Range with no upper bound when empty
  std::string str() const;
};

struct PaperCell {
  TableValue value;
  std::string citation;  // external source, empty if derived in-house
};

enum class CellStatus { Match, Mismatch, External, Unknown };

struct TableCell {
  Int d = 0, n = 0;
  PaperCell paper;
  TableValue derived;
  std::string lower_source;
  std::string upper_source;
  CellStatus status = CellStatus::Unknown;
  std::string provenance;
};

struct TableReport {
  LatticeKind kind;
  std::vector<Int> rows;
  Int columns = 6;
  std::vector<TableCell> cells;  // row-major

  const TableCell& at(Int d, Int n) const;
  std::string text() const;
};

const char* status_name(CellStatus status);

// Paper table as transcribed.
TableReport paper_table(LatticeKind kind);

struct TableOptions {
  int jobs = 1;
  bool verify_plans = true;
};

TableReport reproduce_table(LatticeKind kind, const TableOptions& options = {});
std::vector<TableReport> reproduce_tables(const TableOptions& options = {});

std::string tables_csv(const std::vector<TableReport>& tables);

}  // namespace latpack
