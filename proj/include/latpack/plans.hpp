#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "latpack/coloring.hpp"
#include "latpack/density.hpp"
#include "latpack/packings.hpp"

namespace latpack {

// Keep the copy (no scheme) or split it with a catalog scheme; children
// refine the scheme's pieces in order, missing children are leaves.
struct PlanNode {
  std::string scheme;
  Int k = 1;
  Int m = 1;
  std::vector<PlanNode> children;

  bool leaf() const { return scheme.empty(); }
};

// `copies` consecutive root cosets, each refined by `node`; the resulting
// pieces receive `colors` (values) by sorted matching.
struct PlanCell {
  Int copies = 1;
  std::vector<Int> colors;
  PlanNode node;
};

struct ColoringPlan {
  std::string name;
  LatticeKind kind = LatticeKind::Hex;
  SequenceSpec spec = SequenceSpec::dn(1, 1);
  Int claimed = 0;
  std::string base;
  std::vector<PlanCell> cells;
  std::vector<std::string> notes;
};

class PlanError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::vector<ColoringPlan> parse_plans(std::string_view text);
std::string format_plan(const ColoringPlan& plan);
std::string format_plans(const std::vector<ColoringPlan>& plans);

const std::vector<ColoringPlan>& plan_catalog();
const ColoringPlan& find_plan(const std::string& name);

struct PlanLeaf {
  Coset coset;
  Int radius = 0;
  Int value = 0;
  std::size_t cell = 0;
};

struct BuiltPlan {
  PeriodicColoring coloring;
  std::vector<PlanLeaf> leaves;
};

// Throws PlanError when a leaf is weaker than its color, the leaves do not
// partition the lattice, or a scheme does not fit the coset it is applied to.
BuiltPlan expand_plan(const ColoringPlan& plan);
PeriodicColoring build_coloring(const ColoringPlan& plan);

struct PlanVerdict {
  bool ok = false;
  Int colors = 0;
  std::string message;
  std::string text() const { return message; }
};

// Builds, verifies the coloring against the plan's sequence and compares the
// number of colors with the claimed count.
PlanVerdict verify_plan(const ColoringPlan& plan, int jobs = 1);

}  // namespace latpack
