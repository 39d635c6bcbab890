#pragma once

#include <optional>
#include <string>
#include <vector>

#include "latpack/lattice.hpp"
#include "latpack/rational.hpp"

namespace latpack {

// Either an explicit nondecreasing list s_1..s_k or the (d,n) rule
// s_i = d + floor((i-1)/n).
class SequenceSpec {
 public:
  static SequenceSpec dn(Int d, Int n);
  static SequenceSpec list(std::vector<Int> values);

  bool is_dn() const { return dn_; }
  Int d() const { return d_; }
  Int n() const { return n_; }
  const std::vector<Int>& values() const { return values_; }

  // 1-based. Throws past the end of an explicit list.
  Int at(Int i) const;
  std::optional<Int> length() const;
  Int first() const { return at(1); }
  std::string str() const;

 private:
  bool dn_ = false;
  Int d_ = 0, n_ = 0;
  std::vector<Int> values_;
};

Rational k_area_formula(LatticeKind kind, Int k);
Rational k_area_direct(LatticeKind kind, Int k, Vertex center = {0, 0});
Rational density_upper_bound(LatticeKind kind, Int i);

// c with A(i) >= c*i^2 for every i >= 1.
Rational tail_constant(LatticeKind kind);

enum class Verdict { Infeasible, Inconclusive };

struct InfeasibilityCertificate {
  LatticeKind kind;
  SequenceSpec spec;
  Int horizon = 0;
  Rational partial_sum;
  Rational tail_bound;
  Rational total_bound;

  Verdict verdict() const { return total_bound < Rational(1) ? Verdict::Infeasible : Verdict::Inconclusive; }
  std::string report(bool exact = false) const;
};

constexpr Int kDefaultHorizon = 10000;

// Sum of n/A(j) for j in [lo, hi], exact. Chunked across `jobs` threads;
// the result does not depend on `jobs`.
Rational area_reciprocal_sum(LatticeKind kind, Int lo, Int hi, Int weight = 1, int jobs = 1);

InfeasibilityCertificate feasibility_sum(LatticeKind kind, const SequenceSpec& spec,
                                         Int horizon = kDefaultHorizon, int jobs = 1);

// Smallest k with sum_{i<=k} 1/A(s_i) >= 1. Throws std::domain_error when
// the sum stays below 1 within `cap` colors.
Int density_lower_bound(LatticeKind kind, const SequenceSpec& spec, Int cap = 5000);

}  // namespace latpack
