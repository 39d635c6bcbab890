#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "latpack/lattice.hpp"
#include "latpack/rational.hpp"
#include "latpack/sublattice.hpp"

namespace latpack {

// Points { x*g1 + y*g2 + offset }.
struct LinearPackingSpec {
  LatticeKind kind = LatticeKind::Hex;
  Vertex g1{1, 0};
  Vertex g2{0, 1};
  Vertex offset{0, 0};

  Int det() const { return g1.a * g2.b - g1.b * g2.a; }
  Sublattice lattice() const { return Sublattice::from_generators(g1, g2); }
  Coset coset() const { return Coset(lattice(), offset); }
  Rational density() const;
  LinearPackingSpec translated(Vertex t) const { return {kind, g1, g2, offset + t}; }
  std::string str() const;
};

std::vector<Vertex> enumerate(const LinearPackingSpec& spec, const Window& window);

struct PackingCertificate {
  LinearPackingSpec spec;
  Int claimed_radius = 0;
  Int min_distance = 0;
  Int search_radius_used = 0;
  Vertex witness{0, 0};  // a shortest nonzero lattice vector

  bool valid() const { return min_distance > claimed_radius; }
  std::string report() const;
};

// Exact minimum distance between distinct points of a coset.
Int coset_min_distance(LatticeKind kind, const Coset& coset, Vertex* witness = nullptr, Int* searched = nullptr);
PackingCertificate min_pair_distance(const LinearPackingSpec& spec, Int claimed_radius = 0);

// One family of a scheme: copies child + t for each translation t.
struct SchemePart {
  LinearPackingSpec child;  // offset (0,0) unless noted
  std::vector<Vertex> translations;
  Int radius = 0;
};

struct SubdivisionScheme {
  std::string name;
  std::string statement;
  LatticeKind kind = LatticeKind::Hex;
  LinearPackingSpec parent;
  std::vector<SchemePart> parts;
  Int parent_radius = 0;
  Int k = 1;
  Int m = 1;

  Int claimed_count() const;
  // Flattened pieces in part order.
  struct Piece {
    Coset coset;
    Int radius;
  };
  std::vector<Piece> pieces() const;
  Int max_generator_coordinate() const;
};

struct SchemeReport {
  bool ok = true;
  std::vector<std::string> issues;
  std::vector<PackingCertificate> certificates;
  std::optional<Vertex> witness;
  Int vertices_checked = 0;
  std::string text() const;
};

// Algebraic verification: containment, index count, pairwise disjoint
// cosets, exact density identity, and a min-distance certificate per copy.
SchemeReport verify_scheme(const SubdivisionScheme& scheme);

// Window verification: every vertex of the window is tested for membership
// in the parent and in each child copy. Throws if the window side is below
// 4x the largest generator coordinate.
SchemeReport verify_partition(const SubdivisionScheme& scheme, const Window& window);
Window default_window(const SubdivisionScheme& scheme, Int factor = 6);

// Applies `inner` to piece `piece_index` of `outer`. Throws
// std::invalid_argument when inner's parent lattice differs from that piece's lattice.
SubdivisionScheme compose(const SubdivisionScheme& inner, const SubdivisionScheme& outer, std::size_t piece_index);
SubdivisionScheme identity_scheme(const LinearPackingSpec& spec, Int radius);

// Three nonzero vectors u, v, u+v of a lattice, each at distance <= radius:
// two copies cannot both avoid them, so no 2-partition into radius-packings exists.
struct TriangleObstruction {
  Vertex u, v;
  Int du, dv, duv;
  std::string text() const;
};
std::optional<TriangleObstruction> two_partition_obstruction(LatticeKind kind, const Coset& parent, Int radius);

struct SchemeTemplate {
  std::string name;
  std::string statement;
  LatticeKind kind;
  bool uses_k = true;
  bool uses_m = false;
  std::function<SubdivisionScheme(Int k, Int m)> build;

  SubdivisionScheme instantiate(Int k = 1, Int m = 1) const;
};

const std::vector<SchemeTemplate>& scheme_catalog();
const SchemeTemplate& find_scheme(const std::string& name);

// Base packing X_i of a lattice and the partition of the lattice into its translates.
LinearPackingSpec base_packing(LatticeKind kind, Int i);

// One scheme per record; see README for the format.
std::string export_catalog(Int kmax = 3, Int mmax = 3);

}  // namespace latpack
