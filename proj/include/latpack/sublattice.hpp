#pragma once

#include <span>
#include <string>
#include <vector>

#include "latpack/lattice.hpp"

namespace latpack {

// Full-rank sublattice of Z^2 in Hermite normal form: basis (a,0), (b,c)
// with a > 0, c > 0, 0 <= b < a.
class Sublattice {
 public:
  Sublattice() = default;  // Z^2
  static Sublattice from_generators(Vertex g1, Vertex g2);
  // Lattice spanned by any set of vectors; throws if not full rank.
  static Sublattice span(std::span<const Vertex> vectors);

  Int a() const { return a_; }
  Int b() const { return b_; }
  Int c() const { return c_; }
  Vertex basis1() const { return {a_, 0}; }
  Vertex basis2() const { return {b_, c_}; }
  Int index() const { return a_ * c_; }

  bool contains(Vertex v) const;
  bool contains(const Sublattice& other) const;
  // Canonical representative of v + L in the box [0,a) x [0,c).
  Vertex reduce(Vertex v) const;
  Int cell_index(Vertex v) const;
  Vertex cell_vertex(Int index) const;
  bool has_odd_vector() const { return (a_ % 2 != 0) || ((b_ + c_) % 2 != 0); }

  // Representatives of the cosets of `child` inside this lattice, in
  // row-major order of the child's fundamental box. child must be contained.
  std::vector<Vertex> coset_representatives(const Sublattice& child) const;

  // Lattice points inside the window, row-major.
  std::vector<Vertex> points_in(const Window& w, Vertex offset = {0, 0}) const;

  std::string str() const;

  friend bool operator==(const Sublattice&, const Sublattice&) = default;

 private:
  Sublattice(Int a, Int b, Int c) : a_(a), b_(b), c_(c) {}
  Int a_ = 1, b_ = 0, c_ = 1;
  friend Sublattice intersect(const Sublattice&, const Sublattice&);
};

Sublattice intersect(const Sublattice& x, const Sublattice& y);
Sublattice operator+(const Sublattice& x, const Sublattice& y);

// Sublattice of vectors with even coordinate sum.
Sublattice even_lattice();

Int floor_div(Int x, Int m);
Int floor_mod(Int x, Int m);

struct Coset {
  Sublattice lattice;
  Vertex rep;  // canonical

  Coset() = default;
  Coset(const Sublattice& l, Vertex v) : lattice(l), rep(l.reduce(v)) {}
  bool contains(Vertex v) const { return lattice.contains(v - rep); }
  Coset translated(Vertex t) const { return Coset(lattice, rep + t); }
  friend bool operator==(const Coset&, const Coset&) = default;
};

bool intersects(const Coset& x, const Coset& y);
bool subset(const Coset& inner, const Coset& outer);

}  // namespace latpack
