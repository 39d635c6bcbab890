#include "latpack/sublattice.hpp"

#include <cstdlib>
#include <numeric>
#include <stdexcept>

namespace latpack {

Int floor_div(Int x, Int m) {
  Int q = x / m;
  if ((x % m != 0) && ((x < 0) != (m < 0))) --q;
  return q;
}

Int floor_mod(Int x, Int m) {
  Int r = x % m;
  return r < 0 ? r + m : r;
}

Sublattice Sublattice::from_generators(Vertex g1, Vertex g2) {
  Vertex gens[] = {g1, g2};
  return span(gens);
}

Sublattice Sublattice::span(std::span<const Vertex> vectors) {
  std::vector<Vertex> v(vectors.begin(), vectors.end());
  // Euclid on the second coordinate until one vector carries it all.
  while (true) {
    std::size_t pivot = v.size();
    for (std::size_t i = 0; i < v.size(); ++i)
      if (v[i].b != 0 && (pivot == v.size() || std::abs(v[i].b) < std::abs(v[pivot].b))) pivot = i;
    if (pivot == v.size()) throw std::invalid_argument("generators do not span a full-rank lattice");
    bool done = true;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i == pivot || v[i].b == 0) continue;
      v[i] = v[i] - (v[i].b / v[pivot].b) * v[pivot];
      done = false;
    }
    if (done) {
      Vertex w = v[pivot].b < 0 ? -v[pivot] : v[pivot];
      Int a = 0;
      for (std::size_t i = 0; i < v.size(); ++i)
        if (i != pivot) a = std::gcd(a, std::abs(v[i].a));
      if (a == 0) throw std::invalid_argument("generators do not span a full-rank lattice");
      return Sublattice(a, floor_mod(w.a, a), w.b);
    }
  }
}

bool Sublattice::contains(Vertex v) const {
  if (v.b % c_ != 0) return false;
  return (v.a - (v.b / c_) * b_) % a_ == 0;
}

bool Sublattice::contains(const Sublattice& other) const {
  return contains(other.basis1()) && contains(other.basis2());
}

Vertex Sublattice::reduce(Vertex v) const {
  Int s = floor_div(v.b, c_);
  return {floor_mod(v.a - s * b_, a_), v.b - s * c_};
}

Int Sublattice::cell_index(Vertex v) const {
  Vertex r = reduce(v);
  return r.a + a_ * r.b;
}

Vertex Sublattice::cell_vertex(Int index) const {
  return {index % a_, index / a_};
}

std::vector<Vertex> Sublattice::coset_representatives(const Sublattice& child) const {
  if (!contains(child)) throw std::invalid_argument("coset representatives: " + child.str() + " is not contained in " + str());
  return points_in(Window(0, child.a() - 1, 0, child.c() - 1));
}

std::vector<Vertex> Sublattice::points_in(const Window& w, Vertex offset) const {
  std::vector<Vertex> out;
  for (Int y = w.b_min; y <= w.b_max; ++y) {
    if (floor_mod(y - offset.b, c_) != 0) continue;
    Int s = (y - offset.b) / c_;
    Int x0 = w.a_min + floor_mod(offset.a + s * b_ - w.a_min, a_);
    for (Int x = x0; x <= w.a_max; x += a_) out.push_back({x, y});
  }
  return out;
}

std::string Sublattice::str() const {
  return "<" + to_string(basis1()) + "," + to_string(basis2()) + ">";
}

Sublattice intersect(const Sublattice& x, const Sublattice& y) {
  Int l = std::lcm(x.c_, y.c_);
  Int g = std::gcd(x.a_, y.a_);
  Int m1 = floor_mod((l / x.c_) % x.a_ * x.b_, x.a_);
  Int m2 = floor_mod((l / y.c_) % y.a_ * y.b_, y.a_);
  for (Int t = 1; t <= g; ++t) {
    Int r1 = static_cast<Int>(static_cast<__int128>(t) * m1 % x.a_);
    Int r2 = static_cast<Int>(static_cast<__int128>(t) * m2 % y.a_);
    if (floor_mod(r1 - r2, g) != 0) continue;
    // x0 = r1 + a1*u with a1*u = r2 - r1 (mod a2)
    Int a1g = x.a_ / g, a2g = y.a_ / g;
    Int u = 0;
    if (a2g > 1) {
      Int rhs = floor_mod((r2 - r1) / g, a2g);
      Int inv = 1;
      for (Int s = 1; s < a2g; ++s)
        if (floor_mod(a1g * s, a2g) == 1) { inv = s; break; }
      u = static_cast<Int>(static_cast<__int128>(rhs) * inv % a2g);
    }
    Int a = x.a_ / g * y.a_;
    Int x0 = floor_mod(r1 + x.a_ * u, a);
    return Sublattice(a, x0, t * l);
  }
  throw std::logic_error("lattice intersection: no admissible row");
}

Sublattice operator+(const Sublattice& x, const Sublattice& y) {
  Vertex gens[] = {x.basis1(), x.basis2(), y.basis1(), y.basis2()};
  return Sublattice::span(gens);
}

Sublattice even_lattice() {
  return Sublattice::from_generators({1, 1}, {2, 0});
}

bool intersects(const Coset& x, const Coset& y) {
  if (x.lattice == y.lattice) return x.rep == y.rep;
  return (x.lattice + y.lattice).contains(x.rep - y.rep);
}

bool subset(const Coset& inner, const Coset& outer) {
  return outer.lattice.contains(inner.lattice) && outer.contains(inner.rep);
}

}  // namespace latpack
