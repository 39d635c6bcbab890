#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace latpack {

using Int = std::int64_t;

struct Vertex {
  Int a = 0;
  Int b = 0;

  friend constexpr auto operator<=>(const Vertex&, const Vertex&) = default;
  friend constexpr Vertex operator+(Vertex u, Vertex v) { return {u.a + v.a, u.b + v.b}; }
  friend constexpr Vertex operator-(Vertex u, Vertex v) { return {u.a - v.a, u.b - v.b}; }
  friend constexpr Vertex operator-(Vertex u) { return {-u.a, -u.b}; }
  friend constexpr Vertex operator*(Int s, Vertex v) { return {s * v.a, s * v.b}; }
};

struct VertexHash {
  std::size_t operator()(const Vertex& v) const noexcept {
    auto x = static_cast<std::uint64_t>(v.a) * 0x9E3779B97F4A7C15ULL;
    return static_cast<std::size_t>(x ^ (static_cast<std::uint64_t>(v.b) + 0x632BE59BD9B4E019ULL + (x << 6) + (x >> 2)));
  }
};

std::string to_string(Vertex v);
// Parses "a,b" (optional parentheses and spaces).
Vertex parse_vertex(std::string_view text);

enum class LatticeKind { Hex, Square, Tri };

std::string_view name(LatticeKind kind);
LatticeKind parse_kind(std::string_view text);
int degree(LatticeKind kind);

struct Window {
  Int a_min = 0, a_max = 0, b_min = 0, b_max = 0;

  Window() = default;
  Window(Int a0, Int a1, Int b0, Int b1);
  static Window centered(Vertex c, Int half);
  bool contains(Vertex v) const { return v.a >= a_min && v.a <= a_max && v.b >= b_min && v.b <= b_max; }
  Int width() const { return a_max - a_min + 1; }
  Int height() const { return b_max - b_min + 1; }
};

// tau(v) = (a+b+1) mod 2
int vertex_type(Vertex v);

Int distance(LatticeKind kind, Vertex v1, Vertex v2);

// Lower bound on distance that depends on the difference vector only.
Int distance_lower_bound(LatticeKind kind, Vertex delta);

std::vector<Vertex> neighbors(LatticeKind kind, Vertex v);

// Sorted by (a,b).
std::vector<Vertex> ball(LatticeKind kind, Vertex center, Int n);
std::vector<Vertex> sphere(LatticeKind kind, Vertex center, Int n);

Int ball_size_formula(LatticeKind kind, Int n);
Int sphere_size_formula(LatticeKind kind, Int n);

}  // namespace latpack
