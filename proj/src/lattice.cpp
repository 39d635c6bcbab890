#include "latpack/lattice.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <stdexcept>

namespace latpack {

std::string to_string(Vertex v) {
  return "(" + std::to_string(v.a) + "," + std::to_string(v.b) + ")";
}

namespace {

Int parse_int(std::string_view s, std::string_view whole) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  Int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size())
    throw std::invalid_argument("bad vertex '" + std::string(whole) + "'");
  return value;
}

}  // namespace

Vertex parse_vertex(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  if (s.size() >= 2 && s.front() == '(' && s.back() == ')') s = s.substr(1, s.size() - 2);
  auto comma = s.find(',');
  if (comma == std::string_view::npos) throw std::invalid_argument("bad vertex '" + std::string(text) + "'");
  return {parse_int(s.substr(0, comma), text), parse_int(s.substr(comma + 1), text)};
}

std::string_view name(LatticeKind kind) {
  switch (kind) {
    case LatticeKind::Hex: return "hex";
    case LatticeKind::Square: return "square";
    case LatticeKind::Tri: return "tri";
  }
  return "?";
}

LatticeKind parse_kind(std::string_view text) {
  if (text == "hex" || text == "H") return LatticeKind::Hex;
  if (text == "square" || text == "Z2") return LatticeKind::Square;
  if (text == "tri" || text == "T") return LatticeKind::Tri;
  throw std::invalid_argument("unknown lattice '" + std::string(text) + "' (expected hex, square or tri)");
}

int degree(LatticeKind kind) {
  switch (kind) {
    case LatticeKind::Hex: return 3;
    case LatticeKind::Square: return 4;
    case LatticeKind::Tri: return 6;
  }
  return 0;
}

Window::Window(Int a0, Int a1, Int b0, Int b1) : a_min(a0), a_max(a1), b_min(b0), b_max(b1) {
  if (a0 > a1 || b0 > b1) throw std::invalid_argument("empty window");
}

Window Window::centered(Vertex c, Int half) {
  return Window(c.a - half, c.a + half, c.b - half, c.b + half);
}

int vertex_type(Vertex v) {
  Int s = (v.a + v.b + 1) % 2;
  return static_cast<int>(s < 0 ? s + 2 : s);
}

Int distance(LatticeKind kind, Vertex v1, Vertex v2) {
  Int da = std::abs(v1.a - v2.a);
  Int db = std::abs(v1.b - v2.b);
  switch (kind) {
    case LatticeKind::Square:
      return da + db;
    case LatticeKind::Tri: {
      bool mixed = (v1.a >= v2.a && v1.b <= v2.b) || (v1.a <= v2.a && v1.b >= v2.b);
      return mixed ? std::max(da, db) : da + db;
    }
    case LatticeKind::Hex: {
      if (v1.b < v2.b) std::swap(v1, v2);
      if (da >= db) return da + db;
      return 2 * db - vertex_type(v1) + vertex_type(v2);
    }
  }
  return 0;
}

Int distance_lower_bound(LatticeKind kind, Vertex d) {
  Int da = std::abs(d.a), db = std::abs(d.b);
  return kind == LatticeKind::Tri ? std::max(da, db) : da + db;
}

std::vector<Vertex> neighbors(LatticeKind kind, Vertex v) {
  switch (kind) {
    case LatticeKind::Square:
      return {{v.a + 1, v.b}, {v.a - 1, v.b}, {v.a, v.b + 1}, {v.a, v.b - 1}};
    case LatticeKind::Tri:
      return {{v.a + 1, v.b}, {v.a, v.b + 1}, {v.a - 1, v.b}, {v.a, v.b - 1}, {v.a - 1, v.b + 1}, {v.a + 1, v.b - 1}};
    case LatticeKind::Hex: {
      // vertical edge (a,b)-(a,b+1) iff a+b odd
      bool up = ((v.a + v.b) % 2 + 2) % 2 == 1;
      return {{v.a + 1, v.b}, {v.a - 1, v.b}, {v.a, up ? v.b + 1 : v.b - 1}};
    }
  }
  return {};
}

std::vector<Vertex> ball(LatticeKind kind, Vertex c, Int n) {
  std::vector<Vertex> out;
  if (n < 0) return out;
  for (Int a = c.a - n; a <= c.a + n; ++a)
    for (Int b = c.b - n; b <= c.b + n; ++b)
      if (distance(kind, c, {a, b}) <= n) out.push_back({a, b});
  return out;
}

std::vector<Vertex> sphere(LatticeKind kind, Vertex c, Int n) {
  std::vector<Vertex> out;
  if (n < 0) return out;
  for (Int a = c.a - n; a <= c.a + n; ++a)
    for (Int b = c.b - n; b <= c.b + n; ++b)
      if (distance(kind, c, {a, b}) == n) out.push_back({a, b});
  return out;
}

Int ball_size_formula(LatticeKind kind, Int n) {
  if (n < 0) throw std::invalid_argument("ball radius must be nonnegative");
  switch (kind) {
    case LatticeKind::Hex: return (3 * n * n + 3 * n) / 2 + 1;
    case LatticeKind::Square: return 2 * n * n + 2 * n + 1;
    case LatticeKind::Tri: return 3 * n * n + 3 * n + 1;
  }
  return 0;
}

Int sphere_size_formula(LatticeKind kind, Int n) {
  if (n < 0) throw std::invalid_argument("sphere radius must be nonnegative");
  if (n == 0) return 1;
  return static_cast<Int>(degree(kind)) * n;
}

}  // namespace latpack
