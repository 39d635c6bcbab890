#include <doctest.h>

#include <random>
#include <set>

#include "latpack/lattice.hpp"
#include "support.hpp"

using namespace latpack;

namespace {
const LatticeKind kKinds[] = {LatticeKind::Hex, LatticeKind::Square, LatticeKind::Tri};
}

TEST_CASE("closed-form distance agrees with breadth-first search") {
  for (LatticeKind kind : kKinds) {
    for (Vertex source : {Vertex{0, 0}, Vertex{1, 0}, Vertex{-3, 2}}) {
      const Window box = Window::centered(source, 12);
      const auto bfs = testing::bfs_distances(kind, source, box, 8);
      Int mismatches = 0;
      for (Int b = box.b_min; b <= box.b_max; ++b)
        for (Int a = box.a_min; a <= box.a_max; ++a)
          if (bfs.at({a, b}) != distance(kind, source, {a, b})) ++mismatches;
      CHECK_MESSAGE(mismatches == 0, name(kind), " from ", to_string(source));
    }
  }
}

TEST_CASE("distance is a metric on random samples") {
  std::mt19937 rng(20240607);
  std::uniform_int_distribution<Int> coord(-40, 40);
  auto random_vertex = [&] { return Vertex{coord(rng), coord(rng)}; };
  for (LatticeKind kind : kKinds) {
    for (int trial = 0; trial < 2000; ++trial) {
      Vertex u = random_vertex(), v = random_vertex(), w = random_vertex();
      CHECK(distance(kind, u, v) == distance(kind, v, u));
      CHECK(distance(kind, u, w) <= distance(kind, u, v) + distance(kind, v, w));
      CHECK((distance(kind, u, v) == 0) == (u == v));
      CHECK(distance(kind, u, v) >= distance_lower_bound(kind, v - u));
      // Translations by vectors of even coordinate sum preserve every lattice.
      Vertex t{2 * coord(rng), 0};
      t.b = 2 * coord(rng);
      CHECK(distance(kind, u + t, v + t) == distance(kind, u, v));
    }
  }
}

TEST_CASE("hexagonal vertex types and degrees") {
  CHECK(vertex_type({0, 0}) == 1);
  CHECK(vertex_type({1, 0}) == 0);
  CHECK(degree(LatticeKind::Hex) == 3);
  CHECK(degree(LatticeKind::Square) == 4);
  CHECK(degree(LatticeKind::Tri) == 6);
  // Vertical edge (a,b)-(a,b+1) exists iff a+b is odd.
  auto has = [](Vertex v, Vertex w) {
    for (Vertex x : neighbors(LatticeKind::Hex, v))
      if (x == w) return true;
    return false;
  };
  CHECK(has({1, 0}, {1, 1}));
  CHECK_FALSE(has({0, 0}, {0, 1}));
  CHECK(has({0, 0}, {0, -1}));
  for (LatticeKind kind : kKinds)
    for (Vertex v : {Vertex{0, 0}, Vertex{1, 0}, Vertex{5, -4}}) {
      auto ns = neighbors(kind, v);
      CHECK(static_cast<int>(ns.size()) == degree(kind));
      for (Vertex w : ns) CHECK(distance(kind, v, w) == 1);
    }
}

TEST_CASE("ball and sphere sizes follow the closed forms") {
  for (LatticeKind kind : kKinds) {
    for (Int n = 0; n <= 15; ++n) {
      for (Vertex c : {Vertex{0, 0}, Vertex{1, 0}}) {
        CHECK(static_cast<Int>(ball(kind, c, n).size()) == ball_size_formula(kind, n));
        CHECK(static_cast<Int>(sphere(kind, c, n).size()) == sphere_size_formula(kind, n));
      }
    }
  }
  CHECK(ball_size_formula(LatticeKind::Tri, 1) == 7);
  CHECK(ball_size_formula(LatticeKind::Tri, 2) == 19);
  CHECK(ball_size_formula(LatticeKind::Square, 3) == 25);
  CHECK(ball_size_formula(LatticeKind::Hex, 2) == 10);
  CHECK(sphere_size_formula(LatticeKind::Hex, 5) == 15);
  CHECK(sphere_size_formula(LatticeKind::Hex, 0) == 1);
  CHECK_THROWS_AS(ball_size_formula(LatticeKind::Hex, -1), std::invalid_argument);
}

TEST_CASE("ball members are sorted and within the radius") {
  auto pts = ball(LatticeKind::Hex, {3, 2}, 4);
  CHECK(std::is_sorted(pts.begin(), pts.end()));
  std::set<Vertex> unique(pts.begin(), pts.end());
  CHECK(unique.size() == pts.size());
  for (Vertex v : pts) CHECK(distance(LatticeKind::Hex, {3, 2}, v) <= 4);
}

TEST_CASE("vertex and lattice parsing") {
  CHECK(parse_vertex("3,-4") == Vertex{3, -4});
  CHECK(parse_vertex("( 3 , -4 )") == Vertex{3, -4});
  CHECK(to_string({3, -4}) == "(3,-4)");
  CHECK_THROWS_AS(parse_vertex("3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_vertex("a,b"), std::invalid_argument);
  CHECK(parse_kind("hex") == LatticeKind::Hex);
  CHECK(parse_kind("Z2") == LatticeKind::Square);
  CHECK(parse_kind("T") == LatticeKind::Tri);
  CHECK_THROWS_AS(parse_kind("cubic"), std::invalid_argument);
  CHECK_THROWS(Window(1, 0, 0, 0));
}
