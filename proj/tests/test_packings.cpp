#include <doctest.h>

#include <map>
#include <random>

#include "latpack/packings.hpp"

using namespace latpack;

namespace {

Int brute_min_distance(const LinearPackingSpec& spec) {
  Int best = -1;
  for (Vertex p : spec.lattice().points_in(Window::centered(spec.offset, 60), spec.offset)) {
    if (p == spec.offset) continue;
    Int d = distance(spec.kind, spec.offset, p);
    if (best < 0 || d < best) best = d;
  }
  return best;
}

Int count_radius(const SubdivisionScheme& s, Int r) {
  Int n = 0;
  for (const auto& p : s.pieces()) n += p.radius == r ? 1 : 0;
  return n;
}

}  // namespace

TEST_CASE("base packings reach their minimum distance and density") {
  struct Row {
    LatticeKind kind;
    Int i, min_distance;
    Rational density;
  };
  const Row rows[] = {
      {LatticeKind::Hex, 2, 3, Rational(1, 4)},    {LatticeKind::Hex, 3, 4, Rational(1, 6)},
      {LatticeKind::Hex, 4, 5, Rational(1, 11)},   {LatticeKind::Square, 2, 3, Rational(1, 5)},
      {LatticeKind::Square, 3, 4, Rational(1, 8)}, {LatticeKind::Square, 4, 5, Rational(1, 13)},
      {LatticeKind::Tri, 1, 2, Rational(1, 3)},    {LatticeKind::Tri, 2, 3, Rational(1, 7)},
      {LatticeKind::Tri, 3, 4, Rational(1, 12)},
  };
  for (const auto& r : rows) {
    auto spec = base_packing(r.kind, r.i);
    auto cert = min_pair_distance(spec, r.i);
    CHECK_MESSAGE(cert.min_distance == r.min_distance, name(r.kind), " X_", r.i);
    CHECK(cert.valid());
    CHECK(spec.density() == r.density);
    CHECK(distance(r.kind, spec.offset, spec.offset + cert.witness) == cert.min_distance);
  }
  CHECK_FALSE(min_pair_distance(base_packing(LatticeKind::Hex, 3), 4).valid());
}

TEST_CASE("minimum distance search agrees with a brute-force scan") {
  std::mt19937 rng(99);
  std::uniform_int_distribution<Int> c(-6, 6);
  for (LatticeKind kind : {LatticeKind::Hex, LatticeKind::Square, LatticeKind::Tri}) {
    for (int trial = 0; trial < 60; ++trial) {
      LinearPackingSpec spec{kind, {c(rng), c(rng)}, {c(rng), c(rng)}, {c(rng), c(rng)}};
      if (spec.det() == 0) continue;
      CHECK(coset_min_distance(kind, spec.coset()) == brute_min_distance(spec));
    }
  }
}

TEST_CASE("catalog rows match the tabulated children") {
  auto s = find_scheme("hex.x3.10k-1").instantiate(1);
  CHECK(s.claimed_count() == 8);
  CHECK(count_radius(s, 9) == 8);
  CHECK(s.parts.front().child.lattice() == Sublattice::from_generators({6, 4}, {12, 0}));

  auto h4 = find_scheme("hex.x4.11k-1").instantiate(1);
  CHECK(h4.claimed_count() == 6);
  CHECK(count_radius(h4, 10) == 6);

  auto t3 = find_scheme("tri.x3.6k-1").instantiate(1);
  CHECK(t3.claimed_count() == 3);
  CHECK(count_radius(t3, 5) == 3);

  auto b1 = find_scheme("hex.x3.4k-1").instantiate(2);
  CHECK(b1.claimed_count() == 4);
  CHECK(count_radius(b1, 7) == 4);
  CHECK(verify_partition(b1, default_window(b1)).ok);

  auto p2 = find_scheme("hex.x3.5>17+23").instantiate(1);
  CHECK(count_radius(p2, 17) == 4);
  CHECK(count_radius(p2, 23) == 6);
  CHECK_THROWS_AS(find_scheme("hex.x9"), std::invalid_argument);
}

TEST_CASE("every catalog scheme verifies except the refuted split") {
  for (const auto& t : scheme_catalog()) {
    for (Int k = 1; k <= 2; ++k) {
      for (Int m = 1; m <= (t.uses_m ? 2 : 1); ++m) {
        auto s = t.instantiate(k, m);
        auto report = verify_scheme(s);
        if (t.name == "hex.x3.10k-1>16k-1") {
          CHECK_FALSE(report.ok);
          continue;
        }
        CHECK_MESSAGE(report.ok, s.name, " k=", k, " m=", m, "\n", report.text());
        auto window = verify_partition(s, default_window(s));
        CHECK_MESSAGE(window.ok, s.name, " k=", k, " m=", m, "\n", window.text());
        Rational sum(0);
        for (const auto& p : s.pieces()) sum += Rational(1, p.coset.lattice.index());
        CHECK(sum == Rational(1, s.parent.lattice().index()));
      }
    }
  }
}

TEST_CASE("two (16k-1)-packings cannot partition a (10k-1)-packing of X_3") {
  for (Int k = 1; k <= 3; ++k) {
    auto s = find_scheme("hex.x3.10k-1>16k-1").instantiate(k);
    auto obstruction = two_partition_obstruction(LatticeKind::Hex, s.parent.coset(), 16 * k - 1);
    REQUIRE(obstruction.has_value());
    CHECK(obstruction->du <= 16 * k - 1);
    CHECK(obstruction->dv <= 16 * k - 1);
    CHECK(obstruction->duv <= 16 * k - 1);
    CHECK(s.parent.lattice().contains(obstruction->u));
    CHECK(s.parent.lattice().contains(obstruction->v));
  }
  auto first = find_scheme("hex.x3.10k-1>16k-1").instantiate(1);
  auto obstruction = two_partition_obstruction(LatticeKind::Hex, first.parent.coset(), 15);
  REQUIRE(obstruction.has_value());
  CHECK(obstruction->u == Vertex{-6, -4});
  CHECK(obstruction->v == Vertex{12, 0});
}

TEST_CASE("composition of schemes") {
  auto outer = find_scheme("hex.x3.10k-1").instantiate(1);
  auto refuted = find_scheme("hex.x3.10k-1>16k-1").instantiate(1);
  auto composed = compose(refuted, outer, 0);
  CHECK(composed.claimed_count() == 9);
  CHECK_FALSE(verify_scheme(composed).ok);

  auto mismatch = find_scheme("hex.x2.4k-1>6k-1").instantiate(1);
  CHECK_THROWS_AS(compose(mismatch, outer, 0), std::invalid_argument);

  auto six = find_scheme("hex.x3.6k-1").instantiate(1);
  auto twelve = find_scheme("hex.x3.6k-1>12k-1").instantiate(1);
  auto good = compose(twelve, six, 1);
  CHECK(good.claimed_count() == 5);
  CHECK(verify_scheme(good).ok);
  CHECK(verify_partition(good, default_window(good)).ok);
  CHECK(count_radius(good, 11) == 3);
  CHECK(count_radius(good, 5) == 2);

  auto repaired = find_scheme("hex.x3.10k-1+16k-1").instantiate(1);
  CHECK(count_radius(repaired, 9) == 4);
  CHECK(count_radius(repaired, 15) == 8);
  CHECK(verify_scheme(repaired).ok);
}

TEST_CASE("partition windows must be large enough") {
  auto s = find_scheme("hex.x3.18k-1").instantiate(1);
  CHECK_THROWS(verify_partition(s, Window(0, 5, 0, 5)));
}

TEST_CASE("identity scheme and catalog export") {
  auto id = identity_scheme(base_packing(LatticeKind::Square, 2), 2);
  CHECK(id.claimed_count() == 1);
  CHECK(verify_scheme(id).ok);
  const std::string text = export_catalog(1, 1);
  CHECK(text.find("scheme hex.x2.3k-1 k=1 m=1") != std::string::npos);
  CHECK(text.find("scheme tri.x3.6k-1>12k-1 k=1 m=1") != std::string::npos);
}
