#include "latpack/packings.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <tuple>
#include <unordered_map>

namespace latpack {

Rational LinearPackingSpec::density() const {
  Int d = det();
  if (d == 0) throw std::invalid_argument("degenerate generators");
  return Rational(1, d < 0 ? -d : d);
}

std::string LinearPackingSpec::str() const {
  std::string s = "{x" + to_string(g1) + "+y" + to_string(g2);
  if (offset != Vertex{0, 0}) s += "+" + to_string(offset);
  return s + "}";
}

std::vector<Vertex> enumerate(const LinearPackingSpec& spec, const Window& window) {
  return spec.lattice().points_in(window, spec.offset);
}

Int coset_min_distance(LatticeKind kind, const Coset& coset, Vertex* witness, Int* searched) {
  const Sublattice& L = coset.lattice;
  std::vector<Vertex> starts{coset.rep};
  if (kind == LatticeKind::Hex && L.has_odd_vector())
    starts.push_back(coset.rep + (L.a() % 2 != 0 ? L.basis1() : L.basis2()));
  auto dist = [&](Vertex v) {
    Int best = -1;
    for (Vertex p : starts) {
      Int d = distance(kind, p, p + v);
      if (best < 0 || d < best) best = d;
    }
    return best;
  };
  Vertex best_v = L.basis1();
  Int best = dist(best_v);
  if (Int d2 = dist(L.basis2()); d2 < best) {
    best = d2;
    best_v = L.basis2();
  }
  // Every candidate beating `best` has max(|da|,|db|) <= best.
  Int r = best;
  for (Vertex v : L.points_in(Window(-r, r, -r, r))) {
    if (v == Vertex{0, 0} || distance_lower_bound(kind, v) > best) continue;
    Int d = dist(v);
    if (d < best || (d == best && v < best_v)) {
      best = d;
      best_v = v;
    }
  }
  if (witness) *witness = best_v;
  if (searched) *searched = r;
  return best;
}

PackingCertificate min_pair_distance(const LinearPackingSpec& spec, Int claimed_radius) {
  if (spec.det() == 0) throw std::invalid_argument("degenerate generators");
  PackingCertificate cert;
  cert.spec = spec;
  cert.claimed_radius = claimed_radius;
  cert.min_distance = coset_min_distance(spec.kind, spec.coset(), &cert.witness, &cert.search_radius_used);
  return cert;
}

std::string PackingCertificate::report() const {
  std::ostringstream out;
  out << name(spec.kind) << " " << spec.str() << ": min distance " << min_distance << " (vector "
      << to_string(witness) << ", search box " << search_radius_used << ")";
  if (claimed_radius > 0)
    out << (valid() ? ", valid " : ", NOT a ") << claimed_radius << "-packing";
  return out.str();
}

Int SubdivisionScheme::claimed_count() const {
  Int n = 0;
  for (const auto& p : parts) n += static_cast<Int>(p.translations.size());
  return n;
}

std::vector<SubdivisionScheme::Piece> SubdivisionScheme::pieces() const {
  std::vector<Piece> out;
  for (const auto& p : parts) {
    Sublattice L = p.child.lattice();
    for (Vertex t : p.translations) out.push_back({Coset(L, p.child.offset + t), p.radius});
  }
  return out;
}

Int SubdivisionScheme::max_generator_coordinate() const {
  Int m = 1;
  auto upd = [&](Vertex v) { m = std::max({m, std::abs(v.a), std::abs(v.b)}); };
  upd(parent.g1);
  upd(parent.g2);
  for (const auto& p : parts) {
    upd(p.child.g1);
    upd(p.child.g2);
  }
  return m;
}

std::string SchemeReport::text() const {
  std::ostringstream out;
  out << (ok ? "OK" : "FAIL");
  if (vertices_checked > 0) out << " (" << vertices_checked << " vertices checked)";
  out << "\n";
  for (const auto& c : certificates) out << "  " << c.report() << "\n";
  for (const auto& i : issues) out << "  issue: " << i << "\n";
  if (witness) out << "  witness vertex: " << to_string(*witness) << "\n";
  return out.str();
}

namespace {

void add_obstruction(const SubdivisionScheme& scheme, SchemeReport& report) {
  if (scheme.claimed_count() != 2) return;
  Int radius = scheme.parts.front().radius;
  for (const auto& p : scheme.parts) radius = std::min(radius, p.radius);
  if (auto ob = two_partition_obstruction(scheme.kind, scheme.parent.coset(), radius))
    report.issues.push_back("no 2-partition into " + std::to_string(radius) + "-packings exists: " + ob->text());
}

}  // namespace

SchemeReport verify_scheme(const SubdivisionScheme& scheme) {
  SchemeReport report;
  auto fail = [&](std::string msg) {
    report.ok = false;
    report.issues.push_back(std::move(msg));
  };
  Coset parent = scheme.parent.coset();
  if (scheme.parent_radius > 0) {
    Int d = coset_min_distance(scheme.kind, parent);
    if (d <= scheme.parent_radius)
      fail("parent is not a " + std::to_string(scheme.parent_radius) + "-packing (min distance " + std::to_string(d) + ")");
  }
  auto pieces = scheme.pieces();
  Rational density(0);
  for (const auto& part : scheme.parts) {
    Sublattice L = part.child.lattice();
    density += Rational(static_cast<long>(part.translations.size())) / Rational(L.index());
    if (!parent.lattice.contains(L)) {
      fail("child lattice " + L.str() + " is not a sublattice of parent lattice " + parent.lattice.str());
    } else {
      for (Vertex t : part.translations)
        if (!parent.contains(part.child.offset + t)) fail("copy at " + to_string(part.child.offset + t) + " leaves the parent");
    }
    if (scheme.parts.size() == 1 && parent.lattice.contains(L) &&
        static_cast<Int>(part.translations.size()) != L.index() / parent.lattice.index())
      fail("count " + std::to_string(part.translations.size()) + " differs from index " +
           std::to_string(L.index() / parent.lattice.index()));
    auto cert = min_pair_distance(part.child, part.radius);
    if (!cert.valid()) fail("child is not a " + std::to_string(part.radius) + "-packing");
    report.certificates.push_back(cert);
  }
  if (density != Rational(1) / Rational(parent.lattice.index()))
    fail("density identity fails: children sum to " + density.str() + ", parent has 1/" + std::to_string(parent.lattice.index()));
  // pairwise disjoint copies
  std::map<std::tuple<Int, Int, Int>, std::set<Vertex>> same;
  bool overlap = false;
  for (std::size_t i = 0; i < pieces.size() && !overlap; ++i) {
    const auto& L = pieces[i].coset.lattice;
    if (!same[{L.a(), L.b(), L.c()}].insert(pieces[i].coset.rep).second) {
      fail("copy " + std::to_string(i) + " repeats an earlier copy");
      overlap = true;
      break;
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (pieces[j].coset.lattice == L) continue;
      if (intersects(pieces[i].coset, pieces[j].coset)) {
        fail("copies " + std::to_string(j) + " and " + std::to_string(i) + " intersect");
        overlap = true;
        break;
      }
    }
  }
  if (!report.ok) add_obstruction(scheme, report);
  return report;
}

Window default_window(const SubdivisionScheme& scheme, Int factor) {
  Int half = (factor * scheme.max_generator_coordinate() + 1) / 2;
  return Window::centered({0, 0}, half);
}

SchemeReport verify_partition(const SubdivisionScheme& scheme, const Window& window) {
  Int need = 4 * scheme.max_generator_coordinate();
  if (window.width() < need || window.height() < need)
    throw std::invalid_argument("window too small for " + scheme.name + ": side must be at least " + std::to_string(need));
  SchemeReport report;
  Coset parent = scheme.parent.coset();
  struct Family {
    Sublattice lattice;
    std::unordered_map<Vertex, int, VertexHash> reps;
  };
  std::vector<Family> families;
  for (const auto& part : scheme.parts) {
    Family f{part.child.lattice(), {}};
    for (Vertex t : part.translations) ++f.reps[f.lattice.reduce(part.child.offset + t)];
    families.push_back(std::move(f));
  }
  for (Int b = window.b_min; b <= window.b_max && report.ok; ++b) {
    for (Int a = window.a_min; a <= window.a_max; ++a) {
      Vertex v{a, b};
      int count = 0;
      for (const auto& f : families) {
        auto it = f.reps.find(f.lattice.reduce(v));
        if (it != f.reps.end()) count += it->second;
      }
      int want = parent.contains(v) ? 1 : 0;
      ++report.vertices_checked;
      if (count != want) {
        report.ok = false;
        report.witness = v;
        report.issues.push_back(to_string(v) + (want ? " is covered " : " lies outside the parent but is covered ") +
                                std::to_string(count) + " times");
        break;
      }
    }
  }
  if (!report.ok) add_obstruction(scheme, report);
  return report;
}

SubdivisionScheme identity_scheme(const LinearPackingSpec& spec, Int radius) {
  SubdivisionScheme s;
  s.name = "identity";
  s.statement = "a packing is a partition of itself";
  s.kind = spec.kind;
  s.parent = spec;
  s.parent_radius = radius;
  LinearPackingSpec child = spec;
  child.offset = {0, 0};
  s.parts.push_back({child, {spec.offset}, radius});
  return s;
}

SubdivisionScheme compose(const SubdivisionScheme& inner, const SubdivisionScheme& outer, std::size_t piece_index) {
  auto pieces = outer.pieces();
  if (piece_index >= pieces.size()) throw std::out_of_range("compose: piece index out of range");
  const Coset& target = pieces[piece_index].coset;
  Sublattice inner_parent = inner.parent.lattice();
  if (inner.kind != outer.kind || !(inner_parent == target.lattice))
    throw std::invalid_argument("compose: " + inner.name + " subdivides " + inner_parent.str() +
                                " but piece " + std::to_string(piece_index) + " of " + outer.name + " is a coset of " +
                                target.lattice.str());
  Vertex shift = target.rep - inner.parent.offset;
  SubdivisionScheme out;
  out.name = inner.name + "@" + outer.name + "[" + std::to_string(piece_index) + "]";
  out.statement = inner.statement + ", applied to one copy of: " + outer.statement;
  out.kind = outer.kind;
  out.parent = outer.parent;
  out.parent_radius = outer.parent_radius;
  out.k = outer.k;
  out.m = outer.m;
  std::size_t seen = 0;
  for (const auto& part : outer.parts) {
    SchemePart kept{part.child, {}, part.radius};
    for (Vertex t : part.translations) {
      if (seen++ != piece_index) kept.translations.push_back(t);
    }
    if (!kept.translations.empty()) out.parts.push_back(std::move(kept));
  }
  for (const auto& part : inner.parts) {
    SchemePart moved{part.child, {}, part.radius};
    for (Vertex t : part.translations) moved.translations.push_back(t + shift);
    out.parts.push_back(std::move(moved));
  }
  return out;
}

std::string TriangleObstruction::text() const {
  return "vectors u=" + to_string(u) + " (d=" + std::to_string(du) + "), v=" + to_string(v) + " (d=" +
         std::to_string(dv) + "), u+v=" + to_string(u + v) + " (d=" + std::to_string(duv) + ")";
}

std::optional<TriangleObstruction> two_partition_obstruction(LatticeKind kind, const Coset& parent, Int radius) {
  Vertex p = parent.rep;
  std::vector<Vertex> shorts;
  for (Vertex v : parent.lattice.points_in(Window(-radius, radius, -radius, radius)))
    if (v != Vertex{0, 0}) shorts.push_back(v);
  for (Vertex u : shorts) {
    Int du = distance(kind, p, p + u);
    if (du > radius) continue;
    for (Vertex v : shorts) {
      Int dv = distance(kind, p + u, p + u + v);
      Int duv = distance(kind, p, p + u + v);
      if (dv <= radius && duv <= radius && u + v != Vertex{0, 0}) return TriangleObstruction{u, v, du, dv, duv};
    }
  }
  return std::nullopt;
}

SubdivisionScheme SchemeTemplate::instantiate(Int k, Int m) const {
  if (k < 1 || m < 1) throw std::invalid_argument("k and m must be positive");
  SubdivisionScheme s = build(uses_k ? k : 1, uses_m ? m : 1);
  s.name = name;
  s.statement = statement;
  s.kind = kind;
  s.k = uses_k ? k : 1;
  s.m = uses_m ? m : 1;
  return s;
}

LinearPackingSpec base_packing(LatticeKind kind, Int i) {
  auto spec = [&](Vertex g1, Vertex g2) { return LinearPackingSpec{kind, g1, g2, {0, 0}}; };
  switch (kind) {
    case LatticeKind::Hex:
      if (i == 1) return spec({1, 1}, {2, 0});
      if (i == 2) return spec({2, 1}, {4, 0});
      if (i == 3) return spec({3, 1}, {6, 0});
      if (i == 4) return spec({3, 2}, {7, 1});
      break;
    case LatticeKind::Square:
      if (i == 1) return spec({1, 1}, {2, 0});
      if (i == 2) return spec({2, 1}, {1, 3});
      if (i == 3) return spec({2, 2}, {4, 0});
      if (i == 4) return spec({3, 2}, {8, 1});
      break;
    case LatticeKind::Tri:
      if (i == 1) return spec({1, 1}, {3, 0});
      if (i == 2) return spec({2, 1}, {-1, 3});
      if (i == 3) return spec({2, 2}, {6, 0});
      break;
  }
  throw std::invalid_argument("no base packing X_" + std::to_string(i) + " for " + std::string(name(kind)));
}

namespace {

using Family = std::vector<Vertex>;

struct Row {
  // child generators at k = 1; the row at k scales them by k
  Vertex g1, g2;
  Int radius_slope;  // radius = slope*k - 1
  std::function<Family(Int k)> family;
};

LinearPackingSpec scaled(LatticeKind kind, const Row& row, Int k) {
  return {kind, k * row.g1, k * row.g2, {0, 0}};
}

SubdivisionScheme one_part(LatticeKind kind, LinearPackingSpec parent, Int parent_radius, LinearPackingSpec child,
                           Family translations, Int radius) {
  SubdivisionScheme s;
  s.kind = kind;
  s.parent = parent;
  s.parent_radius = parent_radius;
  s.parts.push_back({child, std::move(translations), radius});
  return s;
}

// Translations of a child inside its parent as coset representatives.
Family reps(const LinearPackingSpec& parent, const LinearPackingSpec& child) {
  return parent.lattice().coset_representatives(child.lattice());
}

Family grid(Int k, const std::function<void(Int, Int, Family&)>& body) {
  Family f;
  for (Int i = 0; i < k; ++i)
    for (Int j = 0; j < k; ++j) body(i, j, f);
  return f;
}

std::string radius_name(Int slope) { return std::to_string(slope) + "k-1"; }

class CatalogBuilder {
 public:
  std::vector<SchemeTemplate> out;

  void add(std::string name, std::string statement, LatticeKind kind, bool uses_k, bool uses_m,
           std::function<SubdivisionScheme(Int, Int)> build) {
    out.push_back({std::move(name), std::move(statement), kind, uses_k, uses_m, std::move(build)});
  }

  void base(LatticeKind kind, Int i) {
    std::string prefix = std::string(name(kind)) + ".x" + std::to_string(i);
    LinearPackingSpec x = base_packing(kind, i);
    Int count = std::abs(x.det());
    add(prefix, std::to_string(count) + " translates of X_" + std::to_string(i) + " partition the lattice", kind, false,
        false, [kind, x, i](Int, Int) {
          LinearPackingSpec whole{kind, {1, 0}, {0, 1}, {0, 0}};
          return one_part(kind, whole, 0, x, reps(whole, x), i);
        });
  }

  // A table row X_i -> copies of k*L and its m^2 refinement.
  void row(LatticeKind kind, Int i, const Row& r) {
    std::string prefix = std::string(name(kind)) + ".x" + std::to_string(i) + ".";
    LinearPackingSpec x = base_packing(kind, i);
    Int copies = std::abs(r.g1.a * r.g2.b - r.g1.b * r.g2.a) / std::abs(x.det());
    std::string rn = radius_name(r.radius_slope);
    add(prefix + rn, std::to_string(copies) + "k^2 (" + rn + ")-packings partition X_" + std::to_string(i), kind, true,
        false, [kind, x, i, r](Int k, Int) {
          return one_part(kind, x, i, scaled(kind, r, k), r.family(k), r.radius_slope * k - 1);
        });
    add(prefix + rn + ">" + std::to_string(r.radius_slope) + "mk-1",
        "m^2 (" + std::to_string(r.radius_slope) + "mk-1)-packings partition a (" + rn + ")-packing of X_" +
            std::to_string(i),
        kind, true, true, [kind, r](Int k, Int m) {
          Family f;
          for (Int a = 0; a < m; ++a)
            for (Int b = 0; b < m; ++b) f.push_back(k * (a * r.g1 + b * r.g2));
          return one_part(kind, scaled(kind, r, k), r.radius_slope * k - 1, scaled(kind, r, m * k), f,
                          r.radius_slope * m * k - 1);
        });
  }

  // A (parent_slope k - 1)-packing split into copies of a finer row lattice.
  void split(LatticeKind kind, Int i, const Row& from, const Row& to, Int to_scale, std::string statement) {
    std::string nm = std::string(name(kind)) + ".x" + std::to_string(i) + "." + radius_name(from.radius_slope) + ">" +
                     radius_name(to.radius_slope * to_scale);
    add(nm, std::move(statement), kind, true, false, [kind, from, to, to_scale](Int k, Int) {
      LinearPackingSpec parent = scaled(kind, from, k);
      LinearPackingSpec child = scaled(kind, to, to_scale * k);
      return one_part(kind, parent, from.radius_slope * k - 1, child, reps(parent, child),
                      to.radius_slope * to_scale * k - 1);
    });
  }
};

std::vector<SchemeTemplate> build_catalog() {
  using K = LatticeKind;
  CatalogBuilder cb;
  for (Int i = 1; i <= 4; ++i) cb.base(K::Hex, i);
  for (Int i = 1; i <= 4; ++i) cb.base(K::Square, i);
  for (Int i = 1; i <= 3; ++i) cb.base(K::Tri, i);

  // Hex X_2: A_k and B_k
  Row hA{{2, 1}, {4, 0}, 3, [](Int k) { return grid(k, [](Int i, Int j, Family& f) { f.push_back({2 * i + 4 * j, i}); }); }};
  Row hB{{4, 0}, {0, 2}, 4, [](Int k) {
           return grid(k, [](Int i, Int j, Family& f) {
             for (Int a = 0; a < 2; ++a) f.push_back({4 * i + 2 * a, 2 * j + a});
           });
         }};
  cb.row(K::Hex, 2, hA);
  cb.row(K::Hex, 2, hB);
  cb.add("hex.x2.4k-1>6k-1", "two (6k-1)-packings A_2k partition a (4k-1)-packing B_k", K::Hex, true, false,
         [hA, hB](Int k, Int) {
           return one_part(K::Hex, scaled(K::Hex, hB, k), 4 * k - 1, scaled(K::Hex, hA, 2 * k), {{0, 0}, {0, 2 * k}},
                           6 * k - 1);
         });

  // Hex X_3
  Row h3_1{{3, 1}, {6, 0}, 4, [](Int k) { return grid(k, [](Int i, Int j, Family& f) { f.push_back({3 * i + 6 * j, i}); }); }};
  Row h3_2{{3, 3}, {6, 0}, 6, [](Int k) {
             return grid(k, [](Int i, Int j, Family& f) {
               for (Int a = 0; a < 3; ++a) f.push_back({3 * i + 6 * j, 3 * i + 2 * a});
             });
           }};
  Row h3_3{{6, 4}, {12, 0}, 10, [](Int k) {
             return grid(k, [](Int i, Int j, Family& f) {
               for (Int a = 0; a < 4; ++a)
                 for (Int b = 0; b < 2; ++b) f.push_back({6 * i + 12 * j + 3 * b, 4 * i + 2 * a + b});
             });
           }};
  Row h3_4{{12, 6}, {24, 0}, 18, [](Int k) {
             return grid(k, [](Int i, Int j, Family& f) {
               for (Int a = 0; a < 6; ++a)
                 for (Int b = 0; b < 4; ++b) f.push_back({12 * i + 24 * j + 3 * b, 6 * i + 2 * a + b});
             });
           }};
  for (const Row* r : {&h3_1, &h3_2, &h3_3, &h3_4}) cb.row(K::Hex, 3, *r);
  cb.split(K::Hex, 3, h3_2, h3_1, 3, "three (12k-1)-packings partition a (6k-1)-packing of X_3");
  // As stated this split does not exist; kept so that verification reports it.
  cb.add("hex.x3.10k-1>16k-1", "two (16k-1)-packings partition a (10k-1)-packing of X_3", K::Hex, true, false,
         [h3_1, h3_3](Int k, Int) {
           return one_part(K::Hex, scaled(K::Hex, h3_3, k), 10 * k - 1, scaled(K::Hex, h3_1, 4 * k),
                           {{0, 0}, {6 * k, 4 * k}}, 16 * k - 1);
         });
  cb.add("hex.x3.5>17+23", "four 17-packings and six 23-packings partition a 5-packing of X_3", K::Hex, false, false,
         [h3_1, h3_2, h3_4](Int, Int) {
           LinearPackingSpec parent = scaled(K::Hex, h3_2, 1);
           LinearPackingSpec square{K::Hex, {6, 0}, {0, 6}, {0, 0}};
           LinearPackingSpec p17 = scaled(K::Hex, h3_4, 1);
           LinearPackingSpec p23 = scaled(K::Hex, h3_1, 6);
           SubdivisionScheme s = one_part(K::Hex, parent, 5, p17, reps(square, p17), 17);
           Family f23;
           for (Vertex t : reps(square, p23)) f23.push_back(t + Vertex{3, 3});
           s.parts.push_back({p23, f23, 23});
           return s;
         });
  // The union of two (10k-1)-packings <(6k,0),(0,4k)> splits into four (16k-1)-packings.
  auto pair_lattice = [](Int k) { return LinearPackingSpec{K::Hex, {6 * k, 0}, {0, 4 * k}, {0, 0}}; };
  cb.add("hex.x3.10k-1x2>16k-1", "four (16k-1)-packings partition the union of two (10k-1)-packings of X_3", K::Hex,
         true, false, [h3_1, pair_lattice](Int k, Int) {
           LinearPackingSpec parent = pair_lattice(k);
           LinearPackingSpec child = scaled(K::Hex, h3_1, 4 * k);
           return one_part(K::Hex, parent, 6 * k - 1, child, reps(parent, child), 16 * k - 1);
         });
  cb.add("hex.x3.10k-1+16k-1", "4k^2 (10k-1)-packings and 8k^2 (16k-1)-packings partition X_3", K::Hex, true, false,
         [h3_1, h3_3, pair_lattice](Int k, Int) {
           LinearPackingSpec x3 = base_packing(K::Hex, 3);
           LinearPackingSpec pair = pair_lattice(k);
           LinearPackingSpec p10 = scaled(K::Hex, h3_3, k);
           LinearPackingSpec p16 = scaled(K::Hex, h3_1, 4 * k);
           Family pairs = reps(x3, pair);
           Family halves = reps(pair, p10), quarters = reps(pair, p16);
           SubdivisionScheme s;
           s.kind = K::Hex;
           s.parent = x3;
           s.parent_radius = 3;
           SchemePart a{p10, {}, 10 * k - 1}, b{p16, {}, 16 * k - 1};
           for (std::size_t i = 0; i < pairs.size(); ++i) {
             bool keep = i < pairs.size() / 2;
             for (Vertex t : keep ? halves : quarters) (keep ? a : b).translations.push_back(pairs[i] + t);
           }
           s.parts = {a, b};
           return s;
         });

  // Hex X_4
  Row h4_1{{3, 2}, {-1, 3}, 5, [](Int k) { return grid(k, [](Int i, Int j, Family& f) { f.push_back({3 * i - j, 2 * i + 3 * j}); }); }};
  Row h4_2{{7, 1}, {-1, 3}, 6, [](Int k) {
             return grid(k, [](Int i, Int j, Family& f) {
               for (Int a = 0; a < 2; ++a) f.push_back({7 * i + 3 * a - j, i + 2 * a + 3 * j});
             });
           }};
  Row h4_3{{7, 1}, {2, 5}, 8, [](Int k) {
             return grid(k, [](Int i, Int j, Family& f) {
               for (Int a = 0; a < 3; ++a) f.push_back({7 * i + 2 * j + 3 * a, i + 5 * j + 2 * a});
             });
           }};
  Row h4_4{{-2, 6}, {11, 0}, 11, [](Int k) {
             return grid(k, [](Int i, Int j, Family& f) {
               for (Int a = 0; a < 6; ++a) f.push_back({-2 * i + 11 * j + 7 * a, 6 * i + a});
             });
           }};
  for (const Row* r : {&h4_1, &h4_2, &h4_3, &h4_4}) cb.row(K::Hex, 4, *r);
  cb.split(K::Hex, 4, h4_2, h4_1, 2, "two (10k-1)-packings partition a (6k-1)-packing of X_4");
  cb.split(K::Hex, 4, h4_1, h4_2, 1, "two (6k-1)-packings partition a (5k-1)-packing of X_4");
  cb.split(K::Hex, 4, h4_3, h4_1, 3, "three (15k-1)-packings partition a (8k-1)-packing of X_4");
  cb.split(K::Hex, 4, h4_1, h4_3, 1, "three (8k-1)-packings partition a (5k-1)-packing of X_4");

  // Square X_2, X_3, X_4
  Row s2_1{{2, 1}, {-1, 2}, 3, [](Int k) { return grid(k, [](Int i, Int j, Family& f) { f.push_back({2 * i - j, i + 2 * j}); }); }};
  Row s2_2{{4, 2}, {1, 3}, 4, [](Int k) {
             return grid(k, [](Int i, Int j, Family& f) {
               for (Int a = 0; a < 2; ++a) f.push_back({4 * i + 2 * a + j, 2 * i + a + 3 * j});
             });
           }};
  cb.row(K::Square, 2, s2_1);
  cb.row(K::Square, 2, s2_2);
  cb.split(K::Square, 2, s2_2, s2_1, 2, "two (6k-1)-packings partition a (4k-1)-packing of X_2");
  cb.split(K::Square, 2, s2_1, s2_2, 1, "two (4k-1)-packings partition a (3k-1)-packing of X_2");
  Row s3_1{{2, 2}, {4, 0}, 4, [](Int k) { return grid(k, [](Int i, Int j, Family& f) { f.push_back({2 * i + 4 * j, 2 * i}); }); }};
  cb.row(K::Square, 3, s3_1);
  Row s4_1{{3, 2}, {-2, 3}, 5, [](Int k) { return grid(k, [](Int i, Int j, Family& f) { f.push_back({3 * i - 2 * j, 2 * i + 3 * j}); }); }};
  Row s4_2{{6, 4}, {1, 5}, 6, [](Int k) {
             return grid(k, [](Int i, Int j, Family& f) {
               for (Int a = 0; a < 2; ++a) f.push_back({6 * i + j + 3 * a, 4 * i + 5 * j + 2 * a});
             });
           }};
  cb.row(K::Square, 4, s4_1);
  cb.row(K::Square, 4, s4_2);
  cb.split(K::Square, 4, s4_2, s4_1, 2, "two (10k-1)-packings partition a (6k-1)-packing of X_4");
  cb.split(K::Square, 4, s4_1, s4_2, 1, "two (6k-1)-packings partition a (5k-1)-packing of X_4");

  // Triangular X_1, X_2, X_3
  Row t1_1{{1, 1}, {3, 0}, 2, [](Int k) { return grid(k, [](Int i, Int j, Family& f) { f.push_back({i + 3 * j, i}); }); }};
  Row t1_2{{3, 3}, {3, 0}, 3, [](Int k) {
             return grid(k, [](Int i, Int j, Family& f) {
               for (Int a = 0; a < 3; ++a) f.push_back({3 * i + 3 * j + a, 3 * i + a});
             });
           }};
  cb.row(K::Tri, 1, t1_1);
  cb.row(K::Tri, 1, t1_2);
  cb.split(K::Tri, 1, t1_1, t1_2, 1, "three (3k-1)-packings partition a (2k-1)-packing of X_1");
  Row t2_1{{2, 1}, {7, 0}, 3, [](Int k) { return grid(k, [](Int i, Int j, Family& f) { f.push_back({2 * i + 7 * j, i}); }); }};
  cb.row(K::Tri, 2, t2_1);
  Row t3_1{{2, 2}, {6, 0}, 4, [](Int k) { return grid(k, [](Int i, Int j, Family& f) { f.push_back({2 * i + 6 * j, 2 * i}); }); }};
  Row t3_2{{6, 6}, {6, 0}, 6, [](Int k) {
             return grid(k, [](Int i, Int j, Family& f) {
               for (Int a = 0; a < 3; ++a) f.push_back({6 * i + 6 * j + 2 * a, 6 * i + 2 * a});
             });
           }};
  cb.row(K::Tri, 3, t3_1);
  cb.row(K::Tri, 3, t3_2);
  cb.split(K::Tri, 3, t3_2, t3_1, 3, "three (12k-1)-packings partition a (6k-1)-packing of X_3");
  return cb.out;
}

}  // namespace

const std::vector<SchemeTemplate>& scheme_catalog() {
  static const std::vector<SchemeTemplate> catalog = build_catalog();
  return catalog;
}

const SchemeTemplate& find_scheme(const std::string& nm) {
  for (const auto& t : scheme_catalog())
    if (t.name == nm) return t;
  throw std::invalid_argument("unknown scheme '" + nm + "'");
}

std::string export_catalog(Int kmax, Int mmax) {
  std::ostringstream out;
  out << "# scheme catalog: one record per instantiated scheme\n";
  for (const auto& t : scheme_catalog()) {
    for (Int k = 1; k <= (t.uses_k ? kmax : 1); ++k) {
      for (Int m = 1; m <= (t.uses_m ? mmax : 1); ++m) {
        auto s = t.instantiate(k, m);
        out << "scheme " << s.name << " k=" << s.k << " m=" << s.m << "\n";
        out << "kind " << name(s.kind) << "\n";
        out << "statement " << s.statement << "\n";
        out << "parent " << to_string(s.parent.g1) << " " << to_string(s.parent.g2) << " offset "
            << to_string(s.parent.offset) << " radius " << s.parent_radius << "\n";
        for (const auto& p : s.parts) {
          out << "child " << to_string(p.child.g1) << " " << to_string(p.child.g2) << " offset "
              << to_string(p.child.offset) << " radius " << p.radius << " count " << p.translations.size() << "\n";
          out << "translations";
          for (Vertex v : p.translations) out << " " << to_string(v);
          out << "\n";
        }
        out << "end\n";
      }
    }
  }
  return out.str();
}

}  // namespace latpack
