#include "latpack/pattern.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <functional>
#include <optional>
#include <set>
#include <sstream>

#ifndef LATPACK_DATA_DIR
#define LATPACK_DATA_DIR "data"
#endif

namespace latpack {

const char* const kPatternSha256 = "d5d600c1f686526aa3af792ff5f27ee7ba8ee80490da3123437eda5e575399aa";

namespace {

constexpr int N = PatternGrid::kSize;
using CellSet = std::vector<bool>;  // indexed a + 24*b

[[noreturn]] void fail_at(std::size_t line, std::size_t column, const std::string& msg) {
  throw PatternError("pattern line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + msg);
}

Int torus_distance(Vertex u, Vertex v) {
  Int best = -1;
  for (Int sa = -N; sa <= N; sa += N)
    for (Int sb = -N; sb <= N; sb += N) {
      Int d = distance(LatticeKind::Square, u, {v.a + sa, v.b + sb});
      if (best < 0 || d < best) best = d;
    }
  return best;
}

Vertex cell_vertex(int i) { return {i % N, i / N}; }

std::vector<Vertex> members(const CellSet& s) {
  std::vector<Vertex> out;
  for (int i = 0; i < N * N; ++i)
    if (s[static_cast<std::size_t>(i)]) out.push_back(cell_vertex(i));
  return out;
}

// First pair closer than or at distance r, if any.
std::optional<std::pair<Vertex, Vertex>> torus_conflict(const CellSet& s, Int r) {
  auto pts = members(s);
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j)
      if (torus_distance(pts[i], pts[j]) <= r) return std::make_pair(pts[i], pts[j]);
  return std::nullopt;
}

CellSet color_class(const PatternGrid& g, int value) {
  CellSet s(N * N, false);
  for (int i = 0; i < N * N; ++i) s[static_cast<std::size_t>(i)] = g.cells[static_cast<std::size_t>(i)] == value;
  return s;
}

CellSet shifted(const CellSet& s, Vertex t) {
  CellSet out(N * N, false);
  for (Vertex v : members(s)) out[static_cast<std::size_t>(floor_mod(v.a + t.a, N) + N * floor_mod(v.b + t.b, N))] = true;
  return out;
}

CellSet unite(const CellSet& x, const CellSet& y) {
  CellSet out(N * N, false);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = x[i] || y[i];
  return out;
}

std::size_t count(const CellSet& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), true)); }

std::string pair_text(const std::pair<Vertex, Vertex>& p) {
  return to_string(p.first) + " and " + to_string(p.second) + " at torus distance " +
         std::to_string(torus_distance(p.first, p.second));
}

// Partitions a class into four r-packings of the torus by exact
// backtracking over the conflict graph, vertices in row-major order.
std::optional<std::vector<CellSet>> split_four(const CellSet& s, Int r, std::string& detail) {
  const auto pts = members(s);
  const std::size_t n = pts.size();
  std::vector<std::vector<std::size_t>> adj(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (torus_distance(pts[i], pts[j]) <= r) adj[i].push_back(j);
  std::vector<int> color(n, -1);
  std::size_t steps = 0;
  std::function<bool(std::size_t)> place = [&](std::size_t i) {
    if (i == n) return true;
    ++steps;
    for (int c = 0; c < 4; ++c) {
      bool free = true;
      for (std::size_t j : adj[i]) free = free && color[j] != c;
      if (!free) continue;
      color[i] = c;
      if (place(i + 1)) return true;
    }
    color[i] = -1;
    return false;
  };
  if (!place(0)) {
    detail = "no partition of " + std::to_string(n) + " vertices into four " + std::to_string(r) + "-packings";
    return std::nullopt;
  }
  std::vector<CellSet> parts(4, CellSet(N * N, false));
  for (std::size_t i = 0; i < n; ++i)
    parts[static_cast<std::size_t>(color[i])][static_cast<std::size_t>(pts[i].a + N * pts[i].b)] = true;
  detail = std::to_string(n) + " vertices split into four classes of ";
  for (std::size_t c = 0; c < 4; ++c) detail += (c ? "/" : "") + std::to_string(count(parts[c]));
  detail += " after " + std::to_string(steps) + " search steps";
  return parts;
}

}  // namespace

PatternGrid parse_pattern(std::string_view text) {
  PatternGrid g;
  std::size_t line_no = 0, pos = 0;
  int rows = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.find_first_not_of(" \t") == std::string_view::npos) continue;
    if (rows == N) fail_at(line_no, 1, "more than 24 rows");
    int cols = 0;
    std::size_t i = 0;
    while (i < line.size()) {
      if (line[i] == ' ' || line[i] == '\t') {
        ++i;
        continue;
      }
      std::size_t j = line.find_first_of(" \t", i);
      if (j == std::string_view::npos) j = line.size();
      int value = 0;
      auto [p, ec] = std::from_chars(line.data() + i, line.data() + j, value);
      if (ec != std::errc{} || p != line.data() + j)
        fail_at(line_no, i + 1, "'" + std::string(line.substr(i, j - i)) + "' is not an integer");
      if (value < 1 || value > PatternGrid::kMaxValue)
        fail_at(line_no, i + 1, "value " + std::to_string(value) + " outside 1..17");
      if (cols == N) fail_at(line_no, i + 1, "more than 24 columns");
      g.cells.push_back(value);
      ++cols;
      i = j;
    }
    if (cols != N) fail_at(line_no, line.size() + 1, "expected 24 columns, found " + std::to_string(cols));
    ++rows;
  }
  if (rows != N) fail_at(line_no + 1, 1, "expected 24 rows, found " + std::to_string(rows));
  for (int v = 1; v <= PatternGrid::kMaxValue; ++v)
    if (std::find(g.cells.begin(), g.cells.end(), v) == g.cells.end())
      throw PatternError("pattern never uses value " + std::to_string(v));
  return g;
}

PatternGrid load_pattern(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw PatternError("cannot open pattern file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_pattern(buf.str());
}

std::string default_pattern_path() { return std::string(LATPACK_DATA_DIR) + "/pattern24.txt"; }

std::string sha256_hex(std::string_view bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr) != 1)
    throw std::runtime_error("sha256 failed");
  std::string out;
  char hex[3];
  for (unsigned int i = 0; i < len; ++i) {
    std::snprintf(hex, sizeof hex, "%02x", digest[i]);
    out += hex;
  }
  return out;
}

PeriodicColoring pattern_coloring(const PatternGrid& g) {
  std::vector<Int> values;
  for (int v = 1; v <= PatternGrid::kMaxValue; ++v) values.push_back(v);
  std::vector<int> cells;
  for (int c : g.cells) cells.push_back(c - 1);
  return canonical_coloring(LatticeKind::Square, Sublattice::from_generators({N, 0}, {0, N}), values, cells);
}

ColoringReport verify_pattern_torus(const PatternGrid& g) {
  ColoringReport report;
  report.vertices_scanned = N * N;
  for (int v = 1; v <= PatternGrid::kMaxValue; ++v) {
    if (auto c = torus_conflict(color_class(g, v), v)) {
      report.ok = false;
      report.violation = *c;
      report.issues.push_back("color " + std::to_string(v) + ": " + pair_text(*c));
      break;
    }
  }
  return report;
}

Derived33 derive_33_coloring(const PatternGrid& g, int jobs) {
  Derived33 out;
  auto record = [&](const std::string& claim, bool ok, const std::string& detail) {
    out.steps.push_back({claim, ok, detail});
    if (!ok) throw DerivationError(claim, detail);
  };

  auto torus = verify_pattern_torus(g);
  record("the pattern is a (1,2,...,17)-packing coloring of the 24x24 torus", torus.ok,
         torus.ok ? "all 17 classes checked pairwise" : torus.issues.front());

  std::vector<CellSet> B(PatternGrid::kMaxValue + 1), Bp(PatternGrid::kMaxValue + 1);
  for (int i = 1; i <= PatternGrid::kMaxValue; ++i) {
    B[static_cast<std::size_t>(i)] = color_class(g, i);
    Bp[static_cast<std::size_t>(i)] = shifted(B[static_cast<std::size_t>(i)], {1, 0});
  }
  CellSet rest(N * N, false);
  for (int i = 2; i <= PatternGrid::kMaxValue; ++i) rest = unite(rest, Bp[static_cast<std::size_t>(i)]);
  record("B_1 is the union of B_2..B_17 translated by (1,0)", rest == B[1],
         std::to_string(count(B[1])) + " vertices in B_1");

  for (int i : {2, 3}) {
    auto c = torus_conflict(B[static_cast<std::size_t>(i)], 3);
    record("B_" + std::to_string(i) + " is a 3-packing", !c, c ? pair_text(*c) : std::to_string(count(B[static_cast<std::size_t>(i)])) + " vertices");
  }
  CellSet b1617 = unite(B[16], B[17]);
  auto c1617 = torus_conflict(b1617, 11);
  record("B_16 and B_17 together form an 11-packing", !c1617, c1617 ? pair_text(*c1617) : "checked pairwise");

  std::string detail;
  auto quarters = split_four(Bp[2], 7, detail);
  record("four 7-packings partition B'_2", quarters.has_value(), detail);

  // value -> classes, in the order the recipe introduces them
  std::vector<std::pair<Int, CellSet>> colors;
  auto add = [&](Int value, const CellSet& s) { colors.push_back({value, s}); };
  add(3, B[2]);
  add(3, B[3]);
  add(3, Bp[3]);
  for (int i = 4; i <= 7; ++i) {
    add(i, B[static_cast<std::size_t>(i)]);
    add(i, Bp[static_cast<std::size_t>(i)]);
    add(i, (*quarters)[static_cast<std::size_t>(i - 4)]);
  }
  add(8, B[8]);
  add(8, Bp[8]);
  add(8, B[9]);
  add(9, b1617);
  add(9, unite(Bp[16], Bp[17]));
  add(9, Bp[9]);
  const std::pair<int, CellSet*> extra[] = {{10, &B[14]}, {11, &Bp[14]}, {12, &B[15]}, {13, &Bp[15]}};
  for (const auto& [value, set] : extra) {
    add(value, B[static_cast<std::size_t>(value)]);
    add(value, Bp[static_cast<std::size_t>(value)]);
    add(value, *set);
  }

  std::vector<int> cells(N * N, -1);
  std::vector<Int> values;
  std::string clash;
  for (std::size_t c = 0; c < colors.size(); ++c) {
    values.push_back(colors[c].first);
    for (int i = 0; i < N * N; ++i) {
      if (!colors[c].second[static_cast<std::size_t>(i)]) continue;
      if (cells[static_cast<std::size_t>(i)] >= 0 && clash.empty())
        clash = "vertex " + to_string(cell_vertex(i)) + " receives two colors";
      cells[static_cast<std::size_t>(i)] = static_cast<int>(c);
    }
  }
  if (clash.empty())
    for (int i = 0; i < N * N; ++i)
      if (cells[static_cast<std::size_t>(i)] < 0) {
        clash = "vertex " + to_string(cell_vertex(i)) + " receives no color";
        break;
      }
  record("the recoloring assigns every vertex exactly one of " + std::to_string(colors.size()) + " colors",
         clash.empty(), clash.empty() ? "33 classes" : clash);

  out.coloring = canonical_coloring(LatticeKind::Square, Sublattice::from_generators({N, 0}, {0, N}), values, cells);
  auto report = verify_s_coloring(out.coloring, SequenceSpec::dn(3, 3), jobs);
  record("the recolored pattern is a (3,3)-packing coloring", report.ok,
         report.ok ? std::to_string(out.coloring.color_count()) + " colors" : report.issues.front());
  return out;
}

}  // namespace latpack
