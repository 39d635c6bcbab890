#include "latpack/plans.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <numeric>
#include <sstream>

namespace latpack {

namespace {

struct Line {
  std::size_t number;
  std::size_t indent;
  std::vector<std::string> words;
};

[[noreturn]] void parse_fail(std::size_t line, const std::string& msg) {
  throw PlanError("plan file line " + std::to_string(line) + ": " + msg);
}

Int to_int(const std::string& s, std::size_t line) {
  Int v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || p != s.data() + s.size()) parse_fail(line, "expected an integer, got '" + s + "'");
  return v;
}

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string raw(text.substr(pos, end - pos));
    pos = end + 1;
    ++number;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::size_t indent = raw.find_first_not_of(' ');
    if (indent == std::string::npos) continue;
    if (raw.find('\t') != std::string::npos) parse_fail(number, "tabs are not allowed, indent with spaces");
    std::istringstream words(raw);
    Line l{number, indent, {}};
    for (std::string w; words >> w;) l.words.push_back(w);
    out.push_back(std::move(l));
    if (end == text.size()) break;
  }
  return out;
}

PlanNode parse_node(const Line& l) {
  PlanNode node;
  if (l.words[0] == "leaf") {
    if (l.words.size() != 1) parse_fail(l.number, "'leaf' takes no arguments");
    return node;
  }
  if (l.words[0] != "split" || l.words.size() < 2) parse_fail(l.number, "expected 'leaf' or 'split <scheme> [k=K] [m=M]'");
  node.scheme = l.words[1];
  for (std::size_t i = 2; i < l.words.size(); ++i) {
    const auto& w = l.words[i];
    if (w.rfind("k=", 0) == 0) node.k = to_int(w.substr(2), l.number);
    else if (w.rfind("m=", 0) == 0) node.m = to_int(w.substr(2), l.number);
    else parse_fail(l.number, "unknown split option '" + w + "'");
  }
  return node;
}

// Lines [i, end) with indent > parent_indent form the subtree list.
std::vector<PlanNode> parse_children(const std::vector<Line>& lines, std::size_t& i, std::size_t parent_indent) {
  std::vector<PlanNode> out;
  std::size_t child_indent = 0;
  while (i < lines.size() && lines[i].indent > parent_indent) {
    if (child_indent == 0) child_indent = lines[i].indent;
    if (lines[i].indent != child_indent) parse_fail(lines[i].number, "inconsistent indentation");
    PlanNode node = parse_node(lines[i]);
    ++i;
    node.children = parse_children(lines, i, child_indent);
    if (node.leaf() && !node.children.empty()) parse_fail(lines[i - 1].number, "a leaf cannot have children");
    out.push_back(std::move(node));
  }
  return out;
}

void format_node(std::ostringstream& out, const PlanNode& node, std::size_t indent) {
  out << std::string(indent, ' ');
  if (node.leaf()) {
    out << "leaf\n";
    return;
  }
  out << "split " << node.scheme << " k=" << node.k;
  if (node.m != 1) out << " m=" << node.m;
  out << "\n";
  for (const auto& c : node.children) format_node(out, c, indent + 2);
}

}  // namespace

std::vector<ColoringPlan> parse_plans(std::string_view text) {
  auto lines = tokenize(text);
  std::vector<ColoringPlan> plans;
  std::size_t i = 0;
  while (i < lines.size()) {
    const Line& head = lines[i];
    if (head.indent != 0 || head.words[0] != "plan" || head.words.size() != 2)
      parse_fail(head.number, "expected 'plan <name>'");
    ColoringPlan plan;
    plan.name = head.words[1];
    bool have_lattice = false, have_seq = false, have_claim = false, closed = false;
    ++i;
    while (i < lines.size()) {
      const Line& l = lines[i];
      if (l.indent != 0) parse_fail(l.number, "unexpected indentation");
      const std::string& key = l.words[0];
      ++i;
      if (key == "end") {
        closed = true;
        break;
      } else if (key == "lattice" && l.words.size() == 2) {
        try {
          plan.kind = parse_kind(l.words[1]);
        } catch (const std::invalid_argument& e) {
          parse_fail(l.number, e.what());
        }
        have_lattice = true;
      } else if (key == "sequence" && l.words.size() >= 3) {
        try {
          if (l.words[1] == "dn" && l.words.size() == 4) {
            plan.spec = SequenceSpec::dn(to_int(l.words[2], l.number), to_int(l.words[3], l.number));
          } else if (l.words[1] == "list") {
            std::vector<Int> vals;
            for (std::size_t w = 2; w < l.words.size(); ++w) vals.push_back(to_int(l.words[w], l.number));
            plan.spec = SequenceSpec::list(vals);
          } else {
            parse_fail(l.number, "expected 'sequence dn D N' or 'sequence list S1 S2 ...'");
          }
        } catch (const std::invalid_argument& e) {
          parse_fail(l.number, e.what());
        }
        have_seq = true;
      } else if (key == "claimed" && l.words.size() == 2) {
        plan.claimed = to_int(l.words[1], l.number);
        have_claim = true;
      } else if (key == "base" && l.words.size() == 2) {
        plan.base = l.words[1];
      } else if (key == "note") {
        std::string note;
        for (std::size_t w = 1; w < l.words.size(); ++w) note += (w > 1 ? " " : "") + l.words[w];
        plan.notes.push_back(note);
      } else if (key == "cell" && l.words.size() >= 3 && l.words[2] == "colors") {
        PlanCell cell;
        cell.copies = to_int(l.words[1], l.number);
        if (cell.copies < 1) parse_fail(l.number, "cell needs at least one copy");
        for (std::size_t w = 3; w < l.words.size(); ++w) cell.colors.push_back(to_int(l.words[w], l.number));
        auto nodes = parse_children(lines, i, 0);
        if (nodes.size() > 1) parse_fail(l.number, "a cell has a single subdivision tree");
        if (!nodes.empty()) cell.node = std::move(nodes.front());
        plan.cells.push_back(std::move(cell));
      } else {
        parse_fail(l.number, "unknown or malformed directive '" + key + "'");
      }
    }
    if (!closed) parse_fail(head.number, "plan '" + plan.name + "' is missing 'end'");
    if (!have_lattice || !have_seq || !have_claim || plan.base.empty())
      parse_fail(head.number, "plan '" + plan.name + "' needs lattice, sequence, claimed and base");
    plans.push_back(std::move(plan));
  }
  return plans;
}

std::string format_plan(const ColoringPlan& plan) {
  std::ostringstream out;
  out << "plan " << plan.name << "\n";
  out << "lattice " << name(plan.kind) << "\n";
  if (plan.spec.is_dn()) {
    out << "sequence dn " << plan.spec.d() << " " << plan.spec.n() << "\n";
  } else {
    out << "sequence list";
    for (Int v : plan.spec.values()) out << " " << v;
    out << "\n";
  }
  out << "claimed " << plan.claimed << "\n";
  for (const auto& n : plan.notes) out << "note " << n << "\n";
  out << "base " << plan.base << "\n";
  for (const auto& cell : plan.cells) {
    out << "cell " << cell.copies << " colors";
    for (Int c : cell.colors) out << " " << c;
    out << "\n";
    if (!cell.node.leaf()) format_node(out, cell.node, 2);
  }
  out << "end\n";
  return out.str();
}

std::string format_plans(const std::vector<ColoringPlan>& plans) {
  std::string out;
  for (std::size_t i = 0; i < plans.size(); ++i) {
    if (i) out += "\n";
    out += format_plan(plans[i]);
  }
  return out;
}

const std::vector<ColoringPlan>& plan_catalog() {
  static const std::vector<ColoringPlan> catalog = parse_plans(
#include "plan_catalog.inc"
  );
  return catalog;
}

const ColoringPlan& find_plan(const std::string& nm) {
  for (const auto& p : plan_catalog())
    if (p.name == nm) return p;
  throw std::invalid_argument("unknown plan '" + nm + "'");
}

namespace {

struct Expander {
  const ColoringPlan& plan;
  std::vector<std::pair<Coset, Int>> out;  // leaf coset, certified radius

  void expand(const Coset& coset, Int radius, const PlanNode& node, const std::string& where) {
    if (node.leaf()) {
      out.push_back({coset, radius});
      return;
    }
    SubdivisionScheme s;
    try {
      s = find_scheme(node.scheme).instantiate(node.k, node.m);
    } catch (const std::invalid_argument& e) {
      throw PlanError(where + ": " + e.what());
    }
    if (s.kind != plan.kind) throw PlanError(where + ": scheme " + s.name + " belongs to another lattice");
    Sublattice parent = s.parent.lattice();
    if (!(parent == coset.lattice))
      throw PlanError(where + ": scheme " + s.name + " subdivides " + parent.str() + " but the piece is a coset of " +
                      coset.lattice.str());
    auto pieces = s.pieces();
    if (node.children.size() > pieces.size())
      throw PlanError(where + ": " + std::to_string(node.children.size()) + " children for " +
                      std::to_string(pieces.size()) + " pieces of " + s.name);
    Vertex shift = coset.rep - s.parent.offset;
    static const PlanNode keep;
    for (std::size_t i = 0; i < pieces.size(); ++i) {
      const PlanNode& child = i < node.children.size() ? node.children[i] : keep;
      expand(pieces[i].coset.translated(shift), pieces[i].radius, child,
             where + " > " + s.name + "[" + std::to_string(i) + "]");
    }
  }
};

}  // namespace

BuiltPlan expand_plan(const ColoringPlan& plan) {
  SubdivisionScheme base;
  try {
    base = find_scheme(plan.base).instantiate();
  } catch (const std::invalid_argument& e) {
    throw PlanError(plan.name + ": " + e.what());
  }
  if (base.kind != plan.kind) throw PlanError(plan.name + ": base " + plan.base + " belongs to another lattice");
  if (base.parent.lattice().index() != 1) throw PlanError(plan.name + ": base scheme must partition the whole lattice");
  auto roots = base.pieces();
  Int copies = 0;
  for (const auto& c : plan.cells) copies += c.copies;
  if (copies != static_cast<Int>(roots.size()))
    throw PlanError(plan.name + ": cells use " + std::to_string(copies) + " root copies, base has " +
                    std::to_string(roots.size()));

  BuiltPlan built;
  std::size_t next_root = 0;
  std::map<std::tuple<Int, Int, Int>, Int> certified;
  for (std::size_t ci = 0; ci < plan.cells.size(); ++ci) {
    const PlanCell& cell = plan.cells[ci];
    Expander ex{plan, {}};
    for (Int c = 0; c < cell.copies; ++c, ++next_root) {
      std::string where = plan.name + " cell " + std::to_string(ci + 1) + " copy " + std::to_string(c + 1);
      ex.expand(roots[next_root].coset, roots[next_root].radius, cell.node, where);
    }
    auto leaves = ex.out;
    if (leaves.size() != cell.colors.size())
      throw PlanError(plan.name + " cell " + std::to_string(ci + 1) + ": " + std::to_string(leaves.size()) +
                      " pieces but " + std::to_string(cell.colors.size()) + " colors");
    std::stable_sort(leaves.begin(), leaves.end(), [](const auto& x, const auto& y) { return x.second < y.second; });
    std::vector<Int> colors = cell.colors;
    std::sort(colors.begin(), colors.end());
    for (std::size_t i = 0; i < leaves.size(); ++i) {
      const auto& [coset, radius] = leaves[i];
      if (colors[i] > radius)
        throw PlanError(plan.name + " cell " + std::to_string(ci + 1) + ": leaf radius " + std::to_string(radius) +
                        " < color value " + std::to_string(colors[i]));
      auto key = std::make_tuple(coset.lattice.a(), coset.lattice.b(), coset.lattice.c());
      auto it = certified.find(key);
      if (it == certified.end()) it = certified.emplace(key, coset_min_distance(plan.kind, coset)).first;
      if (it->second <= radius)
        throw PlanError(plan.name + " cell " + std::to_string(ci + 1) + ": piece " + coset.lattice.str() +
                        " is not a " + std::to_string(radius) + "-packing");
      built.leaves.push_back({coset, radius, colors[i], ci});
    }
  }

  // partition: exact density and pairwise disjointness
  Rational density(0);
  for (const auto& l : built.leaves) density += Rational(1) / Rational(l.coset.lattice.index());
  if (density != Rational(1)) throw PlanError(plan.name + ": leaves have total density " + density.str() + ", not 1");
  for (std::size_t i = 0; i < built.leaves.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (intersects(built.leaves[i].coset, built.leaves[j].coset))
        throw PlanError(plan.name + ": leaves " + std::to_string(j) + " and " + std::to_string(i) + " overlap");

  Sublattice period = plan.kind == LatticeKind::Hex ? even_lattice() : Sublattice();
  for (const auto& l : built.leaves) period = intersect(period, l.coset.lattice);
  std::vector<int> cells(static_cast<std::size_t>(period.index()), -1);
  std::vector<Int> values;
  Window box(0, period.a() - 1, 0, period.c() - 1);
  for (std::size_t i = 0; i < built.leaves.size(); ++i) {
    values.push_back(built.leaves[i].value);
    for (Vertex v : built.leaves[i].coset.lattice.points_in(box, built.leaves[i].coset.rep)) {
      int& slot = cells[static_cast<std::size_t>(v.a + period.a() * v.b)];
      if (slot >= 0) throw PlanError(plan.name + ": vertex " + to_string(v) + " covered twice");
      slot = static_cast<int>(i);
    }
  }
  for (std::size_t i = 0; i < cells.size(); ++i)
    if (cells[i] < 0) throw PlanError(plan.name + ": vertex " + to_string(period.cell_vertex(static_cast<Int>(i))) + " uncovered");
  built.coloring = canonical_coloring(plan.kind, period, values, cells);
  return built;
}

PeriodicColoring build_coloring(const ColoringPlan& plan) {
  return expand_plan(plan).coloring;
}

PlanVerdict verify_plan(const ColoringPlan& plan, int jobs) {
  PlanVerdict v;
  PeriodicColoring col;
  try {
    col = build_coloring(plan);
  } catch (const PlanError& e) {
    v.message = std::string("REJECTED: ") + e.what();
    return v;
  }
  v.colors = static_cast<Int>(col.color_count());
  auto report = verify_s_coloring(col, plan.spec, jobs);
  std::ostringstream out;
  if (!report.ok) {
    out << "FAIL: " << plan.name << "\n" << report.text();
  } else if (v.colors != plan.claimed) {
    out << "FAIL: " << plan.name << " uses " << v.colors << " colors, claimed " << plan.claimed << "\n";
  } else {
    v.ok = true;
    out << "OK: " << v.colors << " colors";
  }
  v.message = out.str();
  return v;
}

}  // namespace latpack
