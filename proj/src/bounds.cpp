#include "latpack/bounds.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <iomanip>
#include <map>
#include <tuple>
#include <mutex>
#include <sstream>
#include <thread>

#include "latpack/pattern.hpp"

namespace latpack {

namespace {

struct Option {
  Int slope;
  Int pieces;
  const char* scheme;
};

struct Rule {
  Int s1;
  std::size_t r;
  const char* base;
  Option options[2];
};

Rule rule_for(LatticeKind kind) {
  switch (kind) {
    case LatticeKind::Hex:
      return {2, 3, "hex.x2", {{3, 1, "hex.x2.3k-1"}, {4, 2, "hex.x2.4k-1"}}};
    case LatticeKind::Square:
      return {2, 4, "square.x2", {{3, 1, "square.x2.3k-1"}, {4, 2, "square.x2.4k-1"}}};
    case LatticeKind::Tri:
      return {1, 2, "tri.x1", {{2, 1, "tri.x1.2k-1"}, {3, 3, "tri.x1.3k-1"}}};
  }
  throw std::logic_error("unknown lattice");
}

// Runs body(i) for i in [0, count) on `jobs` threads.
void parallel_for(std::size_t count, int jobs, const std::function<void(std::size_t)>& body) {
  const std::size_t workers = std::min<std::size_t>(count, static_cast<std::size_t>(std::max(1, jobs)));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> threads;
  for (std::size_t w = 0; w < workers; ++w) {
    threads.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) {
        try {
          body(i);
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!error) error = std::current_exception();
        }
      }
    });
  }
  for (auto& t : threads) t.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace

std::vector<Int> CorollaryWitness::a() const {
  std::vector<Int> out;
  for (const auto& s : steps) out.push_back(s.a);
  return out;
}

std::vector<Int> CorollaryWitness::k() const {
  std::vector<Int> out;
  for (const auto& s : steps) out.push_back(s.k);
  return out;
}

std::string CorollaryWitness::text() const {
  const Rule rule = rule_for(kind);
  std::ostringstream out;
  out << "bound " << bound << "\n";
  Int prev = 1;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    const auto& s = steps[i];
    const Option& o = rule.options[s.option];
    out << "a" << i + 1 << " = " << s.a << ", k" << i + 1 << " = " << s.k << ": s_" << s.a << " = "
        << prefix[static_cast<std::size_t>(s.a - 1)] << " <= " << s.radius << " = " << o.slope << "k-1, a"
        << i + 1 << " - a" << i << " = " << s.a - prev << " >= " << s.pieces << "\n";
    prev = s.a;
  }
  return out.str();
}

std::optional<CorollaryWitness> corollary_bound(LatticeKind kind, const std::vector<Int>& prefix) {
  const Rule rule = rule_for(kind);
  if (prefix.empty() || prefix.front() != rule.s1)
    throw CorollaryInapplicable("corollary inapplicable: " + std::string(name(kind)) + " requires s_1 = " +
                                std::to_string(rule.s1));
  if (!std::is_sorted(prefix.begin(), prefix.end()))
    throw std::invalid_argument("sequence must be nondecreasing");
  const Int len = static_cast<Int>(prefix.size());
  const Int kmax = prefix.back() + 1;

  // best[a] holds the preferred path ending at index a after i steps.
  using Path = std::vector<CorollaryStep>;
  auto key_less = [](const Path& x, const Path& y) {
    for (std::size_t i = 0; i < x.size(); ++i)
      if (x[i].k != y[i].k) return x[i].k < y[i].k;
    for (std::size_t i = 0; i < x.size(); ++i)
      if (x[i].a != y[i].a) return x[i].a < y[i].a;
    for (std::size_t i = 0; i < x.size(); ++i)
      if (x[i].option != y[i].option) return x[i].option < y[i].option;
    return false;
  };
  std::vector<std::optional<Path>> best(static_cast<std::size_t>(len + 1));
  best[1] = Path{};
  for (std::size_t step = 0; step < rule.r; ++step) {
    std::vector<std::optional<Path>> next(best.size());
    for (Int prev = 1; prev <= len; ++prev) {
      const auto& from = best[static_cast<std::size_t>(prev)];
      if (!from) continue;
      for (int o = 0; o < 2; ++o) {
        const Option& opt = rule.options[o];
        for (Int k = 1; k <= kmax; ++k) {
          const Int pieces = opt.pieces * k * k;
          const Int radius = opt.slope * k - 1;
          for (Int a = prev + pieces; a <= len; ++a) {
            if (prefix[static_cast<std::size_t>(a - 1)] > radius) break;
            Path p = *from;
            p.push_back({a, k, o, pieces, radius});
            auto& slot = next[static_cast<std::size_t>(a)];
            if (!slot || key_less(p, *slot)) slot = std::move(p);
          }
        }
      }
    }
    best = std::move(next);
  }
  for (Int a = 1; a <= len; ++a) {
    const auto& p = best[static_cast<std::size_t>(a)];
    if (!p) continue;
    CorollaryWitness w;
    w.kind = kind;
    w.prefix = prefix;
    w.steps = *p;
    w.bound = a;
    return w;
  }
  return std::nullopt;
}

ColoringPlan witness_plan(const CorollaryWitness& witness) {
  const Rule rule = rule_for(witness.kind);
  ColoringPlan plan;
  plan.name = "corollary-" + std::string(name(witness.kind));
  plan.kind = witness.kind;
  plan.spec = SequenceSpec::list(
      std::vector<Int>(witness.prefix.begin(), witness.prefix.begin() + static_cast<std::ptrdiff_t>(witness.bound)));
  plan.base = rule.base;
  PlanCell first;
  first.copies = 1;
  first.colors = {witness.prefix.front()};
  plan.cells.push_back(first);
  Int colors = 1;
  Int prev = 1;
  for (const auto& s : witness.steps) {
    PlanCell cell;
    cell.copies = 1;
    for (Int j = 0; j < s.pieces; ++j) cell.colors.push_back(witness.prefix[static_cast<std::size_t>(prev + j)]);
    cell.node.scheme = rule.options[s.option].scheme;
    cell.node.k = s.k;
    plan.cells.push_back(cell);
    colors += s.pieces;
    prev = s.a;
  }
  plan.claimed = colors;
  return plan;
}

Int distance_chromatic_n(LatticeKind kind, Int d) {
  if (d < 1) throw std::invalid_argument("d must be at least 1");
  Rational v(0);
  switch (kind) {
    case LatticeKind::Hex:
      if (d % 2 == 1)
        v = Rational(3, 8) * Rational((d + 1) * (d + 1));
      else
        v = Rational((3 * d + 4) * (3 * d + 4), 24);
      break;
    case LatticeKind::Square:
      if (d % 2 == 1)
        v = Rational((d + 1) * (d + 1), 2);
      else
        v = Rational((d + 1) * (d + 1) + 1, 2);
      break;
    case LatticeKind::Tri:
      v = Rational(3, 4) * Rational((d + 1) * (d + 1));
      break;
  }
  return v.ceil().get_si();
}

std::vector<DiagonalCheck> diagonal_checks() {
  const std::vector<std::tuple<LatticeKind, Int, Int>> table = {
      {LatticeKind::Hex, 1, 2},    {LatticeKind::Hex, 2, 4},    {LatticeKind::Hex, 3, 6},
      {LatticeKind::Hex, 4, 11},   {LatticeKind::Square, 1, 2}, {LatticeKind::Square, 2, 5},
      {LatticeKind::Tri, 1, 3},
  };
  std::vector<DiagonalCheck> out;
  for (const auto& [kind, d, value] : table) {
    DiagonalCheck c{kind, d, distance_chromatic_n(kind, d), value, false};
    c.flagged = c.formula != c.table;
    out.push_back(c);
  }
  return out;
}

std::string TableValue::str() const {
  switch (kind) {
    case CellKind::Exact:
      return std::to_string(lower);
    case CellKind::Range:
      return std::to_string(lower) + " - " + (upper ? std::to_string(*upper) : "?");
    case CellKind::Infinite:
      return "inf";
    case CellKind::Unknown:
      return "?";
  }
  return "?";
}

const char* status_name(CellStatus status) {
  switch (status) {
    case CellStatus::Match:
      return "match";
    case CellStatus::Mismatch:
      return "mismatch";
    case CellStatus::External:
      return "external";
    case CellStatus::Unknown:
      return "unknown";
  }
  return "unknown";
}

namespace {

TableValue exact(Int v) { return {CellKind::Exact, v, v}; }
TableValue range(Int lo, Int hi) { return {CellKind::Range, lo, hi}; }
TableValue from(Int lo) { return {CellKind::Range, lo, std::nullopt}; }
const TableValue inf{CellKind::Infinite, 0, std::nullopt};
const TableValue unk{CellKind::Unknown, 0, std::nullopt};

struct Row {
  Int d;
  std::vector<PaperCell> cells;
};

PaperCell p(TableValue v, std::string citation = {}) { return {v, std::move(citation)}; }

std::vector<Row> paper_rows(LatticeKind kind) {
  switch (kind) {
    case LatticeKind::Hex:
      return {
          {1, {p(exact(7), "AV2007, FI2009"), p(exact(2)), p(exact(2)), p(exact(2)), p(exact(2)), p(exact(2))}},
          {2, {p(inf), p(range(5, 8)), p(exact(5)), p(exact(4)), p(exact(4)), p(exact(4))}},
          {3, {p(inf), p(range(15, 35)), p(range(9, 13)), p(range(8, 10)), p(range(7, 8)), p(exact(6))}},
          {4, {p(inf), p(from(61)), p(range(20, 58)), p(range(15, 27)), p(range(13, 21)), p(range(12, 18))}},
          {5, {p(inf), p(inf), p(from(37)), p(from(25)), p(from(21)), p(from(19))}},
          {8, {p(inf), p(inf), p(inf), p(unk), p(unk), p(unk)}},
          {11, {p(inf), p(inf), p(inf), p(inf), p(unk), p(unk)}},
          {13, {p(inf), p(inf), p(inf), p(inf), p(inf), p(unk)}},
          {16, {p(inf), p(inf), p(inf), p(inf), p(inf), p(inf)}},
      };
    case LatticeKind::Square:
      return {
          {1, {p(range(12, 17), "EK2010, SO2010"), p(exact(2)), p(exact(2)), p(exact(2)), p(exact(2)), p(exact(2))}},
          {2, {p(inf), p(range(11, 20)), p(range(7, 8)), p(exact(6), "GOH2012"), p(exact(5), "GOH2012"), p(exact(5))}},
          {3, {p(inf), p(from(57)), p(range(16, 33)), p(range(12, 20)), p(range(10, 17)), p(range(10, 14))}},
          {4, {p(inf), p(inf), p(from(44)), p(range(25, 56)), p(range(20, 34)), p(range(18, 28))}},
          {5, {p(inf), p(inf), p(from(199)), p(from(50)), p(from(35)), p(from(29))}},
          {6, {p(inf), p(inf), p(inf), p(unk), p(unk), p(unk)}},
          {8, {p(inf), p(inf), p(inf), p(inf), p(unk), p(unk)}},
          {10, {p(inf), p(inf), p(inf), p(inf), p(inf), p(unk)}},
          {12, {p(inf), p(inf), p(inf), p(inf), p(inf), p(inf)}},
      };
    case LatticeKind::Tri:
      return {
          {1, {p(inf, "FIN2010"), p(range(5, 6), "GOH2012"), p(exact(3)), p(exact(3)), p(exact(3)), p(exact(3))}},
          {2, {p(inf), p(from(127)), p(from(14)), p(range(10, 16)), p(range(9, 13)), p(range(8, 10))}},
          {3, {p(inf), p(inf), p(from(81)), p(range(28, 72)), p(range(20, 38)), p(range(17, 26))}},
          {4, {p(inf), p(inf), p(inf), p(from(104)), p(from(49)), p(from(36))}},
          {5, {p(inf), p(inf), p(inf), p(inf), p(unk), p(unk)}},
          {7, {p(inf), p(inf), p(inf), p(inf), p(inf), p(unk)}},
          {8, {p(inf), p(inf), p(inf), p(inf), p(inf), p(inf)}},
      };
  }
  return {};
}

bool agrees(const TableValue& paper, const TableValue& derived) {
  switch (paper.kind) {
    case CellKind::Infinite:
      return derived.kind == CellKind::Infinite;
    case CellKind::Exact:
      return derived.kind == CellKind::Exact && derived.lower == paper.lower;
    case CellKind::Range:
      if (derived.kind == CellKind::Infinite || derived.kind == CellKind::Unknown) return false;
      if (derived.lower != paper.lower) return false;
      return !paper.upper || derived.upper == paper.upper;
    case CellKind::Unknown:
      return true;
  }
  return false;
}

// Certificates at growing horizons; any horizon >= d is a valid certificate.
std::optional<InfeasibilityCertificate> certify_infinite(LatticeKind kind, const SequenceSpec& spec) {
  for (Int horizon : {Int{200}, Int{2000}, kDefaultHorizon}) {
    if (horizon < spec.d()) continue;
    auto cert = feasibility_sum(kind, spec, horizon);
    if (cert.verdict() == Verdict::Infeasible) return cert;
  }
  return std::nullopt;
}

struct UpperSource {
  Int d, n, colors;
  std::string source;
};

std::vector<UpperSource> upper_sources(LatticeKind kind, const TableOptions& options) {
  std::vector<const ColoringPlan*> plans;
  for (const auto& plan : plan_catalog())
    if (plan.kind == kind && plan.spec.is_dn()) plans.push_back(&plan);
  std::vector<std::optional<UpperSource>> found(plans.size());
  parallel_for(plans.size(), options.jobs, [&](std::size_t i) {
    const ColoringPlan& plan = *plans[i];
    Int colors = plan.claimed;
    if (options.verify_plans) {
      auto verdict = verify_plan(plan, 1);
      if (!verdict.ok) return;
      colors = verdict.colors;
    }
    found[i] = UpperSource{plan.spec.d(), plan.spec.n(), colors, "plan " + plan.name};
  });
  std::vector<UpperSource> out;
  for (auto& f : found)
    if (f) out.push_back(*f);
  if (kind == LatticeKind::Square) {
    const PatternGrid grid = load_pattern(default_pattern_path());
    if (!options.verify_plans || verify_pattern_torus(grid).ok) out.push_back({1, 1, 17, "pattern"});
    try {
      auto derived = derive_33_coloring(grid, options.jobs);
      out.push_back({3, 3, static_cast<Int>(derived.coloring.color_count()), "pattern (3,3) derivation"});
    } catch (const DerivationError&) {
    }
  }
  return out;
}

}  // namespace

const TableCell& TableReport::at(Int d, Int n) const {
  for (const auto& c : cells)
    if (c.d == d && c.n == n) return c;
  throw std::out_of_range("no table cell (" + std::to_string(d) + "," + std::to_string(n) + ")");
}

TableReport paper_table(LatticeKind kind) {
  TableReport report;
  report.kind = kind;
  for (const auto& row : paper_rows(kind)) {
    report.rows.push_back(row.d);
    for (std::size_t j = 0; j < row.cells.size(); ++j) {
      TableCell cell;
      cell.d = row.d;
      cell.n = static_cast<Int>(j + 1);
      cell.paper = row.cells[j];
      report.cells.push_back(cell);
    }
  }
  return report;
}

TableReport reproduce_table(LatticeKind kind, const TableOptions& options) {
  TableReport report = paper_table(kind);
  const auto uppers = upper_sources(kind, options);
  parallel_for(report.cells.size(), options.jobs, [&](std::size_t i) {
    TableCell& cell = report.cells[i];
    const SequenceSpec spec = SequenceSpec::dn(cell.d, cell.n);
    if (auto cert = certify_infinite(kind, spec)) {
      cell.derived = inf;
      cell.lower_source = "density-certified, total <= " + cert->total_bound.decimal_ceil(6) + " at horizon " +
                          std::to_string(cert->horizon);
    } else {
      Int lower = cell.d + 1;
      cell.lower_source = "trivial d+1";
      try {
        Int density = density_lower_bound(kind, spec);
        if (density >= lower) {
          lower = density;
          cell.lower_source = "density";
        }
      } catch (const std::domain_error&) {
      }
      std::optional<Int> upper;
      for (const auto& u : uppers) {
        if (u.d != cell.d || u.n > cell.n) continue;
        if (!upper || u.colors < *upper) {
          upper = u.colors;
          cell.upper_source = u.source;
        }
      }
      if (upper && *upper == lower)
        cell.derived = exact(lower);
      else
        cell.derived = {CellKind::Range, lower, upper};
    }
    const bool ok = agrees(cell.paper.value, cell.derived);
    if (cell.paper.value.kind == CellKind::Unknown)
      cell.status = CellStatus::Unknown;
    else if (ok)
      cell.status = CellStatus::Match;
    else if (!cell.paper.citation.empty())
      cell.status = CellStatus::External;
    else
      cell.status = CellStatus::Mismatch;
    std::string prov = "lower: " + cell.lower_source;
    if (!cell.upper_source.empty()) prov += "; upper: " + cell.upper_source;
    if (!cell.paper.citation.empty()) prov += "; cited [" + cell.paper.citation + "]";
    cell.provenance = prov;
  });
  return report;
}

std::vector<TableReport> reproduce_tables(const TableOptions& options) {
  std::vector<TableReport> out;
  for (LatticeKind kind : {LatticeKind::Hex, LatticeKind::Square, LatticeKind::Tri})
    out.push_back(reproduce_table(kind, options));
  return out;
}

std::string TableReport::text() const {
  std::ostringstream out;
  out << name(kind) << "\n";
  out << std::setw(4) << "d\\n";
  for (Int n = 1; n <= columns; ++n) out << " | " << std::setw(9) << n;
  out << "\n";
  for (Int d : rows) {
    out << std::setw(4) << d;
    for (Int n = 1; n <= columns; ++n) {
      const auto& c = at(d, n);
      std::string s = c.derived.str();
      if (c.status == CellStatus::Mismatch) s += "!";
      if (c.status == CellStatus::External) s += "*";
      out << " | " << std::setw(9) << s;
    }
    out << "\n";
  }
  for (const auto& c : cells) {
    if (c.status == CellStatus::Mismatch || c.status == CellStatus::External)
      out << "(" << c.d << "," << c.n << ") " << status_name(c.status) << ": table " << c.paper.value.str()
          << ", derived " << c.derived.str() << "; " << c.provenance << "\n";
  }
  return out.str();
}

std::string tables_csv(const std::vector<TableReport>& tables) {
  auto quote = [](const std::string& s) {
    std::string q = "\"";
    for (char ch : s) {
      if (ch == '"') q += '"';
      q += ch;
    }
    return q + "\"";
  };
  std::ostringstream out;
  out << "lattice,d,n,lower,upper,status,table,provenance\n";
  for (const auto& t : tables) {
    for (const auto& c : t.cells) {
      std::string lower = "?", upper = "?";
      if (c.derived.kind == CellKind::Infinite) {
        lower = upper = "inf";
      } else if (c.derived.kind != CellKind::Unknown) {
        lower = std::to_string(c.derived.lower);
        if (c.derived.upper) upper = std::to_string(*c.derived.upper);
      }
      out << name(t.kind) << "," << c.d << "," << c.n << "," << lower << "," << upper << ","
          << status_name(c.status) << "," << quote(c.paper.value.str()) << "," << quote(c.provenance) << "\n";
    }
  }
  return out.str();
}

}  // namespace latpack
