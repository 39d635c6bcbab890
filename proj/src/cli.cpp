#include "latpack/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include "latpack/bounds.hpp"
#include "latpack/coloring.hpp"
#include "latpack/packings.hpp"
#include "latpack/pattern.hpp"
#include "latpack/plans.hpp"
#include "latpack/render.hpp"

namespace latpack::cli {

namespace {

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_file(const std::string& path, const std::string& body) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw InputError("cannot write " + path);
  file << body;
  file.close();
  if (!file) throw InputError("cannot write " + path);
}

Int parse_int(const std::string& s) {
  std::size_t used = 0;
  long long v = 0;
  try {
    v = std::stoll(s, &used);
  } catch (const std::exception&) {
    throw InputError("bad integer '" + s + "'");
  }
  if (used != s.size()) throw InputError("bad integer '" + s + "'");
  return static_cast<Int>(v);
}

Window parse_window(const std::string& text) {
  std::vector<Int> v;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) v.push_back(parse_int(item));
  if (v.size() != 4) throw InputError("window must be a_min,a_max,b_min,b_max");
  return Window(v[0], v[1], v[2], v[3]);
}

struct SequenceOptions {
  Int d = 0;
  Int n = 0;
  std::string list;

  void add(CLI::App* app) {
    app->add_option("--d", d, "first packing radius of a (d,n) sequence");
    app->add_option("--n", n, "colors per radius of a (d,n) sequence");
    app->add_option("--sequence", list, "explicit sequence, e.g. 2,3,3,5x4");
  }

  SequenceSpec spec() const {
    if (!list.empty()) {
      if (d != 0 || n != 0) throw InputError("give either --sequence or --d/--n");
      return SequenceSpec::list(parse_sequence(list));
    }
    if (d < 1 || n < 1) throw InputError("--d and --n must both be positive");
    return SequenceSpec::dn(d, n);
  }
};

PeriodicColoring pattern_or_derived(const std::string& file, bool derived, int jobs) {
  const PatternGrid grid = load_pattern(file.empty() ? default_pattern_path() : file);
  if (!derived) return pattern_coloring(grid);
  return derive_33_coloring(grid, jobs).coloring;
}

}  // namespace

std::vector<Int> parse_sequence(const std::string& text) {
  std::vector<Int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(std::remove(item.begin(), item.end(), ' '), item.end());
    if (item.empty()) throw InputError("empty sequence entry in '" + text + "'");
    const auto x = item.find('x');
    Int value = parse_int(item.substr(0, x));
    Int count = x == std::string::npos ? 1 : parse_int(item.substr(x + 1));
    if (value < 1 || count < 1) throw InputError("sequence entries must be positive: '" + item + "'");
    out.insert(out.end(), static_cast<std::size_t>(count), value);
  }
  if (out.empty()) throw InputError("empty sequence");
  if (!std::is_sorted(out.begin(), out.end())) throw InputError("sequence must be nondecreasing");
  return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Packing colorings of the hexagonal, square and triangular lattices", "latpack"};
  app.require_subcommand(1);
  app.allow_windows_style_options(false);

  int jobs = 1;
  std::string lattice;
  auto add_lattice = [&](CLI::App* sub) { sub->add_option("--lattice", lattice, "hex, square or tri")->required(); };
  auto add_jobs = [&](CLI::App* sub) { sub->add_option("--jobs", jobs, "worker threads")->check(CLI::Range(1, 256)); };

  auto* distance_cmd = app.add_subcommand("distance", "graph distance between two vertices");
  std::string from, to;
  add_lattice(distance_cmd);
  distance_cmd->add_option("--from", from, "a,b")->required();
  distance_cmd->add_option("--to", to, "a,b")->required();

  auto* ball_cmd = app.add_subcommand("ball", "ball or sphere size around a vertex");
  std::string center = "0,0";
  Int radius = 0;
  bool sphere = false, list = false;
  add_lattice(ball_cmd);
  ball_cmd->add_option("--center", center, "a,b");
  ball_cmd->add_option("--radius", radius)->required()->check(CLI::NonNegativeNumber);
  ball_cmd->add_flag("--sphere", sphere, "vertices at exactly this distance");
  ball_cmd->add_flag("--list", list, "print the vertices");

  auto* karea_cmd = app.add_subcommand("karea", "k-area A(k)");
  Int k = 1, m = 1;
  bool direct = false;
  add_lattice(karea_cmd);
  karea_cmd->add_option("--k", k)->required()->check(CLI::PositiveNumber);
  karea_cmd->add_flag("--direct", direct, "compute from the definition instead of the closed form");

  auto* packing_cmd = app.add_subcommand("verify-packing", "minimum distance of a linear packing");
  Int base = 0;
  std::string g1, g2, offset = "0,0";
  add_lattice(packing_cmd);
  packing_cmd->add_option("--base", base, "base packing X_i");
  packing_cmd->add_option("--g1", g1, "first generator a,b");
  packing_cmd->add_option("--g2", g2, "second generator a,b");
  packing_cmd->add_option("--offset", offset, "a,b");
  packing_cmd->add_option("--radius", radius, "claimed packing radius")->required();

  auto* scheme_cmd = app.add_subcommand("verify-scheme", "verify a subdivision scheme");
  std::string scheme_name;
  bool all = false;
  Int kmax = 3, mmax = 3, factor = 6;
  scheme_cmd->add_option("--name", scheme_name, "catalog scheme");
  scheme_cmd->add_flag("--all", all, "every catalog scheme for k, m up to --kmax/--mmax");
  scheme_cmd->add_option("--k", k)->check(CLI::PositiveNumber);
  scheme_cmd->add_option("--m", m)->check(CLI::PositiveNumber);
  scheme_cmd->add_option("--kmax", kmax)->check(CLI::PositiveNumber);
  scheme_cmd->add_option("--mmax", mmax)->check(CLI::PositiveNumber);
  scheme_cmd->add_option("--window-factor", factor, "window side in units of the largest generator coordinate")
      ->check(CLI::Range(4, 100));

  auto* plan_cmd = app.add_subcommand("verify-plan", "build and verify coloring plans");
  std::string plan_name, file, export_path;
  plan_cmd->add_option("--plan", plan_name, "catalog plan, e.g. (3,3)-hex");
  plan_cmd->add_option("--file", file, "plan file");
  plan_cmd->add_flag("--all", all, "every catalog plan");
  plan_cmd->add_option("--export-coloring", export_path, "write the fundamental domain of a single plan");
  add_jobs(plan_cmd);

  auto* feas_cmd = app.add_subcommand("feasibility", "density certificate for chi = infinity");
  SequenceOptions seq;
  Int horizon = kDefaultHorizon;
  bool exact = false;
  add_lattice(feas_cmd);
  seq.add(feas_cmd);
  feas_cmd->add_option("--horizon", horizon)->check(CLI::PositiveNumber);
  feas_cmd->add_flag("--exact", exact, "print the exact rationals");
  add_jobs(feas_cmd);

  auto* lower_cmd = app.add_subcommand("lower-bound", "density lower bound on the number of colors");
  Int cap = 5000;
  add_lattice(lower_cmd);
  seq.add(lower_cmd);
  lower_cmd->add_option("--cap", cap)->check(CLI::PositiveNumber);

  auto* cor_cmd = app.add_subcommand("corollary", "sufficient-condition upper bound for an explicit sequence");
  std::string sequence;
  bool verify = false;
  add_lattice(cor_cmd);
  cor_cmd->add_option("--sequence", sequence, "explicit prefix, e.g. 2,3,3,5x4,7x8")->required();
  cor_cmd->add_flag("--verify", verify, "build and verify the witness coloring");
  add_jobs(cor_cmd);

  auto* tables_cmd = app.add_subcommand("tables", "reproduce the (d,n) bound tables");
  bool csv = false, trust = false;
  tables_cmd->add_option("--lattice", lattice, "restrict to one lattice");
  tables_cmd->add_flag("--csv", csv);
  tables_cmd->add_flag("--no-verify-plans", trust, "take plan counts as claimed");
  add_jobs(tables_cmd);

  auto* pattern_cmd = app.add_subcommand("pattern-verify", "verify the 24x24 pattern on the torus");
  pattern_cmd->add_option("--file", file, "pattern file (default: shipped)");

  auto* derive_cmd = app.add_subcommand("derive-33", "derive the (3,3) coloring from the pattern");
  derive_cmd->add_option("--file", file, "pattern file (default: shipped)");
  derive_cmd->add_option("--export-coloring", export_path);
  add_jobs(derive_cmd);

  auto* render_cmd = app.add_subcommand("render", "render a coloring as SVG or PPM");
  std::string output, format = "svg", window;
  bool pattern = false, derived = false;
  render_cmd->add_option("--output", output)->required();
  render_cmd->add_option("--format", format, "svg or ppm");
  render_cmd->add_option("--plan", plan_name);
  render_cmd->add_option("--file", file, "plan file with a single plan");
  render_cmd->add_flag("--pattern", pattern, "the 24x24 pattern");
  render_cmd->add_flag("--derive-33", derived, "the derived (3,3) coloring");
  render_cmd->add_option("--window", window, "a_min,a_max,b_min,b_max (default: one period)");

  auto* export_cmd = app.add_subcommand("export-plan", "write catalog plans in the plan file format");
  export_cmd->add_option("--plan", plan_name);
  export_cmd->add_flag("--all", all);
  export_cmd->add_option("--output", output, "file (default: stdout)");

  auto* catalog_cmd = app.add_subcommand("export-catalog", "write every scheme instance");
  catalog_cmd->add_option("--kmax", kmax)->check(CLI::PositiveNumber);
  catalog_cmd->add_option("--mmax", mmax)->check(CLI::PositiveNumber);
  catalog_cmd->add_option("--output", output, "file (default: stdout)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (distance_cmd->parsed()) {
      out << distance(parse_kind(lattice), parse_vertex(from), parse_vertex(to)) << "\n";
      return 0;
    }
    if (ball_cmd->parsed()) {
      const LatticeKind kind = parse_kind(lattice);
      const Vertex c = parse_vertex(center);
      const auto vs = sphere ? latpack::sphere(kind, c, radius) : ball(kind, c, radius);
      const Int formula = sphere ? sphere_size_formula(kind, radius) : ball_size_formula(kind, radius);
      out << vs.size() << "\n";
      if (list)
        for (Vertex v : vs) out << to_string(v) << "\n";
      if (static_cast<Int>(vs.size()) != formula) {
        out << "FAIL: formula gives " << formula << "\n";
        return 1;
      }
      return 0;
    }
    if (karea_cmd->parsed()) {
      const LatticeKind kind = parse_kind(lattice);
      out << (direct ? k_area_direct(kind, k) : k_area_formula(kind, k)).str() << "\n";
      return 0;
    }
    if (packing_cmd->parsed()) {
      const LatticeKind kind = parse_kind(lattice);
      LinearPackingSpec spec;
      if (base != 0) {
        if (!g1.empty() || !g2.empty()) throw InputError("give either --base or --g1/--g2");
        spec = base_packing(kind, base);
      } else {
        if (g1.empty() || g2.empty()) throw InputError("--g1 and --g2 are required without --base");
        spec = {kind, parse_vertex(g1), parse_vertex(g2), {0, 0}};
        if (spec.det() == 0) throw InputError("generators are linearly dependent");
      }
      spec.offset = spec.offset + parse_vertex(offset);
      const auto cert = min_pair_distance(spec, radius);
      out << cert.report() << "\n";
      out << "density: " << spec.density().str() << "\n";
      return cert.valid() ? 0 : 1;
    }
    if (scheme_cmd->parsed()) {
      std::vector<SubdivisionScheme> schemes;
      if (all == !scheme_name.empty()) throw InputError("give exactly one of --name or --all");
      if (all) {
        for (const auto& t : scheme_catalog())
          for (Int kk = 1; kk <= (t.uses_k ? kmax : 1); ++kk)
            for (Int mm = 1; mm <= (t.uses_m ? mmax : 1); ++mm) schemes.push_back(t.instantiate(kk, mm));
      } else {
        schemes.push_back(find_scheme(scheme_name).instantiate(k, m));
      }
      bool ok = true;
      for (const auto& s : schemes) {
        auto report = verify_scheme(s);
        if (report.ok) {
          auto window = verify_partition(s, default_window(s, factor));
          report.ok = window.ok;
          report.issues.insert(report.issues.end(), window.issues.begin(), window.issues.end());
          report.vertices_checked = window.vertices_checked;
        }
        ok = ok && report.ok;
        out << (report.ok ? "OK" : "FAIL") << " " << s.name << " k=" << s.k << " m=" << s.m << ": "
            << s.claimed_count() << " pieces\n";
        if (!all || !report.ok) out << report.text();
      }
      return ok ? 0 : 1;
    }
    if (plan_cmd->parsed()) {
      std::vector<ColoringPlan> plans;
      const int sources = (plan_name.empty() ? 0 : 1) + (file.empty() ? 0 : 1) + (all ? 1 : 0);
      if (sources != 1) throw InputError("give exactly one of --plan, --file or --all");
      if (!plan_name.empty()) plans.push_back(find_plan(plan_name));
      if (!file.empty()) plans = parse_plans(read_file(file));
      if (all) plans = plan_catalog();
      if (!export_path.empty() && plans.size() != 1) throw InputError("--export-coloring needs a single plan");
      bool ok = true;
      for (const auto& plan : plans) {
        const auto verdict = verify_plan(plan, jobs);
        ok = ok && verdict.ok;
        if (plans.size() == 1)
          out << verdict.message << "\n";
        else
          out << plan.name << ": " << verdict.message << "\n";
      }
      if (!export_path.empty() && ok) write_file(export_path, export_coloring(build_coloring(plans.front())));
      return ok ? 0 : 1;
    }
    if (feas_cmd->parsed()) {
      const auto spec = seq.spec();
      const auto cert = feasibility_sum(parse_kind(lattice), spec, horizon, jobs);
      out << cert.report(exact);
      return cert.verdict() == Verdict::Infeasible ? 0 : 1;
    }
    if (lower_cmd->parsed()) {
      const auto spec = seq.spec();
      try {
        out << density_lower_bound(parse_kind(lattice), spec, cap) << "\n";
      } catch (const std::domain_error& e) {
        out << "no finite lower bound: " << e.what() << "\n";
        return 1;
      }
      return 0;
    }
    if (cor_cmd->parsed()) {
      const LatticeKind kind = parse_kind(lattice);
      std::optional<CorollaryWitness> w;
      try {
        w = corollary_bound(kind, parse_sequence(sequence));
      } catch (const CorollaryInapplicable& e) {
        out << e.what() << "\n";
        return 1;
      }
      if (!w) {
        out << "no witness within the prefix\n";
        return 1;
      }
      out << w->text();
      if (verify) {
        const auto verdict = verify_plan(witness_plan(*w), jobs);
        out << "witness coloring: " << verdict.message << "\n";
        if (!verdict.ok) return 1;
      }
      return 0;
    }
    if (tables_cmd->parsed()) {
      TableOptions options{jobs, !trust};
      std::vector<TableReport> tables;
      if (lattice.empty())
        tables = reproduce_tables(options);
      else
        tables.push_back(reproduce_table(parse_kind(lattice), options));
      bool ok = true;
      for (const auto& t : tables)
        for (const auto& c : t.cells) ok = ok && c.status != CellStatus::Mismatch;
      if (csv) {
        out << tables_csv(tables);
      } else {
        for (const auto& t : tables) out << t.text() << "\n";
        for (const auto& c : diagonal_checks()) {
          if (!lattice.empty() && c.kind != parse_kind(lattice)) continue;
          out << "distance formula " << name(c.kind) << " d=" << c.d << ": " << c.formula << ", table " << c.table
              << (c.flagged ? " (flagged)" : "") << "\n";
        }
      }
      return ok ? 0 : 1;
    }
    if (pattern_cmd->parsed()) {
      const std::string path = file.empty() ? default_pattern_path() : file;
      const std::string bytes = read_file(path);
      const std::string hash = sha256_hex(bytes);
      out << "sha256 " << hash << (hash == kPatternSha256 ? " (shipped pattern)" : " (differs from shipped pattern)")
          << "\n";
      const auto grid = parse_pattern(bytes);
      const auto report = verify_pattern_torus(grid);
      out << report.text();
      if (report.ok) out << "OK: 17 colors\n";
      return report.ok ? 0 : 1;
    }
    if (derive_cmd->parsed()) {
      const auto grid = load_pattern(file.empty() ? default_pattern_path() : file);
      try {
        const auto d = derive_33_coloring(grid, jobs);
        for (const auto& s : d.steps) out << (s.ok ? "PASS " : "FAIL ") << s.claim << ": " << s.detail << "\n";
        out << "OK: " << d.coloring.color_count() << " colors\n";
        if (!export_path.empty()) write_file(export_path, export_coloring(d.coloring));
      } catch (const DerivationError& e) {
        out << "FAIL " << e.what() << "\n";
        return 1;
      }
      return 0;
    }
    if (render_cmd->parsed()) {
      const ImageFormat fmt = parse_format(format);
      const int sources = (plan_name.empty() ? 0 : 1) + (file.empty() ? 0 : 1) + (pattern ? 1 : 0) + (derived ? 1 : 0);
      if (sources != 1) throw InputError("give exactly one of --plan, --file, --pattern or --derive-33");
      PeriodicColoring col;
      if (pattern || derived) {
        col = pattern_or_derived("", derived, jobs);
      } else {
        const auto plans = !file.empty() ? parse_plans(read_file(file)) : std::vector<ColoringPlan>{find_plan(plan_name)};
        if (plans.size() != 1) throw InputError("plan file must hold exactly one plan");
        const auto verdict = verify_plan(plans.front(), jobs);
        if (!verdict.ok) {
          out << verdict.message << "\n";
          return 1;
        }
        col = build_coloring(plans.front());
      }
      std::optional<Window> w;
      if (!window.empty()) w = parse_window(window);
      try {
        render(col, output, fmt, w);
      } catch (const std::runtime_error& e) {
        throw InputError(e.what());
      }
      out << "wrote " << output << " (" << col.color_count() << " colors)\n";
      return 0;
    }
    if (export_cmd->parsed()) {
      if (all == !plan_name.empty()) throw InputError("give exactly one of --plan or --all");
      const std::string body = all ? format_plans(plan_catalog()) : format_plan(find_plan(plan_name));
      if (output.empty())
        out << body;
      else
        write_file(output, body);
      return 0;
    }
    if (catalog_cmd->parsed()) {
      const std::string body = export_catalog(kmax, mmax);
      if (output.empty())
        out << body;
      else
        write_file(output, body);
      return 0;
    }
  } catch (const PlanError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const PatternError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  err << "error: no subcommand\n";
  return 2;
}

}  // namespace latpack::cli
