#include "kpt/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <ostream>

#include <json.hpp>

#include "kpt/expr.hpp"
#include "kpt/graph_io.hpp"
#include "kpt/report.hpp"
#include "kpt/validate.hpp"

namespace kpt {

namespace {

constexpr int kOk = 0, kNegative = 1, kInputError = 2, kUnknown = 3;

struct Options {
  std::string file;
  std::string format = "text";
  int depth = 0;
  int jobs = 1;
  int verify_units = -1;
  std::string expr, equals, nf, grade;
  bool in_socle = false;
};

void print_violations(const ValidationReport& r, std::ostream& os) {
  for (const auto& v : r.violations) os << to_string(v.kind) << ": " << v.witness << "\n";
}

int cmd_validate(const Options& o, std::ostream& out, std::ostream&) {
  auto p = load_graph_spec(o.file);
  auto r = validate_presentation(p);
  if (o.format == "json") {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& v : r.violations) arr.push_back({{"kind", to_string(v.kind)}, {"witness", v.witness}});
    out << nlohmann::ordered_json{{"ok", r.ok()}, {"violations", arr}}.dump(2) << "\n";
  } else if (r.ok()) {
    out << "ok\n";
  } else {
    print_violations(r, out);
  }
  return r.ok() ? kOk : kNegative;
}

int cmd_analyze(const Options& o, std::ostream& out, std::ostream& err) {
  auto p = load_graph_spec(o.file);
  AnalyzeOptions opts;
  opts.depth_bound = o.depth > 0 ? o.depth : default_depth_bound();
  auto fmt = o.format == "json" ? ReportFormat::Json : ReportFormat::Text;
  auto validation = validate_presentation(p);
  if (!validation.ok()) {
    out << render(analyze(p, opts), fmt);
    return kNegative;
  }
  auto g = KGraph::build(p);
  auto report = analyze(*g, opts);
  out << render(report, fmt);
  int code = report.has_unknown() ? kUnknown : kOk;
  if (o.verify_units >= 0) {
    bool all = true;
    for (const auto& c : verify_matrix_units(*g, report, o.verify_units, o.jobs)) {
      out << "matrix units [" << c.representative << "] " << c.identity << " up to " << c.bound << ": "
          << (c.pass ? "pass" : "FAIL") << " (" << c.checked << " checks)\n";
      if (!c.pass) {
        err << "counterexample: " << c.counterexample << "\n";
        all = false;
      }
    }
    if (!all && code == kOk) code = kNegative;
  }
  return code;
}

int cmd_element(const Options& o, std::ostream& out, std::ostream& err) {
  auto p = load_graph_spec(o.file);
  if (auto r = validate_presentation(p); !r.ok()) {
    print_violations(r, err);
    return kNegative;
  }
  auto g = KGraph::build(p);
  auto a = evaluate(o.expr, *g);
  auto boolean = [&](bool b) {
    out << (b ? "true" : "false") << "\n";
    return b ? kOk : kNegative;
  };
  auto print = [&](const Element& e) {
    out << (o.format == "json" ? to_json(e) : to_text(e)) << "\n";
    return kOk;
  };
  if (!o.equals.empty()) return boolean(equals(a, evaluate(o.equals, *g)));
  if (o.in_socle) return boolean(in_socle(a));
  if (!o.nf.empty()) {
    auto m = Degree::parse(o.nf);
    if (m.k() != g->k()) throw std::invalid_argument("degree " + o.nf + " does not have " + std::to_string(g->k()) + " entries");
    return print(normal_form(a, m));
  }
  if (!o.grade.empty()) {
    auto n = DegreeDelta::parse(o.grade);
    if (n.k() != g->k()) throw std::invalid_argument("degree " + o.grade + " does not have " + std::to_string(g->k()) + " entries");
    return print(graded_component(a, n));
  }
  return print(a);
}

int cmd_dot(const Options& o, std::ostream& out, std::ostream& err) {
  auto p = load_graph_spec(o.file);
  auto r = validate_presentation(p);
  if (!r.ok()) {
    print_violations(r, err);
    return kNegative;
  }
  out << to_dot(*KGraph::build(p), o.depth > 0 ? o.depth : 3);
  return kOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Kumjian-Pask algebras of higher-rank graphs"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--jobs", o.jobs, "Worker threads for library computations")->check(CLI::PositiveNumber);

  auto* validate = app.add_subcommand("validate", "Check a graph spec");
  validate->add_option("file", o.file, "Graph-spec file or builtin: URI")->required();
  validate->add_option("--format", o.format)->check(CLI::IsMember({"text", "json"}));

  auto* analyze_cmd = app.add_subcommand("analyze", "Structure report: socle, semisimplicity, decomposition");
  analyze_cmd->add_option("file", o.file, "Graph-spec file or builtin: URI")->required();
  analyze_cmd->add_option("--depth", o.depth, "Depth bound (default: KPT_DEPTH_BOUND or 64)")
      ->check(CLI::PositiveNumber);
  analyze_cmd->add_option("--format", o.format)->check(CLI::IsMember({"text", "json"}));
  analyze_cmd->add_option("--verify-units", o.verify_units, "Check matrix units e_ij for i, j up to this bound")
      ->check(CLI::NonNegativeNumber);

  auto* element = app.add_subcommand("element", "Evaluate an algebra expression");
  element->add_option("file", o.file, "Graph-spec file or builtin: URI")->required();
  element->add_option("expr", o.expr, "Expression, e.g. \"adj(s(e))*s(e)\"")->required();
  auto* eq = element->add_option("--equals", o.equals, "Compare with a second expression");
  auto* nf = element->add_option("--nf", o.nf, "Normal form with right legs of this degree");
  auto* grade = element->add_option("--grade", o.grade, "Graded component of this degree");
  auto* socle = element->add_flag("--in-socle", o.in_socle, "Membership in the socle");
  eq->excludes(nf, grade, socle);
  nf->excludes(grade, socle);
  grade->excludes(socle);
  element->add_option("--format", o.format)->check(CLI::IsMember({"text", "json"}));

  auto* dot = app.add_subcommand("dot", "Export the skeleton as Graphviz DOT");
  dot->add_option("file", o.file, "Graph-spec file or builtin: URI")->required();
  dot->add_option("--depth", o.depth, "Block levels (or lattice radius) to draw")->check(CLI::PositiveNumber);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kInputError;
  }

  try {
    if (validate->parsed()) return cmd_validate(o, out, err);
    if (analyze_cmd->parsed()) return cmd_analyze(o, out, err);
    if (element->parsed()) return cmd_element(o, out, err);
    if (dot->parsed()) return cmd_dot(o, out, err);
  } catch (const SpecError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const ExprError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::logic_error& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::runtime_error& e) {
    err << "undecided: " << e.what() << "\n";
    return kUnknown;
  }
  return kInputError;
}

}  // namespace kpt
