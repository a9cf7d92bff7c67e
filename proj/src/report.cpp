#include "kpt/report.hpp"

#include <atomic>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "kpt/closure.hpp"
#include "kpt/kp_algebra.hpp"
#include "kpt/paths.hpp"

namespace kpt {

using json = nlohmann::ordered_json;

namespace {

std::string join_names(const KGraph& g, const std::vector<Vertex>& vs) {
  std::string out;
  for (std::size_t i = 0; i < vs.size(); ++i) out += (i ? ", " : "") + g.name(vs[i]);
  return out;
}

json verdict_json(const VerdictSummary& v) {
  return json{{"truth", to_string(v.truth)}, {"witness", v.witness}, {"bound", v.bound}};
}

Truth truth_from(const std::string& s) {
  if (s == "yes") return Truth::Yes;
  if (s == "no") return Truth::No;
  if (s == "unknown") return Truth::Unknown;
  throw std::runtime_error("bad truth value '" + s + "'");
}

VerdictSummary verdict_from(const json& j) {
  return {truth_from(j.at("truth").get<std::string>()), j.at("witness").get<std::string>(), j.at("bound").get<int>()};
}

ViolationKind kind_from(const std::string& s) {
  for (auto k : {ViolationKind::NonBijectiveSquare, ViolationKind::CubeFailure, ViolationKind::SourceExists,
                 ViolationKind::NotRowFinite, ViolationKind::DanglingEndpoint})
    if (to_string(k) == s) return k;
  throw std::runtime_error("bad violation kind '" + s + "'");
}

std::string verdict_text(const VerdictSummary& v) {
  std::string out = to_string(v.truth);
  if (v.truth == Truth::Unknown) return out + " (depth bound " + std::to_string(v.bound) + ")";
  if (!v.witness.empty()) out += " (" + v.witness + ")";
  return out;
}

}  // namespace

VerdictSummary summarize(const KGraph& g, const Verdict3& v) {
  std::string w = v.witness.note;
  auto add = [&](const std::string& part) { w += (w.empty() ? "" : "; ") + part; };
  if (!v.witness.vertices.empty()) add("at " + join_names(g, v.witness.vertices));
  if (v.witness.m) add("m = " + v.witness.m->str());
  if (v.witness.n) add("n = " + v.witness.n->str());
  if (v.witness.path) add("path " + path_name(g, *v.witness.path));
  return {v.truth, w, v.bound};
}

bool StructureReport::has_unknown() const {
  return !classes_complete || socle.is_zero.truth == Truth::Unknown || socle.essential.truth == Truth::Unknown ||
         semisimple.truth == Truth::Unknown;
}

StructureReport analyze(const Presentation& p, const AnalyzeOptions& options) {
  auto validation = validate_presentation(p);
  if (!validation.ok()) {
    StructureReport r;
    r.graph = describe(p);
    r.depth_bound = options.depth_bound;
    r.validation = validation;
    r.classes_complete = false;
    const VerdictSummary skipped{Truth::Unknown, "presentation failed validation", options.depth_bound};
    r.socle = {"", skipped, skipped};
    r.semisimple = skipped;
    r.no_periodic_paths = skipped;
    r.notes.push_back("analysis skipped: presentation failed validation");
    return r;
  }
  return analyze(*KGraph::build(p), options);
}

StructureReport analyze(const KGraph& g, const AnalyzeOptions& options) {
  const int bound = options.depth_bound;
  StructureReport r;
  r.graph = g.label();
  r.depth_bound = bound;
  const auto lp = line_points(g, bound);
  r.line_points = lp.set.describe();
  if (!lp.unknown.empty()) r.notes.push_back("line-point status undecided at " + join_names(g, lp.unknown));

  const auto partition = line_point_classes(g, lp);
  const auto nopp = has_no_periodic_paths(g, bound);
  r.no_periodic_paths = summarize(g, nopp);
  for (const auto& c : partition.classes)
    r.line_point_classes.push_back({g.name(c.representative), c.closure.describe(), nopp.truth == Truth::Yes});
  r.classes_complete = partition.complete;
  if (!partition.note.empty()) r.notes.push_back(partition.note);

  r.socle.vertices = socle_vertices(g, lp).describe();
  r.socle.is_zero = summarize(g, socle_is_zero(g, lp));
  r.socle.essential = summarize(g, socle_essential(g, lp));
  r.semisimple = summarize(g, is_semisimple(g, lp));

  if (r.semisimple.truth == Truth::Yes) {
    for (const auto& c : partition.classes) r.decomposition.push_back({kMatrixAlgebra, g.name(c.representative)});
    VertexSet cover(g);
    for (std::size_t i = 0; i < partition.classes.size(); ++i) {
      cover = cover.unite(partition.classes[i].closure);
      for (std::size_t j = i + 1; j < partition.classes.size(); ++j)
        if (!partition.classes[i].closure.intersect(partition.classes[j].closure).empty())
          r.notes.push_back("cross-check failed: closures of " + g.name(partition.classes[i].representative) +
                            " and " + g.name(partition.classes[j].representative) + " intersect");
    }
    if (!saturated_hereditary_closure(cover).is_all())
      r.notes.push_back("cross-check failed: class closures do not generate every vertex");
  }
  if (nopp.truth == Truth::Yes && !partition.classes.empty())
    r.notes.push_back("no periodic paths: the ideal of each class closure is minimal");
  return r;
}

std::vector<MatrixUnitCheck> verify_matrix_units(const KGraph& g, const StructureReport& report, int bound, int jobs) {
  std::vector<MatrixUnitCheck> out;
  const int n = bound + 1;
  for (const auto& c : report.line_point_classes) {
    const auto v = g.vertex(c.representative);
    std::vector<std::vector<Element>> e(n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) e[i].push_back(matrix_unit(g, v, i, j));

    MatrixUnitCheck inv{c.representative, "involution", bound, 0, true, ""};
    for (int i = 0; i < n && inv.pass; ++i)
      for (int j = 0; j < n && inv.pass; ++j) {
        ++inv.checked;
        auto lhs = involution(e[i][j]);
        if (!equals(lhs, e[j][i])) {
          inv.pass = false;
          inv.counterexample = "adj(e(" + std::to_string(i) + "," + std::to_string(j) + ")) = " + to_text(lhs);
        }
      }

    MatrixUnitCheck prod{c.representative, "product", bound, 0, true, ""};
    std::atomic<int> next{0};
    std::mutex m;
    auto worker = [&] {
      for (int i; (i = next++) < n;)
        for (int j = 0; j < n; ++j)
          for (int h = 0; h < n; ++h)
            for (int l = 0; l < n; ++l) {
              auto lhs = mul(e[i][j], e[h][l]);
              bool ok = j == h ? equals(lhs, e[i][l]) : lhs.is_zero();
              std::lock_guard lock(m);
              ++prod.checked;
              if (!ok && prod.pass) {
                prod.pass = false;
                prod.counterexample = "e(" + std::to_string(i) + "," + std::to_string(j) + ") e(" +
                                      std::to_string(h) + "," + std::to_string(l) + ") = " + to_text(lhs);
              }
            }
    };
    std::vector<std::thread> pool;
    for (int t = 1; t < std::max(1, jobs); ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    out.push_back(prod);
    out.push_back(inv);
  }
  return out;
}

std::string render(const StructureReport& r, ReportFormat format) {
  if (format == ReportFormat::Json) {
    json j;
    j["format_version"] = kReportVersion;
    j["graph"] = r.graph;
    j["depth_bound"] = r.depth_bound;
    auto violations = json::array();
    for (const auto& v : r.validation.violations)
      violations.push_back(json{{"kind", to_string(v.kind)}, {"witness", v.witness}});
    j["validation"] = json{{"ok", r.validation.ok()}, {"violations", violations}};
    j["line_points"] = r.line_points;
    auto classes = json::array();
    for (const auto& c : r.line_point_classes)
      classes.push_back(
          json{{"representative", c.representative}, {"closure", c.closure}, {"minimal_ideal", c.minimal_ideal}});
    j["line_point_classes"] = classes;
    j["classes_complete"] = r.classes_complete;
    j["socle"] = json{{"vertices", r.socle.vertices},
                      {"is_zero", verdict_json(r.socle.is_zero)},
                      {"essential", verdict_json(r.socle.essential)}};
    j["semisimple"] = verdict_json(r.semisimple);
    j["no_periodic_paths"] = verdict_json(r.no_periodic_paths);
    auto summands = json::array();
    for (const auto& s : r.decomposition)
      summands.push_back(json{{"algebra", s.algebra}, {"representative", s.representative}});
    j["decomposition"] = summands;
    j["notes"] = r.notes;
    return j.dump(2) + "\n";
  }

  std::ostringstream out;
  out << "graph: " << r.graph << "\n";
  if (r.validation.ok()) {
    out << "validation: ok\n";
  } else {
    out << "validation: " << r.validation.violations.size() << " violation(s)\n";
    for (const auto& v : r.validation.violations) out << "  " << to_string(v.kind) << ": " << v.witness << "\n";
  }
  out << "line points: " << r.line_points << "\n";
  out << "line-point classes: " << r.line_point_classes.size() << (r.classes_complete ? "" : " (incomplete)") << "\n";
  for (const auto& c : r.line_point_classes)
    out << "  class " << c.representative << ": closure " << c.closure << (c.minimal_ideal ? "; minimal ideal" : "")
        << "\n";
  out << "socle: "
      << (r.socle.is_zero.truth == Truth::Yes  ? "zero"
          : r.socle.is_zero.truth == Truth::No ? "nonzero"
                                                : "unknown")
      << "\n";
  out << "socle vertices: " << r.socle.vertices << "\n";
  out << "socle essential: " << verdict_text(r.socle.essential) << "\n";
  if (r.semisimple.truth == Truth::Yes)
    out << "semisimple: yes; summands: " << r.decomposition.size() << " × " << kMatrixAlgebra << "\n";
  else
    out << "semisimple: " << verdict_text(r.semisimple) << "\n";
  for (const auto& s : r.decomposition) out << "summand: " << s.algebra << " [" << s.representative << "]\n";
  out << "no periodic paths: " << verdict_text(r.no_periodic_paths) << "\n";
  for (const auto& n : r.notes) out << "note: " << n << "\n";
  return out.str();
}

StructureReport report_from_json(const std::string& text) {
  try {
    auto j = json::parse(text);
    if (j.at("format_version").get<int>() != kReportVersion) throw std::runtime_error("unsupported report version");
    StructureReport r;
    r.graph = j.at("graph").get<std::string>();
    r.depth_bound = j.at("depth_bound").get<int>();
    for (const auto& v : j.at("validation").at("violations"))
      r.validation.violations.push_back({kind_from(v.at("kind").get<std::string>()), v.at("witness").get<std::string>()});
    r.line_points = j.at("line_points").get<std::string>();
    for (const auto& c : j.at("line_point_classes"))
      r.line_point_classes.push_back({c.at("representative").get<std::string>(), c.at("closure").get<std::string>(),
                                      c.at("minimal_ideal").get<bool>()});
    r.classes_complete = j.at("classes_complete").get<bool>();
    const auto& s = j.at("socle");
    r.socle = {s.at("vertices").get<std::string>(), verdict_from(s.at("is_zero")), verdict_from(s.at("essential"))};
    r.semisimple = verdict_from(j.at("semisimple"));
    r.no_periodic_paths = verdict_from(j.at("no_periodic_paths"));
    for (const auto& d : j.at("decomposition"))
      r.decomposition.push_back({d.at("algebra").get<std::string>(), d.at("representative").get<std::string>()});
    r.notes = j.at("notes").get<std::vector<std::string>>();
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error(std::string("bad report JSON: ") + e.what());
  }
}

}  // namespace kpt
