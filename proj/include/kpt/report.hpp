#pragma once

// Structure report: socle, semisimplicity and the decomposition into
// M_inf(K) summands, one per class of line points.

#include <string>
#include <vector>

#include "kpt/analysis.hpp"
#include "kpt/presentation.hpp"
#include "kpt/validate.hpp"

namespace kpt {

inline constexpr int kReportVersion = 1;
inline constexpr const char* kMatrixAlgebra = "M_∞(K)";

/// A verdict with its witness rendered against the graph's names.
struct VerdictSummary {
  Truth truth = Truth::Unknown;
  std::string witness;
  int bound = 0;

  friend bool operator==(const VerdictSummary&, const VerdictSummary&) = default;
};

VerdictSummary summarize(const KGraph& g, const Verdict3& v);

struct ClassDescriptor {
  std::string representative;
  std::string closure;
  bool minimal_ideal = false;  // set only when no periodic paths are certified

  friend bool operator==(const ClassDescriptor&, const ClassDescriptor&) = default;
};

struct Summand {
  std::string algebra = kMatrixAlgebra;
  std::string representative;

  friend bool operator==(const Summand&, const Summand&) = default;
};

struct SocleSummary {
  std::string vertices;
  VerdictSummary is_zero;
  VerdictSummary essential;

  friend bool operator==(const SocleSummary&, const SocleSummary&) = default;
};

struct StructureReport {
  std::string graph;
  int depth_bound = 0;
  ValidationReport validation;
  std::string line_points;
  std::vector<ClassDescriptor> line_point_classes;
  bool classes_complete = true;
  SocleSummary socle;
  VerdictSummary semisimple;
  VerdictSummary no_periodic_paths;
  std::vector<Summand> decomposition;
  std::vector<std::string> notes;

  /// Any verdict left Unknown.
  bool has_unknown() const;
  friend bool operator==(const StructureReport&, const StructureReport&) = default;
};

struct AnalyzeOptions {
  int depth_bound = default_depth_bound();
};

/// Validates first; an invalid presentation yields a report carrying only
/// the violations (all verdicts Unknown).
StructureReport analyze(const Presentation& p, const AnalyzeOptions& options = {});
/// For an already validated graph.
StructureReport analyze(const KGraph& g, const AnalyzeOptions& options = {});

struct MatrixUnitCheck {
  std::string representative;
  std::string identity;  // "product": e_ij e_hl = delta_jh e_il; "involution": e_ij* = e_ji
  int bound = 0;
  int checked = 0;
  bool pass = true;
  std::string counterexample;  // first failing instance, with the offending element
};

/// Builds e_ij for i, j <= bound at every class representative and checks the
/// matrix-unit identities. `jobs` > 1 spreads the work over threads.
std::vector<MatrixUnitCheck> verify_matrix_units(const KGraph& g, const StructureReport& report, int bound,
                                                 int jobs = 1);

enum class ReportFormat { Json, Text };

std::string render(const StructureReport& r, ReportFormat format);
/// Inverse of render(r, Json); throws std::runtime_error on schema errors.
StructureReport report_from_json(const std::string& text);

}  // namespace kpt
