#pragma once

// Checks that a presentation describes a row-finite k-graph with no sources.

#include <string>
#include <vector>

#include "kpt/kgraph.hpp"

namespace kpt {

enum class ViolationKind { NonBijectiveSquare, CubeFailure, SourceExists, NotRowFinite, DanglingEndpoint };

/// "non-bijective-square", "cube-failure", ...
std::string to_string(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  std::string witness;
  friend bool operator==(const Violation&, const Violation&) = default;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
  friend bool operator==(const ValidationReport&, const ValidationReport&) = default;
};

/// Never throws on malformed data: unresolved names and inconsistent
/// declarations come back as dangling-endpoint violations. Level
/// presentations are checked on the core and the first two block levels,
/// which covers every square template and the gluing maps.
ValidationReport validate_presentation(const Presentation& p);

/// The local checks (squares, cube condition, sources) on an already
/// materialized graph.
ValidationReport validate_graph(const KGraph& g);

}  // namespace kpt
