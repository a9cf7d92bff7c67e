#pragma once

// Graph-spec files (JSON, format_version 1), built-in family URIs and DOT export.

#include <stdexcept>
#include <string>

#include "kpt/kgraph.hpp"

namespace kpt {

/// Malformed input: unreadable file, bad JSON, schema violations, bad URIs.
struct SpecError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline constexpr int kFormatVersion = 1;

Presentation parse_graph_json(const std::string& text);

/// builtin:omega:k, builtin:comb:n, builtin:onevertex:k:N1,...,Nk[:perm-spec].
/// perm-spec lists one permutation per color pair i < j (lexicographic),
/// pairs separated by ';', entries by ','.
Presentation parse_builtin_uri(const std::string& uri);

/// A "builtin:" URI or a path to a JSON graph-spec file.
Presentation load_graph_spec(const std::string& path_or_uri);

std::string to_json(const Presentation& p);

/// Colored skeleton; arrows point from range to source, labelled c1..ck.
/// Level presentations draw `depth` block levels, the lattice draws the
/// vertices with coordinate sum <= depth.
std::string to_dot(const KGraph& g, int depth = 3);

}  // namespace kpt
