#pragma once

// Path composition, factorization and enumeration on a KGraph.

#include <utility>
#include <vector>

#include "kpt/kgraph.hpp"

namespace kpt {

Path vertex_path(const KGraph& g, Vertex v);
Path edge_path(const KGraph& g, Edge e);

/// Builds the path with the given composable edge word (any color order) and
/// returns it in canonical form. Throws std::invalid_argument if consecutive
/// edges do not compose.
Path make_path(const KGraph& g, const std::vector<Edge>& word);

/// lambda mu; throws std::invalid_argument unless s(lambda) == r(mu).
Path compose(const KGraph& g, const Path& lambda, const Path& mu);

/// (lambda(0,m), lambda(m,d(lambda))); throws std::invalid_argument unless m <= d(lambda).
std::pair<Path, Path> factor(const KGraph& g, const Path& lambda, const Degree& m);

/// The factorization of lambda whose i-th edge has color colors[i].
std::vector<Edge> refactor(const KGraph& g, const Path& lambda, const std::vector<int>& colors);

/// Rewrites a composable edge word into the given color order using squares.
std::vector<Edge> reorder(const KGraph& g, std::vector<Edge> word, const std::vector<int>& colors);

/// Canonical color word of a degree: 1^{n_1} 2^{n_2} ... k^{n_k}.
std::vector<int> canonical_colors(const Degree& d);

/// v Lambda^n in canonical form, ordered by edge names along the word.
std::vector<Path> enumerate_paths(const KGraph& g, Vertex v, const Degree& n);

/// |v Lambda^n| without materializing the paths.
std::size_t count_paths(const KGraph& g, Vertex v, const Degree& n);

/// Edge names joined by '.', or the vertex name for a degree-zero path.
std::string path_name(const KGraph& g, const Path& p);

}  // namespace kpt
