#pragma once

// Finite descriptions of row-finite k-graphs, as read from graph-spec files
// or built-in family URIs. These are plain data; KGraph materializes them.

#include <array>
#include <string>
#include <variant>
#include <vector>

namespace kpt {

struct EdgeDecl {
  std::string id;
  int color = 1;
  std::string range;
  std::string source;
};

/// One commuting square: left = e_i f_j is identified with right = f'_j e'_i.
/// Entries are read in either orientation; each declares the inverse as well.
struct SquareDecl {
  std::array<std::string, 2> left;
  std::array<std::string, 2> right;
};

struct FiniteSkeleton {
  int k = 1;
  std::vector<std::string> vertices;
  std::vector<EdgeDecl> edges;
  std::vector<SquareDecl> squares;
};

/// Edge of the repeating block. Its range sits at block level l and its
/// source at level l + source_offset (offset 0 or 1).
struct BlockEdgeDecl {
  std::string id;
  int color = 1;
  std::string range;
  std::string source;
  int source_offset = 1;
};

/// An infinite k-graph given by finitely many core levels followed by one
/// block of vertices repeated at every deeper level.
///
/// Naming of materialized block data: block vertex `b` at level l is
/// "b@l"; block edge template `t` whose range sits at level l is "t@l".
/// Block levels are numbered from core_levels.size() on.
struct LevelPresentation {
  int k = 1;
  std::vector<std::vector<std::string>> core_levels;
  std::vector<EdgeDecl> core_edges;     // range and source in the core
  std::vector<SquareDecl> core_squares; // concrete names (core, glue, "t@l")
  std::vector<std::string> block_vertices;
  std::vector<BlockEdgeDecl> block_edges;
  std::vector<EdgeDecl> glue_edges;     // range in the core, source in the first block level
  std::vector<SquareDecl> block_squares; // block edge templates, any level

  int first_block_level() const { return static_cast<int>(core_levels.size()); }
};

struct OmegaFamily {
  int k = 1;
};

/// The comb 1-graph with n vertical components (see README for the skeleton).
struct CombFamily {
  int n = 1;
};

/// One vertex with sizes[i-1] loops of color i. For colors i < j the
/// factorization of the color-(i,j) word (a,b) is given by a permutation of
/// [N_i] x [N_j] in row-major order; empty means identity.
struct OneVertexFamily {
  int k = 1;
  std::vector<int> sizes;
  std::vector<std::vector<int>> permutations;  // one per color pair i < j, lexicographic
};

using BuiltinFamily = std::variant<OmegaFamily, CombFamily, OneVertexFamily>;

using Presentation = std::variant<FiniteSkeleton, LevelPresentation, BuiltinFamily>;

int rank_of(const Presentation& p);

/// Edge name used for loop `index` (1-based) of a color in OneVertex graphs.
std::string one_vertex_edge_name(int k, int color, int index, int count);

FiniteSkeleton expand(const OneVertexFamily& f);
LevelPresentation expand(const CombFamily& f);

/// Human-readable label, e.g. "builtin:comb:2" or "skeleton(k=1, 3 vertices)".
std::string describe(const Presentation& p);

}  // namespace kpt
