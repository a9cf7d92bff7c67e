#pragma once

// Materialized k-graphs. A KGraph turns a Presentation into vertices, colored
// edges and factorization squares. Finite skeletons are materialized eagerly;
// level presentations and the lattice family Omega_k are materialized on
// demand behind an internal mutex, so a const KGraph is safe to share across
// threads.

#include <compare>
#include <cstdint>
#include <deque>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "kpt/degree.hpp"
#include "kpt/presentation.hpp"

namespace kpt {

struct Vertex {
  std::uint32_t index = 0;
  friend auto operator<=>(Vertex, Vertex) = default;
};

struct Edge {
  std::uint32_t index = 0;
  friend auto operator<=>(Edge, Edge) = default;
};

enum class GraphKind { Finite, Level, Lattice };

struct EdgeInfo {
  int color = 1;
  Vertex range;
  Vertex source;
};

/// A morphism of the k-graph in canonical form: the word lists all color-1
/// edges, then all color-2 edges, and so on. The empty word is the vertex
/// `range` (== `source`).
struct Path {
  Vertex range;
  Vertex source;
  Degree degree;
  std::vector<Edge> word;

  bool is_vertex() const { return word.empty(); }

  friend bool operator==(const Path& a, const Path& b) { return a.range == b.range && a.word == b.word; }
  friend std::strong_ordering operator<=>(const Path& a, const Path& b) {
    if (auto c = a.degree <=> b.degree; c != 0) return c;
    if (auto c = a.word <=> b.word; c != 0) return c;
    return a.range <=> b.range;
  }
};

/// Position of a vertex in the repeating block of a level presentation.
struct BlockPosition {
  std::int64_t level = 0;
  std::size_t type = 0;
};

class KGraph {
 public:
  /// Throws std::invalid_argument for references to undeclared vertices or
  /// edges, duplicate ids, or colors outside 1..k. Use validate_presentation
  /// to get those as a report instead.
  static std::shared_ptr<const KGraph> build(const Presentation& p);

  KGraph(const KGraph&) = delete;
  KGraph& operator=(const KGraph&) = delete;
  ~KGraph();

  int k() const { return k_; }
  GraphKind kind() const { return kind_; }
  const Presentation& presentation() const { return presentation_; }
  std::string label() const { return describe(presentation_); }

  std::optional<Vertex> find_vertex(std::string_view name) const;
  Vertex vertex(std::string_view name) const;
  std::optional<Edge> find_edge(std::string_view name) const;
  Edge edge(std::string_view name) const;

  std::string name(Vertex v) const;
  std::string name(Edge e) const;
  EdgeInfo info(Edge e) const;
  int color(Edge e) const { return info(e).color; }
  Vertex range(Edge e) const { return info(e).range; }
  Vertex source(Edge e) const { return info(e).source; }

  /// v Lambda^{e_color}, ordered by edge name.
  std::span<const Edge> edges_at(Vertex v, int color) const;
  std::size_t out_degree(Vertex v, int color) const { return edges_at(v, color).size(); }

  /// For composable e f with distinct colors, the unique f' e' with the same
  /// endpoints and swapped colors; nullopt when the presentation is missing it.
  std::optional<std::pair<Edge, Edge>> square(Edge e, Edge f) const;

  /// Inconsistent square declarations found while materializing.
  const std::vector<std::string>& square_conflicts() const { return square_conflicts_; }

  bool is_finite() const { return kind_ == GraphKind::Finite; }
  /// All vertices of a finite graph in declaration order. Throws otherwise.
  std::vector<Vertex> vertices() const;
  std::size_t vertex_count() const;

  // Level structure (kind() == Level).
  int first_block_level() const;
  /// The level presentation after expanding built-ins such as Comb(n).
  const LevelPresentation& level_data() const;
  std::vector<Vertex> core_vertices() const;
  const std::vector<std::string>& block_types() const;
  Vertex block_vertex(std::int64_t level, std::size_t type) const;
  std::optional<BlockPosition> block_position(Vertex v) const;
  /// Level of a core vertex (its index in core_levels).
  int core_level(Vertex v) const;

  // Lattice structure (kind() == Lattice).
  Vertex lattice_vertex(const Degree& coords) const;
  Degree lattice_coords(Vertex v) const;

 private:
  struct Impl;
  explicit KGraph(Presentation p);

  Presentation presentation_;
  int k_ = 1;
  GraphKind kind_ = GraphKind::Finite;
  std::vector<std::string> square_conflicts_;
  std::unique_ptr<Impl> impl_;
};

using GraphPtr = std::shared_ptr<const KGraph>;

/// Lattice vertex name: "3" for k = 1, "1_0_2" otherwise.
std::string lattice_vertex_name(const Degree& coords);

}  // namespace kpt
