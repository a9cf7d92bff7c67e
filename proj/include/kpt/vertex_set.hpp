#pragma once

// Sets of vertices with decidable membership and equality.
//
//   finite graphs   explicit membership vector
//   level graphs    core membership + block masks, eventually periodic in the level
//   lattice Omega_k finitely many points + finitely many cones {w : w >= g}

#include <optional>
#include <string>
#include <vector>

#include "kpt/kgraph.hpp"

namespace kpt {

class VertexSet {
 public:
  using Mask = std::vector<bool>;  // indexed by block type

  /// The empty set.
  explicit VertexSet(const KGraph& g);

  static VertexSet all(const KGraph& g);
  static VertexSet of(const KGraph& g, const std::vector<Vertex>& vs);
  /// Level graphs: block level first_block_level() + i has mask prefix[i] for
  /// i < prefix.size(), then the masks of `cycle` repeat. `cycle` must be non-empty.
  static VertexSet level(const KGraph& g, Mask core, std::vector<Mask> prefix, std::vector<Mask> cycle);
  /// Omega_k: the points plus every vertex above one of the cone generators.
  static VertexSet lattice(const KGraph& g, std::vector<Degree> points, std::vector<Degree> cones);

  const KGraph& graph() const { return *g_; }

  bool contains(Vertex v) const;
  bool empty() const;
  bool is_all() const;
  /// Finitely many members.
  bool is_bounded() const;
  /// Members of a finite set in index order; throws std::logic_error for infinite sets.
  std::vector<Vertex> members() const;
  /// Some member, preferring core vertices and low levels.
  std::optional<Vertex> some_member() const;
  /// Some vertex of the graph outside the set.
  std::optional<Vertex> some_non_member() const;

  bool subset_of(const VertexSet& o) const;
  friend bool operator==(const VertexSet& a, const VertexSet& b);

  VertexSet unite(const VertexSet& o) const;
  VertexSet intersect(const VertexSet& o) const;
  /// Finite and level graphs; lattice sets only when empty or everything.
  VertexSet complement() const;

  // Level representation.
  const Mask& core_mask() const { return core_; }
  const std::vector<Mask>& prefix() const { return prefix_; }
  const std::vector<Mask>& cycle() const { return cycle_; }
  Mask mask_at(std::int64_t level) const;

  // Lattice representation.
  const std::vector<Degree>& points() const { return points_; }
  const std::vector<Degree>& cones() const { return cones_; }

  /// Deterministic one-line description, e.g. "{w, u1}".
  std::string describe() const;

 private:
  void canonicalize();

  const KGraph* g_;
  Mask core_;  // finite graphs: all vertices; level graphs: core vertices
  std::vector<Mask> prefix_, cycle_;
  std::vector<Degree> points_, cones_;
};

}  // namespace kpt
