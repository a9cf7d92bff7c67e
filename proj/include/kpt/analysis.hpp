#pragma once

// Line points, their equivalence classes, and the socle / semisimplicity
// criteria built from them. Every verdict is three-valued: analyses that
// would need to look past the depth bound answer Unknown.

#include <optional>
#include <string>
#include <vector>

#include "kpt/closure.hpp"
#include "kpt/kgraph.hpp"
#include "kpt/vertex_set.hpp"

namespace kpt {

/// KPT_DEPTH_BOUND from the environment, else 64.
int default_depth_bound();

enum class Truth { Yes, No, Unknown };
std::string to_string(Truth t);

struct Witness {
  std::vector<Vertex> vertices;
  std::optional<Path> path;
  std::optional<Degree> m, n;
  std::string note;
};

struct Verdict3 {
  Truth truth = Truth::Unknown;
  Witness witness;
  int bound = 0;

  static Verdict3 yes(Witness w = {}) { return {Truth::Yes, std::move(w), 0}; }
  static Verdict3 no(Witness w = {}) { return {Truth::No, std::move(w), 0}; }
  static Verdict3 unknown(int bound, std::string note = {}) {
    Witness w;
    w.note = std::move(note);
    return {Truth::Unknown, std::move(w), bound};
  }
};

/// The unique infinite path x at a vertex whose degree-m paths are unique for every m.
struct InfinitePathDescriptor {
  enum class Kind {
    EventuallyPeriodic,  // x = prefix cycle cycle ...
    RankCertified,       // a rank strictly increases along x, so no vertex repeats
    ShiftPeriodic,       // x(p) = x(q) for incomparable p, q, hence sigma^p x = sigma^q x
  };
  Vertex base;
  Kind kind = Kind::EventuallyPeriodic;
  std::optional<Path> prefix, cycle;
  std::string successor_rule, rank;
  std::optional<Degree> p, q;

  bool aperiodic() const { return kind == Kind::RankCertified; }
};

/// x(m): the source of the unique path of degree m at a deterministic vertex.
Vertex point_at(const KGraph& g, Vertex base, const Degree& m);
/// x(m, n) for m <= n.
Path segment(const KGraph& g, const InfinitePathDescriptor& x, const Degree& m, const Degree& n);

struct UniquePathResult {
  enum class Status { Branch, Deterministic, Unknown };
  Status status = Status::Unknown;
  std::optional<InfinitePathDescriptor> path;  // Deterministic; may be missing at the bound
  std::optional<Degree> branch_degree;         // Branch: |v Lambda^m| > 1 ...
  std::vector<Path> branch_paths;              // ... shown by two distinct paths of that degree
  int bound = 0;
};

UniquePathResult unique_path(const KGraph& g, Vertex v, int depth_bound = default_depth_bound());

struct LinePointCertificate {
  enum class Reason { Line, Branch, Periodic, Bound };
  Vertex vertex;
  Truth verdict = Truth::Unknown;
  Reason reason = Reason::Bound;
  std::optional<InfinitePathDescriptor> path;
  std::optional<Degree> m;       // Branch
  std::vector<Path> branch;      // Branch
  std::optional<Degree> p, q;    // Periodic: x(p) = x(q)
  std::optional<Vertex> revisited;
  int bound = 0;
};

LinePointCertificate is_line_point(const KGraph& g, Vertex v, int depth_bound = default_depth_bound());

struct LinePoints {
  VertexSet set;
  /// Finite graphs: one per vertex. Level presentations: one per core
  /// vertex and one per block type at the first block level (block status
  /// does not depend on the level). Omega_k: the origin.
  std::vector<LinePointCertificate> certificates;
  std::vector<Vertex> unknown;
  bool complete() const { return unknown.empty(); }
};

LinePoints line_points(const KGraph& g, int depth_bound = default_depth_bound());

/// v ~ w: the unique paths meet, x(m) = y(n). The witness carries m, n and
/// the meeting vertex. Throws std::invalid_argument unless both are line points.
Verdict3 line_point_equivalent(const KGraph& g, Vertex v, Vertex w, int depth_bound = default_depth_bound());

struct LinePointClass {
  Vertex representative;
  VertexSet members;  // line points equivalent to the representative
  VertexSet closure;  // saturated hereditary closure of the representative
};

struct ClassPartition {
  std::vector<LinePointClass> classes;
  bool complete = true;
  std::string note;
};

ClassPartition line_point_classes(const KGraph& g, const LinePoints& lp);
ClassPartition line_point_classes(const KGraph& g);

/// Saturated hereditary closure of the line points.
VertexSet socle_vertices(const KGraph& g, const LinePoints& lp);
VertexSet socle_vertices(const KGraph& g);

Verdict3 socle_is_zero(const KGraph& g, const LinePoints& lp);
Verdict3 socle_is_zero(const KGraph& g);
Verdict3 is_semisimple(const KGraph& g, const LinePoints& lp);
Verdict3 is_semisimple(const KGraph& g);
Verdict3 socle_essential(const KGraph& g, const LinePoints& lp);
Verdict3 socle_essential(const KGraph& g);

/// Yes when no infinite path is periodic: Omega_k, and level presentations of
/// rank 1 without cycles. Finite graphs always answer No (with a periodic
/// path found from some vertex).
Verdict3 has_no_periodic_paths(const KGraph& g, int depth_bound = default_depth_bound());

/// Bounded probe for "cofinal and aperiodic". Unknown when neither a proof
/// nor a counterexample is found.
Verdict3 is_cofinal_and_aperiodic(const KGraph& g, int depth_bound = default_depth_bound());

}  // namespace kpt
