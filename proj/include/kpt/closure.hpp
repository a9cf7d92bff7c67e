#pragma once

// Hereditary and saturated closures of vertex sets, the connecting paths
// they guarantee, and quotient graphs by saturated hereditary sets.

#include "kpt/kgraph.hpp"
#include "kpt/vertex_set.hpp"

namespace kpt {

/// Smallest hereditary superset: everything reachable from W along edges
/// (range to source).
VertexSet hereditary_closure(const VertexSet& w);

/// Smallest saturated hereditary superset: start from the hereditary closure
/// and repeatedly add every v whose color-i edges all have sources inside,
/// for some color i, until nothing changes.
VertexSet saturated_hereditary_closure(const VertexSet& w);

/// {v : v Lambda T is non-empty}, the vertices with a path into `target`.
VertexSet backward_reach(const VertexSet& target);

bool is_hereditary(const VertexSet& h);
/// For hereditary h: adding saturation consequences changes nothing.
bool is_saturated(const VertexSet& h);

/// A path mu in v Lambda with s(mu) in the hereditary closure of W, found by
/// descending the saturation strata (lowest color first, then edge name).
/// Throws std::invalid_argument when v lies outside the saturated closure
/// and std::runtime_error if no path is found within depth_bound edges.
Path connect_witness(const KGraph& g, Vertex v, const VertexSet& w, int depth_bound = 64);

/// Lambda \ H: vertices outside H and the edges with source outside H.
/// Throws std::invalid_argument unless H is saturated and hereditary.
/// Level presentations are re-blocked to the period of H; with period 1 the
/// vertex and edge names of the remaining graph are unchanged.
Presentation quotient_graph(const KGraph& g, const VertexSet& h);

}  // namespace kpt
