#pragma once

#include <cstdint>

#include "gkd/graph.hpp"

namespace gkd {

// Sizes of a graph and of its derived forms, each computable both in closed
// form from the degree sequence and by materializing the derived graph.
struct TransformStats {
  std::int64_t vertices = 0;
  std::int64_t edges = 0;
  std::int64_t augmented_vertices = 0;       // n + 1
  std::int64_t augmented_edges = 0;          // m + 2n
  std::int64_t augmented_line_vertices = 0;  // m + 2n
  std::int64_t augmented_line_edges = 0;     // n^2 + sum (din+1)(dout+1)
  std::int64_t transformed_vertices = 0;     // m + 1
  std::int64_t transformed_edges = 0;        // sum (din*dout + din + dout)

  friend bool operator==(const TransformStats&, const TransformStats&) = default;
};

// Adds one dummy vertex connected to and from every original vertex. The
// dummy vertex gets a fresh id (max vertex id + 1) and the reserved dummy
// label; the 2n new edges get fresh ids and the reserved dummy edge label.
// Rejects graphs that already contain a dummy vertex.
LabeledDigraph augment_dummy(const LabeledDigraph& g);

// Edge-to-vertex dual: one output vertex per input edge (vertex id = edge id,
// vertex labels = edge labels), and an output edge for every 2-walk d -> e
// through a shared vertex v, carrying v's id and labels.
LabeledDigraph line_graph(const LabeledDigraph& g);

// Line graph of the dummy-augmented input with the dummy clutter removed:
// the 2n dummy-edge vertices collapse into a single fresh dummy vertex and
// edges between dummy-edge vertices are dropped. Every original edge e=(u,v)
// survives as a vertex (id e, labels of e) with one incoming edge from the
// dummy (id u, labels of u) and one outgoing edge to it (id v, labels of v);
// 2-walks between original edges survive unchanged. Rejects empty edge sets,
// graphs with a dummy vertex, and graphs with isolated vertices.
LabeledDigraph edge_to_vertex(const LabeledDigraph& g);

// Exact inverse of edge_to_vertex: rebuilds the original graph, ids and
// labels included, from a transform image. Rejects inputs without a dummy
// vertex and inputs whose 2-walk records are inconsistent (not an image).
LabeledDigraph inverse_edge_to_vertex(const LabeledDigraph& h);

// Computes every field of TransformStats twice, from the degree sequence and
// from materialized graphs, and throws GraphError if the routes disagree.
// The line graph of the augmented graph exists only as a cross-check and is
// skipped when its closed-form edge count exceeds materialize_edge_limit
// (negative = no limit); everything else is always materialized.
TransformStats transform_stats(const LabeledDigraph& g,
                               std::int64_t materialize_edge_limit = 2'000'000);

namespace detail {
// Core construction without the isolated-vertex/m=0/dummy preconditions;
// an empty edge set yields the single dummy vertex.
LabeledDigraph edge_to_vertex_core(const LabeledDigraph& g);
}  // namespace detail

}  // namespace gkd
