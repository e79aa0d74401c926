#include "gkd/transform.hpp"

#include <algorithm>
#include <map>
#include <utility>

namespace gkd {

namespace {

VertexId next_vertex_id(const LabeledDigraph& g) {
  VertexId next = 0;
  for (const VertexRecord& v : g.vertices()) next = std::max(next, v.id + 1);
  return next;
}

EdgeId next_edge_id(const LabeledDigraph& g) {
  EdgeId next = 0;
  for (const EdgeRecord& e : g.edges()) next = std::max(next, e.id + 1);
  return next;
}

}  // namespace

LabeledDigraph augment_dummy(const LabeledDigraph& g) {
  if (g.dummy_vertex())
    throw GraphError("graph already contains a dummy vertex (id " +
                     std::to_string(*g.dummy_vertex()) + ")");

  const VertexId phi = next_vertex_id(g);
  EdgeId next_id = next_edge_id(g);

  GraphBuilder b;
  for (const VertexRecord& v : g.vertices()) b.add_vertex(v.id, v.labels);
  b.add_vertex(phi, LabelSet::single(kDummyVertexLabel));
  for (const EdgeRecord& e : g.edges()) b.add_edge(e.id, e.src, e.dst, e.labels);
  for (const VertexRecord& v : g.vertices()) {
    b.add_edge(next_id++, phi, v.id, LabelSet::single(kDummyEdgeLabel));
    b.add_edge(next_id++, v.id, phi, LabelSet::single(kDummyEdgeLabel));
  }
  return b.build();
}

LabeledDigraph line_graph(const LabeledDigraph& g) {
  GraphBuilder b;
  for (const EdgeRecord& e : g.edges()) b.add_vertex(e.id, e.labels);
  for (const VertexRecord& v : g.vertices()) {
    for (std::uint32_t ii : g.in_edge_indices(v.id)) {
      for (std::uint32_t oi : g.out_edge_indices(v.id)) {
        b.add_edge(v.id, g.edges()[ii].id, g.edges()[oi].id, v.labels);
      }
    }
  }
  return b.build();
}

namespace detail {

LabeledDigraph edge_to_vertex_core(const LabeledDigraph& g) {
  const VertexId dummy = static_cast<VertexId>(next_edge_id(g));

  GraphBuilder b;
  b.add_vertex(dummy, LabelSet::single(kDummyVertexLabel));
  for (const EdgeRecord& e : g.edges()) b.add_vertex(e.id, e.labels);

  // 2-walks between original edges, exactly as in the plain line graph.
  for (const VertexRecord& v : g.vertices()) {
    for (std::uint32_t ii : g.in_edge_indices(v.id)) {
      for (std::uint32_t oi : g.out_edge_indices(v.id)) {
        b.add_edge(v.id, g.edges()[ii].id, g.edges()[oi].id, v.labels);
      }
    }
  }
  // One edge from the dummy and one to it per original edge; these stand in
  // for the 2-walks that used to pass through the per-vertex dummy edges.
  for (const EdgeRecord& e : g.edges()) {
    b.add_edge(e.src, dummy, e.id, g.vertex(e.src).labels);
    b.add_edge(e.dst, e.id, dummy, g.vertex(e.dst).labels);
  }
  return b.build();
}

}  // namespace detail

LabeledDigraph edge_to_vertex(const LabeledDigraph& g) {
  if (g.dummy_vertex())
    throw GraphError("graph already contains a dummy vertex (id " +
                     std::to_string(*g.dummy_vertex()) + ")");
  if (g.edge_count() == 0)
    throw GraphError("edge-to-vertex transform needs at least one edge");
  for (const VertexRecord& v : g.vertices()) {
    DegreeProfile d = g.degrees(v.id);
    if (d.indegree == 0 && d.outdegree == 0)
      throw GraphError("isolated vertex " + std::to_string(v.id) +
                       " cannot be represented by the transform");
  }
  return detail::edge_to_vertex_core(g);
}

LabeledDigraph inverse_edge_to_vertex(const LabeledDigraph& h) {
  if (!h.dummy_vertex()) throw GraphError("input has no dummy vertex");
  const VertexId dummy = *h.dummy_vertex();

  // In a genuine image every vertex lies on a 2-walk in both directions.
  for (const VertexRecord& w : h.vertices()) {
    DegreeProfile d = h.degrees(w.id);
    if (d.indegree == 0 || d.outdegree == 0)
      throw GraphError("not a transform image: vertex " + std::to_string(w.id) +
                       " has a zero degree");
  }

  // Every edge id is an original vertex id and every edge label set is that
  // vertex's labels. Collect them, insisting on consistency.
  std::map<VertexId, LabelSet> vertices;
  for (const EdgeRecord& e : h.edges()) {
    auto [it, fresh] = vertices.emplace(e.id, e.labels);
    if (!fresh && !(it->second == e.labels))
      throw GraphError("inconsistent labels for repeated vertex id " + std::to_string(e.id));
  }

  // Each 2-walk through a non-dummy vertex w recovers the original edge that
  // w stands for: endpoints are the walk's edge ids, the id and labels are
  // w's. Walks through the dummy recover only dummy edges and are dropped.
  std::map<std::pair<VertexId, VertexId>, std::pair<EdgeId, LabelSet>> edges;
  for (const VertexRecord& w : h.vertices()) {
    if (w.id == dummy) continue;
    for (std::uint32_t ii : h.in_edge_indices(w.id)) {
      for (std::uint32_t oi : h.out_edge_indices(w.id)) {
        const EdgeRecord& a = h.edges()[ii];
        const EdgeRecord& b = h.edges()[oi];
        if (a.id == b.id)
          throw GraphError("not a transform image: 2-walk through vertex " +
                           std::to_string(w.id) + " collapses to a self-loop");
        auto key = std::make_pair(a.id, b.id);
        auto value = std::make_pair(w.id, w.labels);
        auto [it, fresh] = edges.emplace(key, value);
        if (!fresh && it->second != value)
          throw GraphError("inconsistent records for recovered edge (" +
                           std::to_string(a.id) + "," + std::to_string(b.id) + ")");
      }
    }
  }

  GraphBuilder b;
  for (const auto& [id, labels] : vertices) b.add_vertex(id, labels);
  for (const auto& [key, value] : edges)
    b.add_edge(value.first, key.first, key.second, value.second);
  return b.build();
}

TransformStats transform_stats(const LabeledDigraph& g, std::int64_t materialize_edge_limit) {
  const std::int64_t n = static_cast<std::int64_t>(g.vertex_count());
  const std::int64_t m = static_cast<std::int64_t>(g.edge_count());

  TransformStats s;
  s.vertices = n;
  s.edges = m;
  s.augmented_vertices = n + 1;
  s.augmented_edges = m + 2 * n;
  s.augmented_line_vertices = m + 2 * n;
  s.augmented_line_edges = n * n;
  s.transformed_vertices = m + 1;
  s.transformed_edges = 0;
  for (const VertexRecord& v : g.vertices()) {
    DegreeProfile d = g.degrees(v.id);
    s.augmented_line_edges += (d.indegree + 1) * (d.outdegree + 1);
    s.transformed_edges += d.indegree * d.outdegree + d.indegree + d.outdegree;
  }

  auto check = [](const char* what, std::int64_t closed, std::int64_t got) {
    if (closed != got)
      throw GraphError(std::string("size cross-check failed for ") + what + ": closed form " +
                       std::to_string(closed) + ", materialized " + std::to_string(got));
  };

  if (!g.dummy_vertex()) {
    LabeledDigraph augmented = augment_dummy(g);
    check("augmented vertices", s.augmented_vertices,
          static_cast<std::int64_t>(augmented.vertex_count()));
    check("augmented edges", s.augmented_edges,
          static_cast<std::int64_t>(augmented.edge_count()));

    if (materialize_edge_limit < 0 || s.augmented_line_edges <= materialize_edge_limit) {
      LabeledDigraph line = line_graph(augmented);
      check("augmented line vertices", s.augmented_line_vertices,
            static_cast<std::int64_t>(line.vertex_count()));
      check("augmented line edges", s.augmented_line_edges,
            static_cast<std::int64_t>(line.edge_count()));
    }

    LabeledDigraph transformed = detail::edge_to_vertex_core(g);
    check("transformed vertices", s.transformed_vertices,
          static_cast<std::int64_t>(transformed.vertex_count()));
    check("transformed edges", s.transformed_edges,
          static_cast<std::int64_t>(transformed.edge_count()));
  }
  return s;
}

}  // namespace gkd
