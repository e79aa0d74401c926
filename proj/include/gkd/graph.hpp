#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "gkd/labels.hpp"

namespace gkd {

using VertexId = std::int64_t;
using EdgeId = std::int64_t;

struct GraphError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct VertexRecord {
  VertexId id = 0;
  LabelSet labels;

  friend bool operator==(const VertexRecord&, const VertexRecord&) = default;
};

struct EdgeRecord {
  EdgeId id = 0;
  VertexId src = 0;
  VertexId dst = 0;
  LabelSet labels;

  friend bool operator==(const EdgeRecord&, const EdgeRecord&) = default;
};

struct DegreeProfile {
  std::int64_t indegree = 0;
  std::int64_t outdegree = 0;

  friend bool operator==(const DegreeProfile&, const DegreeProfile&) = default;
};

// Directed graph with label sets on vertices and edges. Instances are built
// through GraphBuilder and are immutable afterwards; a built graph never has
// self-loops, parallel (src,dst) pairs, dangling endpoints, duplicate vertex
// ids, or more than one vertex carrying the dummy-vertex label. Edge ids are
// NOT required to be unique: transform outputs use them as provenance marks
// and repeat them on purpose.
class LabeledDigraph {
 public:
  LabeledDigraph() = default;

  std::size_t vertex_count() const noexcept { return vertices_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  // Vertices sorted by id; edges sorted by (src, dst).
  std::span<const VertexRecord> vertices() const noexcept { return vertices_; }
  std::span<const EdgeRecord> edges() const noexcept { return edges_; }

  bool has_vertex(VertexId v) const { return index_.contains(v); }
  const VertexRecord& vertex(VertexId v) const;
  // Position of v inside vertices(); throws GraphError for unknown ids.
  std::size_t vertex_position(VertexId v) const;
  const EdgeRecord* find_edge(VertexId src, VertexId dst) const;

  DegreeProfile degrees(VertexId v) const;
  std::optional<VertexId> dummy_vertex() const noexcept { return dummy_vertex_; }

  // Indices into edges() of the edges leaving/entering v.
  std::span<const std::uint32_t> out_edge_indices(VertexId v) const;
  std::span<const std::uint32_t> in_edge_indices(VertexId v) const;

  friend bool operator==(const LabeledDigraph& a, const LabeledDigraph& b) {
    return a.vertices_ == b.vertices_ && a.edges_ == b.edges_;
  }

 private:
  friend class GraphBuilder;

  std::vector<VertexRecord> vertices_;
  std::vector<EdgeRecord> edges_;
  std::unordered_map<VertexId, std::uint32_t> index_;
  std::optional<VertexId> dummy_vertex_;

  // CSR adjacency over edge indices, grouped by source (out) and target (in).
  std::vector<std::uint32_t> out_offsets_;
  std::vector<std::uint32_t> out_edges_;
  std::vector<std::uint32_t> in_offsets_;
  std::vector<std::uint32_t> in_edges_;
};

// Stages vertex/edge records, reports invariant violations, and produces an
// immutable LabeledDigraph. build() throws GraphError listing every violation.
class GraphBuilder {
 public:
  GraphBuilder& add_vertex(VertexId id, LabelSet labels);
  GraphBuilder& add_edge(EdgeId id, VertexId src, VertexId dst, LabelSet labels);
  // Like add_edge, but if (src,dst) is already staged the labels are merged
  // into the existing record (first id wins). Used when ingesting multiedges.
  GraphBuilder& add_or_merge_edge(EdgeId id, VertexId src, VertexId dst, LabelSet labels);

  // Human-readable list of invariant violations; empty means build() succeeds.
  std::vector<std::string> validate() const;
  LabeledDigraph build() const;

 private:
  std::vector<VertexRecord> vertices_;
  std::vector<EdgeRecord> edges_;
  std::map<std::pair<VertexId, VertexId>, std::size_t> edge_slot_;  // (src,dst) -> index
};

struct DegreePartition {
  std::vector<VertexId> sources;   // indegree 0
  std::vector<VertexId> sinks;     // outdegree 0
  std::vector<VertexId> interior;  // indegree > 0 and outdegree > 0
};

// Splits the vertex set by degree signature. A vertex with indegree 0 AND
// outdegree 0 appears in both sources and sinks.
DegreePartition degree_partition(const LabeledDigraph& g);

// Relabels vertices through pi, which must be a bijection from the vertex id
// set onto itself. Edge ids and all label sets are carried over unchanged.
LabeledDigraph permute(const LabeledDigraph& g,
                       const std::unordered_map<VertexId, VertexId>& pi);

// True when the undirected view of g has a single connected component.
// The empty graph counts as connected.
bool weakly_connected(const LabeledDigraph& g);

}  // namespace gkd
