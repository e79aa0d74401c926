#include "gkd/graph.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace gkd {

const VertexRecord& LabeledDigraph::vertex(VertexId v) const {
  return vertices_[vertex_position(v)];
}

std::size_t LabeledDigraph::vertex_position(VertexId v) const {
  auto it = index_.find(v);
  if (it == index_.end())
    throw GraphError("unknown vertex id " + std::to_string(v));
  return it->second;
}

const EdgeRecord* LabeledDigraph::find_edge(VertexId src, VertexId dst) const {
  auto it = index_.find(src);
  if (it == index_.end()) return nullptr;
  std::uint32_t pos = it->second;
  for (std::uint32_t k = out_offsets_[pos]; k < out_offsets_[pos + 1]; ++k) {
    const EdgeRecord& e = edges_[out_edges_[k]];
    if (e.dst == dst) return &e;
  }
  return nullptr;
}

DegreeProfile LabeledDigraph::degrees(VertexId v) const {
  std::size_t pos = vertex_position(v);
  return DegreeProfile{
      static_cast<std::int64_t>(in_offsets_[pos + 1] - in_offsets_[pos]),
      static_cast<std::int64_t>(out_offsets_[pos + 1] - out_offsets_[pos])};
}

std::span<const std::uint32_t> LabeledDigraph::out_edge_indices(VertexId v) const {
  std::size_t pos = vertex_position(v);
  return {out_edges_.data() + out_offsets_[pos], out_offsets_[pos + 1] - out_offsets_[pos]};
}

std::span<const std::uint32_t> LabeledDigraph::in_edge_indices(VertexId v) const {
  std::size_t pos = vertex_position(v);
  return {in_edges_.data() + in_offsets_[pos], in_offsets_[pos + 1] - in_offsets_[pos]};
}

GraphBuilder& GraphBuilder::add_vertex(VertexId id, LabelSet labels) {
  vertices_.push_back(VertexRecord{id, std::move(labels)});
  return *this;
}

GraphBuilder& GraphBuilder::add_edge(EdgeId id, VertexId src, VertexId dst, LabelSet labels) {
  edge_slot_.emplace(std::make_pair(src, dst), edges_.size());
  edges_.push_back(EdgeRecord{id, src, dst, std::move(labels)});
  return *this;
}

GraphBuilder& GraphBuilder::add_or_merge_edge(EdgeId id, VertexId src, VertexId dst,
                                              LabelSet labels) {
  auto it = edge_slot_.find(std::make_pair(src, dst));
  if (it != edge_slot_.end() && edges_[it->second].src == src && edges_[it->second].dst == dst) {
    edges_[it->second].labels.merge(labels);
    return *this;
  }
  return add_edge(id, src, dst, std::move(labels));
}

std::vector<std::string> GraphBuilder::validate() const {
  std::vector<std::string> violations;

  std::unordered_map<VertexId, std::size_t> seen;
  std::vector<VertexId> dummies;
  for (const VertexRecord& v : vertices_) {
    auto [it, fresh] = seen.emplace(v.id, 1);
    if (!fresh && ++it->second == 2)
      violations.push_back("duplicate vertex id " + std::to_string(v.id));
    if (v.labels.contains(kDummyVertexLabel)) dummies.push_back(v.id);
  }
  if (dummies.size() > 1) {
    std::ostringstream msg;
    msg << "multiple dummy vertices (ids";
    for (VertexId id : dummies) msg << ' ' << id;
    msg << ')';
    violations.push_back(msg.str());
  }

  std::set<std::pair<VertexId, VertexId>> pairs;
  for (const EdgeRecord& e : edges_) {
    if (e.src == e.dst)
      violations.push_back("self-loop at vertex " + std::to_string(e.src));
    for (VertexId end : {e.src, e.dst}) {
      if (!seen.contains(end))
        violations.push_back("dangling endpoint " + std::to_string(end) + " on edge (" +
                             std::to_string(e.src) + "," + std::to_string(e.dst) + ")");
    }
    if (!pairs.insert(std::make_pair(e.src, e.dst)).second)
      violations.push_back("duplicate edge (" + std::to_string(e.src) + "," +
                           std::to_string(e.dst) + ")");
  }
  return violations;
}

LabeledDigraph GraphBuilder::build() const {
  std::vector<std::string> violations = validate();
  if (!violations.empty()) {
    std::string msg = "invalid graph:";
    for (const std::string& v : violations) msg += " [" + v + "]";
    throw GraphError(msg);
  }

  LabeledDigraph g;
  g.vertices_ = vertices_;
  std::sort(g.vertices_.begin(), g.vertices_.end(),
            [](const VertexRecord& a, const VertexRecord& b) { return a.id < b.id; });
  g.edges_ = edges_;
  std::sort(g.edges_.begin(), g.edges_.end(), [](const EdgeRecord& a, const EdgeRecord& b) {
    return std::make_pair(a.src, a.dst) < std::make_pair(b.src, b.dst);
  });

  const std::size_t n = g.vertices_.size();
  g.index_.reserve(n);
  for (std::size_t pos = 0; pos < n; ++pos) {
    g.index_.emplace(g.vertices_[pos].id, static_cast<std::uint32_t>(pos));
    if (g.vertices_[pos].labels.contains(kDummyVertexLabel))
      g.dummy_vertex_ = g.vertices_[pos].id;
  }

  // Out-CSR: edges are already grouped by source after the sort.
  std::vector<std::uint32_t> out_count(n, 0), in_count(n, 0);
  for (const EdgeRecord& e : g.edges_) {
    ++out_count[g.index_.at(e.src)];
    ++in_count[g.index_.at(e.dst)];
  }
  g.out_offsets_.assign(n + 1, 0);
  g.in_offsets_.assign(n + 1, 0);
  for (std::size_t pos = 0; pos < n; ++pos) {
    g.out_offsets_[pos + 1] = g.out_offsets_[pos] + out_count[pos];
    g.in_offsets_[pos + 1] = g.in_offsets_[pos] + in_count[pos];
  }
  g.out_edges_.resize(g.edges_.size());
  g.in_edges_.resize(g.edges_.size());
  std::vector<std::uint32_t> out_fill(g.out_offsets_.begin(), g.out_offsets_.end() - 1);
  std::vector<std::uint32_t> in_fill(g.in_offsets_.begin(), g.in_offsets_.end() - 1);
  for (std::uint32_t idx = 0; idx < g.edges_.size(); ++idx) {
    const EdgeRecord& e = g.edges_[idx];
    g.out_edges_[out_fill[g.index_.at(e.src)]++] = idx;
    g.in_edges_[in_fill[g.index_.at(e.dst)]++] = idx;
  }
  return g;
}

DegreePartition degree_partition(const LabeledDigraph& g) {
  DegreePartition p;
  for (const VertexRecord& v : g.vertices()) {
    DegreeProfile d = g.degrees(v.id);
    if (d.indegree == 0) p.sources.push_back(v.id);
    if (d.outdegree == 0) p.sinks.push_back(v.id);
    if (d.indegree > 0 && d.outdegree > 0) p.interior.push_back(v.id);
  }
  return p;
}

LabeledDigraph permute(const LabeledDigraph& g,
                       const std::unordered_map<VertexId, VertexId>& pi) {
  if (pi.size() != g.vertex_count())
    throw GraphError("permutation size does not match vertex count");
  std::set<VertexId> image;
  for (const VertexRecord& v : g.vertices()) {
    auto it = pi.find(v.id);
    if (it == pi.end())
      throw GraphError("permutation undefined for vertex " + std::to_string(v.id));
    if (!g.has_vertex(it->second))
      throw GraphError("permutation maps outside the vertex set: " +
                       std::to_string(v.id) + " -> " + std::to_string(it->second));
    if (!image.insert(it->second).second)
      throw GraphError("permutation is not injective at " + std::to_string(it->second));
  }

  GraphBuilder b;
  for (const VertexRecord& v : g.vertices()) b.add_vertex(pi.at(v.id), v.labels);
  for (const EdgeRecord& e : g.edges()) b.add_edge(e.id, pi.at(e.src), pi.at(e.dst), e.labels);
  return b.build();
}

bool weakly_connected(const LabeledDigraph& g) {
  const std::size_t n = g.vertex_count();
  if (n == 0) return true;

  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&parent](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const EdgeRecord& e : g.edges())
    parent[find(g.vertex_position(e.src))] = find(g.vertex_position(e.dst));

  std::size_t root = find(0);
  for (std::size_t pos = 1; pos < n; ++pos)
    if (find(pos) != root) return false;
  return true;
}

}  // namespace gkd
