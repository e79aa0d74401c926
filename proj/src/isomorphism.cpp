#include "gkd/isomorphism.hpp"

#include <algorithm>
#include <cstdint>
#include <set>
#include <tuple>

namespace gkd {

namespace {

struct Candidates {
  // compatible[i] lists g2 positions whose (labels, indegree, outdegree)
  // signature matches g1 position i.
  std::vector<std::vector<std::uint16_t>> compatible;
};

// Edge label lookup by (src position, dst position); null when absent.
class EdgeIndex {
 public:
  explicit EdgeIndex(const LabeledDigraph& g) : g_(g), n_(g.vertex_count()) {
    grid_.resize(n_ * n_, -1);
    for (std::size_t idx = 0; idx < g.edge_count(); ++idx) {
      const EdgeRecord& e = g.edges()[idx];
      grid_[g.vertex_position(e.src) * n_ + g.vertex_position(e.dst)] =
          static_cast<std::int32_t>(idx);
    }
  }

  const LabelSet* labels(std::size_t src_pos, std::size_t dst_pos) const {
    std::int32_t idx = grid_[src_pos * n_ + dst_pos];
    return idx < 0 ? nullptr : &g_.edges()[idx].labels;
  }

 private:
  const LabeledDigraph& g_;
  std::size_t n_;
  std::vector<std::int32_t> grid_;
};

bool same_edge(const LabelSet* a, const LabelSet* b) {
  if ((a == nullptr) != (b == nullptr)) return false;
  return a == nullptr || *a == *b;
}

struct Searcher {
  const LabeledDigraph& g1;
  const LabeledDigraph& g2;
  EdgeIndex e1;
  EdgeIndex e2;
  std::vector<std::size_t> order;       // g1 positions, most constrained first
  std::vector<std::int32_t> assigned;   // g1 pos -> g2 pos or -1
  std::vector<bool> used;               // g2 pos taken
  const Candidates& cand;

  bool extend(std::size_t depth) {
    if (depth == order.size()) return true;
    std::size_t i = order[depth];
    for (std::uint16_t j : cand.compatible[i]) {
      if (used[j]) continue;
      bool ok = true;
      for (std::size_t d = 0; d < depth && ok; ++d) {
        std::size_t u = order[d];
        std::size_t fu = static_cast<std::size_t>(assigned[u]);
        ok = same_edge(e1.labels(u, i), e2.labels(fu, j)) &&
             same_edge(e1.labels(i, u), e2.labels(j, fu));
      }
      if (!ok) continue;
      assigned[i] = static_cast<std::int32_t>(j);
      used[j] = true;
      if (extend(depth + 1)) return true;
      used[j] = false;
      assigned[i] = -1;
    }
    return false;
  }
};

}  // namespace

std::optional<VertexMapping> find_isomorphism(const LabeledDigraph& g1,
                                              const LabeledDigraph& g2) {
  if (g1.vertex_count() > kIsomorphismVertexLimit || g2.vertex_count() > kIsomorphismVertexLimit)
    throw GraphError("isomorphism check supports at most " +
                     std::to_string(kIsomorphismVertexLimit) + " vertices");

  const std::size_t n = g1.vertex_count();
  if (n != g2.vertex_count() || g1.edge_count() != g2.edge_count()) return std::nullopt;
  if (n == 0) return VertexMapping{};

  using Signature = std::tuple<LabelSet, std::int64_t, std::int64_t>;
  auto signature = [](const LabeledDigraph& g, std::size_t pos) {
    const VertexRecord& v = g.vertices()[pos];
    DegreeProfile d = g.degrees(v.id);
    return Signature{v.labels, d.indegree, d.outdegree};
  };

  std::vector<Signature> sig1(n), sig2(n);
  for (std::size_t pos = 0; pos < n; ++pos) {
    sig1[pos] = signature(g1, pos);
    sig2[pos] = signature(g2, pos);
  }
  {
    auto m1 = sig1, m2 = sig2;
    std::sort(m1.begin(), m1.end());
    std::sort(m2.begin(), m2.end());
    if (m1 != m2) return std::nullopt;
  }

  Candidates cand;
  cand.compatible.resize(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (sig1[i] == sig2[j]) cand.compatible[i].push_back(static_cast<std::uint16_t>(j));

  Searcher s{g1, g2, EdgeIndex(g1), EdgeIndex(g2), {}, {}, {}, cand};
  s.order.resize(n);
  for (std::size_t i = 0; i < n; ++i) s.order[i] = i;
  std::sort(s.order.begin(), s.order.end(), [&](std::size_t a, std::size_t b) {
    return cand.compatible[a].size() < cand.compatible[b].size();
  });
  s.assigned.assign(n, -1);
  s.used.assign(n, false);

  if (!s.extend(0)) return std::nullopt;

  VertexMapping mapping;
  mapping.reserve(n);
  for (std::size_t pos = 0; pos < n; ++pos)
    mapping.emplace_back(g1.vertices()[pos].id,
                         g2.vertices()[static_cast<std::size_t>(s.assigned[pos])].id);
  return mapping;
}

bool is_isomorphism_witness(const LabeledDigraph& g1, const LabeledDigraph& g2,
                            const VertexMapping& mapping) {
  if (g1.vertex_count() != g2.vertex_count() || g1.edge_count() != g2.edge_count())
    return false;
  if (mapping.size() != g1.vertex_count()) return false;

  std::unordered_map<VertexId, VertexId> f;
  std::set<VertexId> image;
  for (auto [a, b] : mapping) {
    if (!g1.has_vertex(a) || !g2.has_vertex(b)) return false;
    if (!f.emplace(a, b).second) return false;
    if (!image.insert(b).second) return false;
    if (!(g1.vertex(a).labels == g2.vertex(b).labels)) return false;
  }
  if (f.size() != g1.vertex_count()) return false;

  for (const VertexRecord& u : g1.vertices()) {
    for (const VertexRecord& v : g1.vertices()) {
      if (u.id == v.id) continue;
      const EdgeRecord* a = g1.find_edge(u.id, v.id);
      const EdgeRecord* b = g2.find_edge(f.at(u.id), f.at(v.id));
      if ((a == nullptr) != (b == nullptr)) return false;
      if (a != nullptr && !(a->labels == b->labels)) return false;
    }
  }
  return true;
}

}  // namespace gkd
