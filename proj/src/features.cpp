#include "gkd/features.hpp"

#include <algorithm>
#include <atomic>
#include <queue>

namespace gkd {

namespace {

std::atomic<std::uint64_t> next_space{1};

void append_u64(std::string& s, std::uint64_t x) {
  for (int i = 0; i < 8; ++i) {
    s.push_back(static_cast<char>(x & 0xff));
    x >>= 8;
  }
}

std::string labelset_key(char tag, const LabelSet& ls) {
  std::string key;
  key.push_back(tag);
  append_u64(key, ls.size());
  for (LabelId id : ls.ids()) append_u64(key, id);
  return key;
}

std::uint64_t feature_id(Interner& dict, int iteration, std::uint64_t color) {
  std::string key;
  key.push_back('F');
  append_u64(key, static_cast<std::uint64_t>(iteration));
  append_u64(key, color);
  return dict.intern(key);
}

FeatureVector from_counts(std::uint64_t space,
                          std::vector<std::pair<std::uint64_t, std::uint64_t>> counts) {
  std::sort(counts.begin(), counts.end());
  FeatureVector out;
  out.space = space;
  for (auto& [id, c] : counts) {
    if (c == 0) continue;
    if (!out.entries.empty() && out.entries.back().first == id)
      out.entries.back().second += c;
    else
      out.entries.emplace_back(id, c);
  }
  return out;
}

}  // namespace

Interner::Interner() : space_(next_space.fetch_add(1)) {}

std::uint64_t Interner::intern(std::string_view key) {
  auto it = table_.find(std::string(key));
  if (it != table_.end()) return it->second;
  std::uint64_t id = table_.size();
  table_.emplace(std::string(key), id);
  return id;
}

std::uint64_t FeatureVector::total() const {
  std::uint64_t sum = 0;
  for (const auto& [id, c] : entries) sum += c;
  return sum;
}

namespace {

void require_same_space(const FeatureVector& a, const FeatureVector& b) {
  if (a.space != b.space)
    throw GraphError("feature vectors come from different dictionaries");
}

}  // namespace

double dot(const FeatureVector& a, const FeatureVector& b) {
  require_same_space(a, b);
  double sum = 0.0;
  auto ia = a.entries.begin();
  auto ib = b.entries.begin();
  while (ia != a.entries.end() && ib != b.entries.end()) {
    if (ia->first < ib->first) {
      ++ia;
    } else if (ib->first < ia->first) {
      ++ib;
    } else {
      sum += static_cast<double>(ia->second) * static_cast<double>(ib->second);
      ++ia;
      ++ib;
    }
  }
  return sum;
}

double intersection(const FeatureVector& a, const FeatureVector& b) {
  require_same_space(a, b);
  double sum = 0.0;
  auto ia = a.entries.begin();
  auto ib = b.entries.begin();
  while (ia != a.entries.end() && ib != b.entries.end()) {
    if (ia->first < ib->first) {
      ++ia;
    } else if (ib->first < ia->first) {
      ++ib;
    } else {
      sum += static_cast<double>(std::min(ia->second, ib->second));
      ++ia;
      ++ib;
    }
  }
  return sum;
}

FeatureVector merge_blocks(const std::vector<FeatureVector>& blocks) {
  FeatureVector out;
  for (const FeatureVector& b : blocks) {
    if (out.entries.empty()) out.space = b.space;
    require_same_space(out, b);
    out.entries.insert(out.entries.end(), b.entries.begin(), b.entries.end());
  }
  std::sort(out.entries.begin(), out.entries.end());
  return out;
}

std::vector<FeatureVector> wl_feature_blocks(const LabeledDigraph& g, int iterations,
                                             Interner& dict) {
  if (iterations < 0) throw GraphError("negative refinement iteration count");
  const std::size_t n = g.vertex_count();
  const std::size_t m = g.edge_count();

  // Per-edge data resolved once: interned label-set key plus endpoint
  // positions, so the refinement loop never touches the id index.
  std::vector<std::uint64_t> edge_key(m);
  std::vector<std::uint32_t> src_pos(m), dst_pos(m);
  for (std::size_t i = 0; i < m; ++i) {
    const EdgeRecord& e = g.edges()[i];
    edge_key[i] = dict.intern(labelset_key('E', e.labels));
    src_pos[i] = static_cast<std::uint32_t>(g.vertex_position(e.src));
    dst_pos[i] = static_cast<std::uint32_t>(g.vertex_position(e.dst));
  }

  std::vector<std::uint64_t> color(n);
  for (std::size_t pos = 0; pos < n; ++pos)
    color[pos] = dict.intern(labelset_key('L', g.vertices()[pos].labels));

  std::vector<FeatureVector> blocks;
  blocks.reserve(static_cast<std::size_t>(iterations) + 1);

  std::vector<std::pair<std::uint64_t, std::uint64_t>> in_list, out_list, counts;
  std::string key;
  for (int t = 0;; ++t) {
    counts.clear();
    {
      std::unordered_map<std::uint64_t, std::uint64_t> hist;
      for (std::uint64_t c : color) ++hist[c];
      for (const auto& [c, cnt] : hist) counts.emplace_back(feature_id(dict, t, c), cnt);
    }
    blocks.push_back(from_counts(dict.space(), counts));
    if (t == iterations) break;

    std::vector<std::uint64_t> next(n);
    for (std::size_t pos = 0; pos < n; ++pos) {
      VertexId v = g.vertices()[pos].id;
      in_list.clear();
      out_list.clear();
      for (std::uint32_t ei : g.in_edge_indices(v))
        in_list.emplace_back(edge_key[ei], color[src_pos[ei]]);
      for (std::uint32_t ei : g.out_edge_indices(v))
        out_list.emplace_back(edge_key[ei], color[dst_pos[ei]]);
      std::sort(in_list.begin(), in_list.end());
      std::sort(out_list.begin(), out_list.end());

      key.clear();
      key.push_back('R');
      append_u64(key, color[pos]);
      append_u64(key, in_list.size());
      for (const auto& [ek, c] : in_list) {
        append_u64(key, ek);
        append_u64(key, c);
      }
      append_u64(key, out_list.size());
      for (const auto& [ek, c] : out_list) {
        append_u64(key, ek);
        append_u64(key, c);
      }
      next[pos] = dict.intern(key);
    }
    color = std::move(next);
  }
  return blocks;
}

FeatureVector wl_features(const LabeledDigraph& g, int iterations, Interner& dict) {
  return merge_blocks(wl_feature_blocks(g, iterations, dict));
}

FeatureVector sp_features(const LabeledDigraph& g, Interner& dict) {
  const std::size_t n = g.vertex_count();

  std::vector<std::uint64_t> vertex_key(n);
  for (std::size_t pos = 0; pos < n; ++pos)
    vertex_key[pos] = dict.intern(labelset_key('L', g.vertices()[pos].labels));

  // Out-neighbor positions for the BFS sweeps.
  std::vector<std::vector<std::uint32_t>> succ(n);
  for (const EdgeRecord& e : g.edges())
    succ[g.vertex_position(e.src)].push_back(
        static_cast<std::uint32_t>(g.vertex_position(e.dst)));

  std::unordered_map<std::uint64_t, std::uint64_t> hist;
  std::vector<std::int32_t> dist(n);
  std::vector<std::uint32_t> frontier;
  std::string key;
  for (std::size_t u = 0; u < n; ++u) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[u] = 0;
    frontier.assign(1, static_cast<std::uint32_t>(u));
    std::size_t head = 0;
    while (head < frontier.size()) {
      std::uint32_t x = frontier[head++];
      for (std::uint32_t y : succ[x]) {
        if (dist[y] >= 0) continue;
        dist[y] = dist[x] + 1;
        frontier.push_back(y);
      }
    }
    for (std::size_t v = 0; v < n; ++v) {
      if (v == u || dist[v] < 0) continue;
      key.clear();
      key.push_back('P');
      append_u64(key, vertex_key[u]);
      append_u64(key, vertex_key[v]);
      append_u64(key, static_cast<std::uint64_t>(dist[v]));
      ++hist[dict.intern(key)];
    }
  }

  std::vector<std::pair<std::uint64_t, std::uint64_t>> counts(hist.begin(), hist.end());
  return from_counts(dict.space(), counts);
}

FeatureVector gr_features(const LabeledDigraph& g, Interner& dict) {
  const std::int64_t n = static_cast<std::int64_t>(g.vertex_count());

  // Simple undirected view.
  std::vector<std::vector<std::uint32_t>> adj(g.vertex_count());
  std::int64_t undirected_edges = 0;
  for (const EdgeRecord& e : g.edges()) {
    std::uint32_t a = static_cast<std::uint32_t>(g.vertex_position(e.src));
    std::uint32_t b = static_cast<std::uint32_t>(g.vertex_position(e.dst));
    if (a > b) std::swap(a, b);
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  for (auto& list : adj) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
  }

  std::int64_t wedge_sum = 0;  // paths of length 2 counted at their center
  for (const auto& list : adj) {
    std::int64_t d = static_cast<std::int64_t>(list.size());
    wedge_sum += d * (d - 1) / 2;
  }

  std::int64_t triangle_ends = 0;
  for (std::size_t a = 0; a < adj.size(); ++a) {
    undirected_edges += static_cast<std::int64_t>(adj[a].size());
    for (std::uint32_t b : adj[a]) {
      if (b <= a) continue;
      // common neighbors of a sorted pair
      auto ia = adj[a].begin();
      auto ib = adj[b].begin();
      while (ia != adj[a].end() && ib != adj[b].end()) {
        if (*ia < *ib)
          ++ia;
        else if (*ib < *ia)
          ++ib;
        else {
          ++triangle_ends;
          ++ia;
          ++ib;
        }
      }
    }
  }
  undirected_edges /= 2;

  const std::int64_t triangles = triangle_ends / 3;
  const std::int64_t paths = wedge_sum - 3 * triangles;
  const std::int64_t singles = undirected_edges * (n - 2) - 2 * paths - 3 * triangles;
  const std::int64_t triples = n * (n - 1) * (n - 2) / 6;
  const std::int64_t empties = triples - singles - paths - triangles;

  const std::int64_t values[4] = {empties, singles, paths, triangles};
  std::vector<std::pair<std::uint64_t, std::uint64_t>> counts;
  for (int bin = 0; bin < 4; ++bin) {
    std::string key = "G";
    key.push_back(static_cast<char>('0' + bin));
    std::uint64_t id = dict.intern(key);
    if (values[bin] > 0) counts.emplace_back(id, static_cast<std::uint64_t>(values[bin]));
  }
  return from_counts(dict.space(), counts);
}

}  // namespace gkd
