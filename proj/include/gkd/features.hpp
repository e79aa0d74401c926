#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "gkd/graph.hpp"

namespace gkd {

// Maps structured byte-string keys to dense ids. Keys are compared exactly,
// so distinct structures can never collide. Every interner instance gets a
// process-unique space id; feature vectors remember it, which makes mixing
// vectors from different interners a detectable error.
class Interner {
 public:
  Interner();

  std::uint64_t intern(std::string_view key);
  std::uint64_t space() const noexcept { return space_; }
  std::size_t size() const noexcept { return table_.size(); }

 private:
  std::unordered_map<std::string, std::uint64_t> table_;
  std::uint64_t space_;
};

// Sparse count vector over interned feature ids, sorted by id with no
// zero-count entries.
struct FeatureVector {
  std::uint64_t space = 0;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> entries;

  std::uint64_t total() const;

  friend bool operator==(const FeatureVector&, const FeatureVector&) = default;
};

// Inner product of the counts. Throws GraphError when the vectors come from
// different interners.
double dot(const FeatureVector& a, const FeatureVector& b);

// Histogram intersection: sum of per-feature minima. Same interner rule.
double intersection(const FeatureVector& a, const FeatureVector& b);

// Concatenation of block vectors whose feature ids are disjoint.
FeatureVector merge_blocks(const std::vector<FeatureVector>& blocks);

// Color-refinement features, one block per iteration 0..iterations. The
// iteration-0 color is the vertex label set; each refinement hashes the
// previous color together with the sorted in- and out-neighborhood multisets
// (edge label set paired with neighbor color, kept in separate sections so
// direction matters). Block t counts colors at iteration t under feature ids
// disjoint across iterations.
std::vector<FeatureVector> wl_feature_blocks(const LabeledDigraph& g, int iterations,
                                             Interner& dict);

// Concatenation of wl_feature_blocks.
FeatureVector wl_features(const LabeledDigraph& g, int iterations, Interner& dict);

// Shortest-path features: one feature per ordered vertex pair (u,v), u != v,
// at finite directed BFS distance d, keyed by (labels(u), labels(v), d).
FeatureVector sp_features(const LabeledDigraph& g, Interner& dict);

// Induced 3-vertex graphlet counts on the simple undirected view, in four
// fixed bins: empty, one edge, path, triangle. Exact closed-form counting.
FeatureVector gr_features(const LabeledDigraph& g, Interner& dict);

}  // namespace gkd
