#pragma once

#include <filesystem>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gkd/graph.hpp"
#include "gkd/kernels.hpp"

namespace gkd {

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Shared label given to every edge when a dataset ships no edge label file,
// and to every vertex when it ships no node label file.
inline constexpr const char* kDefaultEdgeLabelText = "BOND";
inline constexpr const char* kDefaultNodeLabelText = "NODE";

struct Dataset {
  std::string name;
  std::vector<LabeledDigraph> graphs;
  std::vector<int> class_labels;  // remapped to {-1,+1} when binary
  LabelDictionary labels;
};

// Loads the usual benchmark layout from dir: {name}_A.txt (1-indexed "u, v"
// rows), {name}_graph_indicator.txt, {name}_graph_labels.txt, and optional
// {name}_node_labels.txt / {name}_edge_labels.txt. Vertices are renumbered
// 0-based per graph; duplicate directed pairs merge their label sets; edge
// ids run 0..m-1 in (src,dst) order.
Dataset load_tudataset(const std::filesystem::path& dir, const std::string& name);

// Inverse of load_tudataset up to formatting: writes the same layout so that
// loading it back reproduces the dataset exactly.
void write_tudataset(const std::filesystem::path& dir, const Dataset& dataset);

// Expands undirected pairs to directed records: both orderings of every
// distinct pair, deduplicated and sorted.
std::vector<std::pair<VertexId, VertexId>> to_directed(
    std::span<const std::pair<VertexId, VertexId>> undirected);

// Plain text graph format, LF line endings:
//   g <vertex-count> <edge-count>
//   v <id> <label>[,<label>...]
//   e <id> <src> <dst> <label>[,<label>...]
// Vertices sorted by id, edges by (src,dst); labels written as dictionary
// text with the reserved dummy spellings for the dummy labels.
void write_graph(const std::filesystem::path& path, const LabeledDigraph& g,
                 const LabelDictionary& dict);
LabeledDigraph read_graph(const std::filesystem::path& path, LabelDictionary& dict);

// Binary Gram format: magic "GRAMMAT1", u32 size, u8 normalized flag,
// length-prefixed spec summary, then size*size little-endian doubles in
// row-major order. Exact round trip.
void write_gram(const std::filesystem::path& path, const GramMatrix& gram);
GramMatrix read_gram(const std::filesystem::path& path);

}  // namespace gkd
