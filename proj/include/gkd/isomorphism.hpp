#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "gkd/graph.hpp"

namespace gkd {

// Hard size limit for the exact checker; beyond this the search space is not
// worth exploring exhaustively and callers get an error instead of a stall.
inline constexpr std::size_t kIsomorphismVertexLimit = 16;

// Vertex bijection g1 -> g2, sorted by the g1 vertex id.
using VertexMapping = std::vector<std::pair<VertexId, VertexId>>;

// Exact label- and direction-preserving isomorphism test via backtracking
// with label/degree pruning. Returns a witness mapping or nullopt. Vertex and
// edge ids play no role; only structure and label sets are compared.
// Throws GraphError when either graph exceeds kIsomorphismVertexLimit.
std::optional<VertexMapping> find_isomorphism(const LabeledDigraph& g1,
                                              const LabeledDigraph& g2);

// Checks that `mapping` is a complete isomorphism witness between g1 and g2:
// a bijection preserving vertex labels and, for every ordered vertex pair,
// edge presence and edge labels.
bool is_isomorphism_witness(const LabeledDigraph& g1, const LabeledDigraph& g2,
                            const VertexMapping& mapping);

}  // namespace gkd
