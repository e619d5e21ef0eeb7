#pragma once

#include <boost/dynamic_bitset.hpp>
#include <cstdint>
#include <vector>

#include "lexidim/graph.hpp"

namespace lexidim {

/// Vertex sets are bitsets over V(G) so the solver can count intersections
/// cheaply.
using VertexSet = boost::dynamic_bitset<std::uint64_t>;

std::vector<int> to_vertex_list(const VertexSet& set);
VertexSet make_vertex_set(int order, const std::vector<int>& members);

/// D_G(x,y) = { z : d_G(x,z) != d_G(y,z) }. Requires x != y and g connected.
VertexSet distinctive_set(const Graph& g, const DistanceMatrix& m, int x, int y);

/// C_G(x,y) = (N(x) symdiff N(y)) union {x,y}. Requires x != y; g may be
/// disconnected.
VertexSet adjacency_distinctive_set(const Graph& g, int x, int y);

/// Distinctive data for one vertex pair, with the non-trivial variants
/// (sets minus {x,y}) derivable on demand.
struct PairProfile {
    int x;
    int y;
    VertexSet metric_distinctive;     // D_G(x,y)
    VertexSet adjacency_distinctive;  // C_G(x,y)

    VertexSet metric_nontrivial() const;
    VertexSet adjacency_nontrivial() const;
};

PairProfile pair_profile(const Graph& g, const DistanceMatrix& m, int x, int y);

/// Minimum of a per-pair set size over all pairs, with the lexicographically
/// first pair attaining it.
struct GlobalMin {
    int value;
    int x;
    int y;
};

/// D(G) = min |D_G(x,y)|: the largest k for which g is k-metric dimensional.
/// Requires g connected of order >= 2.
GlobalMin global_D(const Graph& g);

/// C(G) = min |C_G(x,y)|: the largest k for which g is k-adjacency
/// dimensional. Requires order >= 2.
GlobalMin global_C(const Graph& g);

}  // namespace lexidim
