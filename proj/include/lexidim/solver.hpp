#pragma once

#include <cstddef>
#include <vector>

#include "lexidim/graph.hpp"
#include "lexidim/profiles.hpp"

namespace lexidim {

enum class Mode { metric, adjacency };

const char* to_string(Mode mode);

/// One vertex pair with its distinctive set. A candidate generator S is
/// feasible iff |S intersect set| >= k for every constraint.
struct Constraint {
    int x;
    int y;
    VertexSet set;
};

struct MulticoverInstance {
    int universe;
    int k;
    Mode mode;
    std::vector<Constraint> constraints;
};

/// One constraint per unordered pair of g: D_G(x,y) in metric mode and
/// C_G(x,y) in adjacency mode. Validates k against D(G) / C(G) and reports
/// the valid range on violation.
MulticoverInstance build_multicover_instance(const Graph& g, int k, Mode mode);

struct DimensionResult {
    enum class Method { oracle, formula };

    int value;
    std::vector<int> witness;  // sorted; lexicographically smallest optimum
    Method method;
    int k;
    Mode mode;
};

/// Exact minimum multicover by branch and bound: branch on the most
/// deficient constraint, bound by the largest remaining deficiency, seed
/// with a greedy solution. The returned witness is re-verified against the
/// constraints before returning.
DimensionResult exact_min_multicover(const MulticoverInstance& inst);

/// dim_k(G): minimum k-metric generator size.
DimensionResult dim_k(const Graph& g, int k);

/// adim_k(G): minimum k-adjacency generator size.
DimensionResult adim_k(const Graph& g, int k);

/// All minimum-size solutions of an instance, in lexicographic order,
/// truncated at cap.
struct GeneratorEnumeration {
    int size;
    std::vector<std::vector<int>> sets;
    bool truncated;
};

GeneratorEnumeration enumerate_minimum_generators(const MulticoverInstance& inst,
                                                  std::size_t cap);

/// All k-adjacency bases of g (subsets of size adim_k(g) that are
/// k-adjacency generators), in lexicographic order, truncated at cap.
struct BasisEnumeration {
    int basis_size;
    std::vector<std::vector<int>> bases;
    bool truncated;
};

BasisEnumeration enumerate_k_adjacency_bases(const Graph& g, int k, std::size_t cap = 10000);

}  // namespace lexidim
