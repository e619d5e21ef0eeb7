#pragma once

#include <string>
#include <vector>

#include "lexidim/graph.hpp"

namespace lexidim {

enum class TwinKind { singleton, false_twin, true_twin };

const char* to_string(TwinKind kind);

struct TwinClass {
    std::vector<int> members;  // sorted
    TwinKind kind;
};

/// Partition of V(G) under the twin relation: u ~ v iff
/// N(u) \ {v} = N(v) \ {u}. Classes are ordered by smallest member.
struct TwinPartition {
    std::vector<TwinClass> classes;
    std::vector<int> class_of;  // vertex -> index into classes

    const TwinClass& class_containing(int v) const { return classes[class_of[v]]; }
};

/// Computes the twin partition by comparing adjacency rows, bucketing by a
/// row hash before exact comparison. A non-singleton class is true_twin when
/// its members are pairwise adjacent and false_twin when pairwise
/// non-adjacent; mixed classes cannot occur and are rejected.
TwinPartition twin_partition(const Graph& g);

struct TwinFreenessReport {
    bool twins_free;
    bool true_twins_free;
    bool false_twins_free;
};

TwinFreenessReport twin_freeness_report(const TwinPartition& p);

}  // namespace lexidim
