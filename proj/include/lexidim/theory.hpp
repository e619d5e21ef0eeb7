#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "lexidim/graph.hpp"
#include "lexidim/lexicographic.hpp"
#include "lexidim/solver.hpp"

namespace lexidim {

enum class FormulaKind { path, cycle };

/// Closed-form adim_k for paths (n >= 4, k in {2,3}) and cycles (n >= 5,
/// k in {2,3,4}). By duality the same value holds for the complements.
int formula_adim(FormulaKind kind, int n, int k);

struct FamilySpecEntry {
    FormulaKind kind;
    int order;
};

/// Closed-form dim_k(G o H) (or G o H-bar when complemented) for a family of
/// paths of order >= 4 and cycles of order >= 5, k in {2,3}, plus k = 4 for
/// all-cycle families. Every hypothesis violation is reported by name.
int formula_dim_lexi(const Graph& g, const std::vector<FamilySpecEntry>& fam, int k,
                     bool complemented);

enum class PropertyId { P1, P2, P3, P4 };
enum class PropertyOutcome { holds, fails, inconclusive };

const char* to_string(PropertyId id);
const char* to_string(PropertyOutcome outcome);

/// Result of a P1-P4 check. When the property holds, `witness` carries one
/// chosen k-adjacency basis per member of every relevant twin class. When it
/// fails, `counterexample` names a class, a member pair and inner vertices
/// violating the inequality under the best available bases.
struct PropertyReport {
    struct MemberChoice {
        int base_vertex;
        std::vector<int> basis;
        int profile;  // worst-case covered count over inner vertices
    };
    struct ClassWitness {
        int class_id;
        std::vector<MemberChoice> choices;
    };
    struct Counterexample {
        int class_id;
        int base_j;
        int base_l;
        int inner_x;
        int inner_y;
    };

    PropertyId property;
    PropertyOutcome outcome;
    std::vector<ClassWitness> witness;
    std::optional<Counterexample> counterexample;

    bool holds() const { return outcome == PropertyOutcome::holds; }
};

/// Decides P1/P3 over true-twin classes and P2/P4 over false-twin classes of
/// the base, searching over the k-adjacency bases of the class members.
/// A truncated basis enumeration can only produce holds or inconclusive.
PropertyReport check_property(const Graph& g, const GraphFamily& fam, int k, PropertyId which,
                              std::size_t cap = 10000);

struct ConditionFlag {
    bool holds;
    std::string reason;
};

/// Lemma-based sufficient conditions:
///   delta_true:  adim_k(H_i) - Delta(H_i) >= ceil(k/2) for all i  => P1, P4
///   delta_false: no isolated vertices and Delta(H_i) - 1 <= floor(k/2) => P2
///   diameter6:   every member connected with diameter >= 6         => P1, P4
struct SufficientConditions {
    ConditionFlag delta_true;
    ConditionFlag delta_false;
    ConditionFlag diameter6;
};

SufficientConditions sufficient_conditions(const Graph& g, const GraphFamily& fam, int k);

/// dim_2(G o H) = |V(G o H)| characterization: `predicted_full` evaluates the
/// twin-structure conditions on (G, H); `oracle_full` compares the solver's
/// dim_2 of the materialized product against the product order.
struct RemarkReport {
    bool predicted_full;
    bool oracle_full;
    int product_order;
    int oracle_dim2;
};

RemarkReport check_remark_dim2_full(const Graph& g, const GraphFamily& fam,
                                    int max_product_order = 24);

/// dim_k(K_1 + h) versus adim_k(h), with an exhaustive check that the apex
/// appears in no minimum k-metric basis of the join. Requires h connected
/// with diameter >= 6, or a cycle of order >= 7, or a path of order >= 6.
struct JoinLemmaReport {
    int k;
    int dim_join;
    int adim_h;
    bool apex_excluded;
};

JoinLemmaReport verify_join_lemma(const Graph& h, int k);

}  // namespace lexidim
