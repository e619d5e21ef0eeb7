#include "lexidim/theory.hpp"

#include <algorithm>
#include <limits>

#include "lexidim/error.hpp"
#include "lexidim/twins.hpp"

namespace lexidim {

int formula_adim(FormulaKind kind, int n, int k) {
    if (kind == FormulaKind::path) {
        if (n < 4) {
            throw Error("hypothesis", "path formula requires n >= 4");
        }
        if (k == 2) {
            return (n + 2) / 2;  // ceil((n+1)/2)
        }
        if (k == 3) {
            return n - (n - 4) / 5;
        }
        throw Error("hypothesis", "path formula covers k in {2,3}");
    }
    if (n < 5) {
        throw Error("hypothesis", "cycle formula requires n >= 5");
    }
    switch (k) {
        case 2: return (n + 1) / 2;  // ceil(n/2)
        case 3: return n - n / 5;
        case 4: return n;
        default: throw Error("hypothesis", "cycle formula covers k in {2,3,4}");
    }
}

int formula_dim_lexi(const Graph& g, const std::vector<FamilySpecEntry>& fam, int k,
                     bool complemented) {
    if (g.order() < 2 || !connectivity_report(g).connected) {
        throw Error("hypothesis", "base must be connected of order >= 2");
    }
    if (static_cast<int>(fam.size()) != g.order()) {
        throw Error("hypothesis", "family length must equal the base order");
    }
    bool all_cycles = true;
    for (const FamilySpecEntry& entry : fam) {
        if (entry.kind == FormulaKind::path) {
            all_cycles = false;
            if (entry.order < 4) {
                throw Error("hypothesis", "path members need order >= 4");
            }
        } else if (entry.order < 5) {
            throw Error("hypothesis", "cycle members need order >= 5");
        }
    }
    if (k != 2 && k != 3 && k != 4) {
        throw Error("hypothesis", "closed formulae cover k in {2,3,4}");
    }
    if (k == 4 && !all_cycles) {
        throw Error("hypothesis", "k=4 requires an all-cycle family");
    }
    if (complemented && k != 4 && !twin_freeness_report(twin_partition(g)).true_twins_free) {
        throw Error("hypothesis",
                    "complemented family with k in {2,3} requires a true-twins-free base");
    }

    std::vector<Graph> members;
    members.reserve(fam.size());
    for (const FamilySpecEntry& entry : fam) {
        members.push_back(entry.kind == FormulaKind::path ? path_graph(entry.order)
                                                          : cycle_graph(entry.order));
    }
    GraphFamily family{std::move(members)};
    if (complemented) {
        family = complement(family);
    }
    int dimensional = dimensional_k(g, family).k;
    if (k > dimensional) {
        throw Error("k_range", "k=" + std::to_string(k) + " exceeds the dimensional bound " +
                                   std::to_string(dimensional) + " of the product");
    }

    int total = 0;
    for (const FamilySpecEntry& entry : fam) {
        total += (k == 4) ? entry.order : formula_adim(entry.kind, entry.order, k);
    }
    return total;
}

const char* to_string(PropertyId id) {
    switch (id) {
        case PropertyId::P1: return "P1";
        case PropertyId::P2: return "P2";
        case PropertyId::P3: return "P3";
        case PropertyId::P4: return "P4";
    }
    return "?";
}

const char* to_string(PropertyOutcome outcome) {
    switch (outcome) {
        case PropertyOutcome::holds: return "holds";
        case PropertyOutcome::fails: return "fails";
        case PropertyOutcome::inconclusive: return "inconclusive";
    }
    return "?";
}

namespace {

// For one inner vertex x the properties count basis members in a zone:
//   P1, P4: V(H) - N(x), the non-neighborhood (x included)
//   P2, P3: N[x], the closed neighborhood
// Complementing H swaps the two zones (V - N_complement(x) = N[x]), which is
// what makes P1/P3 and P2/P4 exact duals under member complementation.
VertexSet property_zone(PropertyId which, const Graph& h, int x) {
    VertexSet zone(static_cast<std::size_t>(h.order()));
    switch (which) {
        case PropertyId::P1:
        case PropertyId::P4:
            zone.set();
            for (int w : h.neighbors(x)) {
                zone.reset(static_cast<std::size_t>(w));
            }
            break;
        case PropertyId::P2:
        case PropertyId::P3:
            for (int w : h.neighbors(x)) {
                zone.set(static_cast<std::size_t>(w));
            }
            zone.set(static_cast<std::size_t>(x));
            break;
    }
    return zone;
}

struct BasisProfile {
    std::vector<int> basis;
    int profile;   // min over inner vertices of |basis ∩ zone(x)|
    int worst_x;   // inner vertex attaining the minimum
};

// Best (maximum) worst-case profile over all k-adjacency bases of h.
// The cross-pair inequality sums the two members' profiles, so maximizing
// each member independently is exact.
struct MemberAnalysis {
    BasisProfile best;
    bool truncated;
};

MemberAnalysis analyze_member(const Graph& h, int k, PropertyId which, std::size_t cap) {
    BasisEnumeration bases = enumerate_k_adjacency_bases(h, k, cap);
    std::vector<VertexSet> zones;
    zones.reserve(static_cast<std::size_t>(h.order()));
    for (int x = 0; x < h.order(); ++x) {
        zones.push_back(property_zone(which, h, x));
    }
    MemberAnalysis out{{{}, -1, -1}, bases.truncated};
    for (const std::vector<int>& basis : bases.bases) {
        VertexSet set = make_vertex_set(h.order(), basis);
        int profile = h.order() + 1;
        int worst_x = -1;
        for (int x = 0; x < h.order(); ++x) {
            int covered = static_cast<int>((set & zones[static_cast<std::size_t>(x)]).count());
            if (covered < profile) {
                profile = covered;
                worst_x = x;
            }
        }
        if (profile > out.best.profile) {
            out.best = BasisProfile{basis, profile, worst_x};
        }
    }
    return out;
}

}  // namespace

PropertyReport check_property(const Graph& g, const GraphFamily& fam, int k, PropertyId which,
                              std::size_t cap) {
    DimensionalK bound = dimensional_k(g, fam);
    if (k < 1 || k > bound.k) {
        throw Error("k_range", "k=" + std::to_string(k) + " outside valid range [1, " +
                                   std::to_string(bound.k) + "] for this product");
    }
    TwinKind relevant = (which == PropertyId::P1 || which == PropertyId::P3)
                            ? TwinKind::true_twin
                            : TwinKind::false_twin;
    TwinPartition partition = twin_partition(g);

    PropertyReport report{which, PropertyOutcome::holds, {}, std::nullopt};
    for (std::size_t cls_id = 0; cls_id < partition.classes.size(); ++cls_id) {
        const TwinClass& cls = partition.classes[cls_id];
        if (cls.kind != relevant) {
            continue;
        }
        std::vector<MemberAnalysis> analyses;
        analyses.reserve(cls.members.size());
        bool class_truncated = false;
        for (int base_vertex : cls.members) {
            analyses.push_back(analyze_member(fam[base_vertex], k, which, cap));
            class_truncated = class_truncated || analyses.back().truncated;
        }
        // The class satisfies the property iff the two smallest best
        // profiles sum to at least k.
        std::size_t lo1 = 0;
        std::size_t lo2 = 1;
        if (analyses[lo1].best.profile > analyses[lo2].best.profile) {
            std::swap(lo1, lo2);
        }
        for (std::size_t i = 2; i < analyses.size(); ++i) {
            if (analyses[i].best.profile < analyses[lo1].best.profile) {
                lo2 = lo1;
                lo1 = i;
            } else if (analyses[i].best.profile < analyses[lo2].best.profile) {
                lo2 = i;
            }
        }
        if (analyses[lo1].best.profile + analyses[lo2].best.profile < k) {
            report.witness.clear();
            if (class_truncated) {
                // A truncated enumeration may have missed a better basis.
                report.outcome = PropertyOutcome::inconclusive;
                report.counterexample.reset();
            } else {
                report.outcome = PropertyOutcome::fails;
                report.counterexample = PropertyReport::Counterexample{
                    static_cast<int>(cls_id), cls.members[lo1], cls.members[lo2],
                    analyses[lo1].best.worst_x, analyses[lo2].best.worst_x};
            }
            break;
        }
        PropertyReport::ClassWitness witness{static_cast<int>(cls_id), {}};
        for (std::size_t i = 0; i < cls.members.size(); ++i) {
            witness.choices.push_back(PropertyReport::MemberChoice{
                cls.members[i], analyses[i].best.basis, analyses[i].best.profile});
        }
        report.witness.push_back(std::move(witness));
    }
    return report;
}

SufficientConditions sufficient_conditions(const Graph& g, const GraphFamily& fam, int k) {
    DimensionalK bound = dimensional_k(g, fam);
    if (k < 1 || k > bound.k) {
        throw Error("k_range", "k=" + std::to_string(k) + " outside valid range [1, " +
                                   std::to_string(bound.k) + "] for this product");
    }

    SufficientConditions out{{true, ""}, {true, ""}, {true, ""}};
    const int half_up = (k + 1) / 2;
    const int half_down = k / 2;
    for (int i = 0; i < fam.size(); ++i) {
        const Graph& h = fam[i];
        std::string tag = "member " + std::to_string(i);
        if (out.delta_true.holds) {
            int slack = adim_k(h, k).value - h.max_degree();
            if (slack < half_up) {
                out.delta_true = {false, tag + ": adim_k - Delta = " + std::to_string(slack) +
                                             " < " + std::to_string(half_up)};
            }
        }
        if (out.delta_false.holds) {
            if (h.min_degree() == 0) {
                out.delta_false = {false, tag + " has an isolated vertex"};
            } else if (h.max_degree() - 1 > half_down) {
                out.delta_false = {false, tag + ": Delta - 1 = " +
                                             std::to_string(h.max_degree() - 1) + " > " +
                                             std::to_string(half_down)};
            }
        }
        if (out.diameter6.holds) {
            ConnectivityReport conn = connectivity_report(h);
            if (!conn.connected) {
                out.diameter6 = {false, tag + " is disconnected"};
            } else if (*conn.diameter < 6) {
                out.diameter6 = {false, tag + ": diameter " + std::to_string(*conn.diameter) +
                                            " < 6"};
            }
        }
    }
    return out;
}

namespace {

// Every vertex of h has a twin inside h.
bool composed_by_twins(const TwinPartition& p) {
    return std::all_of(p.classes.begin(), p.classes.end(),
                       [](const TwinClass& cls) { return cls.members.size() > 1; });
}

// Vertices of h lying in singleton twin classes.
std::vector<int> twinless_vertices(const TwinPartition& p) {
    std::vector<int> out;
    for (const TwinClass& cls : p.classes) {
        if (cls.members.size() == 1) {
            out.push_back(cls.members[0]);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool has_vertex_of_degree(const Graph& h, int degree) {
    for (int v = 0; v < h.order(); ++v) {
        if (h.degree(v) == degree) {
            return true;
        }
    }
    return false;
}

}  // namespace

RemarkReport check_remark_dim2_full(const Graph& g, const GraphFamily& fam,
                                    int max_product_order) {
    DimensionalK bound = dimensional_k(g, fam);  // validates base + family
    (void)bound;

    TwinPartition base_partition = twin_partition(g);
    std::vector<TwinPartition> member_partitions;
    member_partitions.reserve(fam.members.size());
    for (const Graph& h : fam.members) {
        member_partitions.push_back(twin_partition(h));
    }

    auto member_ok = [&](const TwinClass& cls, int i) {
        const Graph& h = fam[i];
        if (composed_by_twins(member_partitions[static_cast<std::size_t>(i)])) {
            return true;
        }
        if (cls.kind == TwinKind::singleton) {
            return false;
        }
        // Allowed exception: a single twinless vertex of full degree (true
        // twins) or an isolated one (false twins), partnered by a matching
        // vertex in another copy of the same base class.
        std::vector<int> loners =
            twinless_vertices(member_partitions[static_cast<std::size_t>(i)]);
        int exceptional_degree = (cls.kind == TwinKind::true_twin) ? h.order() - 1 : 0;
        if (loners.size() != 1 || h.degree(loners[0]) != exceptional_degree) {
            return false;
        }
        return std::any_of(cls.members.begin(), cls.members.end(), [&](int j) {
            int partner_degree = (cls.kind == TwinKind::true_twin) ? fam[j].order() - 1 : 0;
            return j != i && has_vertex_of_degree(fam[j], partner_degree);
        });
    };

    bool predicted = true;
    for (const TwinClass& cls : base_partition.classes) {
        for (int i : cls.members) {
            if (!member_ok(cls, i)) {
                predicted = false;
                break;
            }
        }
        if (!predicted) {
            break;
        }
    }

    LexiProduct product = build_product(g, fam);
    if (product.flat.order() > max_product_order) {
        throw Error("cap", "product order " + std::to_string(product.flat.order()) +
                               " exceeds the oracle cap " + std::to_string(max_product_order));
    }
    DimensionResult oracle = dim_k(product.flat, 2);
    return RemarkReport{predicted, oracle.value == product.flat.order(), product.flat.order(),
                        oracle.value};
}

namespace {

bool is_path_graph(const Graph& g) {
    if (!connectivity_report(g).connected) {
        return false;
    }
    if (g.order() == 1) {
        return true;
    }
    int ones = 0;
    for (int v = 0; v < g.order(); ++v) {
        int d = g.degree(v);
        if (d == 1) {
            ++ones;
        } else if (d != 2) {
            return false;
        }
    }
    return ones == 2;
}

bool is_cycle_graph(const Graph& g) {
    if (g.order() < 3 || !connectivity_report(g).connected) {
        return false;
    }
    for (int v = 0; v < g.order(); ++v) {
        if (g.degree(v) != 2) {
            return false;
        }
    }
    return true;
}

}  // namespace

JoinLemmaReport verify_join_lemma(const Graph& h, int k) {
    ConnectivityReport conn = connectivity_report(h);
    if (!conn.connected) {
        throw Error("hypothesis", "join lemma needs a connected graph");
    }
    bool eligible = (*conn.diameter >= 6) || (is_cycle_graph(h) && h.order() >= 7) ||
                    (is_path_graph(h) && h.order() >= 6);
    if (!eligible) {
        throw Error("hypothesis",
                    "join lemma needs diameter >= 6, a cycle of order >= 7, or a path of "
                    "order >= 6");
    }
    int c = global_C(h).value;
    if (k < 1 || k > c) {
        throw Error("k_range",
                    "k=" + std::to_string(k) + " outside valid range [1, " + std::to_string(c) +
                        "] (C(G) = " + std::to_string(c) + ")");
    }

    Graph joined = join(complete_graph(1), h);  // apex is vertex 0
    DimensionResult dim_join = dim_k(joined, k);
    DimensionResult adim_h = adim_k(h, k);

    MulticoverInstance inst = build_multicover_instance(joined, k, Mode::metric);
    GeneratorEnumeration minima =
        enumerate_minimum_generators(inst, std::numeric_limits<std::size_t>::max());
    bool apex_excluded = std::none_of(
        minima.sets.begin(), minima.sets.end(),
        [](const std::vector<int>& basis) { return !basis.empty() && basis.front() == 0; });

    return JoinLemmaReport{k, dim_join.value, adim_h.value, apex_excluded};
}

}  // namespace lexidim
