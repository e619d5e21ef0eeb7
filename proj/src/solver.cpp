#include "lexidim/solver.hpp"

#include <algorithm>
#include <limits>
#include <optional>

#include "lexidim/error.hpp"

namespace lexidim {

const char* to_string(Mode mode) {
    return mode == Mode::metric ? "metric" : "adjacency";
}

MulticoverInstance build_multicover_instance(const Graph& g, int k, Mode mode) {
    if (g.order() < 2) {
        throw Error("order", "dimension computations need at least two vertices");
    }
    if (mode == Mode::metric && !connectivity_report(g).connected) {
        throw Error("disconnected", "metric mode requires a connected graph");
    }
    int limit = (mode == Mode::metric) ? global_D(g).value : global_C(g).value;
    if (k < 1 || k > limit) {
        const char* bound = (mode == Mode::metric) ? "D(G)" : "C(G)";
        throw Error("k_range", "k=" + std::to_string(k) + " outside valid range [1, " +
                                   std::to_string(limit) + "] (" + bound + " = " +
                                   std::to_string(limit) + ")");
    }

    MulticoverInstance inst{g.order(), k, mode, {}};
    if (mode == Mode::metric) {
        DistanceMatrix m = all_pairs_distances(g);
        for (int x = 0; x < g.order(); ++x) {
            for (int y = x + 1; y < g.order(); ++y) {
                inst.constraints.push_back({x, y, distinctive_set(g, m, x, y)});
            }
        }
    } else {
        for (int x = 0; x < g.order(); ++x) {
            for (int y = x + 1; y < g.order(); ++y) {
                inst.constraints.push_back({x, y, adjacency_distinctive_set(g, x, y)});
            }
        }
    }
    return inst;
}

namespace {

bool satisfies(const MulticoverInstance& inst, const VertexSet& chosen) {
    for (const Constraint& c : inst.constraints) {
        if (static_cast<int>((c.set & chosen).count()) < inst.k) {
            return false;
        }
    }
    return true;
}

/// Branch-and-bound engine over one instance. The same tree serves the
/// optimization pass and the fixed-budget feasibility probes of the
/// lexicographic pass.
class MulticoverSearch {
public:
    explicit MulticoverSearch(const MulticoverInstance& inst)
        : inst_(inst),
          n_(inst.universe),
          chosen_(static_cast<std::size_t>(n_)),
          excluded_(static_cast<std::size_t>(n_)),
          covered_(inst.constraints.size(), 0) {}

    /// Minimum solution size over supersets of `include`; `seed_value` must
    /// be the size of some known solution containing `include`.
    int minimize(const VertexSet& include, int seed_value) {
        reset(include, VertexSet(static_cast<std::size_t>(n_)));
        best_ = seed_value;
        budget_ = -1;
        dfs();
        return best_;
    }

    /// True iff some solution S with include ⊆ S, S ∩ exclude = ∅ and
    /// |S| <= budget exists.
    bool feasible(const VertexSet& include, const VertexSet& exclude, int budget) {
        if (static_cast<int>(include.count()) > budget) {
            return false;
        }
        // Greedy completion settles most probes without search.
        if (auto greedy = greedy_complete(include, exclude);
            greedy && static_cast<int>(greedy->count()) <= budget) {
            return true;
        }
        reset(include, exclude);
        best_ = -1;
        budget_ = budget;
        found_ = false;
        dfs();
        return found_;
    }

    /// Greedy multicover from `include`: repeatedly add the vertex covering
    /// the most still-deficient constraints, lowest index on ties. Returns
    /// nothing when no completion exists under `exclude`.
    std::optional<VertexSet> greedy_complete(const VertexSet& include,
                                             const VertexSet& exclude) {
        VertexSet chosen = include;
        while (true) {
            std::vector<int> gain(static_cast<std::size_t>(n_), 0);
            bool deficient = false;
            for (const Constraint& c : inst_.constraints) {
                int def = inst_.k - static_cast<int>((c.set & chosen).count());
                if (def <= 0) {
                    continue;
                }
                deficient = true;
                VertexSet avail = c.set & ~chosen & ~exclude;
                for (std::size_t v = avail.find_first(); v != VertexSet::npos;
                     v = avail.find_next(v)) {
                    ++gain[v];
                }
            }
            if (!deficient) {
                return chosen;
            }
            int best_vertex = -1;
            int best_gain = 0;
            for (int v = 0; v < n_; ++v) {
                if (gain[static_cast<std::size_t>(v)] > best_gain) {
                    best_gain = gain[static_cast<std::size_t>(v)];
                    best_vertex = v;
                }
            }
            if (best_vertex < 0) {
                return std::nullopt;
            }
            chosen.set(static_cast<std::size_t>(best_vertex));
        }
    }

private:
    void reset(const VertexSet& include, const VertexSet& exclude) {
        chosen_ = include;
        excluded_ = exclude;
        chosen_count_ = static_cast<int>(include.count());
        for (std::size_t ci = 0; ci < inst_.constraints.size(); ++ci) {
            covered_[ci] = static_cast<int>((inst_.constraints[ci].set & chosen_).count());
        }
    }

    bool optimizing() const { return budget_ < 0; }

    void dfs() {
        if (!optimizing() && found_) {
            return;
        }
        int max_def = 0;
        int branch_constraint = -1;
        std::vector<std::pair<int, std::size_t>> deficient;  // (deficiency, id)
        for (std::size_t ci = 0; ci < inst_.constraints.size(); ++ci) {
            int def = inst_.k - covered_[ci];
            if (def <= 0) {
                continue;
            }
            VertexSet avail = inst_.constraints[ci].set & ~chosen_ & ~excluded_;
            if (def > static_cast<int>(avail.count())) {
                return;  // this constraint can no longer be met
            }
            deficient.emplace_back(def, ci);
            if (def > max_def) {
                max_def = def;
                branch_constraint = static_cast<int>(ci);
            }
        }
        if (branch_constraint < 0) {
            if (optimizing()) {
                best_ = std::min(best_, chosen_count_);
            } else {
                found_ = chosen_count_ <= budget_;
            }
            return;
        }
        // Constraints with pairwise disjoint availability need separate new
        // vertices, so their deficiencies add up.
        std::sort(deficient.begin(), deficient.end(), [](const auto& a, const auto& b) {
            return a.first != b.first ? a.first > b.first : a.second < b.second;
        });
        int lower_bound = 0;
        VertexSet packed(static_cast<std::size_t>(n_));
        for (auto [def, ci] : deficient) {
            VertexSet avail = inst_.constraints[ci].set & ~chosen_ & ~excluded_;
            if ((avail & packed).none()) {
                lower_bound += def;
                packed |= avail;
            }
        }
        if (optimizing()) {
            if (chosen_count_ + lower_bound >= best_) {
                return;
            }
        } else if (chosen_count_ + lower_bound > budget_) {
            return;
        }

        VertexSet avail = inst_.constraints[static_cast<std::size_t>(branch_constraint)].set &
                          ~chosen_ & ~excluded_;
        std::vector<std::size_t> branched;
        for (std::size_t v = avail.find_first(); v != VertexSet::npos; v = avail.find_next(v)) {
            include_vertex(v);
            dfs();
            remove_vertex(v);
            // later branches must pick a larger vertex from this constraint
            excluded_.set(v);
            branched.push_back(v);
            if (!optimizing() && found_) {
                break;
            }
        }
        for (std::size_t v : branched) {
            excluded_.reset(v);
        }
    }

    void include_vertex(std::size_t v) {
        chosen_.set(v);
        ++chosen_count_;
        for (std::size_t ci = 0; ci < inst_.constraints.size(); ++ci) {
            if (inst_.constraints[ci].set.test(v)) {
                ++covered_[ci];
            }
        }
    }

    void remove_vertex(std::size_t v) {
        chosen_.reset(v);
        --chosen_count_;
        for (std::size_t ci = 0; ci < inst_.constraints.size(); ++ci) {
            if (inst_.constraints[ci].set.test(v)) {
                --covered_[ci];
            }
        }
    }

    const MulticoverInstance& inst_;
    int n_;
    VertexSet chosen_;
    VertexSet excluded_;
    std::vector<int> covered_;
    int chosen_count_ = 0;
    int best_ = 0;
    int budget_ = -1;
    bool found_ = false;
};

}  // namespace

DimensionResult exact_min_multicover(const MulticoverInstance& inst) {
    for (const Constraint& c : inst.constraints) {
        if (static_cast<int>(c.set.count()) < inst.k) {
            throw Error("k_range", "infeasible instance: pair (" + std::to_string(c.x) + "," +
                                       std::to_string(c.y) + ") has only " +
                                       std::to_string(c.set.count()) + " distinctive vertices");
        }
    }

    const std::size_t n = static_cast<std::size_t>(inst.universe);
    // Constraints met with no slack force their whole set into the solution.
    VertexSet forced(n);
    for (const Constraint& c : inst.constraints) {
        if (static_cast<int>(c.set.count()) == inst.k) {
            forced |= c.set;
        }
    }

    MulticoverSearch search(inst);
    auto seed = search.greedy_complete(forced, VertexSet(n));
    if (!seed) {
        throw Error("internal", "greedy completion failed on a feasible instance");
    }
    int optimum = search.minimize(forced, static_cast<int>(seed->count()));

    // Lexicographically smallest optimum: walk the vertices in order and
    // keep each one that still admits a completion within the optimum.
    VertexSet chosen = forced;
    VertexSet excluded(n);
    for (int v = 0; v < inst.universe; ++v) {
        if (chosen.test(static_cast<std::size_t>(v))) {
            continue;
        }
        VertexSet with = chosen;
        with.set(static_cast<std::size_t>(v));
        if (search.feasible(with, excluded, optimum)) {
            chosen = with;
        } else {
            excluded.set(static_cast<std::size_t>(v));
        }
        if (static_cast<int>(chosen.count()) == optimum) {
            break;
        }
    }

    if (static_cast<int>(chosen.count()) != optimum || !satisfies(inst, chosen)) {
        throw Error("internal", "witness failed verification");
    }
    return DimensionResult{optimum, to_vertex_list(chosen), DimensionResult::Method::oracle,
                           inst.k, inst.mode};
}

DimensionResult dim_k(const Graph& g, int k) {
    return exact_min_multicover(build_multicover_instance(g, k, Mode::metric));
}

DimensionResult adim_k(const Graph& g, int k) {
    return exact_min_multicover(build_multicover_instance(g, k, Mode::adjacency));
}

namespace {

// Visits r-subsets of {0..n-1} in lexicographic order until visit() returns
// false.
template <typename Visit>
void for_each_combination(int n, int r, Visit visit) {
    if (r < 0 || r > n) {
        return;
    }
    std::vector<int> combo(static_cast<std::size_t>(r));
    for (int i = 0; i < r; ++i) {
        combo[static_cast<std::size_t>(i)] = i;
    }
    while (true) {
        if (!visit(combo)) {
            return;
        }
        int i = r - 1;
        while (i >= 0 && combo[static_cast<std::size_t>(i)] == n - r + i) {
            --i;
        }
        if (i < 0) {
            return;
        }
        ++combo[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < r; ++j) {
            combo[static_cast<std::size_t>(j)] = combo[static_cast<std::size_t>(j - 1)] + 1;
        }
    }
}

}  // namespace

GeneratorEnumeration enumerate_minimum_generators(const MulticoverInstance& inst,
                                                  std::size_t cap) {
    DimensionResult min = exact_min_multicover(inst);
    GeneratorEnumeration out{min.value, {}, false};
    for_each_combination(inst.universe, min.value, [&](const std::vector<int>& combo) {
        VertexSet set = make_vertex_set(inst.universe, combo);
        if (satisfies(inst, set)) {
            if (out.sets.size() == cap) {
                out.truncated = true;
                return false;
            }
            out.sets.push_back(combo);
        }
        return true;
    });
    return out;
}

BasisEnumeration enumerate_k_adjacency_bases(const Graph& g, int k, std::size_t cap) {
    MulticoverInstance inst = build_multicover_instance(g, k, Mode::adjacency);
    GeneratorEnumeration gens = enumerate_minimum_generators(inst, cap);
    return BasisEnumeration{gens.size, std::move(gens.sets), gens.truncated};
}

}  // namespace lexidim
