#pragma once

// Edge labelings over a finite Abelian group and the walk calculus used by
// the constructive labelings: adding a along the odd positions of a walk and
// -a along the even positions shifts only the endpoint weights.

#include <cstdlib>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

#include "girr/abelian.hpp"
#include "girr/graph.hpp"

namespace girr {

inline constexpr long long kDefaultSearchBudget = 10'000'000;

/// Labels live in `group`, one per edge of the host graph, in the order of
/// SimpleGraph::edges(). Unset edges stay at the identity.
struct EdgeLabeling {
    AbelianGroup group;
    std::vector<GroupElement> labels;
};

inline EdgeLabeling zero_labeling(const SimpleGraph& g, const AbelianGroup& grp) {
    return {grp, std::vector<GroupElement>(static_cast<std::size_t>(g.edge_count()), grp.zero())};
}

/// w(v) = sum of labels of edges incident to v, indexed by vertex.
using WeightMap = std::vector<GroupElement>;

inline WeightMap weights(const SimpleGraph& g, const EdgeLabeling& L) {
    if (static_cast<int>(L.labels.size()) != g.edge_count())
        throw std::invalid_argument("labeling does not match the graph's edge set");
    WeightMap w(static_cast<std::size_t>(g.order()), L.group.zero());
    for (std::size_t i = 0; i < L.labels.size(); ++i) {
        auto [u, v] = g.edges()[i];
        w[static_cast<std::size_t>(u)] = L.group.add(w[static_cast<std::size_t>(u)], L.labels[i]);
        w[static_cast<std::size_t>(v)] = L.group.add(w[static_cast<std::size_t>(v)], L.labels[i]);
    }
    return w;
}

inline bool weights_all_distinct(const SimpleGraph& g, const EdgeLabeling& L) {
    WeightMap w = weights(g, L);
    std::sort(w.begin(), w.end());
    return std::adjacent_find(w.begin(), w.end()) == w.end();
}

/// Adds +a to edges in odd walk positions and -a to even positions
/// (1-based from the walk start); repeated edges accumulate. Net effect on
/// weights: open even walk +a at both endpoints, open odd walk +a/-a,
/// closed even walk +2a at the endpoint, closed odd walk nothing.
inline EdgeLabeling apply_walk(const SimpleGraph& g, EdgeLabeling L, const Walk& walk,
                               const GroupElement& a) {
    if (!walk_valid(g, walk)) throw std::invalid_argument("walk is not valid in the host graph");
    if (!L.group.contains(a)) throw std::invalid_argument("walk label from the wrong group");
    const GroupElement na = L.group.neg(a);
    for (std::size_t i = 0; i + 1 < walk.vertices.size(); ++i) {
        int ei = g.edge_index(walk.vertices[i], walk.vertices[i + 1]);
        const GroupElement& delta = (i % 2 == 0) ? a : na; // position i+1 is odd when i is even
        L.labels[static_cast<std::size_t>(ei)] = L.group.add(L.labels[static_cast<std::size_t>(ei)], delta);
    }
    return L;
}

/// phi_e / phi_o: apply_walk on the shortest walk of the requested parity.
inline EdgeLabeling phi(const SimpleGraph& g, EdgeLabeling L, int x, int y, WalkParity parity,
                        const GroupElement& a) {
    auto w = shortest_parity_walk(g, x, y, parity);
    if (!w) throw std::invalid_argument("no walk of the requested parity between the endpoints");
    return apply_walk(g, std::move(L), *w, a);
}

// ---- exhaustive fallback -------------------------------------------------

enum class LabelStatus { found, none_exists, unknown };

struct LabelResult {
    LabelStatus status = LabelStatus::none_exists;
    EdgeLabeling labeling;
    std::string strategy;
    long long nodes_used = 0;
};

/// Backtracking over edge labels in sorted-edge order, pruning as soon as two
/// vertices with all incident edges labeled share a weight. `none_exists`
/// only after exhausting the full space; `unknown` when the node budget runs
/// out first.
inline LabelResult label_search(const SimpleGraph& g, const AbelianGroup& grp,
                                long long budget = kDefaultSearchBudget) {
    const auto elements = grp.all_elements();
    const int E = g.edge_count();
    const int n = g.order();

    // weights tracked as mixed-radix codes for cheap collision checks
    std::vector<long long> stride(grp.rank(), 1);
    for (int i = static_cast<int>(grp.rank()) - 2; i >= 0; --i)
        stride[static_cast<std::size_t>(i)] =
            stride[static_cast<std::size_t>(i + 1)] * grp.factors()[static_cast<std::size_t>(i + 1)];
    auto encode = [&](const GroupElement& e) {
        long long c = 0;
        for (std::size_t i = 0; i < e.size(); ++i) c += e[i] * stride[i];
        return c;
    };
    std::vector<long long> elem_code(elements.size());
    for (std::size_t i = 0; i < elements.size(); ++i) elem_code[i] = encode(elements[i]);

    std::vector<GroupElement> w(static_cast<std::size_t>(n), grp.zero());
    std::vector<int> remaining(static_cast<std::size_t>(n), 0);
    for (int v = 0; v < n; ++v) remaining[static_cast<std::size_t>(v)] = g.degree(v);

    LabelResult res;
    res.strategy = "search";

    std::unordered_set<long long> done;
    // isolated vertices are complete from the start, all with weight zero
    for (int v = 0; v < n; ++v)
        if (remaining[static_cast<std::size_t>(v)] == 0 && !done.insert(0).second) {
            res.status = LabelStatus::none_exists;
            return res;
        }

    std::vector<std::size_t> chosen(static_cast<std::size_t>(E), 0);
    long long nodes = 0;
    bool exhausted = false;

    auto complete = [&](int v) -> bool { // returns false on weight collision
        return done.insert(encode(w[static_cast<std::size_t>(v)])).second;
    };
    auto uncomplete = [&](int v) { done.erase(encode(w[static_cast<std::size_t>(v)])); };

    auto rec = [&](auto&& self, int e) -> bool {
        if (e == E) return true;
        auto [u, v] = g.edges()[static_cast<std::size_t>(e)];
        for (std::size_t li = 0; li < elements.size(); ++li) {
            if (++nodes > budget) {
                exhausted = true;
                return false;
            }
            const GroupElement& a = elements[li];
            w[static_cast<std::size_t>(u)] = grp.add(w[static_cast<std::size_t>(u)], a);
            w[static_cast<std::size_t>(v)] = grp.add(w[static_cast<std::size_t>(v)], a);
            --remaining[static_cast<std::size_t>(u)];
            --remaining[static_cast<std::size_t>(v)];
            bool ok = true;
            bool u_in = false;
            if (remaining[static_cast<std::size_t>(u)] == 0) {
                ok = complete(u);
                u_in = ok;
            }
            if (ok && remaining[static_cast<std::size_t>(v)] == 0) {
                ok = complete(v);
                if (!ok && u_in) uncomplete(u);
            }
            if (ok) {
                chosen[static_cast<std::size_t>(e)] = li;
                if (self(self, e + 1)) return true;
                if (remaining[static_cast<std::size_t>(v)] == 0) uncomplete(v);
                if (remaining[static_cast<std::size_t>(u)] == 0) uncomplete(u);
            }
            ++remaining[static_cast<std::size_t>(u)];
            ++remaining[static_cast<std::size_t>(v)];
            w[static_cast<std::size_t>(u)] = grp.sub(w[static_cast<std::size_t>(u)], a);
            w[static_cast<std::size_t>(v)] = grp.sub(w[static_cast<std::size_t>(v)], a);
            if (exhausted) return false;
        }
        return false;
    };

    bool ok = rec(rec, 0);
    res.nodes_used = nodes;
    if (ok) {
        res.status = LabelStatus::found;
        res.labeling = zero_labeling(g, grp);
        for (int e = 0; e < E; ++e) res.labeling.labels[static_cast<std::size_t>(e)] = elements[chosen[static_cast<std::size_t>(e)]];
    } else {
        res.status = exhausted ? LabelStatus::unknown : LabelStatus::none_exists;
    }
    return res;
}

/// Default search budget, overridable through the GI_BUDGET environment
/// variable.
inline long long default_search_budget() {
    if (const char* s = std::getenv("GI_BUDGET")) {
        char* end = nullptr;
        long long v = std::strtoll(s, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
    }
    return kDefaultSearchBudget;
}

} // namespace girr
