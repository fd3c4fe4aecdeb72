#pragma once

// Shared test utilities: random graphs, random walks, the apply_walk delta
// property, and a tiny isomorphism-class graph generator for the oracle
// comparisons.

#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "girr/abelian.hpp"
#include "girr/graph.hpp"
#include "girr/labeling.hpp"

namespace girr::testing {

inline SimpleGraph random_graph(std::mt19937& rng, int max_n = 12, double p = 0.4) {
    int n = 2 + static_cast<int>(rng() % static_cast<unsigned>(max_n - 1));
    std::vector<Edge> edges;
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng) < p) edges.emplace_back(u, v);
    return SimpleGraph(n, edges);
}

inline std::optional<Walk> random_walk(std::mt19937& rng, const SimpleGraph& g, int max_steps = 8) {
    std::vector<int> starts;
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) > 0) starts.push_back(v);
    if (starts.empty()) return std::nullopt;
    Walk w;
    w.vertices.push_back(starts[rng() % starts.size()]);
    int steps = 1 + static_cast<int>(rng() % static_cast<unsigned>(max_steps));
    for (int i = 0; i < steps; ++i) {
        const auto& nbrs = g.neighbors(w.vertices.back());
        w.vertices.push_back(nbrs[rng() % nbrs.size()]);
    }
    return w;
}

/// Checks the apply_walk contract on one instance: endpoint deltas follow the
/// open/closed x even/odd table and interior vertices keep their weight.
/// Weights are recomputed from scratch on both sides.
inline bool walk_delta_property_holds(const SimpleGraph& g, const AbelianGroup& grp,
                                      const EdgeLabeling& before, const Walk& walk,
                                      const GroupElement& a) {
    EdgeLabeling after = apply_walk(g, before, walk, a);
    WeightMap wb = weights(g, before);
    WeightMap wa = weights(g, after);
    int x = walk.vertices.front(), y = walk.vertices.back();
    std::vector<GroupElement> delta(static_cast<std::size_t>(g.order()), grp.zero());
    if (x == y) {
        if (walk.parity() == WalkParity::even)
            delta[static_cast<std::size_t>(x)] = grp.scalar_mul(2, a);
    } else if (walk.parity() == WalkParity::even) {
        delta[static_cast<std::size_t>(x)] = a;
        delta[static_cast<std::size_t>(y)] = a;
    } else {
        delta[static_cast<std::size_t>(x)] = a;
        delta[static_cast<std::size_t>(y)] = grp.neg(a);
    }
    for (int v = 0; v < g.order(); ++v)
        if (wa[static_cast<std::size_t>(v)] !=
            grp.add(wb[static_cast<std::size_t>(v)], delta[static_cast<std::size_t>(v)]))
            return false;
    return true;
}

/// Runs `cases` randomized apply_walk property checks; returns the number of
/// violations (0 expected).
inline int run_walk_property_suite(unsigned seed, int cases) {
    std::mt19937 rng(seed);
    std::vector<AbelianGroup> pool = {AbelianGroup({5}), AbelianGroup({6}),  AbelianGroup({12}),
                                      AbelianGroup({2, 4}), AbelianGroup({3, 9}), AbelianGroup({2, 2, 2})};
    int bad = 0;
    int done = 0;
    while (done < cases) {
        SimpleGraph g = random_graph(rng);
        auto walk = random_walk(rng, g);
        if (!walk) continue;
        const AbelianGroup& grp = pool[rng() % pool.size()];
        auto elements = grp.all_elements();
        GroupElement a = elements[rng() % elements.size()];
        EdgeLabeling base = zero_labeling(g, grp);
        // start from a random labeling, not just zeros
        for (auto& lbl : base.labels) lbl = elements[rng() % elements.size()];
        if (!walk_delta_property_holds(g, grp, base, *walk, a)) ++bad;
        ++done;
    }
    return bad;
}

/// Canonical form by minimizing the edge bitmask over all vertex
/// permutations; fine up to n = 6.
inline std::vector<bool> canonical_adjacency(const SimpleGraph& g) {
    int n = g.order();
    std::vector<int> perm(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
    std::vector<bool> best;
    do {
        std::vector<bool> bits;
        bits.reserve(static_cast<std::size_t>(n * (n - 1) / 2));
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                bits.push_back(g.has_edge(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]));
        if (best.empty() || bits < best) best = bits;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

/// All isomorphism-distinct connected graphs on n vertices.
inline std::vector<SimpleGraph> connected_graphs_up_to_iso(int n) {
    std::vector<Edge> all_pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) all_pairs.emplace_back(u, v);
    std::set<std::vector<bool>> seen;
    std::vector<SimpleGraph> out;
    for (unsigned long mask = 0; mask < (1ul << all_pairs.size()); ++mask) {
        std::vector<Edge> edges;
        for (std::size_t i = 0; i < all_pairs.size(); ++i)
            if (mask & (1ul << i)) edges.push_back(all_pairs[i]);
        SimpleGraph g(n, edges);
        if (component_profile(g).components.size() != 1) continue;
        auto canon = canonical_adjacency(g);
        if (seen.insert(canon).second) out.push_back(std::move(g));
    }
    return out;
}

} // namespace girr::testing
