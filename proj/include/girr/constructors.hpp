#pragma once

// Constructive labelings, all built on the walk calculus: vertices are
// grouped into pairs, triples or quadruples and the matching zero-sum parts
// are pushed onto their weights through shortest parity walks. Every
// constructor re-derives the weights it produced and refuses to return an
// unverified labeling.

#include <stdexcept>
#include <string>
#include <vector>

#include "girr/graph.hpp"
#include "girr/labeling.hpp"
#include "girr/prime.hpp"
#include "girr/zerosum.hpp"

namespace girr {

/// A constructed labeling together with the weight every vertex was planned
/// to receive; the two are checked against each other before returning.
struct ConstructionRun {
    EdgeLabeling labeling;
    std::vector<GroupElement> planned_weights;
};

namespace detail {

inline std::vector<const Component*> construction_order(const ComponentProfile& prof) {
    std::vector<const Component*> order;
    order.reserve(prof.components.size());
    for (const auto& c : prof.components) order.push_back(&c);
    std::stable_sort(order.begin(), order.end(), [](const Component* a, const Component* b) {
        if (a->order() != b->order()) return a->order() < b->order();
        return a->vertices.front() < b->vertices.front();
    });
    return order;
}

class PartFeed {
  public:
    explicit PartFeed(std::vector<std::vector<GroupElement>> parts) : parts_(std::move(parts)) {}

    const std::vector<GroupElement>& next() {
        if (i_ >= parts_.size()) throw std::logic_error("construction ran out of zero-sum parts");
        return parts_[i_++];
    }
    std::size_t consumed() const { return i_; }

  private:
    std::vector<std::vector<GroupElement>> parts_;
    std::size_t i_ = 0;
};

inline void check_construction(const SimpleGraph& g, const EdgeLabeling& L,
                               const std::vector<GroupElement>& planned, const char* what) {
    if (weights(g, L) != planned)
        throw std::logic_error(std::string(what) + ": weights diverge from the plan");
    auto sorted = planned;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw std::logic_error(std::string(what) + ": planned weights collide");
}

} // namespace detail

// ---- star-free graphs, odd group order ----------------------------------

/// Labels any graph without K_{1,u} components over any Abelian group of odd
/// order t >= n. Vertices are split into 2p1+p3+p4 triples plus pairs, the
/// group into zero-sum triples and inverse pairs, and each component class
/// gets its own walk pattern.
inline ConstructionRun star_free_odd_run(const SimpleGraph& g, const AbelianGroup& grp) {
    const long long t = grp.order();
    const int n = g.order();
    if (t % 2 == 0) throw std::invalid_argument("star-free construction needs odd group order");
    if (t < n) throw std::invalid_argument("group order below graph order");
    auto prof = component_profile(g);
    for (const auto& c : prof.components)
        if (star_leaf_count(g, c)) throw std::invalid_argument("star component present");

    const int triples_needed = 2 * prof.p1 + prof.p3 + prof.p4;
    const bool exclude_zero = triples_needed % 2 == 0; // n even: zero stays out, its pair joins the pool
    const long long pair_count = (t - (exclude_zero ? 1 : 0) - 3LL * triples_needed) / 2;
    if (pair_count < 0) throw std::logic_error("negative pair count in star-free construction");

    std::vector<int> sizes(static_cast<std::size_t>(triples_needed), 3);
    sizes.insert(sizes.end(), static_cast<std::size_t>(pair_count), 2);
    auto zs = zero_sum_partition(grp, sizes, exclude_zero);
    if (zs.status != ZsStatus::found)
        throw std::logic_error("guaranteed zero-sum partition not found");

    detail::PartFeed triples({zs.partition.parts.begin(), zs.partition.parts.begin() + triples_needed});
    detail::PartFeed pairs({zs.partition.parts.begin() + triples_needed, zs.partition.parts.end()});

    EdgeLabeling L = zero_labeling(g, grp);
    std::vector<GroupElement> planned(static_cast<std::size_t>(n), grp.zero());

    auto pair_up = [&](const std::vector<int>& vs, std::size_t from) {
        if ((vs.size() - from) % 2 != 0) throw std::logic_error("odd number of vertices left to pair");
        for (std::size_t i = from; i + 1 < vs.size(); i += 2) {
            const auto& pr = pairs.next();
            L = phi(g, std::move(L), vs[i], vs[i + 1], WalkParity::odd, pr[0]);
            planned[static_cast<std::size_t>(vs[i])] = pr[0];
            planned[static_cast<std::size_t>(vs[i + 1])] = pr[1];
        }
    };

    for (const Component* c : detail::construction_order(prof)) {
        switch (p_class(*c)) {
            case PClass::bip_even_even:
                pair_up(c->classes[0], 0);
                pair_up(c->classes[1], 0);
                break;
            case PClass::nonbip_even:
                pair_up(c->vertices, 0);
                break;
            case PClass::bip_odd_odd: {
                const auto& c0 = c->classes[0];
                const auto& c1 = c->classes[1];
                const auto t0 = triples.next();
                const auto t1 = triples.next();
                L = phi(g, std::move(L), c0[0], c1[2], WalkParity::even, t0[0]);
                L = phi(g, std::move(L), c0[1], c1[2], WalkParity::even, t0[1]);
                L = phi(g, std::move(L), c0[2], c1[2], WalkParity::even, t0[2]);
                L = phi(g, std::move(L), c1[0], c0[2], WalkParity::even, t1[0]);
                L = phi(g, std::move(L), c1[1], c0[2], WalkParity::even, t1[1]);
                L = phi(g, std::move(L), c1[2], c0[2], WalkParity::even, t1[2]);
                for (int k = 0; k < 3; ++k) {
                    planned[static_cast<std::size_t>(c0[static_cast<std::size_t>(k)])] = t0[static_cast<std::size_t>(k)];
                    planned[static_cast<std::size_t>(c1[static_cast<std::size_t>(k)])] = t1[static_cast<std::size_t>(k)];
                }
                pair_up(c0, 3);
                pair_up(c1, 3);
                break;
            }
            case PClass::nonbip_odd: {
                const auto& vs = c->vertices;
                const auto tr = triples.next();
                L = phi(g, std::move(L), vs[0], vs[2], WalkParity::even, tr[0]);
                L = phi(g, std::move(L), vs[1], vs[2], WalkParity::even, tr[1]);
                L = phi(g, std::move(L), vs[2], vs[2], WalkParity::even, tr[2]); // closed even walk: +2c = c - sum
                for (int k = 0; k < 3; ++k) planned[static_cast<std::size_t>(vs[static_cast<std::size_t>(k)])] = tr[static_cast<std::size_t>(k)];
                pair_up(vs, 3);
                break;
            }
            case PClass::bip_mixed: {
                const bool odd_first = c->classes[0].size() % 2 == 1;
                const auto& odd_class = c->classes[odd_first ? 0 : 1];
                const auto& even_class = c->classes[odd_first ? 1 : 0];
                const int hub = even_class[0]; // picks up the triple sum = 0, then pairs like the rest of its class
                const auto tr = triples.next();
                L = phi(g, std::move(L), odd_class[0], hub, WalkParity::even, tr[0]);
                L = phi(g, std::move(L), odd_class[1], hub, WalkParity::even, tr[1]);
                L = phi(g, std::move(L), odd_class[2], hub, WalkParity::even, tr[2]);
                for (int k = 0; k < 3; ++k) planned[static_cast<std::size_t>(odd_class[static_cast<std::size_t>(k)])] = tr[static_cast<std::size_t>(k)];
                pair_up(odd_class, 3);
                pair_up(even_class, 0);
                break;
            }
        }
    }

    detail::check_construction(g, L, planned, "star-free odd construction");
    return {std::move(L), std::move(planned)};
}

inline EdgeLabeling label_star_free_odd(const SimpleGraph& g, const AbelianGroup& grp) {
    return star_free_odd_run(g, grp).labeling;
}

// ---- powers of two over Z_p ----------------------------------------------

struct Pow2Labeling {
    long long prime = 0;
    EdgeLabeling labeling;
};

/// Spanning-forest labeling with labels 0, 1, 2, 4, ..., 2^{n-m-2} over Z_p,
/// p the smallest prime above 2^{n-m-1}. The zero edge goes onto a pendant
/// tree edge of a component of order >= 4; a first tree edge with an inner
/// endpoint can leak equal weights onto a leaf neighbor. Graphs whose
/// components all have order 3 get a direct per-component assignment
/// instead, still over the same Z_p.
inline Pow2Labeling label_powers_of_two(const SimpleGraph& g, int exponent_cap = 30) {
    const int n = g.order();
    auto prof = component_profile(g);
    if (prof.components.empty()) throw std::invalid_argument("empty graph");
    for (const auto& c : prof.components)
        if (c.order() < 3) throw std::invalid_argument("component of order < 3");
    const int m = static_cast<int>(prof.components.size());
    const int exponent = n - m - 1;
    if (exponent > exponent_cap) throw std::invalid_argument("n - m - 1 exceeds the exponent cap");

    const long long p = next_prime_above(1LL << exponent);
    AbelianGroup zp({p});
    EdgeLabeling L = zero_labeling(g, zp);

    auto forest = spanning_forest(g);
    bool has_big = false;
    for (const auto& c : prof.components) has_big = has_big || c.order() >= 4;

    if (has_big) {
        // forest starts with the tree of the first component of order >= 4
        int big_order = 0;
        for (const auto& c : prof.components)
            if (c.order() >= 4) {
                big_order = c.order();
                break;
            }
        std::vector<int> tdeg(static_cast<std::size_t>(n), 0);
        for (auto [u, v] : forest) {
            tdeg[static_cast<std::size_t>(u)]++;
            tdeg[static_cast<std::size_t>(v)]++;
        }
        int pendant = -1;
        for (int i = 0; i < big_order - 1; ++i) {
            auto [u, v] = forest[static_cast<std::size_t>(i)];
            if (tdeg[static_cast<std::size_t>(u)] == 1 || tdeg[static_cast<std::size_t>(v)] == 1) {
                pendant = i;
                break;
            }
        }
        if (pendant < 0) throw std::logic_error("tree without a pendant edge");
        std::swap(forest[0], forest[static_cast<std::size_t>(pendant)]);

        long long power = 1;
        for (std::size_t i = 1; i < forest.size(); ++i) {
            auto [u, v] = forest[i];
            L.labels[static_cast<std::size_t>(g.edge_index(u, v))] = GroupElement{power % p};
            power <<= 1;
        }
    } else {
        // every component is a K_3 or a path on 3 vertices: two tree edges
        // around a middle vertex give weights {x, y, x+y}
        std::vector<char> used(static_cast<std::size_t>(p), 0);
        for (const auto& c : prof.components) {
            std::vector<Edge> tree;
            for (auto e : forest)
                if (prof.comp_of[static_cast<std::size_t>(e.first)] ==
                    prof.comp_of[static_cast<std::size_t>(c.vertices.front())])
                    tree.push_back(e);
            if (tree.size() != 2) throw std::logic_error("order-3 component with wrong tree size");
            bool found = false;
            for (long long x = 0; x < p && !found; ++x) {
                if (used[static_cast<std::size_t>(x)]) continue;
                for (long long y = x + 1; y < p && !found; ++y) {
                    if (used[static_cast<std::size_t>(y)]) continue;
                    long long s = (x + y) % p;
                    if (s == x || s == y || used[static_cast<std::size_t>(s)]) continue;
                    L.labels[static_cast<std::size_t>(g.edge_index(tree[0].first, tree[0].second))] = GroupElement{x};
                    L.labels[static_cast<std::size_t>(g.edge_index(tree[1].first, tree[1].second))] = GroupElement{y};
                    used[static_cast<std::size_t>(x)] = used[static_cast<std::size_t>(y)] = used[static_cast<std::size_t>(s)] = 1;
                    found = true;
                }
            }
            if (!found) throw std::logic_error("no distinct weight triple available");
        }
    }

    if (!weights_all_distinct(g, L)) throw std::logic_error("powers-of-two labeling not irregular");
    return {p, std::move(L)};
}

// ---- exactly three involutions, n = 4 (mod 8) ----------------------------

/// Both branches of the three-involution construction: with an even-order
/// component the smallest involution rides a dedicated triple through four
/// chosen vertices of that component; without one, {0} joins the last
/// inverse pair to form an extra triple.
inline ConstructionRun three_involutions_run(const SimpleGraph& g, const AbelianGroup& grp) {
    const int n = g.order();
    if (n % 8 != 4) throw std::invalid_argument("graph order must be 4 (mod 8)");
    if (grp.order() != n) throw std::invalid_argument("group order must equal graph order");
    if (grp.involution_count() != 3) throw std::invalid_argument("group must have exactly three involutions");
    auto prof = component_profile(g);
    for (const auto& c : prof.components) {
        if (c.order() < 3) throw std::invalid_argument("component of order < 3");
        if (c.bipartite && (c.classes[0].size() % 2 != 0 || c.classes[1].size() % 2 != 0))
            throw std::invalid_argument("bipartite component with an odd color class");
    }

    auto order = detail::construction_order(prof);
    std::vector<const Component*> odd_comps, even_comps;
    for (const Component* c : order)
        (c->order() % 2 ? odd_comps : even_comps).push_back(c);
    const int podd = static_cast<int>(odd_comps.size());

    EdgeLabeling L = zero_labeling(g, grp);
    std::vector<GroupElement> planned(static_cast<std::size_t>(n), grp.zero());

    std::vector<std::vector<GroupElement>> triple_parts;
    std::vector<std::vector<GroupElement>> pair_parts;

    if (!even_comps.empty()) {
        const long long m = (n - 3LL * podd - 4) / 2;
        std::vector<int> sizes(static_cast<std::size_t>(podd + 1), 3);
        sizes.insert(sizes.end(), static_cast<std::size_t>(m), 2);
        auto zs = zero_sum_partition(grp, sizes, true);
        if (zs.status != ZsStatus::found) throw std::logic_error("guaranteed zero-sum partition not found");
        triple_parts.assign(zs.partition.parts.begin(), zs.partition.parts.begin() + podd + 1);
        pair_parts.assign(zs.partition.parts.begin() + podd + 1, zs.partition.parts.end());

        // involutions can never sit in an inverse pair, so iota1 is in a triple
        const GroupElement iota = grp.involutions().front();
        std::size_t it = 0;
        while (it < triple_parts.size() &&
               std::find(triple_parts[it].begin(), triple_parts[it].end(), iota) == triple_parts[it].end())
            ++it;
        if (it == triple_parts.size()) throw std::logic_error("involution missing from all triples");
        std::swap(triple_parts[it], triple_parts.back());

        std::vector<GroupElement> special = triple_parts.back();
        triple_parts.pop_back();
        special.erase(std::find(special.begin(), special.end(), iota));
        const GroupElement b = special[0], c = special[1]; // ascending leftovers

        const Component* H = even_comps.front();
        int u, x, v, y;
        if (H->bipartite) {
            u = H->classes[0][0];
            x = H->classes[0][1];
            v = H->classes[1][0];
            y = H->classes[1][1];
        } else {
            u = H->vertices[0];
            x = H->vertices[1];
            v = H->vertices[2];
            y = H->vertices[3];
        }
        L = phi(g, std::move(L), u, x, WalkParity::odd, iota);
        L = phi(g, std::move(L), u, v, WalkParity::even, b);
        L = phi(g, std::move(L), u, y, WalkParity::even, c);
        planned[static_cast<std::size_t>(u)] = grp.zero();
        planned[static_cast<std::size_t>(x)] = iota; // -iota = iota
        planned[static_cast<std::size_t>(v)] = b;
        planned[static_cast<std::size_t>(y)] = c;
    } else {
        if (podd < 2) throw std::logic_error("even order with no even component needs >= 2 odd components");
        const long long m = (n - 3LL * podd + 2) / 2;
        std::vector<int> sizes(static_cast<std::size_t>(podd - 1), 3);
        sizes.insert(sizes.end(), static_cast<std::size_t>(m), 2);
        auto zs = zero_sum_partition(grp, sizes, true);
        if (zs.status != ZsStatus::found) throw std::logic_error("guaranteed zero-sum partition not found");
        triple_parts.assign(zs.partition.parts.begin(), zs.partition.parts.begin() + podd - 1);
        pair_parts.assign(zs.partition.parts.begin() + podd - 1, zs.partition.parts.end());

        // last pair plus the identity make the missing triple
        std::vector<GroupElement> extra = pair_parts.back();
        pair_parts.pop_back();
        extra.push_back(grp.zero());
        std::sort(extra.begin(), extra.end());
        triple_parts.push_back(std::move(extra));
    }

    detail::PartFeed triples(std::move(triple_parts));
    detail::PartFeed pairs(std::move(pair_parts));

    auto pair_up = [&](const std::vector<int>& vs, std::size_t from) {
        if ((vs.size() - from) % 2 != 0) throw std::logic_error("odd number of vertices left to pair");
        for (std::size_t i = from; i + 1 < vs.size(); i += 2) {
            const auto& pr = pairs.next();
            L = phi(g, std::move(L), vs[i], vs[i + 1], WalkParity::odd, pr[0]);
            planned[static_cast<std::size_t>(vs[i])] = pr[0];
            planned[static_cast<std::size_t>(vs[i + 1])] = pr[1];
        }
    };

    for (const Component* c : odd_comps) {
        const auto& vs = c->vertices; // odd order forces non-bipartite here
        const auto tr = triples.next();
        L = phi(g, std::move(L), vs[0], vs[2], WalkParity::even, tr[0]);
        L = phi(g, std::move(L), vs[1], vs[2], WalkParity::even, tr[1]);
        L = phi(g, std::move(L), vs[2], vs[2], WalkParity::even, tr[2]);
        for (int k = 0; k < 3; ++k) planned[static_cast<std::size_t>(vs[static_cast<std::size_t>(k)])] = tr[static_cast<std::size_t>(k)];
        pair_up(vs, 3);
    }
    for (std::size_t ci = 0; ci < even_comps.size(); ++ci) {
        const Component* c = even_comps[ci];
        const std::size_t skip = ci == 0 ? 2 : 0; // H already used u,x,v,y
        if (c->bipartite) {
            pair_up(c->classes[0], skip);
            pair_up(c->classes[1], skip);
        } else {
            pair_up(c->vertices, skip * 2);
        }
    }

    detail::check_construction(g, L, planned, "three-involution construction");
    return {std::move(L), std::move(planned)};
}

inline EdgeLabeling label_three_involutions(const SimpleGraph& g, const AbelianGroup& grp) {
    return three_involutions_run(g, grp).labeling;
}

// ---- all component orders divisible by four ------------------------------

/// Quadruple construction: the involution subgroup splits into Klein cosets,
/// the rest of the group into {g,-g,h,-h} quadruples, and vertex quadruples
/// absorb them. Involution cosets need a quadruple whose second pair sits in
/// the opposite color class, so they are routed to non-bipartite components
/// or cross-class quadruples; if the graph cannot host them all the
/// construction refuses and the caller falls back to search.
inline ConstructionRun divisible_by_four_run(const SimpleGraph& g, const AbelianGroup& grp) {
    const int n = g.order();
    if (grp.order() != n) throw std::invalid_argument("group order must equal graph order");
    if (grp.involution_count() < 3) throw std::invalid_argument("group needs at least three involutions");
    auto prof = component_profile(g);
    if (prof.components.empty()) throw std::invalid_argument("empty graph");
    for (const auto& c : prof.components) {
        if (c.order() % 4 != 0) throw std::invalid_argument("component order not divisible by 4");
        if (c.bipartite && (c.classes[0].size() % 2 != 0 || c.classes[1].size() % 2 != 0))
            throw std::invalid_argument("bipartite component with an odd color class");
    }

    const Subgroup I = involution_subgroup(grp);
    const Subgroup gamma = klein_subgroup(grp);
    std::vector<std::vector<GroupElement>> inv_quads =
        I.elements.size() == 4 ? std::vector<std::vector<GroupElement>>{gamma.elements}
                               : coset_decomposition(grp, I, gamma);

    std::vector<std::vector<GroupElement>> noninv_quads;
    {
        std::vector<GroupElement> rem;
        for (const auto& e : grp.all_elements())
            if (!I.contains(e)) rem.push_back(e);
        auto drop = [&](const GroupElement& e) {
            rem.erase(std::find(rem.begin(), rem.end(), e));
        };
        while (!rem.empty()) {
            GroupElement a = rem.front();
            GroupElement na = grp.neg(a);
            drop(a);
            drop(na);
            GroupElement b = rem.front();
            GroupElement nb = grp.neg(b);
            drop(b);
            drop(nb);
            std::vector<GroupElement> quad{a, na, b, nb};
            std::sort(quad.begin(), quad.end());
            noninv_quads.push_back(std::move(quad));
        }
    }

    // per-component vertex pairing and involution-quad capacity
    struct CompPlan {
        const Component* comp;
        std::vector<std::pair<int, int>> apairs, bpairs; // same-class pairs (bipartite)
        int mixed = 0;                                   // cross-class vertex quadruples
        int inv_here = 0;
    };
    auto order = detail::construction_order(prof);
    std::vector<CompPlan> plans;
    for (const Component* c : order) {
        CompPlan pl{c, {}, {}, 0, 0};
        if (c->bipartite) {
            for (std::size_t i = 0; i + 1 < c->classes[0].size(); i += 2)
                pl.apairs.emplace_back(c->classes[0][i], c->classes[0][i + 1]);
            for (std::size_t i = 0; i + 1 < c->classes[1].size(); i += 2)
                pl.bpairs.emplace_back(c->classes[1][i], c->classes[1][i + 1]);
        }
        plans.push_back(std::move(pl));
    }

    long long need = static_cast<long long>(inv_quads.size());
    for (auto& pl : plans) { // non-bipartite components host any quadruple
        if (pl.comp->bipartite) continue;
        long long take = std::min<long long>(need, pl.comp->order() / 4);
        pl.inv_here = static_cast<int>(take);
        need -= take;
    }
    for (auto& pl : plans) {
        if (!pl.comp->bipartite) continue;
        const int alpha = static_cast<int>(pl.apairs.size());
        const int beta = static_cast<int>(pl.bpairs.size());
        const int par = alpha % 2; // alpha and beta share parity: order/2 is even
        int mixed_max = std::min(alpha, beta);
        if (mixed_max % 2 != par) --mixed_max;
        int take = static_cast<int>(std::min<long long>(need, mixed_max));
        int mixed = take;
        if (mixed % 2 != par) {
            if (mixed + 1 <= mixed_max) ++mixed;
            else take = --mixed;
        }
        pl.mixed = mixed;
        pl.inv_here = take;
        need -= take;
    }
    if (need > 0)
        throw std::invalid_argument("not enough cross-class quadruples for the involution cosets");

    detail::PartFeed inv_feed(std::move(inv_quads));
    detail::PartFeed noninv_feed(std::move(noninv_quads));

    EdgeLabeling L = zero_labeling(g, grp);
    std::vector<GroupElement> planned(static_cast<std::size_t>(n), grp.zero());

    auto apply_quad = [&](const std::array<int, 4>& xs, const std::vector<GroupElement>& B, bool involution) {
        if (involution) {
            // phi_o(x1,x2)=b1, phi_e(x1,x3)=b2, phi_e(x1,x4)=b3; x1 ends at b4
            L = phi(g, std::move(L), xs[0], xs[1], WalkParity::odd, B[0]);
            L = phi(g, std::move(L), xs[0], xs[2], WalkParity::even, B[1]);
            L = phi(g, std::move(L), xs[0], xs[3], WalkParity::even, B[2]);
            planned[static_cast<std::size_t>(xs[0])] = B[3];
            planned[static_cast<std::size_t>(xs[1])] = B[0];
            planned[static_cast<std::size_t>(xs[2])] = B[1];
            planned[static_cast<std::size_t>(xs[3])] = B[2];
        } else {
            const GroupElement& b1 = B[0];
            GroupElement nb1 = grp.neg(b1);
            GroupElement b3;
            for (const auto& e : B)
                if (e != b1 && e != nb1) {
                    b3 = e;
                    break;
                }
            GroupElement nb3 = grp.neg(b3);
            L = phi(g, std::move(L), xs[0], xs[1], WalkParity::odd, b1);
            L = phi(g, std::move(L), xs[2], xs[3], WalkParity::odd, b3);
            planned[static_cast<std::size_t>(xs[0])] = b1;
            planned[static_cast<std::size_t>(xs[1])] = nb1;
            planned[static_cast<std::size_t>(xs[2])] = b3;
            planned[static_cast<std::size_t>(xs[3])] = nb3;
        }
    };

    for (const auto& pl : plans) {
        std::vector<std::array<int, 4>> vquads;
        if (pl.comp->bipartite) {
            for (int i = 0; i < pl.mixed; ++i)
                vquads.push_back({pl.apairs[static_cast<std::size_t>(i)].first, pl.apairs[static_cast<std::size_t>(i)].second,
                                  pl.bpairs[static_cast<std::size_t>(i)].first, pl.bpairs[static_cast<std::size_t>(i)].second});
            for (std::size_t i = static_cast<std::size_t>(pl.mixed); i + 1 < pl.apairs.size(); i += 2)
                vquads.push_back({pl.apairs[i].first, pl.apairs[i].second,
                                  pl.apairs[i + 1].first, pl.apairs[i + 1].second});
            for (std::size_t i = static_cast<std::size_t>(pl.mixed); i + 1 < pl.bpairs.size(); i += 2)
                vquads.push_back({pl.bpairs[i].first, pl.bpairs[i].second,
                                  pl.bpairs[i + 1].first, pl.bpairs[i + 1].second});
        } else {
            const auto& vs = pl.comp->vertices;
            for (std::size_t i = 0; i + 3 < vs.size(); i += 4)
                vquads.push_back({vs[i], vs[i + 1], vs[i + 2], vs[i + 3]});
        }
        if (static_cast<int>(vquads.size()) != pl.comp->order() / 4)
            throw std::logic_error("vertex quadruple count mismatch");
        for (std::size_t qi = 0; qi < vquads.size(); ++qi) {
            bool inv = qi < static_cast<std::size_t>(pl.inv_here);
            apply_quad(vquads[qi], inv ? inv_feed.next() : noninv_feed.next(), inv);
        }
    }

    detail::check_construction(g, L, planned, "quadruple construction");
    return {std::move(L), std::move(planned)};
}

inline EdgeLabeling label_divisible_by_four(const SimpleGraph& g, const AbelianGroup& grp) {
    return divisible_by_four_run(g, grp).labeling;
}

// ---- lexicographic blow-ups ----------------------------------------------

struct LexLabeling {
    SimpleGraph product;
    EdgeLabeling labeling;
    std::vector<GroupElement> planned_weights;
};

/// Labels H o K̄_r: the group splits into |V(H)| equal zero-sum parts of size
/// r and every copy x_i^j pushes its element onto the direct edge to a fixed
/// neighbor copy y^1; the anchor's own weight cancels part by part.
inline LexLabeling label_lexicographic(const SimpleGraph& h, int r, const AbelianGroup& grp) {
    if (r < 2) throw std::invalid_argument("blow-up factor must be >= 2");
    for (int v = 0; v < h.order(); ++v)
        if (h.degree(v) == 0) throw std::invalid_argument("base graph has an isolated vertex");
    if (grp.order() != static_cast<long long>(r) * h.order())
        throw std::invalid_argument("group order must be r * |V(H)|");
    if (r % 2 == 1) {
        auto prof = component_profile(h);
        for (const auto& c : prof.components)
            if (c.bipartite && (c.classes[0].size() % 2 != 0 || c.classes[1].size() % 2 != 0))
                throw std::invalid_argument("odd blow-up needs both color classes even in every bipartite component");
    }
    if (r == 2) throw std::invalid_argument("partition infeasible: no zero-sum parts of size 2 cover a group");
    auto zs = equal_size_partition(grp, r);
    if (zs.status == ZsStatus::infeasible)
        throw std::invalid_argument("partition infeasible: group has exactly one involution");
    if (zs.status != ZsStatus::found) throw std::logic_error("equal-size partition search exhausted");

    SimpleGraph G = lexicographic_product(h, r);
    EdgeLabeling L = zero_labeling(G, grp);
    std::vector<GroupElement> planned(static_cast<std::size_t>(G.order()), grp.zero());

    for (int i = 0; i < h.order(); ++i) {
        const int anchor = h.neighbors(i).front() * r; // y^1
        const auto& part = zs.partition.parts[static_cast<std::size_t>(i)];
        for (int j = 0; j < r; ++j) {
            const int copy = i * r + j;
            L = phi(G, std::move(L), copy, anchor, WalkParity::even, part[static_cast<std::size_t>(j)]);
            planned[static_cast<std::size_t>(copy)] = part[static_cast<std::size_t>(j)];
        }
    }

    detail::check_construction(G, L, planned, "lexicographic construction");
    return {std::move(G), std::move(L), std::move(planned)};
}

// ---- strategy dispatcher ---------------------------------------------------

/// Routes to the most specific constructor whose preconditions hold, falling
/// back to exhaustive search. Every found labeling is verified.
inline LabelResult label(const SimpleGraph& g, const AbelianGroup& grp,
                         long long budget = kDefaultSearchBudget) {
    if (grp.order() < g.order()) throw std::invalid_argument("group order below graph order");
    auto prof = component_profile(g);
    bool stars = false;
    bool quad_shape = !prof.components.empty();
    bool p10_shape = !prof.components.empty() && g.order() % 8 == 4;
    for (const auto& c : prof.components) {
        if (star_leaf_count(g, c)) stars = true;
        if (c.order() % 4 != 0) quad_shape = false;
        if (c.order() < 3) p10_shape = false;
        if (c.bipartite && (c.classes[0].size() % 2 != 0 || c.classes[1].size() % 2 != 0)) {
            quad_shape = false;
            p10_shape = false;
        }
    }

    LabelResult res;
    if (grp.order() % 2 == 1 && !stars) {
        res = {LabelStatus::found, star_free_odd_run(g, grp).labeling, "lemma8", 0};
    } else if (quad_shape && grp.order() == g.order() && grp.involution_count() >= 3) {
        try {
            res = {LabelStatus::found, divisible_by_four_run(g, grp).labeling, "quad", 0};
        } catch (const std::invalid_argument&) {
            res = label_search(g, grp, budget); // involution cosets did not fit
        }
    } else if (p10_shape && grp.order() == g.order() && grp.involution_count() == 3) {
        res = {LabelStatus::found, three_involutions_run(g, grp).labeling, "prop10", 0};
    } else {
        res = label_search(g, grp, budget);
    }
    if (res.status == LabelStatus::found && !weights_all_distinct(g, res.labeling))
        throw std::logic_error("dispatcher produced an unverified labeling");
    return res;
}

} // namespace girr
