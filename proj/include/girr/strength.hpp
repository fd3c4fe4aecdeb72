#pragma once

// Closed-form values, bounds and the exact brute-force oracles for the group
// irregularity strength s_g(G) and the modular edge-gracefulness k(G).

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "girr/abelian.hpp"
#include "girr/constructors.hpp"
#include "girr/graph.hpp"
#include "girr/labeling.hpp"
#include "girr/prime.hpp"

namespace girr {

struct VerificationReport {
    bool ok = false;
    WeightMap weight_map;
    std::optional<std::pair<int, int>> collision; // smallest colliding vertex pair
};

/// Recomputes every weighted degree and reports the lexicographically
/// smallest collision, if any.
inline VerificationReport verify(const SimpleGraph& g, const AbelianGroup& grp, const EdgeLabeling& L) {
    if (!(L.group == grp)) throw std::invalid_argument("labeling lives in a different group");
    VerificationReport rep;
    rep.weight_map = weights(g, L); // throws when the labeling does not match the edge set
    rep.ok = true;
    for (int u = 0; u < g.order() && rep.ok; ++u)
        for (int v = u + 1; v < g.order(); ++v)
            if (rep.weight_map[static_cast<std::size_t>(u)] == rep.weight_map[static_cast<std::size_t>(v)]) {
                rep.ok = false;
                rep.collision = {u, v};
                break;
            }
    return rep;
}

struct StrengthResult {
    bool exact = false;
    long long lower = 0;
    std::optional<long long> upper; // empty: no upper bound known
    std::string provenance;

    long long value() const {
        if (!exact) throw std::logic_error("not an exact strength result");
        return lower;
    }

    static StrengthResult make_exact(long long v, std::string prov) {
        return {true, v, v, std::move(prov)};
    }
    static StrengthResult make_range(long long lo, std::optional<long long> up, std::string prov) {
        return {false, lo, up, std::move(prov)};
    }
};

/// n distinct weights always need n elements; for n = 2 (mod 4) no group of
/// order n admits an irregular labeling at all.
inline long long sg_lower_bound(const SimpleGraph& g) {
    long long n = g.order();
    return n % 4 == 2 ? n + 1 : n;
}

namespace detail {

// leaf count u of the exceptional stars K_{1, 3^{2q+1}-2}, q >= 1
inline bool is_exceptional_star_size(long long u) {
    long long v = u + 2;
    int k = 0;
    while (v % 3 == 0) {
        v /= 3;
        ++k;
    }
    return v == 1 && k >= 3 && k % 2 == 1;
}

} // namespace detail

/// Exact s_g for connected graphs of order n >= 3: the exceptional stars need
/// n+2, orders 2 (mod 4) need n+1, everything else n.
inline StrengthResult sg_formula_connected(const SimpleGraph& g) {
    auto prof = component_profile(g);
    if (prof.components.size() != 1) throw std::invalid_argument("graph is not connected");
    const long long n = g.order();
    if (n < 3) throw std::invalid_argument("connected formula needs n >= 3");
    if (auto star = star_leaf_count(g, prof.components.front());
        star && detail::is_exceptional_star_size(*star))
        return StrengthResult::make_exact(n + 2, "connected formula, exceptional star");
    if (n % 4 == 2) return StrengthResult::make_exact(n + 1, "connected formula");
    return StrengthResult::make_exact(n, "connected formula");
}

/// Modular edge-gracefulness: exact for connected graphs of order >= 3 and
/// for graphs with neither small components nor odd stars; n = 0 (mod 4)
/// disconnected graphs get the range [n, n+1].
inline StrengthResult k_formula(const SimpleGraph& g) {
    auto prof = component_profile(g);
    const long long n = g.order();
    if (prof.components.size() == 1 && n >= 3)
        return StrengthResult::make_exact(n % 4 == 2 ? n + 1 : n, "connected k formula");

    bool covered = !prof.components.empty();
    for (const auto& c : prof.components) {
        if (c.order() < 3) covered = false;
        if (auto star = star_leaf_count(g, c); star && *star >= 3 && *star % 2 == 1)
            covered = false; // K_{1,2u+1} components are excluded
    }
    if (!covered) return StrengthResult::make_range(n, std::nullopt, "uncovered");
    if (n % 2 == 1) return StrengthResult::make_exact(n, "disconnected k formula");
    if (n % 4 == 2) return StrengthResult::make_exact(n + 1, "disconnected k formula");
    return StrengthResult::make_range(n, n + 1, "disconnected k formula");
}

/// Most precise s_g statement the case ladder supports for the input.
inline StrengthResult sg_formula(const SimpleGraph& g, int pow2_exponent_cap = 30) {
    auto prof = component_profile(g);
    const long long n = g.order();
    const long long m = static_cast<long long>(prof.components.size());
    if (prof.components.size() == 1 && n >= 3) return sg_formula_connected(g);
    if (prof.components.empty()) return StrengthResult::make_range(0, std::nullopt, "empty graph");

    bool quad_shape = true, classes_even = true, small = false, stars = false;
    for (const auto& c : prof.components) {
        if (c.order() % 4 != 0) quad_shape = false;
        if (c.order() < 3) small = true;
        if (c.bipartite && (c.classes[0].size() % 2 != 0 || c.classes[1].size() % 2 != 0))
            classes_even = false;
        if (star_leaf_count(g, c)) stars = true;
    }
    if (quad_shape && classes_even)
        return StrengthResult::make_exact(n, "all component orders divisible by 4");
    if (n % 8 == 4 && !small && classes_even)
        return StrengthResult::make_exact(n, "three-involution case, n = 4 (mod 8)");
    if (stars) {
        if (!small && n - m - 1 <= pow2_exponent_cap)
            return StrengthResult::make_range(sg_lower_bound(g), next_prime_above(1LL << (n - m - 1)),
                                              "stars present; prime upper bound");
        return StrengthResult::make_range(sg_lower_bound(g), std::nullopt, "stars present");
    }
    if (n % 2 == 1) return StrengthResult::make_exact(n, "star-free formula");
    if (n % 4 == 2) return StrengthResult::make_exact(n + 1, "star-free formula");
    return StrengthResult::make_range(n, n + 1, "star-free formula");
}

/// Caller-declared lexicographic structure G = H o K̄_r; exact values for
/// even r >= 4 and, with even color classes, odd r >= 5.
inline StrengthResult sg_formula_lex(const SimpleGraph& h, int r) {
    for (int v = 0; v < h.order(); ++v)
        if (h.degree(v) == 0) throw std::invalid_argument("base graph has an isolated vertex");
    const long long n = h.order();
    const long long order = n * r;
    if (r >= 4 && r % 2 == 0) {
        bool half_even = (r / 2 * n) % 2 == 0;
        return StrengthResult::make_exact(half_even ? order : order + 1, "even blow-up");
    }
    if (r >= 5 && r % 2 == 1) {
        auto prof = component_profile(h);
        bool classes_even = true;
        for (const auto& c : prof.components)
            if (c.bipartite && (c.classes[0].size() % 2 != 0 || c.classes[1].size() % 2 != 0))
                classes_even = false;
        if (classes_even)
            return StrengthResult::make_exact(n % 4 == 2 ? order + 1 : order, "odd blow-up");
    }
    return sg_formula(lexicographic_product(h, r));
}

/// Definition-level oracle: the smallest s such that every Abelian group of
/// order s admits an irregular labeling, each group checked by exhaustive
/// search. Intended for desk scale (n <= 9, |E| <= 12, max_s <= 16).
inline StrengthResult sg_exact_bruteforce(const SimpleGraph& g, long long max_s = 16,
                                          long long budget = kDefaultSearchBudget) {
    const long long lb = std::max<long long>(1, sg_lower_bound(g));
    std::optional<long long> first_uncertain;
    for (long long s = lb; s <= max_s; ++s) {
        bool all_ok = true, uncertain = false;
        for (const auto& grp : enumerate_groups_of_order(s)) {
            auto r = label_search(g, grp, budget);
            if (r.status == LabelStatus::none_exists) {
                all_ok = false;
                break;
            }
            if (r.status == LabelStatus::unknown) uncertain = true;
        }
        if (!all_ok) continue;
        if (uncertain) {
            if (!first_uncertain) first_uncertain = s;
            continue;
        }
        if (!first_uncertain) return StrengthResult::make_exact(s, "bruteforce");
        return StrengthResult::make_range(*first_uncertain, s, "bruteforce, budget exhausted below");
    }
    if (first_uncertain)
        return StrengthResult::make_range(*first_uncertain, std::nullopt, "bruteforce, budget exhausted");
    return StrengthResult::make_range(std::max(lb, max_s + 1), std::nullopt,
                                      "bruteforce, no admissible order found");
}

/// Same oracle over cyclic groups only: smallest k >= n with a Z_k-irregular
/// labeling.
inline StrengthResult k_exact_bruteforce(const SimpleGraph& g, long long max_k = 16,
                                         long long budget = kDefaultSearchBudget) {
    const long long lb = std::max<long long>(g.order(), 1);
    std::optional<long long> first_uncertain;
    for (long long k = lb; k <= max_k; ++k) {
        auto r = label_search(g, AbelianGroup({k}), budget);
        if (r.status == LabelStatus::unknown) {
            if (!first_uncertain) first_uncertain = k;
            continue;
        }
        if (r.status == LabelStatus::none_exists) continue;
        if (!first_uncertain) return StrengthResult::make_exact(k, "bruteforce");
        return StrengthResult::make_range(*first_uncertain, k, "bruteforce, budget exhausted below");
    }
    if (first_uncertain)
        return StrengthResult::make_range(*first_uncertain, std::nullopt, "bruteforce, budget exhausted");
    return StrengthResult::make_range(std::max(lb, max_k + 1), std::nullopt,
                                      "bruteforce, no admissible order found");
}

} // namespace girr
