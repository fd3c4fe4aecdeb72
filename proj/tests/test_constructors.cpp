#include "doctest.h"

#include <set>

#include "girr/constructors.hpp"
#include "helpers.hpp"

using namespace girr;

namespace {

bool is_zero_sum(const AbelianGroup& g, const std::vector<GroupElement>& part) {
    GroupElement s = g.zero();
    for (const auto& e : part) s = g.add(s, e);
    return s == g.zero();
}

std::vector<GroupElement> weights_of(const SimpleGraph& g, const EdgeLabeling& L,
                                     const std::vector<int>& verts) {
    auto w = weights(g, L);
    std::vector<GroupElement> out;
    for (int v : verts) out.push_back(w[static_cast<std::size_t>(v)]);
    return out;
}

} // namespace

TEST_CASE("star-free odd construction on the sample graphs") {
    auto two_c4 = disjoint_union(make_cycle(4), make_cycle(4));
    auto r1 = star_free_odd_run(two_c4, AbelianGroup({9}));
    CHECK(weights_all_distinct(two_c4, r1.labeling));

    auto c3c4 = disjoint_union(make_complete(3), make_cycle(4));
    auto r2 = star_free_odd_run(c3c4, AbelianGroup({7}));
    CHECK(weights_all_distinct(c3c4, r2.labeling));
    // t = n: all seven weights used
    auto w = weights(c3c4, r2.labeling);
    std::set<GroupElement> used(w.begin(), w.end());
    CHECK(used.size() == 7);

    // p1 case: both color classes odd, the six-phi_e double triple
    auto c6 = make_cycle(6);
    auto r3 = star_free_odd_run(c6, AbelianGroup({7}));
    CHECK(weights_all_distinct(c6, r3.labeling));
}

TEST_CASE("star-free structural shape: triples and inverse pairs") {
    auto c3c4 = disjoint_union(make_complete(3), make_cycle(4));
    AbelianGroup z7({7});
    auto run = star_free_odd_run(c3c4, z7);
    // the K3 (vertices 0..2) carries a zero-sum triple
    CHECK(is_zero_sum(z7, weights_of(c3c4, run.labeling, {0, 1, 2})));
    // the C4 vertices pair into {d, -d} within color classes {3,5} and {4,6}
    auto w = weights(c3c4, run.labeling);
    CHECK(w[5] == z7.neg(w[3]));
    CHECK(w[6] == z7.neg(w[4]));
}

TEST_CASE("star-free odd covers every class for every odd order in [n, n+5]") {
    std::vector<SimpleGraph> graphs = {
        make_cycle(6),                                       // p1
        make_cycle(4),                                       // p2
        make_path(5),                                        // p3
        make_cycle(5),                                       // p4
        make_complete(4),                                    // p5
        disjoint_union(make_path(5), make_cycle(5)),         // p3 + p4
        disjoint_union(make_cycle(6), make_complete(4)),     // p1 + p5
    };
    for (const auto& g : graphs) {
        for (long long t = g.order(); t <= g.order() + 5; ++t) {
            if (t % 2 == 0) continue;
            for (const auto& grp : enumerate_groups_of_order(t)) {
                auto run = star_free_odd_run(g, grp);
                CHECK(weights_all_distinct(g, run.labeling));
            }
        }
    }
}

TEST_CASE("star-free odd rejects bad input") {
    CHECK_THROWS_AS(star_free_odd_run(make_cycle(4), AbelianGroup({4})), std::invalid_argument);  // even order
    CHECK_THROWS_AS(star_free_odd_run(make_cycle(6), AbelianGroup({5})), std::invalid_argument);  // t < n
    CHECK_THROWS_AS(star_free_odd_run(make_star(3), AbelianGroup({5})), std::invalid_argument);   // star
    CHECK_THROWS_AS(star_free_odd_run(disjoint_union(make_cycle(4), make_path(3)), AbelianGroup({7})),
                    std::invalid_argument); // P3 component is K_{1,2}
}

TEST_CASE("powers of two over Z_p") {
    auto g = disjoint_union(make_complete(3), make_complete(4));
    auto r = label_powers_of_two(g);
    CHECK(r.prime == 17); // smallest prime above 2^4
    CHECK(r.labeling.group == AbelianGroup({17}));
    CHECK(weights_all_distinct(g, r.labeling));
    // paper bound: weights below 2^{n-m-1} as integers
    for (const auto& w : weights(g, r.labeling)) CHECK(w[0] < 16);

    auto c5 = make_cycle(5);
    auto r5 = label_powers_of_two(c5);
    CHECK(r5.prime == 11);
    CHECK(weights_all_distinct(c5, r5.labeling));

    // all components of order 3 still get a valid Z_p labeling
    auto two_k3 = disjoint_union(make_complete(3), make_complete(3));
    auto rk = label_powers_of_two(two_k3);
    CHECK(rk.prime == 11); // n - m - 1 = 3
    CHECK(weights_all_distinct(two_k3, rk.labeling));

    auto p3s = disjoint_union(make_path(3), make_path(3));
    auto rp = label_powers_of_two(p3s);
    CHECK(weights_all_distinct(p3s, rp.labeling));

    CHECK_THROWS_AS(label_powers_of_two(disjoint_union(make_path(2), make_complete(3))),
                    std::invalid_argument); // order-2 component
    CHECK_THROWS_AS(label_powers_of_two(make_cycle(40), 30), std::invalid_argument); // cap
}

TEST_CASE("powers of two on random star-free graphs") {
    std::mt19937 rng(4242);
    int done = 0;
    while (done < 15) {
        auto g = girr::testing::random_graph(rng, 10, 0.5);
        if (has_small_or_star_components(g)) continue;
        auto prof = component_profile(g);
        int exponent = g.order() - static_cast<int>(prof.components.size()) - 1;
        if (exponent > 20) continue;
        auto r = label_powers_of_two(g);
        CHECK(weights_all_distinct(g, r.labeling));
        bool has_big = false;
        for (const auto& c : prof.components) has_big = has_big || c.order() >= 4;
        if (has_big) // forest-edge path: integer weights stay under 2^{n-m-1}
            for (const auto& w : weights(g, r.labeling)) CHECK(w[0] < (1LL << exponent));
        ++done;
    }
}

TEST_CASE("three-involution construction") {
    auto three_c4 = disjoint_union(disjoint_union(make_cycle(4), make_cycle(4)), make_cycle(4));
    auto grp223 = parse_group_spec("Z2xZ2xZ3");
    REQUIRE(grp223.involution_count() == 3);
    auto r = three_involutions_run(three_c4, grp223);
    CHECK(weights_all_distinct(three_c4, r.labeling));

    auto c4c8 = disjoint_union(make_cycle(4), make_cycle(8));
    auto r2 = three_involutions_run(c4c8, parse_group_spec("Z2xZ6"));
    CHECK(weights_all_distinct(c4c8, r2.labeling));

    // odd components only: the p2 = 0 branch builds a triple from {0} and a pair
    auto four_k3 = disjoint_union(disjoint_union(make_complete(3), make_complete(3)),
                                  disjoint_union(make_complete(3), make_complete(3)));
    auto r3 = three_involutions_run(four_k3, grp223);
    CHECK(weights_all_distinct(four_k3, r3.labeling));

    auto c3c9 = disjoint_union(make_complete(3), make_cycle(9));
    auto r4 = three_involutions_run(c3c9, grp223);
    CHECK(weights_all_distinct(c3c9, r4.labeling));
}

TEST_CASE("three-involution preconditions") {
    auto c12 = make_cycle(12);
    CHECK_THROWS_AS(three_involutions_run(c12, AbelianGroup({12})), std::invalid_argument); // 1 involution
    CHECK_THROWS_AS(three_involutions_run(make_cycle(8), parse_group_spec("Z2xZ4")),
                    std::invalid_argument); // n = 0 (mod 8)
    CHECK_THROWS_AS(three_involutions_run(disjoint_union(make_cycle(6), make_cycle(6)), parse_group_spec("Z2xZ6")),
                    std::invalid_argument); // odd color classes
}

TEST_CASE("quadruple construction for components divisible by four") {
    auto two_c4 = disjoint_union(make_cycle(4), make_cycle(4));
    AbelianGroup cube({2, 2, 2});
    auto r = divisible_by_four_run(two_c4, cube);
    CHECK(weights_all_distinct(two_c4, r.labeling));
    auto w = weights(two_c4, r.labeling);
    std::set<GroupElement> used(w.begin(), w.end());
    CHECK(used.size() == 8); // all of the group

    // first component carries the Klein subgroup itself
    auto gamma = klein_subgroup(cube);
    std::vector<GroupElement> first(w.begin(), w.begin() + 4);
    std::sort(first.begin(), first.end());
    CHECK(first == gamma.elements);

    auto r2 = divisible_by_four_run(two_c4, parse_group_spec("Z4xZ2"));
    CHECK(weights_all_distinct(two_c4, r2.labeling));

    auto c4c8 = disjoint_union(make_cycle(4), make_cycle(8));
    auto r3 = divisible_by_four_run(c4c8, parse_group_spec("Z2xZ6"));
    CHECK(weights_all_distinct(c4c8, r3.labeling));

    CHECK_THROWS_AS(divisible_by_four_run(disjoint_union(make_cycle(4), make_cycle(6)), AbelianGroup({10})),
                    std::invalid_argument); // 6 not divisible by 4
    CHECK_THROWS_AS(divisible_by_four_run(two_c4, AbelianGroup({8})), std::invalid_argument); // 1 involution
}

TEST_CASE("involution quadruple weights follow the coset pattern") {
    // non-bipartite components, every quadruple unconstrained
    auto two_k4 = disjoint_union(make_complete(4), make_complete(4));
    AbelianGroup cube({2, 2, 2});
    auto r = divisible_by_four_run(two_k4, cube);
    auto w = weights(two_k4, r.labeling);
    // x1 of the first quadruple ends at b4, the largest coset element
    auto gamma = klein_subgroup(cube).elements;
    CHECK(w[0] == gamma[3]);
    CHECK(w[1] == gamma[0]);
    CHECK(w[2] == gamma[1]);
    CHECK(w[3] == gamma[2]);
}

TEST_CASE("quadruple capacity shortfall falls back to search in the dispatcher") {
    // K_{2,6} has one cross-class quadruple but Z_2^3 brings two involution cosets
    auto k26 = make_complete_bipartite(2, 6);
    AbelianGroup cube({2, 2, 2});
    CHECK_THROWS_AS(divisible_by_four_run(k26, cube), std::invalid_argument);
    auto r = label(k26, cube);
    REQUIRE(r.status == LabelStatus::found);
    CHECK(r.strategy == "search");
    CHECK(weights_all_distinct(k26, r.labeling));
}

TEST_CASE("lexicographic blow-up labeling") {
    auto k2 = make_path(2);
    auto lex = label_lexicographic(k2, 4, AbelianGroup({2, 2, 2}));
    CHECK(lex.product == make_complete_bipartite(4, 4));
    CHECK(weights_all_distinct(lex.product, lex.labeling));

    auto c3 = make_cycle(3);
    auto lex2 = label_lexicographic(c3, 5, AbelianGroup({15}));
    CHECK(lex2.product.order() == 15);
    CHECK(weights_all_distinct(lex2.product, lex2.labeling));
    auto w = weights(lex2.product, lex2.labeling);
    CHECK(std::set<GroupElement>(w.begin(), w.end()).size() == 15);

    CHECK_THROWS_AS(label_lexicographic(k2, 1, AbelianGroup({2})), std::invalid_argument);
    CHECK_THROWS_AS(label_lexicographic(k2, 2, AbelianGroup({4})), std::invalid_argument);
    CHECK_THROWS_AS(label_lexicographic(SimpleGraph(3, {{0, 1}}), 4, AbelianGroup({12})),
                    std::invalid_argument); // isolated vertex
    CHECK_THROWS_AS(label_lexicographic(make_path(3), 5, AbelianGroup({15})),
                    std::invalid_argument); // odd blow-up, odd color class
    CHECK_THROWS_AS(label_lexicographic(k2, 4, AbelianGroup({8})), std::invalid_argument); // one involution
}

TEST_CASE("three-involution construction with a non-bipartite even component") {
    // K4 hosts the dedicated quadruple, K3 and C5 take triples
    auto g1 = disjoint_union(make_complete(4), make_cycle(8));
    auto g2 = disjoint_union(disjoint_union(make_complete(4), make_complete(3)), make_cycle(5));
    for (const auto& g : {g1, g2}) {
        auto run = three_involutions_run(g, parse_group_spec("Z2xZ6"));
        CHECK(weights_all_distinct(g, run.labeling));
    }
}

TEST_CASE("three-involution construction at order 20") {
    auto grp = parse_group_spec("Z2xZ10");
    REQUIRE(grp.involution_count() == 3);
    auto g1 = disjoint_union(make_cycle(4), make_cycle(16));
    auto g2 = disjoint_union(disjoint_union(make_cycle(5), make_cycle(7)),
                             disjoint_union(make_cycle(4), make_cycle(4)));
    for (const auto& g : {g1, g2}) {
        REQUIRE(g.order() % 8 == 4);
        auto run = three_involutions_run(g, grp);
        CHECK(weights_all_distinct(g, run.labeling));
    }
}

TEST_CASE("quadruple construction with a biclique component") {
    auto g = disjoint_union(make_complete_bipartite(4, 4), make_cycle(4));
    auto run = divisible_by_four_run(g, parse_group_spec("Z2xZ6"));
    CHECK(weights_all_distinct(g, run.labeling));
}

TEST_CASE("quadruple construction across group shapes at order 16") {
    auto g = disjoint_union(disjoint_union(make_cycle(4), make_complete(4)), make_cycle(8));
    for (const auto& grp : enumerate_groups_of_order(16)) {
        if (grp.involution_count() < 3) continue; // Z16 routes elsewhere
        auto run = divisible_by_four_run(g, grp);
        CHECK(weights_all_distinct(g, run.labeling));
    }
    // Z_2^4 turns the whole group into involution cosets
    auto all_inv = divisible_by_four_run(g, AbelianGroup({2, 2, 2, 2}));
    CHECK(weights_all_distinct(g, all_inv.labeling));
}

TEST_CASE("blow-up labelings across factors and groups") {
    auto k3 = make_complete(3);
    for (const auto& grp : enumerate_groups_of_order(9)) {
        auto lex = label_lexicographic(k3, 3, grp);
        CHECK(weights_all_distinct(lex.product, lex.labeling));
    }
    auto c4 = make_cycle(4);
    for (const auto& grp : enumerate_groups_of_order(24)) {
        if (grp.involution_count() == 1) continue;
        auto lex = label_lexicographic(c4, 6, grp);
        CHECK(weights_all_distinct(lex.product, lex.labeling));
    }
}

TEST_CASE("dispatcher agrees with raw search on small instances") {
    std::mt19937 rng(2025);
    int done = 0;
    while (done < 25) {
        auto g = girr::testing::random_graph(rng, 6, 0.5);
        for (long long t = g.order(); t <= g.order() + 2 && t <= 9; ++t) {
            for (const auto& grp : enumerate_groups_of_order(std::max<long long>(t, 1))) {
                auto routed = label(g, grp);
                auto searched = label_search(g, grp);
                REQUIRE(routed.status != LabelStatus::unknown);
                REQUIRE(searched.status != LabelStatus::unknown);
                CHECK(routed.status == searched.status);
                if (routed.status == LabelStatus::found)
                    CHECK(weights_all_distinct(g, routed.labeling));
            }
        }
        ++done;
    }
}

TEST_CASE("dispatcher routes to the most specific constructor") {
    auto c7 = make_cycle(7);
    auto r1 = label(c7, AbelianGroup({7}));
    CHECK(r1.strategy == "lemma8");
    CHECK(r1.status == LabelStatus::found);

    auto two_c4 = disjoint_union(make_cycle(4), make_cycle(4));
    auto r2 = label(two_c4, AbelianGroup({8})); // one involution, quad shape unusable
    CHECK(r2.strategy == "search");
    CHECK(r2.status == LabelStatus::found);

    auto r3 = label(two_c4, AbelianGroup({2, 2, 2}));
    CHECK(r3.strategy == "quad");
    CHECK(r3.status == LabelStatus::found);

    // n = 12 with order-3 components: quad shape fails, prop10 applies
    auto four_k3 = disjoint_union(disjoint_union(make_complete(3), make_complete(3)),
                                  disjoint_union(make_complete(3), make_complete(3)));
    auto r4 = label(four_k3, parse_group_spec("Z2xZ2xZ3"));
    CHECK(r4.strategy == "prop10");
    CHECK(r4.status == LabelStatus::found);

    auto two_k3 = disjoint_union(make_complete(3), make_complete(3));
    auto r5 = label(two_k3, AbelianGroup({6}));
    CHECK(r5.status == LabelStatus::none_exists);

    CHECK_THROWS_AS(label(make_cycle(6), AbelianGroup({5})), std::invalid_argument);
}
