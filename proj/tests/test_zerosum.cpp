#include "doctest.h"

#include <functional>
#include <set>

#include "girr/zerosum.hpp"

using namespace girr;

namespace {

// Independent oracle: assign elements to parts one element at a time with no
// part-ordering cleverness, just pruning overfull parts. Exponential, only
// for tiny groups.
bool naive_partition_exists(const AbelianGroup& g, const std::vector<int>& sizes, bool exclude_zero) {
    auto elements = g.all_elements();
    if (exclude_zero) elements.erase(elements.begin());
    std::vector<std::vector<GroupElement>> parts(sizes.size());
    std::function<bool(std::size_t)> rec = [&](std::size_t ei) -> bool {
        if (ei == elements.size()) {
            for (std::size_t p = 0; p < parts.size(); ++p) {
                if (static_cast<int>(parts[p].size()) != sizes[p]) return false;
                GroupElement sum = g.zero();
                for (const auto& e : parts[p]) sum = g.add(sum, e);
                if (sum != g.zero()) return false;
            }
            return true;
        }
        std::set<int> tried_empty_sizes; // empty parts of equal size are interchangeable
        for (std::size_t p = 0; p < parts.size(); ++p) {
            if (static_cast<int>(parts[p].size()) == sizes[p]) continue;
            if (parts[p].empty() && !tried_empty_sizes.insert(sizes[p]).second) continue;
            parts[p].push_back(elements[ei]);
            if (rec(ei + 1)) return true;
            parts[p].pop_back();
        }
        return false;
    };
    return rec(0);
}

std::vector<std::vector<int>> size_vectors(int total, int min_part) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int rem, int maxp) {
        if (rem == 0) {
            out.push_back(cur);
            return;
        }
        for (int p = std::min(rem, maxp); p >= min_part; --p) {
            if (rem - p != 0 && rem - p < min_part) continue;
            cur.push_back(p);
            rec(rem - p, p);
            cur.pop_back();
        }
    };
    rec(total, total);
    return out;
}

} // namespace

TEST_CASE("zs_feasible follows the involution classification") {
    CHECK(zs_feasible(AbelianGroup({7}), {3, 3}, true));
    CHECK_FALSE(zs_feasible(AbelianGroup({8}), {3, 2, 2}, true)); // one involution
    CHECK(zs_feasible(AbelianGroup({4, 2}), {3, 2, 2}, true));    // three involutions
    CHECK(zs_feasible(AbelianGroup({7}), {3, 2, 2}, false));
    CHECK_FALSE(zs_feasible(AbelianGroup({8}), {4, 2, 2}, false)); // even order, zero included

    CHECK_THROWS_AS(zs_feasible(AbelianGroup({7}), {3, 2}, true), std::invalid_argument);  // bad sum
    CHECK_THROWS_AS(zs_feasible(AbelianGroup({7}), {4, 1, 1}, true), std::invalid_argument); // size < 2
    CHECK_THROWS_AS(zs_feasible(AbelianGroup({7}), {3, 3, 1}, false), std::invalid_argument); // 1 after first
    CHECK(zs_feasible(AbelianGroup({7}), {1, 3, 3}, false)); // leading size-1 part allowed
}

TEST_CASE("a leading size-1 part gets the identity") {
    auto z7 = AbelianGroup({7});
    auto r = zero_sum_partition(z7, {1, 3, 3}, false);
    REQUIRE(r.status == ZsStatus::found);
    CHECK(r.partition.parts[0] == std::vector<GroupElement>{{0}});
    CHECK(partition_is_valid(z7, r.partition, {1, 3, 3}));
}

TEST_CASE("zero_sum_partition golden examples") {
    auto z7 = AbelianGroup({7});
    auto r = zero_sum_partition(z7, {3, 3}, true);
    REQUIRE(r.status == ZsStatus::found);
    CHECK(r.partition.parts[0] == std::vector<GroupElement>{{1}, {2}, {4}});
    CHECK(r.partition.parts[1] == std::vector<GroupElement>{{3}, {5}, {6}});
    CHECK(partition_is_valid(z7, r.partition, {3, 3}));

    auto klein = AbelianGroup({2, 2});
    auto rk = zero_sum_partition(klein, {3}, true);
    REQUIRE(rk.status == ZsStatus::found);
    CHECK(rk.partition.parts[0] == std::vector<GroupElement>{{0, 1}, {1, 0}, {1, 1}});

    // include-zero: the zero-bearing part is a triple, pairs are {a,-a}
    auto rz = zero_sum_partition(z7, {3, 2, 2}, false);
    REQUIRE(rz.status == ZsStatus::found);
    CHECK(partition_is_valid(z7, rz.partition, {3, 2, 2}));
    CHECK(rz.partition.parts[0].front() == z7.zero());
    for (std::size_t p = 1; p <= 2; ++p)
        CHECK(rz.partition.parts[p][1] == z7.neg(rz.partition.parts[p][0]));

    CHECK(zero_sum_partition(AbelianGroup({8}), {3, 2, 2}, true).status == ZsStatus::infeasible);
}

TEST_CASE("parts come back in the requested size order") {
    auto z7 = AbelianGroup({7});
    auto r = zero_sum_partition(z7, {2, 3, 2}, false);
    REQUIRE(r.status == ZsStatus::found);
    CHECK(r.partition.parts[0].size() == 2);
    CHECK(r.partition.parts[1].size() == 3);
    CHECK(r.partition.parts[2].size() == 2);
    CHECK(partition_is_valid(z7, r.partition, {2, 3, 2}));
}

TEST_CASE("equal_size_partition") {
    auto z9 = AbelianGroup({9});
    auto r = equal_size_partition(z9, 3);
    REQUIRE(r.status == ZsStatus::found);
    CHECK(r.partition.parts[0] == std::vector<GroupElement>{{0}, {1}, {8}});
    CHECK(r.partition.parts[1] == std::vector<GroupElement>{{2}, {3}, {4}});
    CHECK(r.partition.parts[2] == std::vector<GroupElement>{{5}, {6}, {7}});

    auto cube = AbelianGroup({2, 2, 2});
    auto rc = equal_size_partition(cube, 4);
    REQUIRE(rc.status == ZsStatus::found);
    CHECK(partition_is_valid(cube, rc.partition, {4, 4}));

    CHECK(equal_size_partition(AbelianGroup({8}), 4).status == ZsStatus::infeasible); // one involution
    CHECK_THROWS_AS(equal_size_partition(z9, 2), std::invalid_argument);
    CHECK_THROWS_AS(equal_size_partition(z9, 4), std::invalid_argument); // 4 does not divide 9
}

TEST_CASE("pair_partition_odd") {
    auto z7 = AbelianGroup({7});
    auto pairs = pair_partition_odd(z7);
    REQUIRE(pairs.size() == 3);
    CHECK(pairs[0] == std::pair<GroupElement, GroupElement>{{1}, {6}});
    CHECK(pairs[1] == std::pair<GroupElement, GroupElement>{{2}, {5}});
    CHECK(pairs[2] == std::pair<GroupElement, GroupElement>{{3}, {4}});

    CHECK(pair_partition_odd(AbelianGroup({3})).size() == 1);
    CHECK(pair_partition_odd(AbelianGroup({9})).size() == 4);
    CHECK(pair_partition_odd(AbelianGroup({3, 9})).size() == 13);
    CHECK_THROWS_AS(pair_partition_odd(AbelianGroup({8})), std::invalid_argument);
}

TEST_CASE("solver agrees with the naive oracle on feasible instances") {
    for (long long s = 4; s <= 9; ++s) {
        for (const auto& g : enumerate_groups_of_order(s)) {
            for (const auto& sizes : size_vectors(static_cast<int>(s) - 1, 2)) {
                auto res = zero_sum_partition(g, sizes, true);
                bool gate = s % 2 == 1 || g.involution_count() == 3;
                CHECK((res.status == ZsStatus::found) == gate);
                if (res.status == ZsStatus::found) {
                    CHECK(partition_is_valid(g, res.partition, sizes));
                    CHECK(naive_partition_exists(g, sizes, true));
                }
            }
        }
    }
}

TEST_CASE("one-involution groups genuinely admit no partition for any sizes") {
    // total sum of the nonzero elements is the lone involution, not zero
    for (const auto& spec : {"Z4", "Z6", "Z8"}) {
        auto g = parse_group_spec(spec);
        REQUIRE(g.involution_count() == 1);
        for (const auto& sizes : size_vectors(static_cast<int>(g.order()) - 1, 2))
            CHECK_FALSE(naive_partition_exists(g, sizes, true));
    }
}

TEST_CASE("feasible instances solve well within budget up to order 64") {
    for (long long s = 4; s <= 64; ++s) {
        for (const auto& g : enumerate_groups_of_order(s)) {
            if (s % 2 == 0 && g.involution_count() != 3) continue;
            long long n1 = s - 1;
            std::vector<std::vector<int>> vectors;
            if (n1 % 3 == 0) vectors.push_back(std::vector<int>(static_cast<std::size_t>(n1 / 3), 3));
            std::vector<int> pairs_heavy;
            long long rem = n1;
            if (rem % 2 == 1) {
                pairs_heavy.push_back(3);
                rem -= 3;
            }
            while (rem > 0) {
                pairs_heavy.push_back(2);
                rem -= 2;
            }
            if (!pairs_heavy.empty()) vectors.push_back(pairs_heavy);
            for (const auto& v : vectors) {
                auto r = zero_sum_partition(g, v, true);
                REQUIRE(r.status == ZsStatus::found);
                CHECK(partition_is_valid(g, r.partition, v));
            }
        }
    }
}

TEST_CASE("regression: mixed sizes over Z4xZ16") {
    auto g = parse_group_spec("Z4xZ16");
    std::vector<int> sizes{2, 2, 2, 6, 4, 5, 2, 2, 2, 3, 4, 6, 5, 4, 4, 2, 4, 2, 2};
    auto r = zero_sum_partition(g, sizes, true);
    REQUIRE(r.status == ZsStatus::found);
    CHECK(partition_is_valid(g, r.partition, sizes));

    // all-triples over the order-64 groups with three involutions
    for (const auto& spec : {"Z2xZ32", "Z4xZ16", "Z8xZ8"}) {
        auto grp = parse_group_spec(spec);
        std::vector<int> triples(21, 3);
        auto rt = zero_sum_partition(grp, triples, true);
        REQUIRE(rt.status == ZsStatus::found);
        CHECK(partition_is_valid(grp, rt.partition, triples));
    }
}

TEST_CASE("include-zero regime succeeds for every odd order <= 15") {
    for (long long s = 3; s <= 15; s += 2) {
        for (const auto& g : enumerate_groups_of_order(s)) {
            for (const auto& sizes : size_vectors(static_cast<int>(s), 2)) {
                auto res = zero_sum_partition(g, sizes, false);
                REQUIRE(res.status == ZsStatus::found);
                CHECK(partition_is_valid(g, res.partition, sizes));
            }
        }
    }
}
