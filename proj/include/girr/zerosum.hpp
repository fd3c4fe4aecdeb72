#pragma once

// Zero-sum partitions of group element sets into parts of prescribed sizes.
// The solver is a backtracking search over element-led parts with each
// part's last slot forced to the negated partial sum, plus capacity pruning
// from the parity and inverse-pair structure. Feasibility predicates based
// on the involution structure gate the search.

#include <algorithm>
#include <numeric>
#include <optional>
#include <random>
#include <stdexcept>
#include <vector>

#include "girr/abelian.hpp"

namespace girr {

inline constexpr long long kDefaultZsBudget = 10'000'000;

enum class ZsStatus { found, infeasible, budget_exhausted };

struct ZeroSumPartition {
    std::vector<std::vector<GroupElement>> parts; // each sorted ascending
    bool excludes_zero = false;
};

struct ZsResult {
    ZsStatus status = ZsStatus::infeasible;
    ZeroSumPartition partition;
    long long nodes_used = 0;
};

namespace detail {

// Element-driven backtracking: every new part opens with the first unused
// element in the current exploration order (equal-size parts are
// interchangeable, so only the size class of that part is branched), later
// slots take elements in that same order, and the last slot is forced to the
// negated partial sum. The first round explores in lexicographic element
// order; if its node chunk runs out, further rounds retry under seeded
// deterministic permutations with growing chunks. A round that exhausts the
// space without success settles infeasibility exactly.
class ZeroSumSolver {
  public:
    ZeroSumSolver(const AbelianGroup& g, bool exclude_zero, long long budget)
        : g_(g), budget_(budget) {
        elements_ = g.all_elements();
        if (exclude_zero) elements_.erase(elements_.begin()); // zero sorts first
    }

    // sizes must be sorted descending
    ZsResult solve(const std::vector<int>& sizes) {
        class_sizes_.clear();
        class_counts_.clear();
        for (int s : sizes) {
            if (class_sizes_.empty() || class_sizes_.back() != s) {
                class_sizes_.push_back(s);
                class_counts_.push_back(1);
            } else {
                ++class_counts_.back();
            }
        }

        ZsResult res;
        long long total_nodes = 0;
        long long chunk = std::min<long long>(budget_, 1 << 17);
        for (unsigned round = 0; total_nodes < budget_; ++round) {
            by_rank_.resize(elements_.size());
            rank_of_.resize(elements_.size());
            for (std::size_t i = 0; i < elements_.size(); ++i) by_rank_[i] = static_cast<int>(i);
            if (round > 0) {
                std::mt19937 rng(round);
                std::shuffle(by_rank_.begin(), by_rank_.end(), rng);
            }
            for (std::size_t r = 0; r < by_rank_.size(); ++r)
                rank_of_[static_cast<std::size_t>(by_rank_[r])] = static_cast<int>(r);

            open_ = static_cast<int>(sizes.size());
            used_.assign(elements_.size(), 0);
            found_.assign(class_sizes_.size(), {});
            nodes_ = 0;
            round_budget_ = std::min(chunk, budget_ - total_nodes);
            exhausted_ = false;
            init_parity_pruning(sizes);
            init_pair_pruning(sizes);

            bool ok = rec();
            total_nodes += nodes_;
            res.nodes_used = total_nodes;
            if (ok) {
                res.status = ZsStatus::found;
                // canonicalize and hand back one size class at a time
                std::vector<std::vector<std::vector<GroupElement>>> by_class(class_sizes_.size());
                for (std::size_t ci = 0; ci < found_.size(); ++ci) {
                    for (const auto& idxs : found_[ci]) {
                        std::vector<GroupElement> part;
                        for (int i : idxs) part.push_back(elements_[static_cast<std::size_t>(i)]);
                        std::sort(part.begin(), part.end());
                        by_class[ci].push_back(std::move(part));
                    }
                    std::sort(by_class[ci].begin(), by_class[ci].end());
                }
                std::vector<std::size_t> taken(class_sizes_.size(), 0);
                for (int s : sizes) {
                    std::size_t ci = class_index(s);
                    res.partition.parts.push_back(std::move(by_class[ci][taken[ci]++]));
                }
                return res;
            }
            if (!exhausted_) {
                res.status = ZsStatus::infeasible; // a full round settles it
                return res;
            }
            chunk *= 4;
        }
        res.status = ZsStatus::budget_exhausted;
        return res;
    }

  private:
    std::size_t class_index(int s) const {
        for (std::size_t i = 0; i < class_sizes_.size(); ++i)
            if (class_sizes_[i] == s) return i;
        throw std::logic_error("unknown part size");
    }

    // A zero-sum part contains an even number of elements from each
    // index-2 coset class, so a part of size s absorbs at most 2*floor(s/2)
    // of them. Tracking the unused count per parity functional against the
    // remaining absorption capacity kills odd-heavy dead ends near the root.
    void init_parity_pruning(const std::vector<int>& sizes) {
        functional_of_.clear();
        parity_count_.clear();
        capacity_ = 0;
        int p = 0;
        for (long long d : g_.factors())
            if (d % 2 == 0) ++p;
        if (p == 0 || p > 6) return; // odd groups have no constraint; keep the table small
        const int funcs = (1 << p) - 1;
        functional_of_.assign(elements_.size(), 0);
        parity_count_.assign(static_cast<std::size_t>(funcs) + 1, 0);
        for (std::size_t i = 0; i < elements_.size(); ++i) {
            int cls = 0, bit = 0;
            for (std::size_t k = 0; k < g_.factors().size(); ++k) {
                if (g_.factors()[k] % 2 != 0) continue;
                if (elements_[i][k] % 2 != 0) cls |= 1 << bit;
                ++bit;
            }
            unsigned mask = 0;
            for (int h = 1; h <= funcs; ++h)
                if (__builtin_popcount(static_cast<unsigned>(h & cls)) % 2 == 1) mask |= 1u << (h - 1);
            functional_of_[i] = mask;
            for (int h = 1; h <= funcs; ++h)
                if (mask & (1u << (h - 1))) ++parity_count_[static_cast<std::size_t>(h)];
        }
        for (int s : sizes) capacity_ += 2 * (s / 2);
    }

    // Pairs are forced {a, -a}; involutions, zero and elements whose inverse
    // is already consumed only fit in parts of size >= 3.
    void init_pair_pruning(const std::vector<int>& sizes) {
        inv_idx_.resize(elements_.size());
        unpairable_ = 0;
        for (std::size_t i = 0; i < elements_.size(); ++i) {
            GroupElement n = g_.neg(elements_[i]);
            auto it = std::lower_bound(elements_.begin(), elements_.end(), n);
            inv_idx_[i] = static_cast<int>(it - elements_.begin());
            if (inv_idx_[i] == static_cast<int>(i)) ++unpairable_;
        }
        cap3_ = 0;
        for (int s : sizes)
            if (s >= 3) cap3_ += s;
    }

    void mark(int idx, int delta) {
        used_[static_cast<std::size_t>(idx)] = delta > 0;
        const int inv = inv_idx_[static_cast<std::size_t>(idx)];
        if (inv == idx)
            unpairable_ -= delta;
        else if (used_[static_cast<std::size_t>(inv)])
            unpairable_ -= delta; // both gone now (or one restored)
        else
            unpairable_ += delta; // the partner just lost (or regained) its mate
        if (functional_of_.empty()) return;
        unsigned mask = functional_of_[static_cast<std::size_t>(idx)];
        for (std::size_t h = 1; h < parity_count_.size(); ++h)
            if (mask & (1u << (h - 1))) parity_count_[h] -= delta; // counts track unused elements
    }

    bool parity_blocked() const {
        if (unpairable_ > cap3_) return true;
        if (functional_of_.empty()) return false;
        for (std::size_t h = 1; h < parity_count_.size(); ++h)
            if (parity_count_[h] > capacity_) return true;
        return false;
    }

    bool rec() {
        if (open_ == 0) return true;
        if (parity_blocked()) return false;
        int er = 0;
        while (er < static_cast<int>(by_rank_.size()) &&
               used_[static_cast<std::size_t>(by_rank_[static_cast<std::size_t>(er)])])
            ++er;
        if (er == static_cast<int>(by_rank_.size())) return false; // parts left but no elements
        const int e = by_rank_[static_cast<std::size_t>(er)];
        for (std::size_t ci = 0; ci < class_sizes_.size(); ++ci) {
            if (class_counts_[ci] == 0) continue;
            if (++nodes_ > round_budget_) {
                exhausted_ = true;
                return false;
            }
            const int s = class_sizes_[ci];
            if (s == 2 && (inv_idx_[static_cast<std::size_t>(e)] == e ||
                           used_[static_cast<std::size_t>(inv_idx_[static_cast<std::size_t>(e)])]))
                continue; // e cannot head a pair
            mark(e, +1);
            std::vector<int> part{e};
            if (s == 1) {
                if (elements_[static_cast<std::size_t>(e)] == g_.zero() && close_part(ci, part)) return true;
            } else if (fill(ci, part, 1, er + 1, elements_[static_cast<std::size_t>(e)], er)) {
                return true;
            }
            mark(e, -1);
            if (exhausted_) return false;
        }
        return false;
    }

    bool fill(std::size_t ci, std::vector<int>& part, int slot, int min_rank, const GroupElement& sum,
              int last_rank) {
        const int s = class_sizes_[ci];
        if (slot == s - 1) {
            if (++nodes_ > round_budget_) {
                exhausted_ = true;
                return false;
            }
            GroupElement need = g_.neg(sum);
            auto it = std::lower_bound(elements_.begin(), elements_.end(), need);
            if (it == elements_.end() || *it != need) return false;
            int idx = static_cast<int>(it - elements_.begin());
            if (rank_of_[static_cast<std::size_t>(idx)] <= last_rank || used_[static_cast<std::size_t>(idx)])
                return false;
            mark(idx, +1);
            part.push_back(idx);
            bool ok = close_part(ci, part);
            part.pop_back();
            mark(idx, -1);
            return ok;
        }
        for (int r = min_rank; r < static_cast<int>(by_rank_.size()); ++r) {
            const int idx = by_rank_[static_cast<std::size_t>(r)];
            if (used_[static_cast<std::size_t>(idx)]) continue;
            if (++nodes_ > round_budget_) {
                exhausted_ = true;
                return false;
            }
            mark(idx, +1);
            part.push_back(idx);
            bool ok = fill(ci, part, slot + 1, r + 1, g_.add(sum, elements_[static_cast<std::size_t>(idx)]), r);
            part.pop_back();
            mark(idx, -1);
            if (ok) return true;
            if (exhausted_) return false;
        }
        return false;
    }

    bool close_part(std::size_t ci, const std::vector<int>& part) {
        const int s = class_sizes_[ci];
        found_[ci].push_back(part);
        --class_counts_[ci];
        --open_;
        capacity_ -= 2 * (s / 2);
        if (s >= 3) cap3_ -= s;
        bool ok = rec();
        if (s >= 3) cap3_ += s;
        capacity_ += 2 * (s / 2);
        ++open_;
        ++class_counts_[ci];
        if (!ok) found_[ci].pop_back();
        return ok;
    }

    const AbelianGroup& g_;
    long long budget_;
    long long round_budget_ = 0;
    std::vector<GroupElement> elements_;
    std::vector<int> by_rank_;  // exploration order: rank -> element index
    std::vector<int> rank_of_;  // element index -> rank
    std::vector<int> class_sizes_;   // distinct part sizes, descending
    std::vector<int> class_counts_;  // unopened parts per class
    std::vector<char> used_;
    std::vector<std::vector<std::vector<int>>> found_; // per class, discovery order
    std::vector<unsigned> functional_of_;              // per element: bitmask over parity functionals
    std::vector<int> parity_count_;                    // unused elements per functional (1-indexed)
    std::vector<int> inv_idx_;                         // element index -> index of its inverse
    int capacity_ = 0;                                 // absorption capacity of unopened parts
    int cap3_ = 0;                                     // slots in unopened parts of size >= 3
    int unpairable_ = 0;                               // unused elements no pair can absorb
    int open_ = 0;
    long long nodes_ = 0;
    bool exhausted_ = false;
};

/// Ungated search over the requested sizes; parts returned in the caller's
/// size order (solved largest-first internally).
inline ZsResult solve_zero_sum(const AbelianGroup& g, const std::vector<int>& sizes,
                               bool exclude_zero, long long budget) {
    std::vector<int> order(sizes.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return sizes[static_cast<std::size_t>(a)] > sizes[static_cast<std::size_t>(b)]; });
    std::vector<int> sorted;
    sorted.reserve(sizes.size());
    for (int i : order) sorted.push_back(sizes[static_cast<std::size_t>(i)]);

    ZeroSumSolver solver(g, exclude_zero, budget);
    ZsResult res = solver.solve(sorted);
    if (res.status == ZsStatus::found) {
        std::vector<std::vector<GroupElement>> reordered(sizes.size());
        for (std::size_t k = 0; k < order.size(); ++k)
            reordered[static_cast<std::size_t>(order[k])] = std::move(res.partition.parts[k]);
        res.partition.parts = std::move(reordered);
        res.partition.excludes_zero = exclude_zero;
    }
    return res;
}

inline void validate_sizes(const AbelianGroup& g, const std::vector<int>& sizes, bool exclude_zero) {
    long long sum = 0;
    for (int s : sizes) sum += s;
    if (exclude_zero) {
        if (sum != g.order() - 1)
            throw std::invalid_argument("zero-sum sizes must sum to |G|-1 when zero is excluded");
        for (int s : sizes)
            if (s < 2) throw std::invalid_argument("zero-sum parts over G\\{0} must have size >= 2");
    } else {
        if (sum != g.order())
            throw std::invalid_argument("zero-sum sizes must sum to |G| when zero is included");
        if (!sizes.empty() && sizes.front() < 1)
            throw std::invalid_argument("first part size must be >= 1");
        for (std::size_t i = 1; i < sizes.size(); ++i)
            if (sizes[i] < 2) throw std::invalid_argument("part sizes after the first must be >= 2");
    }
}

} // namespace detail

/// Feasibility of a zero-sum partition. Excluding zero: possible iff |G| is
/// odd or G has exactly three involutions. Including zero: iff |G| is odd.
/// Throws on malformed size vectors.
inline bool zs_feasible(const AbelianGroup& g, const std::vector<int>& sizes, bool exclude_zero) {
    detail::validate_sizes(g, sizes, exclude_zero);
    if (exclude_zero) return g.order() % 2 == 1 || g.involution_count() == 3;
    return g.order() % 2 == 1;
}

/// Gated construction: infeasible instances are rejected without search;
/// feasible ones are handed to the backtracking solver, which is guaranteed
/// a solution exists (budget exhaustion at desk scale is a defect).
inline ZsResult zero_sum_partition(const AbelianGroup& g, const std::vector<int>& sizes,
                                   bool exclude_zero, long long budget = kDefaultZsBudget) {
    if (!zs_feasible(g, sizes, exclude_zero)) return {ZsStatus::infeasible, {}, 0};
    return detail::solve_zero_sum(g, sizes, exclude_zero, budget);
}

/// Partition of all of G into |G|/r zero-sum parts of size r. Exists iff the
/// number of involutions differs from one (a lone involution makes the total
/// sum of G nonzero).
inline ZsResult equal_size_partition(const AbelianGroup& g, int r, long long budget = kDefaultZsBudget) {
    if (r < 3) throw std::invalid_argument("equal_size_partition requires r >= 3");
    if (g.order() % r != 0) throw std::invalid_argument("r must divide |G|");
    if (g.involution_count() == 1) return {ZsStatus::infeasible, {}, 0};
    std::vector<int> sizes(static_cast<std::size_t>(g.order() / r), r);
    return detail::solve_zero_sum(g, sizes, false, budget);
}

/// Partition of G\{0} into inverse pairs {a, -a}, lexicographic
/// representative first. Requires |G| odd.
inline std::vector<std::pair<GroupElement, GroupElement>> pair_partition_odd(const AbelianGroup& g) {
    if (g.order() % 2 == 0) throw std::invalid_argument("pair_partition_odd requires odd group order");
    std::vector<std::pair<GroupElement, GroupElement>> out;
    std::vector<GroupElement> seen;
    for (const auto& a : g.all_elements()) {
        if (a == g.zero()) continue;
        if (std::binary_search(seen.begin(), seen.end(), a)) continue;
        GroupElement b = g.neg(a);
        out.emplace_back(a, b);
        seen.push_back(a);
        seen.push_back(b);
        std::sort(seen.begin(), seen.end());
    }
    return out;
}

/// Sanity predicate used by tests: parts disjoint, union equals the ground
/// set, every part sums to zero, sizes as requested.
inline bool partition_is_valid(const AbelianGroup& g, const ZeroSumPartition& p,
                               const std::vector<int>& sizes) {
    if (p.parts.size() != sizes.size()) return false;
    std::vector<GroupElement> all;
    for (std::size_t i = 0; i < p.parts.size(); ++i) {
        if (static_cast<int>(p.parts[i].size()) != sizes[i]) return false;
        GroupElement sum = g.zero();
        for (const auto& e : p.parts[i]) {
            if (!g.contains(e)) return false;
            sum = g.add(sum, e);
            all.push_back(e);
        }
        if (sum != g.zero()) return false;
    }
    std::sort(all.begin(), all.end());
    if (std::adjacent_find(all.begin(), all.end()) != all.end()) return false;
    auto ground = g.all_elements();
    if (p.excludes_zero) ground.erase(ground.begin());
    return all == ground;
}

} // namespace girr
