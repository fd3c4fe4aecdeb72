#pragma once

// Exact arithmetic and structural queries for finite Abelian groups kept in
// invariant-factor form Z_{d1} x ... x Z_{dk} with d1 | d2 | ... | dk.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace girr {

/// Element of a finite Abelian group: one residue per cyclic factor,
/// coords[i] in [0, d_i). Lexicographic vector order is the global
/// tie-breaker everywhere a canonical element has to be chosen.
using GroupElement = std::vector<long long>;

namespace detail {

inline std::map<long long, int> prime_factorize(long long n) {
    std::map<long long, int> out;
    for (long long p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        while (n % p == 0) {
            out[p]++;
            n /= p;
        }
    }
    if (n > 1) out[n]++;
    return out;
}

} // namespace detail

class AbelianGroup {
  public:
    /// Builds the group Z_{c1} x Z_{c2} x ... from arbitrary cyclic orders,
    /// normalizing to invariant-factor form (CRT merges coprime factors, so
    /// Z2xZ3 becomes Z6 while Z2xZ4 stays [2,4]). Factors equal to 1 are
    /// dropped; the empty product is the trivial group.
    explicit AbelianGroup(std::vector<long long> cyclic_orders = {}) {
        // exponent lists per prime, one entry per cyclic factor touching it
        std::map<long long, std::vector<int>> exps;
        for (long long c : cyclic_orders) {
            if (c < 1) throw std::invalid_argument("cyclic factor must be >= 1");
            for (auto [p, e] : detail::prime_factorize(c)) exps[p].push_back(e);
        }
        std::size_t k = 0;
        for (auto& [p, es] : exps) {
            std::sort(es.begin(), es.end());
            k = std::max(k, es.size());
        }
        factors_.assign(k, 1);
        for (auto& [p, es] : exps) {
            // align ascending exponents at the right so d_i | d_{i+1}
            for (std::size_t i = 0; i < es.size(); ++i) {
                long long q = 1;
                for (int j = 0; j < es[i]; ++j) q *= p;
                factors_[k - es.size() + i] *= q;
            }
        }
    }

    static AbelianGroup trivial() { return AbelianGroup{}; }

    const std::vector<long long>& factors() const { return factors_; }
    std::size_t rank() const { return factors_.size(); }

    long long order() const {
        long long m = 1;
        for (long long d : factors_) m *= d;
        return m;
    }

    bool contains(const GroupElement& a) const {
        if (a.size() != factors_.size()) return false;
        for (std::size_t i = 0; i < a.size(); ++i)
            if (a[i] < 0 || a[i] >= factors_[i]) return false;
        return true;
    }

    GroupElement zero() const { return GroupElement(factors_.size(), 0); }

    GroupElement add(const GroupElement& a, const GroupElement& b) const {
        require(a);
        require(b);
        GroupElement r(factors_.size());
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = (a[i] + b[i]) % factors_[i];
        return r;
    }

    GroupElement neg(const GroupElement& a) const {
        require(a);
        GroupElement r(factors_.size());
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = a[i] == 0 ? 0 : factors_[i] - a[i];
        return r;
    }

    GroupElement sub(const GroupElement& a, const GroupElement& b) const { return add(a, neg(b)); }

    GroupElement scalar_mul(long long n, const GroupElement& a) const {
        require(a);
        GroupElement r(factors_.size());
        for (std::size_t i = 0; i < r.size(); ++i) {
            long long m = n % factors_[i];
            if (m < 0) m += factors_[i];
            r[i] = (m * a[i]) % factors_[i];
        }
        return r;
    }

    /// Least r >= 1 with r*a = 0.
    long long order_of(const GroupElement& a) const {
        require(a);
        long long r = 1;
        for (std::size_t i = 0; i < a.size(); ++i)
            r = std::lcm(r, factors_[i] / std::gcd(factors_[i], a[i]));
        return r;
    }

    bool is_involution(const GroupElement& a) const {
        return contains(a) && order_of(a) == 2;
    }

    /// All elements in lexicographic coordinate order. Guarded by the
    /// enumeration cap; structural ops have no cap.
    std::vector<GroupElement> all_elements(long long cap = kEnumerationCap) const {
        if (order() > cap) throw std::invalid_argument("group order exceeds enumeration cap");
        std::vector<GroupElement> out;
        out.reserve(static_cast<std::size_t>(order()));
        GroupElement cur = zero();
        for (;;) {
            out.push_back(cur);
            std::size_t i = cur.size();
            while (i > 0 && ++cur[i - 1] == factors_[i - 1]) cur[--i] = 0;
            if (i == 0) break;
        }
        return out;
    }

    /// 2^p - 1 with p = number of even invariant factors.
    long long involution_count() const {
        long long c = 1;
        for (long long d : factors_)
            if (d % 2 == 0) c *= 2;
        return c - 1;
    }

    /// All nonzero elements of order 2, lexicographically sorted.
    std::vector<GroupElement> involutions() const {
        if (involution_count() + 1 > kEnumerationCap)
            throw std::invalid_argument("involution count exceeds enumeration cap");
        std::vector<std::vector<long long>> choices(factors_.size());
        for (std::size_t i = 0; i < factors_.size(); ++i) {
            choices[i].push_back(0);
            if (factors_[i] % 2 == 0) choices[i].push_back(factors_[i] / 2);
        }
        std::vector<GroupElement> out;
        GroupElement cur = zero();
        std::vector<std::size_t> idx(factors_.size(), 0);
        for (;;) {
            GroupElement e(factors_.size());
            for (std::size_t i = 0; i < factors_.size(); ++i) e[i] = choices[i][idx[i]];
            if (e != zero()) out.push_back(std::move(e));
            std::size_t i = idx.size();
            while (i > 0 && ++idx[i - 1] == choices[i - 1].size()) idx[--i] = 0;
            if (i == 0) break;
        }
        std::sort(out.begin(), out.end());
        return out;
    }

    /// Canonical text form, e.g. "Z4xZ2" -> "Z2xZ4"; trivial group is "Z1".
    std::string spec_string() const {
        if (factors_.empty()) return "Z1";
        std::string s;
        for (std::size_t i = 0; i < factors_.size(); ++i) {
            if (i) s += 'x';
            s += 'Z';
            s += std::to_string(factors_[i]);
        }
        return s;
    }

    bool operator==(const AbelianGroup& o) const = default;

    static constexpr long long kEnumerationCap = 1'000'000;

  private:
    void require(const GroupElement& a) const {
        if (!contains(a)) throw std::invalid_argument("element does not belong to this group");
    }

    std::vector<long long> factors_;
};

/// Subset of a group closed under addition and negation, containing zero.
/// Stored sorted for deterministic iteration.
struct Subgroup {
    std::vector<GroupElement> elements;

    bool contains(const GroupElement& a) const {
        return std::binary_search(elements.begin(), elements.end(), a);
    }
};

inline bool is_subgroup(const AbelianGroup& g, const Subgroup& s) {
    if (s.elements.empty() || !std::is_sorted(s.elements.begin(), s.elements.end())) return false;
    if (!s.contains(g.zero())) return false;
    for (const auto& a : s.elements)
        for (const auto& b : s.elements)
            if (!s.contains(g.add(a, b))) return false;
    return true;
}

/// Grammar: Z<d>(xZ<d>)*, case-insensitive, whitespace-free.
inline AbelianGroup parse_group_spec(std::string_view spec) {
    if (spec.empty()) throw std::invalid_argument("empty group spec");
    std::vector<long long> orders;
    std::size_t i = 0;
    for (;;) {
        if (i >= spec.size() || (spec[i] != 'Z' && spec[i] != 'z'))
            throw std::invalid_argument("group spec: expected 'Z' in '" + std::string(spec) + "'");
        ++i;
        if (i >= spec.size() || spec[i] < '0' || spec[i] > '9')
            throw std::invalid_argument("group spec: expected digits after 'Z'");
        long long d = 0;
        while (i < spec.size() && spec[i] >= '0' && spec[i] <= '9') {
            d = d * 10 + (spec[i] - '0');
            if (d > AbelianGroup::kEnumerationCap * 1000)
                throw std::invalid_argument("group spec: factor too large");
            ++i;
        }
        if (d < 1) throw std::invalid_argument("group spec: factor must be >= 1");
        orders.push_back(d);
        if (i == spec.size()) break;
        if (spec[i] != 'x' && spec[i] != 'X')
            throw std::invalid_argument("group spec: expected 'x' separator");
        ++i;
    }
    return AbelianGroup(orders);
}

/// I = {0} + all involutions; a subgroup isomorphic to Z_2^p.
inline Subgroup involution_subgroup(const AbelianGroup& g) {
    Subgroup s;
    s.elements = g.involutions();
    s.elements.push_back(g.zero());
    std::sort(s.elements.begin(), s.elements.end());
    return s;
}

/// Gamma = {0, i1, i2, i1+i2} from the two lexicographically smallest
/// involutions. Requires at least 3 involutions.
inline Subgroup klein_subgroup(const AbelianGroup& g) {
    auto inv = g.involutions();
    if (inv.size() < 3) throw std::invalid_argument("klein_subgroup needs at least 3 involutions");
    Subgroup s;
    s.elements = {g.zero(), inv[0], inv[1], g.add(inv[0], inv[1])};
    std::sort(s.elements.begin(), s.elements.end());
    return s;
}

/// Partition of I into cosets a + Gamma, first coset Gamma itself, coset
/// representatives lexicographically smallest.
inline std::vector<std::vector<GroupElement>>
coset_decomposition(const AbelianGroup& g, const Subgroup& big, const Subgroup& gamma) {
    if (!is_subgroup(g, gamma)) throw std::invalid_argument("coset_decomposition: Gamma is not a subgroup");
    for (const auto& e : gamma.elements)
        if (!big.contains(e)) throw std::invalid_argument("coset_decomposition: Gamma not contained in I");
    if (!is_subgroup(g, big)) throw std::invalid_argument("coset_decomposition: I is not a subgroup");

    std::vector<std::vector<GroupElement>> cosets;
    std::vector<GroupElement> assigned;
    for (const auto& rep : big.elements) {
        if (std::binary_search(assigned.begin(), assigned.end(), rep)) continue;
        std::vector<GroupElement> coset;
        for (const auto& h : gamma.elements) coset.push_back(g.add(rep, h));
        std::sort(coset.begin(), coset.end());
        for (const auto& e : coset) assigned.push_back(e);
        std::sort(assigned.begin(), assigned.end());
        cosets.push_back(std::move(coset));
    }
    return cosets;
}

namespace detail {

// descending partitions of e, e.g. 3 -> [3], [2,1], [1,1,1]
inline std::vector<std::vector<int>> partitions_of(int e) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int rem, int maxpart) -> void {
        if (rem == 0) {
            out.push_back(cur);
            return;
        }
        for (int p = std::min(rem, maxpart); p >= 1; --p) {
            cur.push_back(p);
            self(self, rem - p, p);
            cur.pop_back();
        }
    };
    rec(rec, e, e);
    return out;
}

} // namespace detail

/// All Abelian groups of order s up to isomorphism, one per combination of
/// prime-exponent partitions, in a deterministic order.
inline std::vector<AbelianGroup> enumerate_groups_of_order(long long s,
                                                           long long cap = AbelianGroup::kEnumerationCap) {
    if (s < 1) throw std::invalid_argument("group order must be >= 1");
    if (s > cap) throw std::invalid_argument("order exceeds enumeration cap");
    if (s == 1) return {AbelianGroup::trivial()};

    auto primes = detail::prime_factorize(s);
    std::vector<long long> ps;
    std::vector<std::vector<std::vector<int>>> parts;
    for (auto [p, e] : primes) {
        ps.push_back(p);
        parts.push_back(detail::partitions_of(e));
    }

    std::vector<AbelianGroup> out;
    std::vector<std::size_t> idx(ps.size(), 0);
    for (;;) {
        std::vector<long long> cyclic;
        for (std::size_t i = 0; i < ps.size(); ++i)
            for (int e : parts[i][idx[i]]) {
                long long q = 1;
                for (int j = 0; j < e; ++j) q *= ps[i];
                cyclic.push_back(q);
            }
        out.emplace_back(cyclic);
        std::size_t i = idx.size();
        while (i > 0 && ++idx[i - 1] == parts[i - 1].size()) idx[--i] = 0;
        if (i == 0) break;
    }
    return out;
}

} // namespace girr
