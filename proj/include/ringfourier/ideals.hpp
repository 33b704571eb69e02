#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "ringfourier/ring.hpp"

namespace ringfourier {

enum class Side { Left, Right, TwoSided };

inline const char* side_name(Side s) {
    switch (s) {
        case Side::Left: return "left";
        case Side::Right: return "right";
        case Side::TwoSided: return "two-sided";
    }
    return "?";
}

// An additive subgroup closed under one-sided (or two-sided) multiplication
// by the whole ring, stored as a sorted element-index set.
struct IdealSet {
    Side side = Side::Left;
    Ring ring;
    std::vector<std::uint64_t> elems;  // sorted, contains ring.zero()

    std::uint64_t size() const { return elems.size(); }

    bool contains(std::uint64_t e) const {
        return std::binary_search(elems.begin(), elems.end(), e);
    }

    // proper iff 1 is not a member
    bool proper() const { return !contains(ring.one()); }

    bool subset_of(const IdealSet& other) const {
        return std::includes(other.elems.begin(), other.elems.end(), elems.begin(), elems.end());
    }
};

// Exhaustive closure verification: additive closure, negation, and the
// declared side's multiplications.
inline bool is_ideal(const IdealSet& I) {
    const Ring& R = I.ring;
    if (!I.contains(R.zero())) return false;
    for (auto a : I.elems) {
        if (!I.contains(R.neg(a))) return false;
        for (auto b : I.elems)
            if (!I.contains(R.add(a, b))) return false;
    }
    for (auto a : I.elems) {
        for (std::uint64_t r = 0; r < R.size(); ++r) {
            if ((I.side == Side::Left || I.side == Side::TwoSided) && !I.contains(R.mul(r, a)))
                return false;
            if ((I.side == Side::Right || I.side == Side::TwoSided) && !I.contains(R.mul(a, r)))
                return false;
        }
    }
    return true;
}

// Rx (left) or xR (right); both are already additive subgroups.
inline IdealSet principal_ideal(const Ring& ring, std::uint64_t x, Side side) {
    if (side == Side::TwoSided)
        throw std::invalid_argument("principal_ideal: use left or right; two-sided ideals "
                                    "arise from closure operations");
    std::vector<char> in(ring.size(), 0);
    for (std::uint64_t r = 0; r < ring.size(); ++r)
        in[side == Side::Left ? ring.mul(r, x) : ring.mul(x, r)] = 1;
    IdealSet out{side, ring, {}};
    for (std::uint64_t e = 0; e < ring.size(); ++e)
        if (in[e]) out.elems.push_back(e);
    return out;
}

// I + J = {i + j}, an ideal of the common side.
inline IdealSet ideal_sum(const IdealSet& I, const IdealSet& J) {
    if (I.side != J.side) throw std::invalid_argument("ideal_sum: mixed sides");
    std::vector<char> in(I.ring.size(), 0);
    for (auto a : I.elems)
        for (auto b : J.elems) in[I.ring.add(a, b)] = 1;
    IdealSet out{I.side, I.ring, {}};
    for (std::uint64_t e = 0; e < I.ring.size(); ++e)
        if (in[e]) out.elems.push_back(e);
    return out;
}

// Complete lattice of one-sided ideals: closure of the principal ideals
// under pairwise sums (every ideal is a finite sum of principal ideals).
// Result is deduplicated and sorted by size then elements.
inline std::vector<IdealSet> all_ideals(const Ring& ring, Side side,
                                        const Budget& budget = Budget{}) {
    if (side == Side::TwoSided)
        throw std::invalid_argument("all_ideals: enumerate left or right ideals");
    if (ring.size() > 4096)
        throw budget_error("all_ideals", ring.size(), 4096);
    budget.require_work(detail::sat_mul(ring.size(), ring.size()), "all_ideals");

    std::set<std::vector<std::uint64_t>> seen;
    std::vector<IdealSet> pool;
    for (std::uint64_t x = 0; x < ring.size(); ++x) {
        IdealSet P = principal_ideal(ring, x, side);
        if (seen.insert(P.elems).second) pool.push_back(std::move(P));
    }
    std::size_t frontier_start = 0;
    while (frontier_start < pool.size()) {
        std::size_t frontier_end = pool.size();
        for (std::size_t i = 0; i < frontier_end; ++i)
            for (std::size_t j = std::max(i + 1, frontier_start); j < frontier_end; ++j) {
                if (pool[i].subset_of(pool[j]) || pool[j].subset_of(pool[i])) continue;
                IdealSet S = ideal_sum(pool[i], pool[j]);
                if (seen.insert(S.elems).second) pool.push_back(std::move(S));
            }
        frontier_start = frontier_end;
    }
    std::sort(pool.begin(), pool.end(), [](const IdealSet& a, const IdealSet& b) {
        if (a.elems.size() != b.elems.size()) return a.elems.size() < b.elems.size();
        return a.elems < b.elems;
    });
    return pool;
}

inline std::uint64_t max_proper_ideal_size(const Ring& ring, Side side,
                                           const Budget& budget = Budget{}) {
    std::uint64_t best = 0;
    for (const auto& I : all_ideals(ring, side, budget))
        if (I.proper()) best = std::max(best, I.size());
    return best;  // >= 1: {0} is a proper ideal of any ring
}

// Greedy minimal principal generating set (smallest indices first).
inline std::vector<std::uint64_t> minimal_generators(const IdealSet& I) {
    std::vector<std::uint64_t> gens;
    IdealSet cur{I.side, I.ring, {I.ring.zero()}};
    while (cur.elems != I.elems) {
        std::uint64_t pick = 0;
        bool found = false;
        for (auto e : I.elems)
            if (!cur.contains(e)) {
                pick = e;
                found = true;
                break;
            }
        if (!found) break;
        gens.push_back(pick);
        cur = ideal_sum(cur, principal_ideal(I.ring, pick, I.side));
    }
    return gens;
}

// Quotient by a verified two-sided proper ideal: a table ring on coset
// representatives (least element index per coset), plus the surjection.
struct QuotientRing {
    RingSpec spec;
    Ring ring;
    std::vector<std::uint32_t> projection;  // element index -> coset index
};

inline QuotientRing quotient_ring(const Ring& ring, const IdealSet& I) {
    if (!ring.same_ring(I.ring)) throw std::invalid_argument("quotient_ring: foreign ideal");
    if (!I.proper()) throw std::invalid_argument("quotient_ring: ideal is improper");
    IdealSet two{Side::TwoSided, ring, I.elems};
    if (!is_ideal(two)) throw std::invalid_argument("quotient_ring: ideal is not two-sided");

    const std::uint64_t q = ring.size();
    std::vector<std::uint64_t> rep(q);
    for (std::uint64_t e = 0; e < q; ++e) {
        std::uint64_t best = UINT64_MAX;
        for (auto i : I.elems) best = std::min(best, ring.add(e, i));
        rep[e] = best;
    }
    std::vector<std::uint64_t> reps;
    for (std::uint64_t e = 0; e < q; ++e)
        if (rep[e] == e) reps.push_back(e);
    std::map<std::uint64_t, std::uint32_t> coset_of;
    for (std::size_t i = 0; i < reps.size(); ++i) coset_of[reps[i]] = static_cast<std::uint32_t>(i);

    const std::uint64_t qq = reps.size();
    TableData t;
    t.q = static_cast<std::uint32_t>(qq);
    t.add.resize(qq * qq);
    t.mul.resize(qq * qq);
    for (std::uint64_t a = 0; a < qq; ++a)
        for (std::uint64_t b = 0; b < qq; ++b) {
            t.add[a * qq + b] = coset_of[rep[ring.add(reps[a], reps[b])]];
            t.mul[a * qq + b] = coset_of[rep[ring.mul(reps[a], reps[b])]];
        }
    t.zero = coset_of[rep[ring.zero()]];
    t.one = coset_of[rep[ring.one()]];
    t.label = "quot(" + ring.spec_string() + ",|I|=" + std::to_string(I.size()) + ")";

    QuotientRing out{RingSpec::table_ring(std::move(t)), Ring(), {}};
    out.ring = Ring(out.spec);
    out.projection.resize(q);
    for (std::uint64_t e = 0; e < q; ++e) out.projection[e] = coset_of[rep[e]];
    return out;
}

// Jacobson radical by quasi-regularity: J = {x : 1 - yx is left-invertible
// for every y}. Cross-checked against the maximal-left-ideal intersection
// for small rings, asserted two-sided, and paired with the quotient.
struct RadicalReport {
    IdealSet radical;                    // two-sided
    std::uint64_t size = 0;
    QuotientRing quotient;
};

inline RadicalReport jacobson_radical(const Ring& ring, const Budget& budget = Budget{}) {
    const std::uint64_t q = ring.size();
    if (q > 4096) throw budget_error("jacobson_radical", q, 4096);
    budget.require_work(detail::sat_mul(q, q), "jacobson_radical");

    std::vector<char> left_invertible(q, 0);
    for (std::uint64_t z = 0; z < q; ++z)
        for (std::uint64_t w = 0; w < q; ++w)
            if (ring.mul(z, w) == ring.one()) left_invertible[w] = 1;

    std::vector<std::uint64_t> rad;
    for (std::uint64_t x = 0; x < q; ++x) {
        bool in = true;
        for (std::uint64_t y = 0; y < q && in; ++y)
            if (!left_invertible[ring.sub(ring.one(), ring.mul(y, x))]) in = false;
        if (in) rad.push_back(x);
    }

    IdealSet J{Side::TwoSided, ring, rad};
    if (!is_ideal(J)) throw std::logic_error("jacobson_radical: radical failed closure checks");

    if (q <= 256) {
        // intersection of maximal left ideals must agree
        auto ideals = all_ideals(ring, Side::Left, budget);
        std::vector<const IdealSet*> proper;
        for (const auto& I : ideals)
            if (I.proper()) proper.push_back(&I);
        std::vector<std::uint64_t> inter;
        bool first = true;
        for (const auto* I : proper) {
            bool maximal = true;
            for (const auto* K : proper)
                if (K != I && I->subset_of(*K) && I->elems != K->elems) { maximal = false; break; }
            if (!maximal) continue;
            if (first) {
                inter = I->elems;
                first = false;
            } else {
                std::vector<std::uint64_t> next;
                std::set_intersection(inter.begin(), inter.end(), I->elems.begin(), I->elems.end(),
                                      std::back_inserter(next));
                inter = std::move(next);
            }
        }
        if (first) inter = {};  // no proper ideals cannot happen: {0} is proper
        if (inter != J.elems)
            throw std::logic_error("jacobson_radical: quasi-regularity and maximal-ideal "
                                   "intersection disagree");
    }

    RadicalReport out{J, J.size(), quotient_ring(ring, J)};

    // the quotient must be semisimple: recompute its radical when small
    if (out.quotient.ring.size() <= 256 && J.size() > 1) {
        RadicalReport qr = jacobson_radical(out.quotient.ring, budget);
        if (qr.size != 1)
            throw std::logic_error("jacobson_radical: quotient has nonzero radical");
    }
    return out;
}

} // namespace ringfourier
