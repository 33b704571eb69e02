#pragma once

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <functional>
#include <vector>

#include "ringfourier/base.hpp"

namespace ringfourier {
namespace detail {

// Cyclic decomposition of a finite abelian group given by a Cayley table.
// factors are invariant-style (largest order first, each >= 2), and
// digits/undigits realize an isomorphism onto prod Z/factors[j] with the
// identity mapping to the zero tuple.
struct AbelianDecomposition {
    std::vector<std::uint32_t> factors;
    std::vector<std::uint32_t> digits;    // flat [elem * m + j]
    std::vector<std::uint32_t> undigits;  // mixed-radix digit index -> elem
};

// add(a, b) must be a group operation on {0..n-1} with identity `zero`.
// Classical greedy construction: a cyclic subgroup of maximal order is a
// direct summand, and any inclusion-maximal subgroup meeting it trivially
// is a complement. One pass over the elements yields such a maximal
// subgroup because rejection is permanent as the candidate grows.
inline AbelianDecomposition decompose_abelian(
    std::uint32_t n, std::uint32_t zero,
    const std::function<std::uint32_t(std::uint32_t, std::uint32_t)>& add) {
    AbelianDecomposition out;
    if (n == 1) return out;

    std::vector<std::uint32_t> order(n, 0);
    for (std::uint32_t x = 0; x < n; ++x) {
        std::uint32_t acc = x, k = 1;
        while (acc != zero) { acc = add(acc, x); ++k; }
        order[x] = k;
    }

    std::uint32_t d1 = 0, g1 = zero;
    for (std::uint32_t x = 0; x < n; ++x)
        if (order[x] > d1) { d1 = order[x]; g1 = x; }

    std::vector<std::uint32_t> cyc(d1);
    cyc[0] = zero;
    for (std::uint32_t t = 1; t < d1; ++t) cyc[t] = add(cyc[t - 1], g1);

    std::vector<char> in_cyc(n, 0);
    for (auto c : cyc) in_cyc[c] = 1;

    std::vector<std::uint32_t> H = {zero};
    std::vector<char> in_H(n, 0);
    in_H[zero] = 1;
    std::vector<char> cand(n);
    for (std::uint32_t x = 0; x < n; ++x) {
        if (in_H[x]) continue;
        // <H, x> = union of cosets H + t*x since the group is abelian
        std::fill(cand.begin(), cand.end(), 0);
        std::vector<std::uint32_t> grown;
        std::uint32_t tx = zero;
        bool ok = true;
        for (std::uint32_t t = 0; t < order[x] && ok; ++t) {
            for (auto h : H) {
                std::uint32_t e = add(h, tx);
                if (!cand[e]) {
                    cand[e] = 1;
                    grown.push_back(e);
                    if (in_cyc[e] && e != zero) { ok = false; break; }
                }
            }
            tx = add(tx, x);
        }
        if (ok) {
            for (auto e : grown)
                if (!in_H[e]) { in_H[e] = 1; H.push_back(e); }
        }
    }
    assert(static_cast<std::uint64_t>(H.size()) * d1 == n);

    // Recurse on the complement through a local relabeling.
    AbelianDecomposition sub;
    std::uint32_t m_sub = 0;
    if (H.size() > 1) {
        std::sort(H.begin(), H.end());
        std::vector<std::uint32_t> local(n, 0);
        for (std::uint32_t i = 0; i < H.size(); ++i) local[H[i]] = i;
        auto sub_add = [&](std::uint32_t a, std::uint32_t b) {
            return local[add(H[a], H[b])];
        };
        sub = decompose_abelian(static_cast<std::uint32_t>(H.size()), local[zero], sub_add);
        m_sub = static_cast<std::uint32_t>(sub.factors.size());
    }

    std::uint32_t m = 1 + m_sub;
    out.factors.push_back(d1);
    out.factors.insert(out.factors.end(), sub.factors.begin(), sub.factors.end());
    out.digits.assign(static_cast<std::size_t>(n) * m, 0);
    out.undigits.assign(n, 0);

    std::vector<std::uint32_t> local(n, 0);
    for (std::uint32_t i = 0; i < H.size(); ++i) local[H[i]] = i;
    for (std::uint32_t t = 0; t < d1; ++t) {
        for (std::uint32_t i = 0; i < H.size(); ++i) {
            std::uint32_t e = add(cyc[t], H[i]);
            std::uint32_t* dig = &out.digits[static_cast<std::size_t>(e) * m];
            dig[0] = t;
            std::uint64_t mixed = t;
            for (std::uint32_t j = 0; j < m_sub; ++j) {
                std::uint32_t dj = sub.digits[static_cast<std::size_t>(i) * m_sub + j];
                dig[1 + j] = dj;
                mixed = mixed * sub.factors[j] + dj;
            }
            out.undigits[mixed] = e;
        }
    }
    return out;
}

} // namespace detail
} // namespace ringfourier
