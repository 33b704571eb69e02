#pragma once

// Test-only oracles, kept independent of the library's computation paths:
// the naive DFT works in floating-point angle arithmetic (the library reduces
// exponents exactly), and the trace oracle powers elements one multiplication
// at a time (the library precomputes a trace basis).

#include <cmath>
#include <complex>
#include <cstdint>
#include <vector>

#include "ringfourier/character.hpp"
#include "ringfourier/ring.hpp"
#include "ringfourier/variety.hpp"

namespace oracle {

using ringfourier::Ring;

// Full DFT of an indicator by definition, angles accumulated in doubles.
inline std::vector<std::complex<double>> naive_dft(const ringfourier::PointSet& set) {
    const Ring& ring = set.ring;
    ringfourier::FrequencySpace space(ring, set.d);
    const std::uint32_t axes = space.axes();
    const double tau = 8.0 * std::atan(1.0);
    std::vector<std::complex<double>> out(space.size());
    std::vector<std::uint32_t> fdig(axes), pdig(axes);
    std::vector<std::uint64_t> coords(set.d);
    for (std::uint64_t f = 0; f < space.size(); ++f) {
        space.decompose(f, fdig.data());
        std::complex<double> acc = 0;
        for (auto p : set.points) {
            set.coordinates(p, coords.data());
            space.point_digits(coords.data(), pdig.data());
            double angle = 0;
            for (std::uint32_t a = 0; a < axes; ++a)
                angle += tau * static_cast<double>(fdig[a]) * static_cast<double>(pdig[a]) /
                         static_cast<double>(space.radix(a));
            acc += std::polar(1.0, angle);
        }
        out[f] = acc / static_cast<double>(space.size());
    }
    return out;
}

// Absolute trace over GF(p^k): Tr(y) = y + y^p + ... + y^{p^{k-1}}, with
// p-th powers taken by naive repeated multiplication.
inline std::uint64_t frobenius_trace(const Ring& field, std::uint64_t y) {
    const auto& d = field.data();
    std::uint64_t acc = field.zero();
    std::uint64_t cur = y;
    for (unsigned j = 0; j < d.gf_k; ++j) {
        acc = field.add(acc, cur);
        std::uint64_t next = field.one();
        for (std::uint64_t i = 0; i < d.gf_p; ++i) next = field.mul(next, cur);
        cur = next;
    }
    return acc;  // lands in the prime subfield, index < p
}

// 2x2 matrix product over a base ring by the schoolbook formulas.
inline std::vector<std::uint64_t> mat2_mul(const Ring& base, const std::vector<std::uint64_t>& a,
                                           const std::vector<std::uint64_t>& b) {
    auto dot = [&](std::uint64_t x1, std::uint64_t y1, std::uint64_t x2, std::uint64_t y2) {
        return base.add(base.mul(x1, y1), base.mul(x2, y2));
    };
    return {dot(a[0], b[0], a[1], b[2]), dot(a[0], b[1], a[1], b[3]),
            dot(a[2], b[0], a[3], b[2]), dot(a[2], b[1], a[3], b[3])};
}

inline bool is_unit_exhaustive(const Ring& ring, std::uint64_t a) {
    for (std::uint64_t b = 0; b < ring.size(); ++b)
        if (ring.mul(a, b) == ring.one() && ring.mul(b, a) == ring.one()) return true;
    return false;
}

// Ordered-pair difference count by the plainest possible loop (no
// binary search, no coordinate caching).
inline std::uint64_t difference_count_brute(const ringfourier::PointSet& E,
                                            const ringfourier::PointSet& V) {
    const Ring& R = E.ring;
    std::uint64_t n = 0;
    std::vector<std::uint64_t> x(E.d), y(E.d);
    for (auto px : E.points)
        for (auto py : E.points) {
            E.coordinates(px, x.data());
            E.coordinates(py, y.data());
            std::uint64_t p = 0;
            for (unsigned t = 0; t < E.d; ++t) p = p * R.size() + R.sub(x[t], y[t]);
            for (auto v : V.points)
                if (v == p) {
                    ++n;
                    break;
                }
        }
    return n;
}

} // namespace oracle
