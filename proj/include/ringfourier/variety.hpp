#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "ringfourier/ncpoly.hpp"
#include "ringfourier/ring.hpp"

namespace ringfourier {

struct VarietySpec {
    enum class Kind { Graph, Hamming, Explicit };

    Kind kind = Kind::Graph;
    NcPolynomial poly;                     // Graph
    std::int64_t c = 0;                    // Graph translation
    std::int64_t hamming_j = 1;            // Hamming
    std::vector<std::uint64_t> points;     // Explicit

    static VarietySpec graph(NcPolynomial f, std::int64_t c) {
        VarietySpec v;
        v.kind = Kind::Graph;
        v.poly = std::move(f);
        v.c = c;
        return v;
    }
    static VarietySpec hamming(std::int64_t j) {
        VarietySpec v;
        v.kind = Kind::Hamming;
        v.hamming_j = j;
        return v;
    }
    static VarietySpec explicit_set(std::vector<std::uint64_t> pts) {
        VarietySpec v;
        v.kind = Kind::Explicit;
        v.points = std::move(pts);
        return v;
    }

    std::string to_string() const {
        switch (kind) {
            case Kind::Graph:
                return "graph(" + poly.to_string() + ",c=" + std::to_string(c) + ")";
            case Kind::Hamming:
                return "hamming(j=" + std::to_string(hamming_j) + ")";
            case Kind::Explicit:
                return "explicit(n=" + std::to_string(points.size()) + ")";
        }
        return "?";
    }
};

// A subset of R^d stored as sorted point indices. A point (x_1..x_d) has
// index sum x_i q^{d-i} (first coordinate most significant).
struct PointSet {
    Ring ring;
    unsigned d = 0;
    std::vector<std::uint64_t> points;

    std::uint64_t size() const { return points.size(); }

    bool contains(std::uint64_t p) const {
        return std::binary_search(points.begin(), points.end(), p);
    }

    std::uint64_t space_size() const {
        std::uint64_t n = 1;
        for (unsigned i = 0; i < d; ++i) n = detail::sat_mul(n, ring.size());
        return n;
    }

    void coordinates(std::uint64_t p, std::uint64_t* out) const {
        for (unsigned i = d; i-- > 0;) {
            out[i] = p % ring.size();
            p /= ring.size();
        }
    }

    static std::uint64_t index_of(const Ring& ring, const std::vector<std::uint64_t>& coords) {
        std::uint64_t p = 0;
        for (auto x : coords) p = p * ring.size() + x;
        return p;
    }
};

inline PointSet variety_points(const VarietySpec& spec, const Ring& ring, unsigned d,
                               const Budget& budget = Budget{}) {
    if (d < 1) throw std::invalid_argument("variety_points: d must be >= 1");
    PointSet out;
    out.ring = ring;
    out.d = d;
    const std::uint64_t q = ring.size();

    switch (spec.kind) {
        case VarietySpec::Kind::Graph: {
            if (d < 2) throw std::invalid_argument("variety_points: graph needs d >= 2");
            if (spec.poly.var_count() > d - 1)
                throw std::invalid_argument("variety_points: polynomial uses more than d-1 variables");
            std::uint64_t total = 1;
            for (unsigned i = 0; i + 1 < d; ++i) total = detail::sat_mul(total, q);
            budget.require_work(total, "variety_points");
            PolyEvaluator eval(spec.poly, ring);
            const std::uint64_t shift = ring.integer_image(spec.c);
            std::vector<std::uint64_t> x(d - 1, 0);
            out.points.reserve(total);
            for (std::uint64_t t = 0;; ++t) {
                std::uint64_t xd = ring.add(eval.evaluate(x.data()), shift);
                std::uint64_t p = 0;
                for (auto xi : x) p = p * q + xi;
                out.points.push_back(p * q + xd);
                if (t + 1 == total) break;
                for (unsigned i = d - 1; i-- > 0;) {
                    if (++x[i] < q) break;
                    x[i] = 0;
                }
            }
            break;
        }
        case VarietySpec::Kind::Hamming: {
            std::uint64_t j_img = ring.integer_image(spec.hamming_j);
            if (!ring.is_unit(j_img))
                throw std::invalid_argument(
                    "variety_points: hamming variety needs j to map to a unit");
            std::vector<std::uint64_t> units = ring.units(budget);
            std::uint64_t total = 1;
            for (unsigned i = 0; i + 1 < d; ++i)
                total = detail::sat_mul(total, units.size());
            budget.require_work(total, "variety_points");
            // inverse of each unit, for the closing coordinate
            std::vector<std::uint64_t> inv(units.size());
            for (std::size_t i = 0; i < units.size(); ++i) {
                for (auto v : units)
                    if (ring.mul(units[i], v) == ring.one()) {
                        inv[i] = v;
                        break;
                    }
            }
            if (d == 1) {
                out.points.push_back(j_img);
                break;
            }
            std::vector<std::uint32_t> pick(d - 1, 0);
            out.points.reserve(total);
            for (std::uint64_t t = 0;; ++t) {
                // x_d = (x_1 x_2 ... x_{d-1})^{-1} * j
                std::uint64_t prefix = units[pick[0]];
                for (unsigned i = 1; i + 1 < d; ++i) prefix = ring.mul(prefix, units[pick[i]]);
                std::uint64_t pref_inv = ring.one();
                for (unsigned i = d - 1; i-- > 0;) pref_inv = ring.mul(pref_inv, inv[pick[i]]);
                std::uint64_t xd = ring.mul(pref_inv, j_img);
                assert(ring.mul(prefix, xd) == j_img);
                std::uint64_t p = 0;
                for (unsigned i = 0; i + 1 < d; ++i) p = p * q + units[pick[i]];
                out.points.push_back(p * q + xd);
                if (t + 1 == total) break;
                for (unsigned i = d - 1; i-- > 0;) {
                    if (++pick[i] < units.size()) break;
                    pick[i] = 0;
                }
            }
            break;
        }
        case VarietySpec::Kind::Explicit: {
            std::uint64_t space = out.space_size();
            out.points = spec.points;
            std::sort(out.points.begin(), out.points.end());
            out.points.erase(std::unique(out.points.begin(), out.points.end()), out.points.end());
            for (auto p : out.points)
                if (p >= space) throw std::invalid_argument("variety_points: point index out of range");
            break;
        }
    }
    return out;
}

} // namespace ringfourier
