#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <future>
#include <string>
#include <thread>
#include <vector>

#include "ringfourier/character.hpp"
#include "ringfourier/ncpoly.hpp"
#include "ringfourier/variety.hpp"

namespace ringfourier {

// Normalized Fourier transform of an indicator: coef[psi] =
// |R|^{-d} sum_{x in S} psi(x), indexed by frequency (trivial first).
struct Spectrum {
    FrequencySpace space;
    std::uint64_t set_size = 0;
    std::string method;
    std::vector<std::complex<double>> coef;

    // |R|^d sum |coef|^2 should equal |S|; returns the relative deviation.
    double parseval_residual() const {
        double sum = 0;
        for (const auto& z : coef) sum += std::norm(z);
        sum *= static_cast<double>(space.size());
        return std::abs(sum - static_cast<double>(set_size)) /
               std::max<double>(1.0, static_cast<double>(set_size));
    }
};

struct SalemReport {
    std::string ring;
    unsigned d = 0;
    std::string variety;
    std::uint64_t size = 0;      // |S|
    double C = 0;                // max nontrivial |coef| * |R|^d / sqrt(|S|)
    std::string argmax;
    Frequency argmax_index = 0;
    bool lower_bound = false;
    std::string method;
    double tolerance = 1e-9;
};

namespace detail {

// Digit rows for a point set: row per point, one digit per axis, in point
// order. Shared by the direct and graph paths.
inline std::vector<std::uint32_t> point_digit_rows(const FrequencySpace& space,
                                                   const std::vector<std::uint64_t>& points) {
    const unsigned d = space.dimension();
    const std::uint32_t axes = space.axes();
    const std::uint64_t q = space.ring().size();
    std::vector<std::uint32_t> rows(points.size() * axes);
    std::vector<std::uint64_t> coords(d);
    for (std::size_t i = 0; i < points.size(); ++i) {
        std::uint64_t p = points[i];
        for (unsigned j = d; j-- > 0;) {
            coords[j] = p % q;
            p /= q;
        }
        space.point_digits(coords.data(), &rows[i * axes]);
    }
    return rows;
}

// Sum of character values over precomputed digit rows, in row order.
inline std::complex<double> row_sum(const FrequencySpace& space, const std::uint32_t* fdig,
                                    const std::vector<std::uint32_t>& rows) {
    const std::uint32_t axes = space.axes();
    std::complex<double> acc = 0;
    for (std::size_t i = 0; i < rows.size() / axes; ++i)
        acc += space.root(space.exponent_num(fdig, &rows[i * axes]));
    return acc;
}

} // namespace detail

// Definition path: coefficient-by-coefficient sums over the point set, in
// ascending point order.
inline Spectrum spectrum_direct(const PointSet& set, const Budget& budget = Budget{}) {
    FrequencySpace space(set.ring, set.d);
    budget.require_work(detail::sat_mul(space.size(), std::max<std::uint64_t>(set.size(), 1)),
                        "spectrum_direct");
    Spectrum s{space, set.size(), "direct", {}};
    s.coef.resize(space.size());
    auto rows = detail::point_digit_rows(space, set.points);
    const double norm = 1.0 / static_cast<double>(space.size());
    std::vector<std::uint32_t> fdig(space.axes());
    for (std::uint64_t f = 0; f < space.size(); ++f) {
        space.decompose(f, fdig.data());
        s.coef[f] = detail::row_sum(space, fdig.data(), rows) * norm;
    }
    return s;
}

// Multidimensional DFT over the cyclic coordinates of (R^d, +): one naive
// length-d_j transform per axis. Matches spectrum_direct within 1e-9.
inline Spectrum spectrum_fft(const PointSet& set, const Budget& budget = Budget{}) {
    FrequencySpace space(set.ring, set.d);
    const std::uint64_t n = space.size();
    budget.require_mem(n, "spectrum_fft");
    std::uint64_t axis_cost = 0;
    for (std::uint32_t a = 0; a < space.axes(); ++a) axis_cost += space.radix(a);
    budget.require_work(detail::sat_mul(n, axis_cost), "spectrum_fft");

    Spectrum s{space, set.size(), "fft", {}};
    s.coef.assign(n, 0);
    {
        std::vector<std::uint32_t> pdig(space.axes());
        std::vector<std::uint64_t> coords(space.dimension());
        const std::uint64_t q = set.ring.size();
        for (auto p : set.points) {
            for (unsigned j = space.dimension(); j-- > 0;) {
                coords[j] = p % q;
                p /= q;
            }
            space.point_digits(coords.data(), pdig.data());
            s.coef[space.compose(pdig.data())] += 1.0;
        }
    }

    const std::uint64_t L = space.root_order();
    std::vector<std::complex<double>> line;
    std::uint64_t stride = n;
    for (std::uint32_t a = 0; a < space.axes(); ++a) {
        const std::uint64_t r = space.radix(a);
        stride /= r;
        const std::uint64_t rot = L / r;
        line.assign(r, 0);
        for (std::uint64_t outer = 0; outer < n; outer += r * stride) {
            for (std::uint64_t inner = 0; inner < stride; ++inner) {
                std::complex<double>* base = &s.coef[outer + inner];
                for (std::uint64_t k = 0; k < r; ++k) {
                    std::complex<double> acc = 0;
                    for (std::uint64_t t = 0; t < r; ++t)
                        acc += base[t * stride] * space.root((k * t % r) * rot);
                    line[k] = acc;
                }
                for (std::uint64_t k = 0; k < r; ++k) base[k * stride] = line[k];
            }
        }
    }
    const double norm = 1.0 / static_cast<double>(n);
    for (auto& z : s.coef) z *= norm;
    return s;
}

// A single graph-variety coefficient, summed over R^{d-1} in ascending point
// order without materializing the variety. Deterministic fixed-size chunking
// keeps results identical for every thread count.
inline std::complex<double> probe_frequency(const NcPolynomial& f, std::int64_t c,
                                            const Ring& ring, unsigned d, Frequency freq,
                                            const Budget& budget = Budget{},
                                            unsigned threads = 1) {
    if (d < 2) throw std::invalid_argument("probe_frequency: d must be >= 2");
    if (f.var_count() > d - 1)
        throw std::invalid_argument("probe_frequency: polynomial uses more than d-1 variables");
    FrequencySpace space(ring, d);
    const std::uint64_t q = ring.size();
    std::uint64_t total = 1;
    for (unsigned i = 0; i + 1 < d; ++i) total = detail::sat_mul(total, q);
    budget.require_work(total, "probe_frequency");

    std::vector<std::uint32_t> fdig(space.axes());
    space.decompose(freq, fdig.data());
    const std::uint32_t m = space.block_digits();
    const std::uint64_t L = space.root_order();
    // nonzero pairing terms only; probes of big rings are very sparse
    struct Term {
        std::uint32_t axis;
        std::uint64_t scale;  // c_a * (L / d_a) mod L
    };
    std::vector<Term> terms;
    for (std::uint32_t a = 0; a < space.axes(); ++a)
        if (fdig[a]) terms.push_back({a, static_cast<std::uint64_t>(fdig[a]) * (L / space.radix(a)) % L});

    std::vector<std::uint32_t> shift_dig(m);
    ring.decompose(ring.integer_image(c), shift_dig.data());
    bool has_shift = ring.integer_image(c) != ring.zero();
    const std::uint32_t free_axes = (d - 1) * m;
    const std::uint64_t chunk = 1 << 16;
    const std::uint64_t nchunks = (total + chunk - 1) / chunk;

    // Points are enumerated by a digit odometer over the d-1 free blocks;
    // evaluation stays in digit space throughout.
    auto run_chunk = [&](std::uint64_t lo, std::uint64_t hi) {
        PolyEvaluator eval(f, ring);
        std::vector<std::uint32_t> pdig(space.axes(), 0);
        std::uint64_t t0 = lo;
        for (std::uint32_t a = free_axes; a-- > 0;) {
            std::uint32_t r = space.radix(a);
            pdig[a] = static_cast<std::uint32_t>(t0 % r);
            t0 /= r;
        }
        std::uint32_t* fx = &pdig[free_axes];
        std::complex<double> acc = 0;
        for (std::uint64_t t = lo; t < hi; ++t) {
            eval.evaluate_digits(pdig.data(), fx);
            if (has_shift) ring.add_digits(fx, shift_dig.data(), fx);
            std::uint64_t num = 0;
            for (const auto& tm : terms) {
                num += pdig[tm.axis] * tm.scale % L;
                if (num >= L) num -= L;
            }
            acc += space.root(num);
            if (t + 1 == hi) break;
            for (std::uint32_t a = free_axes; a-- > 0;) {
                if (++pdig[a] < space.radix(a)) break;
                pdig[a] = 0;
            }
        }
        return acc;
    };

    std::vector<std::complex<double>> chunk_sums(nchunks);
    if (threads <= 1 || nchunks == 1) {
        for (std::uint64_t ci = 0; ci < nchunks; ++ci)
            chunk_sums[ci] = run_chunk(ci * chunk, std::min(total, (ci + 1) * chunk));
    } else {
        std::atomic<std::uint64_t> next{0};
        auto worker = [&]() {
            for (;;) {
                std::uint64_t ci = next.fetch_add(1);
                if (ci >= nchunks) return;
                chunk_sums[ci] = run_chunk(ci * chunk, std::min(total, (ci + 1) * chunk));
            }
        };
        std::vector<std::thread> pool;
        for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    std::complex<double> acc = 0;
    for (const auto& z : chunk_sums) acc += z;  // fixed chunk order
    return acc / static_cast<double>(space.size());
}

// Full spectrum through the graph parameterization: one probe-style sum per
// frequency, sharing the precomputed point digit rows.
inline Spectrum graph_spectrum(const NcPolynomial& f, std::int64_t c, const Ring& ring,
                               unsigned d, const Budget& budget = Budget{}) {
    if (d < 2) throw std::invalid_argument("graph_spectrum: d must be >= 2");
    FrequencySpace space(ring, d);
    const std::uint64_t q = ring.size();
    std::uint64_t fiber = 1;
    for (unsigned i = 0; i + 1 < d; ++i) fiber = detail::sat_mul(fiber, q);
    budget.require_work(detail::sat_mul(space.size(), fiber), "graph_spectrum");

    // digit rows of (x, f(x)+c) in ascending x order
    PolyEvaluator eval(f, ring);
    const std::uint64_t shift = ring.integer_image(c);
    const std::uint32_t axes = space.axes();
    const std::uint32_t m = space.block_digits();
    std::vector<std::uint32_t> rows(fiber * axes);
    std::vector<std::uint64_t> x(d - 1, 0);
    for (std::uint64_t t = 0;; ++t) {
        std::uint32_t* row = &rows[t * axes];
        for (unsigned i = 0; i + 1 < d; ++i) ring.decompose(x[i], row + i * m);
        ring.decompose(ring.add(eval.evaluate(x.data()), shift), row + (d - 1) * m);
        if (t + 1 == fiber) break;
        for (unsigned i = d - 1; i-- > 0;) {
            if (++x[i] < q) break;
            x[i] = 0;
        }
    }

    Spectrum s{space, fiber, "graph", {}};
    s.coef.resize(space.size());
    const double norm = 1.0 / static_cast<double>(space.size());
    std::vector<std::uint32_t> fdig(axes);
    for (std::uint64_t fr = 0; fr < space.size(); ++fr) {
        space.decompose(fr, fdig.data());
        s.coef[fr] = detail::row_sum(space, fdig.data(), rows) * norm;
    }
    return s;
}

// C and argmax over the nontrivial frequencies of a full spectrum.
inline SalemReport salem_constant(const Spectrum& s, const std::string& variety,
                                  double tolerance = 1e-9) {
    if (s.set_size == 0) throw std::invalid_argument("salem_constant: empty variety");
    SalemReport r;
    r.ring = s.space.ring().spec_string();
    r.d = s.space.dimension();
    r.variety = variety;
    r.size = s.set_size;
    r.method = s.method;
    r.tolerance = tolerance;
    double best = -1;
    for (std::uint64_t f = 1; f < s.coef.size(); ++f) {
        double mag = std::abs(s.coef[f]);
        if (mag > best) {
            best = mag;
            r.argmax_index = f;
        }
    }
    r.C = best * static_cast<double>(s.space.size()) /
          std::sqrt(static_cast<double>(s.set_size));
    r.argmax = s.space.to_string(r.argmax_index);
    return r;
}

// Certified lower bound from a probe list; never reported as the constant.
inline SalemReport salem_lower_bound(const NcPolynomial& f, std::int64_t c, const Ring& ring,
                                     unsigned d, const std::vector<Frequency>& probes,
                                     const Budget& budget = Budget{}, unsigned threads = 1,
                                     double tolerance = 1e-9) {
    if (probes.empty()) throw std::invalid_argument("salem_lower_bound: no probe frequencies");
    FrequencySpace space(ring, d);
    std::uint64_t fiber = 1;
    for (unsigned i = 0; i + 1 < d; ++i) fiber = detail::sat_mul(fiber, ring.size());
    SalemReport r;
    r.ring = ring.spec_string();
    r.d = d;
    r.variety = VarietySpec::graph(f, c).to_string();
    r.size = fiber;
    r.method = "probe";
    r.lower_bound = true;
    r.tolerance = tolerance;
    double best = -1;
    for (auto fr : probes) {
        if (fr == 0) continue;  // trivial frequency never bounds C
        double mag = std::abs(probe_frequency(f, c, ring, d, fr, budget, threads));
        if (mag > best) {
            best = mag;
            r.argmax_index = fr;
        }
    }
    if (best < 0) throw std::invalid_argument("salem_lower_bound: only trivial probes given");
    r.C = best * static_cast<double>(space.size()) / std::sqrt(static_cast<double>(fiber));
    r.argmax = space.to_string(r.argmax_index);
    return r;
}

// Full-spectrum Salem computation with method selection. "auto" prefers the
// FFT path and falls back to direct sums when the dense array will not fit.
struct SalemComputation {
    Spectrum spectrum;
    SalemReport report;
};

inline SalemComputation compute_salem(const Ring& ring, unsigned d, const VarietySpec& vspec,
                                      const std::string& method = "auto",
                                      const Budget& budget = Budget{}) {
    PointSet pts = variety_points(vspec, ring, d, budget);
    Spectrum s{FrequencySpace(ring, d), 0, "", {}};
    if (method == "direct") {
        s = spectrum_direct(pts, budget);
    } else if (method == "fft") {
        s = spectrum_fft(pts, budget);
    } else if (method == "graph") {
        if (vspec.kind != VarietySpec::Kind::Graph)
            throw std::invalid_argument("compute_salem: graph method needs a graph variety");
        s = graph_spectrum(vspec.poly, vspec.c, ring, d, budget);
    } else if (method == "auto") {
        std::uint64_t n = 1;
        for (unsigned i = 0; i < d; ++i) n = detail::sat_mul(n, ring.size());
        if (n <= budget.mem)
            s = spectrum_fft(pts, budget);
        else
            s = spectrum_direct(pts, budget);
    } else {
        throw std::invalid_argument("compute_salem: unknown method \"" + method + "\"");
    }
    SalemComputation out{std::move(s), {}};
    out.report = salem_constant(out.spectrum, vspec.to_string());
    return out;
}

} // namespace ringfourier
