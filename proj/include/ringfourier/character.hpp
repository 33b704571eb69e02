#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "ringfourier/ring.hpp"

namespace ringfourier {

// A frequency is an index into the additive dual of R^d: d blocks of
// mixed-radix digits over the ring's additive factors. Index 0 is the
// trivial character.
using Frequency = std::uint64_t;

// The dual group of (R^d, +) together with exact character evaluation.
// Exponents are reduced exactly as integers over the common denominator
// L = lcm of the cyclic factor orders before any floating point enters,
// so character values are bit-reproducible.
class FrequencySpace {
public:
    FrequencySpace(Ring ring, unsigned d) : ring_(std::move(ring)), d_(d) {
        if (d < 1) throw std::invalid_argument("FrequencySpace: d must be >= 1");
        const auto& f = ring_.additive_factors();
        m_ = static_cast<std::uint32_t>(f.size());
        axes_ = d_ * m_;
        size_ = 1;
        for (unsigned i = 0; i < d_; ++i) size_ = detail::sat_mul(size_, ring_.size());
        if (size_ == UINT64_MAX) throw std::invalid_argument("FrequencySpace: |R|^d overflows");
        L_ = 1;
        for (auto dj : f) L_ = std::lcm(L_, static_cast<std::uint64_t>(dj));
        if (L_ > (std::uint64_t{1} << 32))
            throw std::invalid_argument("FrequencySpace: character order too large");
        scale_.resize(m_);
        for (std::uint32_t j = 0; j < m_; ++j) scale_[j] = L_ / f[j];
        if (L_ <= (std::uint64_t{1} << 20)) {
            roots_.resize(L_);
            const double tau = 8.0 * std::atan(1.0);
            for (std::uint64_t t = 0; t < L_; ++t)
                roots_[t] = {std::cos(tau * static_cast<double>(t) / static_cast<double>(L_)),
                             std::sin(tau * static_cast<double>(t) / static_cast<double>(L_))};
        }
    }

    const Ring& ring() const { return ring_; }
    unsigned dimension() const { return d_; }
    std::uint64_t size() const { return size_; }       // |R|^d frequencies
    std::uint32_t axes() const { return axes_; }       // d * m digit axes
    std::uint32_t block_digits() const { return m_; }
    std::uint64_t root_order() const { return L_; }

    std::uint32_t radix(std::uint32_t axis) const {
        return ring_.additive_factors()[axis % m_];
    }

    // Frequency index <-> digit tuple (pure mixed-radix; trivial first).
    void decompose(Frequency freq, std::uint32_t* out) const {
        const auto& f = ring_.additive_factors();
        for (std::uint32_t a = axes_; a-- > 0;) {
            std::uint32_t r = f[a % m_];
            out[a] = static_cast<std::uint32_t>(freq % r);
            freq /= r;
        }
    }

    Frequency compose(const std::uint32_t* digits) const {
        const auto& f = ring_.additive_factors();
        std::uint64_t idx = 0;
        for (std::uint32_t a = 0; a < axes_; ++a) idx = idx * f[a % m_] + digits[a];
        return idx;
    }

    // Digit row of a point given as d element indices.
    void point_digits(const std::uint64_t* point, std::uint32_t* out) const {
        for (unsigned i = 0; i < d_; ++i) ring_.decompose(point[i], out + i * m_);
    }

    // Numerator over L of the pairing exponent sum_j c_j x_j / d_j (mod 1).
    std::uint64_t exponent_num(const std::uint32_t* fdig, const std::uint32_t* pdig) const {
        std::uint64_t num = 0;
        for (std::uint32_t a = 0; a < axes_; ++a) {
            std::uint64_t t = (static_cast<std::uint64_t>(fdig[a]) * pdig[a]) % L_;
            num += t * scale_[a % m_] % L_;
            if (num >= L_) num -= L_;
        }
        return num;
    }

    std::complex<double> root(std::uint64_t num) const {
        if (!roots_.empty()) return roots_[num];
        const double tau = 8.0 * std::atan(1.0);
        double ang = tau * static_cast<double>(num) / static_cast<double>(L_);
        return {std::cos(ang), std::sin(ang)};
    }

    std::complex<double> character_value(Frequency freq, const std::uint64_t* point) const {
        std::vector<std::uint32_t> fdig(axes_), pdig(axes_);
        decompose(freq, fdig.data());
        point_digits(point, pdig.data());
        return root(exponent_num(fdig.data(), pdig.data()));
    }

    std::complex<double> character_value(Frequency freq, const std::vector<std::uint64_t>& point) const {
        if (point.size() != d_) throw std::invalid_argument("character_value: dimension mismatch");
        return character_value(freq, point.data());
    }

    // Mixed-radix digit string: blocks separated by '|', digits by ','.
    std::string to_string(Frequency freq) const {
        std::vector<std::uint32_t> dig(axes_);
        decompose(freq, dig.data());
        std::string s;
        for (unsigned i = 0; i < d_; ++i) {
            if (i) s += '|';
            for (std::uint32_t j = 0; j < m_; ++j) {
                if (j) s += ',';
                s += std::to_string(dig[i * m_ + j]);
            }
        }
        return s;
    }

    // The frequency whose character is x -> psi_gen(sum b_i x_i), psi_gen the
    // ring's generating character. Requires a trace-admissible ring.
    Frequency trace_frequency(const std::vector<std::uint64_t>& b) const {
        if (b.size() != d_) throw std::invalid_argument("trace_frequency: need one element per block");
        if (!ring_.trace_admissible())
            throw std::invalid_argument(
                "trace_frequency: ring is not trace-admissible; only generic frequencies exist");
        const auto& f = ring_.additive_factors();
        std::vector<std::uint32_t> fdig(axes_, 0), basis(m_, 0);
        for (unsigned i = 0; i < d_; ++i) {
            for (std::uint32_t j = 0; j < m_; ++j) {
                std::fill(basis.begin(), basis.end(), 0);
                basis[j] = 1;
                std::uint64_t ej = ring_.compose(basis.data());
                auto [num, den] = ring_.gen_char_exponent(ring_.mul(b[i], ej));
                // c/d_j = num/den (mod 1); den divides num*d_j for dual elements
                std::uint64_t t = num * f[j];
                if (t % den != 0)
                    throw std::logic_error("trace_frequency: generating character has wrong order");
                fdig[i * m_ + j] = static_cast<std::uint32_t>((t / den) % f[j]);
            }
        }
        return compose(fdig.data());
    }

    std::vector<Frequency> enumerate_frequencies(const Budget& budget = Budget{}) const {
        budget.require_work(size_, "enumerate_frequencies");
        std::vector<Frequency> out(size_);
        for (std::uint64_t i = 0; i < size_; ++i) out[i] = i;
        return out;
    }

private:
    Ring ring_;
    unsigned d_;
    std::uint32_t m_ = 0, axes_ = 0;
    std::uint64_t size_ = 0, L_ = 1;
    std::vector<std::uint64_t> scale_;
    std::vector<std::complex<double>> roots_;
};

} // namespace ringfourier
