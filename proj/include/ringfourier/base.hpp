#pragma once

#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace ringfourier {

// Thrown on malformed DSL input (ring specs, polynomials).
class parse_error : public std::runtime_error {
public:
    explicit parse_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Thrown when an operation would exceed the configured work/memory budget.
class budget_error : public std::runtime_error {
public:
    budget_error(const std::string& what_op, std::uint64_t needed, std::uint64_t limit)
        : std::runtime_error(what_op + ": needs " + std::to_string(needed) +
                             " work units, budget is " + std::to_string(limit)),
          needed(needed), limit(limit) {}
    std::uint64_t needed;
    std::uint64_t limit;
};

// Guardrail for enumeration-heavy operations. Checked per call, not metered
// across a run. `work` counts character evaluations or pair lookups; `mem`
// counts dense spectrum coefficients held in memory at once.
struct Budget {
    std::uint64_t work = 100'000'000;      // default: 1e8 character evaluations
    std::uint64_t mem = 16'777'216;        // dense coefficients (16 bytes each)

    void require_work(std::uint64_t needed, const char* op) const {
        if (needed > work) throw budget_error(op, needed, work);
    }
    void require_mem(std::uint64_t needed, const char* op) const {
        if (needed > mem) throw budget_error(op, needed, mem);
    }

    // Reads RINGFOURIER_BUDGET (work units) if set.
    static Budget from_env() {
        Budget b;
        if (const char* s = std::getenv("RINGFOURIER_BUDGET")) {
            char* end = nullptr;
            unsigned long long v = std::strtoull(s, &end, 10);
            if (end && *end == '\0' && v > 0) b.work = v;
        }
        return b;
    }
};

namespace detail {

inline std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
    unsigned __int128 r = static_cast<unsigned __int128>(a) * b;
    return r > UINT64_MAX ? UINT64_MAX : static_cast<std::uint64_t>(r);
}

inline std::uint64_t sat_pow(std::uint64_t base, unsigned exp) {
    std::uint64_t r = 1;
    while (exp--) r = sat_mul(r, base);
    return r;
}

inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Trial-division factorization, ascending primes.
inline std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n) {
    std::vector<std::pair<std::uint64_t, unsigned>> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            unsigned k = 0;
            while (n % d == 0) { n /= d; ++k; }
            out.emplace_back(d, k);
        }
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

// Returns (p, k) with n = p^k, or (0, 0) if n is not a prime power >= 2.
inline std::pair<std::uint64_t, unsigned> prime_power(std::uint64_t n) {
    if (n < 2) return {0, 0};
    auto f = factorize(n);
    if (f.size() != 1) return {0, 0};
    return f[0];
}

inline std::uint64_t euler_phi(std::uint64_t n) {
    std::uint64_t r = n;
    for (auto [p, k] : factorize(n)) r = r / p * (p - 1);
    return r;
}

// Deterministic RNG for seeded sampling. std::shuffle and
// std::uniform_int_distribution are implementation-defined, so sampling is
// spelled out here to keep outputs identical across standard libraries.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next() { return gen_(); }

    // Unbiased value in [0, n) by rejection.
    std::uint64_t bounded(std::uint64_t n) {
        std::uint64_t threshold = (0 - n) % n;
        for (;;) {
            std::uint64_t r = gen_();
            if (r >= threshold) return r % n;
        }
    }

    // First k entries of a Fisher-Yates shuffle of 0..n-1: a uniform
    // size-k subset in random order.
    std::vector<std::uint64_t> sample_subset(std::uint64_t n, std::uint64_t k) {
        std::vector<std::uint64_t> idx(n);
        for (std::uint64_t i = 0; i < n; ++i) idx[i] = i;
        for (std::uint64_t i = 0; i < k; ++i) {
            std::uint64_t j = i + bounded(n - i);
            std::swap(idx[i], idx[j]);
        }
        idx.resize(k);
        return idx;
    }

private:
    std::mt19937_64 gen_;
};

} // namespace detail
} // namespace ringfourier
