#pragma once

#include <algorithm>
#include <cassert>
#include <cctype>
#include <cstdint>
#include <memory>
#include <numeric>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ringfourier/abelian.hpp"
#include "ringfourier/base.hpp"

namespace ringfourier {

// Explicit Cayley tables with designated identities. Used for quotient rings
// and hand-built witnesses (upper-triangular rings); not parseable from the
// spec DSL.
struct TableData {
    std::uint32_t q = 0;
    std::vector<std::uint32_t> add;  // q*q row-major
    std::vector<std::uint32_t> mul;  // q*q row-major
    std::uint32_t zero = 0;
    std::uint32_t one = 1;
    std::string label;               // display name, e.g. "ut2(gf(2))"
};

struct RingSpec {
    enum class Kind { Zmod, GF, Matrix, Product, Table };

    Kind kind = Kind::Zmod;
    std::uint64_t n = 0;   // Zmod modulus or Matrix dimension
    std::uint64_t p = 0;   // GF characteristic
    unsigned k = 0;        // GF extension degree
    std::vector<RingSpec> args;                 // Matrix base / Product components
    std::shared_ptr<const TableData> table;

    static RingSpec zmod(std::uint64_t n) {
        RingSpec s;
        s.kind = Kind::Zmod;
        s.n = n;
        return s;
    }
    static RingSpec gf(std::uint64_t p, unsigned k) {
        RingSpec s;
        s.kind = Kind::GF;
        s.p = p;
        s.k = k;
        return s;
    }
    // gf(q) with q = p^k factored automatically
    static RingSpec gf(std::uint64_t q) {
        auto [p, k] = detail::prime_power(q);
        if (p == 0) throw parse_error("gf(" + std::to_string(q) + "): not a prime power");
        return gf(p, k);
    }
    static RingSpec matrix(std::uint64_t n, RingSpec base) {
        RingSpec s;
        s.kind = Kind::Matrix;
        s.n = n;
        s.args.push_back(std::move(base));
        return s;
    }
    static RingSpec product(std::vector<RingSpec> comps) {
        RingSpec s;
        s.kind = Kind::Product;
        s.args = std::move(comps);
        return s;
    }
    static RingSpec table_ring(TableData data) {
        RingSpec s;
        s.kind = Kind::Table;
        s.table = std::make_shared<const TableData>(std::move(data));
        return s;
    }

    std::string to_string() const {
        switch (kind) {
            case Kind::Zmod: return "zmod(" + std::to_string(n) + ")";
            case Kind::GF: return "gf(" + std::to_string(detail::sat_pow(p, k)) + ")";
            case Kind::Matrix: return "mat(" + std::to_string(n) + "," + args[0].to_string() + ")";
            case Kind::Product: {
                std::string s = "prod(";
                for (std::size_t i = 0; i < args.size(); ++i) {
                    if (i) s += ",";
                    s += args[i].to_string();
                }
                return s + ")";
            }
            case Kind::Table:
                return table->label.empty() ? "table(q=" + std::to_string(table->q) + ")"
                                            : table->label;
        }
        return "?";
    }
};

// ---------------------------------------------------------------------------
// Ring-spec DSL:  zmod(N) | gf(Q) | gf(P,K) | mat(N, spec) | prod(spec, ...)
// ASCII, case- and whitespace-insensitive.
// ---------------------------------------------------------------------------
namespace detail {

class SpecParser {
public:
    explicit SpecParser(std::string_view text) {
        for (char c : text)
            if (!std::isspace(static_cast<unsigned char>(c)))
                src_.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    }

    RingSpec parse() {
        RingSpec s = parse_spec();
        if (pos_ != src_.size()) fail("trailing input");
        return s;
    }

private:
    std::string src_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& msg) {
        throw parse_error("ring spec: " + msg + " at position " + std::to_string(pos_) +
                          " in \"" + src_ + "\"");
    }

    char peek() const { return pos_ < src_.size() ? src_[pos_] : '\0'; }
    void expect(char c) {
        if (peek() != c) fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    std::uint64_t parse_int() {
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected integer");
        std::uint64_t v = 0;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            v = v * 10 + static_cast<std::uint64_t>(src_[pos_] - '0');
            if (v > (std::uint64_t{1} << 62)) fail("integer too large");
            ++pos_;
        }
        return v;
    }

    std::string parse_name() {
        std::size_t start = pos_;
        while (std::isalpha(static_cast<unsigned char>(peek()))) ++pos_;
        if (start == pos_) fail("expected constructor name");
        return src_.substr(start, pos_ - start);
    }

    RingSpec parse_spec() {
        std::string name = parse_name();
        expect('(');
        RingSpec out;
        if (name == "zmod") {
            std::uint64_t n = parse_int();
            if (n < 2) fail("zmod modulus must be >= 2");
            out = RingSpec::zmod(n);
        } else if (name == "gf") {
            std::uint64_t a = parse_int();
            if (peek() == ',') {
                ++pos_;
                std::uint64_t k = parse_int();
                if (!is_prime(a)) fail("gf(p,k): p must be prime");
                if (k < 1 || k > 62) fail("gf(p,k): k must be >= 1");
                out = RingSpec::gf(a, static_cast<unsigned>(k));
            } else {
                auto [p, k] = prime_power(a);
                if (p == 0) fail("gf(q): q must be a prime power >= 2");
                out = RingSpec::gf(p, k);
            }
        } else if (name == "mat") {
            std::uint64_t n = parse_int();
            if (n < 1) fail("mat dimension must be >= 1");
            expect(',');
            out = RingSpec::matrix(n, parse_spec());
        } else if (name == "prod") {
            std::vector<RingSpec> comps;
            comps.push_back(parse_spec());
            while (peek() == ',') {
                ++pos_;
                comps.push_back(parse_spec());
            }
            if (comps.size() < 2) fail("prod needs at least two components");
            out = RingSpec::product(std::move(comps));
        } else {
            fail("unknown constructor \"" + name + "\"");
        }
        expect(')');
        return out;
    }
};

} // namespace detail

inline RingSpec parse_ring_spec(std::string_view text) {
    return detail::SpecParser(text).parse();
}

// ---------------------------------------------------------------------------
// Ring
// ---------------------------------------------------------------------------

namespace detail {

// Full multiplication tables are materialized up to this size; larger rings
// multiply structurally on demand.
constexpr std::uint64_t kMulTableLimit = 4096;

// Ring axioms are verified exhaustively on Table construction up to this size.
constexpr std::uint64_t kAxiomCheckLimit = 256;

struct RingData {
    RingSpec spec;
    std::uint64_t q = 0;
    std::uint64_t char_ = 0;
    std::uint64_t one = 1;
    std::uint64_t zero = 0;

    std::uint32_t m = 0;                   // number of additive cyclic factors
    std::vector<std::uint32_t> factors;    // d_1..d_m
    std::vector<std::uint64_t> strides;    // strides[j] = prod_{i>j} d_i

    // GF
    std::uint64_t gf_p = 0;
    unsigned gf_k = 0;
    std::vector<std::uint32_t> gf_modulus;   // c_0..c_{k-1} of x^k + sum c_i x^i
    std::vector<std::uint32_t> gf_tr_basis;  // Tr(t^i) for i = 0..k-1

    // Matrix
    std::shared_ptr<const RingData> base;
    std::uint32_t mat_n = 0;

    // Product
    std::vector<std::shared_ptr<const RingData>> comps;
    std::vector<std::uint32_t> comp_digit_off;  // digit offset per component

    // Table
    std::shared_ptr<const TableData> table;
    std::vector<std::uint32_t> tbl_digits;    // elem -> digit tuple (flat q*m)
    std::vector<std::uint32_t> tbl_undigits;  // mixed-radix digit index -> elem

    std::vector<std::uint32_t> mul_table;     // q*q when materialized

    bool trace_admissible = false;
};

std::shared_ptr<const RingData> make_ring_data(const RingSpec& spec);

} // namespace detail

class Ring {
public:
    Ring() = default;
    explicit Ring(const RingSpec& spec) : d_(detail::make_ring_data(spec)) {}
    explicit Ring(std::string_view spec_text) : Ring(parse_ring_spec(spec_text)) {}

    const RingSpec& spec() const { return d_->spec; }
    std::string spec_string() const { return d_->spec.to_string(); }
    std::uint64_t size() const { return d_->q; }
    std::uint64_t characteristic() const { return d_->char_; }
    std::uint64_t zero() const { return d_->zero; }
    std::uint64_t one() const { return d_->one; }
    bool trace_admissible() const { return d_->trace_admissible; }

    bool same_ring(const Ring& other) const {
        if (d_ == other.d_) return true;
        if (d_->spec.kind == RingSpec::Kind::Table || other.d_->spec.kind == RingSpec::Kind::Table)
            return d_->spec.table == other.d_->spec.table;
        return spec_string() == other.spec_string();
    }

    // --- additive coordinates ------------------------------------------------

    std::uint32_t num_factors() const { return d_->m; }
    const std::vector<std::uint32_t>& additive_factors() const { return d_->factors; }

    void decompose(std::uint64_t idx, std::uint32_t* out) const {
        const auto& dd = *d_;
        if (dd.spec.kind == RingSpec::Kind::Table) {
            const std::uint32_t* src = &dd.tbl_digits[idx * dd.m];
            std::copy(src, src + dd.m, out);
            return;
        }
        for (std::uint32_t j = dd.m; j-- > 0;) {
            out[j] = static_cast<std::uint32_t>(idx % dd.factors[j]);
            idx /= dd.factors[j];
        }
    }

    std::uint64_t compose(const std::uint32_t* digits) const {
        const auto& dd = *d_;
        std::uint64_t idx = 0;
        for (std::uint32_t j = 0; j < dd.m; ++j) idx = idx * dd.factors[j] + digits[j];
        if (dd.spec.kind == RingSpec::Kind::Table) return dd.tbl_undigits[idx];
        return idx;
    }

    std::vector<std::uint32_t> additive_coordinates(std::uint64_t idx) const {
        check_index(idx);
        std::vector<std::uint32_t> out(d_->m);
        decompose(idx, out.data());
        return out;
    }

    std::uint64_t coordinates_to_element(const std::vector<std::uint32_t>& digits) const {
        if (digits.size() != d_->m)
            throw std::invalid_argument("coordinates_to_element: wrong tuple length");
        for (std::uint32_t j = 0; j < d_->m; ++j)
            if (digits[j] >= d_->factors[j])
                throw std::invalid_argument("coordinates_to_element: coordinate out of range");
        return compose(digits.data());
    }

    // --- arithmetic ----------------------------------------------------------

    std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
        const auto& dd = *d_;
        switch (dd.spec.kind) {
            case RingSpec::Kind::Zmod: {
                std::uint64_t s = a + b;
                return s >= dd.q ? s - dd.q : s;
            }
            case RingSpec::Kind::GF:
                if (dd.gf_k == 1) {
                    std::uint64_t s = a + b;
                    return s >= dd.q ? s - dd.q : s;
                }
                break;
            case RingSpec::Kind::Table:
                return dd.table->add[a * dd.q + b];
            default:
                break;
        }
        std::uint32_t da[kMaxDigits], db[kMaxDigits];
        decompose(a, da);
        decompose(b, db);
        add_digits(da, db, da);
        return compose(da);
    }

    // Componentwise digit addition; valid for every ring kind because the
    // digit map is an additive isomorphism onto prod Z/d_j.
    void add_digits(const std::uint32_t* a, const std::uint32_t* b, std::uint32_t* out) const {
        const auto& f = d_->factors;
        for (std::uint32_t j = 0; j < d_->m; ++j) {
            std::uint32_t s = a[j] + b[j];
            out[j] = s >= f[j] ? s - f[j] : s;
        }
    }

    std::uint64_t neg(std::uint64_t a) const {
        const auto& dd = *d_;
        if (dd.spec.kind == RingSpec::Kind::Zmod) return a == 0 ? 0 : dd.q - a;
        std::uint32_t da[kMaxDigits];
        decompose(a, da);
        for (std::uint32_t j = 0; j < dd.m; ++j)
            if (da[j] != 0) da[j] = dd.factors[j] - da[j];
        return compose(da);
    }

    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return add(a, neg(b)); }

    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
        const auto& dd = *d_;
        if (!dd.mul_table.empty()) return dd.mul_table[a * dd.q + b];
        return mul_structural(a, b);
    }

    // Digit-level multiply for enumeration hot paths; avoids re-deriving
    // operand digits when the caller already has them.
    void mul_digits(const std::uint32_t* a, const std::uint32_t* b, std::uint32_t* out) const {
        const auto& dd = *d_;
        switch (dd.spec.kind) {
            case RingSpec::Kind::Matrix: {
                const Ring base = base_ring();
                const std::uint32_t n = dd.mat_n;
                const std::uint32_t bm = dd.base->m;
                std::uint64_t ae[kMaxMatrixEntries], be[kMaxMatrixEntries];
                for (std::uint32_t e = 0; e < n * n; ++e) {
                    ae[e] = base.compose(a + static_cast<std::size_t>(e) * bm);
                    be[e] = base.compose(b + static_cast<std::size_t>(e) * bm);
                }
                for (std::uint32_t i = 0; i < n; ++i)
                    for (std::uint32_t j = 0; j < n; ++j) {
                        std::uint64_t acc = dd.base->zero;
                        for (std::uint32_t t = 0; t < n; ++t)
                            acc = base.add(acc, base.mul(ae[i * n + t], be[t * n + j]));
                        base.decompose(acc, out + static_cast<std::size_t>(i * n + j) * bm);
                    }
                return;
            }
            case RingSpec::Kind::Product: {
                std::uint32_t off = 0;
                for (const auto& c : dd.comps) {
                    Ring comp(c);
                    comp.mul_digits(a + off, b + off, out + off);
                    off += c->m;
                }
                return;
            }
            default: {
                std::uint64_t r = mul(compose(a), compose(b));
                decompose(r, out);
                return;
            }
        }
    }

    // Image of k under the unique unital map Z -> R; k may be negative.
    std::uint64_t integer_image(std::int64_t k) const {
        const auto& dd = *d_;
        std::int64_t c = static_cast<std::int64_t>(dd.char_);
        std::uint64_t r = static_cast<std::uint64_t>(((k % c) + c) % c);
        switch (dd.spec.kind) {
            case RingSpec::Kind::Zmod:
                return r;
            case RingSpec::Kind::GF:
                return r;  // index of the prime-subfield element r
            case RingSpec::Kind::Matrix: {
                const Ring base = base_ring();
                std::uint64_t img = base.integer_image(static_cast<std::int64_t>(r));
                std::vector<std::uint32_t> dig(dd.m, 0);
                for (std::uint32_t i = 0; i < dd.mat_n; ++i)
                    base.decompose(img, dig.data() + static_cast<std::size_t>(i * dd.mat_n + i) * dd.base->m);
                return compose(dig.data());
            }
            case RingSpec::Kind::Product: {
                std::vector<std::uint32_t> dig(dd.m, 0);
                std::uint32_t off = 0;
                for (const auto& c : dd.comps) {
                    Ring comp(c);
                    comp.decompose(comp.integer_image(static_cast<std::int64_t>(r)), dig.data() + off);
                    off += c->m;
                }
                return compose(dig.data());
            }
            case RingSpec::Kind::Table: {
                std::uint64_t img = dd.zero;
                for (std::uint64_t i = 0; i < r; ++i) img = add(img, dd.one);
                return img;
            }
        }
        return 0;
    }

    // --- units ---------------------------------------------------------------

    // Exhaustive search for an inverse. A one-sided inverse suffices in a
    // finite ring; two-sidedness is asserted when found.
    bool is_unit(std::uint64_t a) const {
        for (std::uint64_t b = 0; b < d_->q; ++b) {
            if (mul(a, b) == d_->one) {
                assert(mul(b, a) == d_->one);
                return true;
            }
        }
        return false;
    }

    std::vector<std::uint64_t> units(const Budget& budget = Budget{}) const {
        budget.require_work(detail::sat_mul(d_->q, d_->q), "units");
        std::vector<std::uint64_t> out;
        for (std::uint64_t a = 0; a < d_->q; ++a)
            if (is_unit(a)) out.push_back(a);
        return out;
    }

    std::uint64_t unit_count() const { return unit_count_of(*d_); }

    // --- matrix helpers --------------------------------------------------------

    Ring base_ring() const {
        if (!d_->base) throw std::invalid_argument("base_ring: not a matrix ring");
        return Ring(d_->base);
    }

    std::vector<Ring> component_rings() const {
        std::vector<Ring> out;
        for (const auto& c : d_->comps) out.push_back(Ring(c));
        return out;
    }

    std::uint64_t matrix_entry(std::uint64_t idx, std::uint32_t i, std::uint32_t j) const {
        const auto& dd = *d_;
        if (dd.spec.kind != RingSpec::Kind::Matrix)
            throw std::invalid_argument("matrix_entry: not a matrix ring");
        std::vector<std::uint32_t> dig(dd.m);
        decompose(idx, dig.data());
        return base_ring().compose(dig.data() + static_cast<std::size_t>(i * dd.mat_n + j) * dd.base->m);
    }

    std::uint64_t matrix_from_entries(const std::vector<std::uint64_t>& entries) const {
        const auto& dd = *d_;
        if (dd.spec.kind != RingSpec::Kind::Matrix)
            throw std::invalid_argument("matrix_from_entries: not a matrix ring");
        if (entries.size() != static_cast<std::size_t>(dd.mat_n) * dd.mat_n)
            throw std::invalid_argument("matrix_from_entries: wrong entry count");
        const Ring base = base_ring();
        std::vector<std::uint32_t> dig(dd.m);
        for (std::uint32_t e = 0; e < dd.mat_n * dd.mat_n; ++e)
            base.decompose(entries[e], dig.data() + static_cast<std::size_t>(e) * dd.base->m);
        return compose(dig.data());
    }

    // E_ij with a given base-ring value at (i, j), zero elsewhere.
    std::uint64_t matrix_unit(std::uint32_t i, std::uint32_t j, std::uint64_t base_value) const {
        const auto& dd = *d_;
        std::vector<std::uint64_t> entries(static_cast<std::size_t>(dd.mat_n) * dd.mat_n,
                                           dd.base ? dd.base->zero : 0);
        entries.at(static_cast<std::size_t>(i) * dd.mat_n + j) = base_value;
        return matrix_from_entries(entries);
    }

    std::uint64_t matrix_trace(std::uint64_t idx) const {
        const auto& dd = *d_;
        const Ring base = base_ring();
        std::uint64_t acc = dd.base->zero;
        for (std::uint32_t i = 0; i < dd.mat_n; ++i)
            acc = base.add(acc, matrix_entry(idx, i, i));
        return acc;
    }

    // --- generating character (trace pairing) ---------------------------------
    //
    // Exponent of the ring's generating additive character at an element, as
    // an exact rational num/den taken mod 1. Zmod: x/n. GF: Tr(x)/p.
    // Matrix: exponent of tr(A) over the base. Product: componentwise sum.
    std::pair<std::uint64_t, std::uint64_t> gen_char_exponent(std::uint64_t idx) const {
        const auto& dd = *d_;
        switch (dd.spec.kind) {
            case RingSpec::Kind::Zmod:
                return {idx, dd.q};
            case RingSpec::Kind::GF: {
                std::uint64_t tr = 0, rest = idx;
                for (unsigned i = 0; i < dd.gf_k; ++i) {
                    tr += (rest % dd.gf_p) * dd.gf_tr_basis[i];
                    rest /= dd.gf_p;
                }
                return {tr % dd.gf_p, dd.gf_p};
            }
            case RingSpec::Kind::Matrix:
                return base_ring().gen_char_exponent(matrix_trace(idx));
            case RingSpec::Kind::Product: {
                std::uint64_t den = 1, num = 0;
                std::vector<std::uint32_t> dig(dd.m);
                decompose(idx, dig.data());
                std::uint32_t off = 0;
                for (const auto& c : dd.comps) {
                    Ring comp(c);
                    auto [cn, cd] = comp.gen_char_exponent(comp.compose(dig.data() + off));
                    std::uint64_t l = std::lcm(den, cd);
                    num = num * (l / den) + cn * (l / cd);
                    den = l;
                    num %= den;
                    off += c->m;
                }
                return {num, den};
            }
            case RingSpec::Kind::Table:
                throw std::invalid_argument(
                    "gen_char_exponent: ring is not trace-admissible (table ring); "
                    "only generic frequencies are available");
        }
        return {0, 1};
    }

    // --- internals exposed for sibling headers --------------------------------

    static constexpr std::uint32_t kMaxDigits = 64;
    static constexpr std::uint32_t kMaxMatrixEntries = 64;

    const detail::RingData& data() const { return *d_; }
    explicit Ring(std::shared_ptr<const detail::RingData> d) : d_(std::move(d)) {}

private:
    std::shared_ptr<const detail::RingData> d_;

    void check_index(std::uint64_t idx) const {
        if (idx >= d_->q) throw std::invalid_argument("element index out of range");
    }

    std::uint64_t mul_structural(std::uint64_t a, std::uint64_t b) const {
        const auto& dd = *d_;
        switch (dd.spec.kind) {
            case RingSpec::Kind::Zmod:
                return (a * b) % dd.q;
            case RingSpec::Kind::GF: {
                if (dd.gf_k == 1) return (a * b) % dd.gf_p;
                const std::uint64_t p = dd.gf_p;
                const unsigned k = dd.gf_k;
                std::uint32_t ca[kMaxDigits], cb[kMaxDigits];
                std::uint64_t acc[2 * kMaxDigits] = {0};
                std::uint64_t ra = a, rb = b;
                for (unsigned i = 0; i < k; ++i) { ca[i] = static_cast<std::uint32_t>(ra % p); ra /= p; }
                for (unsigned i = 0; i < k; ++i) { cb[i] = static_cast<std::uint32_t>(rb % p); rb /= p; }
                for (unsigned i = 0; i < k; ++i)
                    for (unsigned j = 0; j < k; ++j)
                        acc[i + j] += static_cast<std::uint64_t>(ca[i]) * cb[j];
                // reduce by the monic modulus x^k + sum c_i x^i
                for (unsigned i = 2 * k - 2; i >= k; --i) {
                    std::uint64_t c = acc[i] % p;
                    if (c) {
                        std::uint64_t mc = p - c;
                        for (unsigned j = 0; j < k; ++j)
                            acc[i - k + j] += mc * dd.gf_modulus[j];
                    }
                    if (i == k) break;
                }
                std::uint64_t idx = 0;
                for (unsigned i = k; i-- > 0;) idx = idx * p + acc[i] % p;
                return idx;
            }
            case RingSpec::Kind::Matrix:
            case RingSpec::Kind::Product: {
                std::uint32_t da[kMaxDigits], db[kMaxDigits], dout[kMaxDigits];
                decompose(a, da);
                decompose(b, db);
                mul_digits(da, db, dout);
                return compose(dout);
            }
            case RingSpec::Kind::Table:
                return dd.table->mul[a * dd.q + b];
        }
        return 0;
    }

    static std::uint64_t unit_count_of(const detail::RingData& dd) {
        switch (dd.spec.kind) {
            case RingSpec::Kind::Zmod:
                return detail::euler_phi(dd.q);
            case RingSpec::Kind::GF:
                return dd.q - 1;
            case RingSpec::Kind::Matrix:
                return matrix_unit_count(dd.mat_n, *dd.base);
            case RingSpec::Kind::Product: {
                std::uint64_t r = 1;
                for (const auto& c : dd.comps) r = detail::sat_mul(r, unit_count_of(*c));
                return r;
            }
            case RingSpec::Kind::Table: {
                // exhaustive: table rings are small by construction
                const auto& t = *dd.table;
                std::uint64_t count = 0;
                for (std::uint64_t a = 0; a < dd.q; ++a)
                    for (std::uint64_t b = 0; b < dd.q; ++b)
                        if (t.mul[a * dd.q + b] == dd.one && t.mul[b * dd.q + a] == dd.one) {
                            ++count;
                            break;
                        }
                return count;
            }
        }
        return 0;
    }

    // |GL_n| over the base, reduced case by case; exhaustive only for
    // table bases.
    static std::uint64_t matrix_unit_count(std::uint32_t n, const detail::RingData& base) {
        switch (base.spec.kind) {
            case RingSpec::Kind::GF:
                return gl_count(n, base.q);
            case RingSpec::Kind::Zmod: {
                std::uint64_t r = 1;
                for (auto [p, k] : detail::factorize(base.q)) {
                    // |GL_n(Z/p^k)| = p^{n^2 (k-1)} |GL_n(F_p)|
                    std::uint64_t f = detail::sat_mul(
                        detail::sat_pow(p, static_cast<unsigned>(n) * n * (k - 1)), gl_count(n, p));
                    r = detail::sat_mul(r, f);
                }
                return r;
            }
            case RingSpec::Kind::Product: {
                std::uint64_t r = 1;
                for (const auto& c : base.comps) r = detail::sat_mul(r, matrix_unit_count(n, *c));
                return r;
            }
            case RingSpec::Kind::Matrix:
                // M_n(M_m(S)) = M_{nm}(S)
                return matrix_unit_count(n * base.mat_n, *base.base);
            case RingSpec::Kind::Table:
                throw std::invalid_argument(
                    "unit_count: matrix ring over a table base has no closed form; "
                    "enumerate units() instead");
        }
        return 0;
    }

    static std::uint64_t gl_count(std::uint32_t n, std::uint64_t q) {
        std::uint64_t r = 1, qn = detail::sat_pow(q, n);
        for (std::uint32_t i = 0; i < n; ++i)
            r = detail::sat_mul(r, qn - detail::sat_pow(q, i));
        return r;
    }
};

// Element wrapper carrying its owning ring; mixed-ring operands throw.
class Element {
public:
    Element(Ring ring, std::uint64_t index) : ring_(std::move(ring)), index_(index) {
        if (index_ >= ring_.size()) throw std::invalid_argument("element index out of range");
    }

    std::uint64_t index() const { return index_; }
    const Ring& ring() const { return ring_; }

    friend Element operator+(const Element& a, const Element& b) {
        a.check(b);
        return Element(a.ring_, a.ring_.add(a.index_, b.index_));
    }
    friend Element operator-(const Element& a, const Element& b) {
        a.check(b);
        return Element(a.ring_, a.ring_.sub(a.index_, b.index_));
    }
    friend Element operator*(const Element& a, const Element& b) {
        a.check(b);
        return Element(a.ring_, a.ring_.mul(a.index_, b.index_));
    }
    Element operator-() const { return Element(ring_, ring_.neg(index_)); }
    friend bool operator==(const Element& a, const Element& b) {
        a.check(b);
        return a.index_ == b.index_;
    }

private:
    Ring ring_;
    std::uint64_t index_;

    void check(const Element& other) const {
        if (!ring_.same_ring(other.ring_))
            throw std::invalid_argument("mixed-ring operands");
    }
};

// ---------------------------------------------------------------------------
// Construction
// ---------------------------------------------------------------------------

namespace detail {

inline void poly_find_modulus(std::uint64_t p, unsigned k, std::vector<std::uint32_t>& out) {
    // Lexicographically smallest monic irreducible of degree k over Z/p,
    // coefficient tuple (c_0..c_{k-1}) ordered low-degree-first.
    auto divisible = [&](const std::vector<std::uint32_t>& f, const std::vector<std::uint32_t>& g) {
        // f monic deg k, g monic deg d; synthetic division, true iff remainder 0
        std::vector<std::int64_t> r(f.begin(), f.end());
        r.push_back(1);  // monic leading term
        unsigned d = static_cast<unsigned>(g.size());
        for (unsigned i = k; i >= d; --i) {
            std::int64_t c = r[i] % static_cast<std::int64_t>(p);
            if (c) {
                for (unsigned j = 0; j < d; ++j)
                    r[i - d + j] -= c * g[j];
                r[i] = 0;
            }
            if (i == d) break;
        }
        for (unsigned i = 0; i < d; ++i)
            if (((r[i] % static_cast<std::int64_t>(p)) + p) % p != 0) return false;
        return true;
    };

    std::uint64_t total = sat_pow(p, k);
    for (std::uint64_t t = 0; t < total; ++t) {
        // t encodes (c_0..c_{k-1}) with c_0 most significant, giving lex order
        std::vector<std::uint32_t> cand(k);
        std::uint64_t rest = t;
        for (unsigned i = k; i-- > 0;) {
            cand[i] = static_cast<std::uint32_t>(rest % p);
            rest /= p;
        }
        bool irreducible = true;
        // trial divisors: all monic g of degree 1..k/2
        for (unsigned d = 1; irreducible && d <= k / 2; ++d) {
            std::uint64_t gn = sat_pow(p, d);
            for (std::uint64_t gt = 0; gt < gn; ++gt) {
                std::vector<std::uint32_t> g(d);
                std::uint64_t gr = gt;
                for (unsigned i = 0; i < d; ++i) { g[i] = static_cast<std::uint32_t>(gr % p); gr /= p; }
                if (divisible(cand, g)) { irreducible = false; break; }
            }
        }
        if (k == 1) irreducible = true;  // every monic linear is irreducible
        if (irreducible) {
            out = cand;
            return;
        }
    }
    throw std::logic_error("no irreducible polynomial found");  // unreachable
}

inline void validate_table(const TableData& t) {
    const std::uint64_t q = t.q;
    if (q < 2) throw std::invalid_argument("table ring: need |R| >= 2 (1 != 0)");
    if (t.add.size() != q * q || t.mul.size() != q * q)
        throw std::invalid_argument("table ring: table size mismatch");
    if (t.zero == t.one) throw std::invalid_argument("table ring: 1 = 0");
    for (std::uint64_t x = 0; x < q * q; ++x)
        if (t.add[x] >= q || t.mul[x] >= q)
            throw std::invalid_argument("table ring: entry out of range");
    for (std::uint64_t x = 0; x < q; ++x) {
        if (t.add[t.zero * q + x] != x || t.add[x * q + t.zero] != x)
            throw std::invalid_argument("table ring: 0 is not an additive identity");
        if (t.mul[t.one * q + x] != x || t.mul[x * q + t.one] != x)
            throw std::invalid_argument("table ring: 1 is not a multiplicative identity");
        if (t.mul[t.zero * q + x] != t.zero || t.mul[x * q + t.zero] != t.zero)
            throw std::invalid_argument("table ring: 0 does not annihilate");
    }
    // rows of + must be permutations, and + must commute
    std::vector<char> seen(q);
    for (std::uint64_t a = 0; a < q; ++a) {
        std::fill(seen.begin(), seen.end(), 0);
        for (std::uint64_t b = 0; b < q; ++b) {
            std::uint32_t s = t.add[a * q + b];
            if (seen[s]) throw std::invalid_argument("table ring: addition row not a permutation");
            seen[s] = 1;
            if (t.add[b * q + a] != s)
                throw std::invalid_argument("table ring: addition not commutative");
        }
    }
    if (q <= kAxiomCheckLimit) {
        for (std::uint64_t a = 0; a < q; ++a)
            for (std::uint64_t b = 0; b < q; ++b)
                for (std::uint64_t c = 0; c < q; ++c) {
                    if (t.add[t.add[a * q + b] * q + c] != t.add[a * q + t.add[b * q + c]])
                        throw std::invalid_argument("table ring: addition not associative");
                    if (t.mul[t.mul[a * q + b] * q + c] != t.mul[a * q + t.mul[b * q + c]])
                        throw std::invalid_argument("table ring: multiplication not associative");
                    if (t.mul[a * q + t.add[b * q + c]] !=
                        t.add[t.mul[a * q + b] * q + t.mul[a * q + c]])
                        throw std::invalid_argument("table ring: left distributivity fails");
                    if (t.mul[t.add[a * q + b] * q + c] !=
                        t.add[t.mul[a * q + c] * q + t.mul[b * q + c]])
                        throw std::invalid_argument("table ring: right distributivity fails");
                }
    }
}

inline std::shared_ptr<const RingData> make_ring_data(const RingSpec& spec) {
    auto d = std::make_shared<RingData>();
    d->spec = spec;
    switch (spec.kind) {
        case RingSpec::Kind::Zmod: {
            if (spec.n < 2) throw std::invalid_argument("zmod: modulus must be >= 2");
            if (spec.n > (std::uint64_t{1} << 32))
                throw std::invalid_argument("zmod: modulus above 2^32 unsupported");
            d->q = spec.n;
            d->char_ = spec.n;
            d->factors = {static_cast<std::uint32_t>(spec.n)};
            d->one = 1;
            d->trace_admissible = true;
            break;
        }
        case RingSpec::Kind::GF: {
            if (!is_prime(spec.p)) throw std::invalid_argument("gf: p must be prime");
            if (spec.k < 1) throw std::invalid_argument("gf: k must be >= 1");
            std::uint64_t q = sat_pow(spec.p, spec.k);
            if (q > (std::uint64_t{1} << 32)) throw std::invalid_argument("gf: field too large");
            d->q = q;
            d->char_ = spec.p;
            d->gf_p = spec.p;
            d->gf_k = spec.k;
            d->factors.assign(spec.k, static_cast<std::uint32_t>(spec.p));
            d->one = 1;
            d->trace_admissible = true;
            poly_find_modulus(spec.p, spec.k, d->gf_modulus);
            break;
        }
        case RingSpec::Kind::Matrix: {
            if (spec.n < 1) throw std::invalid_argument("mat: dimension must be >= 1");
            d->base = make_ring_data(spec.args[0]);
            d->mat_n = static_cast<std::uint32_t>(spec.n);
            std::uint64_t cells = spec.n * spec.n;
            if (cells * d->base->m > Ring::kMaxDigits || cells > Ring::kMaxMatrixEntries)
                throw std::invalid_argument("mat: too many additive factors");
            d->q = sat_pow(d->base->q, static_cast<unsigned>(cells));
            if (d->q >= (std::uint64_t{1} << 62)) throw std::invalid_argument("mat: ring too large");
            d->char_ = d->base->char_;
            for (std::uint64_t c = 0; c < cells; ++c)
                d->factors.insert(d->factors.end(), d->base->factors.begin(), d->base->factors.end());
            d->trace_admissible = d->base->trace_admissible;
            break;
        }
        case RingSpec::Kind::Product: {
            if (spec.args.size() < 2) throw std::invalid_argument("prod: need >= 2 components");
            d->q = 1;
            d->char_ = 1;
            d->trace_admissible = true;
            for (const auto& a : spec.args) {
                auto c = make_ring_data(a);
                d->comp_digit_off.push_back(static_cast<std::uint32_t>(d->factors.size()));
                d->factors.insert(d->factors.end(), c->factors.begin(), c->factors.end());
                d->q = sat_mul(d->q, c->q);
                d->char_ = std::lcm(d->char_, c->char_);
                d->trace_admissible = d->trace_admissible && c->trace_admissible;
                d->comps.push_back(std::move(c));
            }
            if (d->q >= (std::uint64_t{1} << 62)) throw std::invalid_argument("prod: ring too large");
            if (d->factors.size() > Ring::kMaxDigits)
                throw std::invalid_argument("prod: too many additive factors");
            break;
        }
        case RingSpec::Kind::Table: {
            validate_table(*spec.table);
            d->table = spec.table;
            d->q = spec.table->q;
            d->zero = spec.table->zero;
            d->one = spec.table->one;
            auto addf = [&](std::uint32_t a, std::uint32_t b) {
                return spec.table->add[static_cast<std::size_t>(a) * spec.table->q + b];
            };
            auto dec = decompose_abelian(spec.table->q, spec.table->zero, addf);
            d->factors = dec.factors;
            d->tbl_digits = std::move(dec.digits);
            d->tbl_undigits = std::move(dec.undigits);
            std::uint64_t c = 1, acc = d->one;
            while (acc != d->zero) { acc = addf(static_cast<std::uint32_t>(acc), static_cast<std::uint32_t>(d->one)); ++c; }
            d->char_ = c;
            d->trace_admissible = false;
            break;
        }
    }
    d->m = static_cast<std::uint32_t>(d->factors.size());
    d->strides.assign(d->m, 1);
    for (std::uint32_t j = d->m; j-- > 1;) d->strides[j - 1] = d->strides[j] * d->factors[j];

    if (spec.kind == RingSpec::Kind::Matrix) {
        // identity matrix index
        Ring r{std::shared_ptr<const RingData>(d)};
        std::vector<std::uint32_t> dig(d->m, 0);
        Ring base(d->base);
        for (std::uint32_t i = 0; i < d->mat_n; ++i)
            base.decompose(d->base->one, dig.data() + static_cast<std::size_t>(i * d->mat_n + i) * d->base->m);
        d->one = r.compose(dig.data());
    } else if (spec.kind == RingSpec::Kind::Product) {
        Ring r{std::shared_ptr<const RingData>(d)};
        std::vector<std::uint32_t> dig(d->m, 0);
        std::uint32_t off = 0;
        for (const auto& c : d->comps) {
            Ring comp(c);
            comp.decompose(c->one, dig.data() + off);
            off += c->m;
        }
        d->one = r.compose(dig.data());
    }

    if (spec.kind == RingSpec::Kind::GF) {
        // Tr(t^i) for the monomial basis; gen_char_exponent uses linearity.
        Ring r{std::shared_ptr<const RingData>(d)};
        auto pow_p = [&](std::uint64_t y) {
            std::uint64_t acc = d->one, sq = y, e = d->gf_p;
            while (e) {
                if (e & 1) acc = r.mul(acc, sq);
                sq = r.mul(sq, sq);
                e >>= 1;
            }
            return acc;
        };
        d->gf_tr_basis.resize(d->gf_k);
        for (unsigned i = 0; i < d->gf_k; ++i) {
            std::uint64_t x = sat_pow(d->gf_p, i);  // the element t^i
            std::uint64_t tr = 0, y = x;
            for (unsigned j = 0; j < d->gf_k; ++j) {
                tr = r.add(tr, y);
                y = pow_p(y);
            }
            assert(tr < d->gf_p);  // trace lands in the prime subfield
            d->gf_tr_basis[i] = static_cast<std::uint32_t>(tr);
        }
    }

    if (d->q <= kMulTableLimit && spec.kind != RingSpec::Kind::Table) {
        // fill locally first: r.mul must keep taking the structural path
        Ring r{std::shared_ptr<const RingData>(d)};
        std::vector<std::uint32_t> table(d->q * d->q);
        for (std::uint64_t a = 0; a < d->q; ++a)
            for (std::uint64_t b = 0; b < d->q; ++b)
                table[a * d->q + b] = static_cast<std::uint32_t>(r.mul(a, b));
        d->mul_table = std::move(table);
    }
    return d;
}

} // namespace detail

// 2x2 upper-triangular matrices over a base ring, as an explicit table ring.
// Radical-bearing witness for the Jacobson checks.
inline RingSpec upper_triangular_spec(const RingSpec& base_spec) {
    Ring base(base_spec);
    const std::uint64_t b = base.size();
    const std::uint64_t q = b * b * b;
    if (q > detail::kMulTableLimit) throw std::invalid_argument("upper_triangular_spec: base too large");
    TableData t;
    t.q = static_cast<std::uint32_t>(q);
    t.add.resize(q * q);
    t.mul.resize(q * q);
    // element (a, x, d) <-> [[a, x], [0, d]], index = (a*b + x)*b + d
    auto pack = [&](std::uint64_t a, std::uint64_t x, std::uint64_t dgl) {
        return (a * b + x) * b + dgl;
    };
    for (std::uint64_t i = 0; i < q; ++i) {
        std::uint64_t a1 = i / (b * b), x1 = (i / b) % b, d1 = i % b;
        for (std::uint64_t j = 0; j < q; ++j) {
            std::uint64_t a2 = j / (b * b), x2 = (j / b) % b, d2 = j % b;
            t.add[i * q + j] = static_cast<std::uint32_t>(
                pack(base.add(a1, a2), base.add(x1, x2), base.add(d1, d2)));
            t.mul[i * q + j] = static_cast<std::uint32_t>(
                pack(base.mul(a1, a2), base.add(base.mul(a1, x2), base.mul(x1, d2)),
                     base.mul(d1, d2)));
        }
    }
    t.zero = static_cast<std::uint32_t>(pack(base.zero(), base.zero(), base.zero()));
    t.one = static_cast<std::uint32_t>(pack(base.one(), base.zero(), base.one()));
    t.label = "ut2(" + base_spec.to_string() + ")";
    return RingSpec::table_ring(std::move(t));
}

} // namespace ringfourier
