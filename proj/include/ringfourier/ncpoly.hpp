#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "ringfourier/ring.hpp"

namespace ringfourier {

// One word of a noncommutative polynomial: an integer coefficient (written on
// the left) times an ordered product of variables X_1..X_{d-1}.
struct Word {
    std::int64_t coeff = 0;
    std::vector<std::uint32_t> letters;  // variable indices, 1-based
};

// Integer-coefficient sum of noncommutative words with constant term zero.
// Words are kept canonical: sorted by length then letters, like words merged,
// zero coefficients dropped.
class NcPolynomial {
public:
    NcPolynomial() = default;

    explicit NcPolynomial(std::vector<Word> raw) {
        for (auto& w : raw) {
            if (w.letters.empty())
                throw parse_error("polynomial: constant terms are not allowed");
            for (auto l : w.letters)
                if (l == 0) throw parse_error("polynomial: variable indices are 1-based");
        }
        std::sort(raw.begin(), raw.end(), [](const Word& a, const Word& b) {
            if (a.letters.size() != b.letters.size()) return a.letters.size() < b.letters.size();
            return a.letters < b.letters;
        });
        for (auto& w : raw) {
            if (!words_.empty() && words_.back().letters == w.letters)
                words_.back().coeff += w.coeff;
            else
                words_.push_back(std::move(w));
        }
        std::erase_if(words_, [](const Word& w) { return w.coeff == 0; });
        for (const auto& w : words_)
            for (auto l : w.letters) var_count_ = std::max(var_count_, l);
    }

    static NcPolynomial parse(std::string_view text);

    // sum_{i=1}^{d-1} X_i^2
    static NcPolynomial paraboloid(unsigned d) {
        if (d < 2) throw std::invalid_argument("paraboloid: d must be >= 2");
        std::vector<Word> raw;
        for (std::uint32_t i = 1; i < d; ++i) raw.push_back({1, {i, i}});
        return NcPolynomial(std::move(raw));
    }

    const std::vector<Word>& words() const { return words_; }
    std::uint32_t var_count() const { return var_count_; }

    std::string to_string() const {
        if (words_.empty()) return "0";
        std::string s;
        for (std::size_t i = 0; i < words_.size(); ++i) {
            if (i) s += " + ";
            const Word& w = words_[i];
            if (w.coeff != 1) s += std::to_string(w.coeff) + "*";
            // compress repeated letters into powers
            std::size_t j = 0;
            bool first = true;
            while (j < w.letters.size()) {
                std::size_t run = 1;
                while (j + run < w.letters.size() && w.letters[j + run] == w.letters[j]) ++run;
                if (!first) s += "*";
                s += "x" + std::to_string(w.letters[j]);
                if (run > 1) s += "^" + std::to_string(run);
                j += run;
                first = false;
            }
        }
        return s;
    }

private:
    std::vector<Word> words_;
    std::uint32_t var_count_ = 0;
};

namespace detail {

// term (+ term)*, term = [int*] var (* var)*, var = xK[^m];
// whitespace- and case-insensitive, integers may be signed.
class PolyParser {
public:
    explicit PolyParser(std::string_view text) {
        for (char c : text)
            if (!std::isspace(static_cast<unsigned char>(c)))
                src_.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    }

    NcPolynomial parse() {
        if (src_.empty()) throw parse_error("polynomial: empty input");
        std::vector<Word> words;
        words.push_back(parse_term());
        while (peek() == '+') {
            ++pos_;
            words.push_back(parse_term());
        }
        if (pos_ != src_.size()) fail("trailing input");
        return NcPolynomial(std::move(words));
    }

private:
    std::string src_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& msg) {
        throw parse_error("polynomial: " + msg + " at position " + std::to_string(pos_) +
                          " in \"" + src_ + "\"");
    }

    char peek() const { return pos_ < src_.size() ? src_[pos_] : '\0'; }

    std::int64_t parse_int() {
        std::int64_t sign = 1;
        if (peek() == '-') { sign = -1; ++pos_; }
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected integer");
        std::int64_t v = 0;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            v = v * 10 + (src_[pos_] - '0');
            if (v > (std::int64_t{1} << 40)) fail("coefficient too large");
            ++pos_;
        }
        return sign * v;
    }

    void parse_var(std::vector<std::uint32_t>& letters) {
        if (peek() != 'x') fail("expected variable xK");
        ++pos_;
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected variable index");
        std::int64_t k = parse_int();
        if (k < 1) fail("variable indices start at 1");
        std::uint32_t reps = 1;
        if (peek() == '^') {
            ++pos_;
            std::int64_t m = parse_int();
            if (m < 1 || m > 64) fail("exponent out of range");
            reps = static_cast<std::uint32_t>(m);
        }
        for (std::uint32_t i = 0; i < reps; ++i) letters.push_back(static_cast<std::uint32_t>(k));
    }

    Word parse_term() {
        Word w;
        w.coeff = 1;
        if (peek() == '-' || std::isdigit(static_cast<unsigned char>(peek()))) {
            w.coeff = parse_int();
            if (peek() != '*') fail("constant terms are not allowed");
            ++pos_;
        }
        parse_var(w.letters);
        while (peek() == '*') {
            ++pos_;
            parse_var(w.letters);
        }
        return w;
    }
};

} // namespace detail

inline NcPolynomial NcPolynomial::parse(std::string_view text) {
    return detail::PolyParser(text).parse();
}

// Evaluation with reusable per-ring state (integer images of coefficients,
// scratch buffers for the digit-level path).
class PolyEvaluator {
public:
    PolyEvaluator(const NcPolynomial& f, Ring ring) : f_(f), ring_(std::move(ring)) {
        const std::uint32_t m = ring_.num_factors();
        for (const auto& w : f_.words()) {
            std::uint64_t img = ring_.integer_image(w.coeff);
            coeff_img_.push_back(img);
            coeff_is_one_.push_back(img == ring_.one());
            std::vector<std::uint32_t> dig(m);
            ring_.decompose(img, dig.data());
            coeff_dig_.push_back(std::move(dig));
        }
        buf_.resize(m);
        buf2_.resize(m);
        acc_.resize(m);
    }

    // point holds at least f.var_count() element indices (x_1 first).
    std::uint64_t evaluate(const std::uint64_t* point) const {
        std::uint64_t acc = ring_.zero();
        const auto& words = f_.words();
        for (std::size_t i = 0; i < words.size(); ++i) {
            const auto& ls = words[i].letters;
            std::uint64_t prod = point[ls[0] - 1];
            for (std::size_t j = 1; j < ls.size(); ++j) prod = ring_.mul(prod, point[ls[j] - 1]);
            if (!coeff_is_one_[i]) prod = ring_.mul(coeff_img_[i], prod);
            acc = ring_.add(acc, prod);
        }
        return acc;
    }

    // Digit-level path for enumeration loops: point_digits holds one block of
    // ring.num_factors() digits per variable; the result lands in out.
    void evaluate_digits(const std::uint32_t* point_digits, std::uint32_t* out) {
        const std::uint32_t m = ring_.num_factors();
        std::fill(acc_.begin(), acc_.end(), 0u);  // digits of zero are all zero
        const auto& words = f_.words();
        for (std::size_t i = 0; i < words.size(); ++i) {
            const auto& ls = words[i].letters;
            std::copy(point_digits + (ls[0] - 1) * m, point_digits + ls[0] * m, buf_.begin());
            for (std::size_t j = 1; j < ls.size(); ++j) {
                ring_.mul_digits(buf_.data(), point_digits + (ls[j] - 1) * m, buf2_.data());
                buf_.swap(buf2_);
            }
            if (!coeff_is_one_[i]) {
                ring_.mul_digits(coeff_dig_[i].data(), buf_.data(), buf2_.data());
                buf_.swap(buf2_);
            }
            ring_.add_digits(acc_.data(), buf_.data(), acc_.data());
        }
        std::copy(acc_.begin(), acc_.end(), out);
    }

    const Ring& ring() const { return ring_; }

private:
    NcPolynomial f_;
    Ring ring_;
    std::vector<std::uint64_t> coeff_img_;
    std::vector<char> coeff_is_one_;
    std::vector<std::vector<std::uint32_t>> coeff_dig_;
    std::vector<std::uint32_t> buf_, buf2_, acc_;
};

inline std::uint64_t evaluate(const NcPolynomial& f, const Ring& ring,
                              const std::vector<std::uint64_t>& point) {
    if (point.size() < f.var_count())
        throw std::invalid_argument("evaluate: point has fewer coordinates than variables");
    return PolyEvaluator(f, ring).evaluate(point.data());
}

} // namespace ringfourier
