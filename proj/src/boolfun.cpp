#include "orthoseq/boolfun.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cctype>

namespace orthoseq {

namespace {

std::size_t word_count(int m) {
    return m >= 6 ? (std::size_t{1} << (m - 6)) : 1;
}

std::uint64_t tail_mask(int m) {
    return m >= 6 ? ~std::uint64_t{0} : ((std::uint64_t{1} << (1 << m)) - 1);
}

// 64 consecutive truth-table bits of the linear function omega.x starting at
// index base (base is 64-aligned): parity(omega & (base+k)) over k = 0..63.
std::uint64_t linear_word(std::uint32_t omega, std::uint32_t base) {
    // low 6 bits of omega give a fixed pattern over k; the rest flips it
    static constexpr auto patterns = [] {
        std::array<std::uint64_t, 64> p{};
        for (std::uint32_t w = 0; w < 64; ++w) {
            std::uint64_t word = 0;
            for (std::uint32_t k = 0; k < 64; ++k)
                if (std::popcount(w & k) & 1u) word |= std::uint64_t{1} << k;
            p[w] = word;
        }
        return p;
    }();
    std::uint64_t word = patterns[omega & 63u];
    if (std::popcount(omega & base & ~63u) & 1u) word = ~word;
    return word;
}

}  // namespace

BooleanFunction::BooleanFunction(int m) : m_(m) {
    if (m < 1 || m > 24)
        throw IndexOutOfRange("variable count must be in [1,24], got " + std::to_string(m));
    words_.assign(word_count(m), 0);
}

BooleanFunction BooleanFunction::linear(int m, std::uint32_t omega) {
    BooleanFunction f(m);
    if (omega >= f.domain_size())
        throw IndexOutOfRange("omega " + std::to_string(omega) + " out of range for m=" + std::to_string(m));
    for (std::size_t w = 0; w < f.words_.size(); ++w)
        f.words_[w] = linear_word(omega, static_cast<std::uint32_t>(w) << 6);
    f.words_.back() &= tail_mask(m);
    return f;
}

void BooleanFunction::set(std::uint32_t j, bool v) {
    if (j >= domain_size()) throw IndexOutOfRange("truth table index " + std::to_string(j));
    if (v)
        words_[j >> 6] |= std::uint64_t{1} << (j & 63);
    else
        words_[j >> 6] &= ~(std::uint64_t{1} << (j & 63));
}

std::uint32_t BooleanFunction::weight() const {
    std::uint32_t w = 0;
    for (std::uint64_t word : words_) w += static_cast<std::uint32_t>(std::popcount(word));
    return w;
}

BooleanFunction BooleanFunction::operator^(const BooleanFunction& o) const {
    if (m_ != o.m_)
        throw LengthMismatch("xor of functions on " + std::to_string(m_) + " and " +
                             std::to_string(o.m_) + " variables");
    BooleanFunction r(m_);
    for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] = words_[i] ^ o.words_[i];
    return r;
}

BooleanFunction BooleanFunction::from_hex(int m, const std::string& hex) {
    BooleanFunction f(m);
    std::size_t expected = std::max<std::size_t>(1, f.domain_size() / 4);
    if (hex.size() != expected)
        throw ParseError("hex truth table for m=" + std::to_string(m) + " needs " +
                         std::to_string(expected) + " digits, got " + std::to_string(hex.size()));
    for (std::size_t i = 0; i < hex.size(); ++i) {
        char ch = hex[i];
        int v;
        if (ch >= '0' && ch <= '9') v = ch - '0';
        else if (ch >= 'a' && ch <= 'f') v = ch - 'a' + 10;
        else if (ch >= 'A' && ch <= 'F') v = ch - 'A' + 10;
        else throw ParseError("bad hex digit in truth table");
        for (int b = 0; b < 4; ++b) {
            std::uint32_t j = static_cast<std::uint32_t>(i * 4 + b);
            if (j < f.domain_size() && ((v >> (3 - b)) & 1)) f.set(j, true);
        }
    }
    return f;
}

std::string BooleanFunction::to_hex() const {
    std::size_t digits = std::max<std::size_t>(1, domain_size() / 4);
    std::string out(digits, '0');
    static const char* hexd = "0123456789abcdef";
    for (std::size_t i = 0; i < digits; ++i) {
        int v = 0;
        for (int b = 0; b < 4; ++b) {
            std::uint32_t j = static_cast<std::uint32_t>(i * 4 + b);
            if (j < domain_size() && at(j)) v |= 1 << (3 - b);
        }
        out[i] = hexd[v];
    }
    return out;
}

BooleanFunction BooleanFunction::from_anf(int m, const std::string& anf) {
    // terms separated by '+': products of variables x<i> (1-based, joined by
    // '*' or juxtaposition), or the constant 1
    BooleanFunction f(m);
    std::string s;
    for (char ch : anf)
        if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
    if (s.empty()) return f;  // zero function

    std::size_t pos = 0;
    while (pos <= s.size()) {
        std::size_t next = s.find('+', pos);
        std::string term = s.substr(pos, next == std::string::npos ? next : next - pos);
        pos = next == std::string::npos ? s.size() + 1 : next + 1;
        if (term.empty()) throw ParseError("empty ANF term in: " + anf);

        std::uint32_t mask = 0;  // variable mask, x_1 = MSB-style index bit
        bool constant_one = false;
        std::size_t tp = 0;
        while (tp < term.size()) {
            if (term[tp] == '*') { ++tp; continue; }
            if (term[tp] == '1' && mask == 0 && tp + 1 == term.size() && !constant_one) {
                constant_one = true;
                ++tp;
                continue;
            }
            if (term[tp] != 'x' && term[tp] != 'X')
                throw ParseError("bad ANF term '" + term + "'");
            std::size_t start = ++tp;
            while (tp < term.size() && std::isdigit(static_cast<unsigned char>(term[tp]))) ++tp;
            if (start == tp) throw ParseError("missing variable index in '" + term + "'");
            int idx = std::stoi(term.substr(start, tp - start));
            if (idx < 1 || idx > m)
                throw ParseError("variable x" + std::to_string(idx) + " out of range for m=" +
                                 std::to_string(m));
            mask |= 1u << (m - idx);
        }
        // add the monomial: f(x) ^= prod of selected vars
        for (std::uint32_t j = 0; j < f.domain_size(); ++j)
            if (constant_one || (j & mask) == mask) f.set(j, !f.at(j));
    }
    return f;
}

Sequence::Sequence(const BooleanFunction& f) : m_(f.variables()), words_(f.words()) {}

Sequence Sequence::from_sign_string(const std::string& signs) {
    int m = -1;
    for (int k = 0; k <= 24; ++k)
        if (signs.size() == (std::size_t{1} << k)) { m = k; break; }
    if (m < 1) throw ParseError("sign string length must be a power of two (2..2^24)");
    BooleanFunction f(m);
    for (std::size_t j = 0; j < signs.size(); ++j) {
        if (signs[j] == '-') f.set(static_cast<std::uint32_t>(j), true);
        else if (signs[j] != '+') throw ParseError("sign string may contain only '+' and '-'");
    }
    return Sequence(f);
}

Sequence Sequence::componentwise(const Sequence& o) const {
    if (m_ != o.m_) throw LengthMismatch("componentwise product of different lengths");
    std::vector<std::uint64_t> w(words_.size());
    for (std::size_t i = 0; i < w.size(); ++i) w[i] = words_[i] ^ o.words_[i];
    return Sequence(m_, std::move(w));
}

std::string Sequence::sign_string() const {
    std::string s(length(), '+');
    for (std::uint32_t j = 0; j < length(); ++j)
        if (value_at(j) < 0) s[j] = '-';
    return s;
}

int inner_product(const Sequence& a, const Sequence& b) {
    if (a.variables() != b.variables())
        throw LengthMismatch("inner product of sequences of different lengths");
    std::uint32_t disagree = 0;
    for (std::size_t i = 0; i < a.words().size(); ++i)
        disagree += static_cast<std::uint32_t>(std::popcount(a.words()[i] ^ b.words()[i]));
    return static_cast<int>(a.length()) - 2 * static_cast<int>(disagree);
}

int walsh_at(const BooleanFunction& f, std::uint32_t omega) {
    if (omega >= f.domain_size())
        throw IndexOutOfRange("omega " + std::to_string(omega) + " out of range");
    std::uint32_t disagree = 0;
    std::uint64_t tail = f.variables() >= 6 ? ~std::uint64_t{0}
                                            : ((std::uint64_t{1} << f.domain_size()) - 1);
    for (std::size_t w = 0; w < f.words().size(); ++w) {
        std::uint64_t lin = linear_word(omega, static_cast<std::uint32_t>(w) << 6);
        if (w + 1 == f.words().size()) lin &= tail;
        disagree += static_cast<std::uint32_t>(std::popcount(f.words()[w] ^ lin));
    }
    return static_cast<int>(f.domain_size()) - 2 * static_cast<int>(disagree);
}

std::vector<std::int32_t> walsh_spectrum(const BooleanFunction& f) {
    std::uint32_t n = f.domain_size();
    std::vector<std::int32_t> v(n);
    for (std::uint32_t j = 0; j < n; ++j)
        v[j] = ((f.words()[j >> 6] >> (j & 63)) & 1u) ? -1 : +1;
    for (std::uint32_t h = 1; h < n; h <<= 1) {
        for (std::uint32_t i = 0; i < n; i += h << 1) {
            for (std::uint32_t j = i; j < i + h; ++j) {
                std::int32_t x = v[j], y = v[j + h];
                v[j] = x + y;
                v[j + h] = x - y;
            }
        }
    }
    return v;
}

SpectrumClass classify(const BooleanFunction& f) {
    const int m = f.variables();
    std::vector<std::int32_t> sp = walsh_spectrum(f);

    SpectrumClass out;
    out.balanced = sp[0] == 0;
    out.values = sp;
    std::sort(out.values.begin(), out.values.end());
    out.values.erase(std::unique(out.values.begin(), out.values.end()), out.values.end());

    bool has_zero = false;
    std::int32_t amplitude = 0;  // the single nonzero |value|, if any
    bool single_amplitude = true;
    for (std::int32_t v : out.values) {
        if (v == 0) { has_zero = true; continue; }
        std::int32_t a = v < 0 ? -v : v;
        if (amplitude == 0) amplitude = a;
        else if (amplitude != a) single_amplitude = false;
    }

    if (!single_amplitude || amplitude == 0 || (amplitude & (amplitude - 1)) != 0)
        return out;  // FiveValuedOrMore (or degenerate non-power amplitude)

    int lambda = std::countr_zero(static_cast<std::uint32_t>(amplitude));
    out.lambda = lambda;
    if (!has_zero && m % 2 == 0 && lambda == m / 2)
        out.kind = SpectrumKind::Bent;
    else if (lambda == (m + 2) / 2)
        out.kind = SpectrumKind::SemiBent;
    else
        out.kind = SpectrumKind::Plateaued;
    return out;
}

const char* to_string(SpectrumKind k) {
    switch (k) {
        case SpectrumKind::Bent: return "bent";
        case SpectrumKind::SemiBent: return "semi-bent";
        case SpectrumKind::Plateaued: return "plateaued";
        case SpectrumKind::FiveValuedOrMore: return "five-valued-or-more";
    }
    return "?";
}

Sequence hadamard_row(int m, std::uint32_t j) {
    return Sequence(BooleanFunction::linear(m, j));
}

std::vector<Sequence> hadamard_set(int m) {
    std::vector<Sequence> rows;
    rows.reserve(std::size_t{1} << m);
    for (std::uint32_t j = 0; j < (1u << m); ++j) rows.push_back(hadamard_row(m, j));
    return rows;
}

}  // namespace orthoseq
