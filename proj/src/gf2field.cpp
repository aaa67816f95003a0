#include "orthoseq/gf2field.hpp"

#include <algorithm>
#include <cctype>

namespace orthoseq::gf2 {

Field::Field(int t, std::uint32_t prim_poly) : t_(t), poly_(prim_poly) {
    if (t < 2 || t > 16)
        throw UnsupportedDegree("field degree must be in [2,16], got " + std::to_string(t));
    if (prim_poly >> t != 1u)
        throw NonPrimitivePolynomial("polynomial bitmask " + std::to_string(prim_poly) +
                                     " does not have degree " + std::to_string(t));
    n_ = (1u << t) - 1u;
    antilog_.assign(n_, 0);
    log_.assign(1u << t, -1);

    Element b = 1;
    for (std::uint32_t j = 0; j < n_; ++j) {
        if (log_[b] != -1)
            throw NonPrimitivePolynomial("polynomial is not primitive: gamma has order " +
                                         std::to_string(j));
        antilog_[j] = b;
        log_[b] = static_cast<int>(j);
        b <<= 1;
        if (b >> t) b ^= prim_poly;
    }
    if (b != 1)
        throw NonPrimitivePolynomial("polynomial is not primitive: gamma^2^t-1 != 1");
}

std::uint32_t Field::default_poly(int t) {
    switch (t) {
        case 2: return 0x7;       // z^2+z+1
        case 3: return 0xb;       // z^3+z+1
        case 4: return 0x13;      // z^4+z+1
        case 5: return 0x25;      // z^5+z^2+1
        case 6: return 0x43;      // z^6+z+1
        case 7: return 0x89;      // z^7+z^3+1
        case 8: return 0x11d;     // z^8+z^4+z^3+z^2+1
        case 9: return 0x211;     // z^9+z^4+1
        case 10: return 0x409;    // z^10+z^3+1
        case 11: return 0x805;    // z^11+z^2+1
        case 12: return 0x1053;   // z^12+z^6+z^4+z+1
        case 13: return 0x201b;   // z^13+z^4+z^3+z+1
        case 14: return 0x4443;   // z^14+z^10+z^6+z+1
        case 15: return 0x8003;   // z^15+z+1
        case 16: return 0x1100b;  // z^16+z^12+z^3+z+1
        default:
            throw UnsupportedDegree("no default primitive polynomial for degree " +
                                    std::to_string(t));
    }
}

std::uint32_t Field::parse_poly(const std::string& text) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
    if (s.empty()) throw ParseError("empty polynomial");

    if (s.find('+') == std::string::npos && s.find('^') == std::string::npos) {
        // bitmask form, hex or decimal
        try {
            return static_cast<std::uint32_t>(std::stoul(s, nullptr, 0));
        } catch (const std::exception&) {
            throw ParseError("cannot parse polynomial bitmask: " + text);
        }
    }

    // human form: terms "x^k", "x", "1" joined by '+'; variable letter is free
    std::uint32_t mask = 0;
    std::size_t pos = 0;
    while (pos < s.size()) {
        std::size_t next = s.find('+', pos);
        std::string term = s.substr(pos, next == std::string::npos ? next : next - pos);
        pos = next == std::string::npos ? s.size() : next + 1;
        if (term.empty()) throw ParseError("empty term in polynomial: " + text);
        if (term == "1") {
            mask |= 1u;
        } else if (std::isalpha(static_cast<unsigned char>(term[0]))) {
            int k = 1;
            if (term.size() > 1) {
                if (term[1] != '^') throw ParseError("bad term '" + term + "' in " + text);
                try {
                    std::size_t used = 0;
                    k = std::stoi(term.substr(2), &used);
                    if (used != term.size() - 2) throw ParseError("bad exponent in " + text);
                } catch (const ParseError&) {
                    throw;
                } catch (const std::exception&) {
                    throw ParseError("bad exponent in '" + term + "'");
                }
            }
            if (k < 0 || k > 24) throw ParseError("exponent out of range in " + text);
            mask |= 1u << k;
        } else {
            throw ParseError("bad term '" + term + "' in " + text);
        }
    }
    return mask;
}

BitVec Field::pi(Element a) const {
    std::uint32_t v = 0;
    for (int i = 0; i < t_; ++i)
        if ((a >> i) & 1u) v |= 1u << (t_ - 1 - i);
    return BitVec(t_, v);
}

Element Field::pi_inv(const BitVec& v) const {
    if (v.len != t_) throw LengthMismatch("pi_inv: vector length does not match field degree");
    Element a = 0;
    for (int i = 0; i < t_; ++i)
        if ((v.bits >> (t_ - 1 - i)) & 1u) a |= 1u << i;
    return a;
}

}  // namespace orthoseq::gf2
