#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include "orthoseq/errors.hpp"

namespace orthoseq {

/// A vector (b_1,...,b_n) over F_2, n <= 24.
///
/// b_1 is stored as the most significant of the n bits, so the integer value
/// doubles as a truth-table / Walsh index under the x_1-is-MSB convention
/// used throughout: if omega = (w_1,...,w_m) then omega.bits is the row index
/// of the corresponding linear function in the Sylvester-Hadamard matrix.
struct BitVec {
    int len = 0;
    std::uint32_t bits = 0;

    BitVec() = default;
    BitVec(int n, std::uint32_t v) : len(n), bits(v) {
        if (n < 0 || n > 24) throw IndexOutOfRange("BitVec length out of range: " + std::to_string(n));
        if (n < 32 && (v >> n) != 0)
            throw IndexOutOfRange("BitVec value does not fit in " + std::to_string(n) + " bits");
    }

    /// b_i, 1-based (b_1 first).
    int bit(int i) const {
        if (i < 1 || i > len) throw IndexOutOfRange("BitVec::bit index " + std::to_string(i));
        return static_cast<int>((bits >> (len - i)) & 1u);
    }

    bool zero() const { return bits == 0; }

    BitVec operator^(const BitVec& o) const {
        if (len != o.len) throw LengthMismatch("BitVec xor: length mismatch");
        return BitVec(len, bits ^ o.bits);
    }

    auto operator<=>(const BitVec&) const = default;

    std::string str() const {
        std::string s(static_cast<std::size_t>(len), '0');
        for (int i = 1; i <= len; ++i)
            if (bit(i)) s[static_cast<std::size_t>(i - 1)] = '1';
        return s;
    }

    static BitVec parse(const std::string& s) {
        BitVec v(static_cast<int>(s.size()), 0);
        for (std::size_t i = 0; i < s.size(); ++i) {
            if (s[i] == '1')
                v.bits |= 1u << (s.size() - 1 - i);
            else if (s[i] != '0')
                throw ParseError("BitVec::parse: bad character '" + std::string(1, s[i]) + "'");
        }
        return v;
    }
};

}  // namespace orthoseq
