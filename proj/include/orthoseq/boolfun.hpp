#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "orthoseq/bitvec.hpp"
#include "orthoseq/errors.hpp"

namespace orthoseq {

/// Boolean function on F_2^m given by its truth table, bit-packed in 64-bit
/// words. Truth-table index j encodes the input (x_1,...,x_m) with x_1 as
/// the MOST significant bit, so j = 0 is (0,...,0,0) and j = 1 is
/// (0,...,0,1): x_m is the fastest-varying coordinate.
class BooleanFunction {
public:
    /// The zero function on m variables (1 <= m <= 24).
    explicit BooleanFunction(int m);

    /// The linear function omega . x; omega is an index under the same
    /// MSB-first convention.
    static BooleanFunction linear(int m, std::uint32_t omega);

    /// Truth table from a hex string, MSB-first: the first hex digit holds
    /// tt[0..3] with tt[0] in the digit's high bit.
    static BooleanFunction from_hex(int m, const std::string& hex);

    /// Algebraic normal form, e.g. "x1*x2 + x3 + 1". Input convenience for
    /// tests and the CLI; the internal representation is always the table.
    static BooleanFunction from_anf(int m, const std::string& anf);

    template <class Fn>
    static BooleanFunction from_fn(int m, Fn&& fn) {
        BooleanFunction f(m);
        for (std::uint32_t j = 0; j < (1u << m); ++j)
            if (fn(j)) f.set(j, true);
        return f;
    }

    int variables() const { return m_; }
    std::uint32_t domain_size() const { return 1u << m_; }

    bool at(std::uint32_t j) const {
        if (j >= domain_size()) throw IndexOutOfRange("truth table index " + std::to_string(j));
        return (words_[j >> 6] >> (j & 63)) & 1u;
    }
    void set(std::uint32_t j, bool v);

    std::uint32_t weight() const;

    /// f + g over F_2 (pointwise XOR). Throws LengthMismatch.
    BooleanFunction operator^(const BooleanFunction& o) const;

    bool operator==(const BooleanFunction&) const = default;

    std::string to_hex() const;

    const std::vector<std::uint64_t>& words() const { return words_; }

private:
    int m_;
    std::vector<std::uint64_t> words_;
};

/// The (+1,-1) sequence of a Boolean function, value[j] = (-1)^{f(j)}.
/// Packed: bit j set means value -1.
class Sequence {
public:
    explicit Sequence(const BooleanFunction& f);

    static Sequence from_sign_string(const std::string& signs);

    int variables() const { return m_; }
    std::uint32_t length() const { return 1u << m_; }

    int value_at(std::uint32_t j) const {
        if (j >= length()) throw IndexOutOfRange("sequence index " + std::to_string(j));
        return ((words_[j >> 6] >> (j & 63)) & 1u) ? -1 : +1;
    }

    /// Componentwise product; equals the sequence of the XOR of the
    /// underlying functions. Throws LengthMismatch.
    Sequence componentwise(const Sequence& o) const;

    /// '+' for +1, '-' for -1.
    std::string sign_string() const;

    bool operator==(const Sequence&) const = default;
    auto operator<=>(const Sequence&) const = default;

    const std::vector<std::uint64_t>& words() const { return words_; }

private:
    Sequence(int m, std::vector<std::uint64_t> w) : m_(m), words_(std::move(w)) {}
    int m_;
    std::vector<std::uint64_t> words_;
};

inline Sequence sequence_of(const BooleanFunction& f) { return Sequence(f); }

/// Exact inner product; 0 means orthogonal. Throws LengthMismatch.
int inner_product(const Sequence& a, const Sequence& b);

/// W_f(omega) = sum_x (-1)^{f(x) + omega.x}, computed directly from the
/// weight of f + omega.x (no butterfly). Exact.
int walsh_at(const BooleanFunction& f, std::uint32_t omega);

/// Full spectrum via the in-place butterfly, m*2^m additions. Entry at
/// index(omega) equals walsh_at(f, omega); satisfies Parseval exactly.
std::vector<std::int32_t> walsh_spectrum(const BooleanFunction& f);

enum class SpectrumKind { Bent, SemiBent, Plateaued, FiveValuedOrMore };

struct SpectrumClass {
    SpectrumKind kind = SpectrumKind::FiveValuedOrMore;
    /// log2 of the nonzero amplitude for Bent/SemiBent/Plateaued, else -1.
    int lambda = -1;
    bool balanced = false;
    /// Distinct Walsh values, ascending.
    std::vector<std::int32_t> values;
};

/// Spectral classification:
///   Bent       <=> spectrum subset of {+-2^{m/2}}           (m even)
///   SemiBent   <=> spectrum subset of {0, +-2^{floor((m+2)/2)}}
///   Plateaued  <=> spectrum subset of {0, +-2^lambda} otherwise
/// Anything with two or more nonzero amplitudes is FiveValuedOrMore.
SpectrumClass classify(const BooleanFunction& f);

const char* to_string(SpectrumKind k);

/// Row j of the Sylvester-Hadamard matrix H_m = the sequence of the linear
/// function whose omega is the binary representation of j.
Sequence hadamard_row(int m, std::uint32_t j);
std::vector<Sequence> hadamard_set(int m);

}  // namespace orthoseq
