#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "orthoseq/bitvec.hpp"
#include "orthoseq/errors.hpp"

namespace orthoseq::gf2 {

/// A field element in the polynomial basis {1, gamma, ..., gamma^{t-1}}:
/// bit i of the value is the coefficient of gamma^i.
using Element = std::uint32_t;

/// GF(2^t) with a designated primitive element gamma (the root of the
/// construction polynomial) and eagerly built log/antilog tables.
///
/// The canonical isomorphism pi maps b_1 + b_2*gamma + ... + b_t*gamma^{t-1}
/// to the vector (b_1,...,b_t); with the storage convention above pi is a
/// pure bit reversal of the low t bits.
class Field {
public:
    /// Builds the field for a degree-t primitive polynomial given as a
    /// bitmask including the leading term (z^3+z+1 -> 0b1011).
    /// Throws UnsupportedDegree for t outside [2,16] and
    /// NonPrimitivePolynomial when gamma fails to generate all 2^t-1
    /// nonzero elements.
    Field(int t, std::uint32_t prim_poly);

    static Field with_default_poly(int t) { return Field(t, default_poly(t)); }

    /// Lowest-weight primitive polynomial per degree, fixed so that outputs
    /// are reproducible without configuration. Includes z^2+z+1 and z^3+z+1.
    static std::uint32_t default_poly(int t);

    /// Accepts "x^3+x+1", "z^3+z+1", "0xb" or a plain integer string.
    static std::uint32_t parse_poly(const std::string& text);

    int degree() const { return t_; }
    std::uint32_t prim_poly() const { return poly_; }
    /// Multiplicative group order 2^t - 1.
    std::uint32_t order() const { return n_; }

    Element zero() const { return 0; }
    Element one() const { return 1; }
    Element gamma() const { return antilog_[1]; }

    Element add(Element a, Element b) const { return a ^ b; }

    Element mul(Element a, Element b) const {
        if (a == 0 || b == 0) return 0;
        return antilog_[(static_cast<std::uint64_t>(log_[a]) + log_[b]) % n_];
    }

    /// gamma^e, any integer exponent (reduced mod 2^t-1).
    Element pow_gamma(std::int64_t e) const {
        std::int64_t r = e % static_cast<std::int64_t>(n_);
        if (r < 0) r += n_;
        return antilog_[static_cast<std::size_t>(r)];
    }

    /// Discrete log base gamma, in [0, 2^t-2]. Throws DlogOfZero.
    int dlog(Element a) const {
        if (a == 0) throw DlogOfZero("dlog of the zero element");
        return log_[a];
    }

    /// pi(a) = (b_1,...,b_t) with b_1 the coefficient of 1.
    BitVec pi(Element a) const;
    Element pi_inv(const BitVec& v) const;

private:
    int t_;
    std::uint32_t poly_;
    std::uint32_t n_;
    std::vector<Element> antilog_;  // antilog_[j] = gamma^j, j in [0, 2^t-2]
    std::vector<int> log_;          // log_[a] for a != 0
};

}  // namespace orthoseq::gf2
