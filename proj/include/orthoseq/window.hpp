#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "orthoseq/boolfun.hpp"

namespace orthoseq {

/// The (m-s)-variable function obtained by fixing the first s variables
/// (the truth-table MSBs) to prefix; its sequence is the prefix-th
/// contiguous block of length 2^{m-s} of the sequence of f.
/// Throws BadOrder unless 0 <= s <= m-1 and |prefix| = s.
BooleanFunction restriction(const BooleanFunction& f, int s, const BitVec& prefix);

struct OrderDetail {
    int order = 0;
    std::uint32_t restrictions = 0;
    std::uint32_t semibent = 0;
};

struct DepthWitness {
    int order = 0;
    BitVec prefix;
    SpectrumKind kind = SpectrumKind::FiveValuedOrMore;
};

/// Semi-bent depth: the largest r such that every restriction of every
/// order 0..r is semi-bent. depth = -1 when the function itself is not
/// semi-bent; depth <= m-2 (restrictions keep at least two variables).
struct DepthReport {
    int m = 0;
    int depth = -1;
    std::vector<OrderDetail> per_order;
    std::optional<DepthWitness> first_failure;

    std::string to_text() const;
    std::string to_json() const;
};

/// Scans orders 0..max_order (default m-2) over all prefixes.
DepthReport semibent_depth(const BooleanFunction& f, int max_order = -1);

/// Per-block maximum correlation to length-2^v linear sequences: for each of
/// the 2^{m-v} dyadic blocks, max over omega in F_2^v of |W(block)(omega)|.
/// theta_min is the covering-radius target the entries are compared to:
/// 2^{v/2} for even v (exact), 2^{(v+1)/2} for odd v (exact for v <= 7,
/// the working surrogate above that).
struct WindowProfile {
    int v = 0;
    int theta_min = 0;
    bool theta_exact = true;
    std::vector<int> block_max;
    bool all_blocks_meet_theta() const;
};

WindowProfile window_correlation_profile(const BooleanFunction& f, int v);

}  // namespace orthoseq
