#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "orthoseq/constructions.hpp"
#include "orthoseq/ortho.hpp"

namespace orthoseq {

/// Axial coordinates on the hexagonal lattice. Cartesian centers are
/// x = q + r/2, y = r*sqrt(3)/2, so adjacent centers are at distance 1.
struct HexCell {
    int q = 0;
    int r = 0;
    auto operator<=>(const HexCell&) const = default;
};

std::array<HexCell, 6> neighbors(const HexCell& c);
bool adjacent(const HexCell& a, const HexCell& b);

std::pair<double, double> hex_center(const HexCell& c);
/// Euclidean distance between centers (adjacent cells -> 1).
double center_distance(const HexCell& a, const HexCell& b);
/// Hex-step (lattice) distance, the secondary re-use metric.
int hex_step_distance(const HexCell& a, const HexCell& b);

/// A periodic assignment of orthogonal sets to cells: the map covers one
/// fundamental domain; the full tiling repeats under the two period vectors.
struct Assignment {
    Construction tag = Construction::one;
    int m = 0, s = 0, t = 0, u = 0, d = 0;
    std::map<HexCell, SetId> cells;
    std::array<HexCell, 2> period{};
    double claimed_D = 0;

    /// Text format: '#'-comment header lines, then "q r c_bits alpha_bits".
    std::string save() const;
    static Assignment load(const std::string& text);
};

struct AdjacentViolation {
    HexCell a, b;
    SetId set_a, set_b;
    int correlation = 0;  // witness |inner product|
};

struct VerificationReport {
    std::vector<AdjacentViolation> adjacent_violations;
    double measured_min_reuse_distance = 0;
    int measured_min_reuse_steps = 0;
    int max_nonadjacent_correlation = 0;
    int correlation_bound = 0;  // 2^{floor((M+2)/2)} for length 2^M
    double claimed_D = 0;

    bool passed() const {
        // tolerance only absorbs sqrt(3) rounding; distances are lattice values
        return adjacent_violations.empty() && measured_min_reuse_distance >= claimed_D - 1e-9;
    }
    std::string to_text() const;
    std::string to_json() const;
};

/// Checks, over a 3x3-period window so every boundary adjacency of the
/// infinite tiling is exercised:
///   (a) adjacent cells hold mutually orthogonal sets (a set adjacent to
///       itself is a violation with witness 2^M),
///   (b) the minimum center distance between same-set cells (claimed_D must
///       not exceed it for the assignment to pass),
///   (c) the maximum correlation between non-adjacent distinct-set cells.
/// Set-pair orthogonality runs by exact inner products (brute_force, the
/// default), by the closed-form predicates, or by both with a
/// cross-check (ConstructionFailed on disagreement). Closed-form reports
/// the pinned semi-bent correlation 2^{floor((M+2)/2)} for non-orthogonal
/// pairs instead of measuring. Throws UnresolvedSetId when the assignment
/// references sets outside the family.
VerificationReport verify(const Assignment& assignment, const SetFamily& family,
                          CheckMethod method = CheckMethod::brute_force);

/// Ships the verified layouts of the three worked examples:
///   m3_D4 - 16 construction-1 sets on a 4x4 torus, D=4
///   m5_D8 - 64 construction-1 sets in column-pair clusters, D=8
///   m6_D4 - 16 construction-3 (d=2) sets on a 4x4 torus, D=4
Assignment builtin_layout(const std::string& name);

/// Fig.2-style generator for construction-1 families (m in {3,5}): clusters
/// of two adjacent columns share c; horizontally neighbouring clusters
/// differ by the given offsets (alternating); the within-cluster alpha
/// layout and the vertical cluster offset are found by deterministic
/// search. Throws RuleFails when no layout satisfies the rule.
Assignment cluster_layout_c1(const SetFamily& family, std::pair<BitVec, BitVec> c_offsets);

struct SvgStyle {
    double hex_size = 26;
    bool labels = true;
};

/// Deterministic SVG: hexagons labeled "c,alpha", same-c cells shaded alike.
std::string render_svg(const Assignment& assignment, const SvgStyle& style = {});

}  // namespace orthoseq
