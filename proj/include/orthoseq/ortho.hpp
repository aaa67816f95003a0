#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "orthoseq/constructions.hpp"

namespace orthoseq {

enum class CheckMethod { closed_form, brute_force, both };

/// Evidence for a non-orthogonal pair: sequence indices and the offending
/// inner product.
struct PairWitness {
    std::size_t i = 0;
    std::size_t j = 0;
    int value = 0;
};

struct OrthoReport {
    SetId a, b;
    bool orthogonal = false;
    int max_abs_correlation = 0;
    CheckMethod method = CheckMethod::brute_force;
    std::optional<PairWitness> witness;  // set when not orthogonal (brute force)
};

/// Exhaustive pairwise inner products. For two distinct sets every pair is
/// checked; called with one set twice (same id) it checks the distinct rows,
/// i.e. orthogonality within the set.
OrthoReport sets_orthogonal_bruteforce(const OrthogonalSet& a, const OrthogonalSet& b);

/// Closed-form predicate for construction-1 families (also valid for their
/// construction-2 extensions, whose pattern is identical):
///   c == e:  orthogonal iff alpha != delta
///   c != e:  orthogonal iff pi^{-1}(alpha+delta) not in
///            {gamma^{[y]+i_{c+e}} | y in F_2^s}
/// Throws SamePair for (c,alpha) == (e,delta).
bool sets_orthogonal_closed_c1(const gf2::Field& field, int s, const BitVec& c,
                               const BitVec& alpha, const BitVec& e, const BitVec& delta);

/// Closed-form predicate for construction-3 families:
///   c == e:  orthogonal iff alpha != delta
///   c != e:  orthogonal iff the last two coordinates of alpha and delta
///            differ. Throws SamePair for identical ids.
bool sets_orthogonal_closed_c3(const BitVec& c, const BitVec& alpha, const BitVec& e,
                               const BitVec& delta, int d);

/// Closed-form dispatch by construction.
bool sets_orthogonal_closed(const SetFamily& family, const SetId& a, const SetId& b);

/// Orthogonality of two family sets by the requested method; with `both` the
/// two answers are cross-checked (ConstructionFailed on disagreement).
OrthoReport check_pair(const SetFamily& family, const SetId& a, const SetId& b,
                       CheckMethod method = CheckMethod::brute_force);

/// Number of sets in the family orthogonal to S_{id}, excluding itself.
/// Closed forms: 2^{2t} - 2^m + 2^s - 1 (constructions 1-2),
/// 3*2^{k+d-2} + 2^{d-2} - 1 (construction 3).
int count_orthogonal(const SetFamily& family, const SetId& id,
                     CheckMethod method = CheckMethod::closed_form);

/// The f_c vs H_alpha orthogonality grid.
struct OrthoTable {
    std::vector<BitVec> rows;  // c values
    std::vector<BitVec> cols;  // alpha values
    std::vector<std::vector<bool>> cell;

    bool at(const BitVec& c, const BitVec& alpha) const;
};

/// cell[c][alpha] = (sequence of f_c is orthogonal to every row of H_alpha),
/// computed by exact inner products. With cyclic_order the rows/columns
/// follow the field's cyclic power order, else lexicographic.
OrthoTable ortho_table(const SetFamily& family, bool cyclic_order = false);

std::string to_csv(const OrthoTable& table);
/// Perp/blank grid; unicode uses U+22A5, ascii 'x'.
std::string to_grid(const OrthoTable& table, bool unicode = true);

/// Max |inner product| over all cross pairs (distinct rows when a and b are
/// the same set).
int max_cross_correlation(const OrthogonalSet& a, const OrthogonalSet& b);

}  // namespace orthoseq
