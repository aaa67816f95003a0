#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "orthoseq/bitvec.hpp"
#include "orthoseq/boolfun.hpp"
#include "orthoseq/errors.hpp"
#include "orthoseq/gf2field.hpp"

namespace orthoseq {

enum class Construction { one = 1, two = 2, three = 3 };

/// Identifier (c, alpha) of one orthogonal set within a family.
/// |c| = t and |alpha| = t for constructions 1-2; |c| = k, |alpha| = d for
/// construction 3.
struct SetId {
    BitVec c;
    BitVec alpha;
    auto operator<=>(const SetId&) const = default;
    std::string str() const { return c.str() + "," + alpha.str(); }
};

/// A materialized orthogonal set: the sequences of the generators f_c + l
/// for l running over the set's linear slice.
struct OrthogonalSet {
    SetId id;
    std::vector<BooleanFunction> generators;
    std::vector<Sequence> sequences;
};

/// An m-variable, t-dimensional map (f_1,...,f_t).
class VectorialFunction {
public:
    VectorialFunction(int m, std::vector<BooleanFunction> components);

    int variables() const { return m_; }
    int dimension() const { return static_cast<int>(components_.size()); }
    /// 1-based, mirroring the f_i notation.
    const BooleanFunction& component(int i) const;

    /// c . F = c_1 f_1 + ... + c_t f_t; |c| must equal the dimension.
    BooleanFunction combine(const BitVec& c) const;

private:
    int m_;
    std::vector<BooleanFunction> components_;
};

inline BooleanFunction combine(const VectorialFunction& F, const BitVec& c) {
    return F.combine(c);
}

/// The exponent i_c with gamma^{i_c} = c_1 gamma + c_2 gamma^2 + ... +
/// c_t gamma^t, the convention under which f_c = pi(gamma^{[y]+i_c}).x
/// holds identically (the variant c.(1,...,gamma^{t-1}) is off by one power
/// of gamma). Throws ZeroCombination for c = 0.
int index_ic(const gf2::Field& field, const BitVec& c);

/// A family {S_{c,alpha}} from one of the three constructions. Immutable;
/// sets are synthesized on demand from their generators.
class SetFamily {
public:
    Construction construction() const { return tag_; }
    int m() const { return m_; }
    int s() const { return s_; }
    int t() const { return t_; }
    int u() const { return u_; }
    int d() const { return d_; }
    int k() const { return k_; }
    int exponent_offset() const { return offset_; }

    /// log2 of the sequence length (m, or m+u for construction 2).
    int seq_vars() const { return tag_ == Construction::two ? m_ + u_ : m_; }

    /// |inner product| of any non-orthogonal pair of family sequences: the
    /// single nonzero plateau amplitude of the combined functions (equals
    /// 2^{floor((M+2)/2)} exactly for the semi-bent parameterizations).
    int nonzero_correlation() const {
        switch (tag_) {
            case Construction::one: return 1 << t_;
            case Construction::two: return 1 << (u_ / 2 + t_);
            case Construction::three: return 1 << (k_ + 2);
        }
        return 0;
    }

    const gf2::Field& field() const { return field_; }

    /// The vectorial function behind the family: F for constructions 1 and
    /// 3, G = H + F for construction 2.
    const VectorialFunction& vectorial() const { return F_; }

    std::size_t size() const;             // number of sets
    std::size_t set_cardinality() const;  // sequences per set

    /// All ids, lexicographic in (c, alpha).
    std::vector<SetId> ids() const;
    /// c values / alpha values, lexicographic.
    std::vector<BitVec> c_values() const;
    std::vector<BitVec> alpha_values() const;
    /// Cyclic presentation order (zero, then pi(gamma^j) for ascending j)
    /// for constructions 1-2; lexicographic for construction 3.
    std::vector<BitVec> c_values_cyclic() const;
    std::vector<BitVec> alpha_values_cyclic() const;

    bool contains(const SetId& id) const;

    /// f_c (or g_c). |c| checked.
    BooleanFunction combined(const BitVec& c) const { return F_.combine(c); }

    /// Walsh indices omega of the linear slice L_alpha.
    std::vector<std::uint32_t> linear_indices(const BitVec& alpha) const;

    /// Materializes S_{c,alpha}. Throws UnknownId.
    OrthogonalSet set(const SetId& id) const;

    friend SetFamily construction1(int m, int s, int t, gf2::Field field);
    friend SetFamily construction2(const SetFamily& base, int u);
    friend SetFamily construction3(int m, int d, gf2::Field field, int exponent_offset);

private:
    SetFamily(Construction tag, gf2::Field field, VectorialFunction F)
        : tag_(tag), field_(std::move(field)), F_(std::move(F)) {}

    Construction tag_;
    int m_ = 0, s_ = 0, t_ = 0, u_ = 0, d_ = 0, k_ = 0, offset_ = 0;
    gf2::Field field_;
    VectorialFunction F_;
};

/// Construction 1: f_i(y,x) = phi_i(y).x with phi_i(y) = pi(gamma^{[y]+i}),
/// [y] big-endian. 2^{2t} sets of 2^s sequences of length 2^m.
/// Preconditions: m = s+t, s < t (BadPartition), field degree t
/// (FieldMismatch).
SetFamily construction1(int m, int s, int t, gf2::Field field);

/// A vectorial bent function on u variables with t components (u even,
/// u >= 2t), built from the Maiorana-McFarland finite-field product
/// B(z_a, z_b) = pi(z_a * z_b) over GF(2^{u/2}); every nonzero combination
/// is audited bent at construction time.
VectorialFunction vectorial_bent(int u, int t);

/// Construction 2 (bent concatenation): G(z,y,x) = H(z) + F(y,x) over the
/// base construction-1 family; sets grow by the factor 2^u and keep the
/// base family's orthogonality pattern.
SetFamily construction2(const SetFamily& base, int u);

/// Construction 3 (even m = 2k+2): f_i(y,x) = (phi_i(y),00).x with the
/// bijective phi_i (0 -> 0, else pi(gamma^{[y]+i+offset})). 2^{k+d} sets of
/// 2^{m-d} sequences. The exponent offset defaults to 0, which reproduces
/// the worked m=6 example.
SetFamily construction3(int m, int d, gf2::Field field, int exponent_offset = 0);

/// The partition H = union of H_alpha: for each alpha the 2^s rows
/// (beta,alpha).(y,x). Returned in the cyclic alpha order.
std::vector<std::pair<BitVec, OrthogonalSet>> hadamard_partition(int m, int s, int t);

}  // namespace orthoseq
