#include "orthoseq/constructions.hpp"

#include <bit>

namespace orthoseq {

namespace {

inline bool dot_parity(std::uint32_t a, std::uint32_t b) {
    return std::popcount(a & b) & 1u;
}

}  // namespace

VectorialFunction::VectorialFunction(int m, std::vector<BooleanFunction> components)
    : m_(m), components_(std::move(components)) {
    for (const BooleanFunction& f : components_)
        if (f.variables() != m_)
            throw LengthMismatch("vectorial component has wrong variable count");
}

const BooleanFunction& VectorialFunction::component(int i) const {
    if (i < 1 || i > dimension())
        throw IndexOutOfRange("component index " + std::to_string(i));
    return components_[static_cast<std::size_t>(i - 1)];
}

BooleanFunction VectorialFunction::combine(const BitVec& c) const {
    if (c.len != dimension())
        throw LengthMismatch("combination vector has length " + std::to_string(c.len) +
                             ", expected " + std::to_string(dimension()));
    BooleanFunction acc(m_);
    for (int i = 1; i <= dimension(); ++i)
        if (c.bit(i)) acc = acc ^ components_[static_cast<std::size_t>(i - 1)];
    return acc;
}

int index_ic(const gf2::Field& field, const BitVec& c) {
    if (c.zero()) throw ZeroCombination("i_c is undefined for c = 0");
    // gamma^{i_c} = sum c_i gamma^i = gamma * pi_inv(c)
    gf2::Element a = field.pi_inv(c);
    return static_cast<int>((static_cast<std::uint32_t>(field.dlog(a)) + 1u) % field.order());
}

// ---------------------------------------------------------------------------
// SetFamily
// ---------------------------------------------------------------------------

std::size_t SetFamily::size() const {
    if (tag_ == Construction::three) return std::size_t{1} << (k_ + d_);
    return std::size_t{1} << (2 * t_);
}

std::size_t SetFamily::set_cardinality() const {
    switch (tag_) {
        case Construction::one: return std::size_t{1} << s_;
        case Construction::two: return std::size_t{1} << (u_ + s_);
        case Construction::three: return std::size_t{1} << (m_ - d_);
    }
    return 0;
}

std::vector<BitVec> SetFamily::c_values() const {
    int len = tag_ == Construction::three ? k_ : t_;
    std::vector<BitVec> out;
    for (std::uint32_t v = 0; v < (1u << len); ++v) out.emplace_back(len, v);
    return out;
}

std::vector<BitVec> SetFamily::alpha_values() const {
    int len = tag_ == Construction::three ? d_ : t_;
    std::vector<BitVec> out;
    for (std::uint32_t v = 0; v < (1u << len); ++v) out.emplace_back(len, v);
    return out;
}

std::vector<BitVec> SetFamily::c_values_cyclic() const {
    if (tag_ == Construction::three) return c_values();
    std::vector<BitVec> out;
    out.emplace_back(t_, 0);
    for (std::uint32_t j = 0; j < field_.order(); ++j) out.push_back(field_.pi(field_.pow_gamma(j)));
    return out;
}

std::vector<BitVec> SetFamily::alpha_values_cyclic() const {
    if (tag_ == Construction::three) return alpha_values();
    return c_values_cyclic();
}

std::vector<SetId> SetFamily::ids() const {
    std::vector<SetId> out;
    out.reserve(size());
    for (const BitVec& c : c_values())
        for (const BitVec& a : alpha_values()) out.push_back(SetId{c, a});
    return out;
}

bool SetFamily::contains(const SetId& id) const {
    int clen = tag_ == Construction::three ? k_ : t_;
    int alen = tag_ == Construction::three ? d_ : t_;
    return id.c.len == clen && id.alpha.len == alen;
}

std::vector<std::uint32_t> SetFamily::linear_indices(const BitVec& alpha) const {
    std::vector<std::uint32_t> out;
    switch (tag_) {
        case Construction::one:
            for (std::uint32_t beta = 0; beta < (1u << s_); ++beta)
                out.push_back((beta << t_) | alpha.bits);
            break;
        case Construction::two:
            // omega = (beta', beta, alpha) over (z, y, x)
            for (std::uint32_t bp = 0; bp < (1u << u_); ++bp)
                for (std::uint32_t beta = 0; beta < (1u << s_); ++beta)
                    out.push_back((bp << m_) | (beta << t_) | alpha.bits);
            break;
        case Construction::three:
            for (std::uint32_t beta = 0; beta < (1u << (m_ - d_)); ++beta)
                out.push_back((beta << d_) | alpha.bits);
            break;
    }
    return out;
}

OrthogonalSet SetFamily::set(const SetId& id) const {
    if (!contains(id))
        throw UnknownId("no set (" + id.str() + ") in this family");
    OrthogonalSet s;
    s.id = id;
    BooleanFunction fc = combined(id.c);
    std::vector<std::uint32_t> omegas = linear_indices(id.alpha);
    s.generators.reserve(omegas.size());
    s.sequences.reserve(omegas.size());
    for (std::uint32_t om : omegas) {
        BooleanFunction g = fc ^ BooleanFunction::linear(seq_vars(), om);
        s.sequences.emplace_back(g);
        s.generators.push_back(std::move(g));
    }
    return s;
}

// ---------------------------------------------------------------------------
// Construction 1
// ---------------------------------------------------------------------------

SetFamily construction1(int m, int s, int t, gf2::Field field) {
    if (m != s + t)
        throw BadPartition("m = " + std::to_string(m) + " but s+t = " + std::to_string(s + t));
    if (s >= t || s < 1)
        throw BadPartition("need 1 <= s < t, got s=" + std::to_string(s) +
                           " t=" + std::to_string(t));
    if (field.degree() != t)
        throw FieldMismatch("field degree " + std::to_string(field.degree()) +
                            " does not match t=" + std::to_string(t));

    std::vector<BooleanFunction> comps;
    comps.reserve(static_cast<std::size_t>(t));
    for (int i = 1; i <= t; ++i) {
        // f_i(y,x) = pi(gamma^{[y]+i}) . x, [y] big-endian
        std::vector<std::uint32_t> phi(std::size_t{1} << s);
        for (std::uint32_t y = 0; y < (1u << s); ++y)
            phi[y] = field.pi(field.pow_gamma(static_cast<std::int64_t>(y) + i)).bits;
        comps.push_back(BooleanFunction::from_fn(m, [&](std::uint32_t j) {
            std::uint32_t y = j >> t;
            std::uint32_t x = j & ((1u << t) - 1u);
            return dot_parity(phi[y], x);
        }));
    }

    SetFamily fam(Construction::one, std::move(field), VectorialFunction(m, std::move(comps)));
    fam.m_ = m;
    fam.s_ = s;
    fam.t_ = t;
    return fam;
}

// ---------------------------------------------------------------------------
// Vectorial bent + Construction 2
// ---------------------------------------------------------------------------

VectorialFunction vectorial_bent(int u, int t) {
    if (t < 1 || u < 4 || u % 2 != 0 || u < 2 * t)
        throw BadParameters("vectorial bent needs even u >= max(4, 2t), got u=" +
                            std::to_string(u) + " t=" + std::to_string(t));
    int h = u / 2;
    gf2::Field f = gf2::Field::with_default_poly(h);

    std::vector<BooleanFunction> comps;
    comps.reserve(static_cast<std::size_t>(t));
    for (int i = 1; i <= t; ++i) {
        comps.push_back(BooleanFunction::from_fn(u, [&](std::uint32_t j) {
            std::uint32_t za = j >> h;
            std::uint32_t zb = j & ((1u << h) - 1u);
            gf2::Element prod = f.mul(f.pi_inv(BitVec(h, za)), f.pi_inv(BitVec(h, zb)));
            return f.pi(prod).bit(i) != 0;
        }));
    }
    VectorialFunction H(u, std::move(comps));

    // bentness audit over all nonzero combinations
    for (std::uint32_t c = 1; c < (1u << t); ++c) {
        SpectrumClass sc = classify(H.combine(BitVec(t, c)));
        if (sc.kind != SpectrumKind::Bent)
            throw ConstructionFailed("vectorial bent audit failed for c=" + BitVec(t, c).str() +
                                     " (got " + to_string(sc.kind) + ")");
    }
    return H;
}

SetFamily construction2(const SetFamily& base, int u) {
    if (base.construction() != Construction::one)
        throw BadParameters("construction 2 extends a construction-1 family");
    int m = base.m(), s = base.s(), t = base.t();
    if (u % 2 != 0 || u < 2 * t)
        throw BadParameters("construction 2 needs even u >= 2t, got u=" + std::to_string(u));

    VectorialFunction H = vectorial_bent(u, t);
    std::vector<BooleanFunction> comps;
    comps.reserve(static_cast<std::size_t>(t));
    for (int i = 1; i <= t; ++i) {
        const BooleanFunction& hi = H.component(i);
        const BooleanFunction& fi = base.vectorial().component(i);
        comps.push_back(BooleanFunction::from_fn(m + u, [&](std::uint32_t j) {
            std::uint32_t z = j >> m;
            std::uint32_t yx = j & ((1u << m) - 1u);
            return hi.at(z) != fi.at(yx);
        }));
    }

    SetFamily fam(Construction::two, base.field(), VectorialFunction(m + u, std::move(comps)));
    fam.m_ = m;
    fam.s_ = s;
    fam.t_ = t;
    fam.u_ = u;
    return fam;
}

// ---------------------------------------------------------------------------
// Construction 3
// ---------------------------------------------------------------------------

SetFamily construction3(int m, int d, gf2::Field field, int exponent_offset) {
    int k = field.degree();
    if (m != 2 * k + 2)
        throw BadParameters("construction 3 needs m = 2k+2 with k the field degree; got m=" +
                            std::to_string(m) + " k=" + std::to_string(k));
    if (k < 2) throw BadParameters("construction 3 needs k >= 2");
    if (d != 2 && d != 3) throw BadParameters("d must be 2 or 3");

    int xbits = k + 2;
    std::vector<BooleanFunction> comps;
    comps.reserve(static_cast<std::size_t>(k));
    for (int i = 1; i <= k; ++i) {
        // phi_i: 0 -> 0, else pi(gamma^{[y]+i+offset}); padded with 00 and
        // dotted against x in F_2^{k+2}
        std::vector<std::uint32_t> mask(std::size_t{1} << k, 0);
        for (std::uint32_t y = 1; y < (1u << k); ++y)
            mask[y] = field.pi(field.pow_gamma(static_cast<std::int64_t>(y) + i + exponent_offset)).bits
                      << 2;
        comps.push_back(BooleanFunction::from_fn(m, [&](std::uint32_t j) {
            std::uint32_t y = j >> xbits;
            std::uint32_t x = j & ((1u << xbits) - 1u);
            return dot_parity(mask[y], x);
        }));
    }

    SetFamily fam(Construction::three, std::move(field), VectorialFunction(m, std::move(comps)));
    fam.m_ = m;
    fam.k_ = k;
    fam.d_ = d;
    fam.offset_ = exponent_offset;
    return fam;
}

// ---------------------------------------------------------------------------
// Hadamard partition
// ---------------------------------------------------------------------------

std::vector<std::pair<BitVec, OrthogonalSet>> hadamard_partition(int m, int s, int t) {
    if (m != s + t || s < 1 || t < 2)
        throw BadPartition("hadamard_partition needs m = s+t, s >= 1, t >= 2");
    gf2::Field field = gf2::Field::with_default_poly(t);

    std::vector<BitVec> order;
    order.emplace_back(t, 0);
    for (std::uint32_t j = 0; j < field.order(); ++j) order.push_back(field.pi(field.pow_gamma(j)));

    std::vector<std::pair<BitVec, OrthogonalSet>> parts;
    parts.reserve(order.size());
    for (const BitVec& alpha : order) {
        OrthogonalSet part;
        part.id = SetId{BitVec(t, 0), alpha};
        for (std::uint32_t beta = 0; beta < (1u << s); ++beta) {
            BooleanFunction l = BooleanFunction::linear(m, (beta << t) | alpha.bits);
            part.sequences.emplace_back(l);
            part.generators.push_back(std::move(l));
        }
        parts.emplace_back(alpha, std::move(part));
    }
    return parts;
}

}  // namespace orthoseq
