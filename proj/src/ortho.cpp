#include "orthoseq/ortho.hpp"

#include <algorithm>
#include <sstream>

namespace orthoseq {

OrthoReport sets_orthogonal_bruteforce(const OrthogonalSet& a, const OrthogonalSet& b) {
    OrthoReport rep;
    rep.a = a.id;
    rep.b = b.id;
    rep.method = CheckMethod::brute_force;
    const bool same = a.id == b.id;
    for (std::size_t i = 0; i < a.sequences.size(); ++i) {
        for (std::size_t j = same ? i + 1 : 0; j < b.sequences.size(); ++j) {
            int v = inner_product(a.sequences[i], b.sequences[j]);
            int av = v < 0 ? -v : v;
            if (av > rep.max_abs_correlation) {
                rep.max_abs_correlation = av;
                rep.witness = PairWitness{i, j, v};
            }
        }
    }
    rep.orthogonal = rep.max_abs_correlation == 0;
    if (rep.orthogonal) rep.witness.reset();
    return rep;
}

bool sets_orthogonal_closed_c1(const gf2::Field& field, int s, const BitVec& c,
                               const BitVec& alpha, const BitVec& e, const BitVec& delta) {
    if (c == e && alpha == delta) throw SamePair("a set is never orthogonal to itself");
    if (c == e) return alpha != delta;
    if (alpha == delta) return true;
    gf2::Element w = field.pi_inv(alpha ^ delta);
    int ice = index_ic(field, c ^ e);
    std::uint32_t diff =
        (static_cast<std::uint32_t>(field.dlog(w)) + field.order() - static_cast<std::uint32_t>(ice)) %
        field.order();
    return diff >= (1u << s);  // in the forbidden window {i_{c+e}+[0,2^s)} otherwise
}

bool sets_orthogonal_closed_c3(const BitVec& c, const BitVec& alpha, const BitVec& e,
                               const BitVec& delta, int d) {
    if (alpha.len != d || delta.len != d) throw LengthMismatch("alpha/delta must have length d");
    if (c == e && alpha == delta) throw SamePair("a set is never orthogonal to itself");
    if (c == e) return alpha != delta;
    std::uint32_t last2 = (alpha.bits ^ delta.bits) & 3u;
    return last2 != 0;
}

bool sets_orthogonal_closed(const SetFamily& family, const SetId& a, const SetId& b) {
    if (!family.contains(a) || !family.contains(b)) throw UnknownId("id not in family");
    if (family.construction() == Construction::three)
        return sets_orthogonal_closed_c3(a.c, a.alpha, b.c, b.alpha, family.d());
    return sets_orthogonal_closed_c1(family.field(), family.s(), a.c, a.alpha, b.c, b.alpha);
}

OrthoReport check_pair(const SetFamily& family, const SetId& a, const SetId& b,
                       CheckMethod method) {
    if (method == CheckMethod::closed_form) {
        OrthoReport rep;
        rep.a = a;
        rep.b = b;
        rep.method = CheckMethod::closed_form;
        rep.orthogonal = sets_orthogonal_closed(family, a, b);
        // three-valued spectra pin the magnitude of every nonzero correlation
        rep.max_abs_correlation = rep.orthogonal ? 0 : family.nonzero_correlation();
        return rep;
    }
    OrthoReport rep = sets_orthogonal_bruteforce(family.set(a), family.set(b));
    if (method == CheckMethod::both) {
        bool closed = sets_orthogonal_closed(family, a, b);
        if (closed != rep.orthogonal)
            throw ConstructionFailed("closed form and brute force disagree on (" + a.str() +
                                     ") vs (" + b.str() + ")");
        rep.method = CheckMethod::both;
    }
    return rep;
}

int count_orthogonal(const SetFamily& family, const SetId& id, CheckMethod method) {
    if (!family.contains(id)) throw UnknownId("id not in family");
    if (method == CheckMethod::closed_form) {
        if (family.construction() == Construction::three) {
            int k = family.k(), d = family.d();
            return 3 * (1 << (k + d - 2)) + (1 << (d - 2)) - 1;
        }
        int s = family.s(), t = family.t(), m = family.m();
        return (1 << (2 * t)) - (1 << m) + (1 << s) - 1;
    }
    int count = 0;
    for (const SetId& other : family.ids()) {
        if (other == id) continue;
        bool orth = method == CheckMethod::brute_force
                        ? sets_orthogonal_bruteforce(family.set(id), family.set(other)).orthogonal
                        : check_pair(family, id, other, CheckMethod::both).orthogonal;
        if (orth) ++count;
    }
    return count;
}

bool OrthoTable::at(const BitVec& c, const BitVec& alpha) const {
    for (std::size_t i = 0; i < rows.size(); ++i)
        if (rows[i] == c)
            for (std::size_t j = 0; j < cols.size(); ++j)
                if (cols[j] == alpha) return cell[i][j];
    throw UnknownId("no table cell (" + c.str() + ", " + alpha.str() + ")");
}

OrthoTable ortho_table(const SetFamily& family, bool cyclic_order) {
    OrthoTable tbl;
    tbl.rows = cyclic_order ? family.c_values_cyclic() : family.c_values();
    tbl.cols = cyclic_order ? family.alpha_values_cyclic() : family.alpha_values();

    tbl.cell.resize(tbl.rows.size());
    for (std::size_t i = 0; i < tbl.rows.size(); ++i) {
        Sequence fc = sequence_of(family.combined(tbl.rows[i]));
        tbl.cell[i].resize(tbl.cols.size());
        for (std::size_t j = 0; j < tbl.cols.size(); ++j) {
            bool orth = true;
            for (std::uint32_t om : family.linear_indices(tbl.cols[j])) {
                if (inner_product(fc, hadamard_row(family.seq_vars(), om)) != 0) {
                    orth = false;
                    break;
                }
            }
            tbl.cell[i][j] = orth;
        }
    }
    return tbl;
}

std::string to_csv(const OrthoTable& table) {
    std::ostringstream os;
    os << "c";
    for (const BitVec& a : table.cols) os << ",H_" << a.str();
    os << "\n";
    for (std::size_t i = 0; i < table.rows.size(); ++i) {
        os << "f_" << table.rows[i].str();
        for (std::size_t j = 0; j < table.cols.size(); ++j) os << "," << (table.cell[i][j] ? 1 : 0);
        os << "\n";
    }
    return os.str();
}

std::string to_grid(const OrthoTable& table, bool unicode) {
    const std::string mark = unicode ? "⊥" : "x";
    std::size_t w = 2;
    for (const BitVec& a : table.cols) w = std::max(w, a.str().size() + 2);
    std::size_t rw = 2;
    for (const BitVec& c : table.rows) rw = std::max(rw, c.str().size() + 2);

    // pads to a display width; the perp mark renders as one column
    auto pad = [](const std::string& s, std::size_t display, std::size_t width) {
        std::string out = s;
        while (display++ < width) out.push_back(' ');
        return out;
    };

    std::ostringstream os;
    os << pad("", 0, rw + 1);
    for (const BitVec& a : table.cols) os << pad("H_" + a.str(), a.str().size() + 2, w + 1);
    os << "\n";
    for (std::size_t i = 0; i < table.rows.size(); ++i) {
        os << pad("f_" + table.rows[i].str(), table.rows[i].str().size() + 2, rw + 1);
        for (std::size_t j = 0; j < table.cols.size(); ++j)
            os << (table.cell[i][j] ? pad(mark, 1, w + 1) : pad("", 0, w + 1));
        os << "\n";
    }
    return os.str();
}

int max_cross_correlation(const OrthogonalSet& a, const OrthogonalSet& b) {
    return sets_orthogonal_bruteforce(a, b).max_abs_correlation;
}

}  // namespace orthoseq
