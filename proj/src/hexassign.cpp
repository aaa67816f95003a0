#include "orthoseq/hexassign.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <sstream>

namespace orthoseq {

std::array<HexCell, 6> neighbors(const HexCell& c) {
    return {HexCell{c.q + 1, c.r}, HexCell{c.q - 1, c.r},  HexCell{c.q, c.r + 1},
            HexCell{c.q, c.r - 1}, HexCell{c.q + 1, c.r - 1}, HexCell{c.q - 1, c.r + 1}};
}

bool adjacent(const HexCell& a, const HexCell& b) {
    int dq = b.q - a.q, dr = b.r - a.r;
    return (std::abs(dq) + std::abs(dr) + std::abs(dq + dr)) == 2;
}

std::pair<double, double> hex_center(const HexCell& c) {
    return {c.q + c.r / 2.0, c.r * std::sqrt(3.0) / 2.0};
}

double center_distance(const HexCell& a, const HexCell& b) {
    auto [x1, y1] = hex_center(a);
    auto [x2, y2] = hex_center(b);
    return std::hypot(x1 - x2, y1 - y2);
}

int hex_step_distance(const HexCell& a, const HexCell& b) {
    int dq = b.q - a.q, dr = b.r - a.r;
    return (std::abs(dq) + std::abs(dr) + std::abs(dq + dr)) / 2;
}

// ---------------------------------------------------------------------------
// Assignment text format
// ---------------------------------------------------------------------------

std::string Assignment::save() const {
    std::ostringstream os;
    os << "# orthoseq assignment\n";
    os << "construction " << static_cast<int>(tag) << "\n";
    os << "m " << m << "\n";
    if (tag == Construction::three) {
        os << "d " << d << "\n";
    } else {
        os << "s " << s << "\n";
        os << "t " << t << "\n";
        if (tag == Construction::two) os << "u " << u << "\n";
    }
    os << "claimed_D " << claimed_D << "\n";
    os << "period " << period[0].q << " " << period[0].r << " " << period[1].q << " "
       << period[1].r << "\n";
    for (const auto& [cell, id] : cells)
        os << cell.q << " " << cell.r << " " << id.c.str() << " " << id.alpha.str() << "\n";
    return os.str();
}

Assignment Assignment::load(const std::string& text) {
    Assignment a;
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        std::string head;
        ls >> head;
        if (head == "construction") {
            int v;
            ls >> v;
            if (v < 1 || v > 3) throw ParseError("bad construction tag " + std::to_string(v));
            a.tag = static_cast<Construction>(v);
        } else if (head == "m") {
            ls >> a.m;
        } else if (head == "s") {
            ls >> a.s;
        } else if (head == "t") {
            ls >> a.t;
        } else if (head == "u") {
            ls >> a.u;
        } else if (head == "d") {
            ls >> a.d;
        } else if (head == "claimed_D") {
            ls >> a.claimed_D;
        } else if (head == "period") {
            ls >> a.period[0].q >> a.period[0].r >> a.period[1].q >> a.period[1].r;
        } else {
            // cell line: q r c_bits alpha_bits
            HexCell cell;
            std::string cbits, abits;
            try {
                cell.q = std::stoi(head);
            } catch (const std::exception&) {
                throw ParseError("bad assignment line: " + line);
            }
            ls >> cell.r >> cbits >> abits;
            if (!ls) throw ParseError("bad assignment line: " + line);
            a.cells[cell] = SetId{BitVec::parse(cbits), BitVec::parse(abits)};
        }
    }
    if (a.cells.empty()) throw ParseError("assignment has no cells");
    return a;
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

namespace {

// max |inner product| over all sequence pairs of two family sets, cached per
// unordered id pair; the diagonal (same id) is 2^M by the identical pair.
// closed_form substitutes the closed-form predicate and the pinned
// correlation magnitude; both cross-checks the two routes.
struct CorrelationCache {
    const SetFamily& family;
    CheckMethod method;
    int bound;
    std::map<std::pair<SetId, SetId>, int> table;

    CorrelationCache(const SetFamily& f, CheckMethod m)
        : family(f), method(m), bound(f.nonzero_correlation()) {}

    int max_corr(const SetId& a, const SetId& b) {
        if (a == b) return 1 << family.seq_vars();
        auto key = a < b ? std::make_pair(a, b) : std::make_pair(b, a);
        auto it = table.find(key);
        if (it != table.end()) return it->second;
        int v;
        if (method == CheckMethod::closed_form) {
            v = sets_orthogonal_closed(family, key.first, key.second) ? 0 : bound;
        } else {
            v = max_cross_correlation(family.set(key.first), family.set(key.second));
            if (method == CheckMethod::both &&
                (v == 0) != sets_orthogonal_closed(family, key.first, key.second))
                throw ConstructionFailed("closed form and brute force disagree on (" +
                                         key.first.str() + ") vs (" + key.second.str() + ")");
        }
        table.emplace(key, v);
        return v;
    }
};

}  // namespace

VerificationReport verify(const Assignment& assignment, const SetFamily& family,
                          CheckMethod method) {
    for (const auto& [cell, id] : assignment.cells)
        if (!family.contains(id))
            throw UnresolvedSetId("assignment references set (" + id.str() +
                                  ") outside the family");

    // 3x3 periods: every boundary adjacency of the infinite tiling shows up
    std::map<HexCell, SetId> window;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (const auto& [cell, id] : assignment.cells)
                window[HexCell{cell.q + i * assignment.period[0].q + j * assignment.period[1].q,
                               cell.r + i * assignment.period[0].r + j * assignment.period[1].r}] =
                    id;

    CorrelationCache cache(family, method);
    VerificationReport rep;
    rep.claimed_D = assignment.claimed_D;
    rep.correlation_bound = 1 << ((family.seq_vars() + 2) / 2);
    rep.measured_min_reuse_distance = std::numeric_limits<double>::infinity();
    rep.measured_min_reuse_steps = std::numeric_limits<int>::max();

    // (a) adjacency
    for (const auto& [cell, id] : window) {
        for (const HexCell& nb : neighbors(cell)) {
            auto it = window.find(nb);
            if (it == window.end() || !(cell < nb)) continue;
            int corr = cache.max_corr(id, it->second);
            if (corr != 0)
                rep.adjacent_violations.push_back(AdjacentViolation{cell, nb, id, it->second, corr});
        }
    }

    // (b) same-set distance, (c) non-adjacent correlation
    std::vector<std::pair<HexCell, SetId>> cells(window.begin(), window.end());
    for (std::size_t i = 0; i < cells.size(); ++i) {
        for (std::size_t j = i + 1; j < cells.size(); ++j) {
            const auto& [ca, ia] = cells[i];
            const auto& [cb, ib] = cells[j];
            if (ia == ib) {
                rep.measured_min_reuse_distance =
                    std::min(rep.measured_min_reuse_distance, center_distance(ca, cb));
                rep.measured_min_reuse_steps =
                    std::min(rep.measured_min_reuse_steps, hex_step_distance(ca, cb));
            } else if (!adjacent(ca, cb)) {
                rep.max_nonadjacent_correlation =
                    std::max(rep.max_nonadjacent_correlation, cache.max_corr(ia, ib));
            }
        }
    }
    return rep;
}

std::string VerificationReport::to_text() const {
    std::ostringstream os;
    os << (passed() ? "PASS" : "FAIL") << ": " << adjacent_violations.size()
       << " adjacent violations, min re-use distance " << measured_min_reuse_distance
       << " (claimed " << claimed_D << ", " << measured_min_reuse_steps
       << " hex steps), max non-adjacent correlation " << max_nonadjacent_correlation
       << " (bound " << correlation_bound << ")\n";
    for (const AdjacentViolation& v : adjacent_violations)
        os << "  (" << v.a.q << "," << v.a.r << ")=" << v.set_a.str() << " ~ (" << v.b.q << ","
           << v.b.r << ")=" << v.set_b.str() << " correlation " << v.correlation << "\n";
    return os.str();
}

std::string VerificationReport::to_json() const {
    std::ostringstream os;
    os << "{\"passed\":" << (passed() ? "true" : "false")
       << ",\"adjacent_violations\":" << adjacent_violations.size() << ",\"min_reuse_distance\":"
       << (std::isfinite(measured_min_reuse_distance) ? measured_min_reuse_distance : -1.0)
       << ",\"min_reuse_steps\":" << measured_min_reuse_steps
       << ",\"claimed_D\":" << claimed_D
       << ",\"max_nonadjacent_correlation\":" << max_nonadjacent_correlation
       << ",\"correlation_bound\":" << correlation_bound << ",\"witnesses\":[";
    for (std::size_t i = 0; i < adjacent_violations.size(); ++i) {
        const AdjacentViolation& v = adjacent_violations[i];
        if (i) os << ",";
        os << "{\"a\":[" << v.a.q << "," << v.a.r << "],\"b\":[" << v.b.q << "," << v.b.r
           << "],\"set_a\":\"" << v.set_a.str() << "\",\"set_b\":\"" << v.set_b.str()
           << "\",\"correlation\":" << v.correlation << "}";
    }
    os << "]}";
    return os.str();
}

// ---------------------------------------------------------------------------
// cluster layout generator (constructions 1, m in {3,5})
// ---------------------------------------------------------------------------

namespace {

// allowed nonzero alpha-differences per c-difference: f_{dc} orthogonal to
// H_{da} iff pi^{-1}(da) outside {gamma^{[y]+i_dc}}
std::vector<std::vector<char>> allowed_table(const gf2::Field& field, int s) {
    std::uint32_t n = 1u << field.degree();
    std::vector<std::vector<char>> allow(n, std::vector<char>(n, 0));
    for (std::uint32_t dc = 0; dc < n; ++dc) {
        for (std::uint32_t da = 0; da < n; ++da) {
            if (dc == 0 && da == 0) continue;  // same set
            if (dc == 0 || da == 0) {
                allow[dc][da] = 1;  // same c, alpha differs / same alpha, c differs
                continue;
            }
            int ice = index_ic(field, BitVec(field.degree(), dc));
            std::uint32_t diff = (static_cast<std::uint32_t>(
                                      field.dlog(field.pi_inv(BitVec(field.degree(), da)))) +
                                  field.order() - static_cast<std::uint32_t>(ice)) %
                                 field.order();
            allow[dc][da] = diff >= (1u << s) ? 1 : 0;
        }
    }
    return allow;
}

// Backtracking with forward checking over per-cell candidate masks and
// minimum-remaining-values ordering. Variable count is 2^{2t} cells with
// 2^t candidates each; the alpha-shift symmetry (only differences matter)
// pins the first cell to 0.
struct ClusterSearch {
    int t;
    int width, height;                  // torus, both 2^t
    int rows_per_cluster;               // 2^{t-1}
    int n;                              // cells
    std::vector<std::uint32_t> cell_c;  // indexed q*height + r
    const std::vector<std::vector<char>>& allow;
    std::vector<std::uint32_t> domain;  // candidate mask per cell
    std::vector<int> alpha;             // -1 while unassigned
    std::vector<std::array<int, 6>> nbr;
    std::vector<std::vector<int>> cluster_mates;
    std::vector<std::pair<int, std::uint32_t>> trail;  // (cell, removed bits)
    int assigned_count = 0;
    int deepest = -1;
    long long nodes = 0;
    long long node_budget;
    bool budget_hit = false;

    ClusterSearch(int t_, const std::vector<std::vector<char>>& allow_, long long budget)
        : t(t_), width(1 << t_), height(1 << t_), rows_per_cluster(1 << (t_ - 1)),
          n(width * height), cell_c(static_cast<std::size_t>(n)), allow(allow_),
          domain(static_cast<std::size_t>(n), (1u << (1 << t_)) - 1u),
          alpha(static_cast<std::size_t>(n), -1), nbr(static_cast<std::size_t>(n)),
          node_budget(budget) {
        static const int dq[6] = {1, -1, 0, 0, 1, -1};
        static const int dr[6] = {0, 0, 1, -1, -1, 1};
        std::vector<std::vector<int>> clusters(static_cast<std::size_t>(width));
        for (int q = 0; q < width; ++q) {
            for (int r = 0; r < height; ++r) {
                int i = idx(q, r);
                for (int dir = 0; dir < 6; ++dir) {
                    int nq = ((q + dq[dir]) % width + width) % width;
                    int nr = ((r + dr[dir]) % height + height) % height;
                    nbr[static_cast<std::size_t>(i)][static_cast<std::size_t>(dir)] = idx(nq, nr);
                }
                clusters[static_cast<std::size_t>(cluster_of(q, r))].push_back(i);
            }
        }
        cluster_mates.assign(static_cast<std::size_t>(n), {});
        for (const std::vector<int>& cl : clusters)
            for (int i : cl)
                for (int j : cl)
                    if (i != j) cluster_mates[static_cast<std::size_t>(i)].push_back(j);
    }

    int idx(int q, int r) const { return q * height + r; }
    int cluster_of(int q, int r) const { return (q / 2) * 2 + r / rows_per_cluster; }

    bool remove(int cell, std::uint32_t bits) {
        std::uint32_t hit = domain[static_cast<std::size_t>(cell)] & bits;
        if (!hit) return true;
        domain[static_cast<std::size_t>(cell)] &= ~hit;
        trail.emplace_back(cell, hit);
        return domain[static_cast<std::size_t>(cell)] != 0;
    }

    // assign and forward-check; false leaves the trail above `mark` intact
    // for the caller to unwind
    bool assign(int cell, std::uint32_t a) {
        alpha[static_cast<std::size_t>(cell)] = static_cast<int>(a);
        ++assigned_count;
        deepest = std::max(deepest, assigned_count);
        if (!remove(cell, domain[static_cast<std::size_t>(cell)] & ~(1u << a))) return false;
        for (int mate : cluster_mates[static_cast<std::size_t>(cell)])
            if (alpha[static_cast<std::size_t>(mate)] < 0 && !remove(mate, 1u << a)) return false;
        for (int nb : nbr[static_cast<std::size_t>(cell)]) {
            if (alpha[static_cast<std::size_t>(nb)] >= 0) continue;
            std::uint32_t dc = cell_c[static_cast<std::size_t>(cell)] ^
                               cell_c[static_cast<std::size_t>(nb)];
            std::uint32_t bad = 0;
            for (std::uint32_t b = 0; b < (1u << t); ++b)
                if (!allow[dc][a ^ b]) bad |= 1u << b;
            if (!remove(nb, bad)) return false;
        }
        return true;
    }

    void unwind(std::size_t mark, int cell) {
        while (trail.size() > mark) {
            auto [c, bits] = trail.back();
            trail.pop_back();
            domain[static_cast<std::size_t>(c)] |= bits;
        }
        alpha[static_cast<std::size_t>(cell)] = -1;
        --assigned_count;
    }

    bool solve() {
        if (assigned_count == n) return true;
        if (++nodes > node_budget) {
            budget_hit = true;
            return false;
        }
        // MRV, lowest index breaks ties
        int cell = -1, best = 1 << 30;
        for (int i = 0; i < n; ++i) {
            if (alpha[static_cast<std::size_t>(i)] >= 0) continue;
            int sz = std::popcount(domain[static_cast<std::size_t>(i)]);
            if (sz < best) {
                best = sz;
                cell = i;
            }
        }
        std::uint32_t cand = domain[static_cast<std::size_t>(cell)];
        while (cand) {
            std::uint32_t a = static_cast<std::uint32_t>(std::countr_zero(cand));
            cand &= cand - 1;
            std::size_t mark = trail.size();
            if (assign(cell, a) && solve()) return true;
            unwind(mark, cell);
            if (budget_hit) return false;
        }
        return false;
    }

    bool run() {
        std::size_t mark = trail.size();
        if (!assign(0, 0)) {  // symmetry pin
            unwind(mark, 0);
            return false;
        }
        return solve();
    }
};

}  // namespace

Assignment cluster_layout_c1(const SetFamily& family, std::pair<BitVec, BitVec> c_offsets) {
    if (family.construction() != Construction::one)
        throw BadParameters("cluster layout requires a construction-1 family");
    const int t = family.t(), s = family.s(), m = family.m();
    if (m % 2 == 0 || (t != 2 && t != 3))
        throw BadParameters("cluster layout rule is defined for m in {3,5}");
    const BitVec o1 = c_offsets.first, o2 = c_offsets.second;
    if (o1.len != t || o2.len != t) throw BadParameters("offsets must have length t");
    if (o1.zero() || o2.zero()) throw RuleFails("zero cluster offset");
    if (t == 2 && o1 != o2)
        throw RuleFails("two cluster columns wrap onto one boundary; offsets must agree for m=3");
    if (t == 3 && o1 == o2) throw RuleFails("offsets must be distinct for m=5");

    const gf2::Field& field = family.field();
    auto allow = allowed_table(field, s);

    // c per cluster: horizontal walk alternating o1, o2; second cluster row
    // offset by e (searched over values outside span{o1,o2})
    std::uint32_t span[4] = {0, o1.bits, o2.bits, o1.bits ^ o2.bits};
    int n_cluster_cols = (1 << t) / 2;
    std::vector<std::uint32_t> walk(static_cast<std::size_t>(n_cluster_cols));
    walk[0] = 0;
    for (int i = 1; i < n_cluster_cols; ++i)
        walk[static_cast<std::size_t>(i)] =
            walk[static_cast<std::size_t>(i - 1)] ^ (i % 2 == 1 ? o1.bits : o2.bits);

    int deepest = -1;
    bool any_budget_hit = false;
    for (std::uint32_t e = 1; e < (1u << t); ++e) {
        bool in_span = false;
        for (std::uint32_t v : span)
            if (e == v) in_span = true;
        if (in_span) continue;

        ClusterSearch search(t, allow, 5'000'000);
        for (int q = 0; q < search.width; ++q)
            for (int r = 0; r < search.height; ++r)
                search.cell_c[static_cast<std::size_t>(search.idx(q, r))] =
                    walk[static_cast<std::size_t>(q / 2)] ^
                    (r / search.rows_per_cluster == 1 ? e : 0);
        // distinctness of the 2^t cluster values
        std::vector<char> seen(1u << t, 0);
        bool distinct = true;
        for (int i = 0; i < n_cluster_cols; ++i)
            for (int j = 0; j < 2; ++j) {
                std::uint32_t v = walk[static_cast<std::size_t>(i)] ^ (j ? e : 0);
                if (seen[v]) distinct = false;
                seen[v] = 1;
            }
        if (!distinct) continue;

        if (search.run()) {
            Assignment a;
            a.tag = Construction::one;
            a.m = m;
            a.s = s;
            a.t = t;
            a.claimed_D = 1 << t;
            a.period = {HexCell{1 << t, 0}, HexCell{0, 1 << t}};
            for (int q = 0; q < search.width; ++q)
                for (int r = 0; r < search.height; ++r)
                    a.cells[HexCell{q, r}] = SetId{
                        BitVec(t, search.cell_c[static_cast<std::size_t>(search.idx(q, r))]),
                        BitVec(t, static_cast<std::uint32_t>(
                                      search.alpha[static_cast<std::size_t>(search.idx(q, r))]))};
            return a;
        }
        deepest = std::max(deepest, search.deepest);
        any_budget_hit = any_budget_hit || search.budget_hit;
    }
    std::string how = any_budget_hit ? "no layout found within the search budget"
                                     : "the orthogonality table blocks every completion";
    throw RuleFails("no alpha layout satisfies the cluster rule for offsets (" + o1.str() + ", " +
                    o2.str() + "); " + how + " (deepest cell " + std::to_string(deepest) + " of " +
                    std::to_string(1 << (2 * t)) + ")");
}

// ---------------------------------------------------------------------------
// builtin layouts
// ---------------------------------------------------------------------------

Assignment builtin_layout(const std::string& name) {
    if (name == "m3_D4") {
        // affine solution on the 4x4 torus: basis offsets o=10, e=01
        Assignment a;
        a.tag = Construction::one;
        a.m = 3;
        a.s = 1;
        a.t = 2;
        a.claimed_D = 4;
        a.period = {HexCell{4, 0}, HexCell{0, 4}};
        for (int q = 0; q < 4; ++q) {
            for (int r = 0; r < 4; ++r) {
                std::uint32_t p = static_cast<std::uint32_t>(q) & 1, I = static_cast<std::uint32_t>(q) >> 1;
                std::uint32_t k = static_cast<std::uint32_t>(r) & 1, J = static_cast<std::uint32_t>(r) >> 1;
                std::uint32_t c = (I ? 0b10u : 0u) ^ (J ? 0b01u : 0u);
                std::uint32_t al = ((p ^ I) ? 0b01u : 0u) ^ ((k ^ J) ? 0b10u : 0u);
                a.cells[HexCell{q, r}] = SetId{BitVec(2, c), BitVec(2, al)};
            }
        }
        return a;
    }
    if (name == "m5_D8") {
        SetFamily fam = construction1(5, 2, 3, gf2::Field::with_default_poly(3));
        return cluster_layout_c1(fam, {BitVec::parse("011"), BitVec::parse("110")});
    }
    if (name == "m6_D4") {
        // stripes: c by row, alpha by the (q+2r) diagonal; adjacent cells
        // always differ in alpha, which for d=2 is the whole orthogonality
        // condition
        Assignment a;
        a.tag = Construction::three;
        a.m = 6;
        a.d = 2;
        a.claimed_D = 4;
        a.period = {HexCell{4, 0}, HexCell{0, 4}};
        for (int q = 0; q < 4; ++q)
            for (int r = 0; r < 4; ++r)
                a.cells[HexCell{q, r}] =
                    SetId{BitVec(2, static_cast<std::uint32_t>(r)),
                          BitVec(2, static_cast<std::uint32_t>((q + 2 * r) % 4))};
        return a;
    }
    throw UnknownLayout("unknown builtin layout: " + name);
}

// ---------------------------------------------------------------------------
// SVG rendering
// ---------------------------------------------------------------------------

std::string render_svg(const Assignment& assignment, const SvgStyle& style) {
    const double R = style.hex_size;          // circumradius, pointy-top
    const double w = std::sqrt(3.0) * R;      // hex width
    const double h = 1.5 * R;                 // vertical row step

    // fixed palette keyed by the c value so same-c clusters shade alike
    std::vector<std::uint32_t> cvals;
    for (const auto& [cell, id] : assignment.cells) cvals.push_back(id.c.bits);
    std::sort(cvals.begin(), cvals.end());
    cvals.erase(std::unique(cvals.begin(), cvals.end()), cvals.end());
    auto color_of = [&](std::uint32_t c) {
        std::size_t idx = static_cast<std::size_t>(
            std::lower_bound(cvals.begin(), cvals.end(), c) - cvals.begin());
        int hue = static_cast<int>(360 * idx / std::max<std::size_t>(1, cvals.size()));
        std::ostringstream os;
        os << "hsl(" << hue << ",55%,78%)";
        return os.str();
    };

    double minx = 1e18, miny = 1e18, maxx = -1e18, maxy = -1e18;
    for (const auto& [cell, id] : assignment.cells) {
        double cx = w * (cell.q + cell.r / 2.0);
        double cy = h * cell.r;
        minx = std::min(minx, cx - w);
        maxx = std::max(maxx, cx + w);
        miny = std::min(miny, cy - 2 * R);
        maxy = std::max(maxy, cy + 2 * R);
    }

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << minx << " " << miny << " "
       << (maxx - minx) << " " << (maxy - miny) << "\">\n";
    char buf[64];
    for (const auto& [cell, id] : assignment.cells) {
        double cx = w * (cell.q + cell.r / 2.0);
        double cy = h * cell.r;
        os << "<polygon points=\"";
        constexpr double pi = 3.14159265358979323846;
        for (int corner = 0; corner < 6; ++corner) {
            double ang = (60.0 * corner - 30.0) * pi / 180.0;
            std::snprintf(buf, sizeof buf, "%.2f,%.2f ", cx + R * std::cos(ang),
                          cy + R * std::sin(ang));
            os << buf;
        }
        os << "\" fill=\"" << color_of(id.c.bits) << "\" stroke=\"#444\" stroke-width=\"1\"/>\n";
        if (style.labels) {
            std::snprintf(buf, sizeof buf, "%.2f", cy + R * 0.12);
            os << "<text x=\"" << cx << "\" y=\"" << buf
               << "\" text-anchor=\"middle\" font-size=\"" << R * 0.36
               << "\" font-family=\"monospace\">" << id.c.str() << "," << id.alpha.str()
               << "</text>\n";
        }
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace orthoseq
