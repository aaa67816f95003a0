#include "orthoseq/window.hpp"

#include <algorithm>
#include <sstream>

namespace orthoseq {

BooleanFunction restriction(const BooleanFunction& f, int s, const BitVec& prefix) {
    int m = f.variables();
    if (s < 0 || s > m - 1)
        throw BadOrder("restriction order " + std::to_string(s) + " out of [0," +
                       std::to_string(m - 1) + "]");
    if (prefix.len != s) throw BadOrder("prefix length does not match restriction order");
    if (s == 0) return f;
    BooleanFunction r(m - s);
    std::uint32_t base = prefix.bits << (m - s);
    for (std::uint32_t j = 0; j < r.domain_size(); ++j)
        if (f.at(base | j)) r.set(j, true);
    return r;
}

DepthReport semibent_depth(const BooleanFunction& f, int max_order) {
    const int m = f.variables();
    if (max_order < 0 || max_order > m - 2) max_order = m - 2;

    DepthReport rep;
    rep.m = m;
    bool failed = false;
    for (int s = 0; s <= max_order; ++s) {
        OrderDetail det;
        det.order = s;
        det.restrictions = 1u << s;
        for (std::uint32_t p = 0; p < (1u << s); ++p) {
            BitVec prefix(s, p);
            SpectrumClass sc = classify(restriction(f, s, prefix));
            if (sc.kind == SpectrumKind::SemiBent) {
                ++det.semibent;
            } else if (!failed) {
                failed = true;
                rep.depth = s - 1;
                rep.first_failure = DepthWitness{s, prefix, sc.kind};
            }
        }
        rep.per_order.push_back(det);
        if (failed && s == 0) break;  // not semi-bent itself: depth -1, stop
    }
    if (!failed) rep.depth = max_order;
    return rep;
}

std::string DepthReport::to_text() const {
    std::ostringstream os;
    os << "semi-bent depth: " << depth << " (m=" << m << ")\n";
    for (const OrderDetail& d : per_order)
        os << "  order " << d.order << ": " << d.semibent << "/" << d.restrictions
           << " restrictions semi-bent\n";
    if (first_failure)
        os << "  first failure: order " << first_failure->order << " prefix "
           << (first_failure->order ? first_failure->prefix.str() : std::string("-")) << " ("
           << to_string(first_failure->kind) << ")\n";
    return os.str();
}

std::string DepthReport::to_json() const {
    std::ostringstream os;
    os << "{\"m\":" << m << ",\"depth\":" << depth << ",\"orders\":[";
    for (std::size_t i = 0; i < per_order.size(); ++i) {
        if (i) os << ",";
        os << "{\"order\":" << per_order[i].order << ",\"restrictions\":" << per_order[i].restrictions
           << ",\"semibent\":" << per_order[i].semibent << "}";
    }
    os << "]";
    if (first_failure)
        os << ",\"first_failure\":{\"order\":" << first_failure->order << ",\"prefix\":\""
           << first_failure->prefix.str() << "\",\"kind\":\"" << to_string(first_failure->kind)
           << "\"}";
    os << "}";
    return os.str();
}

bool WindowProfile::all_blocks_meet_theta() const {
    for (int v : block_max)
        if (v > theta_min) return false;
    return true;
}

WindowProfile window_correlation_profile(const BooleanFunction& f, int v) {
    const int m = f.variables();
    if (v < 2 || v > m) throw BadOrder("window size v must be in [2,m]");

    WindowProfile prof;
    prof.v = v;
    if (v % 2 == 0) {
        prof.theta_min = 1 << (v / 2);
        prof.theta_exact = true;
    } else {
        prof.theta_min = 1 << ((v + 1) / 2);
        prof.theta_exact = v <= 7;  // covering radius unknown above that; working value
    }

    int s = m - v;
    for (std::uint32_t p = 0; p < (1u << s); ++p) {
        BooleanFunction block = restriction(f, s, BitVec(s, p));
        int mx = 0;
        for (std::int32_t w : walsh_spectrum(block)) mx = std::max(mx, w < 0 ? -w : w);
        prof.block_max.push_back(mx);
    }
    return prof;
}

}  // namespace orthoseq
