#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "orthoseq/constructions.hpp"
#include "orthoseq/hexassign.hpp"
#include "orthoseq/ortho.hpp"
#include "orthoseq/window.hpp"

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct FamilyOptions {
    int construction = 1;
    int m = 0;
    int s = -1;
    int t = -1;
    int u = -1;
    int d = 2;
    int offset = 0;
    std::string poly;  // empty = default for the needed degree
};

void add_family_options(CLI::App* cmd, FamilyOptions& opt) {
    cmd->add_option("--construction,-c", opt.construction, "construction number (1, 2 or 3)")
        ->check(CLI::Range(1, 3));
    cmd->add_option("--m,-m", opt.m, "number of variables of the base functions")->required();
    cmd->add_option("--s", opt.s, "MM split s (construction 1; default floor((m-1)/2))");
    cmd->add_option("--t", opt.t, "MM split t (construction 1; default floor((m+2)/2))");
    cmd->add_option("--u", opt.u, "bent-concatenation variables (construction 2)");
    cmd->add_option("--d", opt.d, "alpha width d in {2,3} (construction 3)");
    cmd->add_option("--offset", opt.offset, "exponent offset for construction-3 phi");
    cmd->add_option("--poly", opt.poly,
                    "primitive polynomial (hex bitmask or e.g. \"x^3+x+1\"); default per degree");
}

orthoseq::gf2::Field make_field(const FamilyOptions& opt, int degree) {
    if (opt.poly.empty()) return orthoseq::gf2::Field::with_default_poly(degree);
    return orthoseq::gf2::Field(degree, orthoseq::gf2::Field::parse_poly(opt.poly));
}

orthoseq::SetFamily build_family(FamilyOptions opt) {
    using namespace orthoseq;
    if (opt.construction == 3) {
        if (opt.m < 6 || opt.m % 2 != 0)
            throw BadParameters("construction 3 needs even m = 2k+2 >= 6");
        int k = (opt.m - 2) / 2;
        return construction3(opt.m, opt.d, make_field(opt, k), opt.offset);
    }
    if (opt.t < 0) opt.t = (opt.m + 2) / 2;
    if (opt.s < 0) opt.s = opt.m - opt.t;
    SetFamily base = construction1(opt.m, opt.s, opt.t, make_field(opt, opt.t));
    if (opt.construction == 1) return base;
    if (opt.u < 0) throw BadParameters("construction 2 requires --u");
    return construction2(base, opt.u);
}

std::string poly_hex(const orthoseq::gf2::Field& f) {
    char buf[16];
    std::snprintf(buf, sizeof buf, "0x%x", f.prim_poly());
    return buf;
}

json family_manifest(const orthoseq::SetFamily& fam) {
    json j;
    j["construction"] = static_cast<int>(fam.construction());
    j["m"] = fam.m();
    if (fam.construction() == orthoseq::Construction::three) {
        j["k"] = fam.k();
        j["d"] = fam.d();
        j["exponent_offset"] = fam.exponent_offset();
    } else {
        j["s"] = fam.s();
        j["t"] = fam.t();
        if (fam.construction() == orthoseq::Construction::two) j["u"] = fam.u();
    }
    j["poly"] = poly_hex(fam.field());
    j["family_size"] = fam.size();
    j["set_cardinality"] = fam.set_cardinality();
    j["sequence_length"] = std::uint64_t{1} << fam.seq_vars();
    json sets = json::array();
    for (const orthoseq::SetId& id : fam.ids())
        sets.push_back({{"c", id.c.str()}, {"alpha", id.alpha.str()}});
    j["sets"] = std::move(sets);
    return j;
}

// classify every nonzero combination; returns {semibent_count, total}
std::pair<int, int> audit_family(const orthoseq::SetFamily& fam) {
    using namespace orthoseq;
    int dim = fam.vectorial().dimension();
    int ok = 0, total = (1 << dim) - 1;
    for (std::uint32_t c = 1; c < (1u << dim); ++c) {
        SpectrumClass sc = classify(fam.combined(BitVec(dim, c)));
        if (sc.kind == SpectrumKind::SemiBent) ++ok;
    }
    return {ok, total};
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot write " + path);
    os << content;
}

orthoseq::Assignment load_layout(const std::string& layout) {
    if (layout == "m3_D4" || layout == "m5_D8" || layout == "m6_D4")
        return orthoseq::builtin_layout(layout);
    std::ifstream is(layout, std::ios::binary);
    if (!is) throw std::runtime_error("cannot open layout file " + layout);
    std::string text((std::istreambuf_iterator<char>(is)), std::istreambuf_iterator<char>());
    return orthoseq::Assignment::load(text);
}

orthoseq::SetFamily family_for_assignment(const orthoseq::Assignment& a, const std::string& poly) {
    FamilyOptions opt;
    opt.construction = static_cast<int>(a.tag);
    opt.m = a.m;
    opt.s = a.s > 0 ? a.s : -1;
    opt.t = a.t > 0 ? a.t : -1;
    opt.u = a.u > 0 ? a.u : -1;
    opt.d = a.d > 0 ? a.d : 2;
    opt.poly = poly;
    return build_family(opt);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"orthogonal semi-bent sequence sets: generation, verification, cell assignment"};
    app.require_subcommand(1);
    app.set_config("--config");

    // ---- generate ----
    FamilyOptions gen_opt;
    std::string gen_manifest, gen_seqdir;
    CLI::App* gen = app.add_subcommand("generate", "build a family and report its parameters");
    add_family_options(gen, gen_opt);
    gen->add_option("--manifest", gen_manifest, "write a JSON manifest here");
    gen->add_option("--sequences", gen_seqdir, "materialize all sequences into this directory");

    // ---- table ----
    FamilyOptions tab_opt;
    bool tab_cyclic = false, tab_ascii = false;
    std::string tab_csv, tab_out;
    CLI::App* tab = app.add_subcommand("table", "orthogonality table between f_c and H_alpha");
    add_family_options(tab, tab_opt);
    tab->add_flag("--cyclic-order,--paper-order", tab_cyclic,
                  "order rows/columns in the cyclic field order");
    tab->add_flag("--ascii", tab_ascii, "use 'x' instead of the perp sign");
    tab->add_option("--csv", tab_csv, "write CSV here");
    tab->add_option("-o,--out", tab_out, "write the grid here (default stdout)");

    // ---- verify ----
    std::string ver_layout, ver_report, ver_poly, ver_mode = "auto";
    CLI::App* ver = app.add_subcommand("verify", "verify an assignment against its family");
    ver->add_option("--layout", ver_layout, "builtin name (m3_D4, m5_D8, m6_D4) or file")
        ->required();
    ver->add_option("--mode", ver_mode,
                    "auto | brute | closed | both (auto: brute up to length 2^8, then closed "
                    "with brute spot checks)")
        ->check(CLI::IsMember({"auto", "brute", "closed", "both"}));
    ver->add_option("--poly", ver_poly, "primitive polynomial override");
    ver->add_option("--report", ver_report, "write a JSON report here");

    // ---- depth ----
    FamilyOptions dep_opt;
    std::string dep_hex;
    bool dep_json = false;
    CLI::App* dep = app.add_subcommand("depth", "semi-bent depth / window analysis");
    add_family_options(dep, dep_opt);
    dep->add_option("--hex", dep_hex, "analyze this hex truth table instead of a family");
    dep->add_flag("--json", dep_json, "JSON output");

    // ---- plot ----
    std::string plot_layout, plot_out;
    bool plot_nolabels = false;
    CLI::App* plot = app.add_subcommand("plot", "render an assignment as SVG");
    plot->add_option("--layout", plot_layout, "builtin name or file")->required();
    plot->add_option("-o,--out", plot_out, "output SVG path")->required();
    plot->add_flag("--no-labels", plot_nolabels, "omit cell labels");

    // ---- partition ----
    int par_m = 0, par_s = -1, par_t = -1;
    std::string par_out;
    CLI::App* par = app.add_subcommand("partition", "Hadamard partition in sign-string blocks");
    par->add_option("--m,-m", par_m, "number of variables")->required();
    par->add_option("--s", par_s, "split s (default floor((m-1)/2))");
    par->add_option("--t", par_t, "split t (default floor((m+2)/2))");
    par->add_option("-o,--out", par_out, "output path (default stdout)");

    // ---- export ----
    FamilyOptions exp_opt;
    std::string exp_dir;
    CLI::App* exp = app.add_subcommand("export", "write manifest and all set sequences");
    add_family_options(exp, exp_opt);
    exp->add_option("-o,--out", exp_dir, "output directory")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        using namespace orthoseq;

        if (gen->parsed()) {
            SetFamily fam = build_family(gen_opt);
            auto [ok, total] = audit_family(fam);
            std::cout << "construction " << static_cast<int>(fam.construction()) << " family: m=" << fam.m();
            if (fam.construction() == Construction::three)
                std::cout << " (k=" << fam.k() << ", d=" << fam.d() << ")";
            else
                std::cout << " (s=" << fam.s() << ", t=" << fam.t()
                          << (fam.construction() == Construction::two
                                  ? ", u=" + std::to_string(fam.u())
                                  : "")
                          << ")";
            std::cout << ", poly " << poly_hex(fam.field()) << "\n";
            std::cout << "sets: " << fam.size() << ", sequences per set: " << fam.set_cardinality()
                      << ", length: " << (std::uint64_t{1} << fam.seq_vars()) << "\n";
            std::cout << "audit: " << ok << "/" << total
                      << " nonzero combinations semi-bent\n";
            if (!gen_manifest.empty()) write_file(gen_manifest, family_manifest(fam).dump(2) + "\n");
            if (!gen_seqdir.empty()) {
                fs::create_directories(gen_seqdir);
                for (const SetId& id : fam.ids()) {
                    std::string body;
                    for (const Sequence& s : fam.set(id).sequences) body += s.sign_string() + "\n";
                    write_file(gen_seqdir + "/S_" + id.c.str() + "_" + id.alpha.str() + ".txt", body);
                }
            }
            return 0;
        }

        if (tab->parsed()) {
            SetFamily fam = build_family(tab_opt);
            OrthoTable table = ortho_table(fam, tab_cyclic);
            if (!tab_csv.empty()) write_file(tab_csv, to_csv(table));
            std::string grid = to_grid(table, !tab_ascii);
            if (!tab_out.empty())
                write_file(tab_out, grid);
            else if (tab_csv.empty())
                std::cout << grid;
            return 0;
        }

        if (ver->parsed()) {
            Assignment a = load_layout(ver_layout);
            SetFamily fam = family_for_assignment(a, ver_poly);
            CheckMethod method = CheckMethod::brute_force;
            if (ver_mode == "closed") method = CheckMethod::closed_form;
            if (ver_mode == "both") method = CheckMethod::both;
            if (ver_mode == "auto" && fam.seq_vars() > 8) {
                method = CheckMethod::closed_form;
                // spot-check a slice of set pairs against brute force
                std::vector<SetId> ids = fam.ids();
                for (std::size_t i = 0; i + 1 < ids.size() && i < 16; ++i)
                    (void)check_pair(fam, ids[i], ids[i + 1], CheckMethod::both);
            }
            VerificationReport rep = verify(a, fam, method);
            std::cout << rep.to_text();
            if (!ver_report.empty()) write_file(ver_report, rep.to_json() + "\n");
            return rep.passed() ? 0 : 1;
        }

        if (dep->parsed()) {
            if (!dep_hex.empty()) {
                BooleanFunction f = BooleanFunction::from_hex(dep_opt.m, dep_hex);
                DepthReport rep = semibent_depth(f);
                std::cout << (dep_json ? rep.to_json() + "\n" : rep.to_text());
                return 0;
            }
            SetFamily fam = build_family(dep_opt);
            if (fam.construction() != Construction::two) {
                // depth of every nonzero combined function
                json out = json::array();
                for (const BitVec& c : fam.c_values()) {
                    if (c.zero()) continue;
                    DepthReport rep = semibent_depth(fam.combined(c));
                    if (dep_json)
                        out.push_back({{"c", c.str()}, {"report", json::parse(rep.to_json())}});
                    else
                        std::cout << "f_" << c.str() << ": " << rep.to_text();
                }
                if (dep_json) std::cout << out.dump(2) << "\n";
                return 0;
            }
            // construction 2: endpoint confirmation over every g_c + l'
            int u = fam.u(), mu = fam.seq_vars();
            std::uint64_t total = 0, order0 = 0, orderu = 0;
            std::vector<std::uint64_t> inter_bad(static_cast<std::size_t>(u), 0);
            for (const BitVec& c : fam.c_values()) {
                if (c.zero()) continue;
                for (const BitVec& alpha : fam.alpha_values()) {
                    for (const BooleanFunction& g : fam.set(SetId{c, alpha}).generators) {
                        ++total;
                        DepthReport rep = semibent_depth(g, u);
                        if (rep.per_order[0].semibent == 1) ++order0;
                        const OrderDetail& du = rep.per_order[static_cast<std::size_t>(u)];
                        if (du.semibent == du.restrictions) ++orderu;
                        for (int r = 1; r < u; ++r) {
                            const OrderDetail& dr = rep.per_order[static_cast<std::size_t>(r)];
                            inter_bad[static_cast<std::size_t>(r)] +=
                                dr.restrictions - dr.semibent;
                        }
                    }
                }
            }
            std::cout << "construction 2 (m=" << fam.m() << ", u=" << u << "), sequences of length "
                      << (1 << mu) << ":\n";
            std::cout << "  order 0 semi-bent: " << order0 << "/" << total << "\n";
            std::cout << "  order " << u << " restrictions all semi-bent: " << orderu << "/"
                      << total << "\n";
            bool any_inter = false;
            for (int r = 1; r < u; ++r)
                if (inter_bad[static_cast<std::size_t>(r)]) {
                    any_inter = true;
                    std::cout << "  order " << r << ": " << inter_bad[static_cast<std::size_t>(r)]
                              << " non-semi-bent restrictions\n";
                }
            if (!any_inter) std::cout << "  no intermediate-order failures found\n";
            return 0;
        }

        if (plot->parsed()) {
            Assignment a = load_layout(plot_layout);
            SvgStyle style;
            style.labels = !plot_nolabels;
            write_file(plot_out, render_svg(a, style));
            return 0;
        }

        if (par->parsed()) {
            if (par_t < 0) par_t = (par_m + 2) / 2;
            if (par_s < 0) par_s = par_m - par_t;
            std::ostringstream os;
            bool first = true;
            for (const auto& [alpha, part] : hadamard_partition(par_m, par_s, par_t)) {
                if (!first) os << "\n";
                first = false;
                os << "H_" << alpha.str() << "\n";
                for (const Sequence& s : part.sequences) os << s.sign_string() << "\n";
            }
            if (!par_out.empty())
                write_file(par_out, os.str());
            else
                std::cout << os.str();
            return 0;
        }

        if (exp->parsed()) {
            SetFamily fam = build_family(exp_opt);
            fs::create_directories(exp_dir);
            write_file(exp_dir + "/manifest.json", family_manifest(fam).dump(2) + "\n");
            fs::create_directories(exp_dir + "/sequences");
            for (const SetId& id : fam.ids()) {
                std::string body;
                for (const Sequence& s : fam.set(id).sequences) body += s.sign_string() + "\n";
                write_file(exp_dir + "/sequences/S_" + id.c.str() + "_" + id.alpha.str() + ".txt",
                           body);
            }
            std::cout << "wrote " << fam.size() << " sets to " << exp_dir << "\n";
            return 0;
        }
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 2;
    }
    return 2;
}
