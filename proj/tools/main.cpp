// Command-line front end: every module surfaced with JSON input/output.
// Exit codes: 0 success, 1 domain error, 2 verification failure (identity
// mismatch, non-unique decomposition), 64 usage error.

#include "dtpt/json_io.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace {

using namespace dtpt;

Json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    Json j;
    in >> j;
    return j;
}

QuiverKind quiver_kind_parse(const std::string& s) {
    if (s == "conifold") return QuiverKind::Conifold;
    if (s == "framed_conifold") return QuiverKind::FramedConifold;
    if (s == "reduced") return QuiverKind::Reduced;
    if (s == "adhm") return QuiverKind::Adhm;
    if (s == "dtpt") return QuiverKind::Dtpt;
    if (s == "dtpt_loops") return QuiverKind::DtptLoops;
    if (s == "extended_adhm") return QuiverKind::ExtendedAdhm;
    throw std::invalid_argument("unknown quiver kind: " + s);
}

std::optional<PotentialKind> potential_kind_for(QuiverKind k) {
    switch (k) {
        case QuiverKind::Conifold: return PotentialKind::Conifold;
        case QuiverKind::Reduced: return PotentialKind::Reduced;
        case QuiverKind::Dtpt:
        case QuiverKind::DtptLoops: return PotentialKind::Dtpt;
        default: return std::nullopt;
    }
}

ZonotopeKind zonotope_kind_parse(const std::string& s) {
    if (s == "W") return ZonotopeKind::W;
    if (s == "Wslice") return ZonotopeKind::WSlice;
    if (s == "V") return ZonotopeKind::V;
    if (s == "Wa") return ZonotopeKind::Wa;
    if (s == "Va") return ZonotopeKind::Va;
    throw std::invalid_argument("unknown zonotope kind: " + s);
}

void print_series(const IntSeries& s, const std::string& out_mode, const std::string& label) {
    if (out_mode == "table") {
        std::cout << label << "\n";
        for (size_t k = 0; k < s.coeffs.size(); ++k)
            std::cout << "  q^" << k << "\t" << s.coeffs[k].get_str() << "\n";
    } else {
        std::cout << series_to_json(s).dump() << "\n";
    }
}

struct Cli {
    std::string out_mode = "json";

    int run_quiver(const std::string& kind_str, const QuiverParams& qp, bool with_potential) {
        QuiverKind kind = quiver_kind_parse(kind_str);
        Quiver q = build_quiver(kind, qp);
        if (!with_potential) {
            std::cout << quiver_to_json(q).dump(2) << "\n";
            return 0;
        }
        auto pk = potential_kind_for(kind);
        if (!pk) throw std::invalid_argument("no built-in potential for quiver kind " + kind_str);
        Json j;
        j["quiver"] = quiver_to_json(q);
        j["potential"] = potential_to_json(build_potential(*pk, qp));
        std::cout << j.dump(2) << "\n";
        return 0;
    }

    int run_grad(const std::string& rep_path, const std::string& pot_path, bool crit_only) {
        Representation rep = representation_from_json(load_json(rep_path));
        Potential pot = potential_from_json(load_json(pot_path));
        Json j;
        if (!crit_only) {
            auto grad = gradient_eval(rep, pot);
            Json g;
            for (const auto& [id, m] : grad) g[id] = matrix_to_json(m);
            j["gradient"] = g;
            j["trace"] = rat_str(trace_eval(rep, pot));
        }
        j["critical"] = is_critical(rep, pot);
        std::cout << j.dump(2) << "\n";
        return 0;
    }

    int run_stab(const std::string& rep_path, const std::string& side, int falsify, std::uint64_t seed) {
        FramedRep rep = framed_rep_from_json(load_json(rep_path));
        Json j;
        if (side == "dt" || side == "both") j["dt"] = verdict_to_json(is_dt_semistable(rep));
        if (side == "pt" || side == "both") j["pt"] = verdict_to_json(is_pt_semistable(rep));
        if (falsify > 0) {
            Json f;
            if (side == "dt" || side == "both") {
                auto c = one_ps_falsifier(rep, Side::DT, falsify, seed);
                f["dt"] = c ? one_ps_to_json(*c) : Json(nullptr);
            }
            if (side == "pt" || side == "both") {
                auto c = one_ps_falsifier(rep, Side::PT, falsify, seed);
                f["pt"] = c ? one_ps_to_json(*c) : Json(nullptr);
            }
            j["falsifier"] = f;
        }
        std::cout << j.dump(2) << "\n";
        return 0;
    }

    int run_poly_member(const ZonotopeSpec& spec, const std::string& point) {
        Zonotope z = make_zonotope(spec);
        WeightVec p = weight_from_string(point);
        std::cout << certificate_to_json(contains(z, p)).dump(2) << "\n";
        return 0;
    }

    int run_poly_make(const ZonotopeSpec& spec) {
        std::cout << zonotope_to_json(make_zonotope(spec)).dump(2) << "\n";
        return 0;
    }

    int run_poly_window(const std::string& cond, const std::string& chi_str, long d, long w, long r,
                        long a, const std::string& mu_str_in) {
        WeightVec chi = weight_from_string(chi_str);
        bool inside = false;
        if (cond == "M") inside = window_M(chi, d);
        else if (cond == "Mslice") inside = window_M_slice(chi, d, w);
        else if (cond == "MM") inside = window_MM(chi, d, r, mu_value(mu_parse(mu_str_in)));
        else if (cond == "D") inside = window_D(chi, d, a, r, mu_value(mu_parse(mu_str_in)));
        else throw std::invalid_argument("unknown window condition: " + cond);
        Json j;
        j["condition"] = cond;
        j["dominant"] = is_dominant(chi);
        j["inside"] = inside;
        std::cout << j.dump(2) << "\n";
        return 0;
    }

    int run_sod(long d, long r, long a, const std::string& mu_in, const std::string& mode_str) {
        BoundsMode mode;
        if (mode_str == "open") mode = BoundsMode::Open;
        else if (mode_str == "closed") mode = BoundsMode::Closed;
        else throw std::invalid_argument("mode must be open or closed");
        auto summands = enumerate_summands(d, r, a, mu_parse(mu_in), mode);
        if (out_mode == "table") {
            std::cout << "d'\tparts (d,w,v)\n";
            for (const auto& s : summands) {
                std::cout << s.d_prime << "\t";
                for (const auto& p : s.parts) std::cout << "(" << p.d << "," << p.w << "," << p.v << ") ";
                std::cout << "\n";
            }
        } else {
            for (const auto& s : summands) std::cout << summand_to_json(s).dump() << "\n";
        }
        return 0;
    }

    int run_decomp(const std::string& chi_str, long d, long a, long r, const std::string& mu_in) {
        WeightVec chi = weight_from_string(chi_str);
        auto decs = decompose_weight(chi, d, a, r, mu_parse(mu_in));
        for (const auto& dec : decs) std::cout << decomposition_to_json(dec).dump() << "\n";
        if (decs.size() != 1) {
            std::cerr << "uniqueness violated: " << decs.size() << " decompositions\n";
            return 2;
        }
        return 0;
    }

    int run_series_verify(long r, long order) {
        IdentityReport rep = verify_identity(r, order);
        Json j;
        j["r"] = r;
        j["order"] = order;
        j["equal"] = rep.equal;
        if (!rep.equal) j["first_mismatch"] = rep.first_mismatch;
        j["dt"] = series_to_json(rep.dt);
        j["euler_product"] = series_to_json(rep.euler);
        j["macmahon_pow"] = series_to_json(rep.macmahon_pow);
        std::cout << j.dump(2) << "\n";
        return rep.equal ? 0 : 2;
    }
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact toolkit for quiver superpotentials, framed stability, weight windows,\n"
                 "wall-crossing summand enumeration, and partition-series identities"};
    app.require_subcommand(1);

    Cli cli;
    app.add_option("--out", cli.out_mode, "output format: json or table")
        ->check(CLI::IsMember({"json", "table"}));

    // quiver
    std::string q_kind;
    QuiverParams qp;
    bool with_potential = false;
    auto* quiver_cmd = app.add_subcommand("quiver", "build a quiver (optionally with its potential)");
    quiver_cmd->add_option("--kind", q_kind)->required();
    quiver_cmd->add_option("--r", qp.r, "framing rank");
    quiver_cmd->add_option("--a", qp.a, "paired arrow count");
    quiver_cmd->add_option("--N", qp.loops, "extra loops at the framing vertex");
    quiver_cmd->add_option("--m", qp.m, "curve degree");
    quiver_cmd->add_flag("--with-potential", with_potential);

    // grad / crit
    std::string rep_path, pot_path;
    auto* grad_cmd = app.add_subcommand("grad", "gradient of a potential on a representation");
    grad_cmd->add_option("--rep", rep_path)->required();
    grad_cmd->add_option("--pot", pot_path)->required();
    auto* crit_cmd = app.add_subcommand("crit", "criticality test");
    crit_cmd->add_option("--rep", rep_path)->required();
    crit_cmd->add_option("--pot", pot_path)->required();

    // stab
    std::string stab_rep, stab_side = "both";
    int falsify = 0;
    std::uint64_t seed = 0;
    auto* stab_cmd = app.add_subcommand("stab", "framed semistability verdicts");
    stab_cmd->add_option("--rep", stab_rep)->required();
    stab_cmd->add_option("--side", stab_side)->check(CLI::IsMember({"dt", "pt", "both"}));
    stab_cmd->add_option("--falsify", falsify, "one-parameter-subgroup sampling trials");
    stab_cmd->add_option("--seed", seed);

    // poly
    auto* poly_cmd = app.add_subcommand("poly", "weight windows and zonotope membership");
    poly_cmd->require_subcommand(1);
    std::string z_kind, point_str, cond, chi_str, mu_in = "0";
    long pd = 1, pw = 0, pr = 1, pa = 0;
    auto add_zono_opts = [&](CLI::App* c) {
        c->add_option("--kind", z_kind)->required();
        c->add_option("--d", pd)->required();
        c->add_option("--w", pw);
        c->add_option("--r", pr);
        c->add_option("--a", pa);
    };
    auto* member_cmd = poly_cmd->add_subcommand("member", "membership certificate for a point");
    add_zono_opts(member_cmd);
    member_cmd->add_option("--point", point_str)->required();
    auto* make_cmd = poly_cmd->add_subcommand("make", "emit the zonotope");
    add_zono_opts(make_cmd);
    auto* window_cmd = poly_cmd->add_subcommand("window", "window condition for a dominant weight");
    window_cmd->add_option("--cond", cond)->required();
    window_cmd->add_option("--chi", chi_str)->required();
    window_cmd->add_option("--d", pd)->required();
    window_cmd->add_option("--w", pw);
    window_cmd->add_option("--r", pr);
    window_cmd->add_option("--a", pa);
    window_cmd->add_option("--mu", mu_in);

    // sod
    long sd = 0, sr = 1, sa = 0;
    std::string sod_mu = "0", mode_str = "open";
    auto* sod_cmd = app.add_subcommand("sod", "enumerate decomposition summands");
    sod_cmd->add_option("--d", sd)->required();
    sod_cmd->add_option("--r", sr)->required();
    sod_cmd->add_option("--a", sa);
    sod_cmd->add_option("--mu", sod_mu)->required();
    sod_cmd->add_option("--mode", mode_str)->check(CLI::IsMember({"open", "closed"}));

    // decomp
    auto* decomp_cmd = app.add_subcommand("decomp", "unique block decomposition of a dominant weight");
    decomp_cmd->add_option("--chi", chi_str)->required();
    decomp_cmd->add_option("--d", sd)->required();
    decomp_cmd->add_option("--a", sa);
    decomp_cmd->add_option("--r", sr)->required();
    decomp_cmd->add_option("--mu", sod_mu)->required();

    // series
    auto* series_cmd = app.add_subcommand("series", "partition series and the product identity");
    series_cmd->require_subcommand(1);
    long order = 10, ser_r = 1, p2_n = 0;
    auto* mac_cmd = series_cmd->add_subcommand("macmahon");
    mac_cmd->add_option("--D", order)->required();
    auto* dt_cmd = series_cmd->add_subcommand("dt");
    dt_cmd->add_option("--r", ser_r)->required();
    dt_cmd->add_option("--D", order)->required();
    auto* euler_cmd = series_cmd->add_subcommand("euler");
    euler_cmd->add_option("--r", ser_r)->required();
    euler_cmd->add_option("--D", order)->required();
    auto* pow_cmd = series_cmd->add_subcommand("pow");
    pow_cmd->add_option("--r", ser_r)->required();
    pow_cmd->add_option("--D", order)->required();
    auto* p2_cmd = series_cmd->add_subcommand("p2");
    p2_cmd->add_option("--n", p2_n)->required();
    auto* verify_cmd = series_cmd->add_subcommand("verify");
    verify_cmd->add_option("--r", ser_r)->required();
    verify_cmd->add_option("--D", order)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 64;
    }

    try {
        if (*quiver_cmd) return cli.run_quiver(q_kind, qp, with_potential);
        if (*grad_cmd) return cli.run_grad(rep_path, pot_path, false);
        if (*crit_cmd) return cli.run_grad(rep_path, pot_path, true);
        if (*stab_cmd) return cli.run_stab(stab_rep, stab_side, falsify, seed);
        if (*member_cmd)
            return cli.run_poly_member({zonotope_kind_parse(z_kind), pd, pw, pr, pa}, point_str);
        if (*make_cmd) return cli.run_poly_make({zonotope_kind_parse(z_kind), pd, pw, pr, pa});
        if (*window_cmd) return cli.run_poly_window(cond, chi_str, pd, pw, pr, pa, mu_in);
        if (*sod_cmd) return cli.run_sod(sd, sr, sa, sod_mu, mode_str);
        if (*decomp_cmd) return cli.run_decomp(chi_str, sd, sa, sr, sod_mu);
        if (*mac_cmd) {
            print_series(macmahon(order), cli.out_mode, "M(q)");
            return 0;
        }
        if (*dt_cmd) {
            print_series(dt_series(order, ser_r), cli.out_mode, "sum a_d q^d");
            return 0;
        }
        if (*euler_cmd) {
            print_series(euler_product_gamma(ser_r, order), cli.out_mode, "gamma product");
            return 0;
        }
        if (*pow_cmd) {
            print_series(series_pow(macmahon(order), ser_r, order), cli.out_mode, "M(q)^r");
            return 0;
        }
        if (*p2_cmd) {
            std::cout << Json{{"n", p2_n}, {"p2", p2(p2_n).get_str()}}.dump() << "\n";
            return 0;
        }
        if (*verify_cmd) return cli.run_series_verify(ser_r, order);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: malformed input: " << e.what() << "\n";
        return 1;
    }
    return 64;
}
