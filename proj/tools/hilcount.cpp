// hilcount: specialization census toolkit for F(T, Y) over Q and Fq(u).
#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "hc/report.hpp"

using namespace hc;
using nlohmann::ordered_json;

namespace {

struct PolyArgs {
    std::string field = "Q";
    std::string poly;
};

void add_poly_flags(CLI::App* app, PolyArgs& a) {
    app->add_option("--field", a.field, "base field: Q or FqU:q=<prime power>");
    app->add_option("--poly", a.poly, "polynomial in T, Y (u allowed over FqU)")->required();
}

// Run fn(dom, F) for the parsed field/polynomial pair; fn must handle both
// element types.
template <class Fn>
void with_bipoly(const PolyArgs& a, Fn&& fn) {
    auto K = BaseField::parse(a.field);
    if (K.is_q())
        fn(K, K.q_dom(), parse_bipoly_q(a.poly));
    else
        fn(K, K.fqu_dom(), parse_bipoly_fqu(a.poly, K.fqu_dom().ctx));
}

void emit(const ordered_json& j, const std::string& out_path) {
    std::string text = j.dump(2) + "\n";
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream os(out_path, std::ios::binary);
    if (!os) throw ValidationError("cannot open output file: " + out_path);
    os << text;
}

template <class k>
std::string factorization_text(const BiFactorization<k>& bf) {
    std::string s;
    if (!is_one(bf.unit)) s = to_text(bf.unit);
    auto app = [&](const std::string& part, int m) {
        s += "(" + part + ")";
        if (m > 1) s += "^" + std::to_string(m);
    };
    for (auto& [f, m] : bf.content) app(to_text(f, "T"), m);
    for (auto& [f, m] : bf.parts) app(to_text(f), m);
    return s.empty() ? "1" : s;
}

void write_report(const CensusReport& rep, const std::string& out_path,
                  const std::string& csv_path) {
    emit(report_to_json(rep), out_path);
    if (!csv_path.empty()) {
        std::ofstream os(csv_path, std::ios::binary);
        if (!os) throw ValidationError("cannot open output file: " + csv_path);
        os << witnesses_to_csv(rep);
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact specialization censuses and effective irreducibility bounds"};
    app.require_subcommand(1);
    long seed = 0;
    app.add_option("--seed", seed, "seed for any randomized option (default 0)");

    PolyArgs parse_a;
    auto* cmd_parse = app.add_subcommand("parse", "parse a polynomial and print its canonical form");
    add_poly_flags(cmd_parse, parse_a);

    PolyArgs height_a;
    auto* cmd_height = app.add_subcommand("height", "projective and affine heights");
    add_poly_flags(cmd_height, height_a);

    PolyArgs factor_a;
    auto* cmd_factor = app.add_subcommand("factor", "factor into irreducibles over K[T, Y]");
    add_poly_flags(cmd_factor, factor_a);

    PolyArgs galois_a;
    std::string galois_t;
    auto* cmd_galois = app.add_subcommand("galois", "Galois group over K(T), or of a specialization");
    add_poly_flags(cmd_galois, galois_a);
    cmd_galois->add_option("--specialize", galois_t, "evaluate at T = t and classify over K");

    auto* cmd_construct = app.add_subcommand("construct", "irreducibility-preserving transforms");
    cmd_construct->require_subcommand(1);
    PolyArgs mon_a;
    auto* cmd_mon = cmd_construct->add_subcommand("monicize", "monic model with the same splitting behavior");
    add_poly_flags(cmd_mon, mon_a);
    PolyArgs shift_a;
    auto* cmd_shift = cmd_construct->add_subcommand("shift", "substitution Y -> T^E + Y with computed exponent");
    add_poly_flags(cmd_shift, shift_a);
    PolyArgs res_a;
    int res_m = 1, res_j = 1;
    auto* cmd_res = cmd_construct->add_subcommand("resolvent", "subset resolvent R_{m,j}");
    add_poly_flags(cmd_res, res_a);
    cmd_res->add_option("--m", res_m, "subset size")->required();
    cmd_res->add_option("--j", res_j, "elementary symmetric index")->required();

    auto add_census_flags = [](CLI::App* c, PolyArgs& a, std::string& box, CensusOptions& opt,
                               bool& serial, std::string& out, std::string& csv) {
        add_poly_flags(c, a);
        c->add_option("--box", box, "box bound: decimal for Q, q^n for FqU")->required();
        c->add_option("--cap", opt.witness_cap, "witness cap (default 10000)");
        c->add_option("--shards", opt.shard_count, "total shard count");
        c->add_option("--shard", opt.shard_index, "shard index to run");
        c->add_flag("--serial", serial, "use the serial reference implementation");
        c->add_option("--out", out, "write the JSON report here (default stdout)");
        c->add_option("--csv", csv, "also write the witness table as CSV");
    };

    auto* cmd_census = app.add_subcommand("census", "enumerate a box of specializations");
    cmd_census->require_subcommand(1);
    struct CensusCmd {
        PolyArgs a;
        std::string box, out, csv, kind;
        CensusOptions opt;
        bool serial = false;
        CLI::App* cmd = nullptr;
    };
    std::vector<CensusCmd> census_cmds(3);
    const char* kinds[3] = {"reducible", "introots", "galois"};
    const char* kind_help[3] = {"count t with F(t, Y) reducible over K",
                                "count t where F(t, Y) has a root in O_K",
                                "count t where the Galois group drops"};
    for (int i = 0; i < 3; ++i) {
        auto& cc = census_cmds[i];
        cc.kind = kinds[i];
        cc.cmd = cmd_census->add_subcommand(kinds[i], kind_help[i]);
        add_census_flags(cc.cmd, cc.a, cc.box, cc.opt, cc.serial, cc.out, cc.csv);
    }

    auto* cmd_bound = app.add_subcommand("bound", "evaluate a theorem's explicit bound kernel");
    std::string b_theorem, b_group, b_field = "Q", b_out;
    KernelParams kp;
    double b_height = 1.0;
    bool b_gamma = false;
    cmd_bound->add_option("--theorem", b_theorem,
                          "hit01 | hilbert1 | hilbert35 | hilbert7 | hit3 | bp")->required();
    cmd_bound->add_option("--field", b_field, "base field (selects the exponent bracket)");
    cmd_bound->add_option("--dY", kp.d_y, "Y-degree");
    cmd_bound->add_option("--dT", kp.d_t, "T-degree");
    cmd_bound->add_option("--d", kp.d, "total degree (bp)");
    cmd_bound->add_option("--H", b_height, "height H (default 1)");
    cmd_bound->add_option("--B", kp.B, "box bound")->required();
    cmd_bound->add_option("--order-G", kp.order_G, "generic group order (hilbert35 / hilbert7)");
    cmd_bound->add_option("--order-H", kp.order_H, "subgroup order (hilbert35 / hilbert7)");
    cmd_bound->add_option("--group", b_group, "catalog group label (hit3)");
    cmd_bound->add_flag("--gamma", b_gamma, "hit3: use the reducibility exponent gamma");
    cmd_bound->add_option("--out", b_out, "write the JSON report here (default stdout)");

    auto* cmd_verify = app.add_subcommand(
        "verify", "run a census and check the empirical count against its kernel");
    struct CensusCmd verify_c;
    cmd_verify->add_option("--kind", verify_c.kind, "reducible | introots | galois")->required();
    add_census_flags(cmd_verify, verify_c.a, verify_c.box, verify_c.opt, verify_c.serial,
                     verify_c.out, verify_c.csv);

    auto* cmd_merge = app.add_subcommand("merge", "combine shard reports deterministically");
    std::vector<std::string> merge_in;
    std::string merge_out;
    cmd_merge->add_option("inputs", merge_in, "shard report JSON files")->required();
    cmd_merge->add_option("--out", merge_out, "write the merged report here (default stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*cmd_parse) {
            with_bipoly(parse_a, [](const BaseField&, const auto&, const auto& F) {
                std::cout << to_text(F) << "\n";
            });
        } else if (*cmd_height) {
            with_bipoly(height_a, [&](const BaseField& K, const auto& dom, const auto& F) {
                auto nd = normalize_bipoly(dom, F);
                ordered_json j;
                j["field"] = K.text();
                j["poly"] = to_text(F);
                j["H_K"] = to_text(nd.h_k.value);
                j["log_H_K"] = nd.h_k.log_e;
                j["H_aff"] = to_text(nd.h_aff.value);
                j["log_H_aff"] = nd.h_aff.log_e;
                emit(j, "");
            });
        } else if (*cmd_factor) {
            with_bipoly(factor_a, [](const BaseField&, const auto&, const auto& F) {
                std::cout << factorization_text(bifactor(F)) << "\n";
            });
        } else if (*cmd_galois) {
            with_bipoly(galois_a, [&](const BaseField& K, const auto& dom, const auto& F) {
                ordered_json j;
                j["field"] = K.text();
                j["poly"] = to_text(F);
                GroupId g;
                if (galois_t.empty()) {
                    g = galois_group_generic(F);
                    auto disc = discriminant_Y(F);
                    using KT = typename std::decay_t<decltype(dom)>::KT;
                    j["evidence"] = ordered_json{
                        {"discriminant", to_text(disc.delta, "T")},
                        {"discriminant_square_in_KT",
                         !disc.inseparable && is_square(KT(disc.delta))}};
                } else {
                    typename std::decay_t<decltype(dom)>::Elem tv;
                    if constexpr (std::decay_t<decltype(dom)>::is_function_field)
                        tv = parse_elem_fqu(galois_t, dom.ctx);
                    else
                        tv = parse_elem_q(galois_t);
                    auto f = F.specialize(tv);
                    g = galois_group_specialized(f);
                    std::string pattern;
                    for (auto& [part, m] : factor_univariate(f).parts)
                        for (int i = 0; i < m; ++i)
                            pattern += (pattern.empty() ? "" : "+") + std::to_string(part.degree());
                    j["evidence"] = ordered_json{{"t", galois_t}, {"degree_pattern", pattern}};
                }
                j["group"] = g.label;
                j["order"] = g.order;
                j["transitive"] = g.transitive;
                emit(j, "");
            });
        } else if (*cmd_mon) {
            with_bipoly(mon_a, [](const BaseField&, const auto&, const auto& F) {
                std::cout << to_text(monicize(F)) << "\n";
            });
        } else if (*cmd_shift) {
            with_bipoly(shift_a, [](const BaseField&, const auto& dom, const auto& F) {
                long E = shift_exponent(dom, F);
                ordered_json j;
                j["exponent"] = E;
                j["poly"] = to_text(shift_transform(F, E));
                emit(j, "");
            });
        } else if (*cmd_res) {
            with_bipoly(res_a, [&](const BaseField&, const auto&, const auto& F) {
                std::cout << to_text(subset_resolvent(F, res_m, res_j)) << "\n";
            });
        } else if (*cmd_bound) {
            kp.char0 = BaseField::parse(b_field).characteristic() == 0;
            kp.log_h = std::log(b_height);
            kp.group_label = b_group;
            kp.use_gamma = b_gamma;
            auto k = kernel(b_theorem, kp);
            ordered_json j;
            j["theorem"] = k.theorem;
            j["log2"] = k.log2;
            auto br = ordered_json::array();
            for (auto& f : k.breakdown) br.push_back({{"factor", f.name}, {"log2", f.log2}});
            j["breakdown"] = std::move(br);
            emit(j, b_out);
        } else if (*cmd_merge) {
            std::vector<CensusReport> shards;
            for (auto& path : merge_in) {
                std::ifstream is(path, std::ios::binary);
                if (!is) throw ValidationError("cannot open shard report: " + path);
                shards.push_back(report_from_json(ordered_json::parse(is)));
            }
            emit(report_to_json(merge_reports(std::move(shards))), merge_out);
        } else {
            // census subcommands and verify share the run path
            CensusCmd* cc = nullptr;
            for (auto& c : census_cmds)
                if (*c.cmd) cc = &c;
            if (*cmd_verify) cc = &verify_c;
            if (!cc) throw ValidationError("no subcommand selected");
            auto K = BaseField::parse(cc->a.field);
            auto box = parse_box(K, cc->box);
            cc->opt.parallel = !cc->serial;
            CensusReport rep;
            if (cc->kind == "reducible")
                rep = census_reducible(K, cc->a.poly, box, cc->opt);
            else if (cc->kind == "introots")
                rep = census_integral_roots(K, cc->a.poly, box, cc->opt);
            else if (cc->kind == "galois")
                rep = census_galois(K, cc->a.poly, box, cc->opt);
            else
                throw ValidationError("unknown census kind: " + cc->kind);
            write_report(rep, cc->out, cc->csv);
            if (*cmd_verify) {
                bool ok = rep.ratio_log2 <= 0.0;  // count <= kernel, constant 1
                std::cerr << "domination " << (ok ? "PASS" : "FAIL") << ": log2(count) - log2(kernel) = "
                          << rep.ratio_log2 << "\n";
                if (!ok) return 2;
            }
        }
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
