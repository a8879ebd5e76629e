// agflag: two-point code flags on Kummer curves y^m = f(x).
//
// Preset selection comes first, then an action:
//   agflag hermitian --q 2 grid --b-max 4 --a-max 12 --format csv
//   agflag norm-trace --q 2 --ell 3 flag --b 3 --verify
//   agflag gen-hermitian --q 2 --ell 3 isodual-list
//   agflag custom --p 2 --k 3 --m 7 --f 0,1,1,0,1 verify

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <iostream>
#include <string>

#include "agflag/codes.hpp"
#include "agflag/flags.hpp"
#include "agflag/presets.hpp"

using namespace agflag;
using nlohmann::json;

namespace {

struct ActionOptions {
    std::string name;  // grid | flag | isodual-list | verify | semigroup
    long b = 0;
    long b_max = 12;
    long a_max = -1;  // -1: derived from the curve
    std::string format = "csv";
    bool run_oracle = false;
    long window = -1;  // -1: 4g + m
};

json curve_info(const EvaluationSupport& support) {
    const CurveParams p = support.params();
    json j;
    j["q"] = support.curve().field().q();
    j["m"] = p.m;
    j["r"] = p.r;
    j["r_tilde"] = p.r_tilde;
    j["genus"] = p.g;
    j["n"] = p.n;
    return j;
}

int cmd_grid(const EvaluationSupport& support, const ActionOptions& opt) {
    const CurveParams p = support.params();
    const long a_max = opt.a_max >= 0 ? opt.a_max : p.n + 2 * p.g - 1;
    const long b_max = opt.b_max;

    struct Record {
        long b, a, l, dim;
        bool in_hb, in_hbstar, in_hpq;
    };
    std::vector<Record> records;
    for (long b = 0; b <= b_max; ++b)
        for (long a = 0; a <= a_max; ++a)
            records.push_back({b, a, ell(p, a, b), code_dim(p, a, b),
                               ell(p, a, b) != ell(p, a - 1, b), hb_star_closed_contains(p, a, b),
                               semigroup_membership(p, a, b)});

    if (opt.format == "csv") {
        std::string out = "b,a,ell,dim,in_hb,in_hbstar,in_hpq\n";
        for (const auto& rec : records) {
            out += std::to_string(rec.b) + ',' + std::to_string(rec.a) + ',' +
                   std::to_string(rec.l) + ',' + std::to_string(rec.dim) + ',';
            out += rec.in_hb ? '1' : '0';
            out += ',';
            out += rec.in_hbstar ? '1' : '0';
            out += ',';
            out += rec.in_hpq ? '1' : '0';
            out += '\n';
        }
        out += "# per-b summary: b,max_hb_star,lower_bound,upper_bound,isodual\n";
        for (long b = 0; b <= b_max; ++b) {
            const bool in_range = p.n >= 2 * p.g + 2 * b + 2;
            const bool isodual = in_range && isodual_kummer(p.m, b);
            out += "#" + std::to_string(b) + ',' + std::to_string(max_hb_star(p, b)) + ',' +
                   std::to_string(p.n - b) + ',' + std::to_string(p.n + 2 * p.g - 1 - b) + ',' +
                   (isodual ? '1' : '0') + '\n';
        }
        std::fputs(out.c_str(), stdout);
    } else {
        json j;
        j["curve"] = curve_info(support);
        j["records"] = json::array();
        for (const auto& rec : records)
            j["records"].push_back({{"b", rec.b},
                                    {"a", rec.a},
                                    {"ell", rec.l},
                                    {"dim", rec.dim},
                                    {"in_hb", rec.in_hb},
                                    {"in_hbstar", rec.in_hbstar},
                                    {"in_hpq", rec.in_hpq}});
        j["per_b"] = json::array();
        for (long b = 0; b <= b_max; ++b) {
            const bool in_range = p.n >= 2 * p.g + 2 * b + 2;
            j["per_b"].push_back({{"b", b},
                                  {"max_hb_star", max_hb_star(p, b)},
                                  {"lower_bound", p.n - b},
                                  {"upper_bound", p.n + 2 * p.g - 1 - b},
                                  {"isodual", in_range && isodual_kummer(p.m, b)}});
        }
        std::cout << j.dump(2) << '\n';
    }
    return 0;
}

int cmd_flag(const EvaluationSupport& support, const ActionOptions& opt) {
    const FlagReport rep = verify_flag(support, opt.b, opt.run_oracle);
    std::cout << to_json(rep).dump(2) << '\n';
    return 0;
}

int cmd_isodual_list(const EvaluationSupport& support) {
    std::cout << json(isodual_b_list(support.params())).dump() << '\n';
    return 0;
}

int cmd_semigroup(const EvaluationSupport& support, const ActionOptions& opt) {
    const CurveParams p = support.params();
    const long window = opt.window >= 0 ? opt.window : 4 * p.g + p.m;
    json j;
    j["curve"] = curve_info(support);
    j["window"] = window;
    j["hp_gaps"] = hp_gaps(p);
    j["hq_gaps"] = hq_gaps(p);
    j["gamma"] = json::array();
    for (const auto& [beta, nb] : gamma_set(p)) j["gamma"].push_back({beta, nb});
    j["hpq_grid"] = json::array();
    for (long b = 0; b <= window; ++b) {
        json row = json::array();
        for (long a = 0; a <= window; ++a) row.push_back(semigroup_membership(p, a, b) ? 1 : 0);
        j["hpq_grid"].push_back(row);
    }
    std::cout << j.dump(2) << '\n';
    return 0;
}

// Cross-check battery: closed forms against the ell route against the rank
// oracle, plus the structural properties. Exit 0 iff everything holds.
int cmd_verify(const EvaluationSupport& support, const ActionOptions& opt) {
    const CurveParams p = support.params();
    const long b_max = std::min<long>(opt.b_max, 12);
    long failures = 0;

    auto report = [&](const std::string& name, long checked, long failed) {
        failures += failed;
        std::printf("%s %-28s %ld checks\n", failed == 0 ? "ok  " : "FAIL", name.c_str(), checked);
    };

    {
        long checked = 0, failed = 0;
        for (long b = 0; b <= b_max; ++b) {
            const auto closed = hb_star_closed(p, b).members;
            const auto via_ell = hb_star_via_ell(p, b).members;
            const auto via_rank = hb_star_via_rank(support, b);
            ++checked;
            if (closed != via_ell || via_ell != via_rank) ++failed;
        }
        report("closed = ell = rank", checked, failed);
    }
    {
        long checked = 0, failed = 0;
        for (long b = 0; b <= 3 * p.m; ++b) {
            const auto via_ell = hb_star_via_ell(p, b).members;
            ++checked;
            if (b > p.n + 2 * p.g - 1) {
                if (!via_ell.empty()) ++failed;
                continue;
            }
            if (via_ell.empty() || max_hb_star(p, b) != via_ell.back() ||
                via_ell.back() < p.n - b || via_ell.back() > p.n + 2 * p.g - 1 - b)
                ++failed;
        }
        report("max formula and bounds", checked, failed);
    }
    {
        long checked = 0, failed = 0;
        for (long a = 0; a <= 4 * p.g; ++a)
            for (long b = 0; b <= 4 * p.g; ++b) {
                ++checked;
                if (lub_membership(p, a, b) != semigroup_membership(p, a, b)) ++failed;
            }
        if (long(gamma_set(p).size()) != p.g) ++failed;
        if (long(hp_gaps(p).size()) != p.g) ++failed;
        report("lub closure and gap counts", checked + 2, failed);
    }
    {
        long checked = 0, failed = 0;
        for (long b = 0; b <= 2 * p.m; ++b) {
            const JumpSet star = hb_star_via_ell(p, b);
            const JumpSet hb = h_b(p, b, p.n + 2 * p.g);
            for (long a : star.members) {
                ++checked;
                if (!hb.contains(a)) ++failed;
            }
            for (long a = 0; a < p.n - b; ++a) {
                ++checked;
                if (star.contains(a) != hb.contains(a)) ++failed;
            }
            for (long a = std::max<long>(0, 2 * p.g - b); a <= p.n + 2 * p.g; ++a) {
                ++checked;
                if (!hb.contains(a)) ++failed;
            }
            const long theta = b / p.m, rho = b % p.m;
            const JumpSet hrho = hb_star_via_ell(p, rho);
            for (long a = 0; a <= p.n + 2 * p.g - 1 - b; ++a) {
                ++checked;
                if (star.contains(a) != hrho.contains(a + theta * p.m)) ++failed;
            }
        }
        report("jump-set lemmas", checked, failed);
    }
    {
        long checked = 0, failed = 0;
        const long a_max = opt.a_max >= 0 ? opt.a_max : p.n + 2 * p.g - 1;
        for (long b = 0; b <= std::min<long>(b_max, 8); b += 2)
            for (long a = 0; a <= a_max; a += std::max<long>(1, a_max / 16)) {
                ++checked;
                if (build_code(support, a, b).dim != code_dim(p, a, b)) ++failed;
            }
        report("generator rank = dimension", checked, failed);
    }
    {
        long checked = 0, failed = 0;
        const long flag_b_max = (p.n - 2 * p.g - 2) / 2;
        for (long b = 0; b <= flag_b_max; ++b) {
            ++checked;
            if (isodual_fast(p, b) != isodual_kummer(p.m, b)) ++failed;
        }
        report("fast criteria agree", checked, failed);
    }

    std::printf("%s\n", failures == 0 ? "all checks passed" : "CHECKS FAILED");
    return failures == 0 ? 0 : 1;
}

void add_actions(CLI::App* preset, ActionOptions& opt) {
    auto* grid = preset->add_subcommand("grid", "emit the (a, b) dimension grid");
    grid->add_option("--b-max", opt.b_max, "largest b (default 12)");
    grid->add_option("--a-max", opt.a_max, "largest a (default n+2g-1)");
    grid->add_option("--format", opt.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));

    auto* flag = preset->add_subcommand("flag", "report the flag of codes at one b");
    flag->add_option("--b", opt.b, "the fixed b of the flag")->required();
    flag->add_flag("--verify", opt.run_oracle, "run the linear-algebra oracle");

    auto* list = preset->add_subcommand("isodual-list", "all b with an isometry-dual flag");

    auto* verify = preset->add_subcommand("verify", "run the full cross-check battery");
    verify->add_option("--b-max", opt.b_max, "largest b for the rank oracle (default 12)");
    verify->add_option("--a-max", opt.a_max, "largest a for sampled rank checks");

    auto* semi = preset->add_subcommand("semigroup", "gap sets, gamma, and the H(P,Q) grid");
    semi->add_option("--window", opt.window, "grid window (default 4g+m)");

    preset->require_subcommand(1);
    for (auto* sub : {grid, flag, list, verify, semi})
        sub->callback([sub, &opt] { opt.name = sub->get_name(); });
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"two-point code flags on Kummer curves"};
    app.require_subcommand(1);

    long q = 0, l = 0, custom_p = 0, custom_k = 0, custom_m = 0;
    std::vector<long> custom_f;
    ActionOptions opt;

    auto* hermitian = app.add_subcommand("hermitian", "y^(q+1) = x^q + x over GF(q^2)");
    hermitian->add_option("--q", q, "prime power q")->required();
    add_actions(hermitian, opt);

    auto* norm_trace = app.add_subcommand("norm-trace", "norm-trace curve over GF(q^l)");
    norm_trace->add_option("--q", q, "prime power q")->required();
    norm_trace->add_option("--ell", l, "extension parameter l >= 2")->required();
    add_actions(norm_trace, opt);

    auto* gen_hermitian =
        app.add_subcommand("gen-hermitian", "y^(q^l+1) = x^q + x over GF(q^(2l)), l odd");
    gen_hermitian->add_option("--q", q, "prime power q")->required();
    gen_hermitian->add_option("--ell", l, "odd extension parameter l")->required();
    add_actions(gen_hermitian, opt);

    auto* custom = app.add_subcommand("custom", "y^m = f(x) from raw data");
    custom->add_option("--p", custom_p, "prime characteristic")->required();
    custom->add_option("--k", custom_k, "extension degree")->required();
    custom->add_option("--m", custom_m, "Kummer degree m")->required();
    custom
        ->add_option("--f", custom_f, "coefficients of f as element encodings, constant term first")
        ->required()
        ->delimiter(',');
    add_actions(custom, opt);

    CLI11_PARSE(app, argc, argv);

    try {
        KummerCurve curve = [&] {
            if (hermitian->parsed()) return make_hermitian_curve(q);
            if (norm_trace->parsed()) return make_norm_trace_curve(q, l);
            if (gen_hermitian->parsed()) return make_gen_hermitian_curve(q, l);
            return make_custom_curve(custom_p, custom_k, custom_m, custom_f);
        }();
        const EvaluationSupport support = EvaluationSupport::standard(curve, 1);

        if (opt.name == "grid") return cmd_grid(support, opt);
        if (opt.name == "flag") return cmd_flag(support, opt);
        if (opt.name == "isodual-list") return cmd_isodual_list(support);
        if (opt.name == "verify") return cmd_verify(support, opt);
        if (opt.name == "semigroup") return cmd_semigroup(support, opt);
        std::cerr << "error: no action selected\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
