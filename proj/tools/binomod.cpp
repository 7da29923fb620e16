#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "binomod/binomod.hpp"

namespace {

using binomod::i64;

binomod::SignConvention parse_sign(const std::string& s) {
    if (s == "unsigned") return binomod::SignConvention::unsigned_row;
    if (s == "lower") return binomod::SignConvention::signed_lower;
    if (s == "upper") return binomod::SignConvention::signed_upper;
    throw CLI::ValidationError("--sign must be one of unsigned, lower, upper");
}

std::string join(const std::vector<int>& v) {
    std::ostringstream out;
    for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i];
    return out.str();
}

/// Relative output paths are resolved against BINOMOD_OUT_DIR when set.
std::string resolve_out(const std::string& path) {
    const char* dir = std::getenv("BINOMOD_OUT_DIR");
    if (dir == nullptr || path.empty() || path.front() == '/') return path;
    return std::string(dir) + "/" + path;
}

void write_output(const std::string& path, const std::string& content) {
    if (path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream out(resolve_out(path), std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output path: " + path);
    out << content;
}

int finish_summary(const binomod::VerificationSummary& summary, const binomod::RunConfig& cfg,
                   const std::string& out_path) {
    write_output(out_path, binomod::emit_report(summary, cfg));
    return summary.pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"binomial coefficients mod p: Lucas kernel, range-restricted "
                 "periodicity scans, finite-field subgroup analysis"};
    app.require_subcommand(1);
    app.set_config("--config");

    i64 p = 3, k = 0, i = 0, deg = 1, order = 1, g_order = 1, h_order = 1, n = 1;
    i64 k_max = 300, s_max = 2, q_max = 256, h_max = 0, scale = 1;
    i64 fermat_q_max = 343, vertical_ps_max = 625;
    std::string sign = "unsigned", theorem, out_path, format = "json";
    std::vector<i64> primes{2, 3, 5, 7};
    bool plus_one = false, inject_violation = false;

    auto* c_binom = app.add_subcommand("binom", "binom(k,i) mod p");
    c_binom->add_option("--k", k)->required();
    c_binom->add_option("--i", i)->required();
    c_binom->add_option("--p", p)->required();

    auto* c_row = app.add_subcommand("row", "row k of the triangle mod p");
    c_row->add_option("--k", k)->required();
    c_row->add_option("--p", p)->required();
    c_row->add_option("--sign", sign);

    auto* c_col = app.add_subcommand("column", "column i of the triangle mod p");
    c_col->add_option("--i", i)->required();
    c_col->add_option("--p", p)->required();
    c_col->add_option("--k-max", k_max)->required();

    auto* c_periods = app.add_subcommand("periods", "non-vacuous periods of a row");
    c_periods->add_option("--k", k)->required();
    c_periods->add_option("--p", p)->required();
    c_periods->add_option("--sign", sign);
    c_periods->add_option("--h-max", h_max);

    auto* c_classify = app.add_subcommand("classify", "factor k+1 and report minimal periods");
    c_classify->add_option("--k", k)->required();
    c_classify->add_option("--p", p)->required();

    auto* c_scan = app.add_subcommand("scan", "run one theorem scan");
    c_scan->add_option("--theorem", theorem)
        ->required()
        ->check(CLI::IsMember({"thm1", "prop21", "cor22", "cor24", "thm41", "thm46", "remarks"}));
    c_scan->add_option("--p", p)->required();
    c_scan->add_option("--k-max", k_max);
    c_scan->add_option("--s-max", s_max);
    c_scan->add_option("--format", format);
    c_scan->add_option("--out", out_path);
    c_scan->add_flag("--inject-violation", inject_violation)->group("");

    auto* c_field = app.add_subcommand("field", "construct F_{p^deg}");
    c_field->add_option("--p", p)->required();
    c_field->add_option("--deg", deg);

    auto* c_sub = app.add_subcommand("subgroup", "multiplicative subgroup of given order");
    c_sub->add_option("--p", p)->required();
    c_sub->add_option("--deg", deg);
    c_sub->add_option("--order", order)->required();

    auto* c_fermat = app.add_subcommand("fermat", "Fermat curve point count");
    c_fermat->add_option("--p", p)->required();
    c_fermat->add_option("--deg", deg);
    c_fermat->add_option("--n", n)->required();

    auto* c_bounds = app.add_subcommand("bounds", "bound checks for a subgroup");
    c_bounds->add_option("--p", p)->required();
    c_bounds->add_option("--deg", deg);
    c_bounds->add_option("--order", order)->required();

    auto* c_near = app.add_subcommand("near-field", "near-field condition for H < G");
    c_near->add_option("--p", p)->required();
    c_near->add_option("--deg", deg);
    c_near->add_option("--g-order", g_order)->required();
    c_near->add_option("--h-order", h_order)->required();
    c_near->add_flag("--plus-one", plus_one);

    auto* c_verify = app.add_subcommand("verify-all", "run the full verification battery");
    c_verify->add_option("--k-max", k_max);
    c_verify->add_option("--q-max", q_max);
    c_verify->add_option("--s-max", s_max);
    c_verify->add_option("--fermat-q-max", fermat_q_max);
    c_verify->add_option("--vertical-ps-max", vertical_ps_max);
    c_verify->add_option("--primes", primes);
    c_verify->add_option("--format", format);
    c_verify->add_option("--out", out_path);
    c_verify->add_flag("--inject-violation", inject_violation)->group("");

    auto* c_render = app.add_subcommand("render", "emit a P6 pixmap of the triangle mod p");
    c_render->add_option("--p", p)->required();
    c_render->add_option("--k-max", k_max)->required();
    c_render->add_option("--sign", sign);
    c_render->add_option("--scale", scale);
    c_render->add_option("--out", out_path)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    try {
        if (*c_binom) {
            std::cout << binomod::binom_mod(k, i, binomod::PrimeModulus(p)) << "\n";
        } else if (*c_row) {
            const auto row = binomod::residue_row(k, binomod::PrimeModulus(p), parse_sign(sign));
            std::cout << join(row.values) << "\n";
        } else if (*c_col) {
            binomod::PrimeModulus pm(p);
            std::vector<int> col;
            for (i64 kk = 0; kk <= k_max; ++kk)
                col.push_back(static_cast<int>(binomod::binom_mod(kk, i, pm)));
            std::cout << join(col) << "\n";
        } else if (*c_periods) {
            const auto row = binomod::residue_row(k, binomod::PrimeModulus(p), parse_sign(sign));
            if (h_max == 0) h_max = k;
            bool first = true;
            for (i64 h : binomod::period_set(row.values, h_max)) {
                std::cout << (first ? "" : ",") << h;
                first = false;
            }
            std::cout << "\n";
        } else if (*c_classify) {
            binomod::PrimeModulus pm(p);
            const i64 r = binomod::p_adic_valuation(k + 1, p);
            const i64 t = (k + 1) / binomod::ipow(p, r);
            std::cout << "k+1 = " << (k + 1) << " = " << p << "^" << r << " * " << t << "\n";
            for (auto [name, conv] :
                 {std::pair{"signed", binomod::SignConvention::signed_lower},
                  std::pair{"unsigned", binomod::SignConvention::unsigned_row}}) {
                const auto row = binomod::residue_row(k, pm, conv);
                const auto mp = binomod::minimal_period(row.values);
                std::cout << name << " minimal period: "
                          << (mp ? std::to_string(*mp) : std::string("none")) << "\n";
            }
        } else if (*c_scan) {
            binomod::PrimeModulus pm(p);
            binomod::RunConfig cfg;
            cfg.primes = {p};
            cfg.k_max = k_max;
            cfg.s_max = s_max;
            cfg.output_format = format;
            binomod::VerificationSummary summary;
            if (theorem == "thm1") summary.reports.push_back(binomod::scan_thm1(pm, k_max));
            if (theorem == "prop21") summary.reports.push_back(binomod::scan_prop21(pm, k_max));
            if (theorem == "cor22") summary.reports.push_back(binomod::scan_cor_weaker(pm, k_max));
            if (theorem == "cor24")
                summary.reports.push_back(binomod::scan_cor_general(pm, k_max, s_max));
            if (theorem == "thm41") summary.reports.push_back(binomod::scan_unsigned(pm, k_max));
            if (theorem == "thm46")
                for (i64 s = 1, ps = p; ps <= 625; ++s, ps *= p)
                    summary.reports.push_back(binomod::scan_vertical(pm, s, ps - 6));
            if (theorem == "remarks")
                for (i64 r = 1, pr = p; pr <= 50; ++r, pr *= p)
                    summary.reports.push_back(binomod::remark_patterns(pm, r));
            if (inject_violation && !summary.reports.empty())
                summary.reports.front().violations.push_back(
                    {{{"p", p}, {"synthetic", 1}}, {}});
            for (const auto& r : summary.reports)
                if (!r.clean()) summary.pass = false;
            return finish_summary(summary, cfg, out_path);
        } else if (*c_field) {
            binomod::FieldSpec f(p, deg);
            std::cout << "q = " << f.q() << "\nmodulus =";
            for (std::size_t j = 0; j < f.modulus().size(); ++j)
                std::cout << ' ' << f.modulus()[j];
            std::cout << "\ngenerator = " << f.generator() << "\n";
        } else if (*c_sub) {
            binomod::FieldSpec f(p, deg);
            const auto g = binomod::subgroup_of_order(f, order);
            bool first = true;
            for (i64 x : g.elements) {
                std::cout << (first ? "" : ",") << x;
                first = false;
            }
            std::cout << "\n";
        } else if (*c_fermat) {
            binomod::FieldSpec f(p, deg);
            const auto fc = binomod::fermat_count(f, n);
            std::cout << "q=" << fc.q << " n=" << fc.n << " N=" << fc.N << " d=" << fc.d << "\n";
        } else if (*c_bounds) {
            binomod::FieldSpec f(p, deg);
            const auto b = binomod::bounds_report(f, order);
            nlohmann::json j = {{"q", b.q},
                                {"subgroup_order", b.k},
                                {"n", b.n},
                                {"N", b.N},
                                {"d", b.d},
                                {"intersection_size", b.intersection_size},
                                {"full_group", b.full_group},
                                {"subfield_closed", b.subfield_closed},
                                {"weil_ok", b.weil_ok},
                                {"weil_slack_sq", b.weil_slack_sq},
                                {"thm34_applicable", b.thm34_applicable},
                                {"thm34_ok", b.thm34_ok},
                                {"gv_applicable", b.gv_applicable},
                                {"gv_ok", b.gv_ok},
                                {"thm36_applicable", b.thm36_applicable},
                                {"thm36_ok", b.thm36_ok},
                                {"refined_applicable", b.refined_applicable},
                                {"refined_ok", b.refined_ok},
                                {"refined_proven", b.refined_proven}};
            std::cout << j.dump(2) << "\n";
        } else if (*c_near) {
            binomod::FieldSpec f(p, deg);
            const auto g = binomod::subgroup_of_order(f, g_order);
            const auto h = binomod::subgroup_of_order(f, h_order);
            const auto v = binomod::near_field_check(
                f, g, h,
                plus_one ? binomod::NearFieldSign::plus_one : binomod::NearFieldSign::one_minus);
            nlohmann::json j = {{"hypothesis_holds", v.hypothesis_holds},
                                {"subfield_closed", v.subfield_closed},
                                {"generates", v.generates},
                                {"full_group", v.full_group},
                                {"ok", v.ok}};
            if (v.failing_alpha) j["failing_alpha"] = *v.failing_alpha;
            std::cout << j.dump(2) << "\n";
        } else if (*c_verify) {
            binomod::RunConfig cfg;
            cfg.primes = primes;
            cfg.k_max = k_max;
            cfg.q_max = q_max;
            cfg.s_max = s_max;
            cfg.fermat_q_max = fermat_q_max;
            cfg.vertical_ps_max = vertical_ps_max;
            cfg.output_format = format;
            auto summary = binomod::verify_all(cfg);
            if (inject_violation && !summary.reports.empty()) {
                summary.reports.front().violations.push_back({{{"synthetic", 1}}, {}});
                summary.pass = false;
            }
            return finish_summary(summary, cfg, out_path);
        } else if (*c_render) {
            std::ostringstream buf;
            binomod::render_triangle(buf, binomod::PrimeModulus(p), k_max, parse_sign(sign),
                                     scale);
            write_output(out_path, buf.str());
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
