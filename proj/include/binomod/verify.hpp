#pragma once

#include <cstdint>
#include <vector>

#include "binomod/report.hpp"
#include "binomod/scan.hpp"
#include "binomod/subgroup_analysis.hpp"

namespace binomod {

inline std::vector<std::pair<i64, i64>> prime_powers_up_to(i64 q_max) {
    std::vector<std::pair<i64, i64>> out;  // (p, n)
    for (i64 p = 2; p <= q_max; ++p) {
        if (!is_prime(p)) continue;
        i64 q = p, n = 1;
        while (q <= q_max) {
            out.push_back({p, n});
            if (q > q_max / p) break;
            q *= p;
            ++n;
        }
    }
    return out;
}

/// The triangle-reflection identity over all 0 <= i <= k <= p^s-1.
inline ScanReport scan_symmetry(const PrimeModulus& pm, i64 s) {
    const i64 p = pm.value();
    ScanReport rep{"symmetry", "p=" + std::to_string(p) + " s=" + std::to_string(s)};
    i64 ps = 1;
    for (i64 j = 0; j < s; ++j) ps *= p;
    for (i64 k = 0; k <= ps - 1; ++k)
        for (i64 i = 0; i <= k; ++i) {
            ++rep.instances_checked;
            const auto [lhs, rhs] = symmetry_reflect(k, i, s, pm);
            if (lhs != rhs)
                rep.violations.push_back(
                    {{{"p", p}, {"s", s}, {"k", k}, {"i", i}, {"lhs", lhs}, {"rhs", rhs}}, {}});
        }
    return rep;
}

/// Exhaustive near-field scan over all subgroup pairs H < G of F_q^*:
/// the one_minus and plus_one hypotheses each imply the subfield / full-group
/// conclusions, and the Leep-Shapiro implication holds.
inline ScanReport scan_near_field(i64 q_max) {
    ScanReport rep{"near_field", "q<=" + std::to_string(q_max)};
    for (auto [p, n] : prime_powers_up_to(q_max)) {
        FieldSpec f(p, n);
        const i64 q = f.q();
        for (i64 k = 2; k <= q - 1; ++k) {
            if ((q - 1) % k != 0) continue;
            const auto g = subgroup_of_order(f, k);
            for (i64 h = 1; h < k; ++h) {
                if (k % h != 0) continue;
                const auto sub_h = subgroup_of_order(f, h);
                for (auto sign : {NearFieldSign::one_minus, NearFieldSign::plus_one}) {
                    ++rep.instances_checked;
                    const auto v = near_field_check(f, g, sub_h, sign);
                    if (!v.ok)
                        rep.violations.push_back(
                            {{{"q", q},
                              {"subgroup_order", k},
                              {"h_order", h},
                              {"sign", sign == NearFieldSign::one_minus ? 0 : 1}},
                             {}});
                }
                ++rep.instances_checked;
                if (!leep_shapiro_check(f, g, sub_h).ok)
                    rep.violations.push_back(
                        {{{"q", q}, {"subgroup_order", k}, {"h_order", h}, {"lemma31", 1}}, {}});
            }
        }
    }
    return rep;
}

/// Polynomial-divisibility bridge vs direct periodicity on (0, k].
inline ScanReport scan_bridge(const PrimeModulus& pm, i64 k_max) {
    const i64 p = pm.value();
    ScanReport rep{"bridge", "p=" + std::to_string(p) + " k<=" + std::to_string(k_max)};
    for (i64 k = 1; k <= k_max; ++k) {
        const auto row = residue_row(k, pm, SignConvention::signed_lower);
        const std::span<const int> tail(row.values.data() + 1, static_cast<std::size_t>(k));
        for (i64 h = 1; h <= k; ++h) {
            if (k % h != 0) continue;
            ++rep.instances_checked;
            if (bridge_divisibility(pm, k, h) != is_period(tail, h, 1).holds)
                rep.violations.push_back({{{"p", p}, {"k", k}, {"h", h}}, row.values});
        }
    }
    return rep;
}

/// Fermat-curve battery for every q <= q_max and every n | q-1: the n^2
/// divisibility and intersection relation always; for odd q additionally the
/// d-parity formula, Weil's bound, and the conditional c >= 1/2 and
/// subfield-exclusion bounds. Even-q d counts are recorded, not asserted.
inline ScanReport scan_fermat(i64 q_max) {
    ScanReport rep{"fermat", "q<=" + std::to_string(q_max)};
    for (auto [p, deg] : prime_powers_up_to(q_max)) {
        FieldSpec f(p, deg);
        const i64 q = f.q();
        for (i64 k = 1; k <= q - 1; ++k) {
            if ((q - 1) % k != 0) continue;
            const auto r = bounds_report(f, k);
            const i64 n = r.n;
            auto fail = [&](i64 check) {
                rep.violations.push_back(
                    {{{"q", q}, {"subgroup_order", k}, {"n", n}, {"check", check}}, {}});
            };
            ++rep.instances_checked;
            if ((r.N - r.d) % (n * n) != 0 ||
                r.intersection_size != (r.N - r.d) / (n * n))
                fail(1);
            if (q % 2 == 1) {
                ++rep.instances_checked;
                const i64 want_d = (k % 2 == 0) ? 3 * n : 2 * n;
                if (r.d != want_d) fail(2);
                ++rep.instances_checked;
                if (!r.weil_ok) fail(3);
                if (r.thm34_applicable) {
                    ++rep.instances_checked;
                    if (!r.thm34_ok) fail(4);
                }
                if (r.thm36_applicable) {
                    ++rep.instances_checked;
                    if (!r.thm36_ok) fail(5);
                    ++rep.instances_checked;
                    if (!r.gv_ok) fail(6);
                }
            }
        }
    }
    return rep;
}

/// Empirical check of the refined remark (unproven in the source): for square
/// q = r^2 and G = F_r^*, c = (r-2)/(r-1) exactly and |G| < r(r-1)/(c(r+1)).
inline ScanReport scan_refined_remark() {
    ScanReport rep{"refined_remark", "q in {9,16,25,49,64,81,121,169}"};
    for (i64 r : {3, 4, 5, 7, 8, 9, 11, 13}) {
        i64 p = r, n = 2;
        if (r == 4) p = 2, n = 4;
        if (r == 8) p = 2, n = 6;
        if (r == 9) p = 3, n = 4;
        FieldSpec f(p, n);
        const auto b = bounds_report(f, r - 1);
        ++rep.instances_checked;
        // c = (r-2)/(r-1) means |G ∩ (1-G)| = r-2 for |G| = r-1.
        if (!(b.intersection_size == r - 2 && b.refined_applicable && b.refined_ok))
            rep.violations.push_back({{{"q", r * r}, {"subgroup_order", r - 1}}, {}});
    }
    return rep;
}

/// The full verification battery driven by a RunConfig.
inline VerificationSummary verify_all(const RunConfig& cfg) {
    VerificationSummary s;
    for (i64 pv : cfg.primes) {
        PrimeModulus pm(pv);
        s.reports.push_back(scan_thm1(pm, cfg.k_max));
        s.reports.push_back(scan_prop21(pm, cfg.k_max));
        s.reports.push_back(scan_cor_weaker(pm, cfg.k_max));
        if (pv <= 3) s.reports.push_back(scan_cor_general(pm, std::min<i64>(cfg.k_max, 250), cfg.s_max));
        if (pv != 2) s.reports.push_back(scan_unsigned(pm, cfg.k_max));
        if (pv <= 5) {
            for (i64 s_exp = 1, ps = pv; ps <= cfg.vertical_ps_max; ++s_exp, ps *= pv)
                s.reports.push_back(scan_vertical(pm, s_exp, ps - 6));
            s.reports.push_back(scan_bridge(pm, std::min<i64>(cfg.k_max, 200)));
        }
        for (i64 r = 1, pr = pv; pr <= 50; ++r, pr *= pv)
            s.reports.push_back(remark_patterns(pm, r));
    }
    for (auto [pv, s_exp] : std::vector<std::pair<i64, i64>>{
             {2, 3}, {2, 4}, {3, 3}, {3, 4}, {5, 2}, {5, 3}}) {
        PrimeModulus pm(pv);
        s.reports.push_back(scan_symmetry(pm, s_exp));
    }
    s.reports.push_back(scan_near_field(cfg.q_max));
    s.reports.push_back(scan_fermat(cfg.fermat_q_max));
    s.reports.push_back(scan_refined_remark());
    for (const auto& r : s.reports)
        if (!r.clean()) s.pass = false;
    return s;
}

}  // namespace binomod
