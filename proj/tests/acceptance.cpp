// Acceptance battery: one pass/fail line per criterion; exit 0 iff all pass.
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "binomod/binomod.hpp"
#include "oracle.hpp"

using namespace binomod;

namespace {

int failures = 0;

void report(int criterion, bool ok, const std::string& what) {
    std::printf("criterion-%02d %s: %s\n", criterion, ok ? "PASS" : "FAIL", what.c_str());
    if (!ok) ++failures;
}

bool clean(const ScanReport& r) {
    if (!r.violations.empty())
        std::fprintf(stderr, "  violation in %s (%s)\n", r.theorem_id.c_str(),
                     r.parameter_space.c_str());
    return r.violations.empty();
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace

int main() {
    // 1. Lucas kernel vs the exact big-integer oracle.
    {
        bool ok = true;
        for (i64 k = 0; k <= 200 && ok; ++k) {
            std::vector<oracle::cpp_int> row(static_cast<std::size_t>(k + 1));
            row[0] = 1;
            for (i64 i = 0; i < k; ++i)
                row[static_cast<std::size_t>(i + 1)] =
                    row[static_cast<std::size_t>(i)] * (k - i) / (i + 1);
            for (i64 pv : {2, 3, 5, 7, 11}) {
                PrimeModulus pm(pv);
                for (i64 i = 0; i <= k; ++i)
                    if (binom_mod(k, i, pm) !=
                        static_cast<i64>(row[static_cast<std::size_t>(i)] % pv)) {
                        ok = false;
                        break;
                    }
            }
        }
        report(1, ok, "binom_mod equals exact binomials mod p for k <= 200, p in {2,3,5,7,11}");
    }

    // 2-3. Main theorem and proposition scans.
    {
        bool ok2 = true, ok3 = true;
        for (i64 pv : {2, 3, 5, 7}) {
            PrimeModulus pm(pv);
            ok2 = clean(scan_thm1(pm, 300)) && ok2;
            ok3 = clean(scan_prop21(pm, 300)) && ok3;
        }
        report(2, ok2, "signed periodic rows force k+1 = p^r (p in {2,3,5,7}, k <= 300)");
        report(3, ok3, "no admissible period when k+1 = p^r t, t > 1");
    }

    // 4. Sharpness block patterns and period sets.
    {
        bool ok = true;
        for (i64 pv : {2, 3, 5, 7}) {
            PrimeModulus pm(pv);
            for (i64 r = 1, pr = pv; pr <= 50; ++r, pr *= pv)
                ok = clean(remark_patterns(pm, r)) && ok;
        }
        report(4, ok, "sharpness patterns for k = 3p^r-1 / 5*3^r-1 and the 2p^r-1, 4*3^r-1 rows");
    }

    // 5. Corollary with h = h' p^s.
    {
        bool ok = true;
        for (i64 pv : {2, 3}) ok = clean(scan_cor_general(PrimeModulus(pv), 250, 2)) && ok;
        report(5, ok, "periodic instances with p^s | h land in p^t - p^s <= k < p^t");
    }

    // 6. Unsigned scans, including the sporadic (3,7,7).
    {
        bool ok = true;
        for (i64 pv : {3, 5, 7}) ok = clean(scan_unsigned(PrimeModulus(pv), 300)) && ok;
        PrimeModulus p3(3);
        const auto row7 = residue_row(7, p3, SignConvention::unsigned_row).values;
        ok = ok && is_period(row7, 7).holds && thm1_hypotheses(p3, 7, 7) &&
             !(8 % 2 == 0 && is_power_of(3, 4)) && !(8 % 4 == 0 && is_power_of(3, 2));
        report(6, ok, "unsigned classification (2p^r / 4*3^r / sporadic (3,7,7)) and odd-period sets");
    }

    // 7. Vertical periodicity.
    {
        bool ok = true;
        for (i64 pv : {2, 3, 5}) {
            PrimeModulus pm(pv);
            for (i64 s = 1, ps = pv; ps <= 625; ++s, ps *= pv)
                ok = clean(scan_vertical(pm, s, ps - 6)) && ok;
        }
        report(7, ok, "periodic columns force p^s-i = p^m (p in {2,3,5}, p^s <= 625)");
    }

    // 8. Triangle reflection identity.
    {
        bool ok = true;
        for (auto [pv, s] : std::vector<std::pair<i64, i64>>{
                 {2, 3}, {2, 4}, {3, 3}, {3, 4}, {5, 2}, {5, 3}})
            ok = clean(scan_symmetry(PrimeModulus(pv), s)) && ok;
        report(8, ok, "reflection identity exact for p^s in {8,16,27,81,25,125}");
    }

    // 9. Near-field exhaustive scan.
    report(9, clean(scan_near_field(256)),
           "near-field hypotheses imply subfield closure / full group for q <= 256");

    // 10. Polynomial bridge vs periodicity.
    {
        bool ok = true;
        for (i64 pv : {2, 3, 5}) ok = clean(scan_bridge(PrimeModulus(pv), 200)) && ok;
        report(10, ok, "divisibility bridge matches periodicity on (0,k] for h | k <= 200");
    }

    // 11. Fermat battery with spot values.
    {
        bool ok = clean(scan_fermat(343));
        FieldSpec f7(7, 1);
        const auto a = fermat_count(f7, 2);
        const auto b = fermat_count(f7, 3);
        ok = ok && a.N == 8 && a.d == 4 && b.N == 9 && b.d == 9;
        report(11, ok, "Fermat counts, intersection relation, Weil and subgroup bounds for q <= 343");
    }

    // 12. Refined remark, empirical.
    report(12, clean(scan_refined_remark()),
           "c = (r-2)/(r-1) and the refined bound for square q (unproven in source)");

    // 13. Byte-identical verify-all output.
    {
        const std::string args =
            " verify-all --k-max 120 --q-max 64 --fermat-q-max 64 --vertical-ps-max 125";
        const std::string out1 = "/tmp/binomod_accept_1.json";
        const std::string out2 = "/tmp/binomod_accept_2.json";
        const int rc1 = std::system((std::string(BINOMOD_BIN) + args + " --out " + out1).c_str());
        const int rc2 = std::system((std::string(BINOMOD_BIN) + args + " --out " + out2).c_str());
        const std::string a = slurp(out1), b = slurp(out2);
        const bool ok = rc1 == 0 && rc2 == 0 && !a.empty() && a == b;
        std::remove(out1.c_str());
        std::remove(out2.c_str());
        report(13, ok, "verify-all twice with one config yields byte-identical JSON");
    }

    if (failures == 0) std::printf("all criteria passed\n");
    return failures == 0 ? 0 : 1;
}
