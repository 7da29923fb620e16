#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "binomod/binom.hpp"
#include "binomod/period.hpp"

namespace binomod {

struct Violation {
    std::map<std::string, i64> params;
    std::vector<int> evidence;  // the row or column that witnessed the failure

    friend bool operator==(const Violation&, const Violation&) = default;
};

struct ScanReport {
    std::string theorem_id;
    std::string parameter_space;
    std::uint64_t instances_checked = 0;
    std::vector<Violation> violations;

    bool clean() const { return violations.empty(); }
    friend bool operator==(const ScanReport&, const ScanReport&) = default;
};

inline bool is_power_of(i64 base, i64 m) {
    if (m < 1) return false;
    while (m % base == 0) m /= base;
    return m == 1;
}

inline i64 p_adic_valuation(i64 m, i64 p) {
    i64 r = 0;
    while (m % p == 0) {
        m /= p;
        ++r;
    }
    return r;
}

inline i64 ipow(i64 base, i64 e) {
    i64 r = 1;
    while (e-- > 0) r *= base;
    return r;
}

/// Hypotheses of the main periodicity theorem: p does not divide h, k >= 5,
/// and 3h < 2k+5 (or 5h < 4k+9 when p = 3).
inline bool thm1_hypotheses(const PrimeModulus& pm, i64 k, i64 h) {
    const i64 p = pm.value();
    if (h < 1 || k < 1) throw std::invalid_argument("thm1_hypotheses: need k,h >= 1");
    if (h % p == 0 || k < 5) return false;
    return 3 * h < 2 * k + 5 || (p == 3 && 5 * h < 4 * k + 9);
}

/// Main theorem: a signed row periodic under the hypotheses forces k+1 = p^r.
inline ScanReport scan_thm1(const PrimeModulus& pm, i64 k_max) {
    const i64 p = pm.value();
    ScanReport rep{"thm1", "p=" + std::to_string(p) + " k<=" + std::to_string(k_max)};
    for (i64 k = 5; k <= k_max; ++k) {
        const auto row = residue_row(k, pm, SignConvention::signed_lower);
        for (i64 h = 1; h <= k; ++h) {
            if (!thm1_hypotheses(pm, k, h)) continue;
            ++rep.instances_checked;
            if (is_period(row.values, h).holds && !is_power_of(p, k + 1))
                rep.violations.push_back({{{"p", p}, {"k", k}, {"h", h}}, row.values});
        }
    }
    return rep;
}

/// Proposition: k+1 = p^r * t with t > 1 admits no period h <= k - p^r prime to p.
inline ScanReport scan_prop21(const PrimeModulus& pm, i64 k_max) {
    const i64 p = pm.value();
    ScanReport rep{"prop21", "p=" + std::to_string(p) + " k<=" + std::to_string(k_max)};
    for (i64 k = 1; k <= k_max; ++k) {
        const i64 r = p_adic_valuation(k + 1, p);
        const i64 pr = ipow(p, r);
        if ((k + 1) / pr == 1) continue;  // k+1 a power of p: out of scope here
        const auto row = residue_row(k, pm, SignConvention::signed_lower);
        for (i64 h = 1; h <= k - pr; ++h) {
            if (h % p == 0) continue;
            ++rep.instances_checked;
            if (is_period(row.values, h).holds)
                rep.violations.push_back({{{"p", p}, {"k", k}, {"h", h}, {"r", r}}, row.values});
        }
    }
    return rep;
}

/// Weaker corollary: p does not divide h and 2h <= k still force k+1 = p^r.
inline ScanReport scan_cor_weaker(const PrimeModulus& pm, i64 k_max) {
    const i64 p = pm.value();
    ScanReport rep{"cor22", "p=" + std::to_string(p) + " k<=" + std::to_string(k_max)};
    for (i64 k = 1; k <= k_max; ++k) {
        const auto row = residue_row(k, pm, SignConvention::signed_lower);
        for (i64 h = 1; 2 * h <= k; ++h) {
            if (h % p == 0) continue;
            ++rep.instances_checked;
            if (is_period(row.values, h).holds && !is_power_of(p, k + 1))
                rep.violations.push_back({{{"p", p}, {"k", k}, {"h", h}}, row.values});
        }
    }
    return rep;
}

/// General corollary, h = h' * p^s with p not dividing h': a periodic instance
/// under k >= 5p^s and 3(h-p^s) < 2(k+1) (or the p=3 variant) must satisfy
/// p^t - p^s <= k < p^t for some t.
inline ScanReport scan_cor_general(const PrimeModulus& pm, i64 k_max, i64 s_max) {
    const i64 p = pm.value();
    ScanReport rep{"cor24", "p=" + std::to_string(p) + " k<=" + std::to_string(k_max) +
                                " s<=" + std::to_string(s_max)};
    for (i64 s = 0; s <= s_max; ++s) {
        const i64 ps = ipow(p, s);
        for (i64 k = 5 * ps; k <= k_max; ++k) {
            const auto row = residue_row(k, pm, SignConvention::signed_lower);
            for (i64 h = ps; h <= k; h += ps) {
                if ((h / ps) % p == 0) continue;  // s must be the exact p-valuation of h
                const bool hyp = 3 * (h - ps) < 2 * (k + 1) ||
                                 (p == 3 && 5 * (h - ps) < 4 * (k + 1));
                if (!hyp) continue;
                ++rep.instances_checked;
                if (!is_period(row.values, h).holds) continue;
                i64 pt = 1;
                while (pt <= k) pt *= p;
                if (!(pt - ps <= k))
                    rep.violations.push_back(
                        {{{"p", p}, {"k", k}, {"h", h}, {"s", s}}, row.values});
            }
        }
    }
    return rep;
}

/// Unsigned analogue. Branch 41 (p odd, h odd): a periodic unsigned row has
/// k+1 = 2p^r, or k+1 = 4*3^r with p = 3, or is the sporadic (3,7,7).
/// Branch 42: p not dividing h and 2h <= k force k+1 = p^r.
inline ScanReport scan_unsigned(const PrimeModulus& pm, i64 k_max) {
    const i64 p = pm.value();
    ScanReport rep{"thm41", "p=" + std::to_string(p) + " k<=" + std::to_string(k_max)};
    for (i64 k = 1; k <= k_max; ++k) {
        const auto row = residue_row(k, pm, SignConvention::unsigned_row);
        if (p != 2 && k >= 5) {
            for (i64 h = 1; h <= k; h += 2) {
                if (!thm1_hypotheses(pm, k, h)) continue;
                ++rep.instances_checked;
                if (!is_period(row.values, h).holds) continue;
                const i64 m = k + 1;
                const bool ok = (m % 2 == 0 && is_power_of(p, m / 2)) ||
                                (p == 3 && m % 4 == 0 && is_power_of(3, m / 4)) ||
                                (p == 3 && k == 7 && h == 7);
                if (!ok)
                    rep.violations.push_back(
                        {{{"p", p}, {"k", k}, {"h", h}, {"branch", 41}}, row.values});
            }
        }
        for (i64 h = 1; 2 * h <= k; ++h) {
            if (h % p == 0) continue;
            ++rep.instances_checked;
            if (is_period(row.values, h).holds && !is_power_of(p, k + 1))
                rep.violations.push_back(
                    {{{"p", p}, {"k", k}, {"h", h}, {"branch", 42}}, row.values});
        }
    }
    return rep;
}

/// Vertical analogue: the column k -> binom(k,i) mod p on [i, p^s-1], periodic
/// under the stated inequalities with p not dividing h, forces p^s-i = p^m.
/// (Reflecting the column onto the row k' = p^s-1-i turns plain column
/// periodicity into signed-row periodicity, so the row result pins k'+1.)
inline ScanReport scan_vertical(const PrimeModulus& pm, i64 s, i64 i_max) {
    const i64 p = pm.value();
    const i64 ps = ipow(p, s);
    ScanReport rep{"thm46", "p=" + std::to_string(p) + " s=" + std::to_string(s) +
                                " i<=" + std::to_string(i_max)};
    for (i64 i = 0; i <= i_max && i < ps - 5; ++i) {
        std::vector<int> col;
        col.reserve(static_cast<std::size_t>(ps - i));
        for (i64 k = i; k <= ps - 1; ++k)
            col.push_back(static_cast<int>(binom_mod(k, i, pm)));
        const i64 len = static_cast<i64>(col.size());
        for (i64 h = 1; h <= len - 1; ++h) {
            if (h % p == 0) continue;
            const bool hyp =
                3 * h < 2 * ps - 2 * i + 3 || (p == 3 && 5 * h < 4 * ps - 4 * i + 5);
            if (!hyp) continue;
            ++rep.instances_checked;
            if (is_period(col, h).holds && !is_power_of(p, ps - i))
                rep.violations.push_back({{{"p", p}, {"s", s}, {"i", i}, {"h", h}}, col});
        }
    }
    return rep;
}

namespace detail {

inline void expect(ScanReport& rep, bool cond, std::map<std::string, i64> params,
                   const std::vector<int>& evidence) {
    ++rep.instances_checked;
    if (!cond) rep.violations.push_back({std::move(params), evidence});
}

}  // namespace detail

/// Sharpness patterns around the main theorem, for one prime power p^r:
///   - k = 3p^r-1 (p != 3): one-blocks at both ends, a constant middle block,
///     a period for every h >= 2p^r and for no h <= k-p^r prime to p;
///   - p = 3, k = 5*3^r-1: a period for every h >= 4*3^r and no smaller
///     admissible one;
///   - k = 2p^r-1 (p odd) and k = 4*3^r-1: the signed block patterns with no
///     period at all, and the unsigned rows with exactly the stated odd periods.
inline ScanReport remark_patterns(const PrimeModulus& pm, i64 r) {
    const i64 p = pm.value();
    const i64 pr = ipow(p, r);
    if (pr > 125) throw std::invalid_argument("remark_patterns: p^r must be <= 125");
    ScanReport rep{"remarks", "p=" + std::to_string(p) + " r=" + std::to_string(r)};

    auto odd_period_set = [](const std::vector<int>& vals) {
        std::set<i64> out;
        const i64 k = static_cast<i64>(vals.size()) - 1;
        for (i64 h = 1; h <= k; h += 2)
            if (is_period(vals, h).holds) out.insert(h);
        return out;
    };

    if (p != 3) {
        const i64 k = 3 * pr - 1;
        const auto row = residue_row(k, pm, SignConvention::signed_lower).values;
        const int mid = (p == 2) ? 0 : static_cast<int>(p - 2);
        for (i64 i = 0; i <= k; ++i) {
            const int want = (i < pr || i >= 2 * pr) ? 1 : mid;
            detail::expect(rep, row[static_cast<std::size_t>(i)] == want,
                           {{"p", p}, {"k", k}, {"i", i}, {"check", 1}}, row);
        }
        for (i64 h = 2 * pr; h <= k; ++h)
            detail::expect(rep, is_period(row, h).holds,
                           {{"p", p}, {"k", k}, {"h", h}, {"check", 2}}, row);
        for (i64 h = 1; h <= k - pr; ++h) {
            if (h % p == 0) continue;
            detail::expect(rep, !is_period(row, h).holds,
                           {{"p", p}, {"k", k}, {"h", h}, {"check", 3}}, row);
        }
    } else {
        const i64 k = 5 * pr - 1;
        const auto row = residue_row(k, pm, SignConvention::signed_lower).values;
        for (i64 h = 4 * pr; h <= k; ++h)
            detail::expect(rep, is_period(row, h).holds,
                           {{"p", p}, {"k", k}, {"h", h}, {"check", 2}}, row);
        for (i64 h = 1; h <= k - pr; ++h) {
            if (h % 3 == 0) continue;
            detail::expect(rep, !is_period(row, h).holds,
                           {{"p", p}, {"k", k}, {"h", h}, {"check", 3}}, row);
        }
    }

    if (p != 2) {
        // k = 2p^r-1: signed blocks 1 then -1, no period; unsigned odd periods
        // exactly p^r..2p^r-1.
        const i64 k = 2 * pr - 1;
        const auto srow = residue_row(k, pm, SignConvention::signed_lower).values;
        for (i64 i = 0; i <= k; ++i) {
            const int want = (i < pr) ? 1 : static_cast<int>(p - 1);
            detail::expect(rep, srow[static_cast<std::size_t>(i)] == want,
                           {{"p", p}, {"k", k}, {"i", i}, {"check", 4}}, srow);
        }
        for (i64 h = 1; h <= k; ++h)
            detail::expect(rep, !is_period(srow, h).holds,
                           {{"p", p}, {"k", k}, {"h", h}, {"check", 5}}, srow);
        const auto urow = residue_row(k, pm, SignConvention::unsigned_row).values;
        const auto odd = odd_period_set(urow);
        std::set<i64> want;
        for (i64 h = pr; h <= 2 * pr - 1; ++h)
            if (h % 2 == 1) want.insert(h);
        detail::expect(rep, odd == want, {{"p", p}, {"k", k}, {"check", 6}}, urow);
    }
    if (p == 3) {
        // k = 4*3^r-1: signed blocks 1 / 0 / -1, no period; unsigned odd
        // periods exactly 3*3^r..4*3^r-1.
        const i64 k = 4 * pr - 1;
        const auto srow = residue_row(k, pm, SignConvention::signed_lower).values;
        for (i64 i = 0; i <= k; ++i) {
            const int want = (i < pr) ? 1 : (i < 3 * pr) ? 0 : 2;
            detail::expect(rep, srow[static_cast<std::size_t>(i)] == want,
                           {{"p", p}, {"k", k}, {"i", i}, {"check", 4}}, srow);
        }
        for (i64 h = 1; h <= k; ++h)
            detail::expect(rep, !is_period(srow, h).holds,
                           {{"p", p}, {"k", k}, {"h", h}, {"check", 5}}, srow);
        const auto urow = residue_row(k, pm, SignConvention::unsigned_row).values;
        const auto odd = odd_period_set(urow);
        std::set<i64> want;
        for (i64 h = 3 * pr; h <= 4 * pr - 1; ++h)
            if (h % 2 == 1) want.insert(h);
        detail::expect(rep, odd == want, {{"p", p}, {"k", k}, {"check", 6}}, urow);
    }
    return rep;
}

}  // namespace binomod
