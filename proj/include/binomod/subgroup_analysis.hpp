#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "binomod/binom.hpp"
#include "binomod/field.hpp"
#include "binomod/period.hpp"

namespace binomod {

enum class NearFieldSign { one_minus, plus_one };

namespace detail {

inline std::vector<char> membership(const FieldSpec& f, const std::vector<i64>& s) {
    std::vector<char> in(static_cast<std::size_t>(f.q()), 0);
    for (i64 x : s) in[static_cast<std::size_t>(x)] = 1;
    return in;
}

inline void require_proper(const Subgroup& g, const Subgroup& h) {
    if (h.order >= g.order || g.order % h.order != 0)
        throw std::invalid_argument("H must be a proper subgroup of G");
}

}  // namespace detail

/// G together with G ∩ (1-G); the ratio c = size / |G| is size_g-ths.
struct IntersectionStats {
    i64 size_g;
    std::vector<i64> intersection;
    i64 size;
};

inline IntersectionStats one_minus_intersection(const FieldSpec& f, const Subgroup& g) {
    const auto in = detail::membership(f, g.elements);
    IntersectionStats st{g.order, {}, 0};
    for (i64 x : g.elements)
        if (in[static_cast<std::size_t>(f.one_minus(x))]) st.intersection.push_back(x);
    st.size = static_cast<i64>(st.intersection.size());
    return st;
}

/// Near-field condition check: does 1-a (resp. a+1) lie in G for every
/// a in G \ H?  When the hypothesis holds the theorems assert that G ∪ {0}
/// is a subfield, and that G = F_q^* as soon as G generates F_q.
struct NearFieldVerdict {
    bool hypothesis_holds;
    std::optional<i64> failing_alpha;
    bool subfield_closed;  // of G ∪ {0}
    bool generates;
    bool full_group;
    bool ok;  // the implication the theorems claim
};

inline NearFieldVerdict near_field_check(const FieldSpec& f, const Subgroup& g,
                                         const Subgroup& h, NearFieldSign sign) {
    detail::require_proper(g, h);
    const auto in_g = detail::membership(f, g.elements);
    const auto in_h = detail::membership(f, h.elements);
    NearFieldVerdict v{true, std::nullopt, false, false, false, true};
    for (i64 a : g.elements) {
        if (in_h[static_cast<std::size_t>(a)]) continue;
        const i64 t = (sign == NearFieldSign::one_minus) ? f.one_minus(a) : f.add(a, 1);
        if (!in_g[static_cast<std::size_t>(t)]) {
            v.hypothesis_holds = false;
            v.failing_alpha = a;
            break;
        }
    }
    std::vector<i64> with_zero = g.elements;
    with_zero.push_back(0);
    v.subfield_closed = is_subfield_closed(f, with_zero);
    v.generates = generates_field(f, g);
    v.full_group = (g.order == f.q() - 1);
    v.ok = !v.hypothesis_holds || (v.subfield_closed && (!v.generates || v.full_group));
    return v;
}

/// Leep-Shapiro: if 1-a in G for all a in G \ H, the same holds for all
/// a in G \ {1}. bad_betas lists b in H \ {1} with 1-b not in G (must be
/// empty when the hypothesis holds); when one exists the diagnostic image of
/// the injection a -> (1-a)/(1-ab) is recorded for the first such b.
struct LeepShapiroVerdict {
    bool hypothesis_holds;
    bool conclusion_holds;
    bool ok;
    std::vector<i64> bad_betas;
    std::vector<i64> injection_image;
};

inline LeepShapiroVerdict leep_shapiro_check(const FieldSpec& f, const Subgroup& g,
                                             const Subgroup& h) {
    detail::require_proper(g, h);
    const auto in_g = detail::membership(f, g.elements);
    const auto in_h = detail::membership(f, h.elements);
    LeepShapiroVerdict v{true, true, true, {}, {}};
    for (i64 a : g.elements) {
        const bool excluded_hyp = in_h[static_cast<std::size_t>(a)] != 0;
        const bool in_img = in_g[static_cast<std::size_t>(f.one_minus(a))] != 0;
        if (!excluded_hyp && !in_img) v.hypothesis_holds = false;
        if (a != 1 && !in_img) v.conclusion_holds = false;
    }
    for (i64 b : h.elements)
        if (b != 1 && !in_g[static_cast<std::size_t>(f.one_minus(b))]) v.bad_betas.push_back(b);
    if (v.hypothesis_holds && !v.bad_betas.empty()) {
        const i64 b = v.bad_betas.front();
        for (i64 a : g.elements) {
            if (in_h[static_cast<std::size_t>(a)]) continue;
            const i64 den = f.one_minus(f.mul(a, b));
            if (den != 0) v.injection_image.push_back(f.mul(f.one_minus(a), f.inv(den)));
        }
    }
    v.ok = !v.hypothesis_holds || v.conclusion_holds;
    return v;
}

/// True iff sum_{j < k/h} x^{jh} divides (1-x)^k - 1 in F_p[x]; equivalent to
/// the signed row of k being periodic with period h on the range (0, k].
inline bool bridge_divisibility(const PrimeModulus& pm, i64 k, i64 h) {
    if (h < 1 || k < 1 || k % h != 0)
        throw std::invalid_argument("bridge_divisibility: h must divide k");
    if (k > 10000) throw std::invalid_argument("bridge_divisibility: k must be <= 10^4");
    const auto row = residue_row(k, pm, SignConvention::signed_lower);
    poly::Poly f(row.values.begin(), row.values.end());
    f[0] = 0;  // (1-x)^k - 1
    poly::trim(f);
    poly::Poly d(static_cast<std::size_t>(k - h + 1), 0);
    for (i64 j = 0; j * h <= k - h; ++j) d[static_cast<std::size_t>(j * h)] = 1;
    return poly::divides(d, f, pm.value());
}

/// Projective point count of the Fermat curve x^n + y^n = z^n over F_q,
/// by brute force over the affine chart z = 1 plus the line z = 0.
/// d counts the points with xyz = 0.
struct FermatCount {
    i64 q;
    i64 n;
    i64 N;
    i64 d;
};

inline FermatCount fermat_count(const FieldSpec& f, i64 n) {
    if (n < 1 || (f.q() - 1) % n != 0)
        throw std::invalid_argument("fermat_count: n must divide q-1");
    const i64 q = f.q();
    std::vector<i64> pw(static_cast<std::size_t>(q));
    for (i64 x = 0; x < q; ++x) pw[static_cast<std::size_t>(x)] = f.pow(x, n);
    FermatCount fc{q, n, 0, 0};
    for (i64 x = 0; x < q; ++x)
        for (i64 y = 0; y < q; ++y)
            if (f.add(pw[static_cast<std::size_t>(x)], pw[static_cast<std::size_t>(y)]) == 1) {
                ++fc.N;
                if (x == 0 || y == 0) ++fc.d;
            }
    const i64 minus_one = f.neg(1);
    for (i64 x = 0; x < q; ++x)
        if (pw[static_cast<std::size_t>(x)] == minus_one) {
            ++fc.N;
            ++fc.d;  // z = 0 on the whole line at infinity
        }
    return fc;
}

/// |G ∩ (1-G)| computed directly must equal (N-d)/n^2 for n = (q-1)/k.
inline bool intersection_relation_check(const FieldSpec& f, i64 k) {
    const i64 n = (f.q() - 1) / k;
    const auto fc = fermat_count(f, n);
    const auto st = one_minus_intersection(f, subgroup_of_order(f, k));
    return (fc.N - fc.d) % (n * n) == 0 && st.size == (fc.N - fc.d) / (n * n);
}

/// Exact bound checks for the subgroup of order k. All square-root
/// comparisons are done by squaring; slacks are exact integers (nonnegative
/// exactly when the corresponding inequality holds).
struct BoundReport {
    i64 q, k, n, N, d;
    i64 intersection_size;
    bool full_group;
    bool subfield_closed;  // of G ∪ {0}

    bool weil_ok;           // (N-q-1)^2 <= (n-1)^2 (n-2)^2 q
    i64 weil_slack_sq;      // rhs - lhs
    bool thm34_applicable;  // 2|I| >= |G|
    bool thm34_ok;          // G = F_q^* or |G|^2 < 4q
    i64 thm34_slack_sq;     // 4q - |G|^2
    bool gv_applicable;     // q odd and G ∪ {0} not a subfield
    bool gv_ok;             // 2N <= n(n+q-1-d) + 2d
    i64 gv_slack2;
    bool thm36_applicable;  // same as gv
    bool thm36_ok;          // 2|I| <= |G| - 1
    i64 thm36_slack2;
    bool refined_applicable;  // q = r^2 and 2|I| >= |G|
    bool refined_ok;          // G = F_q^* or |I| (r+1) < r (r-1)
    i64 refined_slack;
    bool refined_proven = false;  // empirical only: unproven in paper
};

inline BoundReport bounds_report(const FieldSpec& f, i64 k) {
    const i64 q = f.q();
    if (k < 1 || (q - 1) % k != 0)
        throw std::invalid_argument("bounds_report: k must divide q-1");
    const i64 n = (q - 1) / k;
    const auto fc = fermat_count(f, n);
    const auto g = subgroup_of_order(f, k);
    const auto st = one_minus_intersection(f, g);
    std::vector<i64> with_zero = g.elements;
    with_zero.push_back(0);

    BoundReport r{};
    r.q = q;
    r.k = k;
    r.n = n;
    r.N = fc.N;
    r.d = fc.d;
    r.intersection_size = st.size;
    r.full_group = (k == q - 1);
    r.subfield_closed = is_subfield_closed(f, with_zero);

    const i64 dev = fc.N - q - 1;
    r.weil_slack_sq = (n - 1) * (n - 1) * (n - 2) * (n - 2) * q - dev * dev;
    r.weil_ok = r.weil_slack_sq >= 0;

    r.thm34_applicable = 2 * st.size >= k;
    r.thm34_slack_sq = 4 * q - k * k;
    r.thm34_ok = r.full_group || r.thm34_slack_sq > 0;

    r.gv_applicable = (q % 2 == 1) && !r.subfield_closed;
    r.gv_slack2 = n * (n + q - 1 - fc.d) + 2 * fc.d - 2 * fc.N;
    r.gv_ok = r.gv_slack2 >= 0;
    r.thm36_applicable = r.gv_applicable;
    r.thm36_slack2 = (k - 1) - 2 * st.size;
    r.thm36_ok = r.thm36_slack2 >= 0;

    i64 root = 0;
    while (root * root < q) ++root;
    r.refined_applicable = (root * root == q) && 2 * st.size >= k;
    r.refined_slack = root * (root - 1) - st.size * (root + 1);
    r.refined_ok = r.full_group || r.refined_slack > 0;
    return r;
}

}  // namespace binomod
