#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <vector>

#include "binomod/binom.hpp"

namespace binomod {

/// Inclusive index range [a, b].
struct RangeSpec {
    i64 a;
    i64 b;
};

/// Outcome of a range-restricted period test: h is a period of f on [a,b]
/// when f(i+h) = f(i) for all a <= i <= b-h; vacuously so when h > b-a.
struct PeriodVerdict {
    i64 h;
    bool holds;
    bool vacuous;
    std::optional<i64> first_failure;
};

/// seq holds f(a), f(a+1), ..., f(b); a only shifts reported failure indices.
inline PeriodVerdict is_period(std::span<const int> seq, i64 h, i64 a = 0) {
    if (h < 1) throw std::invalid_argument("is_period: h must be positive");
    const i64 len = static_cast<i64>(seq.size());
    if (len == 0) throw std::invalid_argument("is_period: empty sequence");
    PeriodVerdict v{h, true, false, std::nullopt};
    if (h > len - 1) {
        v.vacuous = true;
        return v;
    }
    for (i64 i = 0; i + h < len; ++i) {
        if (seq[static_cast<std::size_t>(i + h)] != seq[static_cast<std::size_t>(i)]) {
            v.holds = false;
            v.first_failure = a + i;
            return v;
        }
    }
    return v;
}

/// All h <= h_max that hold non-vacuously.
inline std::set<i64> period_set(std::span<const int> seq, i64 h_max) {
    const i64 len = static_cast<i64>(seq.size());
    if (h_max > len - 1) throw std::invalid_argument("period_set: h_max exceeds b-a");
    std::set<i64> out;
    for (i64 h = 1; h <= h_max; ++h) {
        const auto v = is_period(seq, h);
        if (v.holds && !v.vacuous) out.insert(h);
    }
    return out;
}

/// Smallest non-vacuous period, via the KMP border array, or nullopt.
inline std::optional<i64> minimal_period(std::span<const int> seq) {
    const i64 n = static_cast<i64>(seq.size());
    if (n == 0) throw std::invalid_argument("minimal_period: empty sequence");
    std::vector<i64> border(static_cast<std::size_t>(n), 0);
    for (i64 i = 1; i < n; ++i) {
        i64 j = border[static_cast<std::size_t>(i - 1)];
        while (j > 0 && seq[static_cast<std::size_t>(i)] != seq[static_cast<std::size_t>(j)])
            j = border[static_cast<std::size_t>(j - 1)];
        if (seq[static_cast<std::size_t>(i)] == seq[static_cast<std::size_t>(j)]) ++j;
        border[static_cast<std::size_t>(i)] = j;
    }
    const i64 h = n - border[static_cast<std::size_t>(n - 1)];
    if (h <= n - 1) return h;
    return std::nullopt;
}

}  // namespace binomod
