// Test-only oracles, independent of the library's Lucas / failure-function
// code paths: exact big-integer binomials and naive period scans.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <span>
#include <vector>

namespace oracle {

using boost::multiprecision::cpp_int;

inline cpp_int binom_exact(long long k, long long i) {
    if (i < 0 || i > k) return 0;
    cpp_int num = 1, den = 1;
    if (i > k - i) i = k - i;
    for (long long j = 1; j <= i; ++j) {
        num *= k - i + j;
        den *= j;
    }
    return num / den;
}

inline long long binom_mod_exact(long long k, long long i, long long p) {
    return static_cast<long long>(binom_exact(k, i) % p);
}

inline bool naive_is_period(std::span<const int> seq, long long h) {
    for (long long i = 0; i + h < static_cast<long long>(seq.size()); ++i)
        if (seq[static_cast<std::size_t>(i + h)] != seq[static_cast<std::size_t>(i)])
            return false;
    return true;
}

inline std::optional<long long> naive_minimal_period(std::span<const int> seq) {
    const long long n = static_cast<long long>(seq.size());
    for (long long h = 1; h <= n - 1; ++h)
        if (naive_is_period(seq, h)) return h;
    return std::nullopt;
}

}  // namespace oracle
