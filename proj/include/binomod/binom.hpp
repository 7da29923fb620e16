#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace binomod {

using i64 = std::int64_t;

inline i64 pow_mod(i64 base, i64 exp, i64 mod) {
    i64 r = 1 % mod;
    base %= mod;
    if (base < 0) base += mod;
    while (exp > 0) {
        if (exp & 1) r = r * base % mod;
        base = base * base % mod;
        exp >>= 1;
    }
    return r;
}

inline bool is_prime(i64 n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (i64 d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

/// Prime modulus p, 2 <= p < 2^31, checked by trial division at construction.
class PrimeModulus {
public:
    explicit PrimeModulus(i64 p) : p_(p) {
        if (p < 2 || p >= (i64{1} << 31) || !is_prime(p))
            throw std::invalid_argument("PrimeModulus: " + std::to_string(p) +
                                        " is not a prime in [2, 2^31)");
    }
    i64 value() const { return p_; }

private:
    i64 p_;
};

inline i64 inv_mod(i64 a, i64 p) { return pow_mod(a, p - 2, p); }

/// binom(a,b) mod p for 0 <= a,b < p, by the multiplicative formula.
inline i64 digit_binom(i64 a, i64 b, i64 p) {
    if (b < 0 || b > a) return 0;
    b = std::min(b, a - b);
    i64 num = 1, den = 1;
    for (i64 j = 1; j <= b; ++j) {
        num = num * (a - b + j) % p;
        den = den * j % p;
    }
    if (num == 0) return 0;
    return num * inv_mod(den, p) % p;
}

/// Base-p digits of b, least significant first. b = 0 yields [0].
inline std::vector<i64> padic_digits(i64 b, const PrimeModulus& pm) {
    if (b < 0) throw std::invalid_argument("padic_digits: b must be nonnegative");
    const i64 p = pm.value();
    std::vector<i64> digits;
    do {
        digits.push_back(b % p);
        b /= p;
    } while (b > 0);
    return digits;
}

/// b = hi * p^r + lo with 0 <= lo < p^r.
struct PrimePowerSplit {
    i64 b;
    i64 p;
    i64 r;
    i64 hi;
    i64 lo;
};

inline PrimePowerSplit split(i64 b, const PrimeModulus& pm, i64 r) {
    if (b < 0 || r < 0) throw std::invalid_argument("split: b and r must be nonnegative");
    i64 pr = 1;
    for (i64 j = 0; j < r; ++j) pr *= pm.value();
    return PrimePowerSplit{b, pm.value(), r, b / pr, b % pr};
}

/// binom(k,i) mod p by the digit-wise product; 0 outside 0 <= i <= k.
inline i64 binom_mod(i64 k, i64 i, const PrimeModulus& pm) {
    if (k < 0) throw std::invalid_argument("binom_mod: k must be nonnegative");
    if (i < 0 || i > k) return 0;
    const i64 p = pm.value();
    i64 acc = 1;
    while ((k > 0 || i > 0) && acc != 0) {
        acc = acc * digit_binom(k % p, i % p, p) % p;
        k /= p;
        i /= p;
    }
    return acc;
}

/// binom(k',i') * binom(k'',i'') mod p for the p^r split of k and i.
inline i64 binom_mod_split(i64 k, i64 i, const PrimeModulus& pm, i64 r) {
    const auto ks = split(k, pm, r);
    const auto is = split(i, pm, r);
    return binom_mod(ks.hi, is.hi, pm) * binom_mod(ks.lo, is.lo, pm) % pm.value();
}

/// Exact integer binom(k,i) for any integer k and i >= 0, via the
/// generating-function extension binom(-k,i) = (-1)^i binom(k+i-1,i).
inline i64 ext_binom(i64 k, i64 i) {
    if (i < 0) throw std::invalid_argument("ext_binom: i must be nonnegative");
    auto nonneg = [](i64 a, i64 b) -> i64 {
        if (b < 0 || b > a) return 0;
        b = std::min(b, a - b);
        __int128 r = 1;
        for (i64 j = 1; j <= b; ++j) {
            r = r * (a - b + j) / j;
            if (r > __int128(INT64_MAX)) throw std::overflow_error("ext_binom: value overflows");
        }
        return static_cast<i64>(r);
    };
    if (k >= 0) return nonneg(k, i);
    const i64 v = nonneg(-k + i - 1, i);
    return (i % 2 == 0) ? v : -v;
}

enum class SignConvention { unsigned_row, signed_lower, signed_upper };

/// A row of Pascal's triangle mod p under a sign convention:
/// unsigned binom(k,i), (-1)^i binom(k,i), or (-1)^k binom(k,i).
struct ResidueRow {
    i64 p;
    i64 k;
    SignConvention convention;
    std::vector<int> values;  // index i = 0..k, entries in [0,p)
};

inline constexpr i64 kRowLengthGuard = i64{1} << 24;

inline ResidueRow residue_row(i64 k, const PrimeModulus& pm, SignConvention c) {
    if (k < 0) throw std::invalid_argument("residue_row: k must be nonnegative");
    if (k > kRowLengthGuard)
        throw std::length_error("residue_row: k exceeds the row-length guard");
    const i64 p = pm.value();
    ResidueRow row{p, k, c, std::vector<int>(static_cast<std::size_t>(k + 1))};
    const bool flip_all = (c == SignConvention::signed_upper) && (k % 2 == 1);
    for (i64 i = 0; i <= k; ++i) {
        i64 v = binom_mod(k, i, pm);
        bool flip = flip_all || (c == SignConvention::signed_lower && i % 2 == 1);
        if (flip && v != 0) v = p - v;
        row.values[static_cast<std::size_t>(i)] = static_cast<int>(v);
    }
    return row;
}

/// Least power of p exceeding i: the period of the column k -> binom(k,i) mod p.
inline i64 upper_period(i64 i, const PrimeModulus& pm) {
    if (i < 0) throw std::invalid_argument("upper_period: i must be nonnegative");
    i64 m = 1;
    while (m <= i) m *= pm.value();
    return m;
}

/// Both sides of the triangle-reflection identity
/// (-1)^k binom(k,i) = (-1)^i binom(p^s-1-i, p^s-1-k) mod p, for 0 <= i <= k <= p^s-1.
inline std::pair<i64, i64> symmetry_reflect(i64 k, i64 i, i64 s, const PrimeModulus& pm) {
    const i64 p = pm.value();
    i64 ps = 1;
    for (i64 j = 0; j < s; ++j) ps *= p;
    if (!(0 <= i && i <= k && k <= ps - 1))
        throw std::out_of_range("symmetry_reflect: need 0 <= i <= k <= p^s-1");
    i64 lhs = binom_mod(k, i, pm);
    if (k % 2 == 1 && lhs != 0) lhs = p - lhs;
    i64 rhs = binom_mod(ps - 1 - i, ps - 1 - k, pm);
    if (i % 2 == 1 && rhs != 0) rhs = p - rhs;
    return {lhs, rhs};
}

}  // namespace binomod
