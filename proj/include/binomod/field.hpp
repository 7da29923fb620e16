#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "binomod/binom.hpp"

namespace binomod {

// Dense polynomials over F_p: coeffs[j] is the coefficient of x^j, no
// trailing zeros (the zero polynomial is the empty vector).
namespace poly {

using Poly = std::vector<int>;

inline void trim(Poly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

inline Poly mul(const Poly& a, const Poly& b, i64 p) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = static_cast<int>((r[i + j] + i64(a[i]) * b[j]) % p);
    trim(r);
    return r;
}

/// Remainder of f modulo the monic polynomial m.
inline Poly mod(Poly f, const Poly& m, i64 p) {
    trim(f);
    if (m.empty() || m.back() != 1)
        throw std::invalid_argument("poly::mod: modulus must be monic");
    const std::size_t dm = m.size() - 1;
    while (f.size() > dm) {
        const i64 c = f.back();
        const std::size_t shift = f.size() - 1 - dm;
        if (c != 0)
            for (std::size_t j = 0; j < m.size(); ++j) {
                i64 v = (f[shift + j] - c * m[j]) % p;
                if (v < 0) v += p;
                f[shift + j] = static_cast<int>(v);
            }
        f.pop_back();
        trim(f);
    }
    return f;
}

inline bool divides(const Poly& d, const Poly& f, i64 p) { return mod(f, d, p).empty(); }

}  // namespace poly

/// Lexicographically smallest monic irreducible of degree n over F_p,
/// comparing coefficient tuples (c_{n-1}, ..., c_0). Irreducibility by trial
/// division against all monic polynomials of degree <= n/2.
inline poly::Poly find_irreducible(i64 pv, i64 n) {
    if (n < 1 || n > 16) throw std::invalid_argument("find_irreducible: need 1 <= n <= 16");
    const i64 p = pv;
    auto monic_of_rank = [&](i64 m, i64 deg) {
        poly::Poly f(static_cast<std::size_t>(deg + 1), 0);
        for (i64 j = 0; j < deg; ++j) {
            f[static_cast<std::size_t>(j)] = static_cast<int>(m % p);
            m /= p;
        }
        f[static_cast<std::size_t>(deg)] = 1;
        return f;
    };
    i64 count = 1;
    for (i64 j = 0; j < n; ++j) count *= p;
    for (i64 m = 0; m < count; ++m) {
        poly::Poly f = monic_of_rank(m, n);
        bool irreducible = true;
        for (i64 d = 1; irreducible && 2 * d <= n; ++d) {
            i64 dc = 1;
            for (i64 j = 0; j < d; ++j) dc *= p;
            for (i64 g = 0; g < dc; ++g)
                if (poly::divides(monic_of_rank(g, d), f, p)) {
                    irreducible = false;
                    break;
                }
        }
        if (irreducible) return f;
    }
    throw std::logic_error("find_irreducible: unreachable");
}

/// F_{p^n} with elements encoded as index = sum c_j p^j for the residue
/// polynomial sum c_j x^j. Multiplication goes through exp/log tables over a
/// primitive generator; addition is digit-wise on the coefficient encoding.
class FieldSpec {
public:
    FieldSpec(i64 p, i64 n) : p_(p), n_(n) {
        PrimeModulus pm(p);
        q_ = 1;
        for (i64 j = 0; j < n; ++j) {
            q_ *= p;
            if (q_ > (i64{1} << 16)) throw std::invalid_argument("FieldSpec: p^n must be <= 2^16");
        }
        modulus_ = find_irreducible(p, n);
        build_tables();
    }

    i64 p() const { return p_; }
    i64 n() const { return n_; }
    i64 q() const { return q_; }
    const poly::Poly& modulus() const { return modulus_; }
    i64 generator() const { return generator_; }
    const std::vector<int>& exp_table() const { return exp_; }
    const std::vector<int>& log_table() const { return log_; }

    i64 add(i64 a, i64 b) const {
        check(a), check(b);
        i64 r = 0, place = 1;
        while (a > 0 || b > 0) {
            r += (a % p_ + b % p_) % p_ * place;
            a /= p_;
            b /= p_;
            place *= p_;
        }
        return r;
    }

    i64 neg(i64 a) const {
        check(a);
        i64 r = 0, place = 1;
        while (a > 0) {
            r += (p_ - a % p_) % p_ * place;
            a /= p_;
            place *= p_;
        }
        return r;
    }

    i64 sub(i64 a, i64 b) const { return add(a, neg(b)); }
    i64 one_minus(i64 a) const { return sub(1, a); }

    i64 mul(i64 a, i64 b) const {
        check(a), check(b);
        if (a == 0 || b == 0) return 0;
        return exp_[static_cast<std::size_t>((log_[static_cast<std::size_t>(a)] +
                                              log_[static_cast<std::size_t>(b)]) %
                                             (q_ - 1))];
    }

    i64 inv(i64 a) const {
        check(a);
        if (a == 0) throw std::domain_error("FieldSpec::inv: division by zero");
        const i64 l = log_[static_cast<std::size_t>(a)];
        return exp_[static_cast<std::size_t>((q_ - 1 - l) % (q_ - 1))];
    }

    i64 pow(i64 a, i64 e) const {
        check(a);
        if (a == 0) {
            if (e < 0) throw std::domain_error("FieldSpec::pow: division by zero");
            return e == 0 ? 1 : 0;
        }
        i64 l = log_[static_cast<std::size_t>(a)] % (q_ - 1) * (e % (q_ - 1)) % (q_ - 1);
        if (l < 0) l += q_ - 1;
        return exp_[static_cast<std::size_t>(l)];
    }

private:
    void check(i64 a) const {
        if (a < 0 || a >= q_) throw std::out_of_range("FieldSpec: element index out of range");
    }

    poly::Poly to_poly(i64 a) const {
        poly::Poly f;
        while (a > 0) {
            f.push_back(static_cast<int>(a % p_));
            a /= p_;
        }
        return f;
    }

    i64 from_poly(const poly::Poly& f) const {
        i64 r = 0;
        for (std::size_t j = f.size(); j-- > 0;) r = r * p_ + f[j];
        return r;
    }

    i64 mul_slow(i64 a, i64 b) const {
        return from_poly(poly::mod(poly::mul(to_poly(a), to_poly(b), p_), modulus_, p_));
    }

    i64 pow_slow(i64 a, i64 e) const {
        i64 r = 1;
        while (e > 0) {
            if (e & 1) r = mul_slow(r, a);
            a = mul_slow(a, a);
            e >>= 1;
        }
        return r;
    }

    void build_tables() {
        std::vector<i64> prime_factors;
        i64 m = q_ - 1;
        for (i64 d = 2; d * d <= m; ++d)
            if (m % d == 0) {
                prime_factors.push_back(d);
                while (m % d == 0) m /= d;
            }
        if (m > 1) prime_factors.push_back(m);

        generator_ = 1;  // q = 2: the trivial group
        for (i64 cand = 2; cand < q_; ++cand) {
            bool primitive = true;
            for (i64 f : prime_factors)
                if (pow_slow(cand, (q_ - 1) / f) == 1) {
                    primitive = false;
                    break;
                }
            if (primitive) {
                generator_ = cand;
                break;
            }
        }

        exp_.assign(static_cast<std::size_t>(q_ - 1), 0);
        log_.assign(static_cast<std::size_t>(q_), -1);
        i64 acc = 1;
        for (i64 j = 0; j < q_ - 1; ++j) {
            exp_[static_cast<std::size_t>(j)] = static_cast<int>(acc);
            log_[static_cast<std::size_t>(acc)] = static_cast<int>(j);
            acc = mul_slow(acc, generator_);
        }
        if (acc != 1) throw std::logic_error("FieldSpec: generator order mismatch");
    }

    i64 p_, n_, q_;
    poly::Poly modulus_;
    i64 generator_;
    std::vector<int> exp_, log_;
};

inline FieldSpec build_field(i64 p, i64 n) { return FieldSpec(p, n); }

/// The unique multiplicative subgroup of order k, as the image of the
/// ((q-1)/k)-th power map.
struct Subgroup {
    i64 order;
    std::vector<i64> elements;  // sorted
    i64 generator;              // an element of exact order `order`
};

inline Subgroup subgroup_of_order(const FieldSpec& f, i64 k) {
    if (k < 1 || (f.q() - 1) % k != 0)
        throw std::invalid_argument("subgroup_of_order: k must divide q-1");
    const i64 n = (f.q() - 1) / k;
    Subgroup g{k, {}, 1};
    g.elements.reserve(static_cast<std::size_t>(k));
    for (i64 j = 0; j < k; ++j)
        g.elements.push_back(f.exp_table()[static_cast<std::size_t>(n * j % (f.q() - 1))]);
    std::sort(g.elements.begin(), g.elements.end());
    g.generator = (k == 1) ? 1 : f.exp_table()[static_cast<std::size_t>(n % (f.q() - 1))];
    return g;
}

/// True iff the smallest subfield of F_q containing G is F_q itself: no proper
/// subfield F_{p^d}, d | n, fixes all of G under x -> x^{p^d}.
inline bool generates_field(const FieldSpec& f, const Subgroup& g) {
    for (i64 d = 1; d < f.n(); ++d) {
        if (f.n() % d != 0) continue;
        i64 pd = 1;
        for (i64 j = 0; j < d; ++j) pd *= f.p();
        bool inside = true;
        for (i64 x : g.elements)
            if (f.pow(x, pd) != x) {
                inside = false;
                break;
            }
        if (inside) return false;
    }
    return true;
}

/// True iff S (which must contain 0 and 1) is closed under addition and
/// multiplication; by finiteness that makes S a subfield.
inline bool is_subfield_closed(const FieldSpec& f, const std::vector<i64>& s) {
    std::vector<char> in(static_cast<std::size_t>(f.q()), 0);
    for (i64 x : s) in[static_cast<std::size_t>(x)] = 1;
    if (!in[0] || !in[1])
        throw std::invalid_argument("is_subfield_closed: S must contain 0 and 1");
    for (i64 a : s)
        for (i64 b : s) {
            if (!in[static_cast<std::size_t>(f.add(a, b))]) return false;
            if (!in[static_cast<std::size_t>(f.mul(a, b))]) return false;
        }
    return true;
}

}  // namespace binomod
