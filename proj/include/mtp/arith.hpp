#pragma once

// Integer utilities and the quadratic symbols. The int64 overloads are the
// hot-path kernels used by the enumerators; the BigInt overloads are the
// public surface and fall back to GMP when an argument does not fit.

#include "mtp/bigint.hpp"

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

namespace mtp {

namespace detail {
// (2/n) for odd n, indexed by n mod 8
inline constexpr int kron2_tab[8] = {0, 1, 0, -1, 0, -1, 0, 1};
}  // namespace detail

// Kronecker symbol (k/n); follows Cohen, Alg. 1.4.10.
inline int kronecker(int64_t a, int64_t b) {
    if (a == INT64_MIN || b == INT64_MIN) {
        return mpz_kronecker(BigInt(a).to_mpz().get_mpz_t(), BigInt(b).to_mpz().get_mpz_t());
    }
    if (b == 0) return (a == 1 || a == -1) ? 1 : 0;
    if (((a | b) & 1) == 0) return 0;
    int v = __builtin_ctzll(static_cast<uint64_t>(b));
    b >>= v;
    int k = (v & 1) ? detail::kron2_tab[a & 7] : 1;
    if (b < 0) {
        b = -b;
        if (a < 0) k = -k;
    }
    for (;;) {
        if (a == 0) return b > 1 ? 0 : k;
        v = __builtin_ctzll(static_cast<uint64_t>(a));
        a >>= v;
        if (v & 1) k *= detail::kron2_tab[b & 7];
        if (a & b & 2) k = -k;
        int64_t r = a < 0 ? -a : a;
        a = b % r;
        b = r;
    }
}

inline int kronecker(const BigInt& a, const BigInt& b) {
    if (a.fits_i64() && b.fits_i64()) return kronecker(a.to_i64(), b.to_i64());
    return mpz_kronecker(a.to_mpz().get_mpz_t(), b.to_mpz().get_mpz_t());
}

// Real Hilbert symbol: -1 exactly when both arguments are negative.
inline int hilbert_real(int64_t a, int64_t b) {
    if (a == 0 || b == 0) throw std::domain_error("hilbert_real: arguments must be nonzero");
    return (a < 0 && b < 0) ? -1 : 1;
}
inline int hilbert_real(const BigInt& a, const BigInt& b) {
    if (a.is_zero() || b.is_zero()) throw std::domain_error("hilbert_real: arguments must be nonzero");
    return (a.sign() < 0 && b.sign() < 0) ? -1 : 1;
}

inline int sign_of(int64_t x) { return (x > 0) - (x < 0); }

inline int64_t gcd64(int64_t a, int64_t b) {
    a = a < 0 ? -a : a;
    b = b < 0 ? -b : b;
    while (b) {
        int64_t t = a % b;
        a = b;
        b = t;
    }
    return a;
}

inline int64_t lcm64(int64_t a, int64_t b) {
    if (a == 0 || b == 0) return 0;
    int64_t g = gcd64(a, b);
    int64_t r;
    if (__builtin_mul_overflow(a / g, b < 0 ? -b : b, &r)) throw std::overflow_error("lcm64 overflow");
    return r < 0 ? -r : r;
}

inline int64_t mod64(int64_t a, int64_t n) {
    int64_t r = a % n;
    return r < 0 ? r + (n < 0 ? -n : n) : r;
}

inline int64_t ipow64(int64_t b, int e) {
    int64_t r = 1;
    while (e-- > 0) {
        if (__builtin_mul_overflow(r, b, &r)) throw std::overflow_error("ipow64 overflow");
    }
    return r;
}

struct Factorization {
    int sign = 1;
    std::vector<std::pair<int64_t, int>> factors;  // ascending primes

    int64_t value() const {
        int64_t v = sign;
        for (auto [p, e] : factors) v *= ipow64(p, e);
        return v;
    }
};

inline Factorization factorize(int64_t n) {
    if (n == 0) throw std::domain_error("factorize: n must be nonzero");
    if (n == INT64_MIN) throw std::domain_error("factorize: n out of range");
    Factorization f;
    if (n < 0) {
        f.sign = -1;
        n = -n;
    }
    auto take = [&](int64_t p) {
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        if (e) f.factors.emplace_back(p, e);
    };
    take(2);
    take(3);
    for (int64_t p = 5; p <= n / p; p += 6) {
        take(p);
        take(p + 2);
    }
    if (n > 1) f.factors.emplace_back(n, 1);
    return f;
}

inline Factorization factorize(const BigInt& n) { return factorize(n.to_i64()); }

inline int64_t euler_phi(int64_t n) {
    if (n <= 0) throw std::domain_error("euler_phi: n must be positive");
    int64_t r = n;
    for (auto [p, e] : factorize(n).factors) r = r / p * (p - 1);
    return r;
}
inline BigInt euler_phi(const BigInt& n) {
    if (n.sign() <= 0) throw std::domain_error("euler_phi: n must be positive");
    return BigInt(euler_phi(n.to_i64()));
}

inline int two_valuation(int64_t n) {
    if (n == 0) throw std::domain_error("two_valuation: n must be nonzero");
    return __builtin_ctzll(static_cast<uint64_t>(n));
}
inline int two_valuation(const BigInt& n) {
    if (n.is_zero()) throw std::domain_error("two_valuation: n must be nonzero");
    return static_cast<int>(mpz_scan1(n.to_mpz().get_mpz_t(), 0));
}

// signed odd part: odd_part(-24) = -3
inline int64_t odd_part(int64_t n) { return n >> two_valuation(n); }
inline BigInt odd_part(const BigInt& n) {
    if (n.fits_i64()) return odd_part(n.to_i64());
    mpz_class r;
    mpz_tdiv_q_2exp(r.get_mpz_t(), n.to_mpz().get_mpz_t(), two_valuation(n));
    return BigInt(r);
}

// inverse of a modulo n in [0, |n|); the inverse mod 1 is taken to be 0
inline int64_t mod_inverse(int64_t a, int64_t n) {
    if (n == 0) throw std::domain_error("mod_inverse: modulus must be nonzero");
    n = n < 0 ? -n : n;
    __int128 r0 = n, r1 = mod64(a, n), s0 = 0, s1 = 1;
    while (r1 != 0) {
        __int128 q = r0 / r1, t = r0 - q * r1;
        r0 = r1;
        r1 = t;
        t = s0 - q * s1;
        s0 = s1;
        s1 = t;
    }
    if (r0 != 1) throw std::domain_error("mod_inverse: gcd(a, n) != 1");
    int64_t r = static_cast<int64_t>(s0 % n);
    return r < 0 ? r + n : r;
}
inline BigInt mod_inverse(const BigInt& a, const BigInt& n) {
    if (a.fits_i64() && n.fits_i64()) return mod_inverse(a.to_i64(), n.to_i64());
    mpz_class r;
    if (!mpz_invert(r.get_mpz_t(), a.to_mpz().get_mpz_t(), n.to_mpz().get_mpz_t()))
        throw std::domain_error("mod_inverse: gcd(a, n) != 1");
    return BigInt(r);
}

// Chinese remaindering for pairwise-coprime positive moduli; returns (x, M)
// with 0 <= x < M.
inline std::pair<BigInt, BigInt> crt(const std::vector<std::pair<BigInt, BigInt>>& congruences) {
    BigInt x = 0, m = 1;
    for (const auto& [r, n] : congruences) {
        if (n.sign() <= 0) throw std::domain_error("crt: moduli must be positive");
        if (gcd(m, n) != BigInt(1)) throw std::domain_error("crt: moduli must be pairwise coprime");
        // x + m*t = r (mod n)
        BigInt t = mod_floor((r - x) * mod_inverse(mod_floor(m, n), n), n);
        x = x + m * t;
        m = m * n;
        x = mod_floor(x, m);
    }
    return {x, m};
}

inline bool is_square(int64_t n) {
    if (n < 0) return false;
    int64_t r = static_cast<int64_t>(__builtin_sqrtl(static_cast<long double>(n)));
    while (r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r * r == n;
}

inline std::vector<int64_t> primes_up_to(int64_t bound) {
    std::vector<int64_t> ps;
    if (bound < 2) return ps;
    std::vector<bool> comp(static_cast<size_t>(bound) + 1, false);
    for (int64_t i = 2; i <= bound; ++i) {
        if (comp[i]) continue;
        ps.push_back(i);
        for (int64_t j = i * i; j <= bound; j += i) comp[j] = true;
    }
    return ps;
}

}  // namespace mtp
