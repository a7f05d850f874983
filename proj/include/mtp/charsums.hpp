#pragma once

// Quadratic Gauss sums g(d,m,n), their dyadic refinements g_eps, and the
// Kloosterman-type sums K_kappa(n;4c).

#include "mtp/arith.hpp"
#include "mtp/cyclotomic.hpp"
#include "mtp/zeta.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>

namespace mtp {

// Is x -> (x/d) a well-defined function on (Z/n)^x ?  Every prime of d must
// divide n, and an odd power of 2 in d needs 8 | n. n = 1 is allowed (the unit
// group has the single class of 1, and we evaluate there).
inline bool gauss_character_defined(int64_t d, int64_t n) {
    if (n == 1) return true;
    for (auto [p, e] : factorize(d).factors) {
        if (n % p != 0) return false;
        if (p == 2 && (e & 1) && n % 8 != 0) return false;
    }
    return true;
}

// g(d,m,n) = sum_{x in (Z/n)^x} (x/d) e(mx/n)
inline CycElem gauss_g(int64_t d, int64_t m, int64_t n) {
    if (d < 1 || n < 1) throw std::domain_error("gauss_g: requires d >= 1 and n >= 1");
    if (!gauss_character_defined(d, n))
        throw std::domain_error("gauss_g: (x/d) is not a character mod n (requires d | n or rad(d) | n)");
    CycElem r(n);
    int64_t mm = mod64(m, n);
    for (int64_t x = 1; x <= n; ++x) {
        if (gcd64(x, n) != 1) continue;
        int k = kronecker(x, d);
        if (k) r.add_term(static_cast<int64_t>((static_cast<__int128>(mm) * x) % n), k);
    }
    return r;
}

// g_eps(2^i, m, 2^k): the same sum restricted to x = eps (mod 4)
inline CycElem gauss_g_even(int eps, int i, int64_t m, int k) {
    if (eps != 1 && eps != -1) throw std::domain_error("gauss_g_even: eps must be +1 or -1");
    if (i < 0) throw std::domain_error("gauss_g_even: i must be >= 0");
    if (!(k >= 3 || (k == 2 && i % 2 == 0)))
        throw std::domain_error("gauss_g_even: requires k >= 3, or k = 2 with i even");
    int64_t n = int64_t{1} << k;
    CycElem r(n);
    int64_t mm = mod64(m, n);
    int64_t start = eps == 1 ? 1 : 3;
    for (int64_t x = start; x < n; x += 4) {
        int c = (i % 2 == 0) ? 1 : kronecker(x, 2);
        r.add_term(static_cast<int64_t>((static_cast<__int128>(mm) * x) % n), c);
    }
    return r;
}

// i^e as an element of order 4
inline CycElem i_pow(int64_t e) { return root(4, mod64(e, 4)); }

// K_kappa(n; 4c) = sum_{d mod 4c} eps_d^{-kappa} (4c/d) e(nd/4c), eps_d = 1, i, 0
// for d = 1, 3 (mod 4) and d even.
inline CycElem kloosterman_K(int64_t kappa, int64_t n, int64_t c) {
    if (c < 1) throw std::domain_error("kloosterman_K: requires c >= 1");
    int64_t N = 4 * c;
    CycElem r(N);
    int64_t nn = mod64(n, N);
    for (int64_t d = 1; d < N; d += 2) {
        int k = kronecker(N, d);
        if (!k) continue;
        // eps_d^{-kappa} = i^{-kappa} when d = 3 (mod 4); i = zeta_{4c}^c
        int64_t e = (d % 4 == 3) ? c * mod64(-kappa, 4) : 0;
        r.add_term(e + static_cast<int64_t>((static_cast<__int128>(nn) * d) % N), k);
    }
    return r;
}

// (1 + i^{-kappa}) phi(4n)/2 if n is a square, else 0
inline CycElem kloosterman_zero_closed(int64_t kappa, int64_t n) {
    if (n < 1) throw std::domain_error("kloosterman_zero_closed: requires n >= 1");
    if (!is_square(n)) return CycElem(4);
    BigInt half = euler_phi(4 * n) / 2;
    return (root(4, 0) + i_pow(-kappa)).scale(half);
}

// a_{eps,nu}(n) truncated to c <= cutoff:
//   eps * i * 4^{-nu-1} * zeta_2(2nu+1) * sum_c c^{-nu-1} K_eps(-n; 4c)
inline cplx a_series_partial(int eps, cplx nu, int64_t n, int64_t cutoff, int64_t prime_bound = kDefaultPrimeBound) {
    if (eps != 1 && eps != -1) throw std::domain_error("a_series_partial: eps must be +1 or -1");
    if (nu.real() <= 1.0) throw std::domain_error("a_series_partial: requires Re(nu) > 1");
    if (cutoff <= 0) return 0.0;
    KahanSum acc;
    for (int64_t c = 1; c <= cutoff; ++c) {
        std::complex<long double> k = kloosterman_K(eps, -n, c).to_complex();
        acc.add(ppow_neg(static_cast<double>(c), nu + 1.0) * cplx(static_cast<double>(k.real()), static_cast<double>(k.imag())));
    }
    cplx pre = static_cast<double>(eps) * cplx(0, 1) * ppow_neg(4.0, nu + 1.0) * zeta2(2.0 * nu + 1.0, prime_bound);
    return pre * acc.value();
}

}  // namespace mtp
