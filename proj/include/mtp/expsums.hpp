#pragma once

// The exponential sums
//   Sigma(A1,A2;m1,m2) = sum over S(A1,A2) of s(gamma) e(m1 B1/A1 + m2 B2/A2):
// brute force, prime-power closed forms, the twisted-multiplicative assembly,
// the BBFH-style rewriting and the m = 0 specialisations.

#include "mtp/arith.hpp"
#include "mtp/charsums.hpp"
#include "mtp/cosets.hpp"
#include "mtp/cyclotomic.hpp"
#include "mtp/splitting.hpp"

#include <array>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace mtp {

struct SigmaSpec {
    int64_t A1, A2, m1, m2;
};

inline int64_t sigma_order(int64_t A1, int64_t A2) { return lcm64(lcm64(4, A1 < 0 ? -A1 : A1), 4 * (A2 < 0 ? -A2 : A2)); }

namespace detail {

inline CycElem from_dense(int64_t N, const std::vector<int64_t>& acc) {
    CycElem r(N);
    for (int64_t j = 0; j < N; ++j)
        if (acc[j]) r.add_term(j, acc[j]);
    return r;
}

}  // namespace detail

// Sigma for several (m1,m2) at once from one pass over S(A1,A2).
inline std::vector<CycElem> sigma_bruteforce_multi(int64_t A1, int64_t A2, const std::vector<std::pair<int64_t, int64_t>>& ms,
                                                   int64_t cap = kBruteForceCap) {
    if (A1 == 0 || A2 == 0) throw std::domain_error("sigma_bruteforce: requires A1, A2 != 0");
    if (static_cast<__int128>(A1) * A2 > cap || -static_cast<__int128>(A1) * A2 > cap)
        throw std::domain_error("sigma_bruteforce: |A1*A2| exceeds the brute-force cap " + std::to_string(cap));
    int64_t N = sigma_order(A1, A2), f1 = N / A1, f2 = N / A2;
    std::vector<std::vector<int64_t>> acc(ms.size(), std::vector<int64_t>(static_cast<size_t>(N), 0));
    for_each_coset(A1, A2, [&](const P6& x) {
        int s = s_any(x.big());
        int64_t e1 = mod64(x.B1 * f1, N), e2 = mod64(x.B2 * f2, N);
        for (size_t t = 0; t < ms.size(); ++t) {
            int64_t j = mod64(static_cast<int64_t>((static_cast<__int128>(ms[t].first) * e1 + static_cast<__int128>(ms[t].second) * e2) % N), N);
            acc[t][j] += s;
        }
    });
    std::vector<CycElem> out;
    for (auto& a : acc) out.push_back(detail::from_dense(N, a));
    return out;
}

inline CycElem sigma_bruteforce(const SigmaSpec& q, int64_t cap = kBruteForceCap) {
    return sigma_bruteforce_multi(q.A1, q.A2, {{q.m1, q.m2}}, cap)[0];
}

// --- closed forms at an odd prime ---------------------------------------------

namespace detail {

inline CycElem g(int64_t d, int64_t m, int64_t n) { return gauss_g(d, mod64(m, n), n); }

inline CycElem integer(const BigInt& c) { return CycElem::integer(c); }

inline bool divides(int64_t d, int64_t m) { return m % d == 0; }

}  // namespace detail

inline CycElem sigma_closed_odd(int64_t p, int k, int l, int mu, int64_t m1, int64_t m2) {
    using detail::g;
    if (p < 3 || p % 2 == 0 || factorize(p).factors.size() != 1 || factorize(p).factors[0].second != 1)
        throw std::domain_error("sigma_closed_odd: p must be an odd prime");
    if (mu != 1 && mu != -1) throw std::domain_error("sigma_closed_odd: mu must be +1 or -1");
    if (l < 0 || k < l) throw std::domain_error("sigma_closed_odd: requires k >= l >= 0");
    int64_t pk = ipow64(p, k), pl = ipow64(p, l);
    if (k == 0) return detail::integer(mu == -1 ? 1 : 0);
    if (l == 0) {
        if (mod64(pk, 4) == mod64(mu, 4)) return CycElem(1);
        return g(pk, m1, pk);
    }
    if (k > l) {
        if (mod64(ipow64(p, k - l), 4) == mod64(mu, 4)) return CycElem(1);
        CycElem r = (g(pl, m2, pl) * g(pk, m1, ipow64(p, k - l))).scale(pl);
        CycElem tail(1);
        for (int i = 0; i < l; ++i)
            if ((l - i) % 2 == 0) tail += g(ipow64(p, i), m2, ipow64(p, i)) * g(pk, m1, ipow64(p, k - i));
        return r + tail.scale(euler_phi(pl));
    }
    // k = l
    if (mu == 1) return CycElem(1);
    CycElem r(1);
    for (int i = 1; i < k; ++i) {
        int64_t pi = ipow64(p, i);
        r += (g(pi, m2, pi) * g(ipow64(p, k - i), -m2, pi) * g(pk, m1, ipow64(p, k - i))).scale(ipow64(p, k - i));
    }
    if (k % 2 == 0) {
        int64_t c = (detail::divides(pk, m1) ? pk : 0) + (detail::divides(pk, m2) ? pk : 0) -
                    (detail::divides(pk / p, m1) ? pk / p : 0);
        r += detail::integer(BigInt(euler_phi(pk)) * BigInt(c));
    }
    return r;
}

// --- closed forms at p = 2 ----------------------------------------------------

namespace detail {

// g_eps(2^i, m, 2^j) summed over odd representatives x < 2^j with
// x = eps (mod 4). For j >= 3 (or j = 2, i even) this is gauss_g_even; for
// j <= 1 only x = 1 is available, as in the coset parametrisation.
inline CycElem geps(int eps, int i, int64_t m, int j) {
    if (j >= 3 || (j == 2 && i % 2 == 0)) return gauss_g_even(eps, i, mod64(m, int64_t{1} << j), j);
    if (j == 2) throw std::domain_error("g_eps(2^i, m, 4) needs i even");
    if (eps == -1) return CycElem(1);
    int64_t n = int64_t{1} << j;
    return root(n, mod64(m, n));
}

}  // namespace detail

inline CycElem sigma_closed_two(int k, int l, int mu, int64_t m1, int64_t m2) {
    using detail::g;
    using detail::geps;
    if (mu != 1 && mu != -1) throw std::domain_error("sigma_closed_two: mu must be +1 or -1");
    if (!(k > l && l >= 0) && !(k == l && k > 0)) throw std::domain_error("sigma_closed_two: requires k > l >= 0 or k = l > 0");
    if (k > l) {
        if (l <= 1) return CycElem(1);
        int d = k - l;
        CycElem r(1);
        for (int i = l % 2; i <= l - 2; i += 2) {
            if (d >= 2) {
                r += geps(1, k, m1, k - i) * geps(1, l, m2, i + 2) + (geps(-1, k, m1, k - i) * geps(-1, l, m2, i + 2)).scale(-mu);
            } else {
                r += geps(1, k, m1, k - i) * geps(-1, l, m2, i + 2) + (geps(-1, k, m1, k - i) * geps(1, l, m2, i + 2)).scale(-mu);
            }
        }
        int64_t c = int64_t{1} << l;
        if (d == 2 && l % 2) c = -c;
        if (d == 1 && l % 2 && mu == 1) c = -c;
        return r.scale(c);
    }
    if (k % 2) return CycElem(1);
    int64_t pk = int64_t{1} << k;
    if (mu == -1) {
        CycElem r = detail::integer((detail::divides(pk, m1) ? pk : 0) + (detail::divides(pk, m2) ? pk : 0) -
                                    (detail::divides(pk / 2, m1) ? pk / 2 : 0));
        for (int i = 1; i < k; ++i) {
            CycElem t = g(4, m1, int64_t{1} << (k - i)) * g(4, m2, int64_t{1} << i);
            r += i % 2 ? -t : t;
            if (detail::divides(int64_t{1} << (i - 1), m2)) r += g(4, m1, int64_t{1} << (k - i)).scale(int64_t{1} << (i - 1));
        }
        return r.scale(pk);
    }
    CycElem r(1);
    for (int i = 0; i < k; ++i) {
        CycElem a = geps(1, 2, m1, k - i) + (i % 2 ? geps(-1, 2, m1, k - i) : -geps(-1, 2, m1, k - i));
        CycElem b = geps(1, 2, m2, i + 1) + (i % 2 ? -geps(-1, 2, m2, i + 1) : geps(-1, 2, m2, i + 1));
        r += a * b;
    }
    return r.scale(pk);
}

// --- m = 0 closed forms -----------------------------------------------------

// Sigma(p^k, mu p^l; 0, 0) for a prime p and k >= l (k >= 1 when p = 2)
inline BigInt sigma_constant_prime_power(int64_t p, int k, int l, int mu) {
    if (k < l || l < 0) throw std::domain_error("sigma_constant_prime_power: requires k >= l >= 0");
    BigInt P(p);
    auto phi_pp = [&](int e) { return e == 0 ? BigInt(1) : pow(P, e - 1) * BigInt(p - 1); };
    if (p == 2) {
        if (k == 0) return BigInt(mu == -1 ? 1 : 0);
        if (k > l) {
            if (l <= 1 || k % 2 || l % 2 || mu == 1) return 0;
            return pow(BigInt(2), k + l - 1) * BigInt(l / 2);
        }
        if (k % 2 || mu == 1) return 0;
        return BigInt(k + 4) * pow(BigInt(2), 2 * k - 2);
    }
    if (k == 0) return BigInt(mu == -1 ? 1 : 0);
    if (mu == 1) return 0;
    if (l == 0) return k % 2 ? BigInt(0) : phi_pp(k);
    if (k > l) {
        if ((p % 4 == 3 && (k - l) % 2) || k % 2 || l % 2) return 0;
        return phi_pp(k - 1) * phi_pp(l) * (BigInt((l + 2) / 2) * P - BigInt((l - 2) / 2));
    }
    if (k % 2) return 0;
    BigInt pk2 = pow(P, k - 2);
    // phi(p^k) p^{k-2} ((k+2)/2 p^2 - (k-1) p + (k-2)/2)
    return phi_pp(k) * pk2 * (BigInt((k + 2) / 2) * P * P - BigInt(k - 1) * P + BigInt((k - 2) / 2));
}

// --- assembly by twisted multiplicativity -------------------------------------

namespace detail {

inline int64_t inv_or_one(int64_t a, int64_t n) {
    n = n < 0 ? -n : n;
    return n == 1 ? 1 : mod_inverse(mod64(a, n), n);
}

// Leaf callback signature: value at (p, k, l, mu, m1, m2) with k >= l.
template <class T, class Leaf, class Mul, class Scale>
T sigma_assemble(int64_t A1, int64_t A2, int64_t m1, int64_t m2, const Leaf& leaf, const Mul& mul, const Scale& scale, const T& zero) {
    if (A1 == 0 || A2 == 0) throw std::domain_error("sigma: requires A1, A2 != 0");
    if (mod64(A1 + A2, 4) != 0) return zero;
    int sign = 1;
    // Sigma(A1,A2;m1,m2) = Sigma(-A1,-A2;m1,-m2)
    if (A1 < 0) A1 = -A1, A2 = -A2, m2 = -m2;
    auto f1 = factorize(A1), f2 = factorize(A2);
    std::vector<int64_t> primes;
    for (auto& [p, e] : f1.factors) primes.push_back(p);
    for (auto& [p, e] : f2.factors)
        if (std::find(primes.begin(), primes.end(), p) == primes.end()) primes.push_back(p);
    std::sort(primes.begin(), primes.end());
    if (primes.size() <= 1) {
        int64_t p = primes.empty() ? 3 : primes[0];
        int k = 0, l = 0;
        for (int64_t a = A1; a % p == 0; a /= p) ++k;
        for (int64_t a = A2; a % p == 0; a /= p) ++l;
        int mu = A2 < 0 ? -1 : 1;
        if (k < l) {
            // Sigma(A1,A2;m1,m2) = (-A1,-A2) Sigma(A2,A1;-m2,-m1), then undo a negative A1
            sign = hilbert_real(-A1, -A2);
            if (mu > 0) return scale(leaf(p, l, k, 1, -m2, -m1), sign);
            return scale(leaf(p, l, k, -1, -m2, m1), sign);
        }
        if (primes.empty()) return scale(leaf(2, 0, 0, mu, m1, m2), sign);
        return scale(leaf(p, k, l, mu, m1, m2), sign);
    }
    // Peel the largest odd prime q: A1 = q^a alpha1, A2 = q^b alpha2.
    int64_t q = primes.back();
    int64_t qa = 1, qb = 1;
    for (int64_t a = A1; a % q == 0; a /= q) qa *= q;
    for (int64_t a = A2; a % q == 0; a /= q) qb *= q;
    int64_t alpha1 = A1 / qa, alpha2 = A2 / qb;
    if (alpha2 != 0 && two_valuation(alpha2) > two_valuation(alpha1)) {
        // swap roles so that alpha2 carries no more powers of 2 than alpha1
        int s = hilbert_real(-A1, -A2);
        return scale(sigma_assemble<T>(A2, A1, -m2, -m1, leaf, mul, scale, zero), s);
    }
    int64_t B1 = qa, B2 = qb;  // the odd prime-power part (positive)
    int mu = kronecker(-1, -B1 * B2);
    int twist = kronecker(alpha2, kronecker(-1, B1) * B1) * kronecker(alpha1, B2);
    int64_t n1 = mod64(inv_or_one(alpha1, B1) * mod64(m1, B1), B1);
    int64_t n2 = mod64(mu * inv_or_one(alpha2, B2) * mod64(m2, B2), B2);
    int64_t a1 = alpha1, a2 = alpha2 < 0 ? -alpha2 : alpha2;
    int64_t k1 = mod64(inv_or_one(B1, a1) * mod64(m1, a1), a1);
    int64_t k2 = mod64(kronecker(-1, B2) * inv_or_one(B2, a2) * mod64(m2, a2), a2);
    T left = sigma_assemble<T>(B1, mu * B2, n1, n2, leaf, mul, scale, zero);
    T right = sigma_assemble<T>(alpha1, -mu * alpha2, k1, k2, leaf, mul, scale, zero);
    return scale(mul(left, right), twist);
}

}  // namespace detail

inline CycElem sigma_leaf(int64_t p, int k, int l, int mu, int64_t m1, int64_t m2) {
    if (k == 0) return CycElem::integer(mu == -1 ? 1 : 0);
    return p == 2 ? sigma_closed_two(k, l, mu, m1, m2) : sigma_closed_odd(p, k, l, mu, m1, m2);
}

inline CycElem sigma_general(const SigmaSpec& q) {
    return detail::sigma_assemble<CycElem>(
        q.A1, q.A2, q.m1, q.m2, sigma_leaf, [](const CycElem& a, const CycElem& b) { return a * b; },
        [](const CycElem& a, int s) { return s == 1 ? a : -a; }, CycElem(1));
}

// Sigma(A1,A2;0,0), always a rational integer
inline BigInt sigma_constant(int64_t A1, int64_t A2) {
    auto leaf = [](int64_t p, int k, int l, int mu, int64_t, int64_t) { return sigma_constant_prime_power(p, k, l, mu); };
    return detail::sigma_assemble<BigInt>(
        A1, A2, 0, 0, leaf, [](const BigInt& a, const BigInt& b) { return a * b; },
        [](const BigInt& a, int s) { return s == 1 ? a : -a; }, BigInt(0));
}

// --- BBFH-style forms (odd p, m_i = p^{r_i}) ------------------------------------

inline CycElem sigma_bbfh_odd(int64_t p, int k, int l, int mu, int r1, int r2) {
    using detail::g;
    if (p < 3 || p % 2 == 0) throw std::domain_error("sigma_bbfh_odd: p must be an odd prime");
    if (r1 < 0 || r2 < 0) throw std::domain_error("sigma_bbfh_odd: requires r1, r2 >= 0");
    if (mu != 1 && mu != -1) throw std::domain_error("sigma_bbfh_odd: mu must be +1 or -1");
    auto pw = [&](int e, int64_t mod) {
        // p^e mod `mod`, e >= 0
        int64_t r = 1 % mod, b = p % mod;
        for (; e > 0; --e) r = static_cast<int64_t>(static_cast<__int128>(r) * b % mod);
        return r;
    };
    int64_t pk = ipow64(p, k);
    if (k > l && l >= 0) {
        if (mod64(ipow64(p, k - l), 4) != mod64(-mu, 4))
            throw std::domain_error("sigma_bbfh_odd: requires p^{k-l} = -mu (mod 4)");
        CycElem r(1);
        for (int i = 0; i <= l; ++i) {
            int64_t pi = ipow64(p, i), pli = ipow64(p, l - i);
            r += g(pi, pw(i, pi), pi) * g(pli, pw(r2, pli), pli) * g(pk, pw(r1 + l - i, pk), pk);
        }
        return r;
    }
    if (k == l && k > 0 && mu == -1) {
        // the minus sign sits on the second Gauss factor, as in the k = l closed form
        CycElem r(1);
        for (int i = 0; i < k; ++i) {
            int e = r2 + k - 2 * i;
            if (e < 0) continue;  // then i > r2 + 1 and g(p^{k-i}, p^{r2}, p^i) = 0
            int64_t pi = ipow64(p, i), pki = ipow64(p, k - i);
            r += g(pi, pw(r2, pi), pi) * g(pk, pw(r1 + i, pk), pk) * g(pki, -pw(e, pki), pki);
        }
        if (k <= r2) r += g(pk, 0, pk).scale(pk);
        return r;
    }
    throw std::domain_error("sigma_bbfh_odd: requires k > l >= 0 with p^{k-l} = -mu (mod 4), or k = l > 0 with mu = -1");
}

}  // namespace mtp
