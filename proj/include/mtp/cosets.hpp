#pragma once

// The parameter sets S(A1,A2): brute-force enumeration from the defining
// conditions, the closed-form families at prime powers, and the
// multiplicativity map phi.

#include "mtp/arith.hpp"
#include "mtp/sl3.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace mtp {

inline constexpr int64_t kBruteForceCap = 50000;  // |A1*A2|

struct P6 {
    int64_t A1, B1, C1, A2, B2, C2;
    GammaPlucker big() const { return {A1, B1, C1, A2, B2, C2}; }
    friend bool operator==(const P6&, const P6&) = default;
    friend auto operator<=>(const P6&, const P6&) = default;
};

inline P6 small(const GammaPlucker& p) {
    return {p.A1.to_i64(), p.B1.to_i64(), p.C1.to_i64(), p.A2.to_i64(), p.B2.to_i64(), p.C2.to_i64()};
}

struct CosetSet {
    BigInt A1, A2;
    std::vector<GammaPlucker> elements;  // sorted, no duplicates
    size_t duplicates = 0;               // repeats dropped while building
};

// 0 <= x/a < 1 for a != 0, i.e. x in [0,a) or (a,0]
inline bool in_unit_ratio(int64_t x, int64_t a) { return a > 0 ? (x >= 0 && x < a) : (x <= 0 && x > a); }

// Calls f on every element of S(A1,A2). For each (B1,B2) the congruence
// A1*C2 = -4*B1*B2 (mod A2) is solved directly, so the cost is about
// |A1*A2|*gcd(A1,A2) rather than |A1|*|A2|^2.
inline void for_each_coset(int64_t A1, int64_t A2, const std::function<void(const P6&)>& f) {
    if (A1 == 0 || A2 == 0) throw std::domain_error("enumerate: requires A1, A2 != 0");
    if (mod64(A1 + A2, 4) != 0) return;  // C_j = -1 (mod 4) forces A1 = -A2 (mod 4)
    int64_t a1 = A1 < 0 ? -A1 : A1, a2 = A2 < 0 ? -A2 : A2;
    int64_t s1 = A1 < 0 ? -1 : 1, s2 = A2 < 0 ? -1 : 1;
    int64_t g = gcd64(A1, A2), m = a2 / g;
    int64_t inv = mod_inverse(mod64(A1 / g, m), m);
    for (int64_t u1 = 0; u1 < a1; ++u1) {
        int64_t B1 = s1 * u1;
        for (int64_t u2 = 0; u2 < a2; ++u2) {
            int64_t B2 = s2 * u2;
            int64_t rhs = -4 * B1 * B2;
            if (rhs % g != 0) continue;
            int64_t c0 = m == 1 ? 0 : mod64(mod64(rhs / g, m) * inv, m);
            // t = |C2| with s2*t = c0 (mod m) and s2*t = 3 (mod 4)
            int64_t tr = s2 > 0 ? c0 : mod64(-c0, m), t4 = s2 > 0 ? 3 : 1;
            int64_t L = lcm64(m, 4), t0 = -1;
            for (int64_t c = tr; c < L; c += m)
                if ((c & 3) == t4) {
                    t0 = c;
                    break;
                }
            if (t0 < 0) continue;
            for (int64_t t = t0; t < 4 * a2; t += L) {
                int64_t C2 = s2 * t;
                if (gcd64(gcd64(A2, B2), C2) != 1) continue;
                int64_t num = -(A1 * C2 + 4 * B1 * B2);
                if (num % A2 != 0) continue;
                int64_t C1 = num / A2;
                if (mod64(C1, 4) != 3 || gcd64(gcd64(A1, B1), C1) != 1) continue;
                f(P6{A1, B1, C1, A2, B2, C2});
            }
        }
    }
}

inline CosetSet to_coset_set(int64_t A1, int64_t A2, std::vector<P6> v) {
    std::sort(v.begin(), v.end());
    size_t before = v.size();
    v.erase(std::unique(v.begin(), v.end()), v.end());
    CosetSet r{A1, A2, {}, before - v.size()};
    r.elements.reserve(v.size());
    for (auto& x : v) r.elements.push_back(x.big());
    return r;
}

inline CosetSet enumerate_bruteforce(const BigInt& A1b, const BigInt& A2b, int64_t cap = kBruteForceCap) {
    if (A1b.is_zero() || A2b.is_zero()) throw std::domain_error("enumerate_bruteforce: requires A1, A2 != 0");
    if (abs(A1b * A2b) > BigInt(cap))
        throw std::domain_error("enumerate_bruteforce: |A1*A2| exceeds the brute-force cap " + std::to_string(cap));
    int64_t A1 = A1b.to_i64(), A2 = A2b.to_i64();
    std::vector<P6> v;
    for_each_coset(A1, A2, [&](const P6& x) { v.push_back(x); });
    return to_coset_set(A1, A2, std::move(v));
}

// --- closed-form families ---------------------------------------------------

namespace detail {

// C1 from the relation A1*C2 + 4*B1*B2 + C1*A2 = 0
inline P6 complete(int64_t A1, int64_t B1, int64_t A2, int64_t B2, int64_t C2) {
    int64_t num = -(A1 * C2 + 4 * B1 * B2);
    if (num % A2 != 0) throw std::logic_error("closed family produced a non-integral C1");
    return {A1, B1, num / A2, A2, B2, C2};
}

// C2 = -1 (mod 4) with 0 <= C2/(4*A2) < 1
inline std::vector<int64_t> c2_range(int64_t A2, int64_t coprime_to = 1) {
    std::vector<int64_t> r;
    int64_t a = 4 * (A2 < 0 ? -A2 : A2), s = A2 < 0 ? -1 : 1;
    for (int64_t t = 0; t < a; ++t) {
        int64_t c = s * t;
        if (mod64(c, 4) == 3 && gcd64(c, coprime_to) == 1) r.push_back(c);
    }
    return r;
}

inline bool coprime(int64_t a, int64_t p) { return a % p != 0; }

}  // namespace detail

// S(A1,A2) for coprime A1, A2 with A1 + A2 = 0 (mod 4)
inline CosetSet enumerate_relprime(int64_t A1, int64_t A2) {
    if (gcd64(A1, A2) != 1 || mod64(A1 + A2, 4) != 0)
        throw std::domain_error("enumerate_relprime: requires (A1,A2) = 1 and A1 + A2 = 0 (mod 4)");
    std::vector<P6> v;
    int64_t a1 = A1 < 0 ? -A1 : A1, a2 = A2 < 0 ? -A2 : A2;
    int64_t s1 = A1 < 0 ? -1 : 1, s2 = A2 < 0 ? -1 : 1;
    int64_t inv = mod_inverse(A1, a2);
    for (int64_t u1 = 0; u1 < a1; ++u1) {
        int64_t B1 = s1 * u1;
        if (gcd64(B1, A1) != 1) continue;
        for (int64_t u2 = 0; u2 < a2; ++u2) {
            int64_t B2 = s2 * u2;
            if (gcd64(B2, A2) != 1) continue;
            int64_t target = mod64(-(inv % a2) * mod64(4 * B1 * B2, a2), a2);
            for (int64_t C2 : detail::c2_range(A2))
                if (mod64(C2, a2) == target) v.push_back(detail::complete(A1, B1, A2, B2, C2));
        }
    }
    return to_coset_set(A1, A2, std::move(v));
}

// The displayed families for S(p^k, mu p^l), k >= l. C1 is always recomputed
// from the relation.
inline CosetSet enumerate_closed(int64_t p, int k, int l, int mu) {
    if (mu != 1 && mu != -1) throw std::domain_error("enumerate_closed: mu must be +1 or -1");
    if (k < l || l < 0) throw std::domain_error("enumerate_closed: requires k >= l >= 0");
    if (factorize(p).factors.size() != 1 || factorize(p).factors[0].second != 1 || p < 2)
        throw std::domain_error("enumerate_closed: p must be prime");
    using detail::c2_range;
    using detail::complete;
    using detail::coprime;
    int64_t A1 = ipow64(p, k), A2 = mu * ipow64(p, l);
    std::vector<P6> v;
    if (mod64(A1 + A2, 4) != 0) return to_coset_set(A1, A2, {});

    if (p == 2) {
        if (k == 0) throw std::domain_error("enumerate_closed: p = 2 requires k >= 1");
        if (k > l && l < 2) return to_coset_set(A1, A2, {});
        if (k > l) {
            for (int i = 0; i <= l - 2; ++i) {
                int j = l - 2 - i;
                for (int64_t b1 = 1; b1 < (int64_t{1} << (k - i)); b1 += 2)
                    for (int64_t u = 1; u < (int64_t{1} << (l - j)); u += 2) {
                        int64_t b2 = mu * u;
                        if (mod64(b1 * b2, 4) != mod64(mu + (int64_t{1} << (k - l)), 4)) continue;
                        for (int64_t C2 : c2_range(A2)) v.push_back(complete(A1, b1 << i, A2, b2 * (int64_t{1} << j), C2));
                    }
            }
        } else if (mu == -1) {
            int64_t P = A1;
            for (int64_t C2 : c2_range(A2)) {
                v.push_back(complete(A1, 0, A2, 0, C2));
                for (int64_t u = 1; u < P; ++u) v.push_back(complete(A1, 0, A2, -u, C2));
                for (int64_t b = 1; b < P; ++b) v.push_back(complete(A1, b, A2, 0, C2));
                for (int i = 0; i < k; ++i)
                    for (int j = 0; j < k; ++j) {
                        if (i + j < k) continue;
                        for (int64_t b1 = 1; b1 < (int64_t{1} << (k - i)); b1 += 2)
                            for (int64_t u = 1; u < (int64_t{1} << (k - j)); u += 2)
                                v.push_back(complete(A1, b1 << i, A2, -u * (int64_t{1} << j), C2));
                    }
            }
        } else {
            for (int i = 0; i < k; ++i) {
                int j = k - 1 - i;
                for (int64_t b1 = 1; b1 < (int64_t{1} << (k - i)); b1 += 2)
                    for (int64_t b2 = 1; b2 < (int64_t{1} << (k - j)); b2 += 2)
                        for (int64_t C2 : c2_range(A2)) v.push_back(complete(A1, b1 << i, A2, b2 << j, C2));
            }
        }
        return to_coset_set(A1, A2, std::move(v));
    }

    // odd p
    if (l == 0) return enumerate_relprime(A1, A2);
    int64_t pl = ipow64(p, l);
    if (k > l) {
        // B2 = 0
        for (int64_t B1 = 0; B1 < A1; ++B1)
            if (coprime(B1, p))
                for (int64_t C2 : c2_range(A2, p)) v.push_back(complete(A1, B1, A2, 0, C2));
        // B1 = b1 p^l, B2 = b2 prime to p
        for (int64_t b1 = 1; b1 < ipow64(p, k - l); ++b1)
            if (coprime(b1, p))
                for (int64_t u = 1; u < pl; ++u)
                    if (coprime(u, p))
                        for (int64_t C2 : c2_range(A2)) v.push_back(complete(A1, b1 * pl, A2, mu * u, C2));
        // B1 = b1 p^i, B2 = b2 p^{l-i}, 0 < i < l
        for (int i = 1; i < l; ++i) {
            int64_t pi = ipow64(p, i), pli = ipow64(p, l - i);
            for (int64_t b1 = 1; b1 < ipow64(p, k - i); ++b1)
                if (coprime(b1, p))
                    for (int64_t u = 1; u < pi; ++u)
                        if (coprime(u, p))
                            for (int64_t C2 : c2_range(A2, p)) v.push_back(complete(A1, b1 * pi, A2, mu * u * pli, C2));
        }
        return to_coset_set(A1, A2, std::move(v));
    }
    // k = l: only mu = -1 survives the congruence test above
    int64_t P = A1;
    for (int64_t C2 : c2_range(A2, p)) {
        v.push_back(complete(A1, 0, A2, 0, C2));
        for (int64_t u = 1; u < P; ++u) v.push_back(complete(A1, 0, A2, -u, C2));
        for (int64_t b = 1; b < P; ++b) v.push_back(complete(A1, b, A2, 0, C2));
        for (int i = 1; i < k; ++i)
            for (int j = 1; j < k; ++j) {
                if (i + j < k) continue;
                int64_t pi = ipow64(p, i), pj = ipow64(p, j);
                for (int64_t b1 = 1; b1 < ipow64(p, k - i); ++b1) {
                    if (!coprime(b1, p)) continue;
                    for (int64_t u = 1; u < ipow64(p, k - j); ++u) {
                        if (!coprime(u, p)) continue;
                        int64_t b2 = -u;
                        if (i + j == k && mod64(C2 + 4 * b1 * b2, p) == 0) continue;
                        v.push_back(complete(A1, b1 * pi, A2, b2 * pj, C2));
                    }
                }
            }
    }
    return to_coset_set(A1, A2, std::move(v));
}

// --- multiplicativity -------------------------------------------------------

struct SplitHypotheses {
    int64_t A1, A2, alpha1, alpha2;
    int mu;
};

inline SplitHypotheses check_split_hypotheses(int64_t A1, int64_t A2, int64_t alpha1, int64_t alpha2) {
    if (A1 <= 0 || alpha1 <= 0) throw std::domain_error("phi_split: requires A1, alpha1 > 0");
    if (A2 == 0 || alpha2 == 0) throw std::domain_error("phi_split: requires A2, alpha2 != 0");
    if (A1 % 2 == 0 || A2 % 2 == 0) throw std::domain_error("phi_split: requires A1, A2 odd");
    if (gcd64(A1 * A2, alpha1 * alpha2) != 1) throw std::domain_error("phi_split: requires (A1*A2, alpha1*alpha2) = 1");
    if (mod64(A1 * alpha1 + A2 * alpha2, 4) != 0) throw std::domain_error("phi_split: requires A1*alpha1 + A2*alpha2 = 0 (mod 4)");
    return {A1, A2, alpha1, alpha2, kronecker(-1, -A1 * A2)};
}

// gamma = 1 (mod 4), gamma = alpha1 (mod A2), smallest positive
inline int64_t split_gamma(int64_t alpha1, int64_t A2) {
    auto [x, m] = crt({{BigInt(1), BigInt(4)}, {BigInt(mod64(alpha1, A2)), BigInt(A2 < 0 ? -A2 : A2)}});
    int64_t g = x.to_i64();
    return g == 0 ? m.to_i64() : g;
}

inline std::pair<GammaPlucker, GammaPlucker> phi_split(const GammaPlucker& xb, int64_t A1, int64_t A2, int64_t alpha1, int64_t alpha2) {
    SplitHypotheses h = check_split_hypotheses(A1, A2, alpha1, alpha2);
    P6 x = small(xb);
    if (x.A1 != A1 * alpha1 || x.A2 != A2 * alpha2) throw std::domain_error("phi_split: element is not in S(A1*alpha1, A2*alpha2)");
    int mu = h.mu;
    int64_t g = split_gamma(alpha1, A2);
    int64_t num = -A1 * g * x.C2 - 4 * x.B1 * x.B2;
    if (num % (mu * A2) != 0) throw std::logic_error("phi_split: non-integral C1 in first factor");
    GammaPlucker first{A1, x.B1, num / (mu * A2), mu * A2, x.B2, g * x.C2};
    int e = kronecker(-1, A2);
    GammaPlucker second{alpha1, x.B1, e * A2 * x.C1, -mu * alpha2, -e * mu * x.B2, -mu * e * A1 * x.C2};
    return {normalize_coset(first), normalize_coset(second)};
}

}  // namespace mtp
