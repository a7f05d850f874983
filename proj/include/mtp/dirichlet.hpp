#pragma once

// Numerical side of the constant term: Euler factors of the big-cell
// Dirichlet series, the zeta ratios attached to each Weyl cell, and truncated
// series checks against the closed forms.

#include "mtp/arith.hpp"
#include "mtp/charsums.hpp"
#include "mtp/expsums.hpp"
#include "mtp/zeta.hpp"

#include <array>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace mtp {

inline constexpr double kPoleTolerance = 1e-9;

struct Lambda {
    cplx l1, l2, l3;
    Lambda(cplx a, cplx b, cplx c) : l1(a), l2(b), l3(c) {
        if (std::abs(a + b + c) > 1e-12) throw std::domain_error("Lambda: requires l1 + l2 + l3 = 0");
    }
    // from (l1, l2) with l3 = -l1 - l2
    static Lambda from_two(cplx a, cplx b) { return {a, b, -a - b}; }
    cplx d12() const { return l1 - l2; }
    cplx d23() const { return l2 - l3; }
    cplx d13() const { return l1 - l3; }
    // (lambda, h_alpha) for alpha = e_i - e_j, 0-based indices
    cplx pairing(int i, int j) const {
        const cplx v[3] = {l1, l2, l3};
        return v[i] - v[j];
    }
};

namespace detail {

inline cplx guarded_denominator(double p, cplx z, const char* who) {
    cplx d = 1.0 - ppow_neg(p, z);
    if (std::abs(d) < kPoleTolerance)
        throw std::domain_error(std::string(who) + ": evaluation point within " + std::to_string(kPoleTolerance) + " of a pole");
    return d;
}

inline void require_gaps(const Lambda& lam, double floor, const char* who) {
    if (lam.d12().real() <= floor || lam.d23().real() <= floor)
        throw std::domain_error(std::string(who) + ": requires Re(l1-l2), Re(l2-l3) > " + std::to_string(floor));
}

}  // namespace detail

// prod over x in {l1-l2, l2-l3, l1-l3} of (1 - p^{-2x-1}) / (1 - p^{-2x})
inline cplx euler_factor_odd(int64_t p, const Lambda& lam) {
    if (p < 3 || p % 2 == 0) throw std::domain_error("euler_factor_odd: p must be an odd prime");
    double P = static_cast<double>(p);
    cplx r = 1.0;
    for (cplx x : {lam.d12(), lam.d23(), lam.d13()})
        r *= (1.0 - ppow_neg(P, 2.0 * x + 1.0)) / detail::guarded_denominator(P, 2.0 * x, "euler_factor_odd");
    return r;
}

// 1 - 2^{-2(l1-l2)} - 2^{-2(l2-l3)} + 6 * 2^{-2(l1-l3+1)}
inline cplx dyadic_numerator(const Lambda& lam) {
    return 1.0 - ppow_neg(2.0, 2.0 * lam.d12()) - ppow_neg(2.0, 2.0 * lam.d23()) + 6.0 * ppow_neg(2.0, 2.0 * (lam.d13() + 1.0));
}

// F_{l,2} = 2^{2+2(l1-l3)} * dyadic_numerator
inline cplx F_long_2(const Lambda& lam) { return std::exp((2.0 + 2.0 * lam.d13()) * std::log(2.0)) * dyadic_numerator(lam); }

inline cplx euler_factor_two(const Lambda& lam) {
    cplx r = dyadic_numerator(lam);
    for (cplx x : {lam.d12(), lam.d23(), lam.d13()}) r /= detail::guarded_denominator(2.0, 2.0 * x, "euler_factor_two");
    return r;
}

inline cplx euler_factor(int64_t p, const Lambda& lam) { return p == 2 ? euler_factor_two(lam) : euler_factor_odd(p, lam); }

// sum_{k,l >= 0, k+l <= max_total} p^{-2k(1+l1-l2)} p^{-2l(1+l2-l3)} Sigma(p^{2k}, -p^{2l}; 0, 0)
inline cplx euler_factor_series(int64_t p, const Lambda& lam, int max_total) {
    double P = static_cast<double>(p);
    KahanSum acc;
    for (int k = 0; k <= max_total; ++k)
        for (int l = 0; k + l <= max_total; ++l) {
            // Sigma(A1,-A2;0,0) = Sigma(A2,-A1;0,0)
            BigInt s = sigma_constant_prime_power(p, 2 * std::max(k, l), 2 * std::min(k, l), -1);
            if (s.is_zero()) continue;
            cplx w = ppow_neg(P, 2.0 * k * (1.0 + lam.d12())) * ppow_neg(P, 2.0 * l * (1.0 + lam.d23()));
            acc.add(w * static_cast<double>(s.to_long_double()));
        }
    return acc.value();
}

// X(x) = 4^{-1-x} zeta(2x) / zeta_2(2x+1)
inline cplx zeta_ratio(cplx x, int64_t prime_bound = kDefaultPrimeBound) {
    detail::guarded_denominator(2.0, 2.0 * x, "zeta_ratio");
    return ppow_neg(4.0, 1.0 + x) * zeta(2.0 * x, prime_bound) / zeta2(2.0 * x + 1.0, prime_bound);
}

struct SeriesCheck {
    cplx series, closed;
    double error;  // absolute for squarephi, relative for bigcell
};

// sum_{k <= cutoff} phi(4k^2)/2 (2k)^{-2s}  vs  2^{-2s} zeta(2s-2) / zeta_2(2s-1)
inline SeriesCheck squarephi_check(cplx s, int64_t cutoff, int64_t prime_bound = kDefaultPrimeBound) {
    if (s.real() <= 1.5) throw std::domain_error("squarephi_check: requires Re(s) > 3/2");
    KahanSum acc;
    for (int64_t k = 1; k <= cutoff; ++k) {
        double half_phi = static_cast<double>(euler_phi(4 * k * k) / 2);
        acc.add(half_phi * ppow_neg(2.0 * static_cast<double>(k), 2.0 * s));
    }
    cplx rhs = ppow_neg(2.0, 2.0 * s) * zeta(2.0 * s - 2.0, prime_bound) / zeta2(2.0 * s - 1.0, prime_bound);
    return {acc.value(), rhs, std::abs(acc.value() - rhs)};
}

// Partial big-cell series sum_{A1,A2 <= cutoff} |4A1|^{-1-l1+l2} |4A2|^{-1-l2+l3} Sigma(A1,-A2;0,0)
// against 4^{-1-(l1-l2)} 4^{-1-(l2-l3)} prod_p euler_factor. Only squares
// contribute: Sigma(A1,-A2;0,0) = 0 unless A1 and A2 are both squares.
inline SeriesCheck bigcell_series_check(const Lambda& lam, int64_t cutoff, int64_t prime_bound = kDefaultPrimeBound) {
    detail::require_gaps(lam, 1.0, "bigcell_series_check");
    cplx e1 = -1.0 - lam.d12(), e2 = -1.0 - lam.d23();
    KahanSum acc;
    for (int64_t a = 1; a * a <= cutoff; ++a)
        for (int64_t b = 1; b * b <= cutoff; ++b) {
            BigInt s = sigma_constant(a * a, -(b * b));
            if (s.is_zero()) continue;
            cplx w = std::exp(e1 * std::log(4.0 * a * a)) * std::exp(e2 * std::log(4.0 * b * b));
            acc.add(w * static_cast<double>(s.to_long_double()));
        }
    cplx closed = ppow_neg(4.0, 1.0 + lam.d12()) * ppow_neg(4.0, 1.0 + lam.d23());
    for (int64_t p : primes_cached(prime_bound)) {
        if (p > prime_bound) break;
        closed *= euler_factor(p, lam);
    }
    cplx series = acc.value();
    return {series, closed, std::abs(series - closed) / std::abs(closed)};
}

// sum_{B2 <= cutoff} (4B2)^{-1-l2+l3} K_{-1}(m1; 4B2)
inline cplx semidegenerate_series(const Lambda& lam, int64_t m1, int64_t cutoff) {
    if (lam.d23().real() <= 1.0) throw std::domain_error("semidegenerate_series: requires Re(l2-l3) > 1");
    KahanSum acc;
    for (int64_t c = 1; c <= cutoff; ++c) {
        auto k = kloosterman_K(-1, m1, c).to_complex();
        acc.add(ppow_neg(4.0 * static_cast<double>(c), 1.0 + lam.d23()) * cplx(static_cast<double>(k.real()), static_cast<double>(k.imag())));
    }
    return acc.value();
}

// m1 = 0 value of the semidegenerate series: (1+i) 4^{-1-t} zeta(2t)/zeta_2(2t+1), t = l2 - l3
inline cplx semidegenerate_limit(const Lambda& lam, int64_t prime_bound = kDefaultPrimeBound) {
    return cplx(1, 1) * zeta_ratio(lam.d23(), prime_bound);
}

// --- constant-term coefficients ------------------------------------------

using Root = std::pair<int, int>;  // e_i - e_j, i < j, 0-based
using Vec2 = std::array<cplx, 2>;

struct CellCoefficient {
    std::string cell;
    std::vector<Root> roots;  // positive roots contributing a zeta ratio
    cplx coefficient;         // scalar multiplying v
    Vec2 v;                   // the vector paired with (f1, f2)
};

// signed permutation matrices of the six summands, in displayed order
inline const std::array<std::array<int, 9>, 6>& weyl_prime() {
    static const std::array<std::array<int, 9>, 6> w = {{
        {1, 0, 0, 0, 1, 0, 0, 0, 1},
        {0, -1, 0, -1, 0, 0, 0, 0, 1},
        {1, 0, 0, 0, 0, -1, 0, -1, 0},
        {0, 0, 1, 1, 0, 0, 0, 1, 0},
        {0, 1, 0, 0, 0, 1, 1, 0, 0},
        {0, 0, -1, 0, -1, 0, -1, 0, 0},
    }};
    return w;
}

inline const std::array<const char*, 6>& weyl_prime_names() {
    static const std::array<const char*, 6> n = {"id", "w_a1", "w_a2", "w_a1w_a2", "w_a2w_a1", "w_l"};
    return n;
}

namespace detail {

// column images: perm[j] = row of the nonzero entry in column j
using Perm = std::array<int, 3>;

inline Perm perm_of(const std::array<int, 9>& m) {
    Perm p{};
    for (int j = 0; j < 3; ++j)
        for (int i = 0; i < 3; ++i)
            if (m[3 * i + j]) p[j] = i;
    return p;
}

inline Perm compose(const Perm& a, const Perm& b) { return {a[b[0]], a[b[1]], a[b[2]]}; }  // a after b

inline Perm inverse(const Perm& a) {
    Perm r{};
    for (int j = 0; j < 3; ++j) r[a[j]] = j;
    return r;
}

// Phi+ cap u Phi+, with u acting on characters of the diagonal torus by
// alpha -> alpha o Ad(u)^{-1}; e_i - e_j lies in u Phi+ iff u(i) < u(j).
inline std::vector<Root> positive_meet(const Perm& u) {
    std::vector<Root> out;
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            if (u[i] < u[j]) out.push_back({i, j});
    return out;
}

}  // namespace detail

enum class RootSetReading { WInverseWl, WWl };

// Positive roots Phi+ cap (w^{-1} w_l) Phi+ (default) or Phi+ cap (w w_l) Phi+.
inline std::vector<Root> cell_roots(size_t idx, RootSetReading reading) {
    detail::Perm w = detail::perm_of(weyl_prime()[idx]);
    detail::Perm wl = detail::perm_of(weyl_prime()[5]);
    detail::Perm u = reading == RootSetReading::WInverseWl ? detail::compose(detail::inverse(w), wl) : detail::compose(w, wl);
    return detail::positive_meet(u);
}

// Succinct form: prod_{alpha} X((lambda, h_alpha)) paired with v_w.
inline std::vector<CellCoefficient> constant_term_coefficients(const Lambda& lam, RootSetReading reading = RootSetReading::WInverseWl,
                                                               int64_t prime_bound = kDefaultPrimeBound) {
    const cplx I(0, 1);
    cplx F = F_long_2(lam);
    const std::array<Vec2, 6> v = {{{1.0, 0.0}, {0.0, 1.0 + I}, {I, -1.0}, {1.0 + I, 1.0 + I}, {-1.0 + I, 1.0 - I}, {F * I, -F * I}}};
    std::vector<CellCoefficient> out;
    for (size_t w = 0; w < 6; ++w) {
        CellCoefficient c{weyl_prime_names()[w], cell_roots(w, reading), 1.0, v[w]};
        for (auto [i, j] : c.roots) c.coefficient *= zeta_ratio(lam.pairing(i, j), prime_bound);
        out.push_back(c);
    }
    return out;
}

// Long form, summand by summand, as (scalar) * (f1, f2)-coefficients.
inline std::vector<Vec2> constant_term_long_form(const Lambda& lam, int64_t prime_bound = kDefaultPrimeBound) {
    const cplx I(0, 1);
    cplx x12 = zeta_ratio(lam.d12(), prime_bound), x23 = zeta_ratio(lam.d23(), prime_bound), x13 = zeta_ratio(lam.d13(), prime_bound);
    cplx zr12 = x12 / ppow_neg(4.0, 1.0 + lam.d12()), zr23 = x23 / ppow_neg(4.0, 1.0 + lam.d23()), zr13 = x13 / ppow_neg(4.0, 1.0 + lam.d13());
    cplx wl = I * ppow_neg(4.0, 1.0 + lam.d12()) * ppow_neg(4.0, 1.0 + lam.d23()) * dyadic_numerator(lam) * zr12 * zr23 * zr13;
    return {
        Vec2{1.0, 0.0},
        Vec2{0.0, (1.0 + I) * x23},
        Vec2{I * x12, -x12},
        Vec2{(1.0 + I) * x13 * x23, (1.0 + I) * x13 * x23},
        Vec2{-(1.0 - I) * x13 * x12, (1.0 - I) * x13 * x12},
        Vec2{wl, -wl},
    };
}

struct CoefficientAgreement {
    double max_error = 0;
    std::array<double, 6> per_cell{};
};

inline CoefficientAgreement compare_coefficient_forms(const Lambda& lam, RootSetReading reading = RootSetReading::WInverseWl,
                                                      int64_t prime_bound = kDefaultPrimeBound) {
    auto succ = constant_term_coefficients(lam, reading, prime_bound);
    auto lng = constant_term_long_form(lam, prime_bound);
    CoefficientAgreement r;
    for (size_t w = 0; w < 6; ++w) {
        double e = 0;
        for (int t = 0; t < 2; ++t) {
            cplx a = succ[w].coefficient * succ[w].v[t], b = lng[w][t];
            e = std::max(e, std::abs(a - b) / (std::abs(b) > 0 ? std::abs(b) : 1.0));  // relative
        }
        r.per_cell[w] = e;
        r.max_error = std::max(r.max_error, e);
    }
    return r;
}

}  // namespace mtp
