#pragma once

// The splitting s : Gamma_1(4) -> {+-1} in Plucker coordinates, its symmetry
// laws and its twisted multiplicativity.

#include "mtp/arith.hpp"
#include "mtp/cosets.hpp"
#include "mtp/sl3.hpp"

#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace mtp {

// (a/b over n) for a rational a/b: (a/n)(b/n) after reducing a/b
inline int kronecker_ratio(const BigInt& a, const BigInt& b, const BigInt& n) {
    BigInt g = gcd(a, b);
    BigInt x = a / g, y = b / g;
    if (y.sign() < 0) x = -x, y = -y;
    if (gcd(y, n) != BigInt(1)) throw std::domain_error("kronecker_ratio: denominator not prime to the modulus");
    return kronecker(x, n) * kronecker(y, n);
}

// Closed form on the big cell for A1 > 0 and A2/(A1,A2) odd.
inline int s_bigcell(const GammaPlucker& p) {
    if (p.A1.sign() <= 0) throw std::domain_error("s_bigcell: requires A1 > 0");
    if (p.A2.is_zero()) throw std::domain_error("s_bigcell: requires A2 != 0");
    BigInt D = gcd(p.A1, p.A2);
    if ((p.A2 / D).is_even()) throw std::domain_error("s_bigcell: requires A2/(A1,A2) odd");
    BigInt D1 = gcd(D, p.B1), D2 = D / D1;
    BigInt b1 = p.B1 / D1;
    int eps = kronecker(BigInt(-1), b1);
    BigInt four_b2 = BigInt(4) * p.B2;
    if (!(four_b2 % D2).is_zero()) throw std::domain_error("s_bigcell: D2 does not divide 4*B2");
    BigInt a1 = p.A1 / D, a2 = p.A2 / D;
    return kronecker(BigInt(eps), -p.A1 * p.A2) * kronecker(a1, a2) * kronecker(b1, a1) *
           kronecker(four_b2 / D2, BigInt(p.A2.sign()) * a2) * kronecker(D1, p.C1) * kronecker(D2, p.C2);
}

// s on every cell. Big-cell inputs outside the closed form's domain are moved
// into it with S3-conjugation (s unchanged) and psi (s picks up (-A1,-A2)).
inline int s_any(const GammaPlucker& p) {
    switch (classify_cell(p)) {
        case WeylCell::B: return 1;
        case WeylCell::Alpha1: return kronecker(p.B2, -p.C2);
        case WeylCell::Alpha2: return kronecker(-p.B1, -p.C1);
        case WeylCell::Alpha1Alpha2: return kronecker_ratio(p.A2, p.B1, -p.C2) * kronecker(-p.B1, -p.C1);
        case WeylCell::Alpha2Alpha1:
            return hilbert_real(-p.A1, p.B2) * kronecker_ratio(-p.A1, p.B2, -p.C1) * kronecker(p.B2, -p.C2);
        case WeylCell::Long: break;
    }
    GammaPlucker q = p;
    int sign = 1;
    if (q.A1.sign() < 0) q = apply_S3(q);
    if ((q.A2 / gcd(q.A1, q.A2)).is_even()) {
        sign = hilbert_real(-q.A1, -q.A2);
        q = apply_psi(q);
        if (q.A1.sign() < 0) q = apply_S3(q);
    }
    return sign * s_bigcell(q);
}

inline int s_of_matrix(const Mat3& g) {
    if (!is_gamma14(g)) throw std::domain_error("s_of_matrix: matrix is not in Gamma_1(4)");
    return s_any(to_scaled(plucker_from_matrix(g)));
}

struct SymmetryReport {
    bool psi = true, s2 = true, s3 = true, shifts = true;
    bool ok() const { return psi && s2 && s3 && shifts; }
};

inline SymmetryReport check_symmetries(const GammaPlucker& p) {
    SymmetryReport r;
    int s = s_any(p);
    bool a1 = !p.A1.is_zero(), a2 = !p.A2.is_zero();
    if (a1 && a2) {
        r.psi = s_any(apply_psi(p)) == hilbert_real(-p.A1, -p.A2) * s;
        r.s3 = s_any(apply_S3(p)) == s;
        r.s2 = s_any(apply_S2(p)) == -(p.A1 * p.A2).sign() * s;
    } else if (a1 && !p.B2.is_zero()) {
        r.psi = s_any(apply_psi(p)) == hilbert_real(-p.A1, p.B2) * s;
    }
    static const int shifts[][3] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {-2, 3, -1}, {5, -1, 2}};
    for (auto& v : shifts)
        if (s_any(apply_n_conj(p, v[0], v[1], v[2])) != s) r.shifts = false;
    return r;
}

struct TwistMultReport {
    size_t checked = 0, failures = 0;
    bool injective = true, surjective = true;
    std::string first_failure;
    bool ok() const { return failures == 0 && injective && surjective; }
};

inline TwistMultReport check_twistmult(int64_t A1, int64_t A2, int64_t alpha1, int64_t alpha2) {
    SplitHypotheses h = check_split_hypotheses(A1, A2, alpha1, alpha2);
    if ((alpha2 / gcd64(alpha1, alpha2)) % 2 == 0)
        throw std::domain_error("check_twistmult: requires alpha2/(alpha1,alpha2) odd");
    int twist = kronecker(alpha2, kronecker(-1, A1) * A1) * kronecker(alpha1, A2);
    CosetSet big = enumerate_bruteforce(A1 * alpha1, A2 * alpha2);
    TwistMultReport r;
    std::set<std::pair<GammaPlucker, GammaPlucker>> images;
    for (const auto& x : big.elements) {
        auto [u, v] = phi_split(x, A1, A2, alpha1, alpha2);
        ++r.checked;
        if (!images.insert({u, v}).second) r.injective = false;
        if (s_any(x) != s_any(u) * s_any(v) * twist) {
            if (r.failures++ == 0) r.first_failure = x.str();
        }
    }
    size_t n1 = enumerate_bruteforce(A1, h.mu * A2).elements.size();
    size_t n2 = enumerate_bruteforce(alpha1, -h.mu * alpha2).elements.size();
    r.surjective = images.size() == n1 * n2;
    return r;
}

}  // namespace mtp
