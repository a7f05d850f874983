#pragma once

// The Banks-Levy-Sepanski 2-cocycle on SL(3,Q), the group law of the double
// cover, and the explicit Bruhat identities (with their epsilon closed forms)
// for (gamma', s)^{-1}(w_l, 1).

#include "mtp/arith.hpp"
#include "mtp/sl3.hpp"

#include <stdexcept>

namespace mtp {

inline int qsign(const Rational& x) { return sgn(x); }

// real Hilbert symbol on nonzero rationals
inline int hilbert_q(const Rational& a, const Rational& b) {
    if (a == 0 || b == 0) throw std::domain_error("hilbert symbol of zero");
    return (sgn(a) < 0 && sgn(b) < 0) ? -1 : 1;
}

struct DeltaDiag {
    Rational X1, X2, X3;
    Mat3 matrix() const { return Mat3::diag(X1 / X2, X2 / X3, X3); }
};

inline DeltaDiag delta(const Mat3& g) {
    RawPlucker p = plucker_from_matrix(g);
    auto first_nonzero = [](const Rational& x, const Rational& y, const Rational& z) {
        if (x != 0) return x;
        if (y != 0) return y;
        if (z != 0) return z;
        throw std::domain_error("delta: zero Plucker vector");
    };
    return {g.det(), first_nonzero(-p.a2p, p.b2p, -p.c2p), first_nonzero(-p.a1p, -p.b1p, -p.c1p)};
}

// sigma(t(a), t(b)) = (a1,b2)(a1,b3)(a2,b3)
inline int sigma_torus(const Mat3& s, const Mat3& t) {
    if (!s.is_diagonal() || !t.is_diagonal()) throw std::domain_error("sigma_torus: arguments must be diagonal");
    return hilbert_q(s(0, 0), t(1, 1)) * hilbert_q(s(0, 0), t(2, 2)) * hilbert_q(s(1, 1), t(2, 2));
}

namespace detail {

inline Mat3 neg(const Mat3& m) {
    Mat3 r = m;
    for (auto& x : r.a) x = -x;
    return r;
}

// sigma(w_alpha, h) = sigma(Delta(w_alpha h) Delta(h), -Delta(h))
inline int sigma_simple(const Mat3& w, const Mat3& h) {
    Mat3 dh = delta(h).matrix();
    return sigma_torus(delta(w * h).matrix() * dh, neg(dh));
}

}  // namespace detail

inline int sigma(const Mat3& g1, const Mat3& g2) {
    Bruhat b = bruhat_decompose(g1);
    Mat3 h = b.np * g2;
    int r = 1;
    for (size_t k = b.word.size(); k-- > 0;) {
        Mat3 w = b.word[k] == SimpleRefl::A1 ? w_alpha1() : w_alpha2();
        r *= detail::sigma_simple(w, h);
        h = w * h;
    }
    return r * sigma_torus(b.t, delta(h).matrix());
}

struct MetaElem {
    Mat3 g;
    int eps = 1;
};

inline MetaElem meta_mul(const MetaElem& x, const MetaElem& y) { return {x.g * y.g, x.eps * y.eps * sigma(x.g, y.g)}; }

inline MetaElem meta_inv(const MetaElem& x) {
    Mat3 gi = x.g.inverse();
    return {gi, x.eps * sigma(x.g, gi)};
}

// --- epsilon closed forms ---------------------------------------------------

inline int hil(const BigInt& a, const BigInt& b) { return hilbert_real(a, b); }

inline int epsilon_bigcell(const GammaPlucker& p, int s) { return hil(p.A1, -p.A2) * s; }
inline int epsilon_a1a2(const GammaPlucker& p, int s) { return hil(-p.B1, -p.A2) * s; }
inline int epsilon_a2a1(const GammaPlucker& p, int s) { return -hil(p.A1, -p.B2) * s; }
inline int epsilon_a1(const GammaPlucker& p, int s) { return -hil(-p.C1, -p.B2) * s; }
inline int epsilon_a2(const GammaPlucker& p, int s) { return hil(p.B1, -p.C2) * s; }

inline int epsilon_closed(const GammaPlucker& p, int s) {
    switch (classify_cell(p)) {
        case WeylCell::Long: return epsilon_bigcell(p, s);
        case WeylCell::Alpha1Alpha2: return epsilon_a1a2(p, s);
        case WeylCell::Alpha2Alpha1: return epsilon_a2a1(p, s);
        case WeylCell::Alpha1: return epsilon_a1(p, s);
        case WeylCell::Alpha2: return epsilon_a2(p, s);
        case WeylCell::B: break;
    }
    throw std::domain_error("epsilon_closed: no identity for the B cell");
}

// Right-hand side data of
//   (gamma', s)^{-1} (w_l, 1) = (P w_l, 1) n |t|^{-1} (sign t, eps)^{-1}
struct BruhatIdentity {
    Mat3 P, n, abs_t, sign_t;
};

inline BruhatIdentity bruhat_identity_data(const GammaPlucker& p) {
    Rational A1 = to_q(p.A1), B1 = to_q(p.B1), C1 = to_q(p.C1), A2 = to_q(p.A2), B2 = to_q(p.B2), C2 = to_q(p.C2);
    auto ab = [](const Rational& x) { return abs(x); };
    auto sg = [](const Rational& x) { return Rational(sgn(x)); };
    switch (classify_cell(p)) {
        case WeylCell::Long:
            return {{0, 0, -1, 0, -1, 0, -1, 0, 0},
                    Mat3::n(B1 / A1, -B2 / A2, C2 / (4 * A2)),
                    Mat3::diag(ab(4 * A1), ab(A2 / A1), 1 / ab(4 * A2)),
                    Mat3::diag(sg(A1), sg(A2 / A1), sg(1 / A2))};
        case WeylCell::Alpha1Alpha2:
            return {{0, 1, 0, 0, 0, 1, 1, 0, 0},
                    Mat3::n(0, -C2 / (4 * A2), B2 / A2),
                    Mat3::diag(ab(4 * B1), ab(A2 / B1), 1 / ab(4 * A2)),
                    Mat3::diag(sg(-B1), sg(A2 / B1), sg(-1 / A2))};
        case WeylCell::Alpha2Alpha1:
            return {{0, 0, 1, 1, 0, 0, 0, 1, 0},
                    Mat3::n(C1 / (4 * A1), 0, -B1 / A1),
                    Mat3::diag(ab(4 * A1), ab(B2 / A1), 1 / ab(4 * B2)),
                    Mat3::diag(sg(-A1), sg(B2 / A1), sg(-1 / B2))};
        case WeylCell::Alpha1:
            return {{0, -1, 0, -1, 0, 0, 0, 0, -1},
                    Mat3::n(0, -C2 / (4 * B2), 0),
                    Mat3::diag(ab(C1), ab(4 * B2 / C1), 1 / ab(4 * B2)),
                    Mat3::diag(sg(C1), sg(B2 / C1), sg(1 / B2))};
        case WeylCell::Alpha2:
            return {{-1, 0, 0, 0, 0, -1, 0, -1, 0},
                    Mat3::n(C1 / (4 * B1), 0, 0),
                    Mat3::diag(ab(4 * B1), ab(C2 / (4 * B1)), 1 / ab(C2)),
                    Mat3::diag(sg(B1), sg(C2 / B1), sg(1 / C2))};
        case WeylCell::B: break;
    }
    throw std::domain_error("bruhat_identity_data: no identity for the B cell");
}

struct IdentityCheck {
    bool matrix_ok = false;
    int eps_from_cocycle = 0;  // the eps forced by the group law
    int eps_closed = 0;
};

// Evaluates both sides of the identity for gamma' = coset_representative(p).
inline IdentityCheck check_bruhat_identity(const GammaPlucker& p, int s) {
    BruhatIdentity d = bruhat_identity_data(p);
    Mat3 gp = coset_representative(p);
    Mat3 wl = w_long();
    MetaElem lhs = meta_mul(meta_inv({gp, s}), {wl, 1});
    MetaElem rhs = meta_mul(meta_mul(meta_mul({d.P * wl, 1}, {d.n, 1}), {d.abs_t.inverse(), 1}), meta_inv({d.sign_t, 1}));
    IdentityCheck r;
    r.matrix_ok = lhs.g == rhs.g;
    r.eps_from_cocycle = lhs.eps * rhs.eps;
    r.eps_closed = epsilon_closed(p, s);
    return r;
}

}  // namespace mtp
