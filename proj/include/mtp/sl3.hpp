#pragma once

// 3x3 rational matrices, Plucker coordinates of N\SL(3), Bruhat cells and the
// Gamma_infty\Gamma_1(4) coset representatives.

#include "mtp/arith.hpp"
#include "mtp/bigint.hpp"

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <ostream>
#include <random>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

namespace mtp {

using Rational = mpq_class;

inline Rational to_q(const BigInt& v) { return Rational(v.to_mpz()); }
inline BigInt num_of(const Rational& q) { return BigInt(q.get_num()); }

struct Mat3 {
    std::array<Rational, 9> a{};  // row-major

    Mat3() = default;
    Mat3(std::initializer_list<Rational> v) {
        if (v.size() != 9) throw std::invalid_argument("Mat3 needs 9 entries");
        size_t i = 0;
        for (auto& x : v) a[i++] = x;
    }
    static Mat3 identity() { return diag(1, 1, 1); }
    static Mat3 diag(const Rational& x, const Rational& y, const Rational& z) {
        Mat3 m;
        m(0, 0) = x;
        m(1, 1) = y;
        m(2, 2) = z;
        return m;
    }
    // upper unitriangular n(x,y,z) = [[1,x,z],[0,1,y],[0,0,1]]
    static Mat3 n(const Rational& x, const Rational& y, const Rational& z) {
        Mat3 m = identity();
        m(0, 1) = x;
        m(1, 2) = y;
        m(0, 2) = z;
        return m;
    }

    Rational& operator()(int i, int j) { return a[3 * i + j]; }
    const Rational& operator()(int i, int j) const { return a[3 * i + j]; }

    friend Mat3 operator*(const Mat3& x, const Mat3& y) {
        Mat3 r;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                Rational s = 0;
                for (int k = 0; k < 3; ++k) s += x(i, k) * y(k, j);
                r(i, j) = s;
            }
        return r;
    }
    friend bool operator==(const Mat3& x, const Mat3& y) { return x.a == y.a; }

    Rational det() const {
        const Mat3& m = *this;
        return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) - m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
               m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
    }
    Mat3 transpose() const {
        Mat3 r;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) r(i, j) = (*this)(j, i);
        return r;
    }
    Mat3 inverse() const {
        Rational d = det();
        if (d == 0) throw std::domain_error("Mat3::inverse: singular matrix");
        const Mat3& m = *this;
        Mat3 r;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                int i1 = (j + 1) % 3, i2 = (j + 2) % 3, j1 = (i + 1) % 3, j2 = (i + 2) % 3;
                r(i, j) = (m(i1, j1) * m(i2, j2) - m(i1, j2) * m(i2, j1)) / d;
            }
        return r;
    }
    bool is_integral() const {
        for (auto& x : a)
            if (x.get_den() != 1) return false;
        return true;
    }
    bool is_diagonal() const {
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                if (i != j && (*this)(i, j) != 0) return false;
        return true;
    }
    bool is_upper_unipotent() const {
        const Mat3& m = *this;
        return m(0, 0) == 1 && m(1, 1) == 1 && m(2, 2) == 1 && m(1, 0) == 0 && m(2, 0) == 0 && m(2, 1) == 0;
    }
    std::string str() const {
        std::string s = "[";
        for (int i = 0; i < 3; ++i) {
            s += i ? ",[" : "[";
            for (int j = 0; j < 3; ++j) s += (j ? "," : "") + (*this)(i, j).get_str();
            s += "]";
        }
        return s + "]";
    }
};

inline std::ostream& operator<<(std::ostream& os, const Mat3& m) { return os << m.str(); }

// Weyl representatives (fixed matrices)
inline Mat3 w_alpha1() { return {0, -1, 0, 1, 0, 0, 0, 0, 1}; }
inline Mat3 w_alpha2() { return {1, 0, 0, 0, 0, -1, 0, 1, 0}; }
inline Mat3 w_long() { return {0, 0, 1, 0, -1, 0, 1, 0, 0}; }
inline Mat3 S2() { return Mat3::diag(1, -1, 1); }
inline Mat3 S3() { return Mat3::diag(1, 1, -1); }

// --- Plucker coordinates ----------------------------------------------------

struct RawPlucker {
    Rational a1p, b1p, c1p, a2p, b2p, c2p;
    bool quadric_holds() const { return a1p * c2p + b1p * b2p + c1p * a2p == 0; }
};

inline RawPlucker plucker_from_matrix(const Mat3& m) {
    const Rational &d = m(1, 0), &e = m(1, 1), &f = m(1, 2), &g = m(2, 0), &h = m(2, 1), &i = m(2, 2);
    return {-g, -h, -i, -(d * h - e * g), d * i - f * g, -(e * i - f * h)};
}

struct GammaPlucker {
    BigInt A1, B1, C1, A2, B2, C2;

    friend bool operator==(const GammaPlucker&, const GammaPlucker&) = default;
    friend auto operator<=>(const GammaPlucker& x, const GammaPlucker& y) {
        return std::tie(x.A1, x.B1, x.C1, x.A2, x.B2, x.C2) <=> std::tie(y.A1, y.B1, y.C1, y.A2, y.B2, y.C2);
    }
    std::string str() const {
        return "(" + A1.str() + "," + B1.str() + "," + C1.str() + "," + A2.str() + "," + B2.str() + "," + C2.str() + ")";
    }
    bool relation_holds() const { return A1 * C2 + BigInt(4) * B1 * B2 + C1 * A2 == BigInt(0); }
    // relation, primitivity and C_j = -1 (mod 4)
    bool valid() const {
        return relation_holds() && gcd(gcd(A1, B1), C1) == BigInt(1) && gcd(gcd(A2, B2), C2) == BigInt(1) &&
               mod_floor(C1, 4) == BigInt(3) && mod_floor(C2, 4) == BigInt(3);
    }
};

inline std::ostream& operator<<(std::ostream& os, const GammaPlucker& p) { return os << p.str(); }

inline RawPlucker to_raw(const GammaPlucker& p) {
    return {to_q(BigInt(4) * p.A1), to_q(BigInt(4) * p.B1), to_q(p.C1), to_q(BigInt(4) * p.A2), to_q(BigInt(4) * p.B2), to_q(p.C2)};
}

// scaled coordinates; only defined when the raw A,B entries are multiples of 4
inline GammaPlucker to_scaled(const RawPlucker& r) {
    auto quarter = [](const Rational& x) {
        if (x.get_den() != 1 || mpz_divisible_ui_p(x.get_num_mpz_t(), 4) == 0)
            throw std::domain_error("to_scaled: raw A/B coordinate not divisible by 4");
        return num_of(x) / 4;
    };
    auto integer = [](const Rational& x) {
        if (x.get_den() != 1) throw std::domain_error("to_scaled: non-integral coordinate");
        return num_of(x);
    };
    return {quarter(r.a1p), quarter(r.b1p), integer(r.c1p), quarter(r.a2p), quarter(r.b2p), integer(r.c2p)};
}

enum class WeylCell { B, Alpha1, Alpha2, Alpha1Alpha2, Alpha2Alpha1, Long };

inline const char* cell_name(WeylCell c) {
    switch (c) {
        case WeylCell::B: return "B";
        case WeylCell::Alpha1: return "w_a1";
        case WeylCell::Alpha2: return "w_a2";
        case WeylCell::Alpha1Alpha2: return "w_a1w_a2";
        case WeylCell::Alpha2Alpha1: return "w_a2w_a1";
        case WeylCell::Long: return "w_l";
    }
    return "?";
}

// Cells by vanishing pattern of the bottom row (A1',B1') and of A2',B2'.
inline WeylCell classify_cell(const RawPlucker& p) {
    if (p.a1p != 0) return p.a2p != 0 ? WeylCell::Long : WeylCell::Alpha2Alpha1;
    if (p.b1p != 0) return p.a2p != 0 ? WeylCell::Alpha1Alpha2 : WeylCell::Alpha2;
    // bottom row is (0,0,*): the cell is decided by the second Plucker vector
    return p.b2p != 0 ? WeylCell::Alpha1 : WeylCell::B;
}
inline WeylCell classify_cell(const GammaPlucker& p) { return classify_cell(to_raw(p)); }

// Table of Gamma_infty\Gamma representatives
inline Mat3 coset_representative(const GammaPlucker& p) {
    Rational A1 = to_q(p.A1), B1 = to_q(p.B1), C1 = to_q(p.C1), A2 = to_q(p.A2), B2 = to_q(p.B2), C2 = to_q(p.C2);
    auto need = [](bool ok, const char* what) {
        if (!ok) throw std::domain_error(std::string("coset_representative: ") + what);
    };
    switch (classify_cell(p)) {
        case WeylCell::B:
            need(C1 != 0 && C2 != 0, "B cell requires C1, C2 != 0");
            return Mat3::diag(Rational(-1) / C2, C2 / C1, -C1);
        case WeylCell::Alpha1:
            need(C1 != 0 && B2 != 0, "w_a1 cell requires C1, B2 != 0");
            return Mat3{0, -1, 0, -1, 0, 0, 0, 0, -1} * Mat3{4 * B2 / C1, -C2 / C1, 0, 0, 1 / (4 * B2), 0, 0, 0, C1};
        case WeylCell::Alpha2:
            need(B1 != 0 && C2 != 0, "w_a2 cell requires B1, C2 != 0");
            return Mat3{-1, 0, 0, 0, 0, -1, 0, -1, 0} * Mat3{1 / C2, 0, 0, 0, 4 * B1, C1, 0, 0, C2 / (4 * B1)};
        case WeylCell::Alpha1Alpha2:
            need(B1 != 0 && A2 != 0, "w_a1w_a2 cell requires B1, A2 != 0");
            return Mat3{0, 0, 1, 1, 0, 0, 0, 1, 0} *
                   Mat3{A2 / B1, 0, -C2 / (4 * B1), 0, -4 * B1, 4 * B1 * B2 / A2, 0, 0, Rational(-1) / (4 * A2)};
        case WeylCell::Alpha2Alpha1:
            need(A1 != 0 && B2 != 0, "w_a2w_a1 cell requires A1, B2 != 0");
            return Mat3{0, 1, 0, 0, 0, 1, 1, 0, 0} * Mat3{-4 * A1, -4 * B1, -C1, 0, Rational(-1) / (4 * B2), 0, 0, 0, B2 / A1};
        case WeylCell::Long:
            return Mat3{0, 0, -1, 0, -1, 0, -1, 0, 0} * Mat3{4 * A1, 4 * B1, C1, 0, A2 / A1, -B2 / A1, 0, 0, 1 / (4 * A2)};
    }
    throw std::logic_error("unreachable");
}

// --- coordinate symmetries --------------------------------------------------

// coordinates of n g n^{-1}, n = n(x,y,z)
inline GammaPlucker apply_n_conj(const GammaPlucker& p, const BigInt& x, const BigInt& y, const BigInt& z) {
    BigInt four = 4;
    return {p.A1,
            p.B1 - p.A1 * x,
            p.C1 - four * p.B1 * y + four * p.A1 * (x * y - z),
            p.A2,
            p.B2 + p.A2 * y,
            p.C2 + four * p.B2 * x + four * p.A2 * z};
}
inline GammaPlucker apply_S3(const GammaPlucker& p) { return {-p.A1, -p.B1, p.C1, -p.A2, p.B2, p.C2}; }
inline GammaPlucker apply_S2(const GammaPlucker& p) { return {p.A1, -p.B1, p.C1, p.A2, -p.B2, p.C2}; }
// psi: g -> w_l (g^T)^{-1} w_l^{-1}
inline GammaPlucker apply_psi(const GammaPlucker& p) { return {p.A2, -p.B2, p.C2, p.A1, -p.B1, p.C1}; }

// conjugation by T = t(1, 1/D2, 1/D); D | (A1, A2), D1 = (D, B1), D2 = D/D1
inline GammaPlucker apply_T_descent(const GammaPlucker& p, const BigInt& D) {
    if (D.sign() <= 0) throw std::domain_error("apply_T_descent: D must be positive");
    if (!(p.A1 % D).is_zero() || !(p.A2 % D).is_zero()) throw std::domain_error("apply_T_descent: D must divide (A1, A2)");
    BigInt D1 = gcd(D, p.B1), D2 = D / D1;
    // raw B2' = 4B2/D2; the image lies in Gamma_1(4) iff D2 | B2
    if (!(p.B2 % D2).is_zero()) throw std::domain_error("apply_T_descent: D2 must divide B2");
    GammaPlucker r{p.A1 / D, p.B1 / D1, p.C1, p.A2 / D, p.B2 / D2, p.C2};
    return r;
}

// Reduce (B1, B2, C2) into the fundamental domain B1/A1, B2/A2, C2/(4A2) in [0,1)
// using Gamma_infty double-coset moves. Requires A1, A2 != 0.
inline GammaPlucker normalize_coset(const GammaPlucker& p) {
    if (p.A1.is_zero() || p.A2.is_zero()) throw std::domain_error("normalize_coset: requires A1, A2 != 0");
    // B1 - A1 x in [0,|A1|) scaled by sign(A1): choose x = floor(B1 / A1)
    BigInt x = floor_div(p.B1, p.A1);
    // B2 + A2 y: choose y = -floor(B2 / A2)
    BigInt y = -floor_div(p.B2, p.A2);
    // C2 + 4 B2 x + 4 A2 z: z = -floor((C2 + 4 B2 x) / (4 A2))
    BigInt c2x = p.C2 + BigInt(4) * p.B2 * x;
    BigInt z = -floor_div(c2x, BigInt(4) * p.A2);
    return apply_n_conj(p, x, y, z);
}

inline bool in_fundamental_domain(const GammaPlucker& p) {
    auto in01 = [](const BigInt& num, const BigInt& den) {
        // 0 <= num/den < 1
        if (den.sign() > 0) return num.sign() >= 0 && num < den;
        return num.sign() <= 0 && num > den;
    };
    return in01(p.B1, p.A1) && in01(p.B2, p.A2) && in01(p.C2, BigInt(4) * p.A2);
}

// --- Bruhat decomposition ---------------------------------------------------

enum class SimpleRefl { A1, A2 };

struct Bruhat {
    Mat3 n, t;                     // n unipotent upper, t diagonal
    std::vector<SimpleRefl> word;  // reduced word; w = product of the representatives
    Mat3 np;                       // n' unipotent upper
    Mat3 w() const {
        Mat3 r = Mat3::identity();
        for (auto s : word) r = r * (s == SimpleRefl::A1 ? w_alpha1() : w_alpha2());
        return r;
    }
};

// Reduced words for the six permutations, keyed by the column of the pivot in
// rows 1..3 (perm[i] = column of the nonzero entry of row i).
inline std::vector<SimpleRefl> weyl_word_for(const std::array<int, 3>& perm) {
    using S = SimpleRefl;
    if (perm == std::array<int, 3>{0, 1, 2}) return {};
    if (perm == std::array<int, 3>{1, 0, 2}) return {S::A1};
    if (perm == std::array<int, 3>{0, 2, 1}) return {S::A2};
    if (perm == std::array<int, 3>{2, 0, 1}) return {S::A1, S::A2};
    if (perm == std::array<int, 3>{1, 2, 0}) return {S::A2, S::A1};
    if (perm == std::array<int, 3>{2, 1, 0}) return {S::A1, S::A2, S::A1};
    throw std::logic_error("weyl_word_for: not a permutation");
}

// g = n t w n' with t diagonal and w the product of the fixed representatives.
// Pivots are taken from the bottom row upwards at the leftmost nonzero entry.
inline Bruhat bruhat_decompose(const Mat3& g) {
    if (g.det() == 0) throw std::domain_error("bruhat_decompose: singular matrix");
    Mat3 m = g;
    Mat3 L = Mat3::identity();  // accumulated row operations: L g R = monomial
    Mat3 R = Mat3::identity();  // accumulated column operations
    std::array<int, 3> perm{};
    std::array<bool, 3> used{};
    for (int row = 2; row >= 0; --row) {
        // clear entries of this row in columns already pivoted (rows below)
        for (int r2 = row + 1; r2 <= 2; ++r2) {
            int c = perm[r2];
            if (m(row, c) == 0) continue;
            Rational f = m(row, c) / m(r2, c);
            Mat3 e = Mat3::identity();
            e(row, r2) = -f;
            m = e * m;
            L = e * L;
        }
        int piv = -1;
        for (int c = 0; c < 3; ++c)
            if (!used[c] && m(row, c) != 0) {
                piv = c;
                break;
            }
        if (piv < 0) throw std::logic_error("bruhat_decompose: no pivot");
        perm[row] = piv;
        used[piv] = true;
        // clear the rest of the row with column ops col_j += x col_piv (j > piv)
        for (int c = piv + 1; c < 3; ++c) {
            if (m(row, c) == 0) continue;
            Rational f = m(row, c) / m(row, piv);
            Mat3 e = Mat3::identity();
            e(piv, c) = -f;
            m = m * e;
            R = R * e;
        }
    }
    Bruhat b;
    b.word = weyl_word_for(perm);
    Mat3 w = b.w();
    b.t = m * w.inverse();
    if (!b.t.is_diagonal()) throw std::logic_error("bruhat_decompose: torus part not diagonal");
    b.n = L.inverse();
    b.np = R.inverse();
    return b;
}

// --- random Gamma_1(4) elements --------------------------------------------

inline Mat3 elementary(int i, int j, const BigInt& k) {
    Mat3 e = Mat3::identity();
    e(i, j) = to_q(k);
    return e;
}

// product of random elementary matrices e_ij(k) (i<j) and e_ij(4k) (i>j)
inline Mat3 random_gamma14(uint64_t seed, int64_t size_bound = 3, int steps = 6) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int64_t> kd(-size_bound, size_bound);
    std::uniform_int_distribution<int> pos(0, 5);
    static constexpr int ij[6][2] = {{0, 1}, {0, 2}, {1, 2}, {1, 0}, {2, 0}, {2, 1}};
    Mat3 g = Mat3::identity();
    for (int s = 0; s < steps; ++s) {
        int which = pos(rng);
        int64_t k = kd(rng);
        int i = ij[which][0], j = ij[which][1];
        g = g * elementary(i, j, i < j ? BigInt(k) : BigInt(4 * k));
    }
    return g;
}

// random det-1 rational matrix: six rational elementary factors, then a
// diagonal with random signs and magnitudes
inline Mat3 random_rational_sl3(uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> num(-5, 5), den(1, 4), pos(0, 5), sg(0, 3);
    static constexpr int ij[6][2] = {{0, 1}, {0, 2}, {1, 2}, {1, 0}, {2, 0}, {2, 1}};
    Mat3 g = Mat3::identity();
    for (int s = 0; s < 6; ++s) {
        Mat3 e = Mat3::identity();
        int w = pos(rng);
        Rational q(num(rng), den(rng));
        q.canonicalize();
        e(ij[w][0], ij[w][1]) = q;
        g = g * e;
    }
    int signs = sg(rng);
    Rational x(den(rng), den(rng)), y(den(rng), den(rng));
    x.canonicalize();
    y.canonicalize();
    if (signs & 1) x = -x;
    if (signs & 2) y = -y;
    return g * Mat3::diag(x, y, 1 / (x * y));
}

inline bool is_gamma14(const Mat3& g) {
    if (!g.is_integral() || g.det() != 1) return false;
    auto m4 = [&](int i, int j) { return mod_floor(num_of(g(i, j)), 4); };
    return m4(0, 0) == BigInt(1) && m4(1, 1) == BigInt(1) && m4(2, 2) == BigInt(1) && m4(1, 0).is_zero() &&
           m4(2, 0).is_zero() && m4(2, 1).is_zero();
}

}  // namespace mtp
