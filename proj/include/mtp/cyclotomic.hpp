#pragma once

// Exact elements of Z[zeta_N], stored as sparse coefficient maps on the
// powers zeta_N^j. Elements of different orders are combined by lifting both
// into the lcm order.

#include "mtp/arith.hpp"
#include "mtp/bigint.hpp"

#include <cmath>
#include <complex>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>
#include <unordered_map>
#include <vector>

namespace mtp {

using IntPoly = std::vector<BigInt>;  // coefficient of x^i at index i

class CycElem {
public:
    CycElem() = default;
    explicit CycElem(int64_t order) : order_(order) {
        if (order < 1) throw std::domain_error("CycElem: order must be >= 1");
    }
    CycElem(int64_t order, std::map<int64_t, BigInt> coeffs) : CycElem(order) {
        for (auto& [j, c] : coeffs) add_term(j, c);
    }

    static CycElem integer(const BigInt& c) {
        CycElem r(1);
        r.add_term(0, c);
        return r;
    }

    int64_t order() const { return order_; }
    const std::map<int64_t, BigInt>& coeffs() const { return coeffs_; }
    bool is_empty() const { return coeffs_.empty(); }

    void add_term(int64_t j, const BigInt& c) {
        if (c.is_zero()) return;
        j = mod64(j, order_);
        auto it = coeffs_.find(j);
        if (it == coeffs_.end()) {
            coeffs_.emplace(j, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) coeffs_.erase(it);
        }
    }

    CycElem lift(int64_t new_order) const {
        if (new_order % order_ != 0) throw std::domain_error("CycElem::lift: new order must be a multiple");
        int64_t f = new_order / order_;
        CycElem r(new_order);
        for (auto& [j, c] : coeffs_) r.coeffs_.emplace(j * f, c);
        return r;
    }

    // smallest order the element can be written in without changing coefficients
    CycElem compact() const {
        int64_t g = order_;
        for (auto& [j, c] : coeffs_) g = gcd64(g, j);
        if (g <= 1) return *this;
        CycElem r(order_ / g);
        for (auto& [j, c] : coeffs_) r.coeffs_.emplace(j / g, c);
        return r;
    }

    CycElem operator-() const {
        CycElem r(order_);
        for (auto& [j, c] : coeffs_) r.coeffs_.emplace(j, -c);
        return r;
    }

    friend CycElem operator+(const CycElem& a, const CycElem& b) {
        int64_t n = lcm64(a.order_, b.order_);
        CycElem r = a.lift(n);
        int64_t f = n / b.order_;
        for (auto& [j, c] : b.coeffs_) r.add_term(j * f, c);
        return r;
    }
    friend CycElem operator-(const CycElem& a, const CycElem& b) { return a + (-b); }
    friend CycElem operator*(const CycElem& a, const CycElem& b) {
        int64_t n = lcm64(a.order_, b.order_);
        int64_t fa = n / a.order_, fb = n / b.order_;
        CycElem r(n);
        for (auto& [i, x] : a.coeffs_)
            for (auto& [j, y] : b.coeffs_) r.add_term(i * fa + j * fb, x * y);
        return r;
    }
    CycElem& operator+=(const CycElem& o) { return *this = *this + o; }
    CycElem& operator-=(const CycElem& o) { return *this = *this - o; }
    CycElem& operator*=(const CycElem& o) { return *this = *this * o; }

    CycElem scale(const BigInt& k) const {
        CycElem r(order_);
        if (k.is_zero()) return r;
        for (auto& [j, c] : coeffs_) r.coeffs_.emplace(j, c * k);
        return r;
    }

    std::complex<long double> to_complex() const {
        long double re = 0, im = 0;
        for (auto& [j, c] : coeffs_) {
            long double t = 2.0L * std::numbers::pi_v<long double> * static_cast<long double>(j) / static_cast<long double>(order_);
            long double v = c.to_long_double();
            re += v * std::cos(t);
            im += v * std::sin(t);
        }
        return {re, im};
    }

private:
    int64_t order_ = 1;
    std::map<int64_t, BigInt> coeffs_;
};

inline CycElem root(int64_t n, int64_t j) {
    CycElem r(n);
    r.add_term(j, 1);
    return r;
}

inline CycElem add(const CycElem& a, const CycElem& b) { return a + b; }
inline CycElem neg(const CycElem& a) { return -a; }
inline CycElem mul(const CycElem& a, const CycElem& b) { return a * b; }
inline CycElem scale(const CycElem& a, const BigInt& k) { return a.scale(k); }

// --- cyclotomic polynomials (memoized) -------------------------------------

namespace detail {

inline IntPoly poly_trim(IntPoly p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
    return p;
}

// exact quotient of a by a monic polynomial b
inline IntPoly poly_div_exact(IntPoly a, const IntPoly& b) {
    size_t db = b.size() - 1;
    if (a.size() < b.size()) return {};
    IntPoly q(a.size() - db);
    for (size_t i = a.size(); i-- > db;) {
        BigInt c = a[i];
        q[i - db] = c;
        if (c.is_zero()) continue;
        for (size_t k = 0; k <= db; ++k) a[i - db + k] -= c * b[k];
    }
    return poly_trim(q);
}

}  // namespace detail

inline IntPoly cyclotomic_poly(int64_t n) {
    if (n < 1) throw std::domain_error("cyclotomic_poly: N must be >= 1");
    static std::mutex mu;
    static std::unordered_map<int64_t, IntPoly> cache;
    {
        std::lock_guard<std::mutex> lk(mu);
        if (auto it = cache.find(n); it != cache.end()) return it->second;
    }
    IntPoly p(static_cast<size_t>(n) + 1, BigInt(0));
    p[0] = -1;
    p[n] = 1;
    for (int64_t d = 1; d < n; ++d)
        if (n % d == 0) p = detail::poly_div_exact(p, cyclotomic_poly(d));
    std::lock_guard<std::mutex> lk(mu);
    cache.emplace(n, p);
    return p;
}

// Zero test by reduction modulo Phi_N. Kept as the reference route; is_zero
// below is the fast path and the two are checked against each other in tests.
inline bool is_zero_by_remainder(const CycElem& v) {
    if (v.is_empty()) return true;
    CycElem c = v.compact();
    int64_t n = c.order();
    IntPoly phi = cyclotomic_poly(n);
    size_t deg = phi.size() - 1;
    IntPoly a(static_cast<size_t>(n), BigInt(0));
    for (auto& [j, x] : c.coeffs()) a[j] = x;
    for (size_t i = a.size(); i-- > deg;) {
        BigInt t = a[i];
        if (t.is_zero()) continue;
        for (size_t k = 0; k <= deg; ++k) a[i - deg + k] -= t * phi[k];
    }
    for (size_t i = 0; i < deg && i < a.size(); ++i)
        if (!a[i].is_zero()) return false;
    return true;
}

// Zero test by reduction to a Z-basis. For each prime p | N the relation
// sum_{t<p} zeta^{j + tN/p} = 0 is used to clear every exponent whose
// "top digit" along p is p-1; the surviving exponents form a basis of
// Z[zeta_N] (the powerful basis, up to Galois twist), so the element is zero
// iff nothing survives.
inline bool is_zero(const CycElem& v) {
    if (v.is_empty()) return true;
    CycElem c = v.compact();
    int64_t n = c.order();
    std::vector<BigInt> a(static_cast<size_t>(n), BigInt(0));
    for (auto& [j, x] : c.coeffs()) a[j] = x;
    for (auto [p, e] : factorize(n).factors) {
        int64_t q = ipow64(p, e), top = q / p, step = n / p;
        for (int64_t j = 0; j < n; ++j) {
            if ((j % q) / top != p - 1 || a[j].is_zero()) continue;
            BigInt t = a[j];
            a[j] = 0;
            for (int64_t k = 1; k < p; ++k) a[(j + k * step) % n] -= t;
        }
    }
    for (auto& x : a)
        if (!x.is_zero()) return false;
    return true;
}

inline bool equal(const CycElem& a, const CycElem& b) { return is_zero(a - b); }

// If the element is a rational integer, return it.
inline bool as_integer(const CycElem& v, BigInt& out) {
    // candidate from the real part, then confirmed exactly
    BigInt guess(static_cast<long long>(std::llround(v.to_complex().real())));
    if (!is_zero(v - CycElem::integer(guess))) return false;
    out = guess;
    return true;
}

}  // namespace mtp
