#pragma once

// zeta(s) and zeta_2(s) = zeta(s)(1 - 2^{-s}) as truncated Euler products.
// Only used at Re(s) > 1, where the product converges absolutely.

#include "mtp/arith.hpp"

#include <complex>
#include <cstdint>
#include <mutex>
#include <stdexcept>
#include <vector>

namespace mtp {

using cplx = std::complex<double>;

inline constexpr int64_t kDefaultPrimeBound = 100000;

inline const std::vector<int64_t>& primes_cached(int64_t bound) {
    static std::mutex mu;
    static int64_t have = -1;
    static std::vector<int64_t> ps;
    std::lock_guard<std::mutex> lk(mu);
    if (bound > have) {
        ps = primes_up_to(bound);
        have = bound;
    }
    return ps;
}

// p^{-s} on the principal branch (p > 0 real)
inline cplx ppow_neg(double p, cplx s) { return std::exp(-s * std::log(p)); }

inline cplx zeta(cplx s, int64_t prime_bound = kDefaultPrimeBound) {
    if (s.real() <= 1.0) throw std::domain_error("zeta: Euler product needs Re(s) > 1");
    cplx r = 1.0;
    for (int64_t p : primes_cached(prime_bound)) {
        if (p > prime_bound) break;
        r /= (1.0 - ppow_neg(static_cast<double>(p), s));
    }
    return r;
}

inline cplx zeta2(cplx s, int64_t prime_bound = kDefaultPrimeBound) {
    return zeta(s, prime_bound) * (1.0 - ppow_neg(2.0, s));
}

// Neumaier-compensated complex accumulator; terms are added in caller order.
class KahanSum {
public:
    void add(cplx x) {
        add1(re_, cre_, x.real());
        add1(im_, cim_, x.imag());
    }
    cplx value() const { return {re_ + cre_, im_ + cim_}; }

private:
    static void add1(double& s, double& c, double x) {
        double t = s + x;
        if (std::abs(s) >= std::abs(x))
            c += (s - t) + x;
        else
            c += (x - t) + s;
        s = t;
    }
    double re_ = 0, cre_ = 0, im_ = 0, cim_ = 0;
};

}  // namespace mtp
