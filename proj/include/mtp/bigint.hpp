#pragma once

// Signed arbitrary-precision integer. Values that fit in int64 live inline;
// anything larger spills into a GMP mpz. Every operation renormalizes, so a
// value has exactly one representation (and zero is always the inline 0).

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <memory>
#include <ostream>
#include <stdexcept>
#include <string>

namespace mtp {

class BigInt {
public:
    BigInt() = default;
    BigInt(int v) : small_(v) {}
    BigInt(long v) : small_(v) {}
    BigInt(long long v) : small_(v) {}
    BigInt(unsigned v) : small_(v) {}
    explicit BigInt(const mpz_class& z) { assign(z); }
    explicit BigInt(const std::string& s) {
        mpz_class z;
        if (s.empty() || z.set_str(s, 10) != 0) throw std::invalid_argument("BigInt: bad integer literal '" + s + "'");
        assign(z);
    }

    BigInt(const BigInt& o) : small_(o.small_), big_(o.big_ ? std::make_unique<mpz_class>(*o.big_) : nullptr) {}
    BigInt(BigInt&&) noexcept = default;
    BigInt& operator=(const BigInt& o) {
        if (this != &o) {
            small_ = o.small_;
            big_ = o.big_ ? std::make_unique<mpz_class>(*o.big_) : nullptr;
        }
        return *this;
    }
    BigInt& operator=(BigInt&&) noexcept = default;

    bool is_small() const { return !big_; }
    bool fits_i64() const { return !big_; }
    int64_t to_i64() const {
        if (big_) throw std::overflow_error("BigInt does not fit in int64");
        return small_;
    }
    mpz_class to_mpz() const {
        if (big_) return *big_;
        mpz_class z;
        // mpz_set_si takes long, which is 64-bit on the targets we build for
        mpz_set_si(z.get_mpz_t(), static_cast<long>(small_));
        return z;
    }
    double to_double() const { return big_ ? big_->get_d() : static_cast<double>(small_); }
    long double to_long_double() const { return big_ ? static_cast<long double>(big_->get_d()) : static_cast<long double>(small_); }
    std::string str() const { return big_ ? big_->get_str(10) : std::to_string(small_); }

    int sign() const { return big_ ? sgn(*big_) : (small_ > 0) - (small_ < 0); }
    bool is_zero() const { return !big_ && small_ == 0; }
    bool is_odd() const { return big_ ? mpz_odd_p(big_->get_mpz_t()) != 0 : (small_ & 1) != 0; }
    bool is_even() const { return !is_odd(); }

    BigInt operator-() const {
        if (!big_ && small_ != INT64_MIN) return BigInt(-small_);
        return BigInt(mpz_class(-to_mpz()));
    }

    friend BigInt operator+(const BigInt& a, const BigInt& b) {
        int64_t r;
        if (!a.big_ && !b.big_ && !__builtin_add_overflow(a.small_, b.small_, &r)) return BigInt(r);
        return BigInt(mpz_class(a.to_mpz() + b.to_mpz()));
    }
    friend BigInt operator-(const BigInt& a, const BigInt& b) {
        int64_t r;
        if (!a.big_ && !b.big_ && !__builtin_sub_overflow(a.small_, b.small_, &r)) return BigInt(r);
        return BigInt(mpz_class(a.to_mpz() - b.to_mpz()));
    }
    friend BigInt operator*(const BigInt& a, const BigInt& b) {
        int64_t r;
        if (!a.big_ && !b.big_ && !__builtin_mul_overflow(a.small_, b.small_, &r)) return BigInt(r);
        return BigInt(mpz_class(a.to_mpz() * b.to_mpz()));
    }
    // truncating division, as for built-in integers
    friend BigInt operator/(const BigInt& a, const BigInt& b) {
        if (b.is_zero()) throw std::domain_error("BigInt: division by zero");
        if (!a.big_ && !b.big_ && !(a.small_ == INT64_MIN && b.small_ == -1)) return BigInt(a.small_ / b.small_);
        mpz_class q;
        mpz_tdiv_q(q.get_mpz_t(), a.to_mpz().get_mpz_t(), b.to_mpz().get_mpz_t());
        return BigInt(q);
    }
    friend BigInt operator%(const BigInt& a, const BigInt& b) {
        if (b.is_zero()) throw std::domain_error("BigInt: division by zero");
        if (!a.big_ && !b.big_) return b.small_ == -1 ? BigInt(0) : BigInt(a.small_ % b.small_);
        mpz_class r;
        mpz_tdiv_r(r.get_mpz_t(), a.to_mpz().get_mpz_t(), b.to_mpz().get_mpz_t());
        return BigInt(r);
    }

    BigInt& operator+=(const BigInt& o) { return *this = *this + o; }
    BigInt& operator-=(const BigInt& o) { return *this = *this - o; }
    BigInt& operator*=(const BigInt& o) { return *this = *this * o; }
    BigInt& operator/=(const BigInt& o) { return *this = *this / o; }
    BigInt& operator%=(const BigInt& o) { return *this = *this % o; }

    friend bool operator==(const BigInt& a, const BigInt& b) {
        if (!a.big_ && !b.big_) return a.small_ == b.small_;
        if (!a.big_ || !b.big_) return false;  // canonical form: a big value never fits int64
        return *a.big_ == *b.big_;
    }
    friend std::strong_ordering operator<=>(const BigInt& a, const BigInt& b) {
        if (!a.big_ && !b.big_) return a.small_ <=> b.small_;
        int c = cmp(a.to_mpz(), b.to_mpz());
        return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
    }

    friend std::ostream& operator<<(std::ostream& os, const BigInt& v) { return os << v.str(); }

private:
    void assign(const mpz_class& z) {
        if (mpz_fits_slong_p(z.get_mpz_t())) {
            small_ = mpz_get_si(z.get_mpz_t());
            big_.reset();
        } else {
            small_ = 0;
            big_ = std::make_unique<mpz_class>(z);
        }
    }

    int64_t small_ = 0;
    std::unique_ptr<mpz_class> big_;
};

inline BigInt abs(const BigInt& a) { return a.sign() < 0 ? -a : a; }

// floor division and the matching non-negative remainder (for b > 0)
inline BigInt floor_div(const BigInt& a, const BigInt& b) {
    if (a.fits_i64() && b.fits_i64()) {
        int64_t x = a.to_i64(), y = b.to_i64();
        if (y == 0) throw std::domain_error("BigInt: division by zero");
        if (!(x == INT64_MIN && y == -1)) {
            int64_t q = x / y;
            if ((x % y != 0) && ((x < 0) != (y < 0))) --q;
            return q;
        }
    }
    if (b.is_zero()) throw std::domain_error("BigInt: division by zero");
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), a.to_mpz().get_mpz_t(), b.to_mpz().get_mpz_t());
    return BigInt(q);
}

inline BigInt mod_floor(const BigInt& a, const BigInt& b) { return a - floor_div(a, b) * b; }

inline BigInt gcd(const BigInt& a, const BigInt& b) {
    if (a.fits_i64() && b.fits_i64()) {
        int64_t x = a.to_i64(), y = b.to_i64();
        if (x != INT64_MIN && y != INT64_MIN) {
            x = x < 0 ? -x : x;
            y = y < 0 ? -y : y;
            while (y) {
                int64_t t = x % y;
                x = y;
                y = t;
            }
            return x;
        }
    }
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), a.to_mpz().get_mpz_t(), b.to_mpz().get_mpz_t());
    return BigInt(g);
}

inline BigInt pow(const BigInt& base, unsigned long e) {
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), base.to_mpz().get_mpz_t(), e);
    return BigInt(r);
}

}  // namespace mtp
