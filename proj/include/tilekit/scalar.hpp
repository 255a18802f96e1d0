#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>

namespace tilekit {

// Exact number of the form (a + b*sqrt(2)) / 2^k with integer a, b and k >= 0.
// Canonical form: k == 0, or a and b not both even.  All four tilings live in
// this ring; chair/rp/pinwheel coordinates keep b == 0.
class Scalar {
public:
    Scalar() : a_(0), b_(0), k_(0) {}
    Scalar(long v) : a_(v), b_(0), k_(0) {}  // NOLINT(google-explicit-constructor)
    Scalar(mpz_class a, mpz_class b, unsigned k) : a_(std::move(a)), b_(std::move(b)), k_(k) {
        normalize();
    }

    static Scalar sqrt2() { return Scalar(0, 1, 0); }
    static Scalar half() { return Scalar(1, 0, 1); }

    const mpz_class& a() const { return a_; }
    const mpz_class& b() const { return b_; }
    unsigned k() const { return k_; }

    bool is_zero() const { return a_ == 0 && b_ == 0; }
    bool is_rational() const { return b_ == 0; }
    bool is_integer() const { return b_ == 0 && k_ == 0; }

    friend Scalar operator+(const Scalar& x, const Scalar& y) {
        unsigned k = std::max(x.k_, y.k_);
        mpz_class ax = x.a_ << (k - x.k_), bx = x.b_ << (k - x.k_);
        mpz_class ay = y.a_ << (k - y.k_), by = y.b_ << (k - y.k_);
        return Scalar(ax + ay, bx + by, k);
    }
    friend Scalar operator-(const Scalar& x, const Scalar& y) { return x + (-y); }
    Scalar operator-() const {
        Scalar r;
        r.a_ = -a_;
        r.b_ = -b_;
        r.k_ = k_;
        return r;
    }
    friend Scalar operator*(const Scalar& x, const Scalar& y) {
        // (a + b*s)(c + d*s) = (ac + 2bd) + (ad + bc)*s
        return Scalar(x.a_ * y.a_ + 2 * x.b_ * y.b_, x.a_ * y.b_ + x.b_ * y.a_, x.k_ + y.k_);
    }
    Scalar& operator+=(const Scalar& y) { return *this = *this + y; }
    Scalar& operator-=(const Scalar& y) { return *this = *this - y; }
    Scalar& operator*=(const Scalar& y) { return *this = *this * y; }

    // Exact division by a small positive integer; the quotient must stay in the
    // ring.  Used by the substitution rules whose contraction denominators (2,
    // 5) always cancel against the seed transform.
    Scalar div_exact(long d) const {
        if (d <= 0) throw std::invalid_argument("Scalar::div_exact: divisor must be positive");
        if (d == 1) return *this;
        long two = 0;
        long rest = d;
        while (rest % 2 == 0) {
            rest /= 2;
            ++two;
        }
        Scalar r;
        if (rest != 1) {
            if (a_ % rest != 0 || b_ % rest != 0)
                throw std::domain_error("Scalar::div_exact: value not divisible by " + std::to_string(d));
            r.a_ = a_ / rest;
            r.b_ = b_ / rest;
        } else {
            r.a_ = a_;
            r.b_ = b_;
        }
        r.k_ = k_ + static_cast<unsigned>(two);
        r.normalize();
        return r;
    }

    // Exact sign of a + b*sqrt(2); the denominator is positive.
    int sign() const {
        int sa = sgn(a_), sb = sgn(b_);
        if (sb == 0) return sa;
        if (sa == 0) return sb;
        if (sa == sb) return sa;
        // opposite signs: compare a^2 with 2 b^2 (sqrt(2) irrational, never equal)
        mpz_class a2 = a_ * a_, b2 = 2 * b_ * b_;
        int c = cmp(a2, b2);
        if (c == 0) throw std::logic_error("Scalar::sign: a^2 == 2 b^2 with nonzero parts");
        return c > 0 ? sa : sb;
    }

    friend bool operator==(const Scalar& x, const Scalar& y) {
        return x.k_ == y.k_ && x.a_ == y.a_ && x.b_ == y.b_;
    }
    friend std::strong_ordering operator<=>(const Scalar& x, const Scalar& y) {
        if (x == y) return std::strong_ordering::equal;
        int s = (x - y).sign();
        return s < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    }

    double to_double() const {
        return (a_.get_d() + b_.get_d() * 1.41421356237309504880) / std::ldexp(1.0, static_cast<int>(k_));
    }

    std::size_t hash() const {
        std::size_t h = mpz_fdiv_ui(a_.get_mpz_t(), 0xFFFFFFFBu);
        h = h * 1000003u + mpz_fdiv_ui(b_.get_mpz_t(), 0xFFFFFFFBu);
        h = h * 1000003u + k_;
        return h;
    }

    std::string str() const {
        std::string s = "(" + a_.get_str();
        if (b_ != 0) s += (b_ > 0 ? "+" : "") + b_.get_str() + "r2";
        s += ")";
        if (k_ > 0) s += "/2^" + std::to_string(k_);
        return s;
    }

private:
    static int sgn(const mpz_class& v) { return mpz_sgn(v.get_mpz_t()); }

    void normalize() {
        if (a_ == 0 && b_ == 0) {
            k_ = 0;
            return;
        }
        while (k_ > 0 && mpz_even_p(a_.get_mpz_t()) && mpz_even_p(b_.get_mpz_t())) {
            a_ >>= 1;
            b_ >>= 1;
            --k_;
        }
    }

    mpz_class a_, b_;
    unsigned k_;
};

inline int compare(const Scalar& x, const Scalar& y) {
    auto c = x <=> y;
    return c < 0 ? -1 : (c > 0 ? 1 : 0);
}

}  // namespace tilekit

template <>
struct std::hash<tilekit::Scalar> {
    std::size_t operator()(const tilekit::Scalar& s) const noexcept { return s.hash(); }
};
