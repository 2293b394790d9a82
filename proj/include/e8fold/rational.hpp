#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "e8fold/bigint.hpp"

namespace e8fold {

// Reduced fraction over BigInt. Canonical form: denominator > 0, gcd(num, den) == 1,
// and zero is 0/1.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(int64_t v) : num_(v), den_(1) {}
    Rational(int64_t n, int64_t d) : num_(n), den_(d) { normalize(); }
    Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) { normalize(); }

    static Rational from_string(std::string_view s) {
        size_t slash = s.find('/');
        if (slash == std::string_view::npos) return Rational(BigInt::from_string(s), BigInt(1));
        return Rational(BigInt::from_string(s.substr(0, slash)),
                        BigInt::from_string(s.substr(slash + 1)));
    }

    const BigInt& num() const noexcept { return num_; }
    const BigInt& den() const noexcept { return den_; }

    bool is_zero() const noexcept { return num_.is_zero(); }
    bool is_integer() const noexcept { return den_.is_one(); }
    int sign() const noexcept { return num_.sign(); }

    friend Rational operator-(const Rational& a) { return Rational(-a.num_, a.den_, raw_tag{}); }

    friend Rational operator+(const Rational& a, const Rational& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        BigInt g = gcd(a.den_, b.den_);
        if (g.is_one())
            return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
        BigInt da = a.den_ / g, db = b.den_ / g;
        return Rational(a.num_ * db + b.num_ * da, a.den_ * db);
    }

    friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

    friend Rational operator*(const Rational& a, const Rational& b) {
        if (a.is_zero() || b.is_zero()) return Rational();
        BigInt g1 = gcd(a.num_, b.den_);
        BigInt g2 = gcd(b.num_, a.den_);
        return Rational((a.num_ / g1) * (b.num_ / g2), (a.den_ / g2) * (b.den_ / g1), raw_tag{});
    }

    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.is_zero()) throw std::domain_error("Rational: division by zero");
        if (a.is_zero()) return Rational();
        BigInt g1 = gcd(a.num_, b.num_);
        BigInt g2 = gcd(b.den_, a.den_);
        Rational r((a.num_ / g1) * (b.den_ / g2), (a.den_ / g2) * (b.num_ / g1), raw_tag{});
        if (r.den_.sign() < 0) {
            r.num_ = -r.num_;
            r.den_ = -r.den_;
        }
        return r;
    }

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    Rational inverse() const {
        if (is_zero()) throw std::domain_error("Rational: inverse of zero");
        Rational r(den_, num_, raw_tag{});
        if (r.den_.sign() < 0) {
            r.num_ = -r.num_;
            r.den_ = -r.den_;
        }
        return r;
    }

    friend bool operator==(const Rational& a, const Rational& b) noexcept {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) noexcept { return !(a == b); }

    static int cmp(const Rational& a, const Rational& b) {
        if (a.num_.sign() != b.num_.sign())
            return a.num_.sign() < b.num_.sign() ? -1 : 1;
        return BigInt::cmp(a.num_ * b.den_, b.num_ * a.den_);
    }
    friend bool operator<(const Rational& a, const Rational& b) { return cmp(a, b) < 0; }
    friend bool operator>(const Rational& a, const Rational& b) { return cmp(a, b) > 0; }

    double to_double() const noexcept { return num_.to_double() / den_.to_double(); }

    // Canonical encoding, always "num/den".
    std::string to_string() const { return num_.to_string() + "/" + den_.to_string(); }

    uint64_t hash(uint64_t h = 1469598103934665603ull) const noexcept {
        return den_.hash(num_.hash(h));
    }

private:
    struct raw_tag {};
    // Already-reduced fast path (used where a factor cancellation was done by hand).
    Rational(BigInt n, BigInt d, raw_tag) : num_(std::move(n)), den_(std::move(d)) {}

    void normalize() {
        if (den_.is_zero()) throw std::domain_error("Rational: zero denominator");
        if (num_.is_zero()) {
            den_ = BigInt(1);
            return;
        }
        if (den_.sign() < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        BigInt g = gcd(num_, den_);
        if (!g.is_one()) {
            num_ = num_ / g;
            den_ = den_ / g;
        }
    }

    BigInt num_;
    BigInt den_;
};

}  // namespace e8fold
