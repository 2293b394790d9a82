#pragma once

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "e8fold/rational.hpp"

namespace e8fold {

// Element of Q(sqrt2, sqrt5) over the basis (1, sqrt2, sqrt5, sqrt10).
struct Quartic {
    Rational a;  // 1
    Rational b;  // sqrt2
    Rational c;  // sqrt5
    Rational d;  // sqrt10

    Quartic() = default;
    Quartic(Rational a_, Rational b_, Rational c_, Rational d_)
        : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)) {}

    bool is_zero() const noexcept {
        return a.is_zero() && b.is_zero() && c.is_zero() && d.is_zero();
    }
    bool is_rational() const noexcept { return b.is_zero() && c.is_zero() && d.is_zero(); }

    friend Quartic operator-(const Quartic& x) { return {-x.a, -x.b, -x.c, -x.d}; }
    friend Quartic operator+(const Quartic& x, const Quartic& y) {
        return {x.a + y.a, x.b + y.b, x.c + y.c, x.d + y.d};
    }
    friend Quartic operator-(const Quartic& x, const Quartic& y) {
        return {x.a - y.a, x.b - y.b, x.c - y.c, x.d - y.d};
    }

    friend Quartic operator*(const Quartic& x, const Quartic& y) {
        // Fast paths cover the overwhelmingly common sparse cases.
        if (x.is_zero() || y.is_zero()) return Quartic();
        if (x.is_rational()) return {x.a * y.a, x.a * y.b, x.a * y.c, x.a * y.d};
        if (y.is_rational()) return {y.a * x.a, y.a * x.b, y.a * x.c, y.a * x.d};
        Quartic r;
        r.a = x.a * y.a + Rational(2) * (x.b * y.b) + Rational(5) * (x.c * y.c) +
              Rational(10) * (x.d * y.d);
        r.b = x.a * y.b + x.b * y.a + Rational(5) * (x.c * y.d + x.d * y.c);
        r.c = x.a * y.c + x.c * y.a + Rational(2) * (x.b * y.d + x.d * y.b);
        r.d = x.a * y.d + x.d * y.a + x.b * y.c + x.c * y.b;
        return r;
    }

    friend bool operator==(const Quartic& x, const Quartic& y) noexcept {
        return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
    }
    friend bool operator!=(const Quartic& x, const Quartic& y) noexcept { return !(x == y); }

    Quartic conj_sqrt2() const { return {a, -b, c, -d}; }  // sqrt2 -> -sqrt2
    Quartic conj_sqrt5() const { return {a, b, -c, -d}; }  // sqrt5 -> -sqrt5

    Quartic scaled(const Rational& s) const { return {a * s, b * s, c * s, d * s}; }

    Quartic inverse() const {
        if (is_zero()) throw std::domain_error("Quartic: inverse of zero");
        if (is_rational()) return {a.inverse(), Rational(), Rational(), Rational()};
        Quartic y = conj_sqrt2();
        Quartic z = *this * y;  // lies in Q(sqrt5)
        Quartic w = z.conj_sqrt5();
        Quartic nq = z * w;  // rational
        Rational n = nq.a;
        return (y * w).scaled(n.inverse());
    }

    // Exact sign via nested conjugate comparisons; terminates in at most two
    // squarings per radical.
    int sign() const {
        // x = P + Q*sqrt2 with P = a + c*sqrt5, Q = b + d*sqrt5.
        return sign_sqrt2(a, c, b, d);
    }

    double to_double() const noexcept {
        static const double s2 = std::sqrt(2.0), s5 = std::sqrt(5.0), s10 = std::sqrt(10.0);
        return a.to_double() + b.to_double() * s2 + c.to_double() * s5 + d.to_double() * s10;
    }

    uint64_t hash(uint64_t h = 1469598103934665603ull) const noexcept {
        return d.hash(c.hash(b.hash(a.hash(h))));
    }

private:
    static int sign_sqrt5(const Rational& p, const Rational& q) {
        int sp = p.sign(), sq = q.sign();
        if (sq == 0) return sp;
        if (sp == 0) return sq;
        if (sp == sq) return sp;
        return sp * (p * p - Rational(5) * q * q).sign();
    }
    static int sign_sqrt2(const Rational& pa, const Rational& pc, const Rational& qa,
                          const Rational& qc) {
        int sp = sign_sqrt5(pa, pc);
        int sq = sign_sqrt5(qa, qc);
        if (sq == 0) return sp;
        if (sp == 0) return sq;
        if (sp == sq) return sp;
        // Compare P^2 with 2*Q^2 inside Q(sqrt5).
        Rational da = pa * pa + Rational(5) * pc * pc - Rational(2) * (qa * qa + Rational(5) * qc * qc);
        Rational dc = Rational(2) * pa * pc - Rational(4) * qa * qc;
        return sp * sign_sqrt5(da, dc);
    }
};

// Element of the degree-8 tower Q(sqrt2, sqrt5)(sqrt(phi)), stored as
// p + q*sqrt(phi) with p, q in Q(sqrt2, sqrt5). The public coefficient order is
// (1, sqrt2, sqrt5, sqrt10, sqrtphi, sqrt2*sqrtphi, sqrt5*sqrtphi, sqrt10*sqrtphi).
struct TowerScalar {
    Quartic p;
    Quartic q;

    TowerScalar() = default;
    TowerScalar(int64_t v) : p(Rational(v), {}, {}, {}), q() {}
    TowerScalar(Rational v) : p(std::move(v), {}, {}, {}), q() {}
    TowerScalar(Quartic p_, Quartic q_) : p(std::move(p_)), q(std::move(q_)) {}

    static TowerScalar zero() { return TowerScalar(); }
    static TowerScalar one() { return TowerScalar(1); }
    static TowerScalar sqrt2() { return TowerScalar(Quartic({}, Rational(1), {}, {}), {}); }
    static TowerScalar sqrt5() { return TowerScalar(Quartic({}, {}, Rational(1), {}), {}); }
    static TowerScalar sqrt10() { return TowerScalar(Quartic({}, {}, {}, Rational(1)), {}); }
    static TowerScalar sqrt_phi() { return TowerScalar({}, Quartic(Rational(1), {}, {}, {})); }

    // phi = (1 + sqrt5)/2 as an element of the quartic subfield.
    static Quartic phi_quartic() {
        return Quartic(Rational(1, 2), {}, Rational(1, 2), {});
    }
    static TowerScalar phi() { return TowerScalar(phi_quartic(), {}); }
    // 1/phi = phi - 1.
    static TowerScalar inv_phi() {
        return TowerScalar(Quartic(Rational(-1, 2), {}, Rational(1, 2), {}), {});
    }

    // a + b*phi with rational a, b.
    static TowerScalar from_parts(const Rational& a, const Rational& b) {
        Rational half_b = b * Rational(1, 2);
        return TowerScalar(Quartic(a + half_b, {}, half_b, {}), {});
    }

    bool is_zero() const noexcept { return p.is_zero() && q.is_zero(); }
    bool is_rational() const noexcept { return q.is_zero() && p.is_rational(); }
    const Rational& rational_part() const noexcept { return p.a; }

    friend TowerScalar operator-(const TowerScalar& x) { return {-x.p, -x.q}; }
    friend TowerScalar operator+(const TowerScalar& x, const TowerScalar& y) {
        return {x.p + y.p, x.q + y.q};
    }
    friend TowerScalar operator-(const TowerScalar& x, const TowerScalar& y) {
        return {x.p - y.p, x.q - y.q};
    }
    friend TowerScalar operator*(const TowerScalar& x, const TowerScalar& y) {
        if (x.q.is_zero()) {
            if (x.p.is_zero()) return TowerScalar();
            return {x.p * y.p, x.p * y.q};
        }
        if (y.q.is_zero()) return {y.p * x.p, y.p * x.q};
        // (p1 + q1 s)(p2 + q2 s) = p1 p2 + q1 q2 phi + (p1 q2 + q1 p2) s,  s^2 = phi
        return {x.p * y.p + (x.q * y.q) * phi_quartic(), x.p * y.q + x.q * y.p};
    }

    TowerScalar inverse() const {
        if (is_zero()) throw std::domain_error("TowerScalar: inverse of zero");
        if (q.is_zero()) return {p.inverse(), Quartic()};
        // 1/(p + q s) = (p - q s) / (p^2 - q^2 phi)
        Quartic denom = p * p - (q * q) * phi_quartic();
        Quartic dinv = denom.inverse();
        return {p * dinv, -(q * dinv)};
    }

    friend TowerScalar operator/(const TowerScalar& x, const TowerScalar& y) {
        return x * y.inverse();
    }

    TowerScalar& operator+=(const TowerScalar& o) { return *this = *this + o; }
    TowerScalar& operator-=(const TowerScalar& o) { return *this = *this - o; }
    TowerScalar& operator*=(const TowerScalar& o) { return *this = *this * o; }

    friend bool operator==(const TowerScalar& x, const TowerScalar& y) noexcept {
        return x.p == y.p && x.q == y.q;
    }
    friend bool operator!=(const TowerScalar& x, const TowerScalar& y) noexcept {
        return !(x == y);
    }

    // Exact sign of the real number this element represents.
    int sign() const {
        int sp = p.sign();
        int sq = q.sign();
        if (sq == 0) return sp;
        if (sp == 0) return sq;
        if (sp == sq) return sp;
        Quartic diff = p * p - (q * q) * phi_quartic();
        return sp * diff.sign();
    }

    static int cmp(const TowerScalar& x, const TowerScalar& y) { return (x - y).sign(); }

    std::array<Rational, 8> coeffs() const {
        return {p.a, p.b, p.c, p.d, q.a, q.b, q.c, q.d};
    }

    static TowerScalar from_coeffs(const std::array<Rational, 8>& c) {
        return TowerScalar(Quartic(c[0], c[1], c[2], c[3]), Quartic(c[4], c[5], c[6], c[7]));
    }

    double to_double() const noexcept {
        static const double sphi = std::sqrt((1.0 + std::sqrt(5.0)) / 2.0);
        return p.to_double() + q.to_double() * sphi;
    }

    // Canonical text encoding: eight num/den fields in basis order.
    std::string encode() const {
        auto cs = coeffs();
        std::string out;
        for (int i = 0; i < 8; ++i) {
            if (i) out += ';';
            out += cs[i].to_string();
        }
        return out;
    }

    static TowerScalar decode(std::string_view s) {
        std::array<Rational, 8> cs;
        size_t pos = 0;
        for (int i = 0; i < 8; ++i) {
            size_t next = s.find(';', pos);
            std::string_view field =
                next == std::string_view::npos ? s.substr(pos) : s.substr(pos, next - pos);
            cs[i] = Rational::from_string(field);
            pos = next == std::string_view::npos ? s.size() : next + 1;
        }
        return from_coeffs(cs);
    }

    uint64_t hash(uint64_t h = 1469598103934665603ull) const noexcept {
        return q.hash(p.hash(h));
    }
};

inline TowerScalar ts_from_parts(const Rational& a, const Rational& b) {
    return TowerScalar::from_parts(a, b);
}
inline TowerScalar ts_mul(const TowerScalar& x, const TowerScalar& y) { return x * y; }
inline TowerScalar ts_inv(const TowerScalar& x) { return x.inverse(); }
inline int ts_sign(const TowerScalar& x) { return x.sign(); }

}  // namespace e8fold
