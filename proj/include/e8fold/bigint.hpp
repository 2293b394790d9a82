#pragma once

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <stdexcept>
#include <string>
#include <string_view>

namespace e8fold {

// Little-endian 32-bit limb store. Two limbs live inline, so every value
// below 2^64 needs no heap allocation.
class LimbBuf {
public:
    LimbBuf() noexcept : ptr_(sb_), size_(0), cap_(2) {}
    LimbBuf(const LimbBuf& o) : LimbBuf() { assign(o.ptr_, o.size_); }
    LimbBuf(LimbBuf&& o) noexcept : LimbBuf() { take(o); }
    LimbBuf& operator=(const LimbBuf& o) {
        if (this != &o) assign(o.ptr_, o.size_);
        return *this;
    }
    LimbBuf& operator=(LimbBuf&& o) noexcept {
        if (this != &o) {
            release();
            ptr_ = sb_;
            cap_ = 2;
            size_ = 0;
            take(o);
        }
        return *this;
    }
    ~LimbBuf() { release(); }

    uint32_t* data() noexcept { return ptr_; }
    const uint32_t* data() const noexcept { return ptr_; }
    uint32_t size() const noexcept { return size_; }
    bool empty() const noexcept { return size_ == 0; }
    uint32_t& operator[](uint32_t i) noexcept { return ptr_[i]; }
    uint32_t operator[](uint32_t i) const noexcept { return ptr_[i]; }

    void clear() noexcept { size_ = 0; }

    void resize(uint32_t n) {
        reserve(n);
        for (uint32_t i = size_; i < n; ++i) ptr_[i] = 0;
        size_ = n;
    }

    void push_back(uint32_t v) {
        if (size_ == cap_) reserve(cap_ * 2);
        ptr_[size_++] = v;
    }

    void assign(const uint32_t* src, uint32_t n) {
        reserve(n);
        std::memmove(ptr_, src, n * sizeof(uint32_t));
        size_ = n;
    }

    // Drop leading-zero limbs (most significant end).
    void trim() noexcept {
        while (size_ > 0 && ptr_[size_ - 1] == 0) --size_;
    }

private:
    bool on_heap() const noexcept { return ptr_ != sb_; }
    void release() noexcept {
        if (on_heap()) delete[] ptr_;
    }
    void take(LimbBuf& o) noexcept {
        if (o.on_heap()) {
            ptr_ = o.ptr_;
            cap_ = o.cap_;
            size_ = o.size_;
            o.ptr_ = o.sb_;
            o.cap_ = 2;
            o.size_ = 0;
        } else {
            std::memcpy(sb_, o.sb_, sizeof(sb_));
            size_ = o.size_;
            o.size_ = 0;
        }
    }
    void reserve(uint32_t n) {
        if (n <= cap_) return;
        uint32_t newcap = std::max(n, cap_ * 2);
        uint32_t* p = new uint32_t[newcap];
        std::memcpy(p, ptr_, size_ * sizeof(uint32_t));
        release();
        ptr_ = p;
        cap_ = newcap;
    }

    uint32_t sb_[2];
    uint32_t* ptr_;
    uint32_t size_;
    uint32_t cap_;
};

// Signed arbitrary-precision integer. Canonical form: no leading zero limbs
// and sign == 0 exactly when the limb buffer is empty.
class BigInt {
public:
    BigInt() noexcept : sign_(0) {}

    BigInt(int64_t v) : sign_(0) {
        if (v == 0) return;
        sign_ = v < 0 ? -1 : 1;
        uint64_t m = v < 0 ? ~static_cast<uint64_t>(v) + 1 : static_cast<uint64_t>(v);
        mag_.push_back(static_cast<uint32_t>(m));
        if (m >> 32) mag_.push_back(static_cast<uint32_t>(m >> 32));
    }

    static BigInt from_string(std::string_view s) {
        BigInt r;
        bool neg = false;
        size_t i = 0;
        if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
            neg = s[i] == '-';
            ++i;
        }
        if (i >= s.size()) throw std::invalid_argument("BigInt: empty numeral");
        for (; i < s.size(); ++i) {
            char c = s[i];
            if (c < '0' || c > '9') throw std::invalid_argument("BigInt: bad digit");
            mul_small_add(r.mag_, 10, static_cast<uint32_t>(c - '0'));
        }
        r.mag_.trim();
        r.sign_ = r.mag_.empty() ? 0 : (neg ? -1 : 1);
        return r;
    }

    int sign() const noexcept { return sign_; }
    bool is_zero() const noexcept { return sign_ == 0; }
    bool is_one() const noexcept { return sign_ == 1 && mag_.size() == 1 && mag_[0] == 1; }

    bool fits_uint64() const noexcept { return mag_.size() <= 2; }
    uint64_t abs_uint64() const noexcept {
        uint64_t v = 0;
        if (mag_.size() > 0) v = mag_[0];
        if (mag_.size() > 1) v |= static_cast<uint64_t>(mag_[1]) << 32;
        return v;
    }

    friend BigInt operator-(const BigInt& a) {
        BigInt r = a;
        r.sign_ = -r.sign_;
        return r;
    }

    friend BigInt operator+(const BigInt& a, const BigInt& b) {
        if (a.sign_ == 0) return b;
        if (b.sign_ == 0) return a;
        BigInt r;
        if (a.sign_ == b.sign_) {
            r.sign_ = a.sign_;
            uadd(r.mag_, a.mag_, b.mag_);
        } else {
            int c = ucmp(a.mag_, b.mag_);
            if (c == 0) return BigInt();
            if (c > 0) {
                r.sign_ = a.sign_;
                usub(r.mag_, a.mag_, b.mag_);
            } else {
                r.sign_ = b.sign_;
                usub(r.mag_, b.mag_, a.mag_);
            }
        }
        return r;
    }

    friend BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

    friend BigInt operator*(const BigInt& a, const BigInt& b) {
        if (a.sign_ == 0 || b.sign_ == 0) return BigInt();
        BigInt r;
        r.sign_ = a.sign_ * b.sign_;
        if (a.mag_.size() == 1 && b.mag_.size() == 1) {
            uint64_t p = static_cast<uint64_t>(a.mag_[0]) * b.mag_[0];
            r.mag_.push_back(static_cast<uint32_t>(p));
            if (p >> 32) r.mag_.push_back(static_cast<uint32_t>(p >> 32));
            return r;
        }
        umul(r.mag_, a.mag_, b.mag_);
        return r;
    }

    // Truncated quotient and remainder: a == q*b + r, |r| < |b|, sign(r) == sign(a).
    static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
        if (b.sign_ == 0) throw std::domain_error("BigInt: division by zero");
        int c = ucmp(a.mag_, b.mag_);
        if (c < 0) {
            q = BigInt();
            r = a;
            return;
        }
        BigInt qq, rr;
        udivmod(qq.mag_, rr.mag_, a.mag_, b.mag_);
        qq.mag_.trim();
        rr.mag_.trim();
        qq.sign_ = qq.mag_.empty() ? 0 : a.sign_ * b.sign_;
        rr.sign_ = rr.mag_.empty() ? 0 : a.sign_;
        q = std::move(qq);
        r = std::move(rr);
    }

    friend BigInt operator/(const BigInt& a, const BigInt& b) {
        BigInt q, r;
        divmod(a, b, q, r);
        return q;
    }
    friend BigInt operator%(const BigInt& a, const BigInt& b) {
        BigInt q, r;
        divmod(a, b, q, r);
        return r;
    }

    BigInt& operator+=(const BigInt& o) { return *this = *this + o; }
    BigInt& operator-=(const BigInt& o) { return *this = *this - o; }
    BigInt& operator*=(const BigInt& o) { return *this = *this * o; }

    friend bool operator==(const BigInt& a, const BigInt& b) noexcept {
        if (a.sign_ != b.sign_ || a.mag_.size() != b.mag_.size()) return false;
        return std::memcmp(a.mag_.data(), b.mag_.data(), a.mag_.size() * sizeof(uint32_t)) == 0;
    }
    friend bool operator!=(const BigInt& a, const BigInt& b) noexcept { return !(a == b); }

    // -1, 0, +1 comparison.
    static int cmp(const BigInt& a, const BigInt& b) noexcept {
        if (a.sign_ != b.sign_) return a.sign_ < b.sign_ ? -1 : 1;
        int c = ucmp(a.mag_, b.mag_);
        return a.sign_ >= 0 ? c : -c;
    }
    friend bool operator<(const BigInt& a, const BigInt& b) noexcept { return cmp(a, b) < 0; }
    friend bool operator>(const BigInt& a, const BigInt& b) noexcept { return cmp(a, b) > 0; }
    friend bool operator<=(const BigInt& a, const BigInt& b) noexcept { return cmp(a, b) <= 0; }
    friend bool operator>=(const BigInt& a, const BigInt& b) noexcept { return cmp(a, b) >= 0; }

    BigInt abs() const {
        BigInt r = *this;
        if (r.sign_ < 0) r.sign_ = 1;
        return r;
    }

    static BigInt gcd(BigInt a, BigInt b) {
        if (a.sign_ < 0) a.sign_ = 1;
        if (b.sign_ < 0) b.sign_ = 1;
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        while (!a.fits_uint64() || !b.fits_uint64()) {
            BigInt q, r;
            divmod(a, b, q, r);
            a = std::move(b);
            b = std::move(r);
            if (b.is_zero()) return a;
        }
        uint64_t x = a.abs_uint64(), y = b.abs_uint64();
        while (y != 0) {
            uint64_t t = x % y;
            x = y;
            y = t;
        }
        return from_uint64(x);
    }

    static BigInt lcm(const BigInt& a, const BigInt& b) {
        if (a.is_zero() || b.is_zero()) return BigInt();
        return (a * b).abs() / gcd(a, b);
    }

    std::string to_string() const {
        if (sign_ == 0) return "0";
        LimbBuf tmp;
        tmp.assign(mag_.data(), mag_.size());
        std::string out;
        while (!tmp.empty()) {
            uint32_t rem = divmod_small(tmp, 1000000000u);
            tmp.trim();
            char chunk[10];
            if (tmp.empty()) {
                int n = std::snprintf(chunk, sizeof chunk, "%u", rem);
                out.insert(0, chunk, n);
            } else {
                std::snprintf(chunk, sizeof chunk, "%09u", rem);
                out.insert(0, chunk, 9);
            }
        }
        if (sign_ < 0) out.insert(0, 1, '-');
        return out;
    }

    double to_double() const noexcept {
        if (sign_ == 0) return 0.0;
        double v = 0.0;
        uint32_t n = mag_.size();
        uint32_t lo = n > 3 ? n - 3 : 0;
        for (uint32_t i = n; i-- > lo;) v = v * 4294967296.0 + mag_[i];
        v = std::ldexp(v, 32 * static_cast<int>(lo));
        return sign_ < 0 ? -v : v;
    }

    // FNV-1a over the canonical representation.
    uint64_t hash(uint64_t h = 1469598103934665603ull) const noexcept {
        auto mix = [&h](uint64_t v) {
            for (int k = 0; k < 8; ++k) {
                h ^= (v >> (8 * k)) & 0xff;
                h *= 1099511628211ull;
            }
        };
        mix(static_cast<uint64_t>(static_cast<int64_t>(sign_)));
        for (uint32_t i = 0; i < mag_.size(); ++i) mix(mag_[i]);
        return h;
    }

private:
    static BigInt from_uint64(uint64_t m) {
        BigInt r;
        if (m == 0) return r;
        r.sign_ = 1;
        r.mag_.push_back(static_cast<uint32_t>(m));
        if (m >> 32) r.mag_.push_back(static_cast<uint32_t>(m >> 32));
        return r;
    }

    static int ucmp(const LimbBuf& a, const LimbBuf& b) noexcept {
        if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
        for (uint32_t i = a.size(); i-- > 0;) {
            if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
        }
        return 0;
    }

    static void uadd(LimbBuf& r, const LimbBuf& a, const LimbBuf& b) {
        const LimbBuf& hi = a.size() >= b.size() ? a : b;
        const LimbBuf& lo = a.size() >= b.size() ? b : a;
        r.resize(hi.size());
        uint64_t carry = 0;
        for (uint32_t i = 0; i < hi.size(); ++i) {
            uint64_t s = carry + hi[i] + (i < lo.size() ? lo[i] : 0);
            r[i] = static_cast<uint32_t>(s);
            carry = s >> 32;
        }
        if (carry) r.push_back(static_cast<uint32_t>(carry));
    }

    // Requires a >= b.
    static void usub(LimbBuf& r, const LimbBuf& a, const LimbBuf& b) {
        r.resize(a.size());
        int64_t borrow = 0;
        for (uint32_t i = 0; i < a.size(); ++i) {
            int64_t d = static_cast<int64_t>(a[i]) - (i < b.size() ? b[i] : 0) - borrow;
            borrow = d < 0;
            if (d < 0) d += 0x100000000ll;
            r[i] = static_cast<uint32_t>(d);
        }
        r.trim();
    }

    static void umul(LimbBuf& r, const LimbBuf& a, const LimbBuf& b) {
        r.resize(a.size() + b.size());
        for (uint32_t i = 0; i < r.size(); ++i) r[i] = 0;
        for (uint32_t i = 0; i < a.size(); ++i) {
            uint64_t carry = 0;
            uint64_t ai = a[i];
            for (uint32_t j = 0; j < b.size(); ++j) {
                uint64_t t = ai * b[j] + r[i + j] + carry;
                r[i + j] = static_cast<uint32_t>(t);
                carry = t >> 32;
            }
            r[i + b.size()] = static_cast<uint32_t>(carry);
        }
        r.trim();
    }

    // r = v % m, v /= m (in place), single-limb modulus.
    static uint32_t divmod_small(LimbBuf& v, uint32_t m) noexcept {
        uint64_t rem = 0;
        for (uint32_t i = v.size(); i-- > 0;) {
            uint64_t cur = (rem << 32) | v[i];
            v[i] = static_cast<uint32_t>(cur / m);
            rem = cur % m;
        }
        return static_cast<uint32_t>(rem);
    }

    static void mul_small_add(LimbBuf& v, uint32_t mul, uint32_t add) {
        uint64_t carry = add;
        for (uint32_t i = 0; i < v.size(); ++i) {
            uint64_t t = static_cast<uint64_t>(v[i]) * mul + carry;
            v[i] = static_cast<uint32_t>(t);
            carry = t >> 32;
        }
        while (carry) {
            v.push_back(static_cast<uint32_t>(carry));
            carry >>= 32;
        }
    }

    // Knuth algorithm D on 32-bit limbs; u and v are trimmed, u >= v, v nonzero.
    static void udivmod(LimbBuf& q, LimbBuf& r, const LimbBuf& u_in, const LimbBuf& v_in) {
        const uint32_t n = v_in.size();
        const uint32_t m = u_in.size() - n;
        if (n == 1) {
            uint32_t d = v_in[0];
            q.resize(u_in.size());
            uint64_t rem = 0;
            for (uint32_t i = u_in.size(); i-- > 0;) {
                uint64_t cur = (rem << 32) | u_in[i];
                q[i] = static_cast<uint32_t>(cur / d);
                rem = cur % d;
            }
            q.trim();
            r.clear();
            if (rem) r.push_back(static_cast<uint32_t>(rem));
            return;
        }

        const int s = std::countl_zero(v_in[n - 1]);
        LimbBuf v;
        v.resize(n);
        for (uint32_t i = n; i-- > 1;)
            v[i] = s ? (v_in[i] << s) | (v_in[i - 1] >> (32 - s)) : v_in[i];
        v[0] = v_in[0] << s;

        LimbBuf u;
        u.resize(u_in.size() + 1);
        u[u_in.size()] = s ? (u_in[u_in.size() - 1] >> (32 - s)) : 0;
        for (uint32_t i = u_in.size(); i-- > 1;)
            u[i] = s ? (u_in[i] << s) | (u_in[i - 1] >> (32 - s)) : u_in[i];
        u[0] = u_in[0] << s;

        q.resize(m + 1);
        const uint64_t b = 0x100000000ull;
        for (uint32_t j = m + 1; j-- > 0;) {
            uint64_t num = (static_cast<uint64_t>(u[j + n]) << 32) | u[j + n - 1];
            uint64_t qhat = num / v[n - 1];
            uint64_t rhat = num % v[n - 1];
            while (qhat >= b || qhat * v[n - 2] > ((rhat << 32) | u[j + n - 2])) {
                --qhat;
                rhat += v[n - 1];
                if (rhat >= b) break;
            }
            // Multiply and subtract.
            int64_t borrow = 0;
            uint64_t carry = 0;
            for (uint32_t i = 0; i < n; ++i) {
                uint64_t p = qhat * v[i] + carry;
                carry = p >> 32;
                int64_t t = static_cast<int64_t>(u[i + j]) - static_cast<int64_t>(p & 0xffffffffull) - borrow;
                borrow = t < 0;
                if (t < 0) t += 0x100000000ll;
                u[i + j] = static_cast<uint32_t>(t);
            }
            int64_t t = static_cast<int64_t>(u[j + n]) - static_cast<int64_t>(carry) - borrow;
            if (t < 0) {
                // qhat was one too large; add v back.
                --qhat;
                uint64_t c2 = 0;
                for (uint32_t i = 0; i < n; ++i) {
                    uint64_t s2 = static_cast<uint64_t>(u[i + j]) + v[i] + c2;
                    u[i + j] = static_cast<uint32_t>(s2);
                    c2 = s2 >> 32;
                }
                t += static_cast<int64_t>(c2);
            }
            u[j + n] = static_cast<uint32_t>(t);
            q[j] = static_cast<uint32_t>(qhat);
        }
        q.trim();
        r.resize(n);
        for (uint32_t i = n; i-- > 1;)
            r[i] = s ? (u[i] >> s) | (static_cast<uint64_t>(u[i + 1]) << (32 - s)) : u[i];
        r[0] = s ? (u[0] >> s) | (static_cast<uint64_t>(u[1]) << (32 - s)) : u[0];
        r.trim();
    }

    int sign_;
    LimbBuf mag_;
};

inline BigInt gcd(const BigInt& a, const BigInt& b) { return BigInt::gcd(a, b); }
inline BigInt lcm(const BigInt& a, const BigInt& b) { return BigInt::lcm(a, b); }

}  // namespace e8fold
