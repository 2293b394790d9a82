#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "e8fold/linalg.hpp"

namespace e8fold {

// ---------------------------------------------------------------------------
// Quaternions over the tower field, basis (1, e1, e2, e3) with e1 e2 = e3.
// ---------------------------------------------------------------------------

struct Quaternion {
    std::array<TowerScalar, 4> c{};

    Quaternion() = default;
    Quaternion(TowerScalar w, TowerScalar x, TowerScalar y, TowerScalar z)
        : c{std::move(w), std::move(x), std::move(y), std::move(z)} {}

    static Quaternion one() { return {TowerScalar(1), {}, {}, {}}; }

    TowerScalar& operator[](std::size_t i) { return c[i]; }
    const TowerScalar& operator[](std::size_t i) const { return c[i]; }

    friend Quaternion operator-(const Quaternion& q) {
        return {-q.c[0], -q.c[1], -q.c[2], -q.c[3]};
    }
    friend Quaternion operator+(const Quaternion& a, const Quaternion& b) {
        return {a.c[0] + b.c[0], a.c[1] + b.c[1], a.c[2] + b.c[2], a.c[3] + b.c[3]};
    }
    friend Quaternion operator-(const Quaternion& a, const Quaternion& b) {
        return {a.c[0] - b.c[0], a.c[1] - b.c[1], a.c[2] - b.c[2], a.c[3] - b.c[3]};
    }
    friend Quaternion operator*(const TowerScalar& s, const Quaternion& q) {
        return {s * q.c[0], s * q.c[1], s * q.c[2], s * q.c[3]};
    }
    friend Quaternion operator*(const Quaternion& a, const Quaternion& b) {
        return {a.c[0] * b.c[0] - a.c[1] * b.c[1] - a.c[2] * b.c[2] - a.c[3] * b.c[3],
                a.c[0] * b.c[1] + a.c[1] * b.c[0] + a.c[2] * b.c[3] - a.c[3] * b.c[2],
                a.c[0] * b.c[2] - a.c[1] * b.c[3] + a.c[2] * b.c[0] + a.c[3] * b.c[1],
                a.c[0] * b.c[3] + a.c[1] * b.c[2] - a.c[2] * b.c[1] + a.c[3] * b.c[0]};
    }
    friend bool operator==(const Quaternion& a, const Quaternion& b) { return a.c == b.c; }
    friend bool operator!=(const Quaternion& a, const Quaternion& b) { return !(a == b); }

    Quaternion conj() const { return {c[0], -c[1], -c[2], -c[3]}; }
    TowerScalar norm2() const {
        return c[0] * c[0] + c[1] * c[1] + c[2] * c[2] + c[3] * c[3];
    }
    bool is_unit() const { return norm2() == TowerScalar(1); }

    Quaternion inverse() const {
        TowerScalar n = norm2();
        if (n.is_zero()) throw std::domain_error("Quaternion: inverse of zero");
        TowerScalar s = n.inverse();
        Quaternion cj = conj();
        return s * cj;
    }

    Quaternion pow(unsigned k) const {
        Quaternion r = one();
        for (unsigned i = 0; i < k; ++i) r = r * *this;
        return r;
    }

    uint64_t hash() const noexcept {
        uint64_t h = 1469598103934665603ull;
        for (const auto& x : c) h = x.hash(h);
        return h;
    }
};

inline int lex_cmp(const Quaternion& a, const Quaternion& b) {
    for (int i = 0; i < 4; ++i) {
        int s = TowerScalar::cmp(a.c[i], b.c[i]);
        if (s) return s;
    }
    return 0;
}

inline Vec4 to_vec4(const Quaternion& q) {
    Vec4 v;
    for (int i = 0; i < 4; ++i) v[i] = q.c[i];
    return v;
}
inline Quaternion from_vec4(const Vec4& v) { return {v[0], v[1], v[2], v[3]}; }

// ---------------------------------------------------------------------------
// Octonion structure-constant tables from seven oriented triads.
// ---------------------------------------------------------------------------

// Oriented triad (a, b, c): e_a e_b = e_c, e_b e_c = e_a, e_c e_a = e_b.
using Triad = std::array<int, 3>;

struct OctTable {
    std::array<Triad, 7> triads{};
    // e_i e_j = sgn[i][j] * e_{idx[i][j]}, indices 0..7 with e_0 = 1.
    int8_t idx[8][8]{};
    int8_t sgn[8][8]{};

    static OctTable from_triads(const std::array<Triad, 7>& triads) {
        OctTable t;
        t.triads = triads;
        bool pair_seen[8][8] = {};
        for (int k = 0; k < 8; ++k) {
            t.idx[0][k] = static_cast<int8_t>(k);
            t.sgn[0][k] = 1;
            t.idx[k][0] = static_cast<int8_t>(k);
            t.sgn[k][0] = 1;
        }
        for (int k = 1; k < 8; ++k) {
            t.idx[k][k] = 0;
            t.sgn[k][k] = -1;
        }
        auto set = [&](int a, int b, int c) {
            if (a < 1 || a > 7 || b < 1 || b > 7 || a == b)
                throw std::invalid_argument("OctTable: bad triad entry");
            if (pair_seen[a][b]) throw std::invalid_argument("OctTable: pair covered twice");
            pair_seen[a][b] = pair_seen[b][a] = true;
            t.idx[a][b] = static_cast<int8_t>(c);
            t.sgn[a][b] = 1;
            t.idx[b][a] = static_cast<int8_t>(c);
            t.sgn[b][a] = -1;
        };
        for (const Triad& tr : triads) {
            set(tr[0], tr[1], tr[2]);
            set(tr[1], tr[2], tr[0]);
            set(tr[2], tr[0], tr[1]);
        }
        for (int a = 1; a < 8; ++a)
            for (int b = a + 1; b < 8; ++b)
                if (!pair_seen[a][b])
                    throw std::invalid_argument("OctTable: triads do not cover all pairs");
        return t;
    }

    // Exact norm composition |x y| = |x| |y| on all sums of two distinct
    // imaginary units; this filter keeps exactly the valid octonion tables.
    bool composes() const {
        for (int a = 1; a < 8; ++a)
            for (int b = a + 1; b < 8; ++b)
                for (int c = 1; c < 8; ++c)
                    for (int d = c + 1; d < 8; ++d) {
                        int acc[8] = {0, 0, 0, 0, 0, 0, 0, 0};
                        acc[idx[a][c]] += sgn[a][c];
                        acc[idx[a][d]] += sgn[a][d];
                        acc[idx[b][c]] += sgn[b][c];
                        acc[idx[b][d]] += sgn[b][d];
                        int n = 0;
                        for (int k = 0; k < 8; ++k) n += acc[k] * acc[k];
                        if (n != 4) return false;
                    }
        return true;
    }

    // Cayley-Dickson grading: products of distinct e4..e7 units land back in
    // the quaternion part {e1, e2, e3}.
    bool quadrant_closed() const {
        for (int a = 4; a < 8; ++a)
            for (int b = 4; b < 8; ++b) {
                if (a == b) continue;
                if (idx[a][b] < 1 || idx[a][b] > 3) return false;
            }
        return true;
    }

    std::string triads_string() const {
        std::string s;
        for (const Triad& t : triads) {
            if (!s.empty()) s += ",";
            s += std::to_string(t[0]) + std::to_string(t[1]) + std::to_string(t[2]);
        }
        return s;
    }
};

// Standard Cayley-Dickson doubling of the quaternions: first triad (1,2,3),
// e4-e7 quadrant graded.
inline const OctTable& default_oct_table() {
    static const OctTable t = OctTable::from_triads(
        {{{1, 2, 3}, {1, 4, 5}, {2, 4, 6}, {3, 4, 7}, {1, 7, 6}, {2, 5, 7}, {3, 6, 5}}});
    return t;
}

// The alternative triad set whose multiplication table mirrors palindromically.
inline const OctTable& footnote_oct_table() {
    static const OctTable t = OctTable::from_triads(
        {{{1, 2, 3}, {1, 4, 5}, {1, 6, 7}, {2, 6, 4}, {2, 5, 7}, {3, 4, 7}, {3, 5, 6}}});
    return t;
}

inline OctTable select_table(const std::array<Triad, 7>& triads) {
    OctTable t = OctTable::from_triads(triads);
    if (!t.composes())
        throw std::invalid_argument("select_table: triads do not define a composition algebra");
    return t;
}

// All 480 valid octonion multiplication tables arise from the 30 Steiner
// triple systems on 7 points with 16 surviving orientations each.
inline std::vector<std::array<Triad, 7>> enumerate_sts7() {
    // Backtracking over lexicographically increasing triples.
    std::vector<std::array<Triad, 7>> out;
    std::array<Triad, 7> cur{};
    bool used[8][8] = {};
    auto rec = [&](auto&& self, int depth) -> void {
        if (depth == 7) {
            out.push_back(cur);
            return;
        }
        // Smallest uncovered pair anchors the next triad.
        int a = -1, b = -1;
        for (int i = 1; i < 8 && a < 0; ++i)
            for (int j = i + 1; j < 8 && a < 0; ++j)
                if (!used[i][j]) {
                    a = i;
                    b = j;
                }
        if (a < 0) return;
        for (int m = 1; m < 8; ++m) {
            if (m == a || m == b || used[a][m] || used[b][m]) continue;
            if (m < b) continue;  // keep triples sorted so each STS appears once
            used[a][b] = used[b][a] = used[a][m] = used[m][a] = used[b][m] = used[m][b] = true;
            cur[depth] = {a, b, m};
            self(self, depth + 1);
            used[a][b] = used[b][a] = used[a][m] = used[m][a] = used[b][m] = used[m][b] = false;
        }
    };
    rec(rec, 0);
    return out;
}

inline std::vector<OctTable> enumerate_octonion_tables() {
    std::vector<OctTable> out;
    for (const auto& sts : enumerate_sts7()) {
        for (int mask = 0; mask < 128; ++mask) {
            std::array<Triad, 7> oriented = sts;
            for (int k = 0; k < 7; ++k)
                if (mask >> k & 1) std::swap(oriented[k][1], oriented[k][2]);
            OctTable t = OctTable::from_triads(oriented);
            if (t.composes()) out.push_back(t);
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Palindromic-table predicate: reading the full multiplication table backwards
// (entry (i,j) against entry (9-j, 9-i), one-based) reproduces the same basis
// indices with a fixed sign pattern. The sign pattern is frozen from the
// footnote table, which is the construction's reference instance.
// ---------------------------------------------------------------------------

namespace detail {

inline int mirror_basis(int m) { return 7 - m; }

// Sign pattern chi with chi[i][j] = sgn(T_ref(9-j,9-i)) * sgn(T_ref(i,j)).
inline const std::array<std::array<int8_t, 8>, 8>& palindrome_sign_convention() {
    static const auto chi = [] {
        const OctTable& ref = footnote_oct_table();
        std::array<std::array<int8_t, 8>, 8> c{};
        for (int i = 0; i < 8; ++i)
            for (int j = 0; j < 8; ++j) {
                int mi = mirror_basis(j), mj = mirror_basis(i);
                if (ref.idx[mi][mj] != ref.idx[i][j])
                    throw std::logic_error("palindrome convention: reference indices mirror-broken");
                c[i][j] = static_cast<int8_t>(ref.sgn[mi][mj] * ref.sgn[i][j]);
            }
        return c;
    }();
    return chi;
}

}  // namespace detail

inline bool is_palindromic_table(const OctTable& t) {
    const auto& chi = detail::palindrome_sign_convention();
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) {
            int mi = detail::mirror_basis(j), mj = detail::mirror_basis(i);
            if (t.idx[mi][mj] != t.idx[i][j]) return false;
            if (t.sgn[mi][mj] != chi[i][j] * t.sgn[i][j]) return false;
        }
    return true;
}

// ---------------------------------------------------------------------------
// Octonions over the tower field.
// ---------------------------------------------------------------------------

struct Octonion {
    std::array<TowerScalar, 8> c{};

    Octonion() = default;
    static Octonion unit(int k) {
        Octonion o;
        o.c[k] = TowerScalar(1);
        return o;
    }
    static Octonion real(TowerScalar v) {
        Octonion o;
        o.c[0] = std::move(v);
        return o;
    }

    TowerScalar& operator[](std::size_t i) { return c[i]; }
    const TowerScalar& operator[](std::size_t i) const { return c[i]; }

    friend Octonion operator-(const Octonion& x) {
        Octonion r;
        for (int i = 0; i < 8; ++i) r.c[i] = -x.c[i];
        return r;
    }
    friend Octonion operator+(const Octonion& a, const Octonion& b) {
        Octonion r;
        for (int i = 0; i < 8; ++i) r.c[i] = a.c[i] + b.c[i];
        return r;
    }
    friend Octonion operator-(const Octonion& a, const Octonion& b) {
        Octonion r;
        for (int i = 0; i < 8; ++i) r.c[i] = a.c[i] - b.c[i];
        return r;
    }
    friend Octonion operator*(const TowerScalar& s, const Octonion& x) {
        Octonion r;
        for (int i = 0; i < 8; ++i) r.c[i] = s * x.c[i];
        return r;
    }
    friend bool operator==(const Octonion& a, const Octonion& b) { return a.c == b.c; }
    friend bool operator!=(const Octonion& a, const Octonion& b) { return !(a == b); }

    Octonion conj() const {
        Octonion r;
        r.c[0] = c[0];
        for (int i = 1; i < 8; ++i) r.c[i] = -c[i];
        return r;
    }
    TowerScalar norm2() const {
        TowerScalar n;
        for (int i = 0; i < 8; ++i) n += c[i] * c[i];
        return n;
    }
};

// The small-circle product with respect to a table.
inline Octonion oct_mul(const Octonion& x, const Octonion& y, const OctTable& t) {
    Octonion r;
    for (int i = 0; i < 8; ++i) {
        if (x.c[i].is_zero()) continue;
        for (int j = 0; j < 8; ++j) {
            if (y.c[j].is_zero()) continue;
            TowerScalar term = x.c[i] * y.c[j];
            if (t.sgn[i][j] < 0)
                r.c[t.idx[i][j]] -= term;
            else
                r.c[t.idx[i][j]] += term;
        }
    }
    return r;
}

// Quaternion embedded along the table's first triad.
inline Octonion embed_quaternion(const Quaternion& q, const OctTable& t) {
    Octonion o;
    o.c[0] = q.c[0];
    for (int k = 0; k < 3; ++k) o.c[t.triads[0][k]] = q.c[k + 1];
    return o;
}

// ---------------------------------------------------------------------------
// prq[p, r, q] = p o (r o q), or (p o r) o q with left = true; list arguments
// broadcast over all combinations and the result set is deduplicated.
// ---------------------------------------------------------------------------

inline Quaternion prq(const Quaternion& p, const Quaternion& r, const Quaternion& q,
                      bool left = false) {
    return left ? (p * r) * q : p * (r * q);
}

inline Octonion prq(const Octonion& p, const Octonion& r, const Octonion& q, const OctTable& t,
                    bool left = false) {
    return left ? oct_mul(oct_mul(p, r, t), q, t) : oct_mul(p, oct_mul(r, q, t), t);
}

inline std::vector<Quaternion> dedup_sorted(std::vector<Quaternion> v) {
    std::sort(v.begin(), v.end(),
              [](const Quaternion& a, const Quaternion& b) { return lex_cmp(a, b) < 0; });
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

inline std::vector<Quaternion> prq(const std::vector<Quaternion>& p,
                                   const std::vector<Quaternion>& r,
                                   const std::vector<Quaternion>& q, bool left = false) {
    std::vector<Quaternion> out;
    out.reserve(p.size() * r.size() * q.size());
    for (const auto& a : p)
        for (const auto& b : r)
            for (const auto& c : q) out.push_back(prq(a, b, c, left));
    return dedup_sorted(std::move(out));
}

// ---------------------------------------------------------------------------
// Operator set: conjugates, scalar products, commutator, anti-commutator,
// derivation, Kronecker product, exponential.
// ---------------------------------------------------------------------------

struct AlgebraOps {
    Octonion conj_x, conj_y;
    Octonion scalar_plus;    // (x ybar + y xbar) / 2, the symmetric real part
    Octonion scalar_minus;   // (x ybar - y xbar) / 2
    Octonion commutator;     // x y - y x
    Octonion anticommutator; // x y + y x
    Mat8 kron;               // outer product of coordinate vectors
};

inline AlgebraOps algebra_operators(const Octonion& x, const Octonion& y, const OctTable& t) {
    AlgebraOps ops;
    ops.conj_x = x.conj();
    ops.conj_y = y.conj();
    Octonion xy = oct_mul(x, y, t);
    Octonion yx = oct_mul(y, x, t);
    ops.commutator = xy - yx;
    ops.anticommutator = xy + yx;
    Octonion xyb = oct_mul(x, y.conj(), t);
    Octonion yxb = oct_mul(y, x.conj(), t);
    TowerScalar half(Rational(1, 2));
    ops.scalar_plus = half * (xyb + yxb);
    ops.scalar_minus = half * (xyb - yxb);
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) ops.kron[i][j] = x.c[i] * y.c[j];
    return ops;
}

// Derivation D_{x,y}(z) = [[x,y],z] - 3((xy)z - x(yz)).
inline Octonion oct_derivation(const Octonion& x, const Octonion& y, const Octonion& z,
                               const OctTable& t) {
    Octonion comm = oct_mul(x, y, t) - oct_mul(y, x, t);
    Octonion lhs = oct_mul(comm, z, t) - oct_mul(z, comm, t);
    Octonion assoc = oct_mul(oct_mul(x, y, t), z, t) - oct_mul(x, oct_mul(y, z, t), t);
    return lhs - TowerScalar(3) * assoc;
}

// Associator (xy)z - x(yz).
inline Octonion oct_associator(const Octonion& x, const Octonion& y, const Octonion& z,
                               const OctTable& t) {
    return oct_mul(oct_mul(x, y, t), z, t) - oct_mul(x, oct_mul(y, z, t), t);
}

// Numeric exponential: e^(a + v) = e^a (cos|v| + sin|v| v/|v|).
inline std::array<double, 8> oct_exp(const Octonion& x) {
    std::array<double, 8> out{};
    double a = x.c[0].to_double();
    double imag2 = 0;
    std::array<double, 8> xi{};
    for (int i = 1; i < 8; ++i) {
        xi[i] = x.c[i].to_double();
        imag2 += xi[i] * xi[i];
    }
    double r = std::sqrt(imag2);
    double ea = std::exp(a);
    if (r < 1e-300) {
        out[0] = ea;
        return out;
    }
    out[0] = ea * std::cos(r);
    double s = ea * std::sin(r) / r;
    for (int i = 1; i < 8; ++i) out[i] = s * xi[i];
    return out;
}

}  // namespace e8fold
