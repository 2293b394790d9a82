#pragma once

#include <array>
#include <cstddef>
#include <stdexcept>

#include "e8fold/exactfield.hpp"

namespace e8fold {

template <std::size_t N>
struct Vec {
    std::array<TowerScalar, N> c{};

    TowerScalar& operator[](std::size_t i) { return c[i]; }
    const TowerScalar& operator[](std::size_t i) const { return c[i]; }

    friend Vec operator-(const Vec& v) {
        Vec r;
        for (std::size_t i = 0; i < N; ++i) r.c[i] = -v.c[i];
        return r;
    }
    friend Vec operator+(const Vec& a, const Vec& b) {
        Vec r;
        for (std::size_t i = 0; i < N; ++i) r.c[i] = a.c[i] + b.c[i];
        return r;
    }
    friend Vec operator-(const Vec& a, const Vec& b) {
        Vec r;
        for (std::size_t i = 0; i < N; ++i) r.c[i] = a.c[i] - b.c[i];
        return r;
    }
    friend Vec operator*(const TowerScalar& s, const Vec& v) {
        Vec r;
        for (std::size_t i = 0; i < N; ++i) r.c[i] = s * v.c[i];
        return r;
    }
    friend bool operator==(const Vec& a, const Vec& b) {
        for (std::size_t i = 0; i < N; ++i)
            if (a.c[i] != b.c[i]) return false;
        return true;
    }
    friend bool operator!=(const Vec& a, const Vec& b) { return !(a == b); }

    bool is_zero() const {
        for (std::size_t i = 0; i < N; ++i)
            if (!c[i].is_zero()) return false;
        return true;
    }

    uint64_t hash() const noexcept {
        uint64_t h = 1469598103934665603ull;
        for (std::size_t i = 0; i < N; ++i) h = c[i].hash(h);
        return h;
    }
};

template <std::size_t N>
inline TowerScalar dot(const Vec<N>& a, const Vec<N>& b) {
    TowerScalar s;
    for (std::size_t i = 0; i < N; ++i) s += a.c[i] * b.c[i];
    return s;
}

template <std::size_t N>
inline TowerScalar squared_norm(const Vec<N>& v) {
    return dot(v, v);
}

// Exact lexicographic comparison, used for canonical vertex ordering.
template <std::size_t N>
inline int lex_cmp(const Vec<N>& a, const Vec<N>& b) {
    for (std::size_t i = 0; i < N; ++i) {
        int s = TowerScalar::cmp(a.c[i], b.c[i]);
        if (s != 0) return s;
    }
    return 0;
}

template <std::size_t N>
struct Mat {
    std::array<std::array<TowerScalar, N>, N> m{};

    std::array<TowerScalar, N>& operator[](std::size_t i) { return m[i]; }
    const std::array<TowerScalar, N>& operator[](std::size_t i) const { return m[i]; }

    static Mat identity() {
        Mat r;
        for (std::size_t i = 0; i < N; ++i) r.m[i][i] = TowerScalar(1);
        return r;
    }

    Mat transpose() const {
        Mat r;
        for (std::size_t i = 0; i < N; ++i)
            for (std::size_t j = 0; j < N; ++j) r.m[j][i] = m[i][j];
        return r;
    }

    bool is_symmetric() const {
        for (std::size_t i = 0; i < N; ++i)
            for (std::size_t j = i + 1; j < N; ++j)
                if (m[i][j] != m[j][i]) return false;
        return true;
    }

    friend Mat operator+(const Mat& a, const Mat& b) {
        Mat r;
        for (std::size_t i = 0; i < N; ++i)
            for (std::size_t j = 0; j < N; ++j) r.m[i][j] = a.m[i][j] + b.m[i][j];
        return r;
    }
    friend Mat operator-(const Mat& a, const Mat& b) {
        Mat r;
        for (std::size_t i = 0; i < N; ++i)
            for (std::size_t j = 0; j < N; ++j) r.m[i][j] = a.m[i][j] - b.m[i][j];
        return r;
    }
    friend Mat operator*(const TowerScalar& s, const Mat& a) {
        Mat r;
        for (std::size_t i = 0; i < N; ++i)
            for (std::size_t j = 0; j < N; ++j) r.m[i][j] = s * a.m[i][j];
        return r;
    }
    friend bool operator==(const Mat& a, const Mat& b) {
        for (std::size_t i = 0; i < N; ++i)
            for (std::size_t j = 0; j < N; ++j)
                if (a.m[i][j] != b.m[i][j]) return false;
        return true;
    }
    friend bool operator!=(const Mat& a, const Mat& b) { return !(a == b); }
};

template <std::size_t N>
inline Mat<N> mat_mul(const Mat<N>& a, const Mat<N>& b) {
    Mat<N> r;
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t k = 0; k < N; ++k) {
            if (a.m[i][k].is_zero()) continue;
            for (std::size_t j = 0; j < N; ++j) {
                if (b.m[k][j].is_zero()) continue;
                r.m[i][j] += a.m[i][k] * b.m[k][j];
            }
        }
    return r;
}

template <std::size_t N>
inline Vec<N> mat_vec(const Mat<N>& a, const Vec<N>& v) {
    Vec<N> r;
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j) {
            if (a.m[i][j].is_zero() || v.c[j].is_zero()) continue;
            r.c[i] += a.m[i][j] * v.c[j];
        }
    return r;
}

template <std::size_t N>
inline TowerScalar trace(const Mat<N>& a) {
    TowerScalar t;
    for (std::size_t i = 0; i < N; ++i) t += a.m[i][i];
    return t;
}

// Exact determinant by Gaussian elimination over the field.
template <std::size_t N>
inline TowerScalar det(Mat<N> a) {
    TowerScalar result(1);
    for (std::size_t col = 0; col < N; ++col) {
        std::size_t pivot = col;
        while (pivot < N && a.m[pivot][col].is_zero()) ++pivot;
        if (pivot == N) return TowerScalar();
        if (pivot != col) {
            std::swap(a.m[pivot], a.m[col]);
            result = -result;
        }
        result *= a.m[col][col];
        TowerScalar inv = a.m[col][col].inverse();
        for (std::size_t r = col + 1; r < N; ++r) {
            if (a.m[r][col].is_zero()) continue;
            TowerScalar f = a.m[r][col] * inv;
            for (std::size_t j = col; j < N; ++j) a.m[r][j] -= f * a.m[col][j];
        }
    }
    return result;
}

template <std::size_t N>
inline Mat<N> mat_inverse(Mat<N> a) {
    Mat<N> inv = Mat<N>::identity();
    for (std::size_t col = 0; col < N; ++col) {
        std::size_t pivot = col;
        while (pivot < N && a.m[pivot][col].is_zero()) ++pivot;
        if (pivot == N) throw std::domain_error("mat_inverse: singular matrix");
        if (pivot != col) {
            std::swap(a.m[pivot], a.m[col]);
            std::swap(inv.m[pivot], inv.m[col]);
        }
        TowerScalar f = a.m[col][col].inverse();
        for (std::size_t j = 0; j < N; ++j) {
            a.m[col][j] *= f;
            inv.m[col][j] *= f;
        }
        for (std::size_t r = 0; r < N; ++r) {
            if (r == col || a.m[r][col].is_zero()) continue;
            TowerScalar g = a.m[r][col];
            for (std::size_t j = 0; j < N; ++j) {
                a.m[r][j] -= g * a.m[col][j];
                inv.m[r][j] -= g * inv.m[col][j];
            }
        }
    }
    return inv;
}

// Monic characteristic polynomial det(lambda I - M), coefficients indexed by
// power: coeff[k] multiplies lambda^k, coeff[N] == 1.
template <std::size_t N>
struct CharPoly {
    std::array<TowerScalar, N + 1> coeff{};
};

// Faddeev-LeVerrier recursion; divisions are by integers only.
template <std::size_t N>
inline CharPoly<N> charpoly(const Mat<N>& m) {
    CharPoly<N> p;
    p.coeff[N] = TowerScalar(1);
    Mat<N> a = m;
    p.coeff[N - 1] = -trace(a);
    for (std::size_t k = 2; k <= N; ++k) {
        Mat<N> shifted = a;
        for (std::size_t i = 0; i < N; ++i) shifted.m[i][i] += p.coeff[N - k + 1];
        a = mat_mul(m, shifted);
        p.coeff[N - k] = -(trace(a) * TowerScalar(Rational(1, static_cast<int64_t>(k))));
    }
    return p;
}

template <std::size_t N>
inline bool is_palindromic(const CharPoly<N>& p) {
    for (std::size_t k = 0; k <= N; ++k)
        if (p.coeff[k] != p.coeff[N - k]) return false;
    return true;
}

// p evaluated at the matrix itself (Cayley-Hamilton checks).
template <std::size_t N>
inline Mat<N> charpoly_eval(const CharPoly<N>& p, const Mat<N>& m) {
    Mat<N> acc;
    for (std::size_t k = N + 1; k-- > 0;) {
        acc = mat_mul(acc, m);
        for (std::size_t i = 0; i < N; ++i) acc.m[i][i] += p.coeff[k];
    }
    return acc;
}

using Vec4 = Vec<4>;
using Vec8 = Vec<8>;
using Mat4 = Mat<4>;
using Mat8 = Mat<8>;

}  // namespace e8fold
