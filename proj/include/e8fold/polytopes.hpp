#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

#include "e8fold/quatoct.hpp"

namespace e8fold {

struct QuatSet {
    std::vector<Quaternion> elems;  // deduplicated, lexicographically sorted
    std::string label;

    std::size_t size() const { return elems.size(); }

    bool contains(const Quaternion& q) const {
        return std::binary_search(
            elems.begin(), elems.end(), q,
            [](const Quaternion& a, const Quaternion& b) { return lex_cmp(a, b) < 0; });
    }

    static QuatSet of(std::vector<Quaternion> v, std::string label) {
        QuatSet s;
        s.elems = dedup_sorted(std::move(v));
        s.label = std::move(label);
        return s;
    }
};

inline QuatSet set_union(const QuatSet& a, const QuatSet& b, std::string label) {
    std::vector<Quaternion> v = a.elems;
    v.insert(v.end(), b.elems.begin(), b.elems.end());
    return QuatSet::of(std::move(v), std::move(label));
}

inline bool sets_disjoint(const QuatSet& a, const QuatSet& b) {
    for (const Quaternion& q : a.elems)
        if (b.contains(q)) return false;
    return true;
}

// ---------------------------------------------------------------------------
// The 24-cell T and its dual-orientation copy T'.
// ---------------------------------------------------------------------------

// T = {+-1, +-e1, +-e2, +-e3} plus the sixteen half vectors (binary
// tetrahedral group 2T).
inline QuatSet make_T() {
    std::vector<Quaternion> v;
    for (int k = 0; k < 4; ++k) {
        Quaternion q;
        q.c[k] = TowerScalar(1);
        v.push_back(q);
        v.push_back(-q);
    }
    TowerScalar half(Rational(1, 2));
    for (int mask = 0; mask < 16; ++mask) {
        Quaternion q;
        for (int k = 0; k < 4; ++k) q.c[k] = (mask >> k & 1) ? -half : half;
        v.push_back(q);
    }
    return QuatSet::of(std::move(v), "T");
}

// T' = the 24 unit quaternions with exactly two coordinates +-1/sqrt2.
inline QuatSet make_Tp() {
    std::vector<Quaternion> v;
    TowerScalar inv_sqrt2 = TowerScalar::sqrt2() * TowerScalar(Rational(1, 2));
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            for (int si = 0; si < 2; ++si)
                for (int sj = 0; sj < 2; ++sj) {
                    Quaternion q;
                    q.c[i] = si ? -inv_sqrt2 : inv_sqrt2;
                    q.c[j] = sj ? -inv_sqrt2 : inv_sqrt2;
                    v.push_back(q);
                }
    return QuatSet::of(std::move(v), "Tp");
}

inline QuatSet make_F4() { return set_union(make_T(), make_Tp(), "F4"); }

// ---------------------------------------------------------------------------
// Seeds.
// ---------------------------------------------------------------------------

struct Seeds {
    Quaternion c;       // (1 + e1 - e2 - e3) / 2, a T vertex
    Quaternion cp;      // (e2 - e3) / sqrt2, a T' vertex
    Quaternion alpha;   // (1/phi + e1 + phi e2) / 2, snub seed for S
    Quaternion beta;    // (-phi + sqrt5 e1 - e2/phi) / sqrt8, as published
};

inline Seeds make_seeds() {
    Seeds s;
    TowerScalar half(Rational(1, 2));
    s.c = {half, half, -half, -half};
    TowerScalar inv_sqrt2 = TowerScalar::sqrt2() * half;
    s.cp = {{}, {}, inv_sqrt2, -inv_sqrt2};
    s.alpha = {half * TowerScalar::inv_phi(), half, half * TowerScalar::phi(), {}};
    TowerScalar inv_sqrt8 = TowerScalar::sqrt2() * TowerScalar(Rational(1, 4));
    s.beta = {-TowerScalar::phi() * inv_sqrt8, TowerScalar::sqrt5() * inv_sqrt8,
              -TowerScalar::inv_phi() * inv_sqrt8, {}};
    return s;
}

// The published beta does not satisfy the snub seed constraint p^5 = +-1 and
// lies outside every icosian coset compatible with T'; the canonical seed used
// for the alternate snub family is the constraint-satisfying sign variant of
// alpha below. Its fifth power is -1 and its powers sweep the same five
// 24-cell cosets the alpha powers do.
inline Quaternion canonical_beta() {
    TowerScalar half(Rational(1, 2));
    return {-half * TowerScalar::inv_phi(), half, -half * TowerScalar::phi(), {}};
}

// Unit norm and p^5 = +-1.
inline bool satisfies_seed_constraint(const Quaternion& p) {
    if (!p.is_unit()) return false;
    Quaternion p5 = p.pow(5);
    return p5 == Quaternion::one() || p5 == -Quaternion::one();
}

// The starred conjugate-power conditions shown alongside the isomorphism
// tables: conj(p) = +-p^4, conj(p)^4 = +-p, conj(p)^2 = p^3, conj(p)^3 = p^2.
inline bool satisfies_conjugate_power_constraint(const Quaternion& p) {
    Quaternion pb = p.conj();
    auto pm = [](const Quaternion& x, const Quaternion& y) { return x == y || x == -y; };
    return pm(pb, p.pow(4)) && pm(pb.pow(4), p) && pb.pow(2) == p.pow(3) &&
           pb.pow(3) == p.pow(2);
}

// ---------------------------------------------------------------------------
// Snub and icosian constructions.
// ---------------------------------------------------------------------------

// S = sum_{i=1..4} seed^i o base; by default the seed must satisfy the
// p^5 = +-1 constraint.
inline QuatSet make_S(const Quaternion& seed, const QuatSet& base,
                      bool enforce_seed_power = true) {
    if (!seed.is_unit()) throw std::invalid_argument("make_S: seed must be unit normed");
    if (enforce_seed_power && !satisfies_seed_constraint(seed))
        throw std::invalid_argument("make_S: seed^5 is not +-1");
    std::vector<Quaternion> v;
    Quaternion p = seed;
    for (int i = 1; i <= 4; ++i) {
        for (const Quaternion& t : base.elems) v.push_back(p * t);
        p = p * seed;
    }
    return QuatSet::of(std::move(v), "S(" + base.label + ")");
}

// I = prq[seed^{0..4}, 1, base] = base plus the four rotated copies.
inline QuatSet make_I(const Quaternion& seed, const QuatSet& base,
                      bool enforce_seed_power = true) {
    QuatSet snub = make_S(seed, base, enforce_seed_power);
    QuatSet out = set_union(base, snub, "I(" + base.label + ")");
    return out;
}

// Exact group test under quaternion multiplication.
inline bool is_multiplicative_group(const QuatSet& s) {
    if (!s.contains(Quaternion::one())) return false;
    for (const Quaternion& a : s.elems) {
        if (!a.is_unit()) return false;
        if (!s.contains(a.conj())) return false;  // inverse of a unit quaternion
    }
    for (const Quaternion& a : s.elems)
        for (const Quaternion& b : s.elems)
            if (!s.contains(a * b)) return false;
    return true;
}

// ---------------------------------------------------------------------------
// The 5-cell A' and A = (c' o A')*.
// ---------------------------------------------------------------------------

// Regular unit 5-cell containing 1: the remaining four vertices are
// (-1 + sqrt5 u)/4 over the even-sign tetrahedron u in {e1+e2+e3, ...}.
inline QuatSet make_Aprime() {
    std::vector<Quaternion> v;
    v.push_back(Quaternion::one());
    TowerScalar quarter(Rational(1, 4));
    TowerScalar s5_quarter = TowerScalar::sqrt5() * quarter;
    const int signs[4][3] = {{1, 1, 1}, {1, -1, -1}, {-1, 1, -1}, {-1, -1, 1}};
    for (auto& sg : signs) {
        Quaternion q;
        q.c[0] = -quarter;
        for (int k = 0; k < 3; ++k)
            q.c[k + 1] = sg[k] > 0 ? s5_quarter : -s5_quarter;
        v.push_back(q);
    }
    return QuatSet::of(std::move(v), "Ap");
}

struct AFromAprime {
    QuatSet aprime;
    QuatSet a;
};

inline AFromAprime make_A() {
    AFromAprime r;
    r.aprime = make_Aprime();
    Seeds s = make_seeds();
    std::vector<Quaternion> v;
    for (const Quaternion& q : r.aprime.elems) v.push_back((s.cp * q).conj());
    r.a = QuatSet::of(std::move(v), "A");
    return r;
}

// ---------------------------------------------------------------------------
// The 120-cells J and J'.
// ---------------------------------------------------------------------------

// J = prq[A', 1, I]: all products a o x.
inline QuatSet make_J_from_I(const QuatSet& aprime, const QuatSet& icosian,
                             const std::string& label) {
    std::vector<Quaternion> v;
    v.reserve(aprime.size() * icosian.size());
    for (const Quaternion& a : aprime.elems)
        for (const Quaternion& x : icosian.elems) v.push_back(a * x);
    return QuatSet::of(std::move(v), label);
}

// J = prq[A', seed^{0..4}, T]: all products a o (seed^i o t).
inline QuatSet make_J_from_T(const QuatSet& aprime, const Quaternion& seed, const QuatSet& base,
                             const std::string& label) {
    std::vector<Quaternion> v;
    Quaternion p = Quaternion::one();
    for (int i = 0; i <= 4; ++i) {
        for (const Quaternion& a : aprime.elems)
            for (const Quaternion& t : base.elems) v.push_back(a * (p * t));
        p = p * seed;
    }
    return QuatSet::of(std::move(v), label);
}

// ---------------------------------------------------------------------------
// Coordinate-permutation orbits.
// ---------------------------------------------------------------------------

enum class PermMode { rotate, odd_sign, even_sign };

inline PermMode perm_mode_from_string(const std::string& s) {
    if (s == "Rotate") return PermMode::rotate;
    if (s == "oSign") return PermMode::odd_sign;
    if (s == "eSign") return PermMode::even_sign;
    throw std::invalid_argument("perm_orbit: unsupported mode " + s);
}

// Orbit of the seed's coordinate 4-tuple under rotation-subgroup position
// permutations (the even permutations A4) combined with sign changes:
// "Rotate" allows all sign patterns, "oSign" odd patterns, "eSign" even ones.
inline QuatSet perm_orbit(const Quaternion& seed, PermMode mode) {
    static const std::vector<std::array<int, 4>> even_perms = [] {
        std::vector<std::array<int, 4>> out;
        std::array<int, 4> p = {0, 1, 2, 3};
        do {
            int inv = 0;
            for (int i = 0; i < 4; ++i)
                for (int j = i + 1; j < 4; ++j) inv += p[i] > p[j];
            if (inv % 2 == 0) out.push_back(p);
        } while (std::next_permutation(p.begin(), p.end()));
        return out;
    }();

    std::vector<Quaternion> v;
    for (const auto& p : even_perms) {
        for (int mask = 0; mask < 16; ++mask) {
            int minus = __builtin_popcount(mask);
            if (mode == PermMode::odd_sign && minus % 2 == 0) continue;
            if (mode == PermMode::even_sign && minus % 2 == 1) continue;
            Quaternion q;
            for (int k = 0; k < 4; ++k) {
                TowerScalar x = seed.c[p[k]];
                q.c[k] = (mask >> k & 1) ? -x : x;
            }
            v.push_back(q);
        }
    }
    return QuatSet::of(std::move(v), "perm_orbit");
}

inline QuatSet perm_orbit(const Quaternion& seed, const std::string& mode) {
    return perm_orbit(seed, perm_mode_from_string(mode));
}

// S' + T + T': the 144 root vertices dual to the snub 24-cell.
inline QuatSet make_dual_snub() {
    QuatSet sp = make_S(canonical_beta(), make_Tp());
    return set_union(set_union(sp, make_T(), "Sp+T"), make_Tp(), "dual-snub");
}

// Subset of a snub set passing the p^5 = +-1 unit-norm constraint.
inline QuatSet seed_constraint_filter(const QuatSet& s) {
    std::vector<Quaternion> v;
    for (const Quaternion& q : s.elems)
        if (satisfies_seed_constraint(q)) v.push_back(q);
    return QuatSet::of(std::move(v), s.label + "*");
}

// ---------------------------------------------------------------------------
// Canonical bundle of all named constructions.
// ---------------------------------------------------------------------------

struct Constructions {
    QuatSet T, Tp, F4;
    Seeds seeds;
    Quaternion beta;  // canonical constraint-satisfying seed for the primed family
    QuatSet S, Sp;
    QuatSet I, Ip;
    QuatSet Ap, A;
    QuatSet J, Jp;
    QuatSet dual_snub;
};

inline const Constructions& constructions() {
    static const Constructions c = [] {
        Constructions k;
        k.T = make_T();
        k.Tp = make_Tp();
        k.F4 = make_F4();
        k.seeds = make_seeds();
        k.beta = canonical_beta();
        k.S = make_S(k.seeds.alpha, k.T);
        k.Sp = make_S(k.beta, k.Tp);
        k.I = make_I(k.seeds.alpha, k.T);
        k.Ip = make_I(k.beta, k.Tp);
        auto a = make_A();
        k.Ap = a.aprime;
        k.A = a.a;
        k.J = make_J_from_I(k.Ap, k.I, "J");
        k.Jp = make_J_from_I(k.Ap, k.Ip, "Jp");
        k.dual_snub = set_union(set_union(k.Sp, k.T, "Sp+T"), k.Tp, "dual-snub");
        return k;
    }();
    return c;
}

}  // namespace e8fold
